#include "cantor/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cantor/error.hpp"

namespace cantor {

Complex poly_eval(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void poly_eval_deriv(std::span<const Complex> c, Complex z, Complex& value, Complex& deriv) {
  value = 0.0;
  deriv = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
}

Poly poly_derivative(std::span<const Complex> c) {
  if (c.size() <= 1) return {Complex(0.0)};
  Poly d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
  return d;
}

Poly poly_mul(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {Complex(0.0)};
  Poly r(a.size() + b.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_add(std::span<const Complex> a, std::span<const Complex> b) {
  Poly r(std::max(a.size(), b.size()), Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_sub(std::span<const Complex> a, std::span<const Complex> b) {
  Poly r(std::max(a.size(), b.size()), Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Poly poly_scale(std::span<const Complex> a, Complex s) {
  Poly r(a.begin(), a.end());
  for (auto& x : r) x *= s;
  return r;
}

Poly poly_trim(std::span<const Complex> c, double rel_tol) {
  double norm = 0.0;
  for (const auto& x : c) norm = std::max(norm, std::abs(x));
  std::size_t n = c.size();
  while (n > 1 && std::abs(c[n - 1]) <= rel_tol * norm) --n;
  if (n == 0) return {Complex(0.0)};
  return Poly(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
}

int poly_degree(std::span<const Complex> c) {
  const Poly t = poly_trim(c);
  if (t.size() == 1 && t[0] == Complex(0.0)) return -1;
  return static_cast<int>(t.size()) - 1;
}

int RootSet::total_multiplicity() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::vector<Complex> RootSet::expanded() const {
  std::vector<Complex> out;
  for (const auto& r : roots)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  return out;
}

Poly poly_from_roots(std::span<const Complex> roots) {
  Poly p{Complex(1.0)};
  for (const auto& r : roots) {
    const Complex lin[2] = {-r, Complex(1.0)};
    p = poly_mul(p, lin);
  }
  return p;
}

namespace {

double scaled_residual(std::span<const Complex> c, Complex z) {
  double scale = 0.0;
  const double az = std::abs(z);
  double pw = 1.0;
  for (const auto& x : c) {
    scale += std::abs(x) * pw;
    pw *= az;
  }
  if (scale == 0.0) return 0.0;
  return std::abs(poly_eval(c, z)) / scale;
}

std::vector<Complex> aberth(std::span<const Complex> monic, int max_iter) {
  const int n = static_cast<int>(monic.size()) - 1;
  double radius = 0.0;
  for (int k = 0; k < n; ++k) {
    radius = std::max(radius, std::pow(std::abs(monic[static_cast<std::size_t>(k)]), 1.0 / (n - k)));
  }
  if (radius == 0.0) radius = 1.0;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = std::polar(radius * (1.0 + 0.01 * k), angle);
  }
  for (int it = 0; it < max_iter; ++it) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      Complex p, dp;
      poly_eval_deriv(monic, zk, p, dp);
      if (p == Complex(0.0)) continue;
      const Complex ratio = p / dp;
      Complex sum = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      zk -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zk)));
    }
    if (max_step < 1e-16) break;
  }
  return z;
}

// Newton on the (m-1)-th derivative polishes an m-fold cluster centre.
Complex polish(std::span<const Complex> c, Complex z, int multiplicity) {
  Poly d(c.begin(), c.end());
  for (int k = 1; k < multiplicity; ++k) d = poly_derivative(d);
  for (int it = 0; it < 8; ++it) {
    Complex p, dp;
    poly_eval_deriv(d, z, p, dp);
    if (dp == Complex(0.0)) break;
    const Complex step = p / dp;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    const Complex next = z - step;
    if (scaled_residual(c, next) > scaled_residual(c, z)) break;
    z = next;
    if (std::abs(step) < 1e-17 * (1.0 + std::abs(z))) break;
  }
  return z;
}

}  // namespace

RootSet poly_roots(std::span<const Complex> coeffs, const RootOptions& opts) {
  Poly c = poly_trim(coeffs);
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg > 16) throw Error(ErrorKind::Usage, "poly_roots supports degree <= 16");
  if (deg == 0 && c[0] == Complex(0.0)) throw Error(ErrorKind::Usage, "zero polynomial");

  RootSet out;
  // exact zero roots
  std::size_t zeros = 0;
  while (zeros < c.size() - 1 && c[zeros] == Complex(0.0)) ++zeros;
  if (zeros > 0) out.roots.push_back({Complex(0.0), static_cast<int>(zeros)});
  Poly reduced(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  const int n = static_cast<int>(reduced.size()) - 1;
  if (n > 0) {
    Poly monic = poly_scale(reduced, 1.0 / reduced.back());
    std::vector<Complex> z = aberth(monic, opts.max_iterations);

    // cluster by single linkage
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
      while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
      return i;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Complex zi = z[static_cast<std::size_t>(i)], zj = z[static_cast<std::size_t>(j)];
        const double scale = std::max(1.0, std::max(std::abs(zi), std::abs(zj)));
        if (std::abs(zi - zj) < opts.cluster_radius * scale) {
          parent[static_cast<std::size_t>(find(i))] = find(j);
        }
      }
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
      if (find(i) == i) order.push_back(i);
    for (int rep : order) {
      Complex sum = 0.0;
      int m = 0;
      for (int i = 0; i < n; ++i)
        if (find(i) == rep) {
          sum += z[static_cast<std::size_t>(i)];
          ++m;
        }
      Complex centre = polish(monic, sum / static_cast<double>(m), m);
      out.roots.push_back({centre, m});
    }
  }

  double residual = 0.0;
  for (const auto& r : out.roots) residual = std::max(residual, scaled_residual(c, r.value));
  out.residual = residual;
  if (!(residual < opts.residual_bound)) {
    throw Error(ErrorKind::NoConvergence,
                "root residual " + std::to_string(residual) + " above bound");
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace cantor
