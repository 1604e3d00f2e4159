#include "cantor/rational_map.hpp"

#include <algorithm>
#include <cmath>

#include "cantor/error.hpp"

namespace cantor {

namespace {

// sum c_k x^k y^(d-k), with missing high coefficients treated as zero.
// Evaluated in whichever of x/y or y/x is bounded by one.
Complex homogeneous_eval(const Poly& c, int d, Complex x, Complex y) {
  const auto coef = [&c](int k) {
    return k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : Complex(0.0);
  };
  if (std::abs(x) <= std::abs(y)) {
    const Complex t = x / y;
    Complex acc = 0.0;
    for (int k = d; k >= 0; --k) acc = acc * t + coef(k);
    return acc * std::pow(y, d);
  }
  const Complex s = y / x;
  Complex acc = 0.0;
  for (int k = 0; k <= d; ++k) acc = acc * s + coef(k);
  return acc * std::pow(x, d);
}

double min_root_separation(const Poly& a, const Poly& b) {
  if (poly_degree(a) < 1 || poly_degree(b) < 1) return std::numeric_limits<double>::infinity();
  const auto ra = poly_roots(a);
  const auto rb = poly_roots(b);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : ra.roots)
    for (const auto& y : rb.roots) best = std::min(best, std::abs(x.value - y.value));
  return best;
}

}  // namespace

RationalMap::RationalMap(Poly num, Poly den) : num_(poly_trim(num)), den_(poly_trim(den)) {
  const int m = poly_degree(num_);
  const int n = poly_degree(den_);
  if (m < 0 || n < 0) throw Error(ErrorKind::InvalidMap, "numerator and denominator must be nonzero");
  degree_ = std::max(m, n);
  if (degree_ < 2) throw Error(ErrorKind::InvalidMap, "degree must be at least 2");
  if (degree_ > 16) throw Error(ErrorKind::InvalidMap, "degree above 16 unsupported");
  if (min_root_separation(num_, den_) <= 1e-8) {
    throw Error(ErrorKind::InvalidMap, "numerator and denominator share a root");
  }
}

Complex RationalMap::hom_num(Complex x, Complex y) const { return homogeneous_eval(num_, degree_, x, y); }
Complex RationalMap::hom_den(Complex x, Complex y) const { return homogeneous_eval(den_, degree_, x, y); }

RationalMap RationalMap::quartic(Complex a) {
  if (a == Complex(0.0)) throw Error(ErrorKind::InvalidMap, "quartic parameter must be nonzero");
  Poly num{a + 1.0 / (4.0 * a), 0.0, -2.0 * a, 0.0, a};
  Poly den{-1.0, 0.0, 1.0};
  RationalMap f(std::move(num), std::move(den));
  f.quartic_a_ = a;
  return f;
}

RationalMap RationalMap::quadratic(Complex c) { return RationalMap(Poly{c, 0.0, 1.0}, Poly{1.0}); }

SpherePoint eval(const RationalMap& f, const SpherePoint& z) {
  Complex x, y;
  z.homogeneous(x, y);
  return SpherePoint::from_homogeneous(f.hom_num(x, y), f.hom_den(x, y));
}

SpherePoint eval_iterate(const RationalMap& f, const SpherePoint& z, int n) {
  SpherePoint w = z;
  for (int k = 0; k < n; ++k) w = eval(f, w);
  return w;
}

DerivativePair derivative(const RationalMap& f) {
  const Poly dn = poly_derivative(f.num());
  const Poly dd = poly_derivative(f.den());
  return {poly_sub(poly_mul(dn, f.den()), poly_mul(f.num(), dd)), poly_mul(f.den(), f.den())};
}

Complex derivative_at(const RationalMap& f, Complex z) {
  Complex n, dn, d, dd;
  poly_eval_deriv(f.num(), z, n, dn);
  poly_eval_deriv(f.den(), z, d, dd);
  return (dn * d - n * dd) / (d * d);
}

Complex multiplier(const RationalMap& f, const SpherePoint& p) {
  if (!p.is_infinity()) {
    if (p.chart() == Chart::Finite) return derivative_at(f, p.value());
    return derivative_at(f, p.finite());
  }
  const int d = f.degree();
  const auto coef = [d](const Poly& c, int k) {
    return k >= 0 && k < static_cast<int>(c.size()) && k <= d ? c[static_cast<std::size_t>(k)] : Complex(0.0);
  };
  // 1/f(1/w) = D(1,w)/N(1,w); fixed at infinity means q_d = 0.
  return coef(f.den(), d - 1) / coef(f.num(), d);
}

}  // namespace cantor
