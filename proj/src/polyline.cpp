#include "cantor/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cantor/error.hpp"

namespace cantor {

bool Polyline::is_closed(double tol) const { return !z.empty() && chordal_dist(z.front(), z.back()) < tol; }

double Polyline::max_gap() const {
  double g = 0.0;
  for (std::size_t i = 1; i < z.size(); ++i) g = std::max(g, chordal_dist(z[i - 1], z[i]));
  return g;
}

std::vector<Complex> Polyline::finite_points() const {
  std::vector<Complex> out;
  out.reserve(z.size());
  for (const auto& p : z) out.push_back(p.finite());
  return out;
}

Polyline Polyline::from_points(const std::vector<SpherePoint>& pts) {
  Polyline out;
  out.z = pts;
  out.t.assign(pts.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    total += chordal_dist(pts[i - 1], pts[i]);
    out.t[i] = total;
  }
  if (pts.size() > 1) {
    if (total > 0.0) {
      for (auto& v : out.t) v /= total;
    } else {
      for (std::size_t i = 0; i < pts.size(); ++i) out.t[i] = static_cast<double>(i) / static_cast<double>(pts.size() - 1);
    }
    out.t.back() = 1.0;
  }
  return out;
}

Polyline Polyline::from_finite(const std::vector<Complex>& pts) {
  std::vector<SpherePoint> sp(pts.begin(), pts.end());
  return from_points(sp);
}

Polyline segment(Complex a, Complex b, double spacing) {
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / spacing)));
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) pts.push_back(a + (b - a) * (static_cast<double>(k) / n));
  pts.back() = b;
  return Polyline::from_finite(pts);
}

Polyline polygon_path(const std::vector<Complex>& vertices, double spacing) {
  if (vertices.size() < 2) throw Error(ErrorKind::Usage, "a path needs two vertices");
  std::vector<Complex> pts{vertices.front()};
  for (std::size_t v = 1; v < vertices.size(); ++v) {
    const Complex a = vertices[v - 1], b = vertices[v];
    const double len = std::abs(b - a);
    if (len == 0.0) continue;
    // spacing grows with |z| so far-out legs stay cheap in the chordal metric
    double s = 0.0;
    while (true) {
      const Complex here = a + (b - a) * (s / len);
      s += spacing * std::max(1.0, std::abs(here));
      if (s >= len) break;
      pts.push_back(a + (b - a) * (s / len));
    }
    pts.push_back(b);
  }
  return Polyline::from_finite(pts);
}

Polyline circle(Complex center, double radius, double start_angle, int samples, bool ccw) {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  const double dir = ccw ? 1.0 : -1.0;
  for (int k = 0; k < samples; ++k) {
    pts.push_back(center + std::polar(radius, start_angle + dir * 2.0 * std::numbers::pi * k / samples));
  }
  pts.push_back(pts.front());
  return Polyline::from_finite(pts);
}

Polyline concat(const Polyline& a, const Polyline& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (chordal_dist(a.back(), b.front()) > 1e-6) throw Error(ErrorKind::Usage, "concatenated paths do not meet");
  std::vector<SpherePoint> pts = a.z;
  pts.insert(pts.end(), b.z.begin() + 1, b.z.end());
  return Polyline::from_points(pts);
}

Polyline reversed(const Polyline& a) {
  Polyline out;
  out.z.assign(a.z.rbegin(), a.z.rend());
  out.t.reserve(a.t.size());
  for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) out.t.push_back(1.0 - *it);
  return out;
}

Polyline refine(const Polyline& a, double spacing) {
  if (a.size() < 2) return a;
  std::vector<SpherePoint> pts{a.z.front()};
  for (std::size_t i = 1; i < a.size(); ++i) {
    const SpherePoint& p = a.z[i - 1];
    const SpherePoint& q = a.z[i];
    if (p.is_infinity() || q.is_infinity()) {
      pts.push_back(q);
      continue;
    }
    const Complex u = p.finite(), v = q.finite();
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(v - u) / spacing)));
    for (int k = 1; k < n; ++k) pts.emplace_back(u + (v - u) * (static_cast<double>(k) / n));
    pts.push_back(q);
  }
  return Polyline::from_points(pts);
}

double distance_to_chain(const std::vector<Complex>& chain, Complex q) {
  double best = std::numeric_limits<double>::infinity();
  if (chain.size() == 1) return std::abs(chain.front() - q);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Complex a = chain[i - 1], b = chain[i];
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double s = len2 > 0.0 ? ((q - a) * std::conj(ab)).real() / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, std::abs(a + s * ab - q));
  }
  return best;
}

}  // namespace cantor
