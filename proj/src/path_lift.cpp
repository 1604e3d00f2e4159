#include "cantor/path_lift.hpp"

#include <algorithm>
#include <cmath>

#include "cantor/error.hpp"
#include "cantor/threads.hpp"

namespace cantor {

namespace {

constexpr double kMaxPredict = 0.02;
constexpr double kCorrectorRatio = 0.25;
constexpr double kStepFloor = 1e-5;
constexpr double kNearCritical = 1e-6;
constexpr int kNewtonIterations = 5;

Poly padded(const Poly& p, int d) {
  Poly out(static_cast<std::size_t>(d) + 1, Complex(0.0));
  for (std::size_t k = 0; k < p.size() && k <= static_cast<std::size_t>(d); ++k) out[k] = p[k];
  return out;
}

Poly reversed_coeffs(const Poly& p) { return Poly(p.rbegin(), p.rend()); }

}  // namespace

Lifter::Lifter(RationalMap f) : f_(std::move(f)) {
  const int d = f_.degree();
  num_ = padded(f_.num(), d);
  den_ = padded(f_.den(), d);
  dnum_ = poly_derivative(num_);
  dden_ = poly_derivative(den_);
  rnum_ = reversed_coeffs(num_);
  rden_ = reversed_coeffs(den_);
  drnum_ = poly_derivative(rnum_);
  drden_ = poly_derivative(rden_);
  for (const auto& c : cantor::critical_points(f_).critical_points) critical_.push_back(c.point);
}

bool Lifter::newton_step(Chart chart, Complex start, const Target& target, double max_predict,
                         Complex& out) const {
  const Poly& n = chart == Chart::Finite ? num_ : rnum_;
  const Poly& d = chart == Chart::Finite ? den_ : rden_;
  const Poly& dn = chart == Chart::Finite ? dnum_ : drnum_;
  const Poly& dd = chart == Chart::Finite ? dden_ : drden_;
  Complex x = start;
  double predicted = 0.0;
  double corrected = 0.0;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const Complex r = target.t2 * poly_eval(n, x) - target.t1 * poly_eval(d, x);
    const Complex dr = target.t2 * poly_eval(dn, x) - target.t1 * poly_eval(dd, x);
    if (dr == Complex(0.0)) return false;
    const Complex dx = r / dr;
    if (!std::isfinite(dx.real()) || !std::isfinite(dx.imag())) return false;
    x -= dx;
    if (it == 0) {
      predicted = std::abs(dx);
      if (predicted > max_predict) return false;
    } else {
      corrected += std::abs(dx);
    }
    if (std::abs(dx) <= 1e-12 * (1.0 + std::abs(x))) {
      if (corrected > kCorrectorRatio * predicted + 1e-12) return false;
      out = x;
      return true;
    }
  }
  return false;
}

Complex Lifter::polish(Chart chart, Complex x, const Target& target) const {
  const Poly& n = chart == Chart::Finite ? num_ : rnum_;
  const Poly& d = chart == Chart::Finite ? den_ : rden_;
  const Poly& dn = chart == Chart::Finite ? dnum_ : drnum_;
  const Poly& dd = chart == Chart::Finite ? dden_ : drden_;
  for (int it = 0; it < 8; ++it) {
    const Complex r = target.t2 * poly_eval(n, x) - target.t1 * poly_eval(d, x);
    const Complex dr = target.t2 * poly_eval(dn, x) - target.t1 * poly_eval(dd, x);
    if (dr == Complex(0.0)) break;
    const Complex dx = r / dr;
    if (!std::isfinite(dx.real()) || !std::isfinite(dx.imag())) break;
    x -= dx;
    if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(x))) break;
  }
  return x;
}

Polyline Lifter::lift(const Polyline& gamma, const SpherePoint& z0) const {
  if (gamma.empty()) throw Error(ErrorKind::Usage, "empty path");
  if (chordal_dist(eval(f_, z0), gamma.front()) > 1e-6) {
    throw Error(ErrorKind::Usage, "lift start does not lie over the path start");
  }
  const auto target_at = [&](std::size_t j, double s) {
    const SpherePoint& a = gamma.z[j - 1];
    const SpherePoint& b = gamma.z[j];
    const Complex va = a.value();
    const Complex vb = b.coordinate_in(a.chart());
    const Complex v = va + s * (vb - va);
    Target tg = a.chart() == Chart::Finite ? Target{v, 1.0} : Target{1.0, v};
    const double scale = std::max(std::abs(tg.t1), std::abs(tg.t2));
    tg.t1 /= scale;
    tg.t2 /= scale;
    return tg;
  };
  const auto target_of = [](const SpherePoint& w) {
    Target tg;
    w.homogeneous(tg.t1, tg.t2);
    return tg;
  };

  Polyline out;
  SpherePoint z = z0;
  z = SpherePoint::from_homogeneous(
      z.chart() == Chart::Finite ? polish(Chart::Finite, z.value(), target_of(gamma.front())) : 1.0,
      z.chart() == Chart::Finite ? 1.0 : polish(Chart::Infinity, z.value(), target_of(gamma.front())));
  out.t.push_back(gamma.t.front());
  out.z.push_back(z);

  double h = 1.0;
  for (std::size_t j = 1; j < gamma.size(); ++j) {
    double s = 0.0;
    while (s < 1.0) {
      h = std::min(h, 1.0 - s);
      const double next = (1.0 - s - h < 1e-12) ? 1.0 : s + h;
      const Target tg = target_at(j, next);
      Complex x;
      if (!newton_step(z.chart(), z.value(), tg, kMaxPredict, x)) {
        h *= 0.5;
        if (h < kStepFloor) throw Error(ErrorKind::StepFloor, "continuation stalled");
        continue;
      }
      if (next == 1.0) x = polish(z.chart(), x, target_of(gamma.z[j]));
      z = z.chart() == Chart::Finite ? SpherePoint::from_homogeneous(x, 1.0) : SpherePoint::from_homogeneous(1.0, x);
      for (const auto& c : critical_) {
        if (chordal_dist(z, c) < kNearCritical) throw Error(ErrorKind::NearCriticalPoint, "lift reached a critical point");
      }
      s = next;
      out.t.push_back(gamma.t[j - 1] + s * (gamma.t[j] - gamma.t[j - 1]));
      out.z.push_back(z);
      h = std::min(2.0 * h, 1.0);
    }
  }
  return out;
}

Polyline lift_path(const RationalMap& f, const Polyline& gamma, const SpherePoint& z0) {
  return Lifter(f).lift(gamma, z0);
}

int match_endpoint(const std::vector<SpherePoint>& endpoints, const SpherePoint& z) {
  int best = -1;
  double d1 = std::numeric_limits<double>::infinity();
  double d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    const double d = chordal_dist(endpoints[i], z);
    if (d < d1) {
      d2 = d1;
      d1 = d;
      best = static_cast<int>(i);
    } else if (d < d2) {
      d2 = d;
    }
  }
  if (best < 0 || !(d2 >= 10.0 * d1)) throw Error(ErrorKind::AmbiguousMatch, "lift terminus is not separated from a second endpoint");
  return best;
}

MonodromyResult monodromy(const Lifter& lifter, const Polyline& loop, const Radial& radial) {
  if (!loop.is_closed()) throw Error(ErrorKind::Usage, "monodromy needs a closed loop");
  const int d = radial.degree();
  MonodromyResult out;
  out.lifts.resize(static_cast<std::size_t>(d));
  parallel_for(d, [&](int i) {
    out.lifts[static_cast<std::size_t>(i)] = lifter.lift(loop, radial.endpoints[static_cast<std::size_t>(i)]);
  });
  std::vector<int> img;
  for (const auto& l : out.lifts) img.push_back(match_endpoint(radial.endpoints, l.back()));
  std::vector<int> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::AmbiguousMatch, "lift termini do not form a permutation");
  }
  out.perm = Permutation(std::move(img));
  return out;
}

std::vector<SpherePoint> finite_postcritical(const RationalMap& f, double cutoff, int max_iter) {
  std::vector<SpherePoint> out;
  const CriticalData crit = critical_points(f);
  for (const auto& v : crit.critical_values) {
    SpherePoint z = v;
    for (int k = 0; k < max_iter; ++k) {
      if (z.is_infinity() || std::abs(z.finite()) > cutoff) break;
      bool seen = false;
      for (const auto& q : out) seen = seen || chordal_dist(q, z) < 1e-9;
      if (seen) break;
      out.push_back(z);
      z = eval(f, z);
    }
  }
  return out;
}

void check_radial_clearance(const Radial& r, const std::vector<SpherePoint>& postcritical) {
  for (const auto& leg : r.legs) {
    const auto chain = leg.finite_points();
    for (const auto& p : postcritical) {
      if (distance_to_chain(chain, p.finite()) <= 1e-3) {
        throw Error(ErrorKind::Crowded, "radial leg passes within 1e-3 of the postcritical set");
      }
    }
  }
}

Radial standard_radial(const RationalMap& f) {
  const auto a = f.quartic_parameter();
  if (!a || std::abs(a->real()) > 1e-12 * std::abs(*a) || a->imag() <= 0.0) {
    throw Error(ErrorKind::PresetOnly, "the standard radial exists for the quartic preset with a = ic, c > 0");
  }
  const SpherePoint base(Complex(0.0, 1.0));
  std::vector<double> xs;
  for (const auto& r : preimages(f, base).expanded()) {
    const Complex x = r.finite();
    if (r.is_infinity() || std::abs(x.imag()) > 1e-8) throw Error(ErrorKind::PresetOnly, "preimages of i are not real");
    xs.push_back(x.real());
  }
  std::sort(xs.begin(), xs.end());
  Radial out;
  out.base = base;
  for (double x : xs) {
    out.legs.push_back(segment(Complex(0.0, 1.0), Complex(x, 0.0)));
    out.endpoints.emplace_back(Complex(x, 0.0));
  }
  check_radial_clearance(out, finite_postcritical(f));
  return out;
}

Radial straight_radial(const RationalMap& f, const SpherePoint& base) {
  if (base.is_infinity()) throw Error(ErrorKind::Usage, "radial basepoint must be finite");
  std::vector<Complex> pts;
  for (const auto& r : preimages(f, base).expanded()) {
    if (r.is_infinity()) throw Error(ErrorKind::Usage, "basepoint has a preimage at infinity");
    pts.push_back(r.finite());
  }
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (chordal_dist(pts[i], pts[j]) <= 1e-6) throw Error(ErrorKind::Usage, "basepoint is a critical value");
  Radial out;
  out.base = base;
  for (const auto& p : pts) {
    out.legs.push_back(segment(base.finite(), p));
    out.endpoints.emplace_back(p);
  }
  check_radial_clearance(out, finite_postcritical(f));
  return out;
}

Polyline coding_path(const Lifter& lifter, const Radial& radial, const std::vector<int>& word) {
  if (word.empty()) return Polyline::from_points({radial.base});
  for (int i : word)
    if (i < 0 || i >= radial.degree()) throw Error(ErrorKind::Usage, "coding letter out of range");
  Polyline path = radial.legs[static_cast<std::size_t>(word.back())];
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    path = concat(radial.legs[i], lifter.lift(path, radial.endpoints[i]));
  }
  return path;
}

SpherePoint coding_point(const Lifter& lifter, const Radial& radial, const std::vector<int>& word) {
  return coding_path(lifter, radial, word).back();
}

CodingEstimate coding_map_approx(const Lifter& lifter, const Radial& radial, const std::vector<int>& prefix) {
  if (prefix.empty()) throw Error(ErrorKind::Usage, "empty coding prefix");
  CodingEstimate out;
  for (std::size_t k = 1; k <= prefix.size(); ++k) {
    out.prefix_points.push_back(coding_point(lifter, radial, std::vector<int>(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(k))));
  }
  const auto diameter = [&](std::size_t lo, std::size_t hi) {
    double d = 0.0;
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = i + 1; j < hi; ++j) d = std::max(d, chordal_dist(out.prefix_points[i], out.prefix_points[j]));
    return d;
  };
  const std::size_t n = out.prefix_points.size();
  out.point = out.prefix_points.back();
  out.diameter = diameter(n >= 5 ? n - 5 : 0, n);
  if (n >= 10) {
    const double earlier = diameter(n - 10, n - 5);
    if (earlier > 1e-13 && out.diameter >= earlier) {
      throw Error(ErrorKind::NotContracting, "prefix diameters did not shrink over the last ten levels");
    }
  }
  return out;
}

}  // namespace cantor
