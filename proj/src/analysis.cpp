#include "cantor/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "cantor/error.hpp"
#include "cantor/threads.hpp"

namespace cantor {

namespace {

constexpr double kIndifferentBand = 1e-6;
constexpr double kSuperattracting = 1e-9;
constexpr double kPenetration = 1e-6;
constexpr double kPostcriticalClearance = 1e-3;
constexpr std::size_t kStoredOrbit = 256;

SphereRootSet solve_homogeneous(const RationalMap& f, Complex w1, Complex w2) {
  const double scale = std::max(std::abs(w1), std::abs(w2));
  w1 /= scale;
  w2 /= scale;
  const Poly p = poly_trim(poly_sub(poly_scale(f.num(), w2), poly_scale(f.den(), w1)));
  SphereRootSet out;
  const int deg = poly_degree(p);
  if (deg < 0) throw Error(ErrorKind::InvalidMap, "degenerate preimage equation");
  if (deg > 0) {
    const RootSet rs = poly_roots(p);
    out.residual = rs.residual;
    for (const auto& r : rs.roots) out.roots.push_back({SpherePoint(r.value), r.multiplicity});
  }
  if (deg < f.degree()) out.roots.push_back({SpherePoint::infinity(), f.degree() - deg});
  return out;
}

}  // namespace

int SphereRootSet::total_multiplicity() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::vector<SpherePoint> SphereRootSet::expanded() const {
  std::vector<SpherePoint> out;
  for (const auto& r : roots)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.point);
  return out;
}

SphereRootSet preimages(const RationalMap& f, const SpherePoint& w) {
  Complex w1, w2;
  w.homogeneous(w1, w2);
  return solve_homogeneous(f, w1, w2);
}

std::vector<SphereRoot> CriticalData::weighted_values() const {
  std::vector<SphereRoot> out;
  for (std::size_t i = 0; i < critical_points.size(); ++i) {
    const int weight = critical_points[i].local_degree - 1;
    bool merged = false;
    for (auto& v : out) {
      if (chordal_dist(v.point, critical_values[i]) < 1e-9) {
        v.multiplicity += weight;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({critical_values[i], weight});
  }
  return out;
}

std::vector<SpherePoint> CriticalData::orbit_points() const {
  std::vector<SpherePoint> out;
  for (const auto& orbit : postcritical) out.insert(out.end(), orbit.begin(), orbit.end());
  return out;
}

CriticalData critical_points(const RationalMap& f) {
  const DerivativePair dp = derivative(f);
  const Poly w = poly_trim(dp.num);
  const int deg_w = poly_degree(w);
  const int d = f.degree();
  CriticalData out;
  if (deg_w > 0) {
    for (const auto& r : poly_roots(w).roots) {
      out.critical_points.push_back({SpherePoint(r.value), r.multiplicity + 1});
    }
  }
  const int at_infinity = 2 * d - 2 - std::max(deg_w, 0);
  if (at_infinity > 0) out.critical_points.push_back({SpherePoint::infinity(), at_infinity + 1});
  for (const auto& c : out.critical_points) out.critical_values.push_back(eval(f, c.point));
  return out;
}

void truncate_postcritical(const RationalMap& f, CriticalData& crit, const SpherePoint& p,
                           double trap_radius, int max_iter) {
  crit.postcritical.assign(crit.critical_points.size(), {});
  crit.escaping.assign(crit.critical_points.size(), false);
  crit.truncation_index = 0;
  for (std::size_t i = 0; i < crit.critical_points.size(); ++i) {
    SpherePoint z = crit.critical_values[i];
    int step = 0;
    for (; step < max_iter; ++step) {
      if (local_chart_dist(p, z) < trap_radius) {
        crit.escaping[i] = true;
        break;
      }
      if (crit.postcritical[i].size() < kStoredOrbit) crit.postcritical[i].push_back(z);
      z = eval(f, z);
    }
    if (crit.escaping[i]) crit.truncation_index = std::max(crit.truncation_index, step);
  }
}

std::string to_string(FixedClass c) {
  switch (c) {
    case FixedClass::Superattracting: return "superattracting";
    case FixedClass::Attracting: return "attracting";
    case FixedClass::Repelling: return "repelling";
    case FixedClass::Indifferent: return "indifferent";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

FixedClass classify_multiplier(Complex m) {
  const double a = std::abs(m);
  if (a < kSuperattracting) return FixedClass::Superattracting;
  if (a < 1.0 - kIndifferentBand) return FixedClass::Attracting;
  if (a > 1.0 + kIndifferentBand) return FixedClass::Repelling;
  return FixedClass::Indifferent;
}

int FixedPointReport::total_multiplicity() const {
  int n = 0;
  for (const auto& p : fixed_points) n += p.multiplicity;
  return n;
}

FixedPointReport fixed_points(const RationalMap& f) {
  const Poly z{0.0, 1.0};
  const Poly eq = poly_trim(poly_sub(f.num(), poly_mul(z, f.den())));
  FixedPointReport out;
  const int deg = poly_degree(eq);
  if (deg > 0) {
    for (const auto& r : poly_roots(eq).roots) {
      const SpherePoint p(r.value);
      const Complex m = r.multiplicity > 1 ? Complex(1.0) : multiplier(f, p);
      out.fixed_points.push_back({p, m, classify_multiplier(m), r.multiplicity});
    }
  }
  const int at_infinity = f.degree() + 1 - std::max(deg, 0);
  if (at_infinity > 0) {
    const SpherePoint inf = SpherePoint::infinity();
    const Complex m = at_infinity > 1 ? Complex(1.0) : multiplier(f, inf);
    out.fixed_points.push_back({inf, m, classify_multiplier(m), at_infinity});
  }
  return out;
}

bool SimpleDomain::contains(const SpherePoint& z) const { return local_chart_dist(center, z) <= radius; }

std::vector<Complex> SimpleDomain::boundary_finite(int samples) const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(samples));
  const bool at_inf = center.is_infinity();
  const double rho = at_inf ? 1.0 / radius : radius;
  const Complex c = at_inf ? Complex(0.0) : center.finite();
  for (int k = 0; k < samples; ++k) {
    out.push_back(c + std::polar(rho, 2.0 * std::numbers::pi * k / samples));
  }
  return out;
}

namespace {

std::vector<SpherePoint> chart_circle(const SpherePoint& p, double radius, int samples) {
  std::vector<SpherePoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const Complex u = std::polar(radius, 2.0 * std::numbers::pi * (k + 0.5) / samples);
    if (p.is_infinity()) {
      out.push_back(SpherePoint::from_homogeneous(1.0, u));
    } else {
      out.push_back(SpherePoint(p.finite() + u));
    }
  }
  return out;
}

}  // namespace

bool verify_domain(const RationalMap& f, const SpherePoint& p, double radius, int samples) {
  // points of the disc sent to the chart's antipode break the maximum principle
  const SpherePoint antipode = p.is_infinity() ? SpherePoint(Complex(0.0)) : SpherePoint::infinity();
  for (const auto& r : preimages(f, antipode).roots) {
    if (local_chart_dist(p, r.point) <= radius * (1.0 + 1e-9)) return false;
  }
  for (const auto& b : chart_circle(p, radius, samples)) {
    const double d = local_chart_dist(p, eval(f, b));
    if (!(radius - d > kPenetration)) return false;
  }
  return true;
}

SimpleDomain simple_domain(const RationalMap& f, const SpherePoint& p, const CriticalData& postcritical) {
  const FixedClass kind = classify_multiplier(multiplier(f, p));
  if (kind != FixedClass::Attracting && kind != FixedClass::Superattracting) {
    throw Error(ErrorKind::NoDomain, "centre is not an attracting fixed point");
  }
  double good = 1.0;
  while (!verify_domain(f, p, good)) {
    good *= 0.5;
    if (good < 1e-6) throw Error(ErrorKind::NoDomain, "no forward-invariant disc above radius 1e-6");
  }
  if (good < 1.0) {
    double bad = 2.0 * good;
    for (int it = 0; it < 30; ++it) {
      const double mid = 0.5 * (good + bad);
      (verify_domain(f, p, mid) ? good : bad) = mid;
    }
  }
  double radius = 0.5 * good;
  const auto orbit = postcritical.orbit_points();
  for (int attempt = 0; attempt < 40; ++attempt) {
    const auto boundary = chart_circle(p, radius, 256);
    bool clear = true;
    for (const auto& b : boundary) {
      for (const auto& q : orbit) {
        if (chordal_dist(b, q) <= kPostcriticalClearance) {
          clear = false;
          break;
        }
      }
      if (!clear) break;
    }
    if (clear && verify_domain(f, p, radius)) {
      return SimpleDomain{p, radius, boundary};
    }
    radius *= 0.93;
    if (radius < 1e-6) break;
  }
  throw Error(ErrorKind::NoDomain, "could not clear the postcritical set");
}

OrbitResult orbit_converges(const RationalMap& f, const SpherePoint& z, const SpherePoint& p,
                            double trap_radius, int max_iter) {
  const FixedClass kind = classify_multiplier(multiplier(f, p));
  if (kind != FixedClass::Attracting && kind != FixedClass::Superattracting) {
    throw Error(ErrorKind::Usage, "orbit target must be attracting");
  }
  double trap = trap_radius;
  while (!verify_domain(f, p, trap)) {
    trap *= 0.5;
    if (trap < 1e-6) throw Error(ErrorKind::NoDomain, "trap disc is not forward invariant");
  }
  constexpr int kHistory = 64;
  std::array<SpherePoint, kHistory> history{};
  SpherePoint w = z;
  for (int step = 0; step <= max_iter; ++step) {
    if (local_chart_dist(p, w) < trap) return {true, step};
    const int filled = std::min(step, kHistory);
    for (int j = 0; j < filled; ++j) {
      if (chordal_dist(w, history[static_cast<std::size_t>(j)]) < 1e-10) return {false, step};
    }
    history[static_cast<std::size_t>(step % kHistory)] = w;
    w = eval(f, w);
  }
  throw Error(ErrorKind::Undecided, "orbit neither trapped nor periodic within budget");
}

CondCReport cond_c_classify(const RationalMap& f, int max_iter, double trap_radius) {
  CondCReport out;
  out.fixed = fixed_points(f);
  for (const auto& fp : out.fixed.fixed_points) {
    if (fp.kind == FixedClass::Indifferent) {
      throw Error(ErrorKind::ParabolicSuspected, "a fixed point multiplier lies in the indifferent band");
    }
  }
  out.critical = critical_points(f);
  std::vector<SpherePoint> attracting;
  for (const auto& fp : out.fixed.fixed_points) {
    if (fp.kind == FixedClass::Attracting || fp.kind == FixedClass::Superattracting) {
      attracting.push_back(fp.point);
    }
  }
  out.attracting_count = static_cast<int>(attracting.size());
  if (attracting.empty()) {
    out.cond_c = Verdict::False;
    return out;
  }

  std::size_t best = 0;
  int best_score = -1;
  std::vector<std::vector<Verdict>> verdicts(attracting.size());
  std::vector<std::vector<int>> steps(attracting.size());
  for (std::size_t a = 0; a < attracting.size(); ++a) {
    int score = 0;
    for (const auto& c : out.critical.critical_points) {
      try {
        const OrbitResult r = orbit_converges(f, c.point, attracting[a], trap_radius, max_iter);
        verdicts[a].push_back(r.converged ? Verdict::True : Verdict::False);
        steps[a].push_back(r.steps);
        score += r.converged ? 1 : 0;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Undecided) throw;
        verdicts[a].push_back(Verdict::Undecided);
        steps[a].push_back(max_iter);
      }
    }
    if (score > best_score) {
      best_score = score;
      best = a;
    }
  }
  out.orbit_verdicts = verdicts[best];
  out.orbit_steps = steps[best];
  const bool all_true = std::all_of(out.orbit_verdicts.begin(), out.orbit_verdicts.end(),
                                    [](Verdict v) { return v == Verdict::True; });
  const bool any_false = std::any_of(out.orbit_verdicts.begin(), out.orbit_verdicts.end(),
                                     [](Verdict v) { return v == Verdict::False; });
  if (attracting.size() != 1 || any_false) {
    out.cond_c = Verdict::False;
  } else if (all_true) {
    out.cond_c = Verdict::True;
    out.attractor = attracting[best];
  } else {
    out.cond_c = Verdict::Undecided;
  }
  if (out.cond_c == Verdict::True) {
    truncate_postcritical(f, out.critical, attracting[best], trap_radius, max_iter);
    const SimpleDomain dom = simple_domain(f, attracting[best], out.critical);
    truncate_postcritical(f, out.critical, attracting[best], dom.radius, max_iter);
  }
  return out;
}

Complex JuliaGrid::pixel_center(int col, int row) const {
  const double re = viewport.re_min + (col + 0.5) * (viewport.re_max - viewport.re_min) / width;
  const double im = viewport.im_max - (row + 0.5) * (viewport.im_max - viewport.im_min) / height;
  return {re, im};
}

double JuliaGrid::capped_fraction() const {
  if (steps.empty()) return 0.0;
  const auto capped = std::count(steps.begin(), steps.end(), max_iter);
  return static_cast<double>(capped) / static_cast<double>(steps.size());
}

JuliaGrid julia_grid(const RationalMap& f, const Viewport& viewport, int width, int height, int max_iter) {
  if (width <= 0 || height <= 0 || max_iter <= 0) throw Error(ErrorKind::Usage, "bad grid dimensions");
  JuliaGrid grid;
  grid.viewport = viewport;
  grid.width = width;
  grid.height = height;
  grid.max_iter = max_iter;
  grid.steps.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), max_iter);
  grid.attractor.assign(grid.steps.size(), -1);

  std::vector<SimpleDomain> domains;
  for (const auto& fp : fixed_points(f).fixed_points) {
    if (fp.kind != FixedClass::Attracting && fp.kind != FixedClass::Superattracting) continue;
    CriticalData crit = critical_points(f);
    truncate_postcritical(f, crit, fp.point, 1e-2, 2000);
    domains.push_back(simple_domain(f, fp.point, crit));
    grid.attractors.push_back(fp.point);
  }

  const auto do_row = [&](int row) {
    for (int col = 0; col < width; ++col) {
      SpherePoint z(grid.pixel_center(col, row));
      const auto idx = static_cast<std::size_t>(row * width + col);
      for (int k = 0; k < max_iter; ++k) {
        bool done = false;
        for (std::size_t d = 0; d < domains.size(); ++d) {
          if (domains[d].contains(z)) {
            grid.steps[idx] = k;
            grid.attractor[idx] = static_cast<std::int8_t>(d);
            done = true;
            break;
          }
        }
        if (done) break;
        z = eval(f, z);
      }
    }
  };
  parallel_for(height, do_row);
  return grid;
}

std::string to_ppm(const JuliaGrid& grid) {
  std::string header = "P6\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) + "\n255\n";
  std::string out = header;
  out.reserve(header.size() + grid.steps.size() * 3);
  const double denom = std::log1p(static_cast<double>(grid.max_iter));
  for (const int s : grid.steps) {
    if (s >= grid.max_iter) {
      out.append(3, '\0');
      continue;
    }
    const double v = 1.0 - std::log1p(static_cast<double>(s)) / denom;  // 1 = fast escape
    out.push_back(static_cast<char>(static_cast<unsigned char>(40.0 + 200.0 * v)));
    out.push_back(static_cast<char>(static_cast<unsigned char>(30.0 + 210.0 * v)));
    out.push_back(static_cast<char>(static_cast<unsigned char>(80.0 + 175.0 * v)));
  }
  return out;
}

}  // namespace cantor
