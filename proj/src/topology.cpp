#include "cantor/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cantor/error.hpp"
#include "cantor/threads.hpp"

namespace cantor {

namespace {

constexpr double kFar = 1e8;
constexpr double kGrazing = 1e-6;
constexpr int kLassoSamples = 101;

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// basepoint -> ... -> puncture, stopping at radius rho and circling once counter-clockwise
Polyline lasso(std::vector<Complex> route, double rho) {
  const Complex p = route.back();
  const Complex prev = route[route.size() - 2];
  const Complex dir = (prev - p) / std::abs(prev - p);
  route.back() = p + rho * dir;
  const Polyline out = polygon_path(route, 0.01);
  const Polyline loop = circle(p, rho, std::arg(dir), kLassoSamples);
  return concat(concat(out, loop), reversed(out));
}

double chain_distance(const std::vector<Complex>& chain, Complex q) { return distance_to_chain(chain, q); }

}  // namespace

CutSystem build_cut_system(const std::vector<SpherePoint>& punctures, const SpherePoint& basepoint,
                           std::vector<std::string> labels) {
  const int n = static_cast<int>(punctures.size());
  if (n == 0) throw Error(ErrorKind::Usage, "no punctures");
  if (basepoint.is_infinity()) throw Error(ErrorKind::Usage, "basepoint must be finite");
  std::vector<Complex> p;
  for (const auto& q : punctures) {
    if (q.is_infinity()) throw Error(ErrorKind::Usage, "infinity is the absorbed puncture");
    p.push_back(q.finite());
  }
  const Complex base = basepoint.finite();
  for (int i = 0; i < n; ++i) {
    if (std::abs(p[static_cast<std::size_t>(i)] - base) <= 1e-3) throw Error(ErrorKind::Usage, "basepoint is a puncture");
    for (int j = i + 1; j < n; ++j)
      if (std::abs(p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)]) <= 1e-3)
        throw Error(ErrorKind::Crowded, "punctures closer than 1e-3");
  }

  // hub: the nearby point from which the punctures are seen at the widest angles
  Complex hub = base;
  double best = -1.0;
  for (double r : {0.0, 0.05, 0.1, 0.2, 0.4}) {
    for (int k = 0; k < (r == 0.0 ? 1 : 16); ++k) {
      const Complex h = base + std::polar(r, 2.0 * std::numbers::pi * k / 16.0);
      bool clear = true;
      std::vector<double> angles;
      for (const auto& q : p) {
        if (std::abs(q - h) <= 2.0 * r + 1e-2) clear = false;
        angles.push_back(std::arg(q - h));
      }
      if (!clear) continue;
      std::sort(angles.begin(), angles.end());
      double sep = n == 1 ? 2.0 * std::numbers::pi : angles.front() + 2.0 * std::numbers::pi - angles.back();
      for (std::size_t i = 1; i < angles.size(); ++i) sep = std::min(sep, angles[i] - angles[i - 1]);
      if (sep > best + 1e-12) {
        best = sep;
        hub = h;
      }
    }
  }
  if (best < 1e-3) throw Error(ErrorKind::Crowded, "no hub separates the cut directions by 1e-3");

  CutSystem out;
  out.punctures = punctures;
  out.basepoint = basepoint;
  out.hub = hub;
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i + 1));
  }
  out.labels = std::move(labels);
  for (const auto& q : p) out.cuts.push_back({q, q + kFar * (q - hub) / std::abs(q - hub)});
  for (int i = 0; i < n; ++i) {
    const Complex q = p[static_cast<std::size_t>(i)];
    double rho = 0.05;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      rho = std::min(rho, 0.25 * std::abs(q - p[static_cast<std::size_t>(j)]));
      rho = std::min(rho, 0.25 * chain_distance(out.cuts[static_cast<std::size_t>(j)], q));
    }
    std::vector<Complex> route{base};
    if (hub != base) route.push_back(hub);
    route.push_back(q);
    out.generator_loops.push_back(lasso(route, rho));
  }
  check_generator_loops(out);
  return out;
}

CutSystem quartic_cut_system(const RationalMap& f, double cutoff) {
  const auto a = f.quartic_parameter();
  if (!a || std::abs(a->real()) > 1e-12 * std::abs(*a) || a->imag() <= 0.0) {
    throw Error(ErrorKind::PresetOnly, "quartic cut layout needs a = ic with c > 0");
  }
  std::vector<Complex> orbit;
  SpherePoint z = eval(f, SpherePoint(Complex(0.0)));
  while (!z.is_infinity() && std::abs(z.finite()) <= cutoff && orbit.size() < 32) {
    const Complex c = z.finite();
    if (std::abs(c.real()) > 1e-9 * std::max(1.0, std::abs(c)) || c.imag() >= 0.0) {
      throw Error(ErrorKind::PresetOnly, "critical orbit left the negative imaginary axis");
    }
    orbit.push_back(c);
    z = eval(f, z);
  }
  if (orbit.empty() || orbit.front().imag() > -0.6) {
    throw Error(ErrorKind::Crowded, "f(0) too close to the real axis for the quartic layout");
  }

  CutSystem out;
  const Complex base(0.0, 1.0);
  out.basepoint = SpherePoint(base);
  out.hub = base;
  const Complex down(0.0, -kFar);
  out.punctures = {SpherePoint(Complex(-1.0)), SpherePoint(Complex(1.0))};
  out.labels = {"A", "B"};
  out.cuts.push_back({-1.0, Complex(-1.0) + down});
  out.cuts.push_back({1.0, Complex(0.5, -0.3), Complex(-0.8, -0.3), Complex(-0.8, 0.0) + down});
  out.generator_loops.push_back(lasso({base, -1.0}, 0.05));
  out.generator_loops.push_back(lasso({base, 1.0}, 0.05));

  const std::size_t k_count = orbit.size();
  for (std::size_t k = 0; k < k_count; ++k) {
    const Complex c = orbit[k];
    out.punctures.emplace_back(c);
    out.labels.push_back("C" + std::to_string(k));
    if (k + 1 == k_count) {
      out.cuts.push_back({c, c + down});
    } else {
      const double x = -0.6 * std::pow(0.75, static_cast<double>(k));
      out.cuts.push_back({c, Complex(x, c.imag()), Complex(x, c.imag()) + down});
    }
    double rho = 0.05;
    if (k > 0) rho = std::min(rho, 0.25 * std::abs(c - orbit[k - 1]));
    if (k + 1 < k_count) rho = std::min(rho, 0.25 * std::abs(c - orbit[k + 1]));
    out.generator_loops.push_back(lasso({base, Complex(1.6, 1.0), Complex(1.6, c.imag()), c}, rho));
  }
  check_generator_loops(out);
  return out;
}

FreeWord loop_to_word(const CutSystem& cuts, const Polyline& loop) {
  if (!loop.is_closed(1e-6)) throw Error(ErrorKind::Usage, "loop_to_word needs a closed loop");
  const std::vector<Complex> pts = loop.finite_points();
  for (const auto& q : pts) {
    for (const auto& chain : cuts.cuts) {
      if (distance_to_chain(chain, q) < kGrazing) throw Error(ErrorKind::GrazingCut, "loop sample within 1e-6 of a cut");
    }
  }
  std::vector<int> letters;
  std::vector<std::pair<double, int>> hits;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Complex p = pts[i - 1];
    const Complex r = pts[i] - p;
    hits.clear();
    for (std::size_t c = 0; c < cuts.cuts.size(); ++c) {
      const auto& chain = cuts.cuts[c];
      for (std::size_t v = 1; v < chain.size(); ++v) {
        const Complex a = chain[v - 1];
        const Complex s = chain[v] - a;
        const double denom = cross(r, s);
        if (denom == 0.0) continue;
        const double t = cross(a - p, s) / denom;
        const double u = cross(a - p, r) / denom;
        if (t < 0.0 || t >= 1.0 || u < 0.0 || u >= 1.0) continue;
        const int gen = static_cast<int>(c) + 1;
        hits.emplace_back(t, denom < 0.0 ? gen : -gen);
      }
    }
    std::sort(hits.begin(), hits.end());
    for (const auto& h : hits) letters.push_back(h.second);
  }
  return FreeWord(letters);
}

void check_generator_loops(const CutSystem& cuts) {
  for (int g = 0; g < cuts.size(); ++g) {
    const FreeWord w = loop_to_word(cuts, cuts.generator_loops[static_cast<std::size_t>(g)]);
    if (!(w == FreeWord::letter(g))) {
      throw Error(ErrorKind::Crowded, "lasso " + cuts.labels[static_cast<std::size_t>(g)] + " reads as " + w.to_string(cuts.labels));
    }
  }
}

int winding_number(const Polyline& curve, const SpherePoint& z) {
  if (z.is_infinity()) return 0;
  const Complex c = z.finite();
  const auto pts = curve.finite_points();
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Complex a = pts[i] - c;
    const Complex b = pts[(i + 1) % pts.size()] - c;
    if (std::abs(a) <= 1e-6) throw Error(ErrorKind::NonInteger, "point lies on the curve");
    total += std::arg(b / a);
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.01) throw Error(ErrorKind::NonInteger, "winding sum far from an integer");
  return static_cast<int>(rounded);
}

ClosedCurveSet preimage_curve_trace(const Lifter& lifter, const Polyline& curve) {
  if (!curve.is_closed(1e-6)) throw Error(ErrorKind::Usage, "preimage tracing needs a closed curve");
  const int d = lifter.map().degree();
  const auto seeds = preimages(lifter.map(), curve.front()).expanded();
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = i + 1; j < seeds.size(); ++j)
      if (chordal_dist(seeds[i], seeds[j]) <= 1e-6) throw Error(ErrorKind::NearCriticalPoint, "curve starts at a critical value");
  std::vector<Polyline> lifts(seeds.size());
  parallel_for(static_cast<int>(seeds.size()), [&](int i) {
    lifts[static_cast<std::size_t>(i)] = lifter.lift(curve, seeds[static_cast<std::size_t>(i)]);
  });
  std::vector<int> img;
  for (const auto& l : lifts) img.push_back(match_endpoint(seeds, l.back()));
  std::vector<int> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DegreeMismatch, "lift termini do not permute the fibre");
  }
  const Permutation perm(img);
  ClosedCurveSet out;
  int total = 0;
  for (const auto& orbit : perm.orbits()) {
    Polyline comp;
    for (int i : orbit) comp = concat(comp, lifts[static_cast<std::size_t>(i)]);
    if (!comp.is_closed(1e-6)) throw Error(ErrorKind::TopologyMismatch, "traced component failed to close");
    out.curves.push_back(std::move(comp));
    out.degrees.push_back(static_cast<int>(orbit.size()));
    out.parents.push_back(-1);
    total += static_cast<int>(orbit.size());
  }
  if (total != d) throw Error(ErrorKind::DegreeMismatch, "component degrees do not sum to the map degree");
  out.source = "preimage";
  return out;
}

ClosedCurveSet pull_back(const Lifter& lifter, const ClosedCurveSet& level) {
  ClosedCurveSet out;
  out.source = level.source + "/preimage";
  for (std::size_t c = 0; c < level.curves.size(); ++c) {
    ClosedCurveSet part = preimage_curve_trace(lifter, level.curves[c]);
    for (std::size_t k = 0; k < part.curves.size(); ++k) {
      out.curves.push_back(std::move(part.curves[k]));
      out.degrees.push_back(part.degrees[k]);
      out.parents.push_back(static_cast<int>(c));
    }
  }
  return out;
}

std::vector<int> RegionGraph::children(int curve) const {
  std::vector<int> out;
  for (int c = 0; c < curve_count; ++c)
    if (parent[static_cast<std::size_t>(c)] == curve) out.push_back(c);
  return out;
}

std::vector<Annulus> RegionGraph::annuli() const {
  std::vector<Annulus> out;
  for (int c = 0; c < curve_count; ++c) {
    if (depth[static_cast<std::size_t>(c)] % 2 != 0) continue;
    const auto kids = children(c);
    if (kids.size() == 1) out.push_back({c, kids.front()});
  }
  return out;
}

RegionGraph region_nesting(const std::vector<Polyline>& curves, const std::vector<SpherePoint>& marks) {
  RegionGraph g;
  g.curve_count = static_cast<int>(curves.size());
  g.marks = marks;
  const int nodes = g.curve_count + static_cast<int>(marks.size());
  const auto sample = [&](int node) {
    return node < g.curve_count ? curves[static_cast<std::size_t>(node)].front() : marks[static_cast<std::size_t>(node - g.curve_count)];
  };
  g.winding.assign(curves.size(), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  parallel_for(g.curve_count, [&](int c) {
    for (int n = 0; n < nodes; ++n) {
      if (n == c) continue;
      g.winding[static_cast<std::size_t>(c)][static_cast<std::size_t>(n)] = winding_number(curves[static_cast<std::size_t>(c)], sample(n));
    }
  });
  for (int a = 0; a < g.curve_count; ++a)
    for (int b = a + 1; b < g.curve_count; ++b)
      if (g.encloses(a, b) && g.encloses(b, a)) throw Error(ErrorKind::TopologyMismatch, "curves enclose each other");
  g.depth.assign(static_cast<std::size_t>(nodes), 0);
  for (int n = 0; n < nodes; ++n)
    for (int c = 0; c < g.curve_count; ++c)
      if (c != n && g.encloses(c, n)) ++g.depth[static_cast<std::size_t>(n)];
  g.parent.assign(static_cast<std::size_t>(nodes), -1);
  for (int n = 0; n < nodes; ++n) {
    std::vector<int> chain;
    for (int c = 0; c < g.curve_count; ++c)
      if (c != n && g.encloses(c, n)) chain.push_back(c);
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j)
        if (!g.encloses(chain[i], chain[j]) && !g.encloses(chain[j], chain[i]))
          throw Error(ErrorKind::TopologyMismatch, "enclosing curves are not nested");
    int best = -1;
    for (int c : chain)
      if (best < 0 || g.depth[static_cast<std::size_t>(c)] > g.depth[static_cast<std::size_t>(best)]) best = c;
    g.parent[static_cast<std::size_t>(n)] = best;
  }
  return g;
}

int RecursionTable::index_of(const std::string& name) const {
  const auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

RecursionTable wreath_recursion_extract(const Lifter& lifter, const Radial& radial, const CutSystem& cuts) {
  if (chordal_dist(radial.base, cuts.basepoint) > 1e-12) throw Error(ErrorKind::Usage, "radial and cut system use different basepoints");
  RecursionTable table;
  table.generators = cuts.labels;
  const int d = radial.degree();
  for (int g = 0; g < cuts.size(); ++g) {
    const MonodromyResult m = monodromy(lifter, cuts.generator_loops[static_cast<std::size_t>(g)], radial);
    std::vector<FreeWord> slots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      const auto& leg_in = radial.legs[static_cast<std::size_t>(i)];
      const auto& leg_out = radial.legs[static_cast<std::size_t>(m.perm(i))];
      const Polyline closed = concat(concat(leg_in, m.lifts[static_cast<std::size_t>(i)]), reversed(leg_out));
      slots[static_cast<std::size_t>(i)] = loop_to_word(cuts, closed);
    }
    table.perms.push_back(m.perm);
    table.slots.push_back(std::move(slots));
  }
  return table;
}

RecursionTable conjugate_recursion(const RecursionTable& table, const std::vector<FreeWord>& h) {
  if (static_cast<int>(h.size()) != table.degree()) throw Error(ErrorKind::Usage, "conjugator length differs from the degree");
  RecursionTable out = table;
  for (int g = 0; g < table.size(); ++g) {
    const auto& perm = table.perms[static_cast<std::size_t>(g)];
    for (int i = 0; i < table.degree(); ++i) {
      auto& slot = out.slots[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
      slot = h[static_cast<std::size_t>(i)] * table.slots[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)] *
             h[static_cast<std::size_t>(perm(i))].inverse();
    }
  }
  return out;
}

}  // namespace cantor
