#include "cantor/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/random/sobol.hpp>

#include "cantor/analysis.hpp"
#include "cantor/error.hpp"
#include "cantor/groups.hpp"
#include "cantor/reduction.hpp"

namespace cantor {

namespace bg = boost::geometry;
using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint, false, true>;
using BMulti = bg::model::multi_polygon<BPolygon>;
using BLine = bg::model::linestring<BPoint>;

void CertifyConfig::validate() const {
  for (double tol : {closure_tol, inside_margin}) {
    if (!(tol >= 1e-14 && tol <= 1e-2)) throw Error(ErrorKind::Usage, "tolerance overrides must lie in [1e-14, 1e-2]");
  }
  if (census_cap < 1 || census_cap > 6) throw Error(ErrorKind::Usage, "census cap must lie in [1, 6]");
  if (growth_samples < 1) throw Error(ErrorKind::Usage, "growth sample count must be positive");
  if (!(tube_margin > 0.0) || !(cutoff > 1.0)) throw Error(ErrorKind::Usage, "tube margin and cutoff must be positive");
}

Json CertifyConfig::to_json() const {
  Json j;
  j["closure_tol"] = closure_tol;
  j["inside_margin"] = inside_margin;
  j["tube_margin"] = tube_margin;
  j["cutoff"] = cutoff;
  j["census_cap"] = census_cap;
  j["growth_samples"] = growth_samples;
  j["seed"] = seed;
  return j;
}

CertifyConfig CertifyConfig::from_json(const Json& j) {
  CertifyConfig c;
  c.closure_tol = j.at("closure_tol").get<double>();
  c.inside_margin = j.at("inside_margin").get<double>();
  c.tube_margin = j.at("tube_margin").get<double>();
  c.cutoff = j.at("cutoff").get<double>();
  c.census_cap = j.at("census_cap").get<int>();
  c.growth_samples = j.at("growth_samples").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.validate();
  return c;
}

Json Certificate::to_json() const {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  j["verdict"] = verdict;
  j["parameters"] = parameters;
  j["evidence"] = evidence;
  return j;
}

Certificate Certificate::from_json(const Json& j) {
  if (j.value("schema", "") != kSchemaVersion) throw Error(ErrorKind::Usage, "unsupported certificate schema");
  return {j.at("kind").get<std::string>(), j.at("verdict").get<std::string>(), j.at("parameters"), j.at("evidence")};
}

GrowthReport growth_check(Complex a, int samples, std::uint64_t seed) {
  const RationalMap f = RationalMap::quartic(a);
  boost::random::sobol gen(2);
  gen.discard(2 * seed);
  const double span = static_cast<double>(gen.max()) - static_cast<double>(gen.min()) + 1.0;
  const auto uniform = [&] { return (static_cast<double>(gen()) - static_cast<double>(gen.min())) / span; };
  GrowthReport r;
  r.samples = samples;
  r.min_ratio = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double radius = 5.0 / 3.0 + (10.0 - 5.0 / 3.0) * (1.0 - uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    const Complex z = std::polar(radius, theta);
    const double ratio = std::abs(eval(f, SpherePoint(z)).finite()) / (std::abs(a) * radius);
    r.min_ratio = std::min(r.min_ratio, ratio);
    if (!(ratio > 1.0)) ++r.violations;
  }
  return r;
}

Json region_to_json(const std::vector<Polyline>& curves, const std::vector<SpherePoint>& marks) {
  const RegionGraph g = region_nesting(curves, marks);
  Json out;
  Json cj = Json::array();
  for (const auto& c : curves) cj.push_back(polyline_to_json(c));
  out["curves"] = cj;
  Json mj = Json::array();
  for (const auto& m : marks) mj.push_back(point_to_json(m));
  out["marks"] = mj;
  out["winding"] = g.winding;
  out["parent"] = g.parent;
  out["depth"] = g.depth;
  return out;
}

namespace {

const char* kQuarticOnly = "figure-1 topology is defined for the quartic preset";

Polyline disc_boundary(Complex center, double radius) {
  const int samples = std::max(256, static_cast<int>(std::ceil(2.0 * std::numbers::pi * radius / 0.01)));
  return circle(center, radius, 0.0, samples);
}

ClosedCurveSet single_curve(const Polyline& p) {
  ClosedCurveSet s;
  s.curves.push_back(p);
  s.degrees = {1};
  s.parents = {-1};
  s.source = "boundary";
  return s;
}

bool sorted_less(const SpherePoint& a, const SpherePoint& b) {
  const Complex x = a.finite(), y = b.finite();
  return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

void require_cond_c(const RationalMap& f) {
  if (cond_c_classify(f).cond_c != Verdict::True) throw Error(ErrorKind::Usage, "Cond C does not hold for this map");
}

// Even-odd test against a closed vertex chain.
bool inside_chain(const std::vector<Complex>& chain, Complex q) {
  bool in = false;
  for (std::size_t i = 0, j = chain.size() - 1; i < chain.size(); j = i++) {
    const Complex a = chain[i], b = chain[j];
    if ((a.imag() > q.imag()) != (b.imag() > q.imag())) {
      const double x = a.real() + (q.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
      if (q.real() < x) in = !in;
    }
  }
  return in;
}

Json degrees_json(const ClosedCurveSet& s) {
  Json j;
  j["degrees"] = s.degrees;
  j["parents"] = s.parents;
  return j;
}

}  // namespace

Certificate figure1_report(const MapSpec& spec, const CertifyConfig& cfg) {
  cfg.validate();
  if (!spec.is_quartic()) throw Error(ErrorKind::PresetOnly, kQuarticOnly);
  const Complex a = spec.parameter;
  const RationalMap f = spec.resolve();
  const Lifter lifter(f);
  const double radius = 1.5;
  const Polyline boundary = circle(0.0, radius, 0.0, 600);
  for (const auto& v : critical_points(f).critical_values) {
    if (!v.is_infinity() && distance_to_chain(boundary.finite_points(), v.finite()) < 1e-6) {
      throw Error(ErrorKind::NearCriticalPoint, "disc boundary meets a critical value");
    }
  }
  const ClosedCurveSet l1 = pull_back(lifter, single_curve(boundary));
  const ClosedCurveSet l2 = pull_back(lifter, l1);

  std::vector<SpherePoint> crit;
  for (const auto& c : critical_points(f).critical_points)
    if (!c.point.is_infinity() && std::abs(c.point.finite()) > 1e-9) crit.push_back(c.point);
  std::sort(crit.begin(), crit.end(), sorted_less);
  std::vector<SpherePoint> marks = {SpherePoint(Complex(-1.0)), SpherePoint(Complex(1.0))};
  marks.insert(marks.end(), crit.begin(), crit.end());
  const RegionGraph g1 = region_nesting(l1.curves, marks);
  const RegionGraph g2 = region_nesting(l2.curves, marks);
  const auto a1 = g1.annuli();
  const auto a2 = g2.annuli();
  const auto mark_node = [](const RegionGraph& g, int m) { return g.curve_count + m; };

  Json checks;
  checks["level1_curves"] = l1.curves.size() == 4;
  checks["level1_degree_one"] = std::all_of(l1.degrees.begin(), l1.degrees.end(), [](int d) { return d == 1; });
  checks["level1_annuli"] = a1.size() == 2;
  bool separated = a1.size() == 2;
  std::vector<int> pole_of_annulus;
  for (const auto& an : a1) {
    std::vector<int> inside;
    for (int m = 0; m < 2; ++m)
      if (g1.encloses(an.outer, mark_node(g1, m))) inside.push_back(m);
    if (inside.size() != 1) separated = false;
    pole_of_annulus.push_back(inside.empty() ? -1 : inside.front());
  }
  if (pole_of_annulus.size() == 2 && pole_of_annulus[0] == pole_of_annulus[1]) separated = false;
  checks["level1_separates_poles"] = separated;

  checks["level2_curves"] = l2.curves.size() == 8;
  checks["level2_degree_two"] = std::all_of(l2.degrees.begin(), l2.degrees.end(), [](int d) { return d == 2; });
  checks["level2_annuli"] = a2.size() == 4;
  bool one_each = a2.size() == 4 && crit.size() == 4;
  std::vector<int> hit(crit.size(), 0);
  for (const auto& an : a2) {
    int count = 0;
    for (std::size_t c = 0; c < crit.size(); ++c) {
      if (g2.encloses(an.outer, mark_node(g2, 2 + static_cast<int>(c)))) {
        ++count;
        ++hit[c];
      }
    }
    if (count != 1) one_each = false;
  }
  for (int h : hit)
    if (h != 1) one_each = false;
  checks["level2_one_critical_point_each"] = one_each;
  bool poles_outside = true;
  for (int c = 0; c < g2.curve_count; ++c)
    for (int m = 0; m < 2; ++m)
      if (g2.encloses(c, mark_node(g2, m))) poles_outside = false;
  checks["poles_in_unbounded_level2_complement"] = poles_outside;
  bool covering = a2.size() == 4;
  for (const auto& an : a2) {
    const int po = l2.parents[static_cast<std::size_t>(an.outer)];
    const int pi = l2.parents[static_cast<std::size_t>(an.inner)];
    const bool matches = std::any_of(a1.begin(), a1.end(), [&](const Annulus& b) {
      return (b.outer == po && b.inner == pi) || (b.outer == pi && b.inner == po);
    });
    if (!matches || l2.degrees[static_cast<std::size_t>(an.outer)] != 2 || l2.degrees[static_cast<std::size_t>(an.inner)] != 2) covering = false;
  }
  checks["level2_covers_level1_degree_two"] = covering;
  double closure = 0.0;
  for (const auto* s : {&l1, &l2})
    for (const auto& c : s->curves) closure = std::max(closure, chordal_dist(c.front(), c.back()));
  checks["closure_within_tolerance"] = closure <= cfg.closure_tol;

  Json growth;
  bool growth_ok = true;
  if (std::abs(a) > 2.0) {
    const GrowthReport gr = growth_check(a, cfg.growth_samples, cfg.seed);
    growth["samples"] = gr.samples;
    growth["violations"] = gr.violations;
    growth["min_ratio"] = gr.min_ratio;
    growth_ok = gr.violations == 0;
  } else {
    growth["status"] = "not-applicable";
  }
  checks["growth"] = growth_ok;

  bool all = true;
  for (const auto& [k, v] : checks.items()) all = all && v.get<bool>();

  Certificate cert;
  cert.kind = "figure1-topology";
  cert.verdict = all ? "pass" : "fail";
  cert.parameters["map"] = map_to_json(spec);
  cert.parameters["disc_radius"] = radius;
  cert.parameters["config"] = cfg.to_json();
  cert.evidence["checks"] = checks;
  cert.evidence["max_closure_gap"] = closure;
  cert.evidence["growth"] = growth;
  Json ann1 = Json::array(), ann2 = Json::array();
  for (const auto& an : a1) ann1.push_back(Json::array({an.outer, an.inner}));
  for (const auto& an : a2) ann2.push_back(Json::array({an.outer, an.inner}));
  Json lv1 = region_to_json(l1.curves, marks);
  lv1["components"] = degrees_json(l1);
  lv1["annuli"] = ann1;
  Json lv2 = region_to_json(l2.curves, marks);
  lv2["components"] = degrees_json(l2);
  lv2["annuli"] = ann2;
  cert.evidence["level1"] = lv1;
  cert.evidence["level2"] = lv2;
  return cert;
}

std::vector<DiscCandidate> round_disc_family() {
  std::vector<DiscCandidate> out;
  const std::vector<Complex> centers = {0.0, Complex(0.0, 0.5), Complex(0.0, -0.5), Complex(0.5, 0.0), Complex(-0.5, 0.0)};
  for (Complex c : centers) {
    for (double r = 0.5; r <= 3.0 + 1e-12; r += 0.25) {
      out.push_back({"round(center " + format_complex(c) + ", radius " + std::to_string(r).substr(0, 4) + ")", disc_boundary(c, r)});
    }
  }
  return out;
}

std::vector<SpherePoint> iterate_critical_values(const RationalMap& f, int n) {
  std::vector<SpherePoint> out;
  for (const auto& c : critical_points(f).critical_points) {
    SpherePoint v = c.point;
    for (int j = 1; j <= n; ++j) {
      v = eval(f, v);
      const bool seen = std::any_of(out.begin(), out.end(), [&](const SpherePoint& w) { return chordal_dist(v, w) < 1e-12; });
      if (!seen) out.push_back(v);
    }
  }
  return out;
}

namespace {

BPolygon to_polygon(const std::vector<Complex>& pts) {
  BPolygon poly;
  for (Complex z : pts) bg::append(poly.outer(), BPoint(z.real(), z.imag()));
  bg::correct(poly);
  return poly;
}

BMulti buffered(const auto& geometry, double m) {
  BMulti out;
  bg::buffer(geometry, out, bg::strategy::buffer::distance_symmetric<double>(m), bg::strategy::buffer::side_straight(),
             bg::strategy::buffer::join_round(72), bg::strategy::buffer::end_round(72), bg::strategy::buffer::point_circle(72));
  return out;
}

BMulti merge(const BMulti& a, const BMulti& b) {
  BMulti out;
  bg::union_(a, b, out);
  return out;
}

}  // namespace

std::vector<DiscCandidate> tube_disc_candidates(const RationalMap& f, int n, double base_radius, double margin) {
  const Lifter lifter(f);
  ClosedCurveSet level = single_curve(disc_boundary(0.0, base_radius));
  for (int k = 0; k < n; ++k) level = pull_back(lifter, level);
  const RegionGraph g = region_nesting(level.curves, {});
  std::vector<std::vector<Complex>> rings;
  for (int c = 0; c < g.curve_count; ++c)
    if (g.parent[static_cast<std::size_t>(c)] < 0) rings.push_back(level.curves[static_cast<std::size_t>(c)].finite_points());
  std::vector<BPolygon> blobs;
  for (const auto& r : rings) blobs.push_back(to_polygon(r));

  std::vector<BPoint> forbidden;
  for (const auto& v : iterate_critical_values(f, n))
    if (!v.is_infinity()) forbidden.emplace_back(v.finite().real(), v.finite().imag());
  double gap = std::numeric_limits<double>::infinity();
  double clearance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < blobs.size(); ++i) {
    for (std::size_t j = i + 1; j < blobs.size(); ++j) gap = std::min(gap, bg::distance(blobs[i], blobs[j]));
    for (const auto& p : forbidden) {
      if (bg::within(p, blobs[i])) throw Error(ErrorKind::Crowded, "a critical value lies inside a preimage component");
      clearance = std::min(clearance, bg::distance(p, blobs[i]));
    }
  }
  const double m = std::min({margin, 0.4 * gap, 0.4 * clearance});

  std::vector<BMulti> thick;
  for (const auto& b : blobs) thick.push_back(buffered(b, m));
  BMulti shape = thick.front();
  for (std::size_t i = 1; i < thick.size(); ++i) shape = merge(shape, thick[i]);

  // Prim's tree over the components; a tube is the segment between nearest samples.
  const std::size_t count = rings.size();
  std::vector<bool> joined(count, false);
  joined[0] = true;
  for (std::size_t added = 1; added < count; ++added) {
    double best = std::numeric_limits<double>::infinity();
    Complex bp, bq;
    std::size_t bj = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (!joined[i]) continue;
      for (std::size_t j = 0; j < count; ++j) {
        if (joined[j]) continue;
        for (Complex p : rings[i]) {
          for (Complex q : rings[j]) {
            const double d = std::abs(p - q);
            if (d >= best) continue;
            BLine seg{{p.real(), p.imag()}, {q.real(), q.imag()}};
            bool ok = true;
            for (const auto& fp : forbidden) ok = ok && bg::distance(fp, seg) > 2.0 * m;
            for (std::size_t k = 0; k < count && ok; ++k)
              if (k != i && k != j && bg::intersects(seg, thick[k])) ok = false;
            if (!ok) continue;
            best = d;
            bp = p;
            bq = q;
            bj = j;
          }
        }
      }
    }
    if (!std::isfinite(best)) throw Error(ErrorKind::Crowded, "no admissible tube joins the components");
    joined[bj] = true;
    shape = merge(shape, buffered(BLine{{bp.real(), bp.imag()}, {bq.real(), bq.imag()}}, m));
  }
  if (shape.size() != 1 || !shape.front().inners().empty()) {
    throw Error(ErrorKind::TopologyMismatch, "tube union is not a single hole-free polygon");
  }
  for (const auto& fp : forbidden)
    if (bg::within(fp, shape) || bg::distance(fp, shape) < 0.5 * m) throw Error(ErrorKind::Crowded, "tube union reaches a critical value");

  std::vector<Complex> ring;
  for (const auto& p : shape.front().outer()) ring.emplace_back(p.x(), p.y());
  ring.back() = ring.front();
  return {{"tube(level " + std::to_string(n) + ", margin " + std::to_string(m) + ")", Polyline::from_finite(ring)}};
}

Json check_disc(const RationalMap& f, int n, const DiscCandidate& candidate, const CertifyConfig& cfg, bool keep_evidence) {
  Json out;
  out["description"] = candidate.description;
  const auto fail = [&](const std::string& reason) {
    out["pass"] = false;
    out["reason"] = reason;
    return out;
  };
  const std::vector<Complex> chain = candidate.boundary.finite_points();
  std::vector<SpherePoint> marks;
  for (const auto& v : iterate_critical_values(f, n)) {
    if (v.is_infinity()) continue;
    if (distance_to_chain(chain, v.finite()) < 1e-6) return fail("boundary meets critical value " + format_complex(v.finite()));
    if (winding_number(candidate.boundary, v) != 0) return fail("critical value " + format_complex(v.finite()) + " inside");
    marks.push_back(v);
  }
  const SpherePoint inf_image = eval_iterate(f, SpherePoint::infinity(), n);
  if (!inf_image.is_infinity()) {
    if (distance_to_chain(chain, inf_image.finite()) < 1e-6 || winding_number(candidate.boundary, inf_image) != 0) {
      return fail("f^n(inf) lies in the closed disc");
    }
  }
  const Lifter lifter(f);
  ClosedCurveSet level = single_curve(candidate.boundary);
  try {
    for (int k = 0; k < n; ++k) level = pull_back(lifter, level);
  } catch (const Error& e) {
    return fail(std::string("preimage tracing: ") + e.what());
  }
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& c : level.curves) {
    for (Complex q : c.finite_points()) {
      if (!inside_chain(chain, q)) return fail("preimage sample " + format_complex(q) + " outside");
      margin = std::min(margin, distance_to_chain(chain, q));
    }
  }
  if (margin <= cfg.inside_margin) return fail("preimage within " + std::to_string(margin) + " of the boundary");
  std::vector<Polyline> curves{candidate.boundary};
  curves.insert(curves.end(), level.curves.begin(), level.curves.end());
  Json region;
  try {
    region = region_to_json(curves, marks);
  } catch (const Error& e) {
    return fail(std::string("nesting: ") + e.what());
  }
  for (std::size_t c = 1; c < curves.size(); ++c)
    if (region["winding"][c][0].get<int>() != 0) return fail("a preimage component encloses the boundary");
  out["pass"] = true;
  out["min_margin"] = margin;
  out["preimage_components"] = degrees_json(level);
  if (keep_evidence) out["region"] = region;
  return out;
}

Certificate s_cantor_witness(const MapSpec& spec, int n, const std::string& family, const CertifyConfig& cfg,
                             const RoundDisc& disc) {
  cfg.validate();
  if (n < 1 || n > 4) throw Error(ErrorKind::Usage, "iterate count must lie in [1, 4]");
  if (family != "round" && family != "tube" && family != "all" && family != "disc") {
    throw Error(ErrorKind::Usage, "family must be round, tube, all or disc");
  }
  if (family == "disc" && !(disc.radius > 0.0)) throw Error(ErrorKind::Usage, "disc family needs a positive radius");
  const RationalMap f = spec.resolve();
  require_cond_c(f);
  Certificate cert;
  cert.kind = "s-cantor-witness";
  cert.parameters["map"] = map_to_json(spec);
  cert.parameters["n"] = n;
  cert.parameters["family"] = family;
  if (family == "disc") cert.parameters["disc"] = Json{{"center", complex_to_json(disc.center)}, {"radius", disc.radius}};
  cert.parameters["config"] = cfg.to_json();

  Json tried = Json::array();
  std::vector<DiscCandidate> candidates;
  if (family == "disc") {
    candidates.push_back({"round(center " + format_complex(disc.center) + ", radius " + std::to_string(disc.radius) + ")",
                          disc_boundary(disc.center, disc.radius)});
  }
  if (family == "round" || family == "all") candidates = round_disc_family();
  if (family == "tube" || family == "all") {
    try {
      for (auto& c : tube_disc_candidates(f, n, 1.5, cfg.tube_margin)) candidates.push_back(std::move(c));
    } catch (const Error& e) {
      Json t;
      t["description"] = "tube(level " + std::to_string(n) + ")";
      t["pass"] = false;
      t["reason"] = std::string("construction: ") + e.what();
      tried.push_back(t);
    }
  }
  cert.verdict = "all-failed";
  for (const auto& c : candidates) {
    Json r = check_disc(f, n, c, cfg, true);
    if (r["pass"].get<bool>()) {
      cert.verdict = "pass";
      cert.evidence["witness"] = r;
      tried.push_back(Json{{"description", c.description}, {"pass", true}});
      break;
    }
    tried.push_back(r);
  }
  cert.evidence["candidates"] = tried;
  if (cert.verdict == "pass") {
    const Certificate census = basin_census(spec, cfg);
    cert.evidence["basin_census"] = Json{{"verdict", census.verdict}, {"count", census.evidence["count"]}, {"required", census.evidence["required"]}};
  }
  return cert;
}

Certificate basin_census(const MapSpec& spec, const CertifyConfig& cfg) {
  cfg.validate();
  const RationalMap f = spec.resolve();
  const CondCReport cond = cond_c_classify(f);
  if (cond.cond_c != Verdict::True || !cond.attractor) throw Error(ErrorKind::Usage, "Cond C does not hold for this map");
  const SpherePoint p = *cond.attractor;
  const SimpleDomain dom = simple_domain(f, p, cond.critical);
  std::vector<SpherePoint> ring = dom.boundary;
  ring.push_back(ring.front());
  const Polyline boundary = Polyline::from_points(ring);
  const int required = 2 * f.degree() - 4;
  std::vector<SphereRoot> values;
  for (const auto& v : cond.critical.weighted_values())
    if (chordal_dist(v.point, p) > 1e-9) values.push_back(v);
  std::vector<SpherePoint> marks;
  for (const auto& v : values) marks.push_back(v.point);
  marks.push_back(p);

  const Lifter lifter(f);
  ClosedCurveSet level = single_curve(boundary);
  Json levels = Json::array();
  int count = 0;
  int reached = -1;
  for (int k = 1; k <= cfg.census_cap; ++k) {
    level = pull_back(lifter, level);
    std::vector<int> p_wind;
    try {
      for (const auto& c : level.curves) p_wind.push_back(winding_number(c, p));
    } catch (const Error&) {
      throw Error(ErrorKind::ChainAmbiguous, "attracting point lies on a pulled-back curve");
    }
    count = 0;
    Json members = Json::array();
    for (const auto& v : values) {
      bool in = true;
      for (std::size_t c = 0; c < level.curves.size() && in; ++c) in = winding_number(level.curves[c], v.point) == p_wind[c];
      if (in) {
        count += v.multiplicity;
        members.push_back(Json{{"value", point_to_json(v.point)}, {"multiplicity", v.multiplicity}});
      }
    }
    Json lj = region_to_json(level.curves, marks);
    lj["level"] = k;
    lj["components"] = degrees_json(level);
    lj["count"] = count;
    lj["members"] = members;
    levels.push_back(lj);
    if (count >= required) {
      reached = k;
      break;
    }
  }
  Certificate cert;
  cert.kind = "basin-census";
  cert.verdict = reached > 0 ? "pass" : "fail";
  cert.parameters["map"] = map_to_json(spec);
  cert.parameters["config"] = cfg.to_json();
  cert.evidence["attractor"] = point_to_json(p);
  cert.evidence["domain_radius"] = dom.radius;
  cert.evidence["required"] = required;
  cert.evidence["count"] = count;
  cert.evidence["reached_at_level"] = reached;
  cert.evidence["levels"] = levels;
  return cert;
}

std::vector<std::vector<WreathElement<FreeWord>>> geometric_pair_elements(const Lifter& lifter, const Radial& radial,
                                                                          const CutSystem& cuts) {
  const int n = cuts.size();
  const int d = radial.degree();
  std::vector<std::vector<WreathElement<FreeWord>>> out(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const Polyline loop = concat(cuts.generator_loops[static_cast<std::size_t>(g)], cuts.generator_loops[static_cast<std::size_t>(h)]);
      const MonodromyResult m = monodromy(lifter, loop, radial);
      WreathElement<FreeWord> el{std::vector<FreeWord>(static_cast<std::size_t>(d)), m.perm};
      for (int i = 0; i < d; ++i) {
        const Polyline closed = concat(concat(radial.legs[static_cast<std::size_t>(i)], m.lifts[static_cast<std::size_t>(i)]),
                                       reversed(radial.legs[static_cast<std::size_t>(m.perm(i))]));
        el.slots[static_cast<std::size_t>(i)] = loop_to_word(cuts, closed);
      }
      out[static_cast<std::size_t>(g)].push_back(std::move(el));
    }
  }
  return out;
}

namespace {

Json klein_list(const std::vector<Klein>& v) {
  Json out = Json::array();
  for (Klein k : v) out.push_back(k.to_string());
  return out;
}

}  // namespace

Certificate t_cantor_test(const MapSpec& spec, const CertifyConfig& cfg, Complex base) {
  cfg.validate();
  const RationalMap f = spec.resolve();
  require_cond_c(f);
  const Lifter lifter(f);
  Certificate cert;
  cert.kind = "t-cantor-verdict";
  cert.parameters["map"] = map_to_json(spec);
  cert.parameters["config"] = cfg.to_json();

  Radial radial;
  CutSystem cuts;
  if (spec.is_quartic()) {
    radial = standard_radial(f);
    cuts = quartic_cut_system(f, cfg.cutoff);
  } else {
    cert.parameters["base"] = complex_to_json(base);
    radial = straight_radial(f, SpherePoint(base));
    cuts = build_cut_system(finite_postcritical(f, cfg.cutoff), SpherePoint(base));
  }
  const RecursionTable table = wreath_recursion_extract(lifter, radial, cuts);
  cert.evidence["table"] = table_to_json(table);
  const std::string hom = check_depth1_homomorphism(table, geometric_pair_elements(lifter, radial, cuts));
  if (!hom.empty()) throw Error(ErrorKind::InconsistentHomomorphism, "loop product " + hom + " disagrees with the wreath product");
  cert.evidence["depth1_homomorphism"] = "ok";

  if (!spec.is_quartic()) {
    const FreeNucleusResult fr = free_nucleus(table);
    Json steps = Json::array();
    for (const auto& s : fr.steps) {
      Json row = Json::array();
      for (const auto& w : s) row.push_back(w.to_string(table.generators));
      steps.push_back(row);
    }
    cert.evidence["free_nucleus"] = Json{{"steps", steps}, {"result", to_string(fr.verdict)}};
    const bool quadratic_poly = f.degree() == 2 && f.den_degree() == 0;
    cert.verdict = fr.verdict == InjectivityVerdict::Pass ? (quadratic_poly ? "injective-at-quotient" : "unknown") : "unknown";
    return cert;
  }

  const std::string shape = quartic_shape_mismatch(table);
  if (!shape.empty()) throw Error(ErrorKind::ShapeMismatch, shape);
  cert.evidence["shape"] = "ok";
  const Claim1Report c1 = verify_claim1();
  cert.evidence["claim1"] = c1.all_pass() ? "pass" : "fail";
  const QuotientRecursion q = reduce_recursion(table);
  cert.evidence["quotient"] = quotient_to_json(q);
  Json cases = Json::array();
  for (const auto& c : four_cases(q)) {
    const Claim2Result w = claim2_search(c);
    Json cj;
    cj["case"] = c.number;
    cj["zetas"] = c.zetas;
    cj["conjugator"] = c.conjugator;
    cj["witness"] = w.witness.to_string();
    cj["persistent"] = klein_list(w.persistent);
    cj["cycle"] = klein_list(w.cycle);
    cases.push_back(cj);
  }
  cert.evidence["cases"] = cases;
  const NucleusResult nr = nucleus_test(q);
  Json nj;
  Json steps = Json::array();
  for (const auto& s : nr.steps) steps.push_back(klein_list(s));
  nj["steps"] = steps;
  nj["limit"] = klein_list(nr.limit);
  nj["monotone"] = nr.monotone;
  nj["result"] = to_string(nr.verdict);
  if (nr.witness) nj["witness"] = Json{{"g", nr.witness->g.to_string()}, {"word", nr.witness->word}, {"image", nr.witness->image}};
  cert.evidence["nucleus"] = nj;
  const Claim3Result c3 = claim3_check(table, 6);
  cert.evidence["claim3"] = Json{{"max_length", c3.max_length}, {"words", c3.words}, {"identity_words", c3.identity_words},
                                 {"violations", c3.violations}};
  const bool not_injective = c1.all_pass() && nr.verdict == InjectivityVerdict::Fail && c3.violations == 0 && cases.size() == 4;
  cert.verdict = not_injective ? "NOT-t-Cantor" : "unknown";
  return cert;
}

namespace {

void recheck_windings(const Json& node, ReplayResult& r) {
  if (node.is_object()) {
    if (node.contains("curves") && node.contains("marks") && node.contains("winding")) {
      std::vector<Polyline> curves;
      for (const auto& c : node["curves"]) curves.push_back(polyline_from_json(c));
      std::vector<SpherePoint> marks;
      for (const auto& m : node["marks"]) marks.push_back(point_from_json(m));
      const RegionGraph g = region_nesting(curves, marks);
      ++r.winding_tables;
      if (Json(g.winding) != node["winding"]) {
        r.windings_ok = false;
        r.detail += "winding table mismatch; ";
      }
    }
    for (const auto& [k, v] : node.items()) recheck_windings(v, r);
  } else if (node.is_array()) {
    for (const auto& v : node) recheck_windings(v, r);
  }
}

}  // namespace

ReplayResult replay(const Json& stored) {
  const Certificate cert = Certificate::from_json(stored);
  const MapSpec spec = map_from_json(cert.parameters.at("map"));
  const CertifyConfig cfg = CertifyConfig::from_json(cert.parameters.at("config"));
  ReplayResult r;
  if (cert.kind == "figure1-topology") {
    r.recomputed = figure1_report(spec, cfg);
  } else if (cert.kind == "s-cantor-witness") {
    RoundDisc disc;
    if (cert.parameters.contains("disc")) {
      disc.center = complex_from_json(cert.parameters["disc"]["center"]);
      disc.radius = cert.parameters["disc"]["radius"].get<double>();
    }
    r.recomputed = s_cantor_witness(spec, cert.parameters.at("n").get<int>(), cert.parameters.at("family").get<std::string>(), cfg, disc);
  } else if (cert.kind == "basin-census") {
    r.recomputed = basin_census(spec, cfg);
  } else if (cert.kind == "t-cantor-verdict") {
    const Complex base = cert.parameters.contains("base") ? complex_from_json(cert.parameters["base"]) : Complex(1.0, 0.0);
    r.recomputed = t_cantor_test(spec, cfg, base);
  } else {
    throw Error(ErrorKind::Usage, "unknown certificate kind '" + cert.kind + "'");
  }
  r.identical = r.recomputed.to_json().dump() == stored.dump();
  if (!r.identical) r.detail += "recomputed certificate differs; ";
  r.windings_ok = true;
  recheck_windings(stored.at("evidence"), r);
  return r;
}

}  // namespace cantor
