#include <algorithm>
#include <random>

#include "cantor/analysis.hpp"
#include "cantor/error.hpp"
#include "doctest.h"

using namespace cantor;

namespace {

int weighted_count(const CriticalData& c) {
  int n = 0;
  for (const auto& p : c.critical_points) n += p.local_degree - 1;
  return n;
}

bool contains_point(const std::vector<CriticalPoint>& pts, Complex z, double tol = 1e-8) {
  return std::any_of(pts.begin(), pts.end(), [&](const CriticalPoint& c) { return chordal_dist(c.point, z) < tol; });
}

}  // namespace

TEST_CASE("critical points of z^2 + c and z + 1/z") {
  const auto q = critical_points(RationalMap::quadratic(Complex(0.3, 0.1)));
  REQUIRE(q.critical_points.size() == 2);
  CHECK(contains_point(q.critical_points, 0.0));
  CHECK(std::any_of(q.critical_points.begin(), q.critical_points.end(),
                    [](const CriticalPoint& c) { return c.point.is_infinity() && c.local_degree == 2; }));

  const auto j = critical_points(RationalMap(Poly{1.0, 0.0, 1.0}, Poly{0.0, 1.0}));
  REQUIRE(j.critical_points.size() == 2);
  CHECK(contains_point(j.critical_points, 1.0));
  CHECK(contains_point(j.critical_points, -1.0));
}

TEST_CASE("quartic critical points follow the closed form") {
  for (const Complex a : {Complex(0.0, 3.0), Complex(0.0, 1.665), Complex(0.7, -1.2)}) {
    const auto c = critical_points(RationalMap::quartic(a));
    CHECK(weighted_count(c) == 6);
    CHECK(c.critical_points.size() == 6);
    CHECK(contains_point(c.critical_points, 0.0));
    CHECK(contains_point(c.critical_points, std::sqrt(1.0 + 1.0 / (2.0 * a))));
    CHECK(contains_point(c.critical_points, -std::sqrt(1.0 + 1.0 / (2.0 * a))));
    CHECK(contains_point(c.critical_points, std::sqrt(1.0 - 1.0 / (2.0 * a))));
    CHECK(contains_point(c.critical_points, -std::sqrt(1.0 - 1.0 / (2.0 * a))));
    for (const auto& p : c.critical_points) CHECK(p.local_degree == 2);
  }
}

TEST_CASE("critical count is 2d-2 on random maps") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 4;
    const int n = trial % 5;
    Poly num(static_cast<std::size_t>(m) + 1), den(static_cast<std::size_t>(n) + 1);
    for (auto& x : num) x = Complex(g(rng), g(rng));
    for (auto& x : den) x = Complex(g(rng), g(rng));
    const RationalMap f(num, den);
    CHECK(weighted_count(critical_points(f)) == 2 * f.degree() - 2);
    CHECK(fixed_points(f).total_multiplicity() == f.degree() + 1);
  }
}

TEST_CASE("fixed points and multipliers") {
  const auto sq = fixed_points(RationalMap(Poly{0.0, 0.0, 1.0}, Poly{1.0}));
  REQUIRE(sq.fixed_points.size() == 3);
  for (const auto& p : sq.fixed_points) {
    if (p.point.is_infinity() || std::abs(p.point.finite()) < 1e-12) {
      CHECK(std::abs(p.multiplier) < 1e-12);
      CHECK(p.kind == FixedClass::Superattracting);
    } else {
      CHECK(std::abs(p.multiplier - Complex(2.0)) < 1e-12);
      CHECK(p.kind == FixedClass::Repelling);
    }
  }

  const auto q = fixed_points(RationalMap::quartic(Complex(0.0, 3.0)));
  CHECK(q.total_multiplicity() == 5);
  bool inf_super = false;
  for (const auto& p : q.fixed_points)
    if (p.point.is_infinity()) inf_super = p.kind == FixedClass::Superattracting && std::abs(p.multiplier) < 1e-12;
  CHECK(inf_super);

  const auto c4 = fixed_points(RationalMap::quadratic(4.0));
  int repelling = 0;
  for (const auto& p : c4.fixed_points) {
    if (p.point.is_infinity()) {
      CHECK(p.kind == FixedClass::Superattracting);
    } else {
      const Complex z = p.point.finite();
      CHECK(std::abs(z * z - z + 4.0) < 1e-10);
      CHECK(std::abs(2.0 * z) > 1.0);
      ++repelling;
    }
  }
  CHECK(repelling == 2);
}

TEST_CASE("preimages including infinity") {
  const RationalMap sq(Poly{0.0, 0.0, 1.0}, Poly{1.0});
  const auto r = preimages(sq, SpherePoint(Complex(4.0))).expanded();
  REQUIRE(r.size() == 2);
  CHECK(std::abs(std::abs(r[0].finite()) - 2.0) < 1e-12);
  CHECK(std::abs(r[0].finite() + r[1].finite()) < 1e-12);

  const auto f = RationalMap::quartic(Complex(0.0, 3.0));
  const auto inf = preimages(f, SpherePoint::infinity());
  CHECK(inf.total_multiplicity() == 4);
  int at_inf = 0;
  for (const auto& p : inf.roots)
    if (p.point.is_infinity()) at_inf = p.multiplicity;
  CHECK(at_inf == 2);

  // independent polynomial for f(z) = i
  const Complex a(0.0, 3.0), i(0.0, 1.0);
  const Poly direct{a + 1.0 / (4.0 * a) + i, 0.0, -(2.0 * a + i), 0.0, a};
  const auto oracle = poly_roots(direct).expanded();
  const auto mine = preimages(f, SpherePoint(i)).expanded();
  REQUIRE(mine.size() == 4);
  for (const auto& z : mine) {
    double best = 1e9;
    for (const auto& w : oracle) best = std::min(best, std::abs(z.finite() - w));
    CHECK(best < 1e-10);
    CHECK(std::abs(z.finite().imag()) < 1e-10);
  }
}

TEST_CASE("preimage of the image contains the point") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const auto f = RationalMap::quartic(Complex(0.0, 1.665));
  for (int i = 0; i < 200; ++i) {
    const SpherePoint z(Complex(u(rng), u(rng)));
    const auto pre = preimages(f, eval(f, z)).expanded();
    double best = 2.0;
    for (const auto& w : pre) best = std::min(best, chordal_dist(w, z));
    CHECK(best < 1e-8);
  }
}

TEST_CASE("orbit convergence examples") {
  const auto c4 = RationalMap::quadratic(4.0);
  CHECK(orbit_converges(c4, SpherePoint(Complex(0.0)), SpherePoint::infinity()).converged);

  const RationalMap sq(Poly{0.0, 0.0, 1.0}, Poly{1.0});
  const auto r = orbit_converges(sq, SpherePoint(Complex(0.5)), SpherePoint(Complex(0.0)), 1e-3);
  CHECK(r.converged);
  CHECK(r.steps <= 60);

  const auto c01 = RationalMap::quadratic(0.1);
  CHECK_FALSE(orbit_converges(c01, SpherePoint(Complex(0.0)), SpherePoint::infinity()).converged);
}

TEST_CASE("Cond C classification") {
  const auto q = cond_c_classify(RationalMap::quartic(Complex(0.0, 3.0)));
  CHECK(q.cond_c == Verdict::True);
  CHECK(q.critical.critical_points.size() == 6);
  for (auto v : q.orbit_verdicts) CHECK(v == Verdict::True);
  REQUIRE(q.attractor.has_value());
  CHECK(q.attractor->is_infinity());

  CHECK(cond_c_classify(RationalMap::quadratic(0.1)).cond_c == Verdict::False);
  CHECK(cond_c_classify(RationalMap::quadratic(4.0)).cond_c == Verdict::True);
  CHECK_THROWS_AS(cond_c_classify(RationalMap::quadratic(0.25)), Error);
}

TEST_CASE("simple domains") {
  const RationalMap sq(Poly{0.0, 0.0, 1.0}, Poly{1.0});
  CHECK(verify_domain(sq, SpherePoint(Complex(0.0)), 0.5));
  const auto c4 = RationalMap::quadratic(4.0);
  CHECK(verify_domain(c4, SpherePoint::infinity(), 1.0 / 3.0));
  const auto q = RationalMap::quartic(Complex(0.0, 3.0));
  CHECK(verify_domain(q, SpherePoint::infinity(), 3.0 / 5.0));

  for (const auto& f : {sq, c4, q}) {
    const SpherePoint p = f.num_degree() == 2 && f.den_degree() == 0 && std::abs(f.num()[0]) == 0.0
                              ? SpherePoint(Complex(0.0))
                              : SpherePoint::infinity();
    CriticalData crit = critical_points(f);
    truncate_postcritical(f, crit, p, 1e-2, 1000);
    const SimpleDomain dom = simple_domain(f, p, crit);
    CHECK(dom.radius > 0.0);
    CHECK(verify_domain(f, p, dom.radius, 1024));
    for (const auto& b : dom.boundary)
      for (const auto& o : crit.orbit_points()) CHECK(chordal_dist(b, o) > 1e-3);
  }
}

TEST_CASE("julia grids") {
  const RationalMap sq(Poly{0.0, 0.0, 1.0}, Poly{1.0});
  const auto g = julia_grid(sq, Viewport{}, 101, 101, 50);
  int far = 0;
  for (int r = 0; r < g.height; ++r)
    for (int c = 0; c < g.width; ++c) {
      if (g.at(c, r) < g.max_iter) continue;
      const double dist = std::abs(std::abs(g.pixel_center(c, r)) - 1.0);
      if (dist > 2.0 * 4.0 / 101) ++far;
    }
  CHECK(far == 0);
  // the slowest pixels sit on the Julia set
  const int slowest = *std::max_element(g.steps.begin(), g.steps.end());
  int slow = 0;
  for (int r = 0; r < g.height; ++r)
    for (int c = 0; c < g.width; ++c) {
      if (g.at(c, r) != slowest) continue;
      ++slow;
      CHECK(std::abs(std::abs(g.pixel_center(c, r)) - 1.0) < 2.0 * 4.0 / 101);
    }
  CHECK(slow > 0);

  const auto d = julia_grid(RationalMap::quadratic(-2.0), Viewport{}, 81, 81, 60);
  for (int r = 0; r < d.height; ++r)
    for (int c = 0; c < d.width; ++c)
      if (d.at(c, r) == d.max_iter) CHECK(std::abs(d.pixel_center(c, r).imag()) < 0.2);

  const auto again = julia_grid(sq, Viewport{}, 101, 101, 50);
  CHECK(again.steps == g.steps);
  const std::string ppm = to_ppm(g);
  CHECK(ppm.rfind("P6\n101 101\n255\n", 0) == 0);
  CHECK(ppm.size() == std::string("P6\n101 101\n255\n").size() + 101 * 101 * 3);
}
