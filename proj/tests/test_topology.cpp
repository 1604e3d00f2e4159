#include <numbers>
#include <random>

#include "cantor/analysis.hpp"
#include "cantor/error.hpp"
#include "cantor/topology.hpp"
#include "cantor/wreath.hpp"
#include "doctest.h"

using namespace cantor;

namespace {

// Even-odd parity against the sampled polygon.
bool parity_inside(const Polyline& curve, Complex q) {
  const auto pts = curve.finite_points();
  bool in = false;
  for (std::size_t i = 0, j = pts.size() - 1; i < pts.size(); j = i++) {
    if ((pts[i].imag() > q.imag()) != (pts[j].imag() > q.imag())) {
      const double x = pts[i].real() + (q.imag() - pts[i].imag()) * (pts[j].real() - pts[i].real()) / (pts[j].imag() - pts[i].imag());
      if (q.real() < x) in = !in;
    }
  }
  return in;
}

Polyline random_loop(std::mt19937& rng, Complex base, int vertices) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Complex> v{base};
  for (int k = 0; k < vertices; ++k) v.emplace_back(u(rng), u(rng));
  v.push_back(base);
  return polygon_path(v, 0.01);
}

const std::vector<std::string> kNames = {"A", "B", "C0", "C1", "C2"};

FreeWord w(const std::string& text, const RecursionTable& t) { return parse_word(text, t.generators); }

}  // namespace

TEST_CASE("winding numbers of circles") {
  const auto ccw = circle(0.0, 1.0, 0.3, 200);
  const auto cw = circle(0.0, 1.0, 0.3, 200, false);
  CHECK(winding_number(ccw, SpherePoint(Complex(0.1, 0.2))) == 1);
  CHECK(winding_number(cw, SpherePoint(Complex(0.1, 0.2))) == -1);
  CHECK(winding_number(ccw, SpherePoint(Complex(2.0, 0.0))) == 0);
  CHECK(winding_number(ccw, SpherePoint::infinity()) == 0);
  CHECK_THROWS_AS(winding_number(ccw, ccw.front()), Error);
}

TEST_CASE("winding agrees with the parity oracle on a lifted curve") {
  const auto f = RationalMap::quartic(Complex(0.0, 1.665));
  const Lifter lifter(f);
  ClosedCurveSet d;
  d.curves = {circle(0.0, 1.5, 0.0, 600)};
  d.degrees = {1};
  d.parents = {-1};
  const auto level = pull_back(lifter, d);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.6, 1.6);
  for (const auto& c : level.curves) {
    for (int k = 0; k < 200; ++k) {
      const Complex q(u(rng), u(rng));
      if (distance_to_chain(c.finite_points(), q) < 1e-3) continue;
      CHECK((winding_number(c, SpherePoint(q)) != 0) == parity_inside(c, q));
    }
  }
}

TEST_CASE("generic cut system reads its lassos as single generators") {
  const std::vector<SpherePoint> punct = {SpherePoint(Complex(4.0)), SpherePoint(Complex(20.0)), SpherePoint(Complex(404.0))};
  const CutSystem cuts = build_cut_system(punct, SpherePoint(Complex(1.0)));
  REQUIRE(cuts.size() == 3);
  for (int g = 0; g < 3; ++g) CHECK(loop_to_word(cuts, cuts.generator_loops[g]) == FreeWord::letter(g));
  CHECK_THROWS_AS(build_cut_system({SpherePoint(Complex(1.0)), SpherePoint(Complex(1.0 + 1e-4))}, SpherePoint(Complex(0.0))), Error);
}

TEST_CASE("loop words are multiplicative under concatenation") {
  const auto f = RationalMap::quartic(Complex(0.0, 3.0));
  const CutSystem cuts = quartic_cut_system(f);
  for (int g = 0; g < cuts.size(); ++g) {
    for (int h = 0; h < cuts.size(); ++h) {
      const auto loop = concat(cuts.generator_loops[g], reversed(cuts.generator_loops[h]));
      CHECK(loop_to_word(cuts, loop) == FreeWord::letter(g) * FreeWord::letter(h).inverse());
    }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_loop(rng, Complex(0.0, 1.0), 4);
    const auto b = random_loop(rng, Complex(0.0, 1.0), 4);
    FreeWord wa, wb;
    try {
      wa = loop_to_word(cuts, a);
      wb = loop_to_word(cuts, b);
    } catch (const Error&) {
      continue;
    }
    CHECK(loop_to_word(cuts, concat(a, b)) == wa * wb);
  }
}

TEST_CASE("exponent sums match winding numbers around punctures") {
  const auto f = RationalMap::quartic(Complex(0.0, 3.0));
  const CutSystem cuts = quartic_cut_system(f);
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto loop = random_loop(rng, Complex(0.0, 1.0), 5);
    FreeWord word;
    try {
      word = loop_to_word(cuts, loop);
    } catch (const Error&) {
      continue;
    }
    bool near = false;
    for (const auto& p : cuts.punctures) near = near || distance_to_chain(loop.finite_points(), p.finite()) < 1e-6;
    if (near) continue;
    for (int g = 0; g < cuts.size(); ++g) CHECK(word.exponent_sum(g) == winding_number(loop, cuts.punctures[g]));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("a loop running along a cut is rejected") {
  const auto f = RationalMap::quartic(Complex(0.0, 3.0));
  const CutSystem cuts = quartic_cut_system(f);
  const auto loop = polygon_path({Complex(0.0, 1.0), Complex(-1.0, -0.5), Complex(0.0, 1.0)});
  CHECK_THROWS_AS(loop_to_word(cuts, loop), Error);
}

TEST_CASE("quartic cut systems") {
  const auto c3 = quartic_cut_system(RationalMap::quartic(Complex(0.0, 3.0)));
  CHECK(c3.labels == std::vector<std::string>{"A", "B", "C0", "C1"});
  CHECK(std::abs(c3.punctures[2].finite() - Complex(0.0, -3.0 + 1.0 / 12.0)) < 1e-12);
  const auto c1 = quartic_cut_system(RationalMap::quartic(Complex(0.0, 1.665)));
  CHECK(c1.size() == 5);
  CHECK_THROWS_AS(quartic_cut_system(RationalMap::quadratic(4.0)), Error);
}

TEST_CASE("preimage tracing accounts for the full degree") {
  const RationalMap sq(Poly{0.0, 0.0, 1.0}, Poly{1.0});
  const Lifter lifter(sq);
  const auto around = preimage_curve_trace(lifter, circle(0.0, 2.0, 0.0, 300));
  REQUIRE(around.curves.size() == 1);
  CHECK(around.degrees[0] == 2);
  const auto beside = preimage_curve_trace(lifter, circle(3.0, 0.5, 0.0, 300));
  CHECK(beside.curves.size() == 2);
  CHECK(beside.degrees == std::vector<int>{1, 1});
  for (const auto& c : around.curves) {
    for (const auto& z : c.z) CHECK(std::abs(std::abs(z.finite()) - std::sqrt(2.0)) < 1e-8);
  }

  const auto f = RationalMap::quartic(Complex(0.0, 3.0));
  const Lifter ql(f);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double r = u(rng);
    bool clear = true;
    for (const auto& v : critical_points(f).critical_values)
      if (!v.is_infinity() && std::abs(std::abs(v.finite()) - r) < 1e-2) clear = false;
    if (!clear) continue;
    const auto set = preimage_curve_trace(ql, circle(0.0, r, 0.0, 400));
    int total = 0;
    for (int d : set.degrees) total += d;
    CHECK(total == 4);
    for (const auto& c : set.curves)
      for (const auto& cp : critical_points(f).critical_points)
        if (!cp.point.is_infinity() && !parity_inside(c, cp.point.finite())) CHECK(winding_number(c, cp.point) == 0);
  }
}

TEST_CASE("region nesting of concentric circles") {
  std::vector<Polyline> curves = {circle(0.0, 1.0, 0.0, 200), circle(0.0, 3.0, 0.0, 200), circle(0.0, 2.0, 0.0, 200),
                                  circle(10.0, 1.0, 0.0, 200)};
  const auto g = region_nesting(curves, {SpherePoint(Complex(0.0)), SpherePoint(Complex(5.0))});
  CHECK(g.parent[1] == -1);
  CHECK(g.parent[2] == 1);
  CHECK(g.parent[0] == 2);
  CHECK(g.parent[3] == -1);
  CHECK(g.parent[g.mark_node(0)] == 0);
  CHECK(g.parent[g.mark_node(1)] == -1);
  const auto annuli = g.annuli();
  REQUIRE(annuli.size() == 1);
  CHECK(annuli[0].outer == 1);
  CHECK(annuli[0].inner == 2);
}

TEST_CASE("recursion table of the quartic at a = 3i") {
  const auto f = RationalMap::quartic(Complex(0.0, 3.0));
  const Lifter lifter(f);
  const auto radial = standard_radial(f);
  const auto cuts = quartic_cut_system(f);
  const auto t = wreath_recursion_extract(lifter, radial, cuts);
  REQUIRE(t.generators == std::vector<std::string>{"A", "B", "C0", "C1"});
  const auto swap = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  CHECK(t.perms[0] == swap);
  CHECK(t.perms[1] == swap);
  CHECK(t.perms[2] == Permutation::from_cycles(4, {{1, 4}}));
  CHECK(t.perms[3].is_identity());
  CHECK(t.slots[0] == std::vector<FreeWord>{w("A", t), w("A^-1", t), w("e", t), w("e", t)});
  CHECK(t.slots[1] == std::vector<FreeWord>{w("e", t), w("e", t), w("B", t), w("B^-1", t)});
  CHECK(t.slots[2] == std::vector<FreeWord>{w("B", t), w("e", t), w("e", t), w("B^-1", t)});
  CHECK(t.slots[3] == std::vector<FreeWord>{w("e", t), w("e", t), w("e", t), w("C0", t)});
}

TEST_CASE("recursion tail at a = 1.665i") {
  const auto f = RationalMap::quartic(Complex(0.0, 1.665));
  const auto t = wreath_recursion_extract(Lifter(f), standard_radial(f), quartic_cut_system(f));
  REQUIRE(t.size() == 5);
  CHECK(t.slots[4] == std::vector<FreeWord>{FreeWord(), FreeWord(), FreeWord(), FreeWord::letter(3)});
}

TEST_CASE("conjugating a recursion") {
  const auto f = RationalMap::quartic(Complex(0.0, 3.0));
  const auto t = wreath_recursion_extract(Lifter(f), standard_radial(f), quartic_cut_system(f));
  const auto same = conjugate_recursion(t, std::vector<FreeWord>(4));
  CHECK(same.slots == t.slots);
  const FreeWord a = FreeWord::letter(0);
  const auto c = conjugate_recursion(t, {a, FreeWord(), FreeWord(), FreeWord()});
  // h_i beta_i(g) h_{alpha(g)(i)}^-1 by hand
  CHECK(c.slots[0][0] == a * a);
  CHECK(c.slots[0][1] == a.inverse() * a.inverse());
  CHECK(c.slots[2][0] == a * FreeWord::letter(1) * FreeWord());
  CHECK(c.slots[2][3] == FreeWord::letter(1).inverse() * a.inverse());
  CHECK(c.perms == t.perms);
  CHECK_THROWS_AS(conjugate_recursion(t, {a}), Error);
}

TEST_CASE("monodromy is anti-multiplicative and the table is a depth-1 homomorphism") {
  const auto f = RationalMap::quartic(Complex(0.0, 3.0));
  const Lifter lifter(f);
  const auto radial = standard_radial(f);
  const auto cuts = quartic_cut_system(f);
  const auto t = wreath_recursion_extract(lifter, radial, cuts);
  for (int g = 0; g < cuts.size(); ++g) {
    for (int h = 0; h < cuts.size(); ++h) {
      const auto loop = concat(cuts.generator_loops[g], cuts.generator_loops[h]);
      const auto m = monodromy(lifter, loop, radial);
      // loop g then h acts as alpha(g) followed by alpha(h)
      CHECK(m.perm == t.perms[g] * t.perms[h]);
    }
  }
}
