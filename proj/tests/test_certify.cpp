#include <cstdlib>

#include "cantor/certify.hpp"
#include "cantor/error.hpp"
#include "doctest.h"

using namespace cantor;

namespace {

const MapSpec kQ1 = MapSpec::quartic(Complex(0.0, 1.665));
const MapSpec kQ3 = MapSpec::quartic(Complex(0.0, 3.0));

struct ThreadEnv {
  explicit ThreadEnv(const char* n) { setenv("CANTOR_ATLAS_THREADS", n, 1); }
  ~ThreadEnv() { unsetenv("CANTOR_ATLAS_THREADS"); }
};

}  // namespace

TEST_CASE("config validation") {
  CertifyConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.closure_tol = 0.5;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = CertifyConfig{};
  cfg.inside_margin = 1e-16;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = CertifyConfig{};
  cfg.seed = 42;
  CHECK(CertifyConfig::from_json(cfg.to_json()).to_json() == cfg.to_json());
}

TEST_CASE("growth outside the escape radius") {
  for (double c : {1.665, 3.0}) {
    const auto r = growth_check(Complex(0.0, c), 2000, 0);
    CHECK(r.samples == 2000);
    CHECK(r.violations == 0);
    CHECK(r.min_ratio > 1.0);
  }
}

TEST_CASE("level-1 and level-2 preimage topology") {
  for (const auto& spec : {kQ1, kQ3}) {
    const auto cert = figure1_report(spec);
    CHECK(cert.verdict == "pass");
    for (const auto& [name, ok] : cert.evidence["checks"].items()) {
      INFO(name);
      CHECK(ok.get<bool>());
    }
    CHECK(cert.evidence["max_closure_gap"].get<double>() < 1e-6);
  }
  CHECK_THROWS_AS(figure1_report(MapSpec::quadratic(4.0)), Error);
}

TEST_CASE("a round disc for z^2 + 4") {
  const auto cert = s_cantor_witness(MapSpec::quadratic(4.0), 1, "disc", {}, {Complex(0.0), 3.0});
  REQUIRE(cert.verdict == "pass");
  const auto& w = cert.evidence["witness"];
  // preimage of |z| <= 3 lies in |z| <= sqrt 7
  CHECK(w["min_margin"].get<double>() == doctest::Approx(3.0 - std::sqrt(7.0)).epsilon(1e-4));
  CHECK(w["preimage_components"]["degrees"] == Json::array({1, 1}));
  CHECK(cert.evidence["basin_census"]["verdict"] == "pass");

  const auto small = s_cantor_witness(MapSpec::quadratic(4.0), 1, "disc", {}, {Complex(0.0), 1.0});
  CHECK(small.verdict != "pass");
  CHECK_THROWS_AS(s_cantor_witness(MapSpec::quadratic(4.0), 1, "disc", {}, {Complex(0.0), -1.0}), Error);
}

TEST_CASE("disc witnesses for the quartic") {
  const auto round = s_cantor_witness(kQ1, 1, "round");
  CHECK(round.verdict == "all-failed");
  const auto all = s_cantor_witness(kQ1, 2, "all");
  REQUIRE(all.verdict == "pass");
  const auto& w = all.evidence["witness"];
  CHECK(w["description"].get<std::string>().rfind("tube", 0) == 0);
  CHECK(w["min_margin"].get<double>() > 1e-4);
  CHECK(all.evidence["basin_census"]["verdict"] == "pass");
  CHECK(all.evidence["basin_census"]["count"].get<int>() >= 4);
}

TEST_CASE("basin census") {
  const auto c = basin_census(kQ3);
  CHECK(c.verdict == "pass");
  CHECK(c.evidence["count"].get<int>() >= 4);
  CHECK_THROWS_AS(basin_census(MapSpec::quadratic(0.1)), Error);
}

TEST_CASE("t-Cantor verdicts") {
  const auto q = t_cantor_test(kQ1);
  CHECK(q.verdict == "NOT-t-Cantor");
  CHECK(q.evidence["nucleus"]["result"] == "fail");
  CHECK(q.evidence["nucleus"]["witness"]["g"] == "(1,0)");
  CHECK(q.evidence["claim3"]["violations"] == 0);
  CHECK(q.evidence["depth1_homomorphism"] == "ok");
  const auto p = t_cantor_test(MapSpec::quadratic(4.0));
  CHECK(p.verdict == "injective-at-quotient");
  CHECK(p.evidence["free_nucleus"]["result"] == "pass");
}

TEST_CASE("replaying certificates") {
  const auto cert = figure1_report(kQ3).to_json();
  const auto ok = replay(cert);
  CHECK(ok.identical);
  CHECK(ok.windings_ok);
  CHECK(ok.winding_tables == 2);

  auto tampered = cert;
  tampered["evidence"]["max_closure_gap"] = 1.0;
  CHECK_FALSE(replay(tampered).identical);

  auto bent = cert;
  auto& winding = bent["evidence"]["level1"]["winding"];
  winding[0][0] = winding[0][0].get<int>() + 1;
  const auto r = replay(bent);
  CHECK_FALSE(r.windings_ok);
  CHECK_FALSE(r.identical);

  auto old = cert;
  old["schema"] = "cantor-atlas/0";
  CHECK_THROWS_AS(replay(old), Error);
}

TEST_CASE("results do not depend on the worker count") {
  std::string one, four;
  {
    ThreadEnv env("1");
    one = figure1_report(kQ1).to_json().dump() + t_cantor_test(kQ1).to_json().dump();
  }
  {
    ThreadEnv env("4");
    four = figure1_report(kQ1).to_json().dump() + t_cantor_test(kQ1).to_json().dump();
  }
  CHECK(one == four);
}
