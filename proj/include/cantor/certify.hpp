#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/io.hpp"
#include "cantor/path_lift.hpp"
#include "cantor/topology.hpp"
#include "cantor/wreath.hpp"

namespace cantor {

struct CertifyConfig {
  double closure_tol = 1e-6;
  double inside_margin = 1e-4;
  double tube_margin = 0.05;
  double cutoff = 1e3;
  int census_cap = 4;
  int growth_samples = 10000;
  std::uint64_t seed = 0;

  /// Tolerances must lie in [1e-14, 1e-2].
  void validate() const;
  Json to_json() const;
  static CertifyConfig from_json(const Json& j);
};

struct Certificate {
  std::string kind;  // s-cantor-witness | figure1-topology | basin-census | t-cantor-verdict
  std::string verdict;
  Json parameters;
  Json evidence;

  Json to_json() const;
  static Certificate from_json(const Json& j);
};

struct GrowthReport {
  int samples = 0;
  int violations = 0;
  double min_ratio = 0.0;  // min |f(z)| / (|a| |z|)
};

/// Quasi-random check of |f(z)| > |a||z| on 5/3 < |z| <= 10.
GrowthReport growth_check(Complex a, int samples, std::uint64_t seed);

/// Curves, marks and the integer winding table of region_nesting, in replayable form.
Json region_to_json(const std::vector<Polyline>& curves, const std::vector<SpherePoint>& marks);

Certificate figure1_report(const MapSpec& spec, const CertifyConfig& cfg = {});

struct DiscCandidate {
  std::string description;
  Polyline boundary;  // closed
};

std::vector<DiscCandidate> round_disc_family();
/// Thickened outer level-n preimage curves of {|z| <= base_radius}, joined by tubes
/// into one hole-free polygon avoiding the critical values of f^n.
std::vector<DiscCandidate> tube_disc_candidates(const RationalMap& f, int n, double base_radius, double margin);

/// Critical values of f, f^2, .., f^n.
std::vector<SpherePoint> iterate_critical_values(const RationalMap& f, int n);

struct RoundDisc {
  Complex center;
  double radius = 0.0;
};

/// family: "round", "tube", "all", or "disc" for the single disc given.
Certificate s_cantor_witness(const MapSpec& spec, int n, const std::string& family, const CertifyConfig& cfg = {},
                             const RoundDisc& disc = {});
Json check_disc(const RationalMap& f, int n, const DiscCandidate& candidate, const CertifyConfig& cfg, bool keep_evidence);

Certificate basin_census(const MapSpec& spec, const CertifyConfig& cfg = {});

/// Depth-1 elements of g g' read off concatenated generator loops.
std::vector<std::vector<WreathElement<FreeWord>>> geometric_pair_elements(const Lifter& lifter, const Radial& radial,
                                                                          const CutSystem& cuts);

/// base is used for maps outside the quartic family.
Certificate t_cantor_test(const MapSpec& spec, const CertifyConfig& cfg = {}, Complex base = Complex(1.0, 0.0));

struct ReplayResult {
  bool identical = false;
  bool windings_ok = false;
  int winding_tables = 0;
  std::string detail;
  Certificate recomputed;
};

ReplayResult replay(const Json& stored);

}  // namespace cantor
