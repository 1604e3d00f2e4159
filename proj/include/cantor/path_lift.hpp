#pragma once

#include <vector>

#include "cantor/analysis.hpp"
#include "cantor/permutation.hpp"
#include "cantor/polyline.hpp"
#include "cantor/rational_map.hpp"

namespace cantor {

/// Predictor-corrector continuation of f(z) = gamma(t), reusing the
/// coefficient data and critical points of one map across many lifts.
class Lifter {
 public:
  explicit Lifter(RationalMap f);

  const RationalMap& map() const { return f_; }
  const std::vector<SpherePoint>& critical_points() const { return critical_; }

  /// Lift of gamma starting at z0 (f(z0) must equal gamma(0) to 1e-6 chordal).
  Polyline lift(const Polyline& gamma, const SpherePoint& z0) const;

 private:
  struct Target {
    Complex t1;
    Complex t2;
  };
  bool newton_step(Chart chart, Complex start, const Target& target, double max_predict, Complex& out) const;
  Complex polish(Chart chart, Complex x, const Target& target) const;

  RationalMap f_;
  Poly num_, den_, dnum_, dden_;          // finite chart, padded to degree d
  Poly rnum_, rden_, drnum_, drden_;      // infinity chart u = 1/z
  std::vector<SpherePoint> critical_;
};

Polyline lift_path(const RationalMap& f, const Polyline& gamma, const SpherePoint& z0);

/// Basepoint plus d legs; leg i runs from the basepoint to endpoints[i].
struct Radial {
  SpherePoint base;
  std::vector<Polyline> legs;
  std::vector<SpherePoint> endpoints;

  int degree() const { return static_cast<int>(legs.size()); }
};

struct MonodromyResult {
  Permutation perm;
  std::vector<Polyline> lifts;  // lifts[i] starts at endpoint i
};

/// Lifts a loop based at the radial's basepoint from every leg endpoint and
/// matches the termini (nearest endpoint, separation ratio >= 10).
MonodromyResult monodromy(const Lifter& lifter, const Polyline& loop, const Radial& radial);

/// Matches a point to the nearest endpoint with the separation-ratio rule.
int match_endpoint(const std::vector<SpherePoint>& endpoints, const SpherePoint& z);

/// Finite orbit points of the critical values with |z| <= cutoff, deduplicated.
std::vector<SpherePoint> finite_postcritical(const RationalMap& f, double cutoff = 1e3, int max_iter = 64);

/// Quartic preset radial: basepoint i, straight legs to the four real preimages in ascending order.
Radial standard_radial(const RationalMap& f);
/// Straight legs from `base` to its preimages, ordered by (re, im).
Radial straight_radial(const RationalMap& f, const SpherePoint& base);
/// Throws unless every leg keeps 1e-3 from the finite postcritical points.
void check_radial_clearance(const Radial& r, const std::vector<SpherePoint>& postcritical);

/// End of the path l_w for w = i_1..i_k (0-based letters), via l_{iw} = l_i L_i(l_w).
SpherePoint coding_point(const Lifter& lifter, const Radial& radial, const std::vector<int>& word);
/// The full path l_w.
Polyline coding_path(const Lifter& lifter, const Radial& radial, const std::vector<int>& word);

struct CodingEstimate {
  SpherePoint point;
  double diameter = 0.0;  // chordal diameter of the last five prefix points
  std::vector<SpherePoint> prefix_points;
};

/// Coding point of the prefix with a Cauchy-style diameter estimate.
CodingEstimate coding_map_approx(const Lifter& lifter, const Radial& radial, const std::vector<int>& prefix);

}  // namespace cantor
