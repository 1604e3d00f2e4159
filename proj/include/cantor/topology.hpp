#pragma once

#include <string>
#include <vector>

#include "cantor/free_word.hpp"
#include "cantor/path_lift.hpp"
#include "cantor/permutation.hpp"
#include "cantor/polyline.hpp"

namespace cantor {

/// Disjoint cuts from each finite puncture out to infinity (which absorbs the
/// truncated orbit tail). Crossing cut j from its right to its left, relative
/// to the puncture-to-infinity direction, reads as generator j.
struct CutSystem {
  std::vector<SpherePoint> punctures;
  std::vector<std::string> labels;
  std::vector<std::vector<Complex>> cuts;  // vertex chains; the last vertex is far away
  SpherePoint basepoint;
  Complex hub;
  std::vector<Polyline> generator_loops;  // lasso per generator, based at the basepoint

  int size() const { return static_cast<int>(punctures.size()); }
};

/// Straight rays pointing away from a hub near the basepoint, and lassos
/// basepoint -> hub -> puncture. Labels default to g1, g2, ....
CutSystem build_cut_system(const std::vector<SpherePoint>& punctures, const SpherePoint& basepoint,
                           std::vector<std::string> labels = {});

/// Quartic preset with a = ic: generators A (-1), B (1) and C_k around
/// f^{k+1}(0) for |f^{k+1}(0)| <= cutoff.
CutSystem quartic_cut_system(const RationalMap& f, double cutoff = 1e3);

/// Signed, freely reduced sequence of cut crossings of a closed loop.
FreeWord loop_to_word(const CutSystem& cuts, const Polyline& loop);

/// Throws Crowded unless every lasso reads as its own single generator.
void check_generator_loops(const CutSystem& cuts);

/// Winding number of a closed curve around z (finite plane).
int winding_number(const Polyline& curve, const SpherePoint& z);

struct ClosedCurveSet {
  std::vector<Polyline> curves;
  std::vector<int> degrees;  // degree of f restricted to each curve onto its image curve
  std::vector<int> parents;  // index of the image curve in the previous level, or -1
  std::string source;
};

/// Components of f^{-1}(curve), one per cycle of the curve's monodromy.
ClosedCurveSet preimage_curve_trace(const Lifter& lifter, const Polyline& curve);
/// f^{-1} of every curve of the set; parents point into `level`.
ClosedCurveSet pull_back(const Lifter& lifter, const ClosedCurveSet& level);

struct Annulus {
  int outer = -1;
  int inner = -1;
};

struct RegionGraph {
  int curve_count = 0;
  std::vector<SpherePoint> marks;
  std::vector<std::vector<int>> winding;  // [curve][node]; nodes are curves then marks
  std::vector<int> parent;                // innermost enclosing curve per node, -1 at top level
  std::vector<int> depth;                 // number of curves enclosing each node

  bool encloses(int curve, int node) const { return winding[static_cast<std::size_t>(curve)][static_cast<std::size_t>(node)] != 0; }
  int mark_node(int mark) const { return curve_count + mark; }
  std::vector<int> children(int curve) const;
  /// Even-depth curves with exactly one child curve.
  std::vector<Annulus> annuli() const;
};

RegionGraph region_nesting(const std::vector<Polyline>& curves, const std::vector<SpherePoint>& marks);

/// g -> (beta_1(g) .. beta_d(g); alpha(g)) for each generator.
struct RecursionTable {
  std::vector<std::string> generators;
  std::vector<Permutation> perms;
  std::vector<std::vector<FreeWord>> slots;  // [generator][leg]

  int degree() const { return perms.empty() ? 0 : perms.front().size(); }
  int size() const { return static_cast<int>(generators.size()); }
  int index_of(const std::string& name) const;
};

RecursionTable wreath_recursion_extract(const Lifter& lifter, const Radial& radial, const CutSystem& cuts);

/// beta'_i(g) = h_i beta_i(g) h_{alpha(g)(i)}^{-1}; permutations unchanged.
RecursionTable conjugate_recursion(const RecursionTable& table, const std::vector<FreeWord>& h);

}  // namespace cantor
