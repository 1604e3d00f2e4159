#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantor/rational_map.hpp"
#include "cantor/sphere.hpp"

namespace cantor {

struct SphereRoot {
  SpherePoint point;
  int multiplicity = 1;
};

struct SphereRootSet {
  std::vector<SphereRoot> roots;
  double residual = 0.0;

  int total_multiplicity() const;
  std::vector<SpherePoint> expanded() const;
};

/// Solutions of f(z) = w on the sphere, with multiplicity (d in total).
SphereRootSet preimages(const RationalMap& f, const SpherePoint& w);

struct CriticalPoint {
  SpherePoint point;
  int local_degree = 2;
};

struct CriticalData {
  std::vector<CriticalPoint> critical_points;
  std::vector<SpherePoint> critical_values;           // f(c), same order
  std::vector<std::vector<SpherePoint>> postcritical;  // f(c), f^2(c), ... per critical point
  std::vector<bool> escaping;                          // orbit reached the trap by step K
  int truncation_index = 0;                            // K

  /// Critical values with multiplicity sum (local degree - 1) attached.
  std::vector<SphereRoot> weighted_values() const;
  /// All truncated orbit points, flattened.
  std::vector<SpherePoint> orbit_points() const;
};

CriticalData critical_points(const RationalMap& f);

/// Fills `postcritical` up to the first step whose local-chart distance to
/// p is below trap_radius; orbits that never get there are flagged.
void truncate_postcritical(const RationalMap& f, CriticalData& crit, const SpherePoint& p,
                           double trap_radius, int max_iter);

enum class FixedClass { Superattracting, Attracting, Repelling, Indifferent };
std::string to_string(FixedClass c);

struct FixedPoint {
  SpherePoint point;
  Complex multiplier;
  FixedClass kind;
  int multiplicity = 1;
};

struct FixedPointReport {
  std::vector<FixedPoint> fixed_points;
  int total_multiplicity() const;
};

FixedClass classify_multiplier(Complex multiplier);
FixedPointReport fixed_points(const RationalMap& f);

/// Round disc in the chart centred at p: |z - p| <= radius, or |1/z| <= radius at infinity.
struct SimpleDomain {
  SpherePoint center;
  double radius = 0.0;
  std::vector<SpherePoint> boundary;  // 256 samples, counter-clockwise in the local chart

  bool contains(const SpherePoint& z) const;
  /// Boundary as seen in the finite plane (for p = infinity: the circle |z| = 1/radius).
  std::vector<Complex> boundary_finite(int samples) const;
};

/// Checks that the closed disc maps strictly into itself: no point of the
/// disc maps to the antipodal chart point and `samples` boundary points
/// land inside with margin 1e-6.
bool verify_domain(const RationalMap& f, const SpherePoint& p, double radius, int samples = 256);

SimpleDomain simple_domain(const RationalMap& f, const SpherePoint& p, const CriticalData& postcritical);

struct OrbitResult {
  bool converged = false;
  int steps = 0;
};

OrbitResult orbit_converges(const RationalMap& f, const SpherePoint& z, const SpherePoint& p,
                            double trap_radius = 1e-2, int max_iter = 10000);

enum class Verdict { True, False, Undecided };
std::string to_string(Verdict v);

struct CondCReport {
  std::optional<SpherePoint> attractor;
  FixedPointReport fixed;
  CriticalData critical;
  std::vector<Verdict> orbit_verdicts;  // per critical point, towards `attractor`
  std::vector<int> orbit_steps;
  Verdict cond_c = Verdict::Undecided;
  int attracting_count = 0;
};

CondCReport cond_c_classify(const RationalMap& f, int max_iter = 10000, double trap_radius = 1e-2);

struct Viewport {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -2.0;
  double im_max = 2.0;
};

struct JuliaGrid {
  Viewport viewport;
  int width = 0;
  int height = 0;
  int max_iter = 0;
  std::vector<int> steps;             // row-major, row 0 = top
  std::vector<std::int8_t> attractor;  // index into `attractors`, -1 when capped
  std::vector<SpherePoint> attractors;

  int at(int col, int row) const { return steps[static_cast<std::size_t>(row * width + col)]; }
  Complex pixel_center(int col, int row) const;
  double capped_fraction() const;
};

/// Escape-time grid: a pixel stops once it enters the simple domain of any
/// attracting fixed point. Rows are computed on CANTOR_ATLAS_THREADS workers.
JuliaGrid julia_grid(const RationalMap& f, const Viewport& viewport, int width, int height,
                     int max_iter);

/// Binary P6 image with a fixed monotone palette.
std::string to_ppm(const JuliaGrid& grid);

}  // namespace cantor
