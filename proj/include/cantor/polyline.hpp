#pragma once

#include <vector>

#include "cantor/sphere.hpp"

namespace cantor {

/// Sampled path on the sphere, parametrised over [0, 1].
struct Polyline {
  std::vector<double> t;
  std::vector<SpherePoint> z;

  std::size_t size() const { return z.size(); }
  bool empty() const { return z.empty(); }
  const SpherePoint& front() const { return z.front(); }
  const SpherePoint& back() const { return z.back(); }

  bool is_closed(double tol = 1e-8) const;
  /// Largest chordal distance between consecutive samples.
  double max_gap() const;
  /// Finite coordinates of all samples (inf for the point at infinity).
  std::vector<Complex> finite_points() const;

  /// Parametrises by cumulative chordal length.
  static Polyline from_points(const std::vector<SpherePoint>& pts);
  static Polyline from_finite(const std::vector<Complex>& pts);
};

/// Straight segment in the plane, sampled every `spacing` or finer.
Polyline segment(Complex a, Complex b, double spacing = 0.01);
/// Polygonal path through the vertices; sample spacing is `spacing` * max(1, |z|).
Polyline polygon_path(const std::vector<Complex>& vertices, double spacing = 0.01);
/// Closed circle starting at center + radius e^{i start}; last sample repeats the first.
Polyline circle(Complex center, double radius, double start_angle, int samples, bool ccw = true);

/// Joins b after a; b must start where a ends (the duplicate sample is dropped).
Polyline concat(const Polyline& a, const Polyline& b);
Polyline reversed(const Polyline& a);
/// Inserts finite-plane samples so consecutive points are at most `spacing` apart.
Polyline refine(const Polyline& a, double spacing);

/// Minimum planar distance from q to the polygonal chain of finite samples.
double distance_to_chain(const std::vector<Complex>& chain, Complex q);

}  // namespace cantor
