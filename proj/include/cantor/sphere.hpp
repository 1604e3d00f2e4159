#pragma once

#include <complex>
#include <limits>

namespace cantor {

using Complex = std::complex<double>;

enum class Chart { Finite, Infinity };

/// A point of the Riemann sphere. In the infinity chart `value` holds
/// w = 1/z, so the point at infinity is exactly (Infinity, 0).
class SpherePoint {
 public:
  static constexpr double kChartSwitch = 2.0;

  constexpr SpherePoint() = default;
  SpherePoint(Complex z) { *this = from_homogeneous(z, 1.0); }  // NOLINT(google-explicit-constructor)

  static SpherePoint infinity() { return SpherePoint(Chart::Infinity, 0.0); }
  static SpherePoint in_chart(Chart chart, Complex value) { return SpherePoint(chart, value); }

  /// Builds the point [x : y] and picks the chart by the |z| > 2 rule.
  static SpherePoint from_homogeneous(Complex x, Complex y);

  Chart chart() const { return chart_; }
  Complex value() const { return value_; }

  bool is_infinity() const { return chart_ == Chart::Infinity && value_ == Complex(0.0); }

  /// Finite coordinate; +inf for the point at infinity.
  Complex finite() const;

  /// Homogeneous coordinates (x, y) with max(|x|, |y|) == 1 approximately.
  void homogeneous(Complex& x, Complex& y) const;

  /// Re-expresses the point in the requested chart (may overflow to inf
  /// when asking the finite chart for the point at infinity).
  Complex coordinate_in(Chart chart) const;

 private:
  SpherePoint(Chart chart, Complex value) : chart_(chart), value_(value) {}

  Chart chart_ = Chart::Finite;
  Complex value_{0.0, 0.0};
};

/// 2|z - w| / sqrt((1+|z|^2)(1+|w|^2)), extended to infinity.
double chordal_dist(const SpherePoint& z, const SpherePoint& w);

/// Distance from p measured in the local chart centred at p: |z - p| for
/// finite p, |1/z| for p = infinity.
double local_chart_dist(const SpherePoint& p, const SpherePoint& z);

}  // namespace cantor
