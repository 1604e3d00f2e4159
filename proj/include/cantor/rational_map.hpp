#pragma once

#include <optional>
#include <string>

#include "cantor/polynomial.hpp"
#include "cantor/sphere.hpp"

namespace cantor {

/// Numerator / denominator pair of a holomorphic self-map of the sphere.
class RationalMap {
 public:
  RationalMap(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const { return degree_; }
  int num_degree() const { return poly_degree(num_); }
  int den_degree() const { return poly_degree(den_); }

  /// The quartic family a(z^2-1) + 1/(4a(z^2-1)) when built from the preset.
  std::optional<Complex> quartic_parameter() const { return quartic_a_; }

  /// Homogeneous forms of degree d: N(x, y) = sum p_k x^k y^(d-k).
  Complex hom_num(Complex x, Complex y) const;
  Complex hom_den(Complex x, Complex y) const;

  static RationalMap quartic(Complex a);
  static RationalMap quadratic(Complex c);

 private:
  Poly num_;
  Poly den_;
  int degree_ = 0;
  std::optional<Complex> quartic_a_;
};

SpherePoint eval(const RationalMap& f, const SpherePoint& z);
/// f^n(z).
SpherePoint eval_iterate(const RationalMap& f, const SpherePoint& z, int n);

/// (num' den - num den', den^2), un-normalised.
struct DerivativePair {
  Poly num;
  Poly den;
};
DerivativePair derivative(const RationalMap& f);

/// f'(z) at a finite point (inf at poles).
Complex derivative_at(const RationalMap& f, Complex z);

/// Multiplier of a fixed point, chart-corrected at infinity.
Complex multiplier(const RationalMap& f, const SpherePoint& fixed_point);

}  // namespace cantor
