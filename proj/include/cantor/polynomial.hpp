#pragma once

#include <span>
#include <vector>

#include "cantor/sphere.hpp"

namespace cantor {

/// Coefficients in ascending degree: c[0] + c[1] z + ... .
using Poly = std::vector<Complex>;

Complex poly_eval(std::span<const Complex> c, Complex z);
/// Evaluates p and p' together (Horner).
void poly_eval_deriv(std::span<const Complex> c, Complex z, Complex& value, Complex& deriv);

Poly poly_derivative(std::span<const Complex> c);
Poly poly_mul(std::span<const Complex> a, std::span<const Complex> b);
Poly poly_add(std::span<const Complex> a, std::span<const Complex> b);
Poly poly_sub(std::span<const Complex> a, std::span<const Complex> b);
Poly poly_scale(std::span<const Complex> a, Complex s);

/// Drops trailing coefficients that are zero relative to the coefficient norm.
Poly poly_trim(std::span<const Complex> c, double rel_tol = 1e-14);
int poly_degree(std::span<const Complex> c);

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;
  double residual = 0.0;

  int total_multiplicity() const;
  /// Flattened list with each root repeated by its multiplicity.
  std::vector<Complex> expanded() const;
};

struct RootOptions {
  int max_iterations = 500;
  double cluster_radius = 1e-7;
  double residual_bound = 1e-10;
};

/// Simultaneous Aberth iteration on the monic normalisation, followed by
/// clustering of coincident roots. Degree <= 16.
RootSet poly_roots(std::span<const Complex> coeffs, const RootOptions& opts = {});

/// Expands prod (z - r_i) (monic, ascending order).
Poly poly_from_roots(std::span<const Complex> roots);

}  // namespace cantor
