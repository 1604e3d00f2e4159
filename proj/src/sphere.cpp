#include "cantor/sphere.hpp"

#include <cmath>

#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::ParabolicSuspected: return "ParabolicSuspected";
    case ErrorKind::NoDomain: return "NoDomain";
    case ErrorKind::NearCriticalPoint: return "NearCriticalPoint";
    case ErrorKind::StepFloor: return "StepFloor";
    case ErrorKind::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorKind::PresetOnly: return "PresetOnly";
    case ErrorKind::NotContracting: return "NotContracting";
    case ErrorKind::Crowded: return "Crowded";
    case ErrorKind::GrazingCut: return "GrazingCut";
    case ErrorKind::NonInteger: return "NonInteger";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::AlphabetEscape: return "AlphabetEscape";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::InconsistentHomomorphism: return "InconsistentHomomorphism";
    case ErrorKind::CaseCountMismatch: return "CaseCountMismatch";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::ChainAmbiguous: return "ChainAmbiguous";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::TopologyMismatch: return "TopologyMismatch";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

SpherePoint SpherePoint::from_homogeneous(Complex x, Complex y) {
  if (std::abs(x) <= kChartSwitch * std::abs(y)) {
    return SpherePoint(Chart::Finite, x / y);
  }
  return SpherePoint(Chart::Infinity, y / x);
}

Complex SpherePoint::finite() const {
  if (chart_ == Chart::Finite) return value_;
  if (value_ == Complex(0.0)) {
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  return 1.0 / value_;
}

void SpherePoint::homogeneous(Complex& x, Complex& y) const {
  if (chart_ == Chart::Finite) {
    x = value_;
    y = 1.0;
  } else {
    x = 1.0;
    y = value_;
  }
}

Complex SpherePoint::coordinate_in(Chart chart) const {
  if (chart == chart_) return value_;
  if (value_ == Complex(0.0)) {
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  return 1.0 / value_;
}

double chordal_dist(const SpherePoint& z, const SpherePoint& w) {
  Complex z1, z2, w1, w2;
  z.homogeneous(z1, z2);
  w.homogeneous(w1, w2);
  const double nz = std::sqrt(std::norm(z1) + std::norm(z2));
  const double nw = std::sqrt(std::norm(w1) + std::norm(w2));
  return 2.0 * std::abs(z1 * w2 - z2 * w1) / (nz * nw);
}

double local_chart_dist(const SpherePoint& p, const SpherePoint& z) {
  if (p.is_infinity()) {
    Complex x, y;
    z.homogeneous(x, y);
    return std::abs(y) / std::abs(x);
  }
  const Complex c = p.finite();
  Complex x, y;
  z.homogeneous(x, y);
  if (y == Complex(0.0)) return std::numeric_limits<double>::infinity();
  return std::abs(x / y - c);
}

}  // namespace cantor
