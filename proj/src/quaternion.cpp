#include "qjensen/quaternion.hpp"

#include <ostream>
#include <sstream>

#include "qjensen/error.hpp"

namespace qjensen {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::InvalidUnit: return "InvalidUnit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::NormalNotReal: return "NormalNotReal";
    case ErrorKind::LogOfZero: return "LogOfZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ClassificationInconsistency: return "ClassificationInconsistency";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::InvalidDenominator: return "InvalidDenominator";
    case ErrorKind::InvalidPole: return "InvalidPole";
    case ErrorKind::PoleOnBoundary: return "PoleOnBoundary";
    case ErrorKind::PoleOutsideRegion: return "PoleOutsideRegion";
    case ErrorKind::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorKind::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorKind::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorKind::NonFiniteIntegrand: return "NonFiniteIntegrand";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Quaternion qinv(const Quaternion& q) {
  const double n = norm2(q);
  if (std::sqrt(n) <= eps_zero(q)) {
    std::ostringstream msg;
    msg << "inverse of " << q;
    throw Error(ErrorKind::ZeroDivision, msg.str());
  }
  return conj(q) / n;
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& j) : j_(j) {
  const double len = abs_im(j);
  const bool exact = std::abs(j.w) <= kEpsUnit && std::abs(len - 1.0) <= kEpsUnit;
  if (exact) return;
  const bool close =
      std::abs(j.w) <= kUnitRenormalizeTol && std::abs(len - 1.0) <= kUnitRenormalizeTol;
  if (!close) {
    std::ostringstream msg;
    msg << j << " is not on the unit imaginary sphere";
    throw Error(ErrorKind::InvalidUnit, msg.str());
  }
  j_ = im(j) / len;
}

Quaternion slice_embed(double alpha, double beta, const ImaginaryUnit& unit) {
  if (beta < 0.0) throw Error(ErrorKind::InvalidArgument, "slice_embed requires beta >= 0");
  return Quaternion(alpha) + beta * unit.value();
}

Quaternion slice_embed(std::complex<double> z, const ImaginaryUnit& unit) {
  return Quaternion(z.real()) + z.imag() * unit.value();
}

SlicePoint decompose(const Quaternion& q) {
  SlicePoint p;
  p.alpha = q.w;
  const double beta = abs_im(q);
  if (beta <= eps_zero(q)) {
    p.beta = 0.0;
    p.unit_defined = false;
    return p;
  }
  p.beta = beta;
  p.unit = ImaginaryUnit(im(q) / beta);
  return p;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

}  // namespace qjensen
