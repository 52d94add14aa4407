#pragma once

/// Zero sets, total multiplicities, pole structure and Blaschke factors.
///
/// The zeros of a slice-regular polynomial f lie on the spheres S_y where the
/// slice-preserving normal function N(f) vanishes. On such a sphere either f
/// vanishes identically (spherical zero), or at exactly one point
/// alpha + J* beta with J* = -F1(z) F2(z)^{-1} (isolated nonreal zero).

#include <optional>
#include <string_view>
#include <vector>

#include "qjensen/semiregular.hpp"
#include "qjensen/slice_poly.hpp"

namespace qjensen {

/// Relative tolerance for classification decisions.
inline constexpr double kEpsClass = 1e-8;

/// Delta_y(x) = N(x - y) = x^2 - t(y) x + n(y).
SlicePolynomial characteristic_poly(const Quaternion& y);

struct ZeroSphere {
  double alpha = 0.0;
  double beta = 0.0;
  /// Exponent of (x - alpha) (real) or of Delta_{alpha + i beta} in N(f).
  int multiplicity_in_normal = 0;
};

/// Spheres of V(N(f)), one entry per root of N(f) in the closed upper half-plane.
/// Throws ZeroPolynomial for f == 0.
std::vector<ZeroSphere> zero_spheres(const SlicePolynomial& f);

enum class ZeroKind { Real, Spherical, IsolatedNonreal };
std::string_view to_string(ZeroKind kind);

struct ZeroRecord {
  ZeroKind kind = ZeroKind::Real;
  /// The zero itself; for spherical zeros the point alpha + i beta.
  Quaternion representative;
  double alpha = 0.0;
  double beta = 0.0;
  int total_multiplicity = 0;
};

std::vector<ZeroRecord> classify_zeros(const SlicePolynomial& f);

/// Largest s with Delta_y^s dividing N(f); 0 when f(y) != 0.
int total_multiplicity(const SlicePolynomial& f, const Quaternion& y);

/// |f| summed against powers of max(1, |x|): the natural size of f(x).
double evaluation_scale(const SlicePolynomial& f, const Quaternion& x);

enum class PoleKind { Real, SphericalUniform, SphericalNonuniform };
std::string_view to_string(PoleKind kind);

struct PoleRecord {
  PoleKind kind = PoleKind::Real;
  /// The real pole, or alpha + i beta on a pole sphere.
  Quaternion representative;
  double alpha = 0.0;
  double beta = 0.0;
  /// Order of a real pole; for spheres the (maximal) order of its points.
  int order = 0;
  /// Twice the maximal order of the points of the sphere; 0 for real poles.
  int spherical_order = 0;
  /// Nonuniform spheres only: the point of lesser order, its order and
  /// its isolated multiplicity.
  std::optional<Quaternion> exceptional_point;
  int exceptional_order = 0;
  int isolated_multiplicity = 0;
};

struct PoleStructure {
  std::vector<PoleRecord> poles;
  /// Half the summed spherical orders over uniform, nonuniform and all spheres.
  double s1 = 0.0;
  double s2 = 0.0;
  double s = 0.0;
};

/// Poles of f in the closed ball of radius r.
PoleStructure pole_structure(const SemiregularFunction& f, double r);

/// All poles of f, without a radius filter.
PoleStructure pole_structure(const SemiregularFunction& f);

/// Zeros of a semiregular function, i.e. zeros of num off the pole spheres.
std::vector<ZeroRecord> classify_zeros(const SemiregularFunction& f);

/// g(x) = -(x - r^2/p)^{-1} (x - p) r/p. Requires 0 < |p| < r.
SemiregularFunction blaschke_real(double p, double r);
/// g(x) = Delta_{r^2 b^{-1}}(x)^{-1} Delta_b(x) r^2 / |b|^2. Requires b nonreal, |b| < r.
SemiregularFunction blaschke_spherical(const Quaternion& b, double r);

struct Regularization {
  /// Slice-preserving, |g| = 1 on the boundary sphere, zeros at the poles of f.
  SemiregularFunction g;
  /// g . f, without poles in the closed ball.
  SemiregularFunction h;
};

/// Throws PoleOnBoundary or PoleOutsideRegion when some pole of f is not
/// strictly inside B_r.
Regularization regularize(const SemiregularFunction& f, double r);

/// Relative band around |x| = r treated as "on the boundary sphere".
inline constexpr double kBoundaryBand = 1e-9;

}  // namespace qjensen
