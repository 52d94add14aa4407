#pragma once

/// Slice-regular polynomials f(x) = sum_m x^m a_m with quaternionic
/// coefficients on the right.
///
/// On every slice C_J the polynomial is induced by its stem
/// F(z) = sum_m z^m a_m = F1(z) + iota F2(z), with
///   F1(z) = sum_m Re(z^m) a_m,   F2(z) = sum_m Im(z^m) a_m,
/// and f(alpha + J beta) = F1(z) + J F2(z) for z = alpha + i beta.
/// The slice product is coefficient convolution with the indeterminate
/// commuting with the coefficients.

#include <complex>
#include <concepts>
#include <span>
#include <vector>

#include "qjensen/quaternion.hpp"

namespace qjensen {

inline constexpr int kMaxDegree = 64;

struct StemValue {
  Quaternion f1;
  Quaternion f2;
};

struct FunctionClassFlags {
  bool is_slice_preserving = false;
  bool is_circular = false;
};

class SlicePolynomial {
 public:
  SlicePolynomial() = default;
  /// Coefficients a_0..a_d. Trailing coefficients below 1e-13 of the largest
  /// coefficient norm are dropped; degree above 64 throws DegreeCapExceeded.
  explicit SlicePolynomial(std::vector<Quaternion> coeffs);
  SlicePolynomial(std::initializer_list<Quaternion> coeffs)
      : SlicePolynomial(std::vector<Quaternion>(coeffs)) {}

  static SlicePolynomial constant(const Quaternion& c) { return SlicePolynomial({c}); }
  static SlicePolynomial identity() { return SlicePolynomial({0.0, 1.0}); }
  /// x - y.
  static SlicePolynomial linear(const Quaternion& y) { return SlicePolynomial({-y, 1.0}); }
  static SlicePolynomial from_real(std::span<const double> coeffs);

  std::span<const Quaternion> coeffs() const { return coeffs_; }
  const Quaternion& operator[](std::size_t m) const { return coeffs_[m]; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Largest coefficient norm.
  double scale() const;

  bool is_slice_preserving() const;
  FunctionClassFlags flags() const;
  /// Real parts of the coefficients; throws InvalidArgument unless slice-preserving.
  std::vector<double> real_coeffs() const;

  SlicePolynomial& operator+=(const SlicePolynomial& o);
  SlicePolynomial& operator-=(const SlicePolynomial& o);

 private:
  std::vector<Quaternion> coeffs_;
};

SlicePolynomial operator+(SlicePolynomial a, const SlicePolynomial& b);
SlicePolynomial operator-(SlicePolynomial a, const SlicePolynomial& b);
/// Slice product (convolution, a before b).
SlicePolynomial operator*(const SlicePolynomial& f, const SlicePolynomial& g);
/// Right scalar multiplication: coefficients a_m q.
SlicePolynomial operator*(const SlicePolynomial& f, const Quaternion& q);
SlicePolynomial operator*(double s, const SlicePolynomial& f);

/// Horner from the left: a_0 + x (a_1 + x (a_2 + ...)).
Quaternion eval(const SlicePolynomial& f, const Quaternion& x);
StemValue stem_components(const SlicePolynomial& f, std::complex<double> z);

SlicePolynomial slice_product(const SlicePolynomial& f, const SlicePolynomial& g);
SlicePolynomial conjugate(const SlicePolynomial& f);
/// N(f) = f . f^c with its (vanishing) imaginary parts removed. Throws
/// NormalNotReal if they exceed 1e-10 of the coefficient scale.
SlicePolynomial normal(const SlicePolynomial& f);
SlicePolynomial slice_derivative(const SlicePolynomial& f);

/// v_s f(x) = (f(x) + f(x^c)) / 2 = F1(z).
Quaternion spherical_value(const SlicePolynomial& f, const Quaternion& x);

/// |Im x| below which the spherical derivative switches to the slice
/// derivative at Re(x).
inline constexpr double kSphericalDerivativeSwitch = 1e-8;

/// f'_s(x) = Im(x)^{-1} (f(x) - f(x^c)) / 2 = F2(z) / beta, extended to the
/// real axis by the slice derivative.
Quaternion spherical_derivative(const SlicePolynomial& f, const Quaternion& x);

/// log|g(x)| for slice-preserving g, computed from the stem as
/// log(G1^2 + G2^2) / 2. Throws LogOfZero when |g(x)| <= eps_zero.
double log_abs(const SlicePolynomial& g, const Quaternion& x);

/// conj(g(x)) for slice-preserving g: the function induced by G1 - iota G2.
Quaternion conjugated_value(const SlicePolynomial& g, const Quaternion& x);

/// Division by a polynomial with real coefficients, f = q . d + rem.
struct DivisionResult {
  SlicePolynomial quotient;
  SlicePolynomial remainder;
};
DivisionResult divide_by_real(const SlicePolynomial& f, const SlicePolynomial& real_divisor);

/// Anything evaluable as a slice function (polynomials and semiregular quotients).
template <class F>
concept SliceFunction = requires(const F& f, const Quaternion& x, std::complex<double> z) {
  { eval(f, x) } -> std::convertible_to<Quaternion>;
  { stem_components(f, z) } -> std::convertible_to<StemValue>;
  { spherical_derivative(f, x) } -> std::convertible_to<Quaternion>;
};

}  // namespace qjensen
