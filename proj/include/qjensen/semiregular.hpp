#pragma once

/// Semiregular functions represented as f = den^{-1} num with den a
/// polynomial with real coefficients. Real-coefficient polynomials are central
/// for the slice product, so f(x) = den(x)^{-1} num(x) pointwise and the stem
/// of f is D^{-1} N in H (x) C.

#include <vector>

#include "qjensen/slice_poly.hpp"

namespace qjensen {

class SemiregularFunction {
 public:
  SemiregularFunction() : den_(SlicePolynomial::constant(1.0)) {}
  /// Throws ZeroDenominator for den == 0 and InvalidDenominator if den has
  /// non-real coefficients. Real linear and quadratic factors of den that also
  /// divide num are cancelled.
  SemiregularFunction(SlicePolynomial den, SlicePolynomial num);
  // Implicit: every polynomial is a semiregular function with den = 1.
  SemiregularFunction(SlicePolynomial poly)
      : den_(SlicePolynomial::constant(1.0)), num_(std::move(poly)) {}

  const SlicePolynomial& den() const { return den_; }
  const SlicePolynomial& num() const { return num_; }
  bool has_poles() const { return den_.degree() > 0; }

 private:
  SlicePolynomial den_;
  SlicePolynomial num_;
};

/// Throws ZeroDivision at a pole.
Quaternion eval(const SemiregularFunction& f, const Quaternion& x);
StemValue stem_components(const SemiregularFunction& f, std::complex<double> z);
Quaternion spherical_derivative(const SemiregularFunction& f, const Quaternion& x);

/// (d1^{-1} n1) . (d2^{-1} n2) = (d1 d2)^{-1} (n1 . n2).
SemiregularFunction slice_product(const SemiregularFunction& f, const SemiregularFunction& g);
SemiregularFunction conjugate(const SemiregularFunction& f);

/// First `count` coefficients c_m of the expansion f = sum x^m c_m at 0.
/// Throws PoleAtOrigin when den(0) = 0.
std::vector<Quaternion> taylor_at_zero(const SemiregularFunction& f, int count);

}  // namespace qjensen
