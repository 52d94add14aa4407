#include "qjensen/semiregular.hpp"

#include <cmath>

#include "qjensen/error.hpp"
#include "qjensen/roots.hpp"

namespace qjensen {

namespace {

// True when the real factor divides f; the quotient is written on success.
bool divides(const SlicePolynomial& f, const SlicePolynomial& factor, SlicePolynomial& quotient) {
  const auto [q, rem] = divide_by_real(f, factor);
  const std::vector<double> d = factor.real_coeffs();
  const double rho =
      d.size() == 2 ? std::max(1.0, std::abs(d[0] / d[1])) : std::max(1.0, std::sqrt(std::abs(d[0] / d[2])));
  auto weighted = [rho](const SlicePolynomial& p) {
    double s = 0.0;
    double pw = 1.0;
    for (const auto& a : p.coeffs()) {
      s += abs(a) * pw;
      pw *= rho;
    }
    return s;
  };
  if (weighted(rem) > 1e-9 * weighted(f)) return false;
  quotient = q;
  return true;
}

}  // namespace

SemiregularFunction::SemiregularFunction(SlicePolynomial den, SlicePolynomial num)
    : den_(std::move(den)), num_(std::move(num)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is the zero polynomial");
  if (!den_.is_slice_preserving()) {
    throw Error(ErrorKind::InvalidDenominator, "denominator must have real coefficients");
  }
  den_ = SlicePolynomial::from_real(den_.real_coeffs());
  if (den_.degree() == 0 || num_.is_zero()) return;

  for (const RealFactor& rf : real_factorization(den_.real_coeffs())) {
    const std::vector<double> fc = factor_coeffs(rf);
    const SlicePolynomial factor = SlicePolynomial::from_real(fc);
    for (int k = 0; k < rf.multiplicity; ++k) {
      SlicePolynomial num_q;
      SlicePolynomial den_q;
      if (!divides(num_, factor, num_q) || !divides(den_, factor, den_q)) break;
      num_ = num_q;
      den_ = SlicePolynomial::from_real(den_q.real_coeffs());
    }
  }
}

Quaternion eval(const SemiregularFunction& f, const Quaternion& x) {
  return qinv(eval(f.den(), x)) * eval(f.num(), x);
}

StemValue stem_components(const SemiregularFunction& f, std::complex<double> z) {
  const StemValue d = stem_components(f.den(), z);
  const StemValue n = stem_components(f.num(), z);
  const double d1 = d.f1.w;
  const double d2 = d.f2.w;
  const double m2 = d1 * d1 + d2 * d2;
  if (m2 == 0.0) throw Error(ErrorKind::ZeroDivision, "stem evaluated at a pole");
  return {(d1 * n.f1 + d2 * n.f2) / m2, (d1 * n.f2 - d2 * n.f1) / m2};
}

Quaternion spherical_derivative(const SemiregularFunction& f, const Quaternion& x) {
  const double beta = abs_im(x);
  if (beta < kSphericalDerivativeSwitch) {
    const Quaternion a(x.w);
    const Quaternion d = eval(f.den(), a);
    const Quaternion value = qinv(d) * eval(f.num(), a);
    return qinv(d) * (eval(slice_derivative(f.num()), a) - eval(slice_derivative(f.den()), a) * value);
  }
  return stem_components(f, {x.w, beta}).f2 / beta;
}

SemiregularFunction slice_product(const SemiregularFunction& f, const SemiregularFunction& g) {
  return {slice_product(f.den(), g.den()), slice_product(f.num(), g.num())};
}

SemiregularFunction conjugate(const SemiregularFunction& f) { return {f.den(), conjugate(f.num())}; }

std::vector<Quaternion> taylor_at_zero(const SemiregularFunction& f, int count) {
  const auto d = f.den().coeffs();
  const auto n = f.num().coeffs();
  if (std::abs(d[0].w) <= 1e-13 * f.den().scale()) {
    throw Error(ErrorKind::PoleAtOrigin, "denominator vanishes at 0");
  }
  std::vector<Quaternion> c(count);
  for (int m = 0; m < count; ++m) {
    Quaternion acc = m < static_cast<int>(n.size()) ? n[m] : Quaternion{};
    for (int k = 1; k <= m && k < static_cast<int>(d.size()); ++k) acc -= d[k].w * c[m - k];
    c[m] = acc / d[0].w;
  }
  return c;
}

}  // namespace qjensen
