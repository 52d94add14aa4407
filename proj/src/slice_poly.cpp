#include "qjensen/slice_poly.hpp"

#include <algorithm>
#include <sstream>

#include "qjensen/error.hpp"

namespace qjensen {

namespace {

// Relative threshold for "this coefficient is zero" in degree normalization.
constexpr double kCoeffZeroRel = 1e-13;

double max_norm(std::span<const Quaternion> c) {
  double m = 0.0;
  for (const auto& q : c) m = std::max(m, abs(q));
  return m;
}

}  // namespace

SlicePolynomial::SlicePolynomial(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
  const double scale = max_norm(coeffs_);
  while (!coeffs_.empty() && (abs(coeffs_.back()) <= kCoeffZeroRel * scale || scale == 0.0)) {
    coeffs_.pop_back();
  }
  if (degree() > kMaxDegree) {
    std::ostringstream msg;
    msg << "degree " << degree() << " exceeds the cap " << kMaxDegree;
    throw Error(ErrorKind::DegreeCapExceeded, msg.str());
  }
}

SlicePolynomial SlicePolynomial::from_real(std::span<const double> coeffs) {
  return SlicePolynomial(std::vector<Quaternion>(coeffs.begin(), coeffs.end()));
}

double SlicePolynomial::scale() const { return max_norm(coeffs_); }

bool SlicePolynomial::is_slice_preserving() const {
  const double tol = kCoeffZeroRel * scale();
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [tol](const Quaternion& a) { return abs_im(a) <= tol; });
}

FunctionClassFlags SlicePolynomial::flags() const {
  // F2 vanishes identically exactly when there is no z-dependence.
  return {is_slice_preserving(), degree() <= 0};
}

std::vector<double> SlicePolynomial::real_coeffs() const {
  if (!is_slice_preserving()) {
    throw Error(ErrorKind::InvalidArgument, "polynomial has non-real coefficients");
  }
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a.w);
  return out;
}

SlicePolynomial& SlicePolynomial::operator+=(const SlicePolynomial& o) {
  std::vector<Quaternion> c = coeffs_;
  if (c.size() < o.coeffs_.size()) c.resize(o.coeffs_.size());
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m) c[m] += o.coeffs_[m];
  *this = SlicePolynomial(std::move(c));
  return *this;
}

SlicePolynomial& SlicePolynomial::operator-=(const SlicePolynomial& o) {
  std::vector<Quaternion> c = coeffs_;
  if (c.size() < o.coeffs_.size()) c.resize(o.coeffs_.size());
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m) c[m] -= o.coeffs_[m];
  *this = SlicePolynomial(std::move(c));
  return *this;
}

SlicePolynomial operator+(SlicePolynomial a, const SlicePolynomial& b) { return a += b; }
SlicePolynomial operator-(SlicePolynomial a, const SlicePolynomial& b) { return a -= b; }

SlicePolynomial operator*(const SlicePolynomial& f, const SlicePolynomial& g) {
  return slice_product(f, g);
}

SlicePolynomial operator*(const SlicePolynomial& f, const Quaternion& q) {
  std::vector<Quaternion> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : c) a = a * q;
  return SlicePolynomial(std::move(c));
}

SlicePolynomial operator*(double s, const SlicePolynomial& f) { return f * Quaternion(s); }

Quaternion eval(const SlicePolynomial& f, const Quaternion& x) {
  const auto c = f.coeffs();
  if (c.empty()) return {};
  Quaternion acc = c.back();
  for (std::size_t m = c.size() - 1; m-- > 0;) acc = x * acc + c[m];
  return acc;
}

StemValue stem_components(const SlicePolynomial& f, std::complex<double> z) {
  StemValue s;
  std::complex<double> power = 1.0;
  for (const auto& a : f.coeffs()) {
    s.f1 += power.real() * a;
    s.f2 += power.imag() * a;
    power *= z;
  }
  return s;
}

SlicePolynomial slice_product(const SlicePolynomial& f, const SlicePolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t m = 0; m < a.size(); ++m) {
    for (std::size_t k = 0; k < b.size(); ++k) c[m + k] += a[m] * b[k];
  }
  return SlicePolynomial(std::move(c));
}

SlicePolynomial conjugate(const SlicePolynomial& f) {
  std::vector<Quaternion> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : c) a = qjensen::conj(a);
  return SlicePolynomial(std::move(c));
}

SlicePolynomial normal(const SlicePolynomial& f) {
  const SlicePolynomial n = slice_product(f, conjugate(f));
  const double tol = 1e-10 * std::max(n.scale(), f.scale() * f.scale());
  std::vector<Quaternion> c;
  c.reserve(n.coeffs().size());
  for (const auto& a : n.coeffs()) {
    if (abs_im(a) > tol) {
      std::ostringstream msg;
      msg << "coefficient " << a << " of N(f) is not real";
      throw Error(ErrorKind::NormalNotReal, msg.str());
    }
    c.emplace_back(a.w);
  }
  return SlicePolynomial(std::move(c));
}

SlicePolynomial slice_derivative(const SlicePolynomial& f) {
  const auto a = f.coeffs();
  if (a.size() <= 1) return {};
  std::vector<Quaternion> c(a.size() - 1);
  for (std::size_t m = 1; m < a.size(); ++m) c[m - 1] = static_cast<double>(m) * a[m];
  return SlicePolynomial(std::move(c));
}

Quaternion spherical_value(const SlicePolynomial& f, const Quaternion& x) {
  return stem_components(f, {x.w, abs_im(x)}).f1;
}

Quaternion spherical_derivative(const SlicePolynomial& f, const Quaternion& x) {
  const double beta = abs_im(x);
  if (beta < kSphericalDerivativeSwitch) return eval(slice_derivative(f), Quaternion(x.w));
  return stem_components(f, {x.w, beta}).f2 / beta;
}

double log_abs(const SlicePolynomial& g, const Quaternion& x) {
  if (!g.is_slice_preserving()) {
    throw Error(ErrorKind::InvalidArgument, "log_abs requires a slice-preserving function");
  }
  const StemValue s = stem_components(g, {x.w, abs_im(x)});
  const double m2 = s.f1.w * s.f1.w + s.f2.w * s.f2.w;
  if (std::sqrt(m2) <= eps_zero(Quaternion(std::sqrt(m2)))) {
    std::ostringstream msg;
    msg << "g vanishes at " << x;
    throw Error(ErrorKind::LogOfZero, msg.str());
  }
  return 0.5 * std::log(m2);
}

Quaternion conjugated_value(const SlicePolynomial& g, const Quaternion& x) {
  if (!g.is_slice_preserving()) {
    throw Error(ErrorKind::InvalidArgument, "conjugated_value requires a slice-preserving function");
  }
  const SlicePoint p = decompose(x);
  const StemValue s = stem_components(g, p.shadow());
  return s.f1 - p.unit.value() * s.f2;
}

DivisionResult divide_by_real(const SlicePolynomial& f, const SlicePolynomial& real_divisor) {
  const std::vector<double> d = real_divisor.real_coeffs();
  if (d.empty()) throw Error(ErrorKind::ZeroDivision, "division by the zero polynomial");
  std::vector<Quaternion> rem(f.coeffs().begin(), f.coeffs().end());
  const int dd = static_cast<int>(d.size()) - 1;
  const int df = f.degree();
  if (df < dd) return {SlicePolynomial{}, f};
  std::vector<Quaternion> quot(df - dd + 1);
  for (int k = df - dd; k >= 0; --k) {
    const Quaternion q = rem[k + dd] / d.back();
    quot[k] = q;
    for (int m = 0; m <= dd; ++m) rem[k + m] -= d[m] * q;
  }
  rem.resize(dd);
  return {SlicePolynomial(std::move(quot)), SlicePolynomial(std::move(rem))};
}

}  // namespace qjensen
