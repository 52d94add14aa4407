#pragma once

/// Quaternion arithmetic and the slice embedding x = alpha + J beta.
///
/// A quaternion q = w + x i + y j + z k. The slice C_J = <1, J> is a copy of
/// the complex plane inside H for every imaginary unit J (J^2 = -1); every
/// quaternion lies on at least one slice.

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

namespace qjensen {

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  // Implicit from a real scalar: real numbers are central in H.
  constexpr Quaternion(double real) : w(real) {}

  static constexpr Quaternion from_array(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }
  constexpr std::array<double, 4> to_array() const { return {w, x, y, z}; }

  constexpr double operator[](int axis) const {
    return axis == 0 ? w : axis == 1 ? x : axis == 2 ? y : z;
  }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s;
    x /= s;
    y /= s;
    z /= s;
    return *this;
  }

  constexpr bool operator==(const Quaternion&) const = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

// Hamilton product; i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion qmul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double re(const Quaternion& q) { return q.w; }
constexpr Quaternion im(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }
/// Squared norm n(q) = q conj(q).
constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
/// Trace t(q) = q + conj(q) = 2 Re(q).
constexpr double trace(const Quaternion& q) { return 2.0 * q.w; }
inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }
inline double abs_im(const Quaternion& q) { return std::hypot(q.x, q.y, q.z); }

/// Scale-aware zero threshold 1e-13 (1 + |q|).
inline double eps_zero(const Quaternion& q) { return 1e-13 * (1.0 + abs(q)); }
inline constexpr double kEpsUnit = 1e-10;
inline constexpr double kUnitRenormalizeTol = 1e-6;

/// conj(q) / n(q). Throws ZeroDivision when |q| <= eps_zero(q).
Quaternion qinv(const Quaternion& q);

/// Element J of the sphere S = {J : J^2 = -1}.
class ImaginaryUnit {
 public:
  /// Validates Re(J) = 0 and |J| = 1. Inputs within 1e-6 of the sphere are
  /// renormalized; anything further away throws InvalidUnit.
  explicit ImaginaryUnit(const Quaternion& j);

  static ImaginaryUnit i() { return ImaginaryUnit(kI); }

  const Quaternion& value() const { return j_; }
  operator const Quaternion&() const { return j_; }

 private:
  Quaternion j_;
};

/// x = alpha + J beta with its complex shadow z = alpha + i beta.
struct SlicePoint {
  double alpha = 0.0;
  double beta = 0.0;
  ImaginaryUnit unit = ImaginaryUnit::i();
  // False on the real axis, where J is arbitrary and reported as i.
  bool unit_defined = true;

  std::complex<double> shadow() const { return {alpha, beta}; }
};

/// Phi_J(alpha + i beta) = alpha + J beta. Requires beta >= 0.
Quaternion slice_embed(double alpha, double beta, const ImaginaryUnit& unit);
Quaternion slice_embed(std::complex<double> z, const ImaginaryUnit& unit);

SlicePoint decompose(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qjensen
