#pragma once

/// Central finite-difference realizations of the Cauchy-Riemann-Fueter
/// operators, the spherical Dirac operator Gamma and the (bi)Laplacian of R^4.
/// They serve as independent oracles for the closed-form identities of
/// slice-regular functions. Quaternionic units multiply the partial
/// derivatives from the left.

#include <functional>

#include "qjensen/quaternion.hpp"
#include "qjensen/slice_poly.hpp"

namespace qjensen {

using QuaternionField = std::function<Quaternion(const Quaternion&)>;

struct Stencil4D {
  double h = 1e-3;
  /// 2 or 4.
  int order = 2;
};

/// 1e-3 (1 + |x|) for first and second order operators.
double default_step(const Quaternion& x);
/// 3e-2 (1 + |x|) for the composed bilaplacian stencil.
double bilaplacian_step(const Quaternion& x);

/// d u / d x_axis, axis 0..3 for the components (w, x, y, z).
Quaternion fd_partial(const QuaternionField& u, int axis, const Quaternion& x, const Stencil4D& s);
inline Quaternion fd_partial(const QuaternionField& u, int axis, const Quaternion& x, double h) {
  return fd_partial(u, axis, x, Stencil4D{h, 2});
}

/// dbar_CRF f = d0 f + i d1 f + j d2 f + k d3 f.
Quaternion fd_crf(const QuaternionField& f, const Quaternion& x, double h);
/// d_CRF f = d0 f - i d1 f - j d2 f - k d3 f.
Quaternion fd_crf_conj(const QuaternionField& f, const Quaternion& x, double h);

/// Gamma = -i L23 + j L13 - k L12 with L_ab = x_a d_b - x_b d_a on Im(H).
Quaternion fd_gamma(const QuaternionField& f, const Quaternion& x, double h);

/// Nine-point Laplacian.
Quaternion fd_laplace4(const QuaternionField& u, const Quaternion& x, double h);
/// Laplacian stencil applied to the Laplacian stencil (81 points).
Quaternion fd_bilaplace4(const QuaternionField& u, const Quaternion& x, double h);

/// One Richardson step for an O(h^2) estimate: (4 D(h/2) - D(h)) / 3.
Quaternion richardson(const std::function<Quaternion(double)>& estimate, double h);

/// Lifts a real function to a QuaternionField with zero imaginary part.
QuaternionField real_field(std::function<double(const Quaternion&)> u);

QuaternionField as_field(const SlicePolynomial& f);
/// x -> f'_s(x).
QuaternionField spherical_derivative_field(const SlicePolynomial& f);

/// Closed form of 2 d(f'_s)/dx at a nonreal point: with F' the stem of the
/// slice derivative, F'_2/beta - J (F'_1/beta - F2/beta^2).
Quaternion twice_slice_derivative_of_spherical_derivative(const SlicePolynomial& f,
                                                          const Quaternion& x);

}  // namespace qjensen
