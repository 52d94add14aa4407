#pragma once

/// Surface integration over the 3-sphere |x| = r in R^4 = H, and the
/// sphere-preserving maps T_f and S_f used to split log|N(f)| on it.
///
/// Nodes use hyperspherical angles
///   x = r (cos t1, sin t1 cos t2, sin t1 sin t2 cos phi, sin t1 sin t2 sin phi)
/// with measure r^3 sin^2 t1 sin t2 dt1 dt2 dphi; Gauss-Legendre in t1 and t2
/// and the uniform rule in phi. Sums are compensated and run in node order,
/// so results are reproducible bit-for-bit for a given (r, n).

#include <functional>
#include <vector>

#include "qjensen/semiregular.hpp"
#include "qjensen/slice_poly.hpp"

namespace qjensen {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre on [a, b].
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

struct SphereQuadratureRule {
  double radius = 0.0;
  int n = 0;
  std::vector<Quaternion> nodes;
  std::vector<double> weights;

  int n_theta1() const { return n; }
  int n_theta2() const { return n; }
  int n_phi() const { return 2 * n; }
};

/// |S^3_r| = 2 pi^2 r^3.
double sphere_measure(double r);

/// n x n x 2n product rule. Requires r > 0 and n >= 4.
SphereQuadratureRule build_rule(double r, int n);

using RealField = std::function<double(const Quaternion&)>;

/// Sum of w_i u(x_i); throws NonFiniteIntegrand naming the first bad node.
double integrate(const SphereQuadratureRule& rule, const RealField& u);

/// Integral over |x| = r of a function constant on every sphere alpha + beta S,
/// reduced to int_0^pi u(r cos t + i r sin t) 4 pi (r sin t)^2 r dt with m
/// Gauss-Legendre points.
double circular_reduction(double r, int m, const RealField& u);

/// T_f(x) = f^c(x)^{-1} x f^c(x). Throws DegeneratePoint when f^c(x) = 0.
Quaternion T_map(const SlicePolynomial& f, const Quaternion& x);

/// S_f(x) = f'_s(x) f(x)^{-1} conj(x) f(x) f'_s(x)^{-1}, or conj(x) where
/// f'_s(x) vanishes. Throws DegeneratePoint when f(x) = 0 off D_f.
Quaternion S_map(const SlicePolynomial& f, const Quaternion& x);
Quaternion S_map(const SemiregularFunction& f, const Quaternion& x);

/// y -> T_f(conj(f'_s(y)^{-1} y f'_s(y))), the inverse of S_f off D_f.
Quaternion S_map_inverse(const SlicePolynomial& f, const Quaternion& y);
Quaternion S_map_inverse(const SemiregularFunction& f, const Quaternion& y);

struct BoundaryMeans {
  /// (1/|S_r|) int log|f|
  double mean_log_f = 0.0;
  /// (1/|S_r|) int log|f o S_f|
  double mean_log_f_Sf = 0.0;
};

/// Raw means, without the 1/2 of the Jensen formula.
BoundaryMeans boundary_means(const SemiregularFunction& f, const SphereQuadratureRule& rule);

/// log|N(f)(x)| for a semiregular f = den^{-1} num, i.e.
/// log|N(num)(x)| - 2 log|den(x)|.
double log_abs_normal(const SemiregularFunction& f, const Quaternion& x);

}  // namespace qjensen
