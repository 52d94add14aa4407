#pragma once

/// Roots and factor multiplicities of polynomials with real coefficients.
///
/// Roots come from the eigenvalues of the companion matrix. Eigenvalues of an
/// m-fold root scatter on a circle of radius ~ (machine eps)^(1/m), so they are
/// grouped by single linkage within kClusterRadius (1 + |root|); the cluster
/// mean is accurate to roundoff and is polished by Newton on the
/// (m-1)-th derivative. Multiplicities are then confirmed by repeated division.
/// A root of multiplicity m scatters by ~ eps^(1/m), which exceeds the base
/// radius from m = 6 on, so radii from kMaxClusterRadius down to kClusterRadius
/// (factor 3) are tried and the coarsest clustering in which every centre
/// divides p exactly cluster-size times is kept; otherwise the base one.

#include <complex>
#include <span>
#include <vector>

namespace qjensen {

/// Relative merge radius for eigenvalue clusters. Distinct roots closer than
/// this are reported as one multiple root.
inline constexpr double kClusterRadius = 1e-3;
inline constexpr double kMaxClusterRadius = 2.7e-2;

/// Coefficients are ascending (c[0] + c[1] x + ...). Leading zeros are ignored.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

/// A root in the closed upper half-plane together with the exponent of its
/// irreducible real factor: (x - alpha) when beta = 0, x^2 - 2 alpha x +
/// alpha^2 + beta^2 otherwise.
struct RealFactor {
  double alpha = 0.0;
  double beta = 0.0;
  int multiplicity = 0;
};

std::vector<RealFactor> real_factorization(std::span<const double> coeffs);

/// Largest s such that factor^s divides p, decided by remainders below
/// rel_tol of the evaluation scale of p near the factor's roots.
int divisibility_exponent(std::span<const double> p, std::span<const double> factor,
                          double rel_tol = 1e-10);

/// The irreducible real factor of a RealFactor, ascending coefficients.
std::vector<double> factor_coeffs(const RealFactor& f);

}  // namespace qjensen
