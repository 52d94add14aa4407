#pragma once

/// Both sides of the four-dimensional Jensen formula for slice-regular
/// polynomials and semiregular functions on the ball B_r centred at 0:
///
///   log|f(0)| + r^2/4 Re((f(0)^{-1} f'(0))^2) - r^2/4 Re(f(0)^{-1} f''(0))
///     = 1/2 mean log|f| + 1/2 mean log|f o S_f| - zero_sum + pole_sum
///
/// Means are over |x| = r. Nonreal zeros enter with half their total
/// multiplicity; see zero_weight().

#include <string>
#include <vector>

#include "qjensen/quadrature.hpp"
#include "qjensen/semiregular.hpp"
#include "qjensen/zeros_poles.hpp"

namespace qjensen {

/// Delta_4 log|N(f)| at 0 in closed form:
/// -4 Re(f(0)^{-1} f''(0)) + 4 Re((f(0)^{-1} f'(0))^2).
/// Expanding N(f) = f f^c to second order gives the cross term through
/// Re(f(0) conj f'(0)) = Re(f(0)^{-1} f'(0)) |f(0)|^2; conjugating f'(0)
/// inside the square instead is only equivalent when f(0) and f'(0) commute.
/// Throws ZeroAtOrigin, or PoleAtOrigin for rational input.
double delta4_logNf_at0(const SemiregularFunction& f);

struct JensenLhs {
  double log_f0 = 0.0;
  double first_derivative_term = 0.0;
  double second_derivative_term = 0.0;
  double total() const { return log_f0 + first_derivative_term + second_derivative_term; }
};

JensenLhs jensen_lhs_terms(const SemiregularFunction& f, double r);
double jensen_lhs(const SemiregularFunction& f, double r);

/// log(r/|rk|) + (rk^4 - r^4) / (4 r^2 rk^2).
double real_term(double rk, double r);
/// 2 log(r/|a|) + (|a|^4 - r^4) / (4 r^2 |a|^4) (t(a)^2 - 2|a|^2). Depends only
/// on |a| and t(a), hence only on the sphere of a.
double spherical_term(const Quaternion& a, double r);

/// Total multiplicity for real zeros, half of it for nonreal ones: a nonreal
/// zero of multiplicity m contributes m/2 spheres' worth to log|N(f)|.
double zero_weight(const ZeroRecord& z);
/// Order for real poles, half the spherical order for pole spheres.
double pole_weight(const PoleRecord& p);

double zero_term(const ZeroRecord& z, double r);
double pole_term(const PoleRecord& p, double r);

/// Throws ZeroOnBoundary for |a| >= r (1 - 1e-9) and ZeroAtOrigin for a = 0.
double zero_sum(const std::vector<ZeroRecord>& zeros, double r);
/// Throws PoleOnBoundary / PoleAtOrigin likewise.
double pole_sum(const std::vector<PoleRecord>& poles, double r);

struct TermRecord {
  std::string kind;
  Quaternion point;
  double weight = 0.0;
  double term = 0.0;  // weight * unweighted term
};

/// Contribution of one nonuniform pole sphere: its b-terms (added) and the
/// a-term of its exceptional point (subtracted).
struct SphereBalance {
  double alpha = 0.0;
  double beta = 0.0;
  double b_terms = 0.0;
  double a_terms = 0.0;
  double net() const { return b_terms - a_terms; }
};

struct JensenReport {
  double r = 0.0;
  int n = 0;
  JensenLhs lhs_terms;
  double mean_log_f = 0.0;
  double mean_log_f_Sf = 0.0;
  double zero_sum = 0.0;
  double pole_sum = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::vector<TermRecord> zeros;
  std::vector<TermRecord> poles;
  std::vector<SphereBalance> nonuniform_spheres;
  /// Zeros and poles outside the closed ball, which do not enter the formula.
  int zeros_outside = 0;
  int poles_outside = 0;
  std::vector<std::string> notes;
};

/// Smallest | |z| - r | / r over zeros and poles of f; +inf if there are none.
double boundary_clearance(const SemiregularFunction& f, double r);

/// Any zero or pole sphere within kNearBoundary r of |x| = r lifts the order
/// to at least kEscalatedOrder.
inline constexpr double kNearBoundary = 0.02;
inline constexpr int kEscalatedOrder = 128;
inline constexpr int kMaxOrder = 256;

/// Quadrature order for a 1e-6 residual. Nonreal zero and pole spheres at
/// radius t r make the integrand nearly singular along the equator t1 = pi/2
/// of the rule; the error then decays like exp(-1.4 n |log t|), so
/// n = 10 / |log t| (rounded up to a multiple of 16, at most kMaxOrder).
/// Real zeros sit on the rule's axis, where the nodes cluster, and need
/// nothing beyond the near-boundary floor. Never returns less than n.
int recommended_order(const SemiregularFunction& f, double r, int n);

/// Checks the hypotheses (f(0) neither zero nor pole, no zero or pole on
/// |x| = r; HypothesisViolation otherwise) and assembles both sides with an
/// n x n x 2n rule.
JensenReport jensen_check(const SemiregularFunction& f, double r, int n);

std::string to_json(const JensenReport& rep);
std::string csv_header();
std::string to_csv_row(const std::string& name, const JensenReport& rep);
std::string to_text(const JensenReport& rep);

/// -4 sum (p^4 - r^4) / (r^4 p^2): Delta_4 log|N(g)| at 0 for the product g of
/// real Blaschke factors at the given poles.
double blaschke_laplacian_shift(const std::vector<double>& real_poles, double r);

}  // namespace qjensen
