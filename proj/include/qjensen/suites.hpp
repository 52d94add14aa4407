#pragma once

/// Seeded finite-difference verification suites for the differential
/// identities of slice-regular polynomials. Each row compares an FD operator
/// against the closed form at one (polynomial, point) pair, at step h and 2h.
///
///   crf                dbar f = -2 f'_s
///   crf-conj           d f - 2 f' = 2 f'_s,  d(f'_s) = 2 d(f'_s)/dx
///   gamma              Gamma f = 2 Im(x) f'_s
///   harmonic-sd        Delta f'_s = 0
///   biharmonic         Delta^2 f = 0,  dbar Delta f = 0
///   bilaplacian-logN   Delta^2 log|N(f)| = 0, zeros of f in 3 <= |y| <= 4.5
///   delta4-at-0        Delta log|N(f)| at 0 against its closed form
///
/// First-order suites run at h = 1e-3; suites involving three or more
/// derivatives report raw residuals at 6e-2 and 3e-2 for the convergence
/// ratio and a Richardson-extrapolated terminal residual at 3e-2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qjensen/quaternion.hpp"

namespace qjensen {

struct ResidualRow {
  std::string identity;
  int sample = 0;
  Quaternion point;
  double h = 0.0;
  /// Raw FD residual at 2h and at h.
  double residual_coarse = 0.0;
  double residual_fine = 0.0;
  /// residual_coarse / residual_fine; 0 when not measured.
  double ratio = 0.0;
  /// 2, or 0 when the row is an agreement check only.
  int expected_order = 2;
  /// Residual compared against the tolerance (Richardson for composed stencils).
  double terminal = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ResidualRow> rows;
  bool pass() const;
};

std::vector<std::string> suite_names();

/// Runs `count` seeded samples. `h` overrides the default terminal step.
/// Throws InvalidArgument for unknown suite names.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count = 20,
                      std::optional<double> h = std::nullopt);

/// Acceptance band for the convergence ratio of an O(h^2) residual.
inline constexpr double kRatioLow = 3.5;
inline constexpr double kRatioHigh = 4.5;

std::string to_text(const SuiteResult& s);
std::string to_json(const SuiteResult& s);
std::string to_csv(const SuiteResult& s);

}  // namespace qjensen
