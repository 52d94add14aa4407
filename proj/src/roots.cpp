#include "qjensen/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "qjensen/error.hpp"

namespace qjensen {

namespace {

using cd = std::complex<double>;

std::vector<double> trimmed(std::span<const double> c) {
  std::vector<double> out(c.begin(), c.end());
  while (!out.empty() && out.back() == 0.0) out.pop_back();
  return out;
}

// Value of the k-th derivative of p at z.
cd derivative_at(const std::vector<double>& p, int k, cd z) {
  const int n = static_cast<int>(p.size()) - 1;
  cd acc = 0.0;
  for (int m = n; m >= k; --m) {
    double falling = 1.0;
    for (int t = 0; t < k; ++t) falling *= m - t;
    acc = acc * z + falling * p[m];
  }
  return acc;
}

cd polish(const std::vector<double>& p, int multiplicity, cd z, double radius) {
  const int k = multiplicity - 1;
  cd x = z;
  for (int it = 0; it < 20; ++it) {
    const cd d = derivative_at(p, k + 1, x);
    if (std::abs(d) == 0.0) break;
    const cd step = derivative_at(p, k, x) / d;
    x -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
  }
  // A polished point that wandered off the cluster is not trusted.
  return std::abs(x - z) <= radius ? x : z;
}

std::vector<double> divide_exact(const std::vector<double>& p, const std::vector<double>& d,
                                 std::vector<double>& rem) {
  const int np = static_cast<int>(p.size()) - 1;
  const int nd = static_cast<int>(d.size()) - 1;
  rem = p;
  if (np < nd) return {};
  std::vector<double> q(np - nd + 1, 0.0);
  for (int k = np - nd; k >= 0; --k) {
    const double c = rem[k + nd] / d.back();
    q[k] = c;
    for (int m = 0; m <= nd; ++m) rem[k + m] -= c * d[m];
  }
  rem.resize(nd);
  return q;
}

}  // namespace

std::vector<cd> polynomial_roots(std::span<const double> coeffs) {
  const std::vector<double> p = trimmed(coeffs);
  const int n = static_cast<int>(p.size()) - 1;
  if (n < 0) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  if (n == 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<cd> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

namespace {

// Single-linkage clusters of the roots within rho (1 + |z|), via union-find.
std::vector<std::vector<cd>> cluster(const std::vector<cd>& roots, double rho) {
  const int n = static_cast<int>(roots.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double radius = rho * (1.0 + std::max(std::abs(roots[a]), std::abs(roots[b])));
      if (std::abs(roots[a] - roots[b]) <= radius) parent[find(a)] = find(b);
    }
  }
  std::vector<std::vector<cd>> clusters;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(clusters.size());
      clusters.emplace_back();
    }
    clusters[slot[root]].push_back(roots[i]);
  }
  return clusters;
}

// Factors from the clusters; `consistent` is false unless every polished
// centre divides p exactly as often as its cluster has members.
std::vector<RealFactor> factors(const std::vector<double>& p, const std::vector<std::vector<cd>>& clusters,
                                double rho, bool& consistent) {
  consistent = true;
  std::vector<RealFactor> out;
  for (const auto& members : clusters) {
    const cd mean = std::accumulate(members.begin(), members.end(), cd{}) /
                    static_cast<double>(members.size());
    const double radius = rho * (1.0 + std::abs(mean));
    if (mean.imag() < -radius) continue;  // conjugate of an upper cluster
    const int size = static_cast<int>(members.size());
    RealFactor f;
    if (std::abs(mean.imag()) <= radius) {
      const cd c = polish(p, size, cd(mean.real(), 0.0), radius);
      f.alpha = c.real();
      f.beta = 0.0;
    } else {
      const cd c = polish(p, size, mean, radius);
      f.alpha = c.real();
      f.beta = std::abs(c.imag());
    }
    const int exact = divisibility_exponent(p, factor_coeffs(f));
    if (exact != size) consistent = false;
    f.multiplicity = exact > 0 ? exact : size;
    out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<RealFactor> real_factorization(std::span<const double> coeffs) {
  const std::vector<double> p = trimmed(coeffs);
  const std::vector<cd> roots = polynomial_roots(p);

  // Coarsest consistent clustering: merging distinct roots leaves a centre
  // that divides p too rarely, splitting a multiple root one that divides it
  // too often.
  bool consistent = false;
  std::vector<RealFactor> out;
  for (double rho = kMaxClusterRadius; rho >= kClusterRadius && !consistent; rho /= 3.0) {
    out = factors(p, cluster(roots, rho), rho, consistent);
  }
  if (!consistent) out = factors(p, cluster(roots, kClusterRadius), kClusterRadius, consistent);
  std::sort(out.begin(), out.end(), [](const RealFactor& a, const RealFactor& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
  });
  return out;
}

int divisibility_exponent(std::span<const double> p_in, std::span<const double> factor,
                          double rel_tol) {
  std::vector<double> p = trimmed(p_in);
  const std::vector<double> d = trimmed(factor);
  if (d.size() < 2) return 0;
  // Evaluation scale near the factor's roots: sum |p_m| rho^m.
  double rho = 1.0;
  if (d.size() == 2) {
    rho = std::max(1.0, std::abs(d[0] / d[1]));
  } else {
    rho = std::max(1.0, std::sqrt(std::abs(d[0] / d[2])));
  }
  int s = 0;
  while (p.size() >= d.size()) {
    double scale = 0.0;
    double pw = 1.0;
    for (double c : p) {
      scale += std::abs(c) * pw;
      pw *= rho;
    }
    std::vector<double> rem;
    std::vector<double> q = divide_exact(p, d, rem);
    double rem_size = 0.0;
    pw = 1.0;
    for (double c : rem) {
      rem_size += std::abs(c) * pw;
      pw *= rho;
    }
    if (rem_size > rel_tol * scale) break;
    ++s;
    p = std::move(q);
  }
  return s;
}

std::vector<double> factor_coeffs(const RealFactor& f) {
  if (f.beta == 0.0) return {-f.alpha, 1.0};
  return {f.alpha * f.alpha + f.beta * f.beta, -2.0 * f.alpha, 1.0};
}

}  // namespace qjensen
