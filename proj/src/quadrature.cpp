#include "qjensen/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "qjensen/error.hpp"
#include "qjensen/zeros_poles.hpp"

namespace qjensen {

namespace {

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

[[noreturn]] void non_finite(const Quaternion& node, std::size_t index) {
  std::ostringstream msg;
  msg << "integrand is not finite at node " << index << ' ' << node
      << " (zero or pole of f on or near the boundary sphere)";
  throw Error(ErrorKind::NonFiniteIntegrand, msg.str());
}

double scale_at(const SlicePolynomial& f, const Quaternion& x) { return evaluation_scale(f, x); }

double scale_at(const SemiregularFunction& f, const Quaternion& x) {
  return evaluation_scale(f.num(), x) / abs(eval(f.den(), x));
}

template <class F>
Quaternion s_map_impl(const F& f, const Quaternion& x) {
  const Quaternion xbar = conj(x);
  const Quaternion sd = spherical_derivative(f, x);
  if (abs(sd) <= 1e-13 * (1.0 + scale_at(f, x))) return xbar;
  const Quaternion fx = eval(f, x);
  if (abs(fx) <= eps_zero(fx) * (1.0 + scale_at(f, x))) {
    std::ostringstream msg;
    msg << "f vanishes at " << x << " outside the degenerate set";
    throw Error(ErrorKind::DegeneratePoint, msg.str());
  }
  return sd * qinv(fx) * xbar * fx * qinv(sd);
}

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  if (n == 1) p0 = 1.0;
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Gauss-Legendre needs n >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

double sphere_measure(double r) { return 2.0 * std::numbers::pi * std::numbers::pi * r * r * r; }

SphereQuadratureRule build_rule(double r, int n) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "sphere radius must be positive");
  if (n < 4) throw Error(ErrorKind::InvalidArgument, "quadrature order must be at least 4");
  const double pi = std::numbers::pi;
  const GaussRule t1 = gauss_legendre(n, 0.0, pi);
  const GaussRule t2 = gauss_legendre(n, 0.0, pi);
  const int nphi = 2 * n;
  const double wphi = 2.0 * pi / nphi;

  SphereQuadratureRule rule;
  rule.radius = r;
  rule.n = n;
  rule.nodes.reserve(static_cast<std::size_t>(n) * n * nphi);
  rule.weights.reserve(rule.nodes.capacity());
  const double r3 = r * r * r;
  for (int a = 0; a < n; ++a) {
    const double s1 = std::sin(t1.nodes[a]);
    const double c1 = std::cos(t1.nodes[a]);
    for (int b = 0; b < n; ++b) {
      const double s2 = std::sin(t2.nodes[b]);
      const double c2 = std::cos(t2.nodes[b]);
      const double w = r3 * t1.weights[a] * s1 * s1 * t2.weights[b] * s2 * wphi;
      for (int c = 0; c < nphi; ++c) {
        const double phi = wphi * c;
        rule.nodes.push_back(
            {r * c1, r * s1 * c2, r * s1 * s2 * std::cos(phi), r * s1 * s2 * std::sin(phi)});
        rule.weights.push_back(w);
      }
    }
  }
  return rule;
}

double integrate(const SphereQuadratureRule& rule, const RealField& u) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = u(rule.nodes[i]);
    if (!std::isfinite(v)) non_finite(rule.nodes[i], i);
    sum.add(rule.weights[i] * v);
  }
  return sum.value();
}

double circular_reduction(double r, int m, const RealField& u) {
  const double pi = std::numbers::pi;
  const GaussRule t = gauss_legendre(m, 0.0, pi);
  CompensatedSum sum;
  for (int i = 0; i < m; ++i) {
    const double s = std::sin(t.nodes[i]);
    const Quaternion x{r * std::cos(t.nodes[i]), r * s, 0.0, 0.0};
    const double v = u(x);
    if (!std::isfinite(v)) non_finite(x, static_cast<std::size_t>(i));
    sum.add(t.weights[i] * v * 4.0 * pi * (r * s) * (r * s) * r);
  }
  return sum.value();
}

Quaternion T_map(const SlicePolynomial& f, const Quaternion& x) {
  const Quaternion fc = eval(conjugate(f), x);
  if (abs(fc) <= eps_zero(fc) * (1.0 + evaluation_scale(f, x))) {
    std::ostringstream msg;
    msg << "f^c vanishes at " << x;
    throw Error(ErrorKind::DegeneratePoint, msg.str());
  }
  return qinv(fc) * x * fc;
}

Quaternion S_map(const SlicePolynomial& f, const Quaternion& x) { return s_map_impl(f, x); }
Quaternion S_map(const SemiregularFunction& f, const Quaternion& x) { return s_map_impl(f, x); }

Quaternion S_map_inverse(const SlicePolynomial& f, const Quaternion& y) {
  const Quaternion sd = spherical_derivative(f, y);
  if (abs(sd) <= 1e-13 * (1.0 + evaluation_scale(f, y))) return conj(y);
  return T_map(f, conj(qinv(sd) * y * sd));
}

// The real denominator commutes with x, so T_f = T_num; only f'_s differs.
Quaternion S_map_inverse(const SemiregularFunction& f, const Quaternion& y) {
  const Quaternion sd = spherical_derivative(f, y);
  if (abs(sd) <= 1e-13 * (1.0 + scale_at(f, y))) return conj(y);
  return T_map(f.num(), conj(qinv(sd) * y * sd));
}

BoundaryMeans boundary_means(const SemiregularFunction& f, const SphereQuadratureRule& rule) {
  const double measure = sphere_measure(rule.radius);
  BoundaryMeans out;
  // Zeros and poles at a node surface as NaN so integrate reports the node.
  auto guarded = [](auto&& fn) {
    return [fn](const Quaternion& x) {
      try {
        return fn(x);
      } catch (const Error&) {
        return std::numeric_limits<double>::quiet_NaN();
      }
    };
  };
  out.mean_log_f =
      integrate(rule, guarded([&](const Quaternion& x) { return std::log(abs(eval(f, x))); })) /
      measure;
  out.mean_log_f_Sf = integrate(rule, guarded([&](const Quaternion& x) {
                        return std::log(abs(eval(f, S_map(f, x))));
                      })) /
                      measure;
  return out;
}

double log_abs_normal(const SemiregularFunction& f, const Quaternion& x) {
  return log_abs(normal(f.num()), x) - 2.0 * log_abs(f.den(), x);
}

}  // namespace qjensen
