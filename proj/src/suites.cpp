#include "qjensen/suites.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qjensen/diffops.hpp"
#include "qjensen/error.hpp"
#include "qjensen/jensen.hpp"
#include "qjensen/slice_poly.hpp"

namespace qjensen {

namespace {

constexpr double kFirstOrderStep = 1e-3;
constexpr double kComposedStep = 3e-2;
constexpr double kFirstOrderTol = 1e-6;
constexpr double kComposedTol = 1e-3;
constexpr double kDelta4Tol = 1e-4;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

  Quaternion cube(double half) {
    return {uniform(-half, half), uniform(-half, half), uniform(-half, half), uniform(-half, half)};
  }

  Quaternion direction() {
    for (;;) {
      const Quaternion q = cube(1.0);
      const double n = abs(q);
      if (n > 0.1 && n <= 1.0) return q / n;
    }
  }

  // Uniform in the ball |x| <= radius, away from the real axis.
  Quaternion point(double radius, double min_im) {
    for (;;) {
      const Quaternion q = cube(radius);
      if (abs(q) <= radius && abs_im(q) >= min_im) return q;
    }
  }

  // sum x^m q_m / m! with q_m in [-1/2, 1/2]^4, so derivatives of every
  // order stay of unit size on the unit ball.
  SlicePolynomial taylor_poly(int degree) {
    std::vector<Quaternion> c;
    double fact = 1.0;
    for (int m = 0; m <= degree; ++m) {
      if (m > 0) fact *= m;
      c.push_back(cube(0.5) / fact);
    }
    if (abs(c.back()) < 1e-3 / fact) c.back() += kOne / fact;
    return SlicePolynomial(std::move(c));
  }

  // c * prod (x - y_k) with |y_k| in [lo, hi].
  SlicePolynomial product_poly(int factors, double lo, double hi) {
    SlicePolynomial f = SlicePolynomial::constant(direction() * uniform(0.5, 2.0));
    for (int k = 0; k < factors; ++k) {
      f = SlicePolynomial::linear(direction() * uniform(lo, hi)) * f;
    }
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

using Residual = std::function<Quaternion(double)>;

// Order-2 row for a first-order identity: raw residual at h and 2h.
ResidualRow first_order_row(std::string identity, int sample, const Quaternion& x, double h,
                            const Residual& res) {
  ResidualRow row;
  row.identity = std::move(identity);
  row.sample = sample;
  row.point = x;
  row.h = h;
  row.residual_coarse = abs(res(2.0 * h));
  row.residual_fine = abs(res(h));
  row.ratio = row.residual_fine > 0.0 ? row.residual_coarse / row.residual_fine : 0.0;
  row.terminal = row.residual_fine;
  row.tolerance = kFirstOrderTol;
  row.pass = row.terminal <= row.tolerance && row.ratio >= kRatioLow && row.ratio <= kRatioHigh;
  return row;
}

// Row for a composed stencil: ratio from raw residuals, terminal from one
// Richardson step at h.
ResidualRow composed_row(std::string identity, int sample, const Quaternion& x, double h,
                         const Residual& res) {
  ResidualRow row;
  row.identity = std::move(identity);
  row.sample = sample;
  row.point = x;
  row.h = h;
  const Quaternion coarse = res(2.0 * h);
  const Quaternion fine = res(h);
  const Quaternion half = res(0.5 * h);
  row.residual_coarse = abs(coarse);
  row.residual_fine = abs(fine);
  row.ratio = row.residual_fine > 0.0 ? row.residual_coarse / row.residual_fine : 0.0;
  row.terminal = abs((4.0 * half - fine) / 3.0);
  row.tolerance = kComposedTol;
  row.pass = row.terminal <= row.tolerance && row.ratio >= kRatioLow && row.ratio <= kRatioHigh;
  return row;
}

using SuiteBody = std::function<void(Sampler&, int, double, std::vector<ResidualRow>&)>;

void crf_suite(Sampler& s, int i, double h, std::vector<ResidualRow>& rows) {
  const SlicePolynomial f = s.taylor_poly(s.integer(4, 6));
  const Quaternion x = s.point(0.8, 0.1);
  const Quaternion sd = spherical_derivative(f, x);
  rows.push_back(first_order_row("dbar f + 2 f'_s", i, x, h, [&](double t) {
    return fd_crf(as_field(f), x, t) + 2.0 * sd;
  }));
}

void crf_conj_suite(Sampler& s, int i, double h, std::vector<ResidualRow>& rows) {
  const SlicePolynomial f = s.taylor_poly(s.integer(4, 6));
  const Quaternion x = s.point(0.8, 0.1);
  const Quaternion rhs = 2.0 * eval(slice_derivative(f), x) + 2.0 * spherical_derivative(f, x);
  rows.push_back(first_order_row("d f - 2 f' - 2 f'_s", i, x, h, [&](double t) {
    return fd_crf_conj(as_field(f), x, t) - rhs;
  }));
  const Quaternion closed = twice_slice_derivative_of_spherical_derivative(f, x);
  rows.push_back(first_order_row("d(f'_s) - 2 df'_s/dx", i, x, h, [&](double t) {
    return fd_crf_conj(spherical_derivative_field(f), x, t) - closed;
  }));
}

void gamma_suite(Sampler& s, int i, double h, std::vector<ResidualRow>& rows) {
  const SlicePolynomial f = s.taylor_poly(s.integer(4, 6));
  const Quaternion x = s.point(0.8, 0.1);
  const Quaternion rhs = 2.0 * im(x) * spherical_derivative(f, x);
  rows.push_back(first_order_row("Gamma f - 2 Im(x) f'_s", i, x, h, [&](double t) {
    return fd_gamma(as_field(f), x, t) - rhs;
  }));
}

void harmonic_sd_suite(Sampler& s, int i, double h, std::vector<ResidualRow>& rows) {
  const SlicePolynomial f = s.taylor_poly(s.integer(5, 7));
  const Quaternion x = s.point(0.8, 0.1);
  rows.push_back(first_order_row("Delta f'_s", i, x, h, [&](double t) {
    return fd_laplace4(spherical_derivative_field(f), x, t);
  }));
}

void biharmonic_suite(Sampler& s, int i, double h, std::vector<ResidualRow>& rows) {
  const SlicePolynomial f = s.taylor_poly(s.integer(6, 8));
  const Quaternion x = s.point(0.8, 0.1);
  const QuaternionField u = as_field(f);
  rows.push_back(composed_row("Delta^2 f", i, x, h, [&](double t) { return fd_bilaplace4(u, x, t); }));
  rows.push_back(composed_row("dbar Delta f", i, x, h, [&](double t) {
    return fd_crf([&](const Quaternion& y) { return fd_laplace4(u, y, t); }, x, t);
  }));
}

void bilaplacian_logN_suite(Sampler& s, int i, double h, std::vector<ResidualRow>& rows) {
  const SlicePolynomial n = normal(s.product_poly(s.integer(1, 3), 3.0, 4.5));
  const Quaternion x = s.point(0.3, 0.0);
  const QuaternionField u = real_field([n](const Quaternion& y) { return log_abs(n, y); });
  rows.push_back(
      composed_row("Delta^2 log|N(f)|", i, x, h, [&](double t) { return fd_bilaplace4(u, x, t); }));
}

void delta4_at0_suite(Sampler& s, int i, double h, std::vector<ResidualRow>& rows) {
  const SlicePolynomial f = s.product_poly(s.integer(1, 3), 0.8, 2.0);
  const SlicePolynomial n = normal(f);
  const QuaternionField u = real_field([n](const Quaternion& y) { return log_abs(n, y); });
  const Quaternion origin(0.0);
  const double closed = delta4_logNf_at0(f);
  ResidualRow row;
  row.identity = "Delta log|N(f)|(0) closed form";
  row.sample = i;
  row.point = origin;
  row.h = h;
  row.expected_order = 0;
  row.residual_fine = std::abs(fd_laplace4(u, origin, h).w - closed);
  row.terminal = std::abs(
      richardson([&](double t) { return fd_laplace4(u, origin, t); }, h).w - closed);
  row.tolerance = kDelta4Tol;
  row.pass = row.terminal <= row.tolerance;
  rows.push_back(row);
}

struct SuiteSpec {
  const char* name;
  SuiteBody body;
  double step;
};

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> specs = {
      {"crf", crf_suite, kFirstOrderStep},
      {"crf-conj", crf_conj_suite, kFirstOrderStep},
      {"gamma", gamma_suite, kFirstOrderStep},
      {"harmonic-sd", harmonic_sd_suite, kFirstOrderStep},
      {"biharmonic", biharmonic_suite, kComposedStep},
      {"bilaplacian-logN", bilaplacian_logN_suite, kComposedStep},
      {"delta4-at-0", delta4_at0_suite, kComposedStep},
  };
  return specs;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string fmt_point(const Quaternion& q) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.6f %.6f %.6f %.6f]", q.w, q.x, q.y, q.z);
  return buf;
}

}  // namespace

bool SuiteResult::pass() const {
  for (const ResidualRow& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteSpec& s : registry()) out.emplace_back(s.name);
  return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count,
                      std::optional<double> h) {
  for (const SuiteSpec& spec : registry()) {
    if (name != spec.name) continue;
    SuiteResult out;
    out.suite = name;
    out.seed = seed;
    Sampler sampler(seed);
    for (int i = 0; i < count; ++i) spec.body(sampler, i, h.value_or(spec.step), out.rows);
    return out;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

std::string to_text(const SuiteResult& s) {
  std::ostringstream out;
  out << "suite " << s.suite << " seed " << s.seed << '\n';
  for (const ResidualRow& r : s.rows) {
    out << (r.pass ? "ok   " : "FAIL ") << r.identity << " #" << r.sample << " x=" << fmt_point(r.point)
        << " h=" << fmt(r.h) << " res(2h)=" << fmt(r.residual_coarse)
        << " res(h)=" << fmt(r.residual_fine) << " ratio=" << fmt(r.ratio)
        << " order=" << r.expected_order << " terminal=" << fmt(r.terminal)
        << " tol=" << fmt(r.tolerance) << '\n';
  }
  out << (s.pass() ? "PASS" : "FAIL") << ' ' << s.suite << '\n';
  return out.str();
}

std::string to_json(const SuiteResult& s) {
  using nlohmann::ordered_json;
  ordered_json rows = ordered_json::array();
  for (const ResidualRow& r : s.rows) {
    rows.push_back({{"identity", r.identity},
                    {"sample", r.sample},
                    {"point", {r.point.w, r.point.x, r.point.y, r.point.z}},
                    {"h", r.h},
                    {"residual_2h", r.residual_coarse},
                    {"residual_h", r.residual_fine},
                    {"ratio", r.ratio},
                    {"expected_order", r.expected_order},
                    {"terminal", r.terminal},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass}});
  }
  ordered_json j;
  j["suite"] = s.suite;
  j["seed"] = s.seed;
  j["pass"] = s.pass();
  j["rows"] = rows;
  return j.dump(2);
}

std::string to_csv(const SuiteResult& s) {
  std::ostringstream out;
  out << "suite,identity,sample,w,x,y,z,h,residual_2h,residual_h,ratio,expected_order,terminal,"
         "tolerance,pass\n";
  char buf[512];
  for (const ResidualRow& r : s.rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g,%d\n",
                  s.suite.c_str(), r.identity.c_str(), r.sample, r.point.w, r.point.x, r.point.y,
                  r.point.z, r.h, r.residual_coarse, r.residual_fine, r.ratio, r.expected_order,
                  r.terminal, r.tolerance, r.pass ? 1 : 0);
    out << buf;
  }
  return out.str();
}

}  // namespace qjensen
