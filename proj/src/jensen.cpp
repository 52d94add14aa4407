#include "qjensen/jensen.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "qjensen/error.hpp"

namespace qjensen {

namespace {

struct OriginJet {
  Quaternion f0, f1, f2;  // f(0), f'(0), f''(0)
};

OriginJet origin_jet(const SemiregularFunction& f) {
  const std::vector<Quaternion> c = taylor_at_zero(f, 3);
  const double scale = evaluation_scale(f.num(), Quaternion(0.0)) / std::abs(f.den()[0].w);
  if (abs(c[0]) <= 1e-14 * scale || abs(c[0]) == 0.0) {
    throw Error(ErrorKind::ZeroAtOrigin, "f(0) = 0");
  }
  return {c[0], c[1], 2.0 * c[2]};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string fmt(const Quaternion& q) {
  return "[" + fmt(q.w) + ", " + fmt(q.x) + ", " + fmt(q.y) + ", " + fmt(q.z) + "]";
}

bool on_boundary(double mod, double r) { return std::abs(mod - r) <= kBoundaryBand * r; }

[[noreturn]] void violation(const std::string& what, const Quaternion& at, double r) {
  std::ostringstream msg;
  msg << what << " (at " << at << ", r = " << r << ")";
  throw Error(ErrorKind::HypothesisViolation, msg.str());
}

}  // namespace

double delta4_logNf_at0(const SemiregularFunction& f) {
  const OriginJet j = origin_jet(f);
  const Quaternion inv = qinv(j.f0);
  const Quaternion u = inv * j.f1;
  return -4.0 * re(inv * j.f2) + 4.0 * re(u * u);
}

JensenLhs jensen_lhs_terms(const SemiregularFunction& f, double r) {
  const OriginJet j = origin_jet(f);
  const Quaternion inv = qinv(j.f0);
  const Quaternion u = inv * j.f1;
  JensenLhs out;
  out.log_f0 = std::log(abs(j.f0));
  out.first_derivative_term = 0.25 * r * r * re(u * u);
  out.second_derivative_term = -0.25 * r * r * re(inv * j.f2);
  return out;
}

double jensen_lhs(const SemiregularFunction& f, double r) { return jensen_lhs_terms(f, r).total(); }

double real_term(double rk, double r) {
  const double a = std::abs(rk);
  return std::log(r / a) + (a * a * a * a - r * r * r * r) / (4.0 * r * r * a * a);
}

double spherical_term(const Quaternion& a, double r) {
  const double n = norm2(a);
  const double mod = std::sqrt(n);
  const double t = trace(a);
  return 2.0 * std::log(r / mod) + (n * n - r * r * r * r) / (4.0 * r * r * n * n) * (t * t - 2.0 * n);
}

double zero_weight(const ZeroRecord& z) {
  return z.kind == ZeroKind::Real ? z.total_multiplicity : 0.5 * z.total_multiplicity;
}

double pole_weight(const PoleRecord& p) {
  return p.kind == PoleKind::Real ? p.order : 0.5 * p.spherical_order;
}

double zero_term(const ZeroRecord& z, double r) {
  const double unweighted = z.kind == ZeroKind::Real ? real_term(z.representative.w, r)
                                                     : spherical_term(z.representative, r);
  return zero_weight(z) * unweighted;
}

double pole_term(const PoleRecord& p, double r) {
  const double unweighted = p.kind == PoleKind::Real ? real_term(p.representative.w, r)
                                                     : spherical_term(p.representative, r);
  return pole_weight(p) * unweighted;
}

double zero_sum(const std::vector<ZeroRecord>& zeros, double r) {
  double s = 0.0;
  for (const ZeroRecord& z : zeros) {
    const double mod = abs(z.representative);
    if (mod == 0.0) throw Error(ErrorKind::ZeroAtOrigin, "zero at the origin");
    if (mod >= r * (1.0 - kBoundaryBand)) {
      std::ostringstream msg;
      msg << "zero " << z.representative << " not strictly inside B_" << r;
      throw Error(ErrorKind::ZeroOnBoundary, msg.str());
    }
    s += zero_term(z, r);
  }
  return s;
}

double pole_sum(const std::vector<PoleRecord>& poles, double r) {
  double s = 0.0;
  for (const PoleRecord& p : poles) {
    const double mod = abs(p.representative);
    if (mod == 0.0) throw Error(ErrorKind::PoleAtOrigin, "pole at the origin");
    if (mod >= r * (1.0 - kBoundaryBand)) {
      std::ostringstream msg;
      msg << "pole " << p.representative << " not strictly inside B_" << r;
      throw Error(ErrorKind::PoleOnBoundary, msg.str());
    }
    s += pole_term(p, r);
  }
  return s;
}

double boundary_clearance(const SemiregularFunction& f, double r) {
  double best = std::numeric_limits<double>::infinity();
  auto visit = [&](const Quaternion& q) { best = std::min(best, std::abs(abs(q) - r) / r); };
  if (f.num().degree() > 0) {
    for (const ZeroRecord& z : classify_zeros(f)) visit(z.representative);
  }
  for (const PoleRecord& p : pole_structure(f).poles) {
    visit(p.representative);
    if (p.exceptional_point) visit(*p.exceptional_point);
  }
  return best;
}

int recommended_order(const SemiregularFunction& f, double r, int n) {
  int out = n;
  auto visit = [&](const Quaternion& z, bool nonreal) {
    const double t = abs(z) / r;
    if (std::abs(t - 1.0) < kNearBoundary) out = std::max(out, kEscalatedOrder);
    if (!nonreal || t >= 1.0 || t == 0.0) return;
    const double est = std::ceil(10.0 / std::abs(std::log(t)) / 16.0) * 16.0;
    out = std::max(out, static_cast<int>(std::min<double>(est, kMaxOrder)));
  };
  if (f.num().degree() > 0) {
    for (const ZeroRecord& z : classify_zeros(f)) visit(z.representative, z.kind != ZeroKind::Real);
  }
  for (const PoleRecord& p : pole_structure(f).poles) {
    visit(p.representative, p.kind != PoleKind::Real);
    if (p.exceptional_point) visit(*p.exceptional_point, true);
  }
  return out;
}

JensenReport jensen_check(const SemiregularFunction& f, double r, int n) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "radius must be positive");
  if (f.num().is_zero()) throw Error(ErrorKind::HypothesisViolation, "f is identically zero");

  JensenReport rep;
  rep.r = r;
  rep.n = n;

  // Hypotheses at the origin.
  try {
    rep.lhs_terms = jensen_lhs_terms(f, r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroAtOrigin) violation("zero at the origin", Quaternion(0.0), r);
    if (e.kind() == ErrorKind::PoleAtOrigin) violation("pole at the origin", Quaternion(0.0), r);
    throw;
  }

  // Zeros of f and exceptional points of nonuniform pole spheres.
  std::vector<ZeroRecord> zeros;
  if (f.num().degree() > 0) {
    for (const ZeroRecord& z : classify_zeros(f)) {
      const double mod = abs(z.representative);
      if (on_boundary(mod, r)) violation("zero on ∂B_r", z.representative, r);
      if (mod > r) {
        ++rep.zeros_outside;
        continue;
      }
      zeros.push_back(z);
    }
  }

  std::vector<PoleRecord> poles;
  for (const PoleRecord& p : pole_structure(f).poles) {
    const double mod = abs(p.representative);
    if (on_boundary(mod, r)) violation("pole on ∂B_r", p.representative, r);
    if (mod > r) {
      ++rep.poles_outside;
      continue;
    }
    poles.push_back(p);
    if (p.kind == PoleKind::SphericalNonuniform && p.exceptional_point) {
      ZeroRecord a;
      a.kind = ZeroKind::IsolatedNonreal;
      a.representative = *p.exceptional_point;
      a.alpha = p.alpha;
      a.beta = p.beta;
      a.total_multiplicity = p.isolated_multiplicity;
      zeros.push_back(a);
      rep.nonuniform_spheres.push_back({p.alpha, p.beta, pole_term(p, r), zero_term(a, r)});
    }
  }

  for (const ZeroRecord& z : zeros) {
    rep.zeros.push_back({std::string(to_string(z.kind)), z.representative, zero_weight(z),
                         zero_term(z, r)});
    if (z.kind == ZeroKind::Real && z.representative.w < 0.0) {
      rep.notes.push_back("negative real zero " + fmt(z.representative.w) +
                          ": |r_k| used in the logarithm");
    }
  }
  for (const PoleRecord& p : poles) {
    rep.poles.push_back({std::string(to_string(p.kind)), p.representative, pole_weight(p),
                         pole_term(p, r)});
    if (p.kind == PoleKind::Real && p.representative.w < 0.0) {
      rep.notes.push_back("negative real pole " + fmt(p.representative.w) +
                          ": |p_k| used in the logarithm");
    }
  }

  rep.zero_sum = zero_sum(zeros, r);
  rep.pole_sum = pole_sum(poles, r);

  const BoundaryMeans means = boundary_means(f, build_rule(r, n));
  rep.mean_log_f = means.mean_log_f;
  rep.mean_log_f_Sf = means.mean_log_f_Sf;

  rep.lhs = rep.lhs_terms.total();
  rep.rhs = 0.5 * rep.mean_log_f + 0.5 * rep.mean_log_f_Sf - rep.zero_sum + rep.pole_sum;
  rep.residual = rep.lhs - rep.rhs;
  return rep;
}

double blaschke_laplacian_shift(const std::vector<double>& real_poles, double r) {
  double s = 0.0;
  const double r4 = r * r * r * r;
  for (double p : real_poles) s += (p * p * p * p - r4) / (r4 * p * p);
  return -4.0 * s;
}

std::string to_json(const JensenReport& rep) {
  using nlohmann::ordered_json;
  auto q = [](const Quaternion& x) { return ordered_json::array({x.w, x.x, x.y, x.z}); };
  auto terms = [&](const std::vector<TermRecord>& v) {
    ordered_json arr = ordered_json::array();
    for (const TermRecord& t : v) {
      arr.push_back({{"kind", t.kind}, {"point", q(t.point)}, {"weight", t.weight}, {"term", t.term}});
    }
    return arr;
  };
  ordered_json j;
  j["r"] = rep.r;
  j["n"] = rep.n;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["residual"] = rep.residual;
  j["breakdown"] = {{"log_abs_f0", rep.lhs_terms.log_f0},
                    {"first_derivative_term", rep.lhs_terms.first_derivative_term},
                    {"second_derivative_term", rep.lhs_terms.second_derivative_term},
                    {"mean_log_f", rep.mean_log_f},
                    {"mean_log_f_Sf", rep.mean_log_f_Sf},
                    {"zero_sum", rep.zero_sum},
                    {"pole_sum", rep.pole_sum}};
  j["zeros"] = terms(rep.zeros);
  j["poles"] = terms(rep.poles);
  ordered_json spheres = ordered_json::array();
  for (const SphereBalance& s : rep.nonuniform_spheres) {
    spheres.push_back({{"alpha", s.alpha},
                       {"beta", s.beta},
                       {"b_terms", s.b_terms},
                       {"a_terms", s.a_terms},
                       {"net", s.net()}});
  }
  j["nonuniform_spheres"] = spheres;
  j["zeros_outside"] = rep.zeros_outside;
  j["poles_outside"] = rep.poles_outside;
  j["notes"] = rep.notes;
  return j.dump(2);
}

std::string csv_header() {
  return "name,r,n,lhs,rhs,residual,log_abs_f0,first_derivative_term,second_derivative_term,"
         "mean_log_f,mean_log_f_Sf,zero_sum,pole_sum";
}

std::string to_csv_row(const std::string& name, const JensenReport& rep) {
  std::string row = name;
  for (double v : {rep.r, static_cast<double>(rep.n), rep.lhs, rep.rhs, rep.residual,
                   rep.lhs_terms.log_f0, rep.lhs_terms.first_derivative_term,
                   rep.lhs_terms.second_derivative_term, rep.mean_log_f, rep.mean_log_f_Sf,
                   rep.zero_sum, rep.pole_sum}) {
    row += ',' + fmt(v);
  }
  return row;
}

std::string to_text(const JensenReport& rep) {
  std::ostringstream out;
  out << "r = " << fmt(rep.r) << ", n = " << rep.n << '\n'
      << "lhs      " << fmt(rep.lhs) << '\n'
      << "  log|f(0)|            " << fmt(rep.lhs_terms.log_f0) << '\n'
      << "  first-derivative     " << fmt(rep.lhs_terms.first_derivative_term) << '\n'
      << "  second-derivative    " << fmt(rep.lhs_terms.second_derivative_term) << '\n'
      << "rhs      " << fmt(rep.rhs) << '\n'
      << "  mean log|f|          " << fmt(rep.mean_log_f) << '\n'
      << "  mean log|f o S_f|    " << fmt(rep.mean_log_f_Sf) << '\n'
      << "  zero sum             " << fmt(rep.zero_sum) << '\n'
      << "  pole sum             " << fmt(rep.pole_sum) << '\n'
      << "residual " << fmt(rep.residual) << '\n';
  for (const TermRecord& t : rep.zeros) {
    out << "zero " << t.kind << ' ' << fmt(t.point) << " weight " << fmt(t.weight) << " term "
        << fmt(t.term) << '\n';
  }
  for (const TermRecord& t : rep.poles) {
    out << "pole " << t.kind << ' ' << fmt(t.point) << " weight " << fmt(t.weight) << " term "
        << fmt(t.term) << '\n';
  }
  for (const SphereBalance& s : rep.nonuniform_spheres) {
    out << "nonuniform sphere (" << fmt(s.alpha) << ", " << fmt(s.beta) << "): b " << fmt(s.b_terms)
        << " a " << fmt(s.a_terms) << " net " << fmt(s.net()) << '\n';
  }
  if (rep.zeros_outside + rep.poles_outside > 0) {
    out << "outside the ball: " << rep.zeros_outside << " zero(s), " << rep.poles_outside
        << " pole(s)\n";
  }
  for (const std::string& n : rep.notes) out << "note: " << n << '\n';
  return out.str();
}

}  // namespace qjensen
