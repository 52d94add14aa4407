#include "qjensen/zeros_poles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qjensen/error.hpp"
#include "qjensen/roots.hpp"

namespace qjensen {

namespace {

Quaternion sphere_point(double alpha, double beta) { return {alpha, beta, 0.0, 0.0}; }

[[noreturn]] void inconsistent(double alpha, double beta, const std::string& what) {
  std::ostringstream msg;
  msg << "sphere (" << alpha << ", " << beta << "): " << what;
  throw Error(ErrorKind::ClassificationInconsistency, msg.str());
}

// The point of S_{alpha + i beta} where f vanishes, given that f does not
// vanish on the whole sphere.
Quaternion isolated_zero_on_sphere(const SlicePolynomial& f, double alpha, double beta) {
  const StemValue s = stem_components(f, {alpha, beta});
  const double tol = kEpsClass * evaluation_scale(f, sphere_point(alpha, beta));
  if (abs(s.f2) <= tol) inconsistent(alpha, beta, "F2 vanishes but F1 does not");
  Quaternion unit = -(s.f1 * qinv(s.f2));
  try {
    unit = ImaginaryUnit(unit).value();
  } catch (const Error&) {
    inconsistent(alpha, beta, "-F1 F2^{-1} is not an imaginary unit");
  }
  const Quaternion y = Quaternion(alpha) + beta * unit;
  if (abs(eval(f, y)) > tol) inconsistent(alpha, beta, "f does not vanish at -F1 F2^{-1}");
  return y;
}

bool same_sphere(double a1, double b1, double a2, double b2) {
  const double radius = kClusterRadius * (1.0 + std::hypot(a1, b1));
  return std::hypot(a1 - a2, b1 - b2) <= radius;
}

}  // namespace

std::string_view to_string(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::Real: return "Real";
    case ZeroKind::Spherical: return "Spherical";
    case ZeroKind::IsolatedNonreal: return "IsolatedNonreal";
  }
  return "?";
}

std::string_view to_string(PoleKind kind) {
  switch (kind) {
    case PoleKind::Real: return "Real";
    case PoleKind::SphericalUniform: return "SphericalUniform";
    case PoleKind::SphericalNonuniform: return "SphericalNonuniform";
  }
  return "?";
}

SlicePolynomial characteristic_poly(const Quaternion& y) {
  return SlicePolynomial({norm2(y), -trace(y), 1.0});
}

double evaluation_scale(const SlicePolynomial& f, const Quaternion& x) {
  const double rho = std::max(1.0, abs(x));
  double s = 0.0;
  double pw = 1.0;
  for (const auto& a : f.coeffs()) {
    s += abs(a) * pw;
    pw *= rho;
  }
  return s;
}

std::vector<ZeroSphere> zero_spheres(const SlicePolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero set of the zero polynomial");
  if (f.degree() == 0) return {};
  std::vector<ZeroSphere> out;
  for (const RealFactor& rf : real_factorization(normal(f).real_coeffs())) {
    out.push_back({rf.alpha, rf.beta, rf.multiplicity});
  }
  return out;
}

int total_multiplicity(const SlicePolynomial& f, const Quaternion& y) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity in the zero polynomial");
  if (abs(eval(f, y)) > kEpsClass * evaluation_scale(f, y)) return 0;
  return divisibility_exponent(normal(f).real_coeffs(), characteristic_poly(y).real_coeffs());
}

std::vector<ZeroRecord> classify_zeros(const SlicePolynomial& f) {
  std::vector<ZeroRecord> out;
  const SlicePolynomial n = normal(f);
  const std::vector<double> nc = n.real_coeffs();
  for (const ZeroSphere& s : zero_spheres(f)) {
    ZeroRecord rec;
    rec.alpha = s.alpha;
    rec.beta = s.beta;
    const Quaternion z = sphere_point(s.alpha, s.beta);
    const double tol = kEpsClass * evaluation_scale(f, z);
    if (s.beta == 0.0) {
      rec.kind = ZeroKind::Real;
      rec.representative = Quaternion(s.alpha);
      if (abs(eval(f, rec.representative)) > tol) inconsistent(s.alpha, 0.0, "f does not vanish");
    } else {
      const StemValue st = stem_components(f, {s.alpha, s.beta});
      if (abs(st.f1) <= tol && abs(st.f2) <= tol) {
        rec.kind = ZeroKind::Spherical;
        rec.representative = z;
      } else {
        rec.kind = ZeroKind::IsolatedNonreal;
        rec.representative = isolated_zero_on_sphere(f, s.alpha, s.beta);
      }
    }
    rec.total_multiplicity =
        divisibility_exponent(nc, characteristic_poly(rec.representative).real_coeffs());
    out.push_back(rec);
  }
  return out;
}

PoleStructure pole_structure(const SemiregularFunction& f) {
  PoleStructure out;
  if (!f.has_poles()) return out;
  const std::vector<double> normal_num =
      f.num().is_zero() ? std::vector<double>{} : normal(f.num()).real_coeffs();
  for (const RealFactor& rf : real_factorization(f.den().real_coeffs())) {
    PoleRecord p;
    p.alpha = rf.alpha;
    p.beta = rf.beta;
    p.representative = sphere_point(rf.alpha, rf.beta);
    p.order = rf.multiplicity;
    if (rf.beta == 0.0) {
      p.kind = PoleKind::Real;
    } else {
      p.spherical_order = 2 * rf.multiplicity;
      const int m = normal_num.empty() ? 0 : divisibility_exponent(normal_num, factor_coeffs(rf));
      if (m == 0) {
        p.kind = PoleKind::SphericalUniform;
        out.s1 += 0.5 * p.spherical_order;
      } else {
        p.kind = PoleKind::SphericalNonuniform;
        p.exceptional_point = isolated_zero_on_sphere(f.num(), rf.alpha, rf.beta);
        p.exceptional_order = std::max(rf.multiplicity - m, 0);
        p.isolated_multiplicity = m;
        out.s2 += 0.5 * p.spherical_order;
      }
    }
    out.poles.push_back(p);
  }
  out.s = out.s1 + out.s2;
  return out;
}

PoleStructure pole_structure(const SemiregularFunction& f, double r) {
  PoleStructure all = pole_structure(f);
  PoleStructure out;
  for (const PoleRecord& p : all.poles) {
    if (abs(p.representative) > r * (1.0 + kBoundaryBand)) continue;
    if (p.kind == PoleKind::SphericalUniform) out.s1 += 0.5 * p.spherical_order;
    if (p.kind == PoleKind::SphericalNonuniform) out.s2 += 0.5 * p.spherical_order;
    out.poles.push_back(p);
  }
  out.s = out.s1 + out.s2;
  return out;
}

std::vector<ZeroRecord> classify_zeros(const SemiregularFunction& f) {
  if (f.num().is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero set of the zero function");
  std::vector<ZeroRecord> zeros = classify_zeros(f.num());
  if (!f.has_poles()) return zeros;
  const std::vector<RealFactor> poles = real_factorization(f.den().real_coeffs());
  std::erase_if(zeros, [&](const ZeroRecord& z) {
    return std::any_of(poles.begin(), poles.end(), [&](const RealFactor& p) {
      return same_sphere(z.alpha, z.beta, p.alpha, p.beta);
    });
  });
  return zeros;
}

SemiregularFunction blaschke_real(double p, double r) {
  if (p == 0.0 || std::abs(p) >= r) {
    std::ostringstream msg;
    msg << "real Blaschke factor needs 0 < |p| < r, got p = " << p << ", r = " << r;
    throw Error(ErrorKind::InvalidPole, msg.str());
  }
  return {SlicePolynomial::linear(r * r / p), SlicePolynomial::linear(p) * Quaternion(-r / p)};
}

SemiregularFunction blaschke_spherical(const Quaternion& b, double r) {
  const double mod = abs(b);
  if (abs_im(b) <= eps_zero(b) || mod >= r) {
    std::ostringstream msg;
    msg << "spherical Blaschke factor needs nonreal b with |b| < r, got b = " << b << ", r = " << r;
    throw Error(ErrorKind::InvalidPole, msg.str());
  }
  const Quaternion mirrored = r * r * qinv(b);
  return {characteristic_poly(mirrored), characteristic_poly(b) * Quaternion(r * r / (mod * mod))};
}

Regularization regularize(const SemiregularFunction& f, double r) {
  SemiregularFunction g(SlicePolynomial::constant(1.0));
  for (const PoleRecord& p : pole_structure(f).poles) {
    const double mod = abs(p.representative);
    if (std::abs(mod - r) <= kBoundaryBand * r) {
      std::ostringstream msg;
      msg << "pole at " << p.representative << " lies on the sphere |x| = " << r;
      throw Error(ErrorKind::PoleOnBoundary, msg.str());
    }
    if (mod > r) {
      std::ostringstream msg;
      msg << "pole at " << p.representative << " lies outside B_" << r << "; use a smaller radius";
      throw Error(ErrorKind::PoleOutsideRegion, msg.str());
    }
    const SemiregularFunction factor = p.kind == PoleKind::Real
                                           ? blaschke_real(p.alpha, r)
                                           : blaschke_spherical(p.representative, r);
    for (int k = 0; k < p.order; ++k) g = slice_product(g, factor);
  }
  return {g, slice_product(g, f)};
}

}  // namespace qjensen
