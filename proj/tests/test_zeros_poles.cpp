#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "common.hpp"
#include "qjensen/error.hpp"
#include "qjensen/roots.hpp"
#include "qjensen/zeros_poles.hpp"

using namespace qjensen;
using test::dist;

namespace {

const SlicePolynomial kXmI = SlicePolynomial::linear(kI);
const SlicePolynomial kXmJ = SlicePolynomial::linear(kJ);
const SlicePolynomial kX2p1{1.0, 0.0, 1.0};

std::vector<double> real(const SlicePolynomial& p) { return p.real_coeffs(); }

// Order of f at y estimated from the growth of |f| along a random ray into y:
// |f(y + t v)| ~ t^{-order}.
double growth_order(const SemiregularFunction& f, const Quaternion& y, test::Rng& rng) {
  Quaternion v = rng.quaternion();
  v = v / abs(v);
  const double t1 = 1e-3, t2 = 1e-4;
  const double l1 = std::log(abs(eval(f, y + v * t1)));
  const double l2 = std::log(abs(eval(f, y + v * t2)));
  return -(l1 - l2) / (std::log(t1) - std::log(t2));
}

}  // namespace

TEST_CASE("characteristic_poly") {
  CHECK(real(characteristic_poly(kI)) == std::vector<double>{1.0, 0.0, 1.0});
  CHECK(real(characteristic_poly(0.5)) == std::vector<double>{0.25, -1.0, 1.0});
  CHECK(real(characteristic_poly(1.0 + 2.0 * kJ)) == std::vector<double>{5.0, -2.0, 1.0});
  // vanishes on the whole sphere of y
  test::Rng rng(1);
  const Quaternion y = 0.3 + 0.7 * kK;
  for (int t = 0; t < 5; ++t) {
    CHECK(abs(eval(characteristic_poly(y), test::on_sphere(0.3, 0.7, rng.unit_imaginary()))) < 1e-15);
  }
}

TEST_CASE("zero_spheres") {
  auto s = zero_spheres(kX2p1);
  REQUIRE(s.size() == 1);
  CHECK(s[0].alpha == doctest::Approx(0.0));
  CHECK(s[0].beta == doctest::Approx(1.0));
  CHECK(s[0].multiplicity_in_normal == 2);

  s = zero_spheres(kXmI * kXmJ);
  REQUIRE(s.size() == 1);
  CHECK(s[0].beta == doctest::Approx(1.0));
  CHECK(s[0].multiplicity_in_normal == 2);

  // N = (x - 1/2)^2 (x^2 + 1): exponent 2 of the linear factor, 1 of the quadratic
  s = zero_spheres(SlicePolynomial::linear(0.5) * kXmI);
  REQUIRE(s.size() == 2);
  std::sort(s.begin(), s.end(), [](const ZeroSphere& a, const ZeroSphere& b) { return a.beta < b.beta; });
  CHECK(s[0].alpha == doctest::Approx(0.5));
  CHECK(s[0].beta == 0.0);
  CHECK(s[0].multiplicity_in_normal == 2);
  CHECK(s[1].alpha == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s[1].beta == doctest::Approx(1.0));
  CHECK(s[1].multiplicity_in_normal == 1);

  try {
    zero_spheres(SlicePolynomial{});
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPolynomial);
  }
}

TEST_CASE("companion-matrix roots") {
  // (x - 1/2)^3 (x^2 + 1)^2 (x + 2)
  const SlicePolynomial l = SlicePolynomial::linear(0.5);
  const SlicePolynomial p = l * l * l * kX2p1 * kX2p1 * SlicePolynomial::linear(-2.0);
  auto f = real_factorization(real(p));
  std::sort(f.begin(), f.end(), [](const RealFactor& a, const RealFactor& b) { return a.alpha < b.alpha; });
  REQUIRE(f.size() == 3);
  CHECK(f[0].alpha == doctest::Approx(-2.0));
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].alpha == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(f[1].beta == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(f[1].multiplicity == 2);
  CHECK(f[2].alpha == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(f[2].multiplicity == 3);
}

TEST_CASE("classify_zeros") {
  auto z = classify_zeros(kX2p1);
  REQUIRE(z.size() == 1);
  CHECK(z[0].kind == ZeroKind::Spherical);
  CHECK(dist(z[0].representative, kI) < 1e-12);
  CHECK(z[0].total_multiplicity == 2);

  z = classify_zeros(kXmI * kXmJ);
  REQUIRE(z.size() == 1);
  CHECK(z[0].kind == ZeroKind::IsolatedNonreal);
  CHECK(dist(z[0].representative, kI) < 1e-10);
  CHECK(z[0].total_multiplicity == 2);

  const SlicePolynomial l = SlicePolynomial::linear(0.5);
  z = classify_zeros(l * l * l);
  REQUIRE(z.size() == 1);
  CHECK(z[0].kind == ZeroKind::Real);
  CHECK(z[0].representative.w == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(z[0].total_multiplicity == 3);
}

TEST_CASE("isolated zero is the only zero on its sphere") {
  const SlicePolynomial f = kXmI * kXmJ;
  test::Rng rng(2);
  double best = 1e300;
  Quaternion arg;
  for (int t = 0; t < 4000; ++t) {
    const Quaternion u = rng.unit_imaginary();
    const double v = abs(eval(f, u));
    if (v < best) best = v, arg = u;
  }
  // the scan's minimum sits near i and nowhere else gets close to zero
  CHECK(dist(arg, kI) < 0.1);
  for (int t = 0; t < 200; ++t) {
    const Quaternion u = rng.unit_imaginary();
    if (dist(u, kI) > 0.5) CHECK(abs(eval(f, u)) > 0.1);
  }
}

TEST_CASE("record invariants on random products") {
  test::Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const Quaternion y1 = rng.nonreal(0.8);
    const Quaternion y2 = rng.nonreal(0.8);
    const double a = rng.uniform(-0.9, 0.9);
    const SlicePolynomial f = SlicePolynomial::linear(y1) * SlicePolynomial::linear(a) *
                              characteristic_poly(y2) * SlicePolynomial::linear(rng.quaternion());
    int total = 0;
    for (const ZeroRecord& z : classify_zeros(f)) {
      total += z.total_multiplicity;
      const double tol = 1e-8 * evaluation_scale(f, z.representative);
      if (z.kind == ZeroKind::Real) CHECK(z.beta == 0.0);
      if (z.kind == ZeroKind::Spherical) {
        for (int k = 0; k < 3; ++k) {
          CHECK(abs(eval(f, test::on_sphere(z.alpha, z.beta, rng.unit_imaginary()))) < tol);
        }
      }
      if (z.kind == ZeroKind::IsolatedNonreal) {
        CHECK(abs(eval(f, z.representative)) < tol);
        const Quaternion other = test::on_sphere(z.alpha, z.beta, rng.unit_imaginary());
        CHECK(abs(eval(f, other)) > tol);
      }
    }
    CHECK(total == f.degree());
  }
}

TEST_CASE("total_multiplicity") {
  CHECK(total_multiplicity(kXmI, kI) == 1);
  CHECK(total_multiplicity(kX2p1, kI) == 2);
  CHECK(total_multiplicity(kXmI * kXmI, kI) == 2);
  CHECK(total_multiplicity(kXmI, kJ) == 0);  // j is on the sphere of i but not a zero
  CHECK(total_multiplicity(kXmI, 0.5) == 0);
  // the repeated-division oracle
  const std::vector<double> n = real(normal(kXmI * kXmI));
  CHECK(divisibility_exponent(n, real(characteristic_poly(kI))) == 2);
}

TEST_CASE("multiplicity doubling") {
  test::Rng rng(6);
  for (int t = 0; t < 25; ++t) {
    SlicePolynomial f = SlicePolynomial::constant(1.0);
    const int factors = 1 + static_cast<int>(rng.uniform(0, 4));
    for (int k = 0; k < factors; ++k) {
      if (rng.uniform(0, 1) < 0.3) {
        const Quaternion y = rng.nonreal(1.0);
        f = f * characteristic_poly(y);
      } else {
        const Quaternion y = rng.uniform(0, 1) < 0.3 ? Quaternion(rng.uniform(-1, 1)) : rng.nonreal();
        f = f * SlicePolynomial::linear(y);
      }
    }
    for (const ZeroRecord& z : classify_zeros(f)) {
      CHECK(total_multiplicity(normal(f), z.representative) == 2 * z.total_multiplicity);
    }
  }
}

TEST_CASE("pole_structure of the nonuniform examples") {
  const SemiregularFunction f(kX2p1, SlicePolynomial::linear(-kI));
  PoleStructure ps = pole_structure(f, 2.0);
  REQUIRE(ps.poles.size() == 1);
  const PoleRecord& p = ps.poles[0];
  CHECK(p.kind == PoleKind::SphericalNonuniform);
  CHECK(p.order == 1);
  CHECK(p.spherical_order == 2);
  REQUIRE(p.exceptional_point);
  CHECK(dist(*p.exceptional_point, -kI) < 1e-10);
  CHECK(p.exceptional_order == 0);
  CHECK(p.isolated_multiplicity == 1);
  CHECK(ps.s1 == 0.0);
  CHECK(ps.s2 == 1.0);

  test::Rng rng(8);
  CHECK(growth_order(f, kJ, rng) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(growth_order(f, -kI, rng) == doctest::Approx(0.0).epsilon(0.01));

  // ((x^2 + 1)^2)^{-1} (x + i): orders by the growth oracle first, then compare
  const SemiregularFunction g(kX2p1 * kX2p1, SlicePolynomial::linear(-kI));
  const double generic = growth_order(g, (kJ + kK) / std::sqrt(2.0), rng);
  const double exceptional = growth_order(g, -kI, rng);
  CHECK(generic == doctest::Approx(2.0).epsilon(0.01));
  CHECK(exceptional == doctest::Approx(1.0).epsilon(0.01));
  ps = pole_structure(g, 2.0);
  REQUIRE(ps.poles.size() == 1);
  CHECK(ps.poles[0].kind == PoleKind::SphericalNonuniform);
  CHECK(ps.poles[0].order == std::lround(generic));
  CHECK(ps.poles[0].spherical_order == 2 * std::lround(generic));
  CHECK(ps.poles[0].exceptional_order == std::lround(exceptional));
  CHECK(ps.poles[0].isolated_multiplicity == 1);
  // i_f >= spherical order / 2 - exceptional order > 0
  CHECK(ps.poles[0].isolated_multiplicity >= ps.poles[0].spherical_order / 2 - ps.poles[0].exceptional_order);
}

TEST_CASE("pole_structure: real and uniform poles") {
  PoleStructure ps = pole_structure(SemiregularFunction(SlicePolynomial::linear(0.5), SlicePolynomial{1.0}), 1.0);
  REQUIRE(ps.poles.size() == 1);
  CHECK(ps.poles[0].kind == PoleKind::Real);
  CHECK(ps.poles[0].alpha == doctest::Approx(0.5));
  CHECK(ps.poles[0].order == 1);

  const SemiregularFunction u(SlicePolynomial{0.25, 0.0, 1.0}, SlicePolynomial::linear(0.4));
  ps = pole_structure(u, 1.0);
  REQUIRE(ps.poles.size() == 1);
  CHECK(ps.poles[0].kind == PoleKind::SphericalUniform);
  CHECK(ps.poles[0].spherical_order == 2);
  CHECK(ps.s1 == 1.0);
  // restricted to a smaller ball the sphere of radius 1/2 disappears
  CHECK(pole_structure(u, 0.4).poles.empty());

  // common real factors cancel on construction: (x - 1/2)^{-1} (x - 1/2) x = x
  const SemiregularFunction c(SlicePolynomial::linear(0.5),
                              SlicePolynomial::linear(0.5) * SlicePolynomial::identity());
  CHECK_FALSE(c.has_poles());
}

TEST_CASE("blaschke factors") {
  const SemiregularFunction g1 = blaschke_real(0.5, 1.0);
  CHECK(abs(eval(g1, 0.5)) < 1e-15);
  CHECK(abs(eval(g1, 1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(abs(eval(g1, 0.0)) == doctest::Approx(0.5).epsilon(1e-15));

  const SemiregularFunction g2 = blaschke_spherical(kI, 2.0);
  CHECK(real(g2.den()) == std::vector<double>{16.0, 0.0, 1.0});
  CHECK(dist(g2.num()[0], 4.0) < 1e-14);
  CHECK(dist(g2.num()[2], 4.0) < 1e-14);
  CHECK(abs(eval(g2, kI)) < 1e-15);
  CHECK(abs(eval(g2, 2.0 * kJ)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(abs(eval(g2, 0.0)) == doctest::Approx(0.25).epsilon(1e-15));

  test::Rng rng(10);
  const Quaternion b = 0.2 + 0.5 * kK;
  const SemiregularFunction g3 = blaschke_spherical(b, 1.3);
  const SemiregularFunction g4 = blaschke_real(-0.7, 1.3);
  for (int t = 0; t < 50; ++t) {
    Quaternion x = rng.quaternion();
    x = x * (1.3 / abs(x));
    CHECK(abs(eval(g3, x)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(abs(eval(g4, x)) == doctest::Approx(1.0).epsilon(1e-10));
    x = x * (2.0 / 1.3);
    CHECK(abs(eval(g2, x)) == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(abs(eval(g3, 0.0)) == doctest::Approx(norm2(b) / (1.3 * 1.3)).epsilon(1e-14));

  for (double p : {0.0, 1.0, -1.5}) {
    try {
      blaschke_real(p, 1.0);
      FAIL("expected InvalidPole");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidPole);
    }
  }
  CHECK_THROWS_AS(blaschke_spherical(0.5, 1.0), Error);
}

TEST_CASE("regularize") {
  const SemiregularFunction f(kX2p1, SlicePolynomial::linear(-kI));
  Regularization reg = regularize(f, 2.0);
  CHECK(real(reg.h.den()) == std::vector<double>{16.0, 0.0, 1.0});
  REQUIRE(reg.h.num().degree() == 1);
  CHECK(dist(reg.h.num()[0], 4.0 * kI) < 1e-13);
  CHECK(dist(reg.h.num()[1], 4.0) < 1e-13);

  const SlicePolynomial p{kK, 1.0, kJ};
  reg = regularize(SemiregularFunction(p), 1.0);
  CHECK_FALSE(reg.g.has_poles());
  CHECK(dist(eval(reg.h, 0.3 + kI), eval(p, 0.3 + kI)) < 1e-15);

  const SemiregularFunction q(SlicePolynomial::linear(0.5), kX2p1);
  reg = regularize(q, 1.0);
  const SemiregularFunction g1 = blaschke_real(0.5, 1.0);
  test::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const Quaternion x = 0.5 + rng.quaternion(1e-3);
    CHECK(dist(eval(reg.g, x), eval(g1, x)) < 1e-12);
    CHECK(std::isfinite(abs(eval(reg.h, x))));
    CHECK(abs(eval(reg.h, x)) < 10.0);
  }
  CHECK(pole_structure(reg.h, 1.0).poles.empty());

  try {
    regularize(q, 0.5);
    FAIL("expected PoleOnBoundary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleOnBoundary);
  }
  try {
    regularize(q, 0.3);
    FAIL("expected PoleOutsideRegion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleOutsideRegion);
  }
}

TEST_CASE("regularize keeps the zeros for uniform poles") {
  const SemiregularFunction f(SlicePolynomial{0.25, 0.0, 1.0},
                              SlicePolynomial::linear(0.4) * SlicePolynomial::linear(-0.2 * kK));
  const Regularization reg = regularize(f, 1.0);
  auto zf = classify_zeros(f);
  auto zh = classify_zeros(reg.h);
  std::erase_if(zh, [](const ZeroRecord& z) { return abs(z.representative) >= 1.0; });
  REQUIRE(zf.size() == zh.size());
  auto key = [](const ZeroRecord& a, const ZeroRecord& b) { return a.beta < b.beta; };
  std::sort(zf.begin(), zf.end(), key);
  std::sort(zh.begin(), zh.end(), key);
  for (std::size_t k = 0; k < zf.size(); ++k) {
    CHECK(dist(zf[k].representative, zh[k].representative) < 1e-10);
    CHECK(zf[k].total_multiplicity == zh[k].total_multiplicity);
  }
}
