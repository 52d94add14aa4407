#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "qjensen/diffops.hpp"
#include "qjensen/error.hpp"
#include "qjensen/suites.hpp"

using namespace qjensen;
using test::dist;

TEST_CASE("fd_partial") {
  const QuaternionField sq = real_field([](const Quaternion& x) { return x.w * x.w; });
  CHECK(dist(fd_partial(sq, 0, 1.0, 1e-3), 2.0) < 1e-9);
  CHECK(dist(fd_partial(real_field([](const Quaternion&) { return 4.0; }), 2, kJ, 1e-3), 0.0) == 0.0);
  const QuaternionField prod = real_field([](const Quaternion& x) { return x.w * x.x; });
  CHECK(dist(fd_partial(prod, 1, Quaternion(2, 3, 0, 0), 1e-3), 2.0) < 1e-9);

  // central differences are odd in h
  const QuaternionField cube = real_field([](const Quaternion& x) { return x.y * x.y * x.y + x.w; });
  const Quaternion p{0.3, 0.1, 0.7, -0.2};
  CHECK(dist(fd_partial(cube, 2, p, 1e-3), fd_partial(cube, 2, p, -1e-3)) < 1e-12);
  // the 4th-order stencil is exact on cubics up to roundoff
  CHECK(dist(fd_partial(cube, 2, p, Stencil4D{1e-2, 4}), 3 * 0.49) < 1e-11);
  CHECK_THROWS_AS(fd_partial(cube, 4, p, 1e-3), Error);
}

TEST_CASE("fd_crf pins the left-unit convention") {
  CHECK(dist(fd_crf(as_field(SlicePolynomial::identity()), 0.3 + kK, 1e-3), -2.0) < 1e-10);
  // f = x k: left units give -2 f'_s = -2k, right units would give +2k
  const SlicePolynomial xk{0.0, kK};
  CHECK(dist(fd_crf(as_field(xk), Quaternion(0.2, 0.4, -0.1, 0.3), 1e-3), -2.0 * kK) < 1e-9);

  const SlicePolynomial x2{0.0, 0.0, 1.0};
  const Quaternion x{0.6, -0.2, 0.5, 0.1};
  CHECK(dist(fd_crf(as_field(x2), x, 1e-3), -4.0 * x.w) < 1e-8);
  CHECK(dist(fd_crf(as_field(x2), x, 1e-3), -2.0 * spherical_derivative(x2, x)) < 1e-8);
  CHECK(dist(fd_crf(as_field(SlicePolynomial::constant(kJ)), x, 1e-3), 0.0) == 0.0);

  // d_CRF f = 2 f' + 2 f'_s
  test::Rng rng(3);
  const SlicePolynomial f = rng.poly(4);
  const Quaternion y = rng.nonreal();
  const Quaternion closed = 2.0 * eval(slice_derivative(f), y) + 2.0 * spherical_derivative(f, y);
  CHECK(dist(fd_crf_conj(as_field(f), y, 1e-3), closed) < 1e-5);
}

TEST_CASE("fd_gamma") {
  CHECK(dist(fd_gamma(as_field(SlicePolynomial::identity()), 1.0 + 2.0 * kJ, 1e-3), 4.0 * kJ) < 1e-9);
  const QuaternionField re2 = [](const Quaternion& x) { return Quaternion(2.0 * x.w); };
  CHECK(dist(fd_gamma(re2, Quaternion(0.3, 0.5, -0.2, 0.4), 1e-3), 0.0) < 1e-12);
  const SlicePolynomial x2{0.0, 0.0, 1.0};
  CHECK(dist(fd_gamma(as_field(x2), kI, 1e-3), 0.0) < 1e-9);
}

TEST_CASE("laplacians") {
  const QuaternionField r2 = real_field([](const Quaternion& x) { return norm2(x); });
  CHECK(dist(fd_laplace4(r2, Quaternion(0.2, -0.3, 0.1, 0.5), 1e-3), 8.0) < 1e-6);
  const QuaternionField harm = real_field([](const Quaternion& x) { return x.w * x.w - x.x * x.x; });
  CHECK(dist(fd_laplace4(harm, Quaternion(0.7, 0.1, 0.2, 0.3), 1e-3), 0.0) < 1e-6);

  // log|x + 1| in R^4 has Laplacian 2 / |x + 1|^2
  const QuaternionField lg = real_field([](const Quaternion& x) { return std::log(abs(x + 1.0)); });
  const Quaternion est = richardson([&](double h) { return fd_laplace4(lg, 0.0, h); }, 3e-2);
  CHECK(dist(est, 2.0) < 1e-4);
  const Quaternion raw = fd_laplace4(lg, 0.0, 3e-2);
  CHECK(dist(est, 2.0) < dist(raw, 2.0) / 10.0);

  // x^2 (x0^2 - x1^2) has bilaplacian 0, |x|^4 has bilaplacian 192
  const QuaternionField r4 = real_field([](const Quaternion& x) { return norm2(x) * norm2(x); });
  CHECK(dist(fd_bilaplace4(r4, Quaternion(0.1, 0.2, 0.0, -0.1), 3e-2), 192.0) < 1e-6);
  test::Rng rng(5);
  const SlicePolynomial f = rng.poly(6);
  const Quaternion p = rng.quaternion(0.5);
  const QuaternionField ff = as_field(f);
  const Quaternion bi = richardson([&](double h) { return fd_bilaplace4(ff, p, h); }, 3e-2);
  CHECK(abs(bi) < 1e-3);
}

TEST_CASE("spherical derivative is harmonic") {
  test::Rng rng(7);
  const SlicePolynomial f = rng.poly(5);
  const Quaternion x = rng.nonreal(0.8, 0.2);
  const QuaternionField sd = spherical_derivative_field(f);
  const double r1 = abs(fd_laplace4(sd, x, 2e-3));
  const double r2 = abs(fd_laplace4(sd, x, 1e-3));
  CHECK(r2 < 1e-4);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("d_CRF of the spherical derivative") {
  test::Rng rng(9);
  const SlicePolynomial f = rng.poly(5);
  const Quaternion x = rng.nonreal(0.8, 0.2);
  const Quaternion fd = fd_crf_conj(spherical_derivative_field(f), x, 1e-3);
  CHECK(dist(fd, twice_slice_derivative_of_spherical_derivative(f, x)) < 1e-5);
  CHECK_THROWS_AS(twice_slice_derivative_of_spherical_derivative(f, 0.5), Error);
}

TEST_CASE("seeded suites") {
  for (const std::string& name : suite_names()) {
    const SuiteResult s = run_suite(name, 7, 20);
    CAPTURE(name);
    CHECK(s.rows.size() >= 20u);
    CHECK(s.pass());
    for (const ResidualRow& row : s.rows) {
      CHECK(row.terminal <= row.tolerance);
      if (row.expected_order == 2) {
        CHECK(row.ratio >= kRatioLow);
        CHECK(row.ratio <= kRatioHigh);
      }
    }
  }
  CHECK(to_json(run_suite("gamma", 3, 5)) == to_json(run_suite("gamma", 3, 5)));
  CHECK(to_csv(run_suite("crf", 3, 5)) != to_csv(run_suite("crf", 4, 5)));
  try {
    run_suite("no-such-suite", 1);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}
