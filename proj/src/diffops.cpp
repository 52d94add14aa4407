#include "qjensen/diffops.hpp"

#include "qjensen/error.hpp"

namespace qjensen {

namespace {

constexpr Quaternion kBasis[4] = {kOne, kI, kJ, kK};

Quaternion shifted(const Quaternion& x, int axis, double t) { return x + t * kBasis[axis]; }

}  // namespace

double default_step(const Quaternion& x) { return 1e-3 * (1.0 + abs(x)); }
double bilaplacian_step(const Quaternion& x) { return 3e-2 * (1.0 + abs(x)); }

Quaternion fd_partial(const QuaternionField& u, int axis, const Quaternion& x, const Stencil4D& s) {
  if (axis < 0 || axis > 3) throw Error(ErrorKind::InvalidArgument, "axis must be 0..3");
  const double h = s.h;
  if (s.order == 2) return (u(shifted(x, axis, h)) - u(shifted(x, axis, -h))) / (2.0 * h);
  if (s.order == 4) {
    return (-1.0 * u(shifted(x, axis, 2 * h)) + 8.0 * u(shifted(x, axis, h)) -
            8.0 * u(shifted(x, axis, -h)) + u(shifted(x, axis, -2 * h))) /
           (12.0 * h);
  }
  throw Error(ErrorKind::InvalidArgument, "stencil order must be 2 or 4");
}

Quaternion fd_crf(const QuaternionField& f, const Quaternion& x, double h) {
  Quaternion acc = fd_partial(f, 0, x, h);
  for (int a = 1; a < 4; ++a) acc += kBasis[a] * fd_partial(f, a, x, h);
  return acc;
}

Quaternion fd_crf_conj(const QuaternionField& f, const Quaternion& x, double h) {
  Quaternion acc = fd_partial(f, 0, x, h);
  for (int a = 1; a < 4; ++a) acc -= kBasis[a] * fd_partial(f, a, x, h);
  return acc;
}

Quaternion fd_gamma(const QuaternionField& f, const Quaternion& x, double h) {
  const Quaternion d1 = fd_partial(f, 1, x, h);
  const Quaternion d2 = fd_partial(f, 2, x, h);
  const Quaternion d3 = fd_partial(f, 3, x, h);
  const Quaternion l23 = x.y * d3 - x.z * d2;
  const Quaternion l13 = x.x * d3 - x.z * d1;
  const Quaternion l12 = x.x * d2 - x.y * d1;
  return -1.0 * (kI * l23) + kJ * l13 - kK * l12;
}

Quaternion fd_laplace4(const QuaternionField& u, const Quaternion& x, double h) {
  const Quaternion center = u(x);
  Quaternion acc;
  for (int a = 0; a < 4; ++a) {
    acc += u(shifted(x, a, h)) + u(shifted(x, a, -h)) - 2.0 * center;
  }
  return acc / (h * h);
}

Quaternion fd_bilaplace4(const QuaternionField& u, const Quaternion& x, double h) {
  return fd_laplace4([&](const Quaternion& y) { return fd_laplace4(u, y, h); }, x, h);
}

Quaternion richardson(const std::function<Quaternion(double)>& estimate, double h) {
  return (4.0 * estimate(0.5 * h) - estimate(h)) / 3.0;
}

QuaternionField real_field(std::function<double(const Quaternion&)> u) {
  return [u = std::move(u)](const Quaternion& x) { return Quaternion(u(x)); };
}

QuaternionField as_field(const SlicePolynomial& f) {
  return [f](const Quaternion& x) { return eval(f, x); };
}

QuaternionField spherical_derivative_field(const SlicePolynomial& f) {
  return [f](const Quaternion& x) { return spherical_derivative(f, x); };
}

Quaternion twice_slice_derivative_of_spherical_derivative(const SlicePolynomial& f,
                                                          const Quaternion& x) {
  const SlicePoint p = decompose(x);
  if (!p.unit_defined) throw Error(ErrorKind::InvalidArgument, "requires a nonreal point");
  const double beta = p.beta;
  const StemValue s = stem_components(f, p.shadow());
  const StemValue d = stem_components(slice_derivative(f), p.shadow());
  return d.f2 / beta - p.unit.value() * (d.f1 / beta - s.f2 / (beta * beta));
}

}  // namespace qjensen
