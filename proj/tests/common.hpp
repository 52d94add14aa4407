#pragma once

#include <cmath>
#include <random>

#include "qjensen/quaternion.hpp"
#include "qjensen/slice_poly.hpp"

namespace qjensen::test {

inline double dist(const Quaternion& a, const Quaternion& b) { return abs(a - b); }

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }

  Quaternion quaternion(double scale = 1.0) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
            uniform(-scale, scale)};
  }

  Quaternion unit_imaginary() {
    std::normal_distribution<double> g;
    const Quaternion v{0.0, g(gen), g(gen), g(gen)};
    return v / abs(v);
  }

  // alpha + J beta with beta >= min_beta.
  Quaternion nonreal(double scale = 1.0, double min_beta = 0.1) {
    return uniform(-scale, scale) + unit_imaginary() * uniform(min_beta, scale);
  }

  SlicePolynomial poly(int degree, double scale = 1.0) {
    std::vector<Quaternion> c;
    for (int m = 0; m <= degree; ++m) c.push_back(quaternion(scale));
    return SlicePolynomial(c);
  }

  SlicePolynomial real_poly(int degree) {
    std::vector<Quaternion> c;
    for (int m = 0; m <= degree; ++m) c.push_back(uniform(-1.0, 1.0));
    return SlicePolynomial(c);
  }
};

// Point of the sphere alpha + beta S through the unit J.
inline Quaternion on_sphere(double alpha, double beta, const Quaternion& unit) {
  return alpha + unit * beta;
}

}  // namespace qjensen::test
