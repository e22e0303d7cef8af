#include <doctest.h>

#include "kinemalab/cone.hpp"

#include <random>

using namespace kinemalab;

namespace {

Cone cone_of(std::initializer_list<std::initializer_list<Scalar>> rows) {
  Cone C;
  auto it = rows.begin();
  Index n = static_cast<Index>(rows.size());
  Index d = static_cast<Index>(it->size());
  C.generators.resize(n, d);
  Index r = 0;
  for (const auto& row : rows) {
    Index c = 0;
    for (Scalar v : row) C.generators(r, c++) = v;
    ++r;
  }
  return C;
}

}  // namespace

TEST_CASE("pointedness") {
  CHECK(is_pointed(cone_of({{1, 0}, {0, 1}})));
  CHECK(!is_pointed(cone_of({{1, 0}, {-1, 0}})));
  CHECK(!is_pointed(cone_of({{1, 0}, {-1, 1}, {-1, -1}})));
}

TEST_CASE("membership") {
  Cone C = cone_of({{1, 0}, {0, 1}});
  Vec x(2);
  x << 2, 3;
  CHECK(cone_contains(C, x));
  x << -0.1, 1;
  CHECK(!cone_contains(C, x));
}

TEST_CASE("planar fractions") {
  CHECK(spherical_fraction(cone_of({{1, 0}, {0, 1}})).fraction == doctest::Approx(0.25));
  // Single ray in the plane spans a 1-dimensional subspace.
  CHECK(spherical_fraction(cone_of({{1, 0}})).fraction == doctest::Approx(0.5));
  // 45-degree wedge.
  CHECK(spherical_fraction(cone_of({{1, 0}, {1, 1}})).fraction == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("orthant solid angle") {
  Cone C = cone_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(spherical_fraction(C).fraction == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("wider 3d cone via fan triangulation") {
  // Half-orthant union: generators of a square-based cone with apex angle
  // 90 degrees around the z axis.
  Cone C = cone_of({{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}});
  // Solid angle of a right square pyramid cone with half-diagonal angle 45:
  // Omega = 4 * asin(sin a sin a) with a = atan(1/sqrt(2))... checked
  // against direct Monte Carlo below instead of a formula.
  Scalar frac = spherical_fraction(C).fraction;
  std::mt19937_64 rng(31);
  std::normal_distribution<Scalar> gauss;
  int hits = 0, n = 200000;
  for (int i = 0; i < n; ++i) {
    Vec z(3);
    z << gauss(rng), gauss(rng), gauss(rng);
    if (cone_contains(C, z, 1e-9)) ++hits;
  }
  Scalar mc = Scalar(hits) / n;
  Scalar se = std::sqrt(mc * (1 - mc) / n);
  CHECK(std::abs(frac - mc) <= 4 * se);
}

TEST_CASE("gaussian sampling fraction in d=4") {
  Cone C;
  C.generators = Mat::Identity(4, 4);
  SphericalMeasure m = spherical_fraction(C, 100000, 99);
  CHECK(!m.exact);
  CHECK(std::abs(m.fraction - 1.0 / 16.0) <= 4 * m.stderr_);
}

TEST_CASE("extreme rays filter interior generators") {
  Cone C = cone_of({{1, 0}, {0, 1}, {1, 1}});
  Cone R = extreme_rays(C);
  CHECK(R.generators.rows() == 2);
}
