#include <doctest.h>

#include "kinemalab/polytope.hpp"

#include <random>

using namespace kinemalab;

namespace {

HPolytope unit_square() { return HPolytope::cube(2, 0.0, 1.0); }

HPolytope unit_triangle() {
  // conv{(0,0),(1,0),(0,1)}
  Mat A(3, 2);
  A << -1, 0, 0, -1, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  Vec b(3);
  b << 0, 0, 1 / std::sqrt(2.0);
  return HPolytope(2, A, b);
}

HPolytope unit_simplex3() {
  Mat A(4, 3);
  Scalar s = 1 / std::sqrt(3.0);
  A << -1, 0, 0, 0, -1, 0, 0, 0, -1, s, s, s;
  Vec b(4);
  b << 0, 0, 0, s;
  return HPolytope(3, A, b);
}

}  // namespace

TEST_CASE("support function of boxes and simplices") {
  HPolytope K = unit_square();
  Vec u(2);
  u << 1, 1;
  u.normalize();
  CHECK(support(K, u) == doctest::Approx(std::sqrt(2.0)));
  u << -1, 0;
  CHECK(support(K, u) == doctest::Approx(0.0));

  HPolytope S = unit_simplex3();
  Vec e3(3);
  e3 << 0, 0, 1;
  CHECK(support(S, e3) == doctest::Approx(1.0));
}

TEST_CASE("support is additive under minkowski sum") {
  HPolytope K = unit_square();
  HPolytope T = unit_triangle();
  HPolytope S = minkowski_sum(K, T);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 32; ++i) {
    Vec u(2);
    u << gauss(rng), gauss(rng);
    u.normalize();
    CHECK(support(S, u) == doctest::Approx(support(K, u) + support(T, u)).epsilon(1e-9));
  }
}

TEST_CASE("support errors on unbounded directions") {
  Mat A(1, 2);
  A << 1, 0;
  Vec b(1);
  b << 1;
  HPolytope H(2, A, b);  // halfplane
  Vec u(2);
  u << 0, 1;
  CHECK_THROWS_AS(support(H, u), UnboundedDirection);
  CHECK(is_bounded(H) == false);
  CHECK(is_bounded(unit_square()) == true);
}

TEST_CASE("cap of a box") {
  HPolytope K = unit_square();
  Vec e2(2);
  e2 << 0, 1;
  HPolytope C = cap(K, e2, 0.25);
  Vec inside(2), outside(2);
  inside << 0.5, 0.9;
  outside << 0.5, 0.7;
  CHECK(C.contains(inside));
  CHECK(!C.contains(outside));
  CHECK(volume(C) == doctest::Approx(0.25));

  // t >= width in direction: cap is all of K.
  HPolytope C2 = cap(K, e2, 2.0);
  CHECK(volume(C2) == doctest::Approx(1.0));
}

TEST_CASE("cap of the unit triangle along the diagonal is the whole body") {
  // By hand: h = 1/sqrt(2), all vertices within depth sqrt(2)/2 of it.
  HPolytope T = unit_triangle();
  Vec n(2);
  n << 1, 1;
  n.normalize();
  HPolytope C = cap(T, n, std::sqrt(2.0) / 2.0);
  CHECK(volume(C) == doctest::Approx(0.5));
}

TEST_CASE("cap monotonicity and sum behavior") {
  HPolytope K1 = unit_square();
  HPolytope K2 = unit_triangle();
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 8; ++i) {
    Vec n(2);
    n << gauss(rng), gauss(rng);
    n.normalize();
    Scalar t1 = 0.2, t2 = 0.35;
    // cap(K,n,t1) subset of cap(K,n,t2)
    HPolytope small = cap(K1, n, t1);
    HPolytope big = cap(K1, n, t2);
    Mat V = enumerate_vertices(small).vertices;
    for (Index r = 0; r < V.rows(); ++r) {
      CHECK(big.contains(V.row(r).transpose(), 1e-7));
    }
    // C(K1,n,t1) + C(K2,n,t2) is contained in C(K1+K2,n,t1+t2). Equality
    // can fail for general pairs (square + triangle is a counterexample),
    // so only the inclusion is asserted here; the equality case for
    // homothetic pairs is covered below.
    HPolytope lhs = minkowski_sum(cap(K1, n, t1), cap(K2, n, t2));
    HPolytope rhs = cap(minkowski_sum(K1, K2), n, t1 + t2);
    for (int k = 0; k < 16; ++k) {
      Vec u(2);
      u << gauss(rng), gauss(rng);
      u.normalize();
      CHECK(support(lhs, u) <= support(rhs, u) + 1e-8);
    }
  }
}

TEST_CASE("cap sum identity on homothetic pairs") {
  // For K2 = lambda K1 and proportional widths the identity
  // C(K1,n,s) + C(K2,n,lambda s) = C(K1+K2,n,(1+lambda)s) is exact.
  HPolytope K1 = unit_triangle();
  Scalar lambda = 2.0;
  HPolytope K2(2, K1.normals, lambda * K1.offsets);
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 8; ++i) {
    Vec n(2);
    n << gauss(rng), gauss(rng);
    n.normalize();
    Scalar s = 0.15;
    HPolytope lhs = minkowski_sum(cap(K1, n, s), cap(K2, n, lambda * s));
    HPolytope rhs = cap(minkowski_sum(K1, K2), n, (1 + lambda) * s);
    for (int k = 0; k < 16; ++k) {
      Vec u(2);
      u << gauss(rng), gauss(rng);
      u.normalize();
      CHECK(support(lhs, u) == doctest::Approx(support(rhs, u)).epsilon(1e-8));
    }
  }
}

TEST_CASE("width of boxes and degenerate rejection") {
  CHECK(width(unit_square()).upper == doctest::Approx(1.0));
  CHECK(width(HPolytope::cube(3, 0.0, 1.0)).upper == doctest::Approx(1.0));

  // A segment in R^2 is degenerate.
  Mat A(4, 2);
  A << 1, 0, -1, 0, 0, 1, 0, -1;
  Vec b(4);
  b << 1, 1, 0, 0;  // [-1,1] x {0}
  CHECK_THROWS_AS(width(HPolytope(2, A, b)), DegeneratePolytope);
}

TEST_CASE("width bracket on random 3d hulls") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 4; ++trial) {
    Mat pts(8, 3);
    for (Index i = 0; i < 8; ++i) {
      for (int j = 0; j < 3; ++j) pts(i, j) = gauss(rng);
    }
    VPolytope V;
    V.dim = 3;
    V.vertices = pts;
    HPolytope K = hull_halfspaces(V);
    WidthResult w = width(K);
    CHECK(w.lower <= w.upper + 1e-12);
    // Upper bound is attained: check the witness direction.
    Scalar b = support(K, w.direction) + support(K, -w.direction);
    CHECK(b == doctest::Approx(w.upper).epsilon(1e-7));
    // No sampled direction beats the reported lower bound.
    for (int k = 0; k < 200; ++k) {
      Vec u(3);
      u << gauss(rng), gauss(rng), gauss(rng);
      u.normalize();
      CHECK(support(K, u) + support(K, -u) >= w.lower - 1e-7);
    }
  }
}

TEST_CASE("minkowski sums of boxes") {
  HPolytope K = unit_square();
  HPolytope S = minkowski_sum(K, K);
  CHECK(volume(S) == doctest::Approx(4.0));
  Vec corner(2);
  corner << 2, 2;
  CHECK(S.contains(corner, 1e-7));

  HPolytope D = difference_body(K);
  CHECK(volume(D) == doctest::Approx(4.0));
  Vec c2(2);
  c2 << -1, -1;
  CHECK(D.contains(c2, 1e-7));
}

TEST_CASE("difference body of the unit triangle is the hand-computed hexagon") {
  // Oracle: hull of pairwise vertex differences.
  HPolytope D = difference_body(unit_triangle());
  Mat expected(6, 2);
  expected << 1, 0, -1, 0, 0, 1, 0, -1, 1, -1, -1, 1;
  VPolytope V = enumerate_vertices(D);
  REQUIRE(V.num_vertices() == 6);
  for (Index i = 0; i < 6; ++i) {
    Scalar best = 1e18;
    for (Index j = 0; j < V.num_vertices(); ++j) {
      best = std::min(best, (V.vertices.row(j) - expected.row(i)).norm());
    }
    CHECK(best < 1e-8);
  }
}

TEST_CASE("intersection of boxes") {
  HPolytope A = unit_square();
  Vec lo(2), hi(2);
  lo << 0.5, 0;
  hi << 1.5, 1;
  auto I = intersect(A, HPolytope::box(lo, hi));
  REQUIRE(I.has_value());
  CHECK(volume(*I) == doctest::Approx(0.5));

  lo << 2, 2;
  hi << 3, 3;
  CHECK(!intersect(A, HPolytope::box(lo, hi)).has_value());

  // Touching boxes are ambiguous at tolerance.
  lo << 1, 0;
  hi << 2, 1;
  CHECK_THROWS_AS(intersect(A, HPolytope::box(lo, hi)), ToleranceAmbiguity);
}

TEST_CASE("rotated cube intersection volume matches monte carlo membership") {
  HPolytope A = HPolytope::cube(3, 0.0, 1.0);
  Scalar ang = M_PI / 4;
  Mat R(3, 3);
  R << std::cos(ang), -std::sin(ang), 0, std::sin(ang), std::cos(ang), 0, 0, 0, 1;
  Mat Arot = A.normals * R.transpose();
  Vec shift(3);
  shift << 0.5, 0, 0;
  Vec brot = A.offsets + Arot * shift;
  HPolytope B(3, Arot, brot);
  auto I = intersect(A, B);
  REQUIRE(I.has_value());
  Scalar vol = volume(*I);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int n = 200000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    Vec x(3);
    x << unif(rng), unif(rng), unif(rng);
    if (B.contains(x)) ++hits;
  }
  Scalar p = Scalar(hits) / n;
  Scalar mc = p;  // box volume is 1
  Scalar se = std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(vol - mc) <= 3 * se);
}

TEST_CASE("extreme point pruning") {
  Mat pts(5, 2);
  pts << 0, 0, 1, 0, 0, 1, 1, 1, 0.5, 0.5;  // center is redundant
  VPolytope V;
  V.dim = 2;
  V.vertices = pts;
  VPolytope E = extreme_points(V);
  CHECK(E.num_vertices() == 4);
}

TEST_CASE("affine poly detects implicit equalities") {
  // Square sliced by the implicit equality pair x <= 0.5, -x <= -0.5.
  Mat A(6, 2);
  A << 1, 0, -1, 0, 0, 1, 0, -1, 1, 0, -1, 0;
  Vec b(6);
  b << 1, 0, 1, 0, 0.5, -0.5;
  AffinePoly F = affine_poly(A, b);
  REQUIRE(!F.empty);
  CHECK(F.dim() == 1);
  CHECK(volume(F) == doctest::Approx(1.0));  // the segment {0.5} x [0,1]
  Mat V = vertices_ambient(F);
  REQUIRE(V.rows() == 2);
  CHECK(V.col(0).minCoeff() == doctest::Approx(0.5));
  CHECK(V.col(0).maxCoeff() == doctest::Approx(0.5));
}
