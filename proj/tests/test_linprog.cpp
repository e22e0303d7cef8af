#include <doctest.h>

#include "kinemalab/linprog.hpp"

#include <functional>
#include <random>

using namespace kinemalab;

TEST_CASE("lp on the unit square") {
  Mat A(4, 2);
  A << 1, 0, -1, 0, 0, 1, 0, -1;
  Vec b(4);
  b << 1, 0, 1, 0;

  Vec c(2);
  c << 1, 1;
  LpResult lp = solve_lp(c, A, b);
  REQUIRE(lp.status == LpStatus::Optimal);
  CHECK(lp.value == doctest::Approx(2.0));

  c << -1, 0.5;
  lp = solve_lp(c, A, b);
  REQUIRE(lp.status == LpStatus::Optimal);
  CHECK(lp.value == doctest::Approx(0.5));
  CHECK(lp.x(0) == doctest::Approx(0.0));
  CHECK(lp.x(1) == doctest::Approx(1.0));
}

TEST_CASE("infeasible and unbounded detection") {
  Mat A(2, 1);
  A << 1, -1;
  Vec b(2);
  b << 0, -1;  // x <= 0 and x >= 1
  CHECK(lp_feasible(A, b).status == LpStatus::Infeasible);

  Mat A2(1, 1);
  A2 << -1;
  Vec b2(1);
  b2 << 0;  // x >= 0
  Vec c(1);
  c << 1;
  CHECK(solve_lp(c, A2, b2).status == LpStatus::Unbounded);
}

TEST_CASE("equality constraints") {
  // max 2x + y on the segment {x + y = 1} inside the unit square.
  Mat A(4, 2);
  A << 1, 0, -1, 0, 0, 1, 0, -1;
  Vec b(4);
  b << 1, 0, 1, 0;
  Mat E(1, 2);
  E << 1, 1;
  Vec f(1);
  f << 1;
  Vec c(2);
  c << 2, 1;
  LpResult lp = solve_lp(c, A, b, E, f);
  REQUIRE(lp.status == LpStatus::Optimal);
  CHECK(lp.value == doctest::Approx(2.0));
  CHECK(lp.x(0) == doctest::Approx(1.0));
}

TEST_CASE("chebyshev center of a box") {
  Mat A(4, 2);
  A << 1, 0, -1, 0, 0, 1, 0, -1;
  Vec b(4);
  b << 2, 0, 1, 0;  // [0,2] x [0,1]
  ChebyshevResult cheb = chebyshev_center(A, b);
  REQUIRE(cheb.feasible);
  CHECK(cheb.radius == doctest::Approx(0.5));
  CHECK(cheb.center(1) == doctest::Approx(0.5));
}

TEST_CASE("random lp agrees with vertex enumeration oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + (trial % 2);
    const int m = 6 + d;
    Mat A(m + 2 * d, d);
    Vec b(m + 2 * d);
    for (int i = 0; i < m; ++i) {
      Vec n(d);
      for (int j = 0; j < d; ++j) n(j) = unif(rng);
      if (n.norm() < 1e-3) n(0) = 1.0;
      n.normalize();
      A.row(i) = n.transpose();
      b(i) = 0.3 + std::abs(unif(rng));  // keeps the origin inside
    }
    for (int j = 0; j < d; ++j) {
      A.row(m + 2 * j).setZero();
      A(m + 2 * j, j) = 1.0;
      b(m + 2 * j) = 2.0;
      A.row(m + 2 * j + 1).setZero();
      A(m + 2 * j + 1, j) = -1.0;
      b(m + 2 * j + 1) = 2.0;
    }
    Vec c(d);
    for (int j = 0; j < d; ++j) c(j) = unif(rng);

    LpResult lp = solve_lp(c, A, b);
    REQUIRE(lp.status == LpStatus::Optimal);

    double best = -1e18;
    std::vector<int> idx(d);
    std::function<void(int, int)> rec = [&](int start, int k) {
      if (k == d) {
        Mat M(d, d);
        Vec rhs(d);
        for (int r = 0; r < d; ++r) {
          M.row(r) = A.row(idx[r]);
          rhs(r) = b(idx[r]);
        }
        Eigen::FullPivLU<Mat> lu(M);
        lu.setThreshold(1e-9);
        if (lu.rank() < d) return;
        Vec x = lu.solve(rhs);
        for (Index i = 0; i < A.rows(); ++i) {
          if (A.row(i).dot(x) > b(i) + 1e-7) return;
        }
        best = std::max(best, c.dot(x));
        return;
      }
      for (Index i = start; i < A.rows(); ++i) {
        idx[k] = static_cast<int>(i);
        rec(static_cast<int>(i) + 1, k + 1);
      }
    };
    rec(0, 0);
    CHECK(lp.value == doctest::Approx(best).epsilon(1e-7));
  }
}
