#include "kinemalab/linprog.hpp"

#include <limits>

namespace kinemalab {

namespace {

constexpr Scalar kPivotTol = 1e-11;

// Tableau simplex on  min c.y, M y = rhs, y >= 0,  rhs >= 0, starting from
// the given basis. Bland's rule. Returns false when unbounded.
bool simplex_core(Mat& T, std::vector<int>& basis, Index rows, Index cols) {
  const int max_iter = 20000;
  for (int iter = 0; iter < max_iter; ++iter) {
    // Entering column: first with negative reduced cost (Bland).
    Index enter = -1;
    for (Index j = 0; j < cols; ++j) {
      if (T(rows, j) < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;  // optimal
    // Ratio test with Bland tie-break on basis index.
    Index leave = -1;
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (Index i = 0; i < rows; ++i) {
      if (T(i, enter) > kPivotTol) {
        Scalar ratio = T(i, cols) / T(i, enter);
        if (ratio < best - kPivotTol ||
            (ratio < best + kPivotTol && (leave < 0 || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return false;  // unbounded
    // Pivot.
    T.row(leave) /= T(leave, enter);
    for (Index i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      Scalar factor = T(i, enter);
      if (factor != 0.0) T.row(i) -= factor * T.row(leave);
    }
    basis[leave] = static_cast<int>(enter);
  }
  throw std::runtime_error("simplex: iteration cap exceeded");
}

}  // namespace

LpResult solve_lp(const Vec& c, const Mat& A, const Vec& b, const Mat& E, const Vec& f) {
  const Index n = c.size();
  const Index mi = A.rows();
  const Index me = E.rows();
  const Index m = mi + me;

  // Variables: x = u - v with u, v >= 0, slacks s >= 0 on inequality rows,
  // one artificial per row for phase 1.
  const Index nu = n, nv = n, ns = mi, na = m;
  const Index cols = nu + nv + ns + na;

  Mat T = Mat::Zero(m + 1, cols + 1);
  for (Index i = 0; i < mi; ++i) {
    Scalar sign = (b(i) < 0) ? -1.0 : 1.0;
    T.block(i, 0, 1, n) = sign * A.row(i);
    T.block(i, n, 1, n) = -sign * A.row(i);
    T(i, nu + nv + i) = sign;  // slack
    T(i, cols) = sign * b(i);
  }
  for (Index i = 0; i < me; ++i) {
    Scalar sign = (f(i) < 0) ? -1.0 : 1.0;
    T.block(mi + i, 0, 1, n) = sign * E.row(i);
    T.block(mi + i, n, 1, n) = -sign * E.row(i);
    T(mi + i, cols) = sign * f(i);
  }
  for (Index i = 0; i < m; ++i) T(i, nu + nv + ns + i) = 1.0;

  std::vector<int> basis(m);
  for (Index i = 0; i < m; ++i) basis[i] = static_cast<int>(nu + nv + ns + i);

  // Phase 1: minimize sum of artificials.
  for (Index j = nu + nv + ns; j < cols; ++j) T(m, j) = 1.0;
  for (Index i = 0; i < m; ++i) T.row(m) -= T.row(i);
  simplex_core(T, basis, m, cols);
  Scalar rhs_scale = 1.0;
  if (b.size() > 0) rhs_scale = std::max(rhs_scale, b.cwiseAbs().maxCoeff());
  if (f.size() > 0) rhs_scale = std::max(rhs_scale, f.cwiseAbs().maxCoeff());
  Scalar phase1 = -T(m, cols);
  if (phase1 > 1e-8 * rhs_scale) return {LpStatus::Infeasible, Vec(), 0};

  // Drive artificials out of the basis where possible.
  for (Index i = 0; i < m; ++i) {
    if (basis[i] >= nu + nv + ns) {
      Index enter = -1;
      for (Index j = 0; j < nu + nv + ns; ++j) {
        if (std::abs(T(i, j)) > 1e-7) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) {
        T.row(i) /= T(i, enter);
        for (Index k = 0; k <= m; ++k) {
          if (k == i) continue;
          Scalar factor = T(k, enter);
          if (factor != 0.0) T.row(k) -= factor * T.row(i);
        }
        basis[i] = static_cast<int>(enter);
      }
    }
  }

  // Phase 2: minimize -c.x; artificial columns are zeroed so they can never
  // re-enter the basis (remaining basic artificials sit at level zero on
  // redundant rows).
  T.block(0, nu + nv + ns, m + 1, na).setZero();
  T.row(m).setZero();
  T.block(m, 0, 1, n) = -c.transpose();
  T.block(m, n, 1, n) = c.transpose();
  for (Index i = 0; i < m; ++i) {
    if (basis[i] < nu + nv + ns) {
      Scalar factor = T(m, basis[i]);
      if (factor != 0.0) T.row(m) -= factor * T.row(i);
    }
  }
  bool bounded = simplex_core(T, basis, m, cols);
  if (!bounded) return {LpStatus::Unbounded, Vec(), 0};

  Vec y = Vec::Zero(cols);
  for (Index i = 0; i < m; ++i) {
    if (basis[i] < cols) y(basis[i]) = T(i, cols);
  }
  LpResult res;
  res.status = LpStatus::Optimal;
  res.x = y.segment(0, n) - y.segment(n, n);
  res.value = c.dot(res.x);
  return res;
}

LpResult lp_feasible(const Mat& A, const Vec& b, const Mat& E, const Vec& f) {
  Index n = A.cols() > 0 ? A.cols() : E.cols();
  return solve_lp(Vec::Zero(n), A, b, E, f);
}

ChebyshevResult chebyshev_center(const Mat& A, const Vec& b, const Mat& E, const Vec& f) {
  const Index n = A.cols() > 0 ? A.cols() : E.cols();
  const Index mi = A.rows();
  // Variables (x, r): maximize r with a_i.x + |a_i| r <= b_i; equality rows
  // do not see r.
  Mat A2 = Mat::Zero(mi, n + 1);
  Vec b2(mi);
  for (Index i = 0; i < mi; ++i) {
    A2.block(i, 0, 1, n) = A.row(i);
    A2(i, n) = A.row(i).norm();
    b2(i) = b(i);
  }
  Mat E2(E.rows(), n + 1);
  if (E.rows() > 0) {
    E2.setZero();
    E2.block(0, 0, E.rows(), n) = E;
  }
  Vec c = Vec::Zero(n + 1);
  c(n) = 1.0;
  LpResult lp = solve_lp(c, A2, b2, E2, f);
  ChebyshevResult res;
  if (lp.status == LpStatus::Unbounded) {
    LpResult feas = lp_feasible(A, b, E, f);
    if (feas.status == LpStatus::Optimal) {
      res.feasible = true;
      res.center = feas.x;
      res.radius = std::numeric_limits<Scalar>::infinity();
    }
    return res;
  }
  if (lp.status != LpStatus::Optimal) return res;
  res.feasible = lp.value >= -kTol;
  res.center = lp.x.segment(0, n);
  res.radius = lp.value;
  return res;
}

}  // namespace kinemalab
