#include "kinemalab/min_norm.hpp"

#include <limits>
#include <vector>

namespace kinemalab {

namespace {

// Minimum-norm point of the affine hull of the selected rows: solve
// [S S^T 1; 1^T 0] [w; mu] = [0; 1].
Vec affine_min_norm_weights(const Mat& P, const std::vector<Index>& S) {
  const Index k = static_cast<Index>(S.size());
  Mat M(k + 1, k + 1);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) M(i, j) = P.row(S[i]).dot(P.row(S[j]));
    M(i, k) = 1.0;
    M(k, i) = 1.0;
  }
  M(k, k) = 0.0;
  Vec rhs = Vec::Zero(k + 1);
  rhs(k) = 1.0;
  Vec sol = M.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(k);
}

}  // namespace

MinNormResult min_norm_point(const Mat& P, Scalar tol) {
  const Index n = P.rows();
  const Index d = P.cols();
  if (n == 0) throw std::invalid_argument("min_norm_point: empty point set");

  // Start from the smallest-norm input point.
  Index start = 0;
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (Index i = 0; i < n; ++i) {
    Scalar s = P.row(i).squaredNorm();
    if (s < best) {
      best = s;
      start = i;
    }
  }
  std::vector<Index> corral{start};
  Vec weights = Vec::Ones(1);
  Vec x = P.row(start).transpose();

  const int max_outer = 1000;
  for (int outer = 0; outer < max_outer; ++outer) {
    // Optimality: min_p <x, p> >= |x|^2 - tol.
    Index enter = -1;
    Scalar min_dot = std::numeric_limits<Scalar>::infinity();
    for (Index i = 0; i < n; ++i) {
      Scalar dp = P.row(i).dot(x);
      if (dp < min_dot) {
        min_dot = dp;
        enter = i;
      }
    }
    Scalar scale = std::max(Scalar(1), x.squaredNorm());
    if (min_dot >= x.squaredNorm() - tol * scale - 1e-14) break;
    bool already = false;
    for (Index i : corral) {
      if (i == enter) {
        already = true;
        break;
      }
    }
    if (already) break;  // numerically stalled
    corral.push_back(enter);
    Vec w2(corral.size());
    w2.head(weights.size()) = weights;
    w2(corral.size() - 1) = 0.0;
    weights = w2;

    // Inner loop: pull towards the affine minimizer, trimming until the
    // weights are a convex combination.
    for (int inner = 0; inner < 1000; ++inner) {
      Vec v = affine_min_norm_weights(P, corral);
      if (v.minCoeff() > -1e-12) {
        weights = v;
        break;
      }
      // Line search from weights to v stopping at the first vanishing weight.
      Scalar theta = 1.0;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        Scalar diff = weights(i) - v(i);
        if (diff > 1e-14) theta = std::min(theta, weights(i) / diff);
      }
      weights = weights + theta * (v - weights);
      std::vector<Index> keep;
      std::vector<Scalar> kw;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (weights(i) > 1e-12) {
          keep.push_back(corral[i]);
          kw.push_back(weights(i));
        }
      }
      if (keep.empty()) {
        keep.push_back(corral[0]);
        kw.push_back(1.0);
      }
      corral = keep;
      weights.resize(kw.size());
      for (std::size_t i = 0; i < kw.size(); ++i) weights(i) = kw[i];
    }
    x = Vec::Zero(d);
    for (std::size_t i = 0; i < corral.size(); ++i) x += weights(i) * P.row(corral[i]).transpose();
  }

  MinNormResult res;
  res.point = x;
  res.norm = x.norm();
  res.coefficients = Vec::Zero(n);
  for (std::size_t i = 0; i < corral.size(); ++i) res.coefficients(corral[i]) += weights(i);
  return res;
}

}  // namespace kinemalab
