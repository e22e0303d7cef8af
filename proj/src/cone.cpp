#include "kinemalab/cone.hpp"

#include "kinemalab/linprog.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace kinemalab {

Cone normalized(const Cone& C) {
  std::vector<Vec> gens;
  for (Index i = 0; i < C.generators.rows(); ++i) {
    Vec g = C.generators.row(i).transpose();
    Scalar n = g.norm();
    if (n < kTol) continue;
    g /= n;
    bool dup = false;
    for (const Vec& h : gens) {
      if ((g - h).norm() < 1e-10) {
        dup = true;
        break;
      }
    }
    if (!dup) gens.push_back(g);
  }
  Cone out;
  out.generators.resize(gens.size(), C.generators.cols());
  for (std::size_t i = 0; i < gens.size(); ++i) out.generators.row(i) = gens[i].transpose();
  return out;
}

Mat cone_span(const Cone& C) {
  if (C.generators.rows() == 0) return Mat(C.generators.cols(), 0);
  Eigen::JacobiSVD<Mat> svd(C.generators.transpose(), Eigen::ComputeFullU);
  svd.setThreshold(1e-9);
  return svd.matrixU().leftCols(svd.rank());
}

bool is_pointed(const Cone& C_in) {
  Cone C = normalized(C_in);
  const Index n = C.generators.rows();
  if (n == 0) return true;
  // 0 in conv(generators)?
  Mat E(C.ambient_dim() + 1, n);
  E.topRows(C.ambient_dim()) = C.generators.transpose();
  E.bottomRows(1).setOnes();
  Vec f = Vec::Zero(C.ambient_dim() + 1);
  f(C.ambient_dim()) = 1.0;
  Mat A = -Mat::Identity(n, n);
  Vec b = Vec::Zero(n);
  return lp_feasible(A, b, E, f).status != LpStatus::Optimal;
}

bool cone_contains(const Cone& C, const Vec& x, Scalar tol) {
  if (x.norm() < tol) return true;
  if (C.generators.rows() == 0) return false;
  const Index n = C.generators.rows();
  // Feasibility of G^T lambda = x, lambda >= 0, with a small slack box on
  // the equality handled by two inequalities.
  Mat A(2 * x.size() + n, n);
  Vec b(A.rows());
  A.topRows(x.size()) = C.generators.transpose();
  b.head(x.size()) = x.array() + tol;
  A.middleRows(x.size(), x.size()) = -C.generators.transpose();
  b.segment(x.size(), x.size()) = -(x.array() - tol);
  A.bottomRows(n) = -Mat::Identity(n, n);
  b.tail(n).setZero();
  return lp_feasible(A, b).status == LpStatus::Optimal;
}

Cone cone_sum(const Cone& A, const Cone& B) {
  Cone out;
  out.generators.resize(A.generators.rows() + B.generators.rows(),
                        A.generators.cols() > 0 ? A.generators.cols() : B.generators.cols());
  if (A.generators.rows() > 0) out.generators.topRows(A.generators.rows()) = A.generators;
  if (B.generators.rows() > 0) out.generators.bottomRows(B.generators.rows()) = B.generators;
  return normalized(out);
}

Cone extreme_rays(const Cone& C_in) {
  Cone C = normalized(C_in);
  const Index n = C.generators.rows();
  std::vector<Index> keep;
  for (Index i = 0; i < n; ++i) {
    Mat others(n - 1, C.ambient_dim());
    Index r = 0;
    for (Index j = 0; j < n; ++j) {
      if (j != i) others.row(r++) = C.generators.row(j);
    }
    Cone rest{others};
    if (!cone_contains(rest, C.generators.row(i).transpose(), 1e-9)) keep.push_back(i);
  }
  Cone out;
  out.generators.resize(keep.size(), C.ambient_dim());
  for (std::size_t i = 0; i < keep.size(); ++i) out.generators.row(i) = C.generators.row(keep[i]);
  return out;
}

Scalar spherical_triangle_angle(const Vec& a, const Vec& b, const Vec& c) {
  Mat M(3, 3);
  M.col(0) = a;
  M.col(1) = b;
  M.col(2) = c;
  Scalar det = M.determinant();
  Scalar denom = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(std::abs(det), denom);
}

SphericalMeasure spherical_fraction(const Cone& C_in, int n_mc, std::uint64_t seed) {
  Cone C = normalized(C_in);
  SphericalMeasure out;
  if (C.is_zero()) {
    out.fraction = 1.0;  // the polytope's own face
    return out;
  }
  Mat span = cone_span(C);
  const int m = static_cast<int>(span.cols());
  // Work in span coordinates.
  Mat G = C.generators * span;  // rows are generators in R^m
  if (m == 1) {
    out.fraction = 0.5;
    return out;
  }
  if (m == 2) {
    // Pointed planar cone: angular extent of the generators.
    Vec mean = G.colwise().mean().transpose().normalized();
    Scalar base = std::atan2(mean(1), mean(0));
    Scalar lo = 0, hi = 0;
    for (Index i = 0; i < G.rows(); ++i) {
      Scalar ang = std::atan2(G(i, 1), G(i, 0)) - base;
      while (ang > M_PI) ang -= 2 * M_PI;
      while (ang < -M_PI) ang += 2 * M_PI;
      lo = std::min(lo, ang);
      hi = std::max(hi, ang);
    }
    out.fraction = (hi - lo) / (2 * M_PI);
    return out;
  }
  if (m == 3) {
    Cone rays3 = extreme_rays(Cone{G});
    Mat R = rays3.generators;
    if (R.rows() < 3) {
      out.fraction = 0.0;  // flat within the span; should not happen for m==3
      return out;
    }
    // Order extreme rays around the mean axis and fan-triangulate the
    // spherical polygon.
    Eigen::Vector3d axis = Vec(R.colwise().mean().transpose()).normalized();
    Eigen::Vector3d ref = axis.unitOrthogonal();
    Eigen::Vector3d ref2 = axis.cross(ref).normalized();
    std::vector<std::pair<Scalar, Index>> order;
    for (Index i = 0; i < R.rows(); ++i) {
      Eigen::Vector3d g = R.row(i).transpose();
      order.push_back({std::atan2(g.dot(ref2), g.dot(ref)), i});
    }
    std::sort(order.begin(), order.end());
    Scalar omega = 0;
    for (std::size_t i = 1; i + 1 < order.size(); ++i) {
      omega += spherical_triangle_angle(R.row(order[0].second).transpose(),
                                        R.row(order[i].second).transpose(),
                                        R.row(order[i + 1].second).transpose());
    }
    out.fraction = omega / (4 * M_PI);
    return out;
  }
  // Gaussian membership sampling in span coordinates.
  Cone Cm{G};
  std::mt19937_64 rng(seed);
  std::normal_distribution<Scalar> gauss(0.0, 1.0);
  int hits = 0;
  for (int i = 0; i < n_mc; ++i) {
    Vec z(m);
    for (int j = 0; j < m; ++j) z(j) = gauss(rng);
    if (cone_contains(Cm, z, 1e-9 * z.norm())) ++hits;
  }
  Scalar p = Scalar(hits) / Scalar(n_mc);
  out.fraction = p;
  out.stderr_ = std::sqrt(std::max(p * (1 - p), 1e-12) / n_mc);
  out.exact = false;
  return out;
}

}  // namespace kinemalab
