#include "kinemalab/dc.hpp"

#include "kinemalab/linprog.hpp"
#include "kinemalab/min_norm.hpp"

namespace kinemalab {

std::vector<Index> PLConvex::active(const Vec& x, Scalar tol) const {
  Vec vals = gradients * x + offsets;
  Scalar top = vals.maxCoeff();
  Scalar scale = std::max(Scalar(1), std::abs(top));
  std::vector<Index> idx;
  for (Index i = 0; i < vals.size(); ++i) {
    if (vals(i) >= top - tol * scale) idx.push_back(i);
  }
  return idx;
}

PLConvex prune(const PLConvex& g, Scalar R) {
  const int d = g.dim();
  const Index m = g.num_pieces();
  std::vector<Index> keep;
  for (Index i = 0; i < m; ++i) {
    // max t s.t. (a_i - a_k).x + (b_i - b_k) >= t for all k, |x|_inf <= R.
    Mat A(m - 1 + 2 * d, d + 1);
    Vec b(A.rows());
    Index r = 0;
    for (Index k = 0; k < m; ++k) {
      if (k == i) continue;
      A.block(r, 0, 1, d) = g.gradients.row(k) - g.gradients.row(i);
      A(r, d) = 1.0;
      b(r) = g.offsets(i) - g.offsets(k);
      ++r;
    }
    for (int j = 0; j < d; ++j) {
      A.row(r).setZero();
      A(r, j) = 1.0;
      b(r) = R;
      ++r;
      A.row(r).setZero();
      A(r, j) = -1.0;
      b(r) = R;
      ++r;
    }
    Vec c = Vec::Zero(d + 1);
    c(d) = 1.0;
    LpResult lp = solve_lp(c, A, b);
    if (lp.status == LpStatus::Optimal && lp.value > 1e-9) keep.push_back(i);
  }
  if (keep.empty()) keep.push_back(0);  // constant function
  PLConvex out;
  out.gradients.resize(keep.size(), d);
  out.offsets.resize(keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    out.gradients.row(r) = g.gradients.row(keep[r]);
    out.offsets(r) = g.offsets(keep[r]);
  }
  return out;
}

PLConvex pl_sum(const PLConvex& g, const PLConvex& h) {
  PLConvex out;
  const Index n = g.num_pieces() * h.num_pieces();
  out.gradients.resize(n, g.dim());
  out.offsets.resize(n);
  Index r = 0;
  for (Index i = 0; i < g.num_pieces(); ++i) {
    for (Index j = 0; j < h.num_pieces(); ++j) {
      out.gradients.row(r) = g.gradients.row(i) + h.gradients.row(j);
      out.offsets(r) = g.offsets(i) + h.offsets(j);
      ++r;
    }
  }
  return prune(out);
}

PLConvex pl_max(const PLConvex& g, const PLConvex& h) {
  PLConvex out;
  out.gradients.resize(g.num_pieces() + h.num_pieces(), g.dim());
  out.offsets.resize(out.gradients.rows());
  out.gradients.topRows(g.num_pieces()) = g.gradients;
  out.offsets.head(g.num_pieces()) = g.offsets;
  out.gradients.bottomRows(h.num_pieces()) = h.gradients;
  out.offsets.tail(h.num_pieces()) = h.offsets;
  return prune(out);
}

PLConvex pl_compose_inverse(const PLConvex& g, const RigidMotion& gamma) {
  // a.(R^T(x - t)) + b = (R a).x + (b - (R a).t)
  PLConvex out;
  out.gradients = g.gradients * gamma.rotation.transpose();
  out.offsets = g.offsets - out.gradients * gamma.translation;
  return out;
}

ClarkeHull subdiff_convex(const PLConvex& g, const Vec& x) {
  std::vector<Index> act = g.active(x);
  ClarkeHull H;
  H.dim = g.dim();
  H.vertices.resize(act.size(), g.dim());
  for (std::size_t r = 0; r < act.size(); ++r) H.vertices.row(r) = g.gradients.row(act[r]);
  return H;
}

ClarkeHull clarke_superset(const DCFunction& f, const Vec& x) {
  ClarkeHull U = subdiff_convex(f.g, x);
  ClarkeHull V = subdiff_convex(f.h, x);
  ClarkeHull H;
  H.dim = f.dim();
  H.vertices.resize(U.num_vertices() * V.num_vertices(), f.dim());
  Index r = 0;
  for (Index i = 0; i < U.num_vertices(); ++i) {
    for (Index j = 0; j < V.num_vertices(); ++j) {
      H.vertices.row(r++) = U.vertices.row(i) - V.vertices.row(j);
    }
  }
  return H;
}

HPolytope linearity_region(const DCFunction& f, Index i, Index j) {
  const int d = f.dim();
  const Index mg = f.g.num_pieces(), mh = f.h.num_pieces();
  Mat A(mg - 1 + mh - 1, d);
  Vec b(A.rows());
  Index r = 0;
  for (Index k = 0; k < mg; ++k) {
    if (k == i) continue;
    A.row(r) = f.g.gradients.row(k) - f.g.gradients.row(i);
    b(r) = f.g.offsets(i) - f.g.offsets(k);
    ++r;
  }
  for (Index l = 0; l < mh; ++l) {
    if (l == j) continue;
    A.row(r) = f.h.gradients.row(l) - f.h.gradients.row(j);
    b(r) = f.h.offsets(j) - f.h.offsets(l);
    ++r;
  }
  return HPolytope(d, std::move(A), std::move(b));
}

ClarkeHull clarke_exact(const DCFunction& f, const Vec& x) {
  const int d = f.dim();
  std::vector<Index> ag = f.g.active(x);
  std::vector<Index> ah = f.h.active(x);
  std::vector<Vec> grads;
  const Scalar rho = std::max(Scalar(1), x.cwiseAbs().maxCoeff());
  for (Index i : ag) {
    for (Index j : ah) {
      HPolytope R = linearity_region(f, i, j);
      Vec lo = x.array() - rho, hi = x.array() + rho;
      HPolytope W = HPolytope::box(lo, hi);
      Mat A(R.num_halfspaces() + W.num_halfspaces(), d);
      Vec b(A.rows());
      A.topRows(R.num_halfspaces()) = R.normals;
      b.head(R.num_halfspaces()) = R.offsets;
      A.bottomRows(W.num_halfspaces()) = W.normals;
      b.tail(W.num_halfspaces()) = W.offsets;
      ChebyshevResult cheb = chebyshev_center(A, b);
      Scalar radius = cheb.feasible ? cheb.radius : -1;
      if (radius > 1e-7 * rho) {
        grads.push_back((f.g.gradients.row(i) - f.h.gradients.row(j)).transpose());
      } else if (radius > 1e-9 * rho) {
        throw ToleranceAmbiguity("clarke_exact: region feasibility margin below tolerance");
      }
    }
  }
  ClarkeHull H;
  H.dim = d;
  H.vertices.resize(grads.size(), d);
  for (std::size_t r = 0; r < grads.size(); ++r) H.vertices.row(r) = grads[r].transpose();
  return H;
}

std::pair<Vec, Scalar> min_norm_clarke(const ClarkeHull& H) {
  MinNormResult r = min_norm_point(H.vertices);
  return {r.point, r.norm};
}

DCFunction aura_polytope(const HPolytope& P_in) {
  HPolytope P = remove_redundancy(canonicalize(P_in));
  if (is_empty(P) || !is_bounded(P)) {
    throw DegeneratePolytope("aura_polytope: nonempty bounded input required");
  }
  if (chebyshev_radius(P) < kAmbiguityFactor * kTol) {
    throw DegeneratePolytope("aura_polytope: input is lower-dimensional");
  }
  const int d = P.dim;
  DCFunction f;
  f.g.gradients = Mat::Zero(P.num_halfspaces() + 1, d);
  f.g.offsets = Vec::Zero(P.num_halfspaces() + 1);
  f.g.gradients.bottomRows(P.num_halfspaces()) = P.normals;
  f.g.offsets.tail(P.num_halfspaces()) = -P.offsets;
  f.h = PLConvex::zero(d);
  return f;
}

DCFunction aura_min(const DCFunction& f1, const DCFunction& f2) {
  DCFunction out;
  out.g = pl_sum(f1.g, f2.g);
  out.h = pl_max(pl_sum(f1.g, f2.h), pl_sum(f2.g, f1.h));
  return out;
}

DCFunction aura_sum_motion(const DCFunction& f, const DCFunction& g, const RigidMotion& gamma) {
  DCFunction out;
  out.g = pl_sum(f.g, pl_compose_inverse(g.g, gamma));
  out.h = pl_sum(f.h, pl_compose_inverse(g.h, gamma));
  return out;
}

}  // namespace kinemalab
