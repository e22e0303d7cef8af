#pragma once

#include "kinemalab/polytope.hpp"
#include "kinemalab/rigid_motion.hpp"

namespace kinemalab {

/// Convex piecewise-linear function g(x) = max_i (a_i.x + b_i).
struct PLConvex {
  Mat gradients;  // one row per affine piece
  Vec offsets;

  int dim() const { return static_cast<int>(gradients.cols()); }
  Index num_pieces() const { return gradients.rows(); }

  Scalar eval(const Vec& x) const { return (gradients * x + offsets).maxCoeff(); }

  /// Indices of pieces active at x within tol.
  std::vector<Index> active(const Vec& x, Scalar tol = 1e-8) const;

  static PLConvex zero(int d) {
    PLConvex g;
    g.gradients = Mat::Zero(1, d);
    g.offsets = Vec::Zero(1);
    return g;
  }
  static PLConvex from_pieces(Mat grads, Vec offs) {
    return PLConvex{std::move(grads), std::move(offs)};
  }
};

/// Drops pieces that are nowhere strictly active inside [-R,R]^d.
PLConvex prune(const PLConvex& g, Scalar R = 1e6);

/// g(x) + h(x) as a max over pairwise sums of pieces.
PLConvex pl_sum(const PLConvex& g, const PLConvex& h);

/// max(g, h) as the union of the pieces.
PLConvex pl_max(const PLConvex& g, const PLConvex& h);

/// g(gamma^{-1} x): affine pieces composed with the inverse motion.
PLConvex pl_compose_inverse(const PLConvex& g, const RigidMotion& gamma);

/// Piecewise-linear DC function f = g - h.
struct DCFunction {
  PLConvex g;
  PLConvex h;

  int dim() const { return g.dim(); }
  Scalar eval(const Vec& x) const { return g.eval(x) - h.eval(x); }
};

/// Convex hulls of gradients are carried as vertex sets.
using ClarkeHull = VPolytope;

/// Subdifferential of a max-affine function: hull of the active gradients.
ClarkeHull subdiff_convex(const PLConvex& g, const Vec& x);

/// Superset {u - v : u in dg(x), v in dh(x)} of the Clarke differential.
ClarkeHull clarke_superset(const DCFunction& f, const Vec& x);

/// Exact Clarke differential on the piecewise-linear class: hull of a_i-c_j
/// over piece pairs whose common linearity region is full-dimensional with
/// closure containing x. Throws ToleranceAmbiguity if a region's
/// feasibility margin sits in the undecidable band.
ClarkeHull clarke_exact(const DCFunction& f, const Vec& x);

/// Linearity region {g piece i maximal} cap {h piece j maximal} as an
/// H-polytope (unbounded in general; intersect with a window before
/// vertex-level work).
HPolytope linearity_region(const DCFunction& f, Index i, Index j);

/// Minimum-norm point of a Clarke hull and its norm.
std::pair<Vec, Scalar> min_norm_clarke(const ClarkeHull& H);

/// The standard aura of a bounded full-dimensional polytope:
/// f = max(0, max_i(a_i.x - b_i)) with h = 0.
DCFunction aura_polytope(const HPolytope& P);

/// min(f1,f2) as the DC pair (g1+g2, max(g1+h2, g2+h1)).
DCFunction aura_min(const DCFunction& f1, const DCFunction& f2);

/// f + g(gamma^{-1} .), the aura of the intersection f^{-1}(0) cap
/// gamma g^{-1}(0) when the transversality hypothesis holds.
DCFunction aura_sum_motion(const DCFunction& f, const DCFunction& g, const RigidMotion& gamma);

}  // namespace kinemalab
