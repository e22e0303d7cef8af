#pragma once

#include "kinemalab/cells.hpp"
#include "kinemalab/regularity.hpp"
#include "kinemalab/rigid_motion.hpp"

namespace kinemalab {

/// One product piece of nor_eps f: a boundary cell of f^{-1}(0) times the
/// spherical patch of normalized Clarke covectors of norm >= eps over it.
/// The patch is {u in S^{d-1} : eps*u in hull}; since 0 lies in the hull on
/// the zero set, this is the radial cut of the hull at level eps.
struct NorEpsPiece {
  ComplexFace base;
  Mat hull;  // Clarke hull vertices over the cell (rows)
  Scalar eps = 0;

  int ambient_dim() const { return static_cast<int>(hull.cols()); }
};

struct NorEpsSet {
  Scalar eps = 0;
  std::vector<NorEpsPiece> pieces;
};

/// Enumerates nor_eps f over the window box: boundary cells of the zero set
/// in the refinement complex, each with its Clarke hull. Requires a valid
/// weak-regularity certificate at 0 on the same window.
NorEpsSet nor_eps(const DCFunction& f, Scalar eps, const Vec& window_lo, const Vec& window_hi,
                  const RegularityCertificate& cert);

/// Convenience: certifies on the window first (delta = eps).
NorEpsSet nor_eps(const DCFunction& f, Scalar eps, const Vec& window_lo, const Vec& window_hi);

/// Does the patch of the piece contain direction u (i.e. eps*u in hull)?
bool patch_contains(const NorEpsPiece& piece, const Vec& u, Scalar tol = 1e-9);

/// Whether the patch is nonempty: some hull point has norm >= eps.
bool patch_nonempty(const NorEpsPiece& piece);

/// Exact arc decomposition of a d=2 patch: list of (theta_lo, theta_hi)
/// intervals plus isolated directions, measured as angles.
struct ArcPatch {
  std::vector<std::pair<Scalar, Scalar>> arcs;
  std::vector<Scalar> atoms;  // isolated directions
  Scalar total_length() const {
    Scalar s = 0;
    for (auto& a : arcs) s += a.second - a.first;
    return s;
  }
};
ArcPatch patch_arcs_2d(const NorEpsPiece& piece);

/// gamma applied to a piece: rotation acts on base chart and hull.
NorEpsPiece apply(const RigidMotion& gamma, const NorEpsPiece& piece);
NorEpsSet apply(const RigidMotion& gamma, const NorEpsSet& N);

/// Antipodal transversality of two nor_eps sets: false iff some common base
/// point carries u in one patch with -u in the other. The gap is the
/// minimal sampled spherical distance between patch and antipodal patch
/// over overlapping piece pairs (infinity when no bases overlap, 0 on
/// failure; the zero test is exact via the hull intersection).
struct TransversalityReport {
  bool transversal = true;
  Scalar gap = std::numeric_limits<Scalar>::infinity();
  Vec witness;  // common base point for the failing pair, if any
};
TransversalityReport transversality_check(const NorEpsSet& A, const NorEpsSet& B);

}  // namespace kinemalab
