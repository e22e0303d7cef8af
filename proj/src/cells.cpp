#include "kinemalab/cells.hpp"

#include "kinemalab/linprog.hpp"

#include <algorithm>

namespace kinemalab {

namespace {

// Hausdorff-style match of two small vertex sets.
bool same_vertex_set(const Mat& A, const Mat& B, Scalar tol) {
  if (A.rows() != B.rows()) return false;
  for (Index i = 0; i < A.rows(); ++i) {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (Index j = 0; j < B.rows(); ++j) {
      best = std::min(best, (A.row(i) - B.row(j)).norm());
    }
    if (best > tol) return false;
  }
  return true;
}

}  // namespace

RefinementComplex build_complex(const DCFunction& f, const HPolytope& window) {
  const int d = f.dim();
  RefinementComplex C;
  Scalar scale = 1.0;
  if (window.offsets.size() > 0) scale = std::max(scale, window.offsets.cwiseAbs().maxCoeff());
  const Scalar match_tol = 1e-7 * scale;

  for (Index i = 0; i < f.g.num_pieces(); ++i) {
    for (Index j = 0; j < f.h.num_pieces(); ++j) {
      HPolytope R = linearity_region(f, i, j);
      Mat A(R.num_halfspaces() + window.num_halfspaces(), d);
      Vec b(A.rows());
      A.topRows(R.num_halfspaces()) = R.normals;
      b.head(R.num_halfspaces()) = R.offsets;
      A.bottomRows(window.num_halfspaces()) = window.normals;
      b.tail(window.num_halfspaces()) = window.offsets;
      HPolytope cell = canonicalize(HPolytope(d, std::move(A), std::move(b)));
      ChebyshevResult cheb = chebyshev_center(cell.normals, cell.offsets);
      if (!cheb.feasible || cheb.radius < 1e-7 * scale) continue;  // flat or empty cell
      FaceLattice L = build_face_lattice(cell);
      for (const Face& F : L.faces) {
        Mat verts(F.vertex_ids.size(), d);
        for (std::size_t r = 0; r < F.vertex_ids.size(); ++r) {
          verts.row(r) = L.vertices.row(F.vertex_ids[r]);
        }
        bool dup = false;
        for (const ComplexFace& existing : C.faces) {
          if (existing.dim == F.dim && same_vertex_set(verts, existing.vertices, match_tol)) {
            dup = true;
            break;
          }
        }
        if (dup) continue;
        ComplexFace cf;
        cf.dim = F.dim;
        cf.vertices = verts;
        cf.witness = verts.colwise().mean().transpose();
        cf.poly = affine_poly_from_points(verts);
        C.faces.push_back(std::move(cf));
      }
    }
  }
  C.by_dim.assign(d + 1, {});
  for (std::size_t k = 0; k < C.faces.size(); ++k) C.by_dim[C.faces[k].dim].push_back(k);
  return C;
}

std::pair<Scalar, Scalar> face_value_range(const DCFunction& f, const ComplexFace& face) {
  Scalar lo = std::numeric_limits<Scalar>::infinity();
  Scalar hi = -lo;
  for (Index i = 0; i < face.vertices.rows(); ++i) {
    Scalar v = f.eval(face.vertices.row(i).transpose());
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

}  // namespace kinemalab
