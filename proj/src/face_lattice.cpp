#include "kinemalab/face_lattice.hpp"

#include "kinemalab/linprog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kinemalab {

namespace {

// Orthonormal basis of the span of the rows of D, with rank cutoff.
Mat row_span_basis(const Mat& D, Index max_rank = -1) {
  if (D.rows() == 0) return Mat(D.cols(), 0);
  Eigen::JacobiSVD<Mat> svd(D.transpose(), Eigen::ComputeFullU);
  svd.setThreshold(1e-9);
  Index rank = svd.rank();
  if (max_rank >= 0) rank = std::min(rank, max_rank);
  return svd.matrixU().leftCols(rank);
}

std::vector<Index> sorted_vector(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Index> FaceLattice::f_vector() const {
  std::vector<Index> f(dim());
  for (int k = 0; k < dim(); ++k) f[k] = static_cast<Index>(by_dim[k].size());
  return f;
}

FaceLattice build_face_lattice(const HPolytope& P_in) {
  HPolytope P = remove_redundancy(canonicalize(P_in));
  if (is_empty(P)) throw DegeneratePolytope("face lattice: empty polytope");
  if (!is_bounded(P)) throw DegeneratePolytope("face lattice: unbounded polytope");
  if (chebyshev_radius(P) < kAmbiguityFactor * kTol) {
    throw DegeneratePolytope("face lattice: polytope is not full-dimensional");
  }
  const int d = P.dim;

  FaceLattice L;
  L.poly = P;
  VPolytope V = enumerate_vertices(P);
  L.vertices = V.vertices;
  const Index nv = V.num_vertices();
  const Index nf = P.num_halfspaces();

  // Vertex-facet incidences with an ambiguity band.
  std::vector<std::vector<bool>> active(nv, std::vector<bool>(nf, false));
  for (Index v = 0; v < nv; ++v) {
    for (Index h = 0; h < nf; ++h) {
      Scalar scale = std::max({Scalar(1), std::abs(P.offsets(h)),
                               L.vertices.row(v).cwiseAbs().maxCoeff()});
      Scalar resid = P.offsets(h) - P.normals.row(h).dot(L.vertices.row(v).transpose());
      if (resid < 1e-7 * scale) {
        active[v][h] = true;
      } else if (resid < 1e-6 * scale) {
        throw ToleranceAmbiguity("face lattice: vertex-facet incidence too close to call");
      }
    }
  }

  // Closure operator on vertex sets: S = common facets, V(S) = vertices on
  // all of S. Faces are the closed sets; breadth-first join with vertices.
  auto closure_facets = [&](const std::vector<Index>& verts) {
    std::vector<Index> facets;
    for (Index h = 0; h < nf; ++h) {
      bool all = true;
      for (Index v : verts) {
        if (!active[v][h]) {
          all = false;
          break;
        }
      }
      if (all) facets.push_back(h);
    }
    return facets;
  };
  auto vertices_of = [&](const std::vector<Index>& facets) {
    std::vector<Index> verts;
    for (Index v = 0; v < nv; ++v) {
      bool all = true;
      for (Index h : facets) {
        if (!active[v][h]) {
          all = false;
          break;
        }
      }
      if (all) verts.push_back(v);
    }
    return verts;
  };

  std::map<std::vector<Index>, Index> seen;  // keyed by sorted vertex ids
  std::vector<std::vector<Index>> queue;
  auto add_face = [&](const std::vector<Index>& verts) -> bool {
    auto key = sorted_vector(verts);
    if (seen.count(key)) return false;
    seen[key] = static_cast<Index>(L.faces.size());
    Face F;
    F.vertex_ids = key;
    F.facet_ids = closure_facets(key);
    Mat pts(key.size(), d);
    for (std::size_t i = 0; i < key.size(); ++i) pts.row(i) = L.vertices.row(key[i]);
    F.point = pts.colwise().mean().transpose();
    Mat D(key.size(), d);
    for (std::size_t i = 0; i < key.size(); ++i) D.row(i) = pts.row(i) - F.point.transpose();
    F.basis = row_span_basis(D);
    F.dim = static_cast<int>(F.basis.cols());
    F.cone_generators.resize(F.facet_ids.size(), d);
    for (std::size_t i = 0; i < F.facet_ids.size(); ++i) {
      F.cone_generators.row(i) = P.normals.row(F.facet_ids[i]);
    }
    L.faces.push_back(std::move(F));
    queue.push_back(key);
    return true;
  };

  for (Index v = 0; v < nv; ++v) add_face(vertices_of(closure_facets({v})));
  while (!queue.empty()) {
    std::vector<Index> verts = queue.back();
    queue.pop_back();
    if (verts.size() == static_cast<std::size_t>(nv)) continue;
    for (Index v = 0; v < nv; ++v) {
      if (std::binary_search(verts.begin(), verts.end(), v)) continue;
      std::vector<Index> joined = verts;
      joined.push_back(v);
      add_face(vertices_of(closure_facets(joined)));
    }
  }
  // The polytope itself, if not already present.
  {
    std::vector<Index> all(nv);
    std::iota(all.begin(), all.end(), 0);
    add_face(all);
  }

  std::sort(L.faces.begin(), L.faces.end(),
            [](const Face& a, const Face& b) { return a.dim < b.dim; });
  L.by_dim.assign(d + 1, {});
  for (std::size_t i = 0; i < L.faces.size(); ++i) {
    L.by_dim[L.faces[i].dim].push_back(static_cast<Index>(i));
  }
  return L;
}

std::vector<Index> subfaces(const FaceLattice& L, Index face_id) {
  const Face& F = L.faces[face_id];
  std::vector<Index> out;
  if (F.dim == 0) return out;
  for (Index j : L.by_dim[F.dim - 1]) {
    const Face& G = L.faces[j];
    if (std::includes(F.vertex_ids.begin(), F.vertex_ids.end(),
                      G.vertex_ids.begin(), G.vertex_ids.end())) {
      out.push_back(j);
    }
  }
  return out;
}

namespace {

// Recursive volume over the chart-polytope of a vertex set: vol_k computed
// from the (k-1)-volumes of the boundary cells by the cone decomposition
// from the vertex centroid.
Scalar volume_of_point_poly(const Mat& pts);

Scalar volume_recursive(const Mat& pts, const Vec& origin, const Mat& basis) {
  const int k = static_cast<int>(basis.cols());
  if (k == 0) return 1.0;
  Mat local(pts.rows(), k);
  for (Index i = 0; i < pts.rows(); ++i) {
    local.row(i) = (pts.row(i).transpose() - origin).transpose() * basis;
  }
  return volume_of_point_poly(local);
}

Scalar volume_of_point_poly(const Mat& pts) {
  const int k = static_cast<int>(pts.cols());
  if (k == 0) return 1.0;
  if (k == 1) {
    return pts.col(0).maxCoeff() - pts.col(0).minCoeff();
  }
  // Full-dimensional hull in R^k assumed (callers project to the affine
  // hull first); facet decomposition around the centroid.
  VPolytope V;
  V.dim = k;
  V.vertices = pts;
  HPolytope H;
  try {
    H = hull_halfspaces(V);
  } catch (const DegeneratePolytope&) {
    return 0.0;  // flat in its chart
  }
  Vec centroid = pts.colwise().mean().transpose();
  Scalar vol = 0.0;
  for (Index h = 0; h < H.num_halfspaces(); ++h) {
    Vec n = H.normals.row(h).transpose();
    Scalar height = H.offsets(h) - n.dot(centroid);
    if (height <= 0) continue;
    // Vertices on this facet.
    std::vector<Index> on;
    for (Index i = 0; i < pts.rows(); ++i) {
      Scalar scale = std::max(Scalar(1), std::abs(H.offsets(h)));
      if (std::abs(n.dot(pts.row(i).transpose()) - H.offsets(h)) < 1e-7 * scale) on.push_back(i);
    }
    if (on.size() < static_cast<std::size_t>(k)) continue;
    Mat fpts(on.size(), k);
    for (std::size_t i = 0; i < on.size(); ++i) fpts.row(i) = pts.row(on[i]);
    Vec fcentroid = fpts.colwise().mean().transpose();
    Mat D(on.size(), k);
    for (std::size_t i = 0; i < on.size(); ++i) D.row(i) = fpts.row(i) - fcentroid.transpose();
    Mat fbasis = row_span_basis(D, k - 1);
    if (fbasis.cols() < k - 1) continue;
    Scalar fvol = volume_recursive(fpts, fcentroid, fbasis);
    vol += height * fvol / k;
  }
  return vol;
}

}  // namespace

Scalar face_volume(const FaceLattice& L, Index face_id) {
  const Face& F = L.faces[face_id];
  Mat pts(F.vertex_ids.size(), L.dim());
  for (std::size_t i = 0; i < F.vertex_ids.size(); ++i) pts.row(i) = L.vertices.row(F.vertex_ids[i]);
  return volume_recursive(pts, F.point, F.basis);
}

AffinePoly face_poly(const FaceLattice& L, Index face_id) {
  const Face& F = L.faces[face_id];
  Mat pts(F.vertex_ids.size(), L.dim());
  for (std::size_t i = 0; i < F.vertex_ids.size(); ++i) pts.row(i) = L.vertices.row(F.vertex_ids[i]);
  return affine_poly_from_points(pts);
}

Scalar face_volume_clipped(const FaceLattice& L, Index face_id, const HPolytope& E) {
  AffinePoly F = face_poly(L, face_id);
  AffinePoly clipped = restrict_to_chart(F, E.normals, E.offsets);
  return volume(clipped);
}

Scalar volume(const AffinePoly& F) {
  if (F.empty) return 0.0;
  if (F.dim() == 0) return 1.0;
  ChebyshevResult cheb = chebyshev_center(F.local.normals, F.local.offsets);
  if (!cheb.feasible || cheb.radius < kTol) return 0.0;
  VPolytope V = enumerate_vertices(F.local);
  if (V.num_vertices() == 0) return 0.0;
  return volume_of_point_poly(V.vertices);
}

Scalar volume(const HPolytope& P) {
  if (is_empty(P)) return 0.0;
  if (chebyshev_radius(P) < kTol) return 0.0;
  VPolytope V = enumerate_vertices(remove_redundancy(canonicalize(P)));
  if (V.num_vertices() == 0) return 0.0;
  return volume_of_point_poly(V.vertices);
}

}  // namespace kinemalab
