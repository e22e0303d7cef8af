#include "kinemalab/polytope.hpp"

#include "kinemalab/linprog.hpp"

#include <algorithm>
#include <vector>

namespace kinemalab {

namespace {

// Enumerates index subsets of size k out of n, invoking fn on each.
template <typename Fn>
void for_each_subset(Index n, int k, Fn&& fn) {
  if (k > n) return;
  std::vector<Index> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Scalar offset_scale(const HPolytope& P) {
  Scalar s = 1.0;
  if (P.offsets.size() > 0) s = std::max(s, P.offsets.cwiseAbs().maxCoeff());
  return s;
}

}  // namespace

bool HPolytope::contains(const Vec& x, Scalar tol) const {
  for (Index i = 0; i < normals.rows(); ++i) {
    if (normals.row(i).dot(x) > offsets(i) + tol * std::max(Scalar(1), std::abs(offsets(i)))) {
      return false;
    }
  }
  return true;
}

HPolytope HPolytope::box(const Vec& lo, const Vec& hi) {
  const int d = static_cast<int>(lo.size());
  Mat A = Mat::Zero(2 * d, d);
  Vec b(2 * d);
  for (int i = 0; i < d; ++i) {
    A(2 * i, i) = 1.0;
    b(2 * i) = hi(i);
    A(2 * i + 1, i) = -1.0;
    b(2 * i + 1) = -lo(i);
  }
  return HPolytope(d, std::move(A), std::move(b));
}

HPolytope HPolytope::cube(int d, Scalar lo, Scalar hi) {
  return box(Vec::Constant(d, lo), Vec::Constant(d, hi));
}

HPolytope canonicalize(const HPolytope& P) {
  std::vector<Index> keep;
  Mat A = P.normals;
  Vec b = P.offsets;
  for (Index i = 0; i < A.rows(); ++i) {
    Scalar norm = A.row(i).norm();
    if (norm < kTol) continue;  // vacuous or contradictory row; vacuous assumed
    A.row(i) /= norm;
    b(i) /= norm;
    bool duplicate = false;
    for (Index j : keep) {
      if ((A.row(i) - A.row(j)).norm() < kTol) {
        b(j) = std::min(b(j), b(i));  // parallel: tighter offset wins
        duplicate = true;
        break;
      }
    }
    if (!duplicate) keep.push_back(i);
  }
  Mat A2(keep.size(), P.dim);
  Vec b2(keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    A2.row(r) = A.row(keep[r]);
    b2(r) = b(keep[r]);
  }
  return HPolytope(P.dim, std::move(A2), std::move(b2));
}

HPolytope remove_redundancy(const HPolytope& P) {
  const Scalar scale = offset_scale(P);
  std::vector<bool> alive(P.num_halfspaces(), true);
  for (Index i = 0; i < P.num_halfspaces(); ++i) {
    // Maximize a_i.x subject to the other live constraints.
    std::vector<Index> rows;
    for (Index j = 0; j < P.num_halfspaces(); ++j) {
      if (j != i && alive[j]) rows.push_back(j);
    }
    Mat A(rows.size(), P.dim);
    Vec b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      A.row(r) = P.normals.row(rows[r]);
      b(r) = P.offsets(rows[r]);
    }
    LpResult lp = solve_lp(P.normals.row(i).transpose(), A, b);
    if (lp.status == LpStatus::Optimal && lp.value <= P.offsets(i) + kTol * scale) {
      alive[i] = false;
    }
  }
  std::vector<Index> keep;
  for (Index i = 0; i < P.num_halfspaces(); ++i) {
    if (alive[i]) keep.push_back(i);
  }
  Mat A(keep.size(), P.dim);
  Vec b(keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    A.row(r) = P.normals.row(keep[r]);
    b(r) = P.offsets(keep[r]);
  }
  return HPolytope(P.dim, std::move(A), std::move(b));
}

bool is_empty(const HPolytope& P) {
  return lp_feasible(P.normals, P.offsets).status != LpStatus::Optimal;
}

bool is_bounded(const HPolytope& P) {
  // Bounded iff the recession cone {A x <= 0} is trivial.
  Mat A(P.num_halfspaces() + 2 * P.dim, P.dim);
  Vec b = Vec::Zero(A.rows());
  A.topRows(P.num_halfspaces()) = P.normals;
  A.block(P.num_halfspaces(), 0, P.dim, P.dim) = Mat::Identity(P.dim, P.dim);
  A.bottomRows(P.dim) = -Mat::Identity(P.dim, P.dim);
  b.segment(P.num_halfspaces(), 2 * P.dim).setOnes();
  for (int i = 0; i < P.dim; ++i) {
    for (Scalar sign : {1.0, -1.0}) {
      Vec c = Vec::Zero(P.dim);
      c(i) = sign;
      LpResult lp = solve_lp(c, A, b);
      if (lp.status != LpStatus::Optimal || lp.value > 1e-7) return false;
    }
  }
  return true;
}

VPolytope enumerate_vertices(const HPolytope& P) {
  const int d = P.dim;
  const Scalar scale = offset_scale(P);
  std::vector<Vec> verts;
  if (d == 0) {
    VPolytope V;
    V.dim = 0;
    V.vertices = Mat(1, 0);
    return V;
  }
  for_each_subset(P.num_halfspaces(), d, [&](const std::vector<Index>& idx) {
    Mat M(d, d);
    Vec rhs(d);
    for (int r = 0; r < d; ++r) {
      M.row(r) = P.normals.row(idx[r]);
      rhs(r) = P.offsets(idx[r]);
    }
    Eigen::FullPivLU<Mat> lu(M);
    lu.setThreshold(1e-9);
    if (lu.rank() < d) return;
    Vec x = lu.solve(rhs);
    if (!x.allFinite()) return;
    Scalar tol = kTol * std::max(scale, x.cwiseAbs().maxCoeff()) * 100;
    if (!P.contains(x, tol)) return;
    for (const Vec& v : verts) {
      if ((v - x).norm() < 1e-7 * std::max(Scalar(1), x.norm())) return;
    }
    verts.push_back(x);
  });
  VPolytope V;
  V.dim = d;
  V.vertices.resize(verts.size(), d);
  for (std::size_t i = 0; i < verts.size(); ++i) V.vertices.row(i) = verts[i].transpose();
  return V;
}

HPolytope hull_halfspaces(const VPolytope& V) {
  const int d = V.dim;
  const Index n = V.num_vertices();
  if (n <= d) throw DegeneratePolytope("hull_halfspaces: too few points for a full-dimensional hull");
  Vec centroid = V.vertices.colwise().mean().transpose();
  std::vector<Vec> normals;
  std::vector<Scalar> offsets;
  for_each_subset(n, d, [&](const std::vector<Index>& idx) {
    // Hyperplane through d points: normal in the nullspace of the spanned
    // difference matrix.
    Mat D(d - 1, d);
    for (int r = 0; r + 1 < d; ++r) {
      D.row(r) = V.vertices.row(idx[r + 1]) - V.vertices.row(idx[0]);
    }
    Vec normal;
    if (d == 1) {
      normal = Vec::Ones(1);
    } else {
      Eigen::JacobiSVD<Mat> svd(D, Eigen::ComputeFullV);
      if (svd.singularValues().size() > 0 &&
          svd.singularValues().minCoeff() < 1e-10 * std::max(Scalar(1), svd.singularValues().maxCoeff())) {
        // Need rank d-1 for a unique hyperplane.
        if (d > 1 && svd.rank() < d - 1) return;
      }
      normal = svd.matrixV().col(d - 1);
    }
    if (normal.norm() < 0.5) return;
    normal.normalize();
    Scalar offset = normal.dot(V.vertices.row(idx[0]).transpose());
    // Orient outward relative to the centroid.
    if (normal.dot(centroid) > offset) {
      normal = -normal;
      offset = -offset;
    }
    // Supporting check: every vertex on the inner side.
    Scalar maxv = -std::numeric_limits<Scalar>::infinity();
    for (Index i = 0; i < n; ++i) {
      maxv = std::max(maxv, normal.dot(V.vertices.row(i).transpose()));
    }
    if (maxv > offset + 1e-8 * std::max(Scalar(1), std::abs(offset))) return;
    offset = maxv;  // tighten onto the touching vertices
    for (std::size_t k = 0; k < normals.size(); ++k) {
      if ((normals[k] - normal).norm() < 1e-8 && std::abs(offsets[k] - offset) < 1e-8) return;
    }
    normals.push_back(normal);
    offsets.push_back(offset);
  });
  if (normals.empty()) throw DegeneratePolytope("hull_halfspaces: point set is not full-dimensional");
  Mat A(normals.size(), d);
  Vec b(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    A.row(i) = normals[i].transpose();
    b(i) = offsets[i];
  }
  return canonicalize(HPolytope(d, std::move(A), std::move(b)));
}

VPolytope extreme_points(const VPolytope& V) {
  const Index n = V.num_vertices();
  const int d = V.dim;
  std::vector<Index> keep;
  for (Index i = 0; i < n; ++i) {
    // v_i extreme iff it is not a convex combination of the others.
    std::vector<Index> others;
    for (Index j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    if (others.empty()) {
      keep.push_back(i);
      continue;
    }
    // Feasibility of sum(l_j v_j) = v_i, sum l = 1, l >= 0.
    Mat E(d + 1, others.size());
    Vec f(d + 1);
    for (std::size_t c = 0; c < others.size(); ++c) {
      E.block(0, c, d, 1) = V.vertices.row(others[c]).transpose();
      E(d, c) = 1.0;
    }
    f.segment(0, d) = V.vertices.row(i).transpose();
    f(d) = 1.0;
    Mat A = -Mat::Identity(others.size(), others.size());
    Vec b = Vec::Zero(others.size());
    if (lp_feasible(A, b, E, f).status != LpStatus::Optimal) keep.push_back(i);
  }
  VPolytope out;
  out.dim = d;
  out.vertices.resize(keep.size(), d);
  for (std::size_t r = 0; r < keep.size(); ++r) out.vertices.row(r) = V.vertices.row(keep[r]);
  return out;
}

Scalar support(const HPolytope& P, const Vec& u) {
  LpResult lp = solve_lp(u, P.normals, P.offsets);
  if (lp.status == LpStatus::Unbounded) {
    throw UnboundedDirection("support: polytope unbounded along direction");
  }
  if (lp.status != LpStatus::Optimal) {
    throw DegeneratePolytope("support: empty polytope");
  }
  return lp.value;
}

Scalar support(const VPolytope& V, const Vec& u) {
  return (V.vertices * u).maxCoeff();
}

HPolytope cap(const HPolytope& P, const Vec& n, Scalar t) {
  if (t <= 0) throw std::invalid_argument("cap: width must be positive");
  Vec u = n.normalized();
  Scalar h = support(P, u);
  Mat A(P.num_halfspaces() + 1, P.dim);
  Vec b(P.num_halfspaces() + 1);
  A.topRows(P.num_halfspaces()) = P.normals;
  b.head(P.num_halfspaces()) = P.offsets;
  A.bottomRows(1) = -u.transpose();
  b(P.num_halfspaces()) = -(h - t);
  return remove_redundancy(canonicalize(HPolytope(P.dim, std::move(A), std::move(b))));
}

WidthResult width(const HPolytope& P) {
  HPolytope Q = remove_redundancy(canonicalize(P));
  if (chebyshev_radius(Q) < kAmbiguityFactor * kTol) {
    throw DegeneratePolytope("width: polytope is not full-dimensional");
  }
  WidthResult res;
  if (P.dim == 2) {
    res.upper = std::numeric_limits<Scalar>::infinity();
    for (Index i = 0; i < Q.num_halfspaces(); ++i) {
      Vec n = Q.normals.row(i).transpose();
      Scalar b = support(Q, n) + support(Q, -n);
      if (b < res.upper) {
        res.upper = b;
        res.direction = n;
      }
    }
    res.lower = res.upper;
    return res;
  }
  // The breadth function is the support function of the difference body, so
  // its minimum over the sphere is the inradius of that symmetric body,
  // attained at a facet normal.
  HPolytope D = difference_body(Q);
  res.upper = std::numeric_limits<Scalar>::infinity();
  for (Index i = 0; i < D.num_halfspaces(); ++i) {
    if (D.offsets(i) < res.upper) {
      res.upper = D.offsets(i);
      res.direction = D.normals.row(i).transpose();
    }
  }
  res.lower = res.upper;
  return res;
}

HPolytope minkowski_sum(const HPolytope& K, const HPolytope& L) {
  VPolytope VK = enumerate_vertices(K);
  VPolytope VL = enumerate_vertices(L);
  VPolytope S;
  S.dim = K.dim;
  S.vertices.resize(VK.num_vertices() * VL.num_vertices(), K.dim);
  Index r = 0;
  for (Index i = 0; i < VK.num_vertices(); ++i) {
    for (Index j = 0; j < VL.num_vertices(); ++j) {
      S.vertices.row(r++) = VK.vertices.row(i) + VL.vertices.row(j);
    }
  }
  return remove_redundancy(hull_halfspaces(S));
}

HPolytope reflect(const HPolytope& K) {
  return HPolytope(K.dim, -K.normals, K.offsets);
}

HPolytope difference_body(const HPolytope& K) { return minkowski_sum(K, reflect(K)); }

std::optional<HPolytope> intersect(const HPolytope& K, const HPolytope& L) {
  Mat A(K.num_halfspaces() + L.num_halfspaces(), K.dim);
  Vec b(A.rows());
  A.topRows(K.num_halfspaces()) = K.normals;
  b.head(K.num_halfspaces()) = K.offsets;
  A.bottomRows(L.num_halfspaces()) = L.normals;
  b.tail(L.num_halfspaces()) = L.offsets;
  HPolytope P = canonicalize(HPolytope(K.dim, std::move(A), std::move(b)));
  const Scalar scale = offset_scale(P);
  ChebyshevResult cheb = chebyshev_center(P.normals, P.offsets);
  if (!cheb.feasible && cheb.radius < -kAmbiguityFactor * kTol * scale) return std::nullopt;
  if (cheb.radius < kAmbiguityFactor * kTol * scale) {
    throw ToleranceAmbiguity("intersect: near-degenerate contact between boundaries");
  }
  return remove_redundancy(P);
}

bool intersection_nonempty(const std::vector<const HPolytope*>& pieces) {
  Index rows = 0;
  for (const HPolytope* p : pieces) rows += p->num_halfspaces();
  const int d = pieces.front()->dim;
  Mat A(rows, d);
  Vec b(rows);
  Index r = 0;
  for (const HPolytope* p : pieces) {
    A.middleRows(r, p->num_halfspaces()) = p->normals;
    b.segment(r, p->num_halfspaces()) = p->offsets;
    r += p->num_halfspaces();
  }
  // Touching counts as nonempty: relax by the incidence tolerance.
  return lp_feasible(A, b.array() + kTol).status == LpStatus::Optimal;
}

Vec interior_point(const HPolytope& P) {
  ChebyshevResult cheb = chebyshev_center(P.normals, P.offsets);
  if (!cheb.feasible) throw DegeneratePolytope("interior_point: empty polytope");
  return cheb.center;
}

Scalar chebyshev_radius(const HPolytope& P) {
  ChebyshevResult cheb = chebyshev_center(P.normals, P.offsets);
  if (!cheb.feasible) return -1;
  return cheb.radius;
}

BoundingBox bounding_box(const HPolytope& P) {
  BoundingBox box;
  box.lo.resize(P.dim);
  box.hi.resize(P.dim);
  for (int i = 0; i < P.dim; ++i) {
    Vec e = Vec::Zero(P.dim);
    e(i) = 1.0;
    box.hi(i) = support(P, e);
    box.lo(i) = -support(P, -e);
  }
  return box;
}

AffinePoly affine_poly(const Mat& A, const Vec& b, const Mat& E, const Vec& f) {
  AffinePoly F;
  const int d = static_cast<int>(A.cols() > 0 ? A.cols() : E.cols());
  F.point = Vec::Zero(d);
  LpResult feas = lp_feasible(A, b, E, f);
  if (feas.status != LpStatus::Optimal) return F;

  // Implicit equalities: rows whose slack is zero over the whole set.
  std::vector<Index> eq_rows, ineq_rows;
  for (Index i = 0; i < A.rows(); ++i) {
    LpResult lp = solve_lp((-A.row(i)).transpose(), A, b, E, f);
    Scalar scale = std::max(Scalar(1), std::abs(b(i)));
    if (lp.status == LpStatus::Optimal && -lp.value > b(i) - 100 * kTol * scale) {
      eq_rows.push_back(i);
    } else {
      ineq_rows.push_back(i);
    }
  }
  Mat Eall(E.rows() + eq_rows.size(), d);
  Vec fall(Eall.rows());
  if (E.rows() > 0) {
    Eall.topRows(E.rows()) = E;
    fall.head(E.rows()) = f;
  }
  for (std::size_t k = 0; k < eq_rows.size(); ++k) {
    Eall.row(E.rows() + k) = A.row(eq_rows[k]);
    fall(E.rows() + k) = b(eq_rows[k]);
  }

  Mat Q;
  if (Eall.rows() == 0) {
    Q = Mat::Identity(d, d);
    F.point = Vec::Zero(d);
  } else {
    Eigen::JacobiSVD<Mat> svd(Eall, Eigen::ComputeFullV | Eigen::ComputeThinU);
    svd.setThreshold(1e-10);
    Index rank = svd.rank();
    Q = svd.matrixV().rightCols(d - rank);
    F.point = svd.solve(fall);
  }
  F.basis = Q;
  const int k = static_cast<int>(Q.cols());

  // Remaining inequalities in chart coordinates.
  std::vector<Vec> rows;
  std::vector<Scalar> offs;
  for (Index i : ineq_rows) {
    Vec a = (A.row(i) * Q).transpose();
    Scalar bb = b(i) - A.row(i).dot(F.point);
    if (a.norm() < kTol) continue;  // constant row, satisfied by feasibility
    rows.push_back(a);
    offs.push_back(bb);
  }
  Mat Aloc(rows.size(), k);
  Vec bloc(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Aloc.row(r) = rows[r].transpose();
    bloc(r) = offs[r];
  }
  F.local = remove_redundancy(canonicalize(HPolytope(k, std::move(Aloc), std::move(bloc))));
  F.empty = false;
  return F;
}

AffinePoly affine_poly_from_points(const Mat& points) {
  AffinePoly F;
  const int d = static_cast<int>(points.cols());
  const Index n = points.rows();
  if (n == 0) {
    F.point = Vec::Zero(d);
    return F;
  }
  Vec p0 = points.row(0).transpose();
  Mat D(n - 1, d);
  for (Index i = 1; i < n; ++i) D.row(i - 1) = points.row(i) - points.row(0);
  Index rank = 0;
  Mat Q(d, 0);
  if (n > 1) {
    Eigen::JacobiSVD<Mat> svd(D.transpose(), Eigen::ComputeFullU);
    svd.setThreshold(1e-9);
    rank = svd.rank();
    Q = svd.matrixU().leftCols(rank);
  }
  F.point = p0;
  F.basis = Q;
  F.empty = false;
  if (rank == 0) {
    F.local = HPolytope(0, Mat(0, 0), Vec());
    return F;
  }
  Mat local_pts(n, rank);
  for (Index i = 0; i < n; ++i) {
    local_pts.row(i) = ((points.row(i).transpose() - p0).transpose() * Q);
  }
  VPolytope V;
  V.dim = static_cast<int>(rank);
  V.vertices = local_pts;
  F.local = hull_halfspaces(V);
  return F;
}

AffinePoly restrict_to_chart(const AffinePoly& F, const Mat& A, const Vec& b) {
  AffinePoly G = F;
  if (F.empty) return G;
  const int k = F.dim();
  std::vector<Vec> rows;
  std::vector<Scalar> offs;
  for (Index i = 0; i < A.rows(); ++i) {
    Vec a = (A.row(i) * F.basis).transpose();
    Scalar bb = b(i) - A.row(i).dot(F.point);
    if (a.norm() < kTol) {
      if (bb < -kTol * std::max(Scalar(1), std::abs(b(i)))) {
        G.empty = true;  // chart entirely outside this halfspace
        return G;
      }
      continue;
    }
    rows.push_back(a);
    offs.push_back(bb);
  }
  Mat A2(F.local.num_halfspaces() + rows.size(), k);
  Vec b2(A2.rows());
  A2.topRows(F.local.num_halfspaces()) = F.local.normals;
  b2.head(F.local.num_halfspaces()) = F.local.offsets;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    A2.row(F.local.num_halfspaces() + r) = rows[r].transpose();
    b2(F.local.num_halfspaces() + r) = offs[r];
  }
  G.local = canonicalize(HPolytope(k, std::move(A2), std::move(b2)));
  G.empty = is_empty(G.local);
  return G;
}

Mat vertices_ambient(const AffinePoly& F) {
  if (F.empty) return Mat(0, F.ambient_dim());
  if (F.dim() == 0) {
    Mat out(1, F.ambient_dim());
    out.row(0) = F.point.transpose();
    return out;
  }
  VPolytope V = enumerate_vertices(F.local);
  Mat out(V.num_vertices(), F.ambient_dim());
  for (Index i = 0; i < V.num_vertices(); ++i) {
    out.row(i) = (F.point + F.basis * V.vertices.row(i).transpose()).transpose();
  }
  return out;
}

}  // namespace kinemalab
