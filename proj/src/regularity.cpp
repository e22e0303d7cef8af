#include "kinemalab/regularity.hpp"

#include "kinemalab/min_norm.hpp"

namespace kinemalab {

RegularityCertificate weak_regularity(const DCFunction& f, Scalar c, const Vec& window_lo,
                                      const Vec& window_hi, Scalar delta) {
  if (delta <= 0) throw std::invalid_argument("weak_regularity: delta must be positive");
  RegularityCertificate cert;
  cert.value = c;
  cert.window_lo = window_lo;
  cert.window_hi = window_hi;
  cert.delta = delta;

  HPolytope window = HPolytope::box(window_lo, window_hi);
  RefinementComplex C = build_complex(f, window);

  const Scalar band_tol = 1e-9 * std::max(Scalar(1), std::abs(c) + delta);
  Scalar eps0 = std::numeric_limits<Scalar>::infinity();
  bool any = false;
  for (const ComplexFace& face : C.faces) {
    auto [lo, hi] = face_value_range(f, face);
    // The face meets {c < f <= c+delta} iff its value range does.
    if (hi <= c + band_tol || lo > c + delta + band_tol) continue;
    any = true;
    ++cert.cells_checked;
    ClarkeHull H = clarke_exact(f, face.witness);
    auto [v, norm] = min_norm_clarke(H);
    if (norm < eps0) {
      eps0 = norm;
      cert.argmin_point = face.witness;
      if (norm <= kTol) {
        cert.witness = FailureWitness{face.witness, v, norm};
      }
    }
  }
  if (!any) {
    cert.vacuous = true;
    cert.regular = true;
    cert.eps0 = std::numeric_limits<Scalar>::infinity();
    return cert;
  }
  cert.eps0 = eps0;
  cert.regular = eps0 > kTol;
  return cert;
}

Eps0Bound eps0_bound(const DCFunction& f, const DCFunction& g, const RigidMotion& gamma,
                     const HPolytope& window) {
  DCFunction h = aura_sum_motion(f, g, gamma);
  RefinementComplex C = build_complex(h, window);

  Eps0Bound out;
  out.eps0 = std::numeric_limits<Scalar>::infinity();
  const Scalar zero_tol = 1e-9;
  bool any = false;
  for (const ComplexFace& face : C.faces) {
    auto [lo, hi] = face_value_range(h, face);
    if (hi <= zero_tol) continue;  // inside the intersection body or on it
    any = true;
    // Minkowski sum hull {xi + gamma.eta} at the witness.
    ClarkeHull F = clarke_exact(f, face.witness);
    ClarkeHull G = clarke_exact(g, gamma.apply_inverse(face.witness));
    Mat sum(F.num_vertices() * G.num_vertices(), f.dim());
    Index r = 0;
    for (Index i = 0; i < F.num_vertices(); ++i) {
      for (Index j = 0; j < G.num_vertices(); ++j) {
        sum.row(r++) = F.vertices.row(i) +
                       (gamma.rotation * G.vertices.row(j).transpose()).transpose();
      }
    }
    MinNormResult mn = min_norm_point(sum);
    if (mn.norm < out.eps0) {
      out.eps0 = mn.norm;
      if (mn.norm <= kTol) {
        out.witness = FailureWitness{face.witness, mn.point, mn.norm};
        out.eps0 = 0;
        return out;
      }
    }
  }
  if (!any) out.eps0 = std::numeric_limits<Scalar>::infinity();
  return out;
}

}  // namespace kinemalab
