#include "kinemalab/rigid_motion.hpp"

namespace kinemalab {

bool RigidMotion::valid(Scalar tol) const {
  const int d = static_cast<int>(rotation.rows());
  if (rotation.cols() != d || translation.size() != d) return false;
  if ((rotation * rotation.transpose() - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
    return false;
  }
  return std::abs(rotation.determinant() - 1.0) < tol;
}

HPolytope apply(const RigidMotion& g, const HPolytope& K) {
  // {x : a.(R^T (x - t)) <= b} = {(R a).x <= b + (R a).t}
  Mat A = K.normals * g.rotation.transpose();
  Vec b = K.offsets + A * g.translation;
  return HPolytope(K.dim, std::move(A), std::move(b));
}

Mat haar_rotation(int d, std::mt19937_64& rng) {
  std::normal_distribution<Scalar> gauss(0.0, 1.0);
  Mat G(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) G(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<Mat> qr(G);
  Mat Q = qr.householderQ();
  Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    if (R(i, i) < 0) Q.col(i) = -Q.col(i);
  }
  if (Q.determinant() < 0) Q.col(d - 1) = -Q.col(d - 1);
  return Q;
}

}  // namespace kinemalab
