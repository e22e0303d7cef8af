#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kinemalab {

using Scalar = double;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Global incidence tolerance. Every face-lattice and feasibility decision
/// routes through comparisons against this value (possibly scaled by the
/// instance size).
inline constexpr Scalar kTol = 1e-9;

/// Margin factor for the "too close to call" band: incidence decisions with
/// residual in (kTol, kAmbiguityFactor*kTol) raise ToleranceAmbiguity.
inline constexpr Scalar kAmbiguityFactor = 10.0;

struct ToleranceAmbiguity : std::runtime_error {
  explicit ToleranceAmbiguity(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePolytope : std::runtime_error {
  explicit DegeneratePolytope(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundedDirection : std::runtime_error {
  explicit UnboundedDirection(const std::string& what) : std::runtime_error(what) {}
};

struct GeneralPositionFailure : std::runtime_error {
  explicit GeneralPositionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct CertificationMissing : std::runtime_error {
  explicit CertificationMissing(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Volume of the unit ball in R^d.
inline Scalar unit_ball_volume(int d) {
  return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

/// Surface measure of the unit sphere S^{d-1} in R^d.
inline Scalar unit_sphere_area(int d) { return d * unit_ball_volume(d); }

inline Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  Scalar r = 1.0;
  for (int i = 0; i < k; ++i) r = r * Scalar(n - i) / Scalar(i + 1);
  return r;
}

// SplitMix64; used to derive independent per-item seeds so that results do
// not depend on the number of worker threads.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x51ed2701a3c5e91fULL));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(derive_seed(seed, a) ^ splitmix64(b + 0x9128d31cc51be2afULL));
}

}  // namespace kinemalab
