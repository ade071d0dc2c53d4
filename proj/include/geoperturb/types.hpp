#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace geoperturb {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Deterministic RNG used for every randomized sampling in the library and
// the verification suites; a fixed seed makes runs bit-reproducible.
using Rng = std::mt19937_64;

inline Vec random_unit_vector(Rng& rng, int dim) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec v(dim);
  do {
    for (int i = 0; i < dim; ++i) v[i] = nd(rng);
  } while (v.norm() < 1e-8);
  return v / v.norm();
}

inline Mat symmetrized(const Mat& a) { return 0.5 * (a + a.transpose()); }

// Smallest eigenvalue of a symmetric matrix.
inline double min_eigenvalue(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline bool is_positive_definite(const Mat& a) {
  Eigen::LLT<Mat> llt(a);
  return llt.info() == Eigen::Success;
}

}  // namespace geoperturb
