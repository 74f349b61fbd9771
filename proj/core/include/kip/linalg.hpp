#pragma once

#include <Eigen/Dense>

#include "kip/errors.hpp"

namespace kip::linalg {

/// Dense symmetric matrix in double precision. Construction symmetrizes the
/// input and rejects matrices that are non-finite or asymmetric beyond a
/// 1e-12 relative tolerance.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(Eigen::MatrixXd m);

  Eigen::Index order() const { return mat_.rows(); }
  const Eigen::MatrixXd& mat() const { return mat_; }
  double trace() const { return mat_.trace(); }

 private:
  Eigen::MatrixXd mat_;
};

/// Solves (A + ridge*I) X = B for symmetric positive (semi-)definite A.
/// Cholesky first, symmetric eigendecomposition as fallback. Throws
/// errc::not_positive_definite when A + ridge*I is not positive definite.
Eigen::MatrixXd solve_psd(const SymMatrix& a, const Eigen::MatrixXd& b, double ridge);

struct EighResult {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns, orthonormal
};

/// Full symmetric eigendecomposition A = Q diag(w) Q^T.
EighResult eigh(const SymMatrix& a);

/// Moore-Penrose pseudo-inverse via SVD. Singular values below
/// rcond * sigma_max are treated as zero.
Eigen::MatrixXd pinv(const Eigen::MatrixXd& a, double rcond = 1e-10);

}  // namespace kip::linalg
