#include "kip/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace kip::linalg {

SymMatrix::SymMatrix(Eigen::MatrixXd m) {
  if (m.rows() != m.cols()) {
    fail(errc::shape_mismatch, "SymMatrix: matrix must be square");
  }
  if (!m.allFinite()) {
    fail(errc::domain_error, "SymMatrix: non-finite entries");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double skew = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-12 * scale) {
    fail(errc::domain_error, "SymMatrix: asymmetry " + std::to_string(skew / scale) +
                                 " exceeds 1e-12 relative tolerance");
  }
  mat_ = 0.5 * (m + m.transpose());
}

Eigen::MatrixXd solve_psd(const SymMatrix& a, const Eigen::MatrixXd& b, double ridge) {
  if (ridge < 0.0) {
    fail(errc::domain_error, "solve_psd: ridge must be nonnegative");
  }
  if (a.order() != b.rows()) {
    fail(errc::shape_mismatch, "solve_psd: A is " + std::to_string(a.order()) + "x" +
                                   std::to_string(a.order()) + " but B has " +
                                   std::to_string(b.rows()) + " rows");
  }
  Eigen::MatrixXd m = a.mat();
  m.diagonal().array() += ridge;

  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() == Eigen::Success) {
    return llt.solve(b);
  }

  // Barely-definite kernels can defeat Cholesky; retry through the spectrum.
  EighResult es = eigh(a);
  Eigen::VectorXd w = es.eigenvalues.array() + ridge;
  if ((w.array() <= 0.0).any()) {
    fail(errc::not_positive_definite,
         "solve_psd: A + ridge*I is not positive definite (min eigenvalue " +
             std::to_string(w.minCoeff()) + ")");
  }
  return es.eigenvectors * w.cwiseInverse().asDiagonal() * (es.eigenvectors.transpose() * b);
}

EighResult eigh(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.mat());
  if (solver.info() != Eigen::Success) {
    fail(errc::convergence_failure, "eigh: eigendecomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXd pinv(const Eigen::MatrixXd& a, double rcond) {
  if (rcond <= 0.0 || rcond >= 1.0) {
    fail(errc::domain_error, "pinv: rcond must lie in (0,1)");
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() == 0) {
    return Eigen::MatrixXd::Zero(a.cols(), a.rows());
  }
  const double cutoff = rcond * s(0);
  Eigen::VectorXd sinv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) sinv(i) = 1.0 / s(i);
  }
  return svd.matrixV() * sinv.asDiagonal() * svd.matrixU().transpose();
}

}  // namespace kip::linalg
