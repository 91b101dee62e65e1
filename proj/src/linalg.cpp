#include "discord/linalg.hpp"

#include <algorithm>

#include "discord/errors.hpp"

namespace discord {

RVector sorted_eigenvalues_desc(const RMatrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver did not converge");
  }
  RVector values = solver.eigenvalues().reverse();
  return values;
}

RVector hermitian_eigenvalues(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

int numerical_rank_psd(const RMatrix& psd) {
  if (psd.size() == 0) return 0;
  const RVector values = sorted_eigenvalues_desc(psd);
  const double largest = std::max(values(0), 0.0);
  const double cutoff = std::max(kRankRelative * largest, kRankFloor);
  return static_cast<int>((values.array() > cutoff).count());
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const RMatrix& a, const RMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& u) {
  const CMatrix gram = u.adjoint() * u;
  return max_abs_diff(gram, CMatrix::Identity(gram.rows(), gram.cols()));
}

}  // namespace discord
