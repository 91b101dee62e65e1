#pragma once

#include <Eigen/Dense>
#include <complex>

namespace discord {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Algebraic identities on exactly representable constructions.
inline constexpr double kEpsEq = 1e-10;
/// Relative positivity slack: min eigenvalue >= -kPsdRelative * max|eig|.
inline constexpr double kPsdRelative = 1e-9;
/// Relative singular-value cutoff for numerical rank.
inline constexpr double kRankRelative = 1e-8;
inline constexpr double kRankFloor = 1e-12;
/// A measure below this is reported as exactly zero.
inline constexpr double kEpsZero = 1e-10;
/// Optimizer agreement tolerance.
inline constexpr double kEpsOpt = 1e-6;

/// Eigenvalues of a real symmetric matrix, nonincreasing.
RVector sorted_eigenvalues_desc(const RMatrix& symmetric);

/// Eigenvalues of a complex Hermitian matrix, nondecreasing.
RVector hermitian_eigenvalues(const CMatrix& hermitian);

/// Number of eigenvalues of a PSD matrix above max(kRankRelative * largest,
/// kRankFloor). For a PSD matrix the eigenvalues are its singular values.
int numerical_rank_psd(const RMatrix& psd);

/// Max-abs entry of `a - b`.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs_diff(const RMatrix& a, const RMatrix& b);

/// max |U^dagger U - I|.
double unitarity_defect(const CMatrix& u);

}  // namespace discord
