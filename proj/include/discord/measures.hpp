#pragma once

// Discord measures for an m (x) n state, all taken with respect to
// measurements (projections) on party A.
//
// D_P is the sum of the m(m-1) smallest eigenvalues of the Gram matrix of the
// left-correlation matrix. It is a closed-form lower bound on the geometric
// discord D_G, equal to it for m = 2. D_G itself is the minimum over von
// Neumann measurements on A of ||rho - Pi^A(rho)||^2 (Hilbert-Schmidt); for
// m > 2 it is estimated from above by gd_numeric.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "discord/bloch.hpp"

namespace discord {

/// Orthonormal basis of C^m given as the columns of a unitary.
class MeasurementBasis {
 public:
  /// Throws InvalidInput unless U^dagger U = I to kEpsEq.
  static MeasurementBasis from_unitary(const CMatrix& unitary);
  static MeasurementBasis computational(int m);

  int dim() const noexcept { return static_cast<int>(unitary_.rows()); }
  const CMatrix& unitary() const noexcept { return unitary_; }
  /// Pi_k = U|k><k|U^dagger.
  std::vector<CMatrix> projectors() const;
  /// mu_k = (sqrt(2)/m) alpha_k, where alpha_k is the coherence vector of Pi_k.
  std::vector<RVector> mu_simplex(const GeneratorBasis& basis) const;

 private:
  explicit MeasurementBasis(CMatrix u) : unitary_(std::move(u)) {}
  CMatrix unitary_;
};

struct Correlations {
  double i_p = 0.0;  // ||T||^2, sum of all tau
  double c_p = 0.0;  // sum of the m-1 largest tau
};

/// (4/mn)^2 (T T^t - |y|^2 x x^t).
struct CriterionTensor {
  RMatrix lambda;
};

struct ZeroDiscordVerdict {
  bool zero_discord = false;  // rank(TT^t of the left-correlation) <= m-1
  int rank_left_gram = 0;
  int rank_tt = 0;
  bool x_in_range = false;
  double range_residual = 0.0;
  bool split_test = false;  // rank(TT^t) <= m-2 or (rank <= m-1 and x in R(TT^t))
  bool consistent = false;  // both tests agree
};

struct OptimizerConfig {
  int restarts = 16;
  std::uint64_t seed = 0;
  /// A restart stops once a full sweep lowers the objective by less than this.
  double tolerance = 1e-13;
  int max_iterations = 400;
};

struct GdSearchResult {
  double value = 0.0;
  CMatrix basis;  // argmin unitary, columns are the measurement kets
  bool converged = false;
  int best_restart = -1;
  int sweeps = 0;  // sweeps used by the best restart
};

enum class DgKind { exact, numeric_upper_bound, skipped };

struct MeasureReport {
  Dims dims;
  double d_p = 0.0;
  double i_p = 0.0;
  double c_p = 0.0;
  double q = 0.0;
  double d_g = 0.0;
  DgKind d_g_kind = DgKind::skipped;
  ZeroDiscordVerdict zero_discord;
  RVector tau_spectrum;     // nonincreasing
  RVector eta_spectrum;     // nonincreasing
  RVector lambda_spectrum;  // criterion tensor, nonincreasing
  // optimizer provenance, meaningful when d_g_kind == numeric_upper_bound
  int restarts = 0;
  std::uint64_t seed = 0;
  bool converged = true;
};

struct ReportOptions {
  OptimizerConfig optimizer;
  bool skip_dg = false;
};

// -- closed-form measures ---------------------------------------------------

/// Eigenvalues of T T^t (left-correlation Gram), nonincreasing.
RVector tau_spectrum(const BlochDecomposition& d);
/// Eigenvalues of G, nonincreasing.
RVector eta_spectrum(const BlochDecomposition& d);

double d_p(const DensityMatrix& rho);
double d_p(const BlochDecomposition& d);
/// D_P recomputed from the G spectrum, (2/(m^2 n)) sum_{k>=m} eta_k.
double d_p_from_eta(const BlochDecomposition& d);

Correlations correlations(const DensityMatrix& rho);
Correlations correlations(const BlochDecomposition& d);

CriterionTensor criterion_tensor(const BlochDecomposition& d);
double zhou_q(const DensityMatrix& rho);
double zhou_q(const BlochDecomposition& d);

ZeroDiscordVerdict is_zero_discord(const DensityMatrix& rho);
ZeroDiscordVerdict is_zero_discord(const BlochDecomposition& d);

/// (eta_2 + eta_3) / (2n); m must be 2.
double gd_exact_2xn(const DensityMatrix& rho);

// -- geometric discord objectives for a fixed measurement basis -------------

/// ||rho - sum_k (Pi_k (x) I) rho (Pi_k (x) I)||^2.
double gd_objective_measurement(const DensityMatrix& rho, const MeasurementBasis& basis);
/// Tr(C C^t) - Tr(A C C^t A^t) with a_ki = <k|X_i|k>.
double gd_objective_cmatrix(const DensityMatrix& rho, const MeasurementBasis& basis);
/// (2/(m^2 n)) [Tr G - sum_k mu_k^t G mu_k].
double gd_objective_simplex(const DensityMatrix& rho, const MeasurementBasis& basis);

/// Multi-restart minimization over measurement bases. Restarts run in
/// parallel; the result is identical to gd_numeric_serial for the same
/// (rho, cfg). The value is an upper bound on D_G.
GdSearchResult gd_numeric(const DensityMatrix& rho, const OptimizerConfig& cfg = {});
/// Single-threaded reference for gd_numeric.
GdSearchResult gd_numeric_serial(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

// -- analytic references ----------------------------------------------------

enum class AnalyticFamily { werner, isotropic, pure_schmidt };

struct AnalyticReference {
  double d_g = 0.0;
  /// Common eigenvalue of the left-correlation Gram (Werner, isotropic).
  std::optional<double> tau;
  /// Squared generalized concurrence C^2 = 2(1 - sum s_i^2) (pure states).
  std::optional<double> concurrence_squared;
};

/// Werner (x in [-1, 1]) or isotropic (x in [0, 1]) m (x) m states.
AnalyticReference analytic_reference(AnalyticFamily family, int m, double x);
/// Pure state with Schmidt coefficients s (nonnegative, summing to 1).
AnalyticReference analytic_reference_pure(std::span<const double> schmidt);

// -- aggregate --------------------------------------------------------------

/// d_g uses gd_exact_2xn when m = 2 and gd_numeric otherwise.
MeasureReport measure_report(const DensityMatrix& rho, const ReportOptions& options = {});

std::string_view to_string(DgKind kind);

}  // namespace discord
