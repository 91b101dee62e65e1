#include "discord/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "discord/errors.hpp"

namespace discord {
namespace {

// Sum of entries [from, end) of a nonincreasing spectrum.
double tail_sum(const RVector& desc, Eigen::Index from) {
  return desc.size() > from ? desc.tail(desc.size() - from).sum() : 0.0;
}

double snap_zero(double v) { return v < kEpsZero ? 0.0 : v; }

}  // namespace

MeasurementBasis MeasurementBasis::from_unitary(const CMatrix& unitary) {
  if (unitary.rows() != unitary.cols() || unitary.rows() < 2) {
    throw DimensionError("measurement basis must be a square matrix of size >= 2");
  }
  const double defect = unitarity_defect(unitary);
  if (defect > kEpsEq) {
    throw InvalidInput("measurement basis is not unitary (defect " + std::to_string(defect) + ")");
  }
  return MeasurementBasis(unitary);
}

MeasurementBasis MeasurementBasis::computational(int m) {
  return MeasurementBasis(CMatrix::Identity(m, m));
}

std::vector<CMatrix> MeasurementBasis::projectors() const {
  std::vector<CMatrix> out;
  out.reserve(dim());
  for (int k = 0; k < dim(); ++k) out.push_back(unitary_.col(k) * unitary_.col(k).adjoint());
  return out;
}

std::vector<RVector> MeasurementBasis::mu_simplex(const GeneratorBasis& basis) const {
  const Simplex s = projector_simplex(unitary_, basis);
  const double scale = std::sqrt(2.0) / dim();
  std::vector<RVector> mu;
  mu.reserve(s.vectors.size());
  for (const RVector& a : s.vectors) mu.push_back(scale * a);
  return mu;
}

RVector tau_spectrum(const BlochDecomposition& d) {
  const RMatrix left = left_correlation(d).matrix;
  return sorted_eigenvalues_desc(left * left.transpose());
}

RVector eta_spectrum(const BlochDecomposition& d) {
  return sorted_eigenvalues_desc(g_matrix(d).matrix);
}

double d_p(const DensityMatrix& rho) { return d_p(decompose(rho)); }

double d_p(const BlochDecomposition& d) {
  return snap_zero(tail_sum(tau_spectrum(d), d.dims.m - 1));
}

double d_p_from_eta(const BlochDecomposition& d) {
  const double m = d.dims.m;
  const double n = d.dims.n;
  return snap_zero(2.0 / (m * m * n) * tail_sum(eta_spectrum(d), d.dims.m - 1));
}

Correlations correlations(const DensityMatrix& rho) { return correlations(decompose(rho)); }

Correlations correlations(const BlochDecomposition& d) {
  const RVector tau = tau_spectrum(d);
  Correlations c;
  c.i_p = std::max(tau.sum(), 0.0);
  c.c_p = std::max(tau.head(d.dims.m - 1).sum(), 0.0);
  return c;
}

CriterionTensor criterion_tensor(const BlochDecomposition& d) {
  const double m = d.dims.m;
  const double n = d.dims.n;
  const double pre = std::pow(4.0 / (m * n), 2);
  RMatrix lambda = d.t * d.t.transpose();
  lambda.noalias() -= d.y.squaredNorm() * d.x * d.x.transpose();
  return {pre * lambda};
}

double zhou_q(const DensityMatrix& rho) { return zhou_q(decompose(rho)); }

double zhou_q(const BlochDecomposition& d) {
  const RVector ev = sorted_eigenvalues_desc(criterion_tensor(d).lambda);
  return snap_zero(0.25 * tail_sum(ev.cwiseAbs(), d.dims.m - 1));
}

ZeroDiscordVerdict is_zero_discord(const DensityMatrix& rho) {
  return is_zero_discord(decompose(rho));
}

ZeroDiscordVerdict is_zero_discord(const BlochDecomposition& d) {
  const int m = d.dims.m;
  const RMatrix left = left_correlation(d).matrix;
  const RMatrix tt = d.t * d.t.transpose();

  ZeroDiscordVerdict v;
  v.rank_left_gram = numerical_rank_psd(left * left.transpose());
  v.zero_discord = v.rank_left_gram <= m - 1;

  Eigen::SelfAdjointEigenSolver<RMatrix> solver(tt);
  if (solver.info() != Eigen::Success) throw NumericError("eigensolver failed on T T^t");
  const RVector& ev = solver.eigenvalues();
  const double cutoff = std::max(kRankRelative * std::max(ev.maxCoeff(), 0.0), kRankFloor);
  RMatrix range(tt.rows(), 0);
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) > cutoff) {
      range.conservativeResize(Eigen::NoChange, range.cols() + 1);
      range.rightCols(1) = solver.eigenvectors().col(k);
    }
  }
  v.rank_tt = static_cast<int>(range.cols());
  const RVector residual = d.x - range * (range.transpose() * d.x);
  v.range_residual = residual.norm();
  v.x_in_range = v.range_residual < kRankRelative * std::max(1.0, d.x.norm());
  v.split_test = v.rank_tt <= m - 2 || (v.rank_tt <= m - 1 && v.x_in_range);
  v.consistent = v.split_test == v.zero_discord;
  return v;
}

double gd_exact_2xn(const DensityMatrix& rho) {
  if (rho.m() != 2) {
    throw DimensionError("gd_exact_2xn requires m = 2, got m = " + std::to_string(rho.m()));
  }
  const RVector eta = eta_spectrum(decompose(rho));
  return snap_zero((eta(1) + eta(2)) / (2.0 * rho.n()));
}

double gd_objective_measurement(const DensityMatrix& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.m()) throw DimensionError("measurement basis does not match party A");
  const int n = rho.n();
  const CMatrix id_b = CMatrix::Identity(n, n);
  const CMatrix& r = rho.matrix();
  CMatrix measured = CMatrix::Zero(r.rows(), r.cols());
  for (const CMatrix& pi : basis.projectors()) {
    const CMatrix p = kron(pi, id_b);
    measured.noalias() += p * r * p;
  }
  return (r - measured).squaredNorm();
}

double gd_objective_cmatrix(const DensityMatrix& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.m()) throw DimensionError("measurement basis does not match party A");
  const int m = rho.m();
  const OrthonormalOperatorBasis xs = x_basis(m);
  const RMatrix c = coefficient_matrix(rho).c;

  RMatrix a(m, m * m);
  for (int k = 0; k < m; ++k) {
    const CVector ket = basis.unitary().col(k);
    for (int i = 0; i < m * m; ++i) a(k, i) = ket.dot(xs[i] * ket).real();
  }
  const RMatrix ac = a * c;
  return c.squaredNorm() - ac.squaredNorm();
}

double gd_objective_simplex(const DensityMatrix& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.m()) throw DimensionError("measurement basis does not match party A");
  const double m = rho.m();
  const double n = rho.n();
  const RMatrix g = g_matrix(decompose(rho)).matrix;
  double captured = 0.0;
  for (const RVector& mu : basis.mu_simplex(gell_mann_basis(rho.m()))) {
    captured += mu.dot(g * mu);
  }
  return 2.0 / (m * m * n) * (g.trace() - captured);
}

AnalyticReference analytic_reference(AnalyticFamily family, int m, double x) {
  if (m < 2) throw DimensionError("analytic reference needs m >= 2");
  const double md = m;
  const double denom_dg = md * (md - 1.0) * (md + 1.0) * (md + 1.0);
  const double denom_tau = md * md * (md * md - 1.0) * (md * md - 1.0);
  double numer = 0.0;
  switch (family) {
    case AnalyticFamily::werner:
      if (!(x >= -1.0 && x <= 1.0)) throw DomainError("Werner parameter x must lie in [-1, 1]");
      numer = (md * x - 1.0) * (md * x - 1.0);
      break;
    case AnalyticFamily::isotropic:
      if (!(x >= 0.0 && x <= 1.0)) throw DomainError("isotropic parameter x must lie in [0, 1]");
      numer = (md * md * x - 1.0) * (md * md * x - 1.0);
      break;
    case AnalyticFamily::pure_schmidt:
      throw InvalidInput("use analytic_reference_pure for Schmidt-form pure states");
  }
  AnalyticReference ref;
  ref.d_g = numer / denom_dg;
  ref.tau = numer / denom_tau;
  return ref;
}

AnalyticReference analytic_reference_pure(std::span<const double> schmidt) {
  if (schmidt.size() < 2) throw DimensionError("Schmidt vector needs at least 2 entries");
  double total = 0.0;
  double purity = 0.0;
  for (double s : schmidt) {
    if (!(s >= 0.0)) throw DomainError("Schmidt coefficients must be nonnegative");
    total += s;
    purity += s * s;
  }
  if (std::abs(total - 1.0) > kEpsEq) throw DomainError("Schmidt coefficients must sum to 1");
  AnalyticReference ref;
  ref.concurrence_squared = 2.0 * (1.0 - purity);
  ref.d_g = 0.5 * *ref.concurrence_squared;
  return ref;
}

MeasureReport measure_report(const DensityMatrix& rho, const ReportOptions& options) {
  const BlochDecomposition d = decompose(rho);
  MeasureReport r;
  r.dims = rho.dims();
  r.tau_spectrum = tau_spectrum(d);
  r.eta_spectrum = eta_spectrum(d);
  r.lambda_spectrum = sorted_eigenvalues_desc(criterion_tensor(d).lambda);
  r.d_p = d_p(d);
  const Correlations c = correlations(d);
  r.i_p = c.i_p;
  r.c_p = c.c_p;
  r.q = zhou_q(d);
  r.zero_discord = is_zero_discord(d);

  if (options.skip_dg) {
    r.d_g_kind = DgKind::skipped;
  } else if (rho.m() == 2) {
    r.d_g = gd_exact_2xn(rho);
    r.d_g_kind = DgKind::exact;
  } else {
    const GdSearchResult s = gd_numeric(rho, options.optimizer);
    r.d_g = s.value;
    r.d_g_kind = DgKind::numeric_upper_bound;
    r.restarts = options.optimizer.restarts;
    r.seed = options.optimizer.seed;
    r.converged = s.converged;
  }
  return r;
}

std::string_view to_string(DgKind kind) {
  switch (kind) {
    case DgKind::exact:
      return "exact";
    case DgKind::numeric_upper_bound:
      return "numeric_upper_bound";
    case DgKind::skipped:
      return "skipped";
  }
  return "unknown";
}

}  // namespace discord
