// Geometric discord search over measurement bases on party A.
//
// Each restart starts from a Haar-random unitary U and performs Jacobi-style
// sweeps: for every column pair (j, k) and for both off-diagonal Hermitian
// directions g (symmetric and antisymmetric generator on that pair) it
// minimizes f(U exp(i theta g)) over theta exactly. Along such a path the
// projectors are quadratic in (cos theta, sin theta) and the objective is
// quadratic in the projectors, so f is a trigonometric polynomial in
// phi = 2 theta of degree 2: five samples determine it. Diagonal directions
// only rephase the kets and leave f unchanged, so they are skipped.
//
// The objective is evaluated in simplex form, (2/(m^2 n)) [Tr G - sum_k
// mu_k^t G mu_k], which is cheap and depends on U only column by column.

#include <array>
#include <cmath>
#include <numbers>

#include "discord/errors.hpp"
#include "discord/measures.hpp"
#include "discord/random.hpp"

namespace discord {
namespace {

struct Problem {
  int m = 0;
  RMatrix g;
  double trace_g = 0.0;
  double scale = 0.0;
};

struct RestartOutcome {
  double value = INFINITY;
  CMatrix unitary;
  bool converged = false;
  int sweeps = 0;
};

Problem prepare(const DensityMatrix& rho) {
  Problem p;
  p.m = rho.m();
  p.g = g_matrix(decompose(rho)).matrix;
  p.trace_g = p.g.trace();
  p.scale = 2.0 / (static_cast<double>(p.m) * p.m * rho.n());
  return p;
}

// mu_i = <u|lambda_i|u> / sqrt(2) for the Cartan-first Gell-Mann ordering.
void mu_of(const CVector& u, int m, RVector& mu) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::Index idx = 0;
  double prefix = 0.0;
  for (int k = 1; k < m; ++k) {
    prefix += std::norm(u(k - 1));
    const double s = std::sqrt(2.0 / (k * (k + 1.0)));
    mu(idx++) = inv_sqrt2 * s * (prefix - k * std::norm(u(k)));
  }
  const Eigen::Index pairs = m * (m - 1) / 2;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Complex z = std::conj(u(i)) * u(j);
      mu(idx) = std::numbers::sqrt2 * z.real();
      mu(idx + pairs) = std::numbers::sqrt2 * z.imag();
      ++idx;
    }
  }
}

double captured(const Problem& p, const CVector& u, RVector& scratch) {
  mu_of(u, p.m, scratch);
  return scratch.dot(p.g * scratch);
}

// Rotated pair of columns for U exp(i theta g) with g = sigma_x (symmetric)
// or sigma_y (antisymmetric) on the (j, k) subspace.
void rotate(const CVector& uj, const CVector& uk, bool symmetric, double theta, CVector& out_j,
            CVector& out_k) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (symmetric) {
    const Complex is(0.0, s);
    out_j = c * uj + is * uk;
    out_k = is * uj + c * uk;
  } else {
    out_j = c * uj - s * uk;
    out_k = s * uj + c * uk;
  }
}

struct Trig2 {
  double a0, a1, b1, a2, b2;
  double value(double phi) const {
    return a0 + a1 * std::cos(phi) + b1 * std::sin(phi) + a2 * std::cos(2 * phi) +
           b2 * std::sin(2 * phi);
  }
  double d1(double phi) const {
    return -a1 * std::sin(phi) + b1 * std::cos(phi) - 2 * a2 * std::sin(2 * phi) +
           2 * b2 * std::cos(2 * phi);
  }
  double d2(double phi) const {
    return -a1 * std::cos(phi) - b1 * std::sin(phi) - 4 * a2 * std::cos(2 * phi) -
           4 * b2 * std::sin(2 * phi);
  }
};

Trig2 fit(const std::array<double, 5>& samples) {
  Trig2 t{0, 0, 0, 0, 0};
  for (int s = 0; s < 5; ++s) {
    const double phi = 2.0 * std::numbers::pi * s / 5.0;
    t.a0 += samples[s] / 5.0;
    t.a1 += 0.4 * samples[s] * std::cos(phi);
    t.b1 += 0.4 * samples[s] * std::sin(phi);
    t.a2 += 0.4 * samples[s] * std::cos(2 * phi);
    t.b2 += 0.4 * samples[s] * std::sin(2 * phi);
  }
  return t;
}

// Global maximizer of a degree-2 trigonometric polynomial: grid then Newton.
double argmax(const Trig2& t) {
  constexpr int kGrid = 24;
  double best_phi = 0.0;
  double best = t.value(0.0);
  for (int i = 1; i < kGrid; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / kGrid;
    const double v = t.value(phi);
    if (v > best) {
      best = v;
      best_phi = phi;
    }
  }
  double phi = best_phi;
  for (int it = 0; it < 20; ++it) {
    const double h = t.d2(phi);
    if (!(h < 0.0)) break;
    const double step = -t.d1(phi) / h;
    phi += step;
    if (std::abs(step) < 1e-15) break;
  }
  return t.value(phi) >= best ? phi : best_phi;
}

void reorthonormalize(CMatrix& u) {
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    for (Eigen::Index l = 0; l < k; ++l) {
      u.col(k) -= u.col(l).dot(u.col(k)) * u.col(l);
    }
    u.col(k).normalize();
  }
}

RestartOutcome run_restart(const Problem& p, const OptimizerConfig& cfg, int restart) {
  Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
  RestartOutcome out;
  out.unitary = haar_unitary(p.m, rng);
  CMatrix& u = out.unitary;

  RVector scratch(p.g.rows());
  std::vector<double> q(p.m);
  for (int k = 0; k < p.m; ++k) q[k] = captured(p, u.col(k), scratch);

  CVector nj(p.m), nk(p.m);
  for (int sweep = 0; sweep < cfg.max_iterations; ++sweep) {
    double gain = 0.0;
    for (int j = 0; j < p.m; ++j) {
      for (int k = j + 1; k < p.m; ++k) {
        for (bool symmetric : {true, false}) {
          const CVector uj = u.col(j);
          const CVector uk = u.col(k);
          std::array<double, 5> samples{};
          samples[0] = q[j] + q[k];
          for (int s = 1; s < 5; ++s) {
            rotate(uj, uk, symmetric, std::numbers::pi * s / 5.0, nj, nk);
            samples[s] = captured(p, nj, scratch) + captured(p, nk, scratch);
          }
          const double phi = argmax(fit(samples));
          rotate(uj, uk, symmetric, 0.5 * phi, nj, nk);
          const double qj = captured(p, nj, scratch);
          const double qk = captured(p, nk, scratch);
          const double delta = qj + qk - samples[0];
          if (delta > 0.0) {
            u.col(j) = nj;
            u.col(k) = nk;
            q[j] = qj;
            q[k] = qk;
            gain += p.scale * delta;
          }
        }
      }
    }
    reorthonormalize(u);
    for (int k = 0; k < p.m; ++k) q[k] = captured(p, u.col(k), scratch);
    out.sweeps = sweep + 1;
    if (gain < cfg.tolerance) {
      out.converged = true;
      break;
    }
  }
  double total = 0.0;
  for (double v : q) total += v;
  out.value = p.scale * (p.trace_g - total);
  return out;
}

void check_config(const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) throw InvalidInput("optimizer needs at least one restart");
  if (cfg.max_iterations < 1) throw InvalidInput("optimizer needs max_iterations >= 1");
  if (!(cfg.tolerance >= 0.0)) throw InvalidInput("optimizer tolerance must be >= 0");
}

// Lowest value wins; ties go to the lower restart index.
GdSearchResult reduce(const DensityMatrix& rho, const std::vector<RestartOutcome>& outcomes) {
  int best = 0;
  for (int r = 1; r < static_cast<int>(outcomes.size()); ++r) {
    if (outcomes[r].value < outcomes[best].value) best = r;
  }
  GdSearchResult res;
  res.basis = outcomes[best].unitary;
  res.value = gd_objective_measurement(rho, MeasurementBasis::from_unitary(res.basis));
  if (res.value < kEpsZero) res.value = 0.0;
  res.converged = outcomes[best].converged;
  res.best_restart = best;
  res.sweeps = outcomes[best].sweeps;
  return res;
}

}  // namespace

GdSearchResult gd_numeric_serial(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  check_config(cfg);
  const Problem p = prepare(rho);
  std::vector<RestartOutcome> outcomes(cfg.restarts);
  for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(p, cfg, r);
  return reduce(rho, outcomes);
}

GdSearchResult gd_numeric(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  check_config(cfg);
  const Problem p = prepare(rho);
  std::vector<RestartOutcome> outcomes(cfg.restarts);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(p, cfg, r);
  return reduce(rho, outcomes);
}

}  // namespace discord
