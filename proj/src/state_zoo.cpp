#include "discord/state_zoo.hpp"

#include <cmath>
#include <string>

#include "discord/errors.hpp"
#include "discord/random.hpp"

namespace discord {
namespace {

void require_dim(int m, const char* what) {
  if (m < 2) throw DimensionError(std::string(what) + " needs dimension >= 2");
}

void require_probabilities(std::span<const double> p, const char* what) {
  double total = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw DomainError(std::string(what) + " entries must be nonnegative");
    total += v;
  }
  if (std::abs(total - 1.0) > kEpsEq) throw DomainError(std::string(what) + " must sum to 1");
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::werner: return "werner";
    case Family::isotropic: return "isotropic";
    case Family::pure_schmidt: return "pure_schmidt";
    case Family::max_entangled: return "max_entangled";
    case Family::classical_quantum: return "classical_quantum";
    case Family::product: return "product";
    case Family::random_mixed: return "random_mixed";
    case Family::random_pure: return "random_pure";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::werner, Family::isotropic, Family::pure_schmidt, Family::max_entangled,
                   Family::classical_quantum, Family::product, Family::random_mixed,
                   Family::random_pure}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidInput("unknown state family '" + std::string(name) + "'");
}

DensityMatrix werner(int m, double x) {
  require_dim(m, "werner");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("Werner parameter x must lie in [-1, 1]");
  const int d = m * m;
  const double denom = static_cast<double>(m) * m * m - m;
  CMatrix flip = CMatrix::Zero(d, d);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) flip(k * m + l, l * m + k) = 1.0;
  const CMatrix rho = ((m - x) / denom) * CMatrix::Identity(d, d) + ((m * x - 1.0) / denom) * flip;
  return DensityMatrix::from_matrix(rho, {m, m});
}

DensityMatrix isotropic(int m, double x) {
  require_dim(m, "isotropic");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("isotropic parameter x must lie in [0, 1]");
  const int d = m * m;
  CVector psi = CVector::Zero(d);
  for (int k = 0; k < m; ++k) psi(k * m + k) = 1.0 / std::sqrt(static_cast<double>(m));
  const double denom = d - 1.0;
  const CMatrix rho = ((1.0 - x) / denom) * CMatrix::Identity(d, d) +
                      ((d * x - 1.0) / denom) * (psi * psi.adjoint());
  return DensityMatrix::from_matrix(rho, {m, m});
}

DensityMatrix pure_schmidt(std::span<const double> s, int n) {
  const int m = static_cast<int>(s.size());
  require_dim(m, "pure_schmidt");
  if (n < m) throw DimensionError("pure_schmidt needs n >= number of Schmidt coefficients");
  require_probabilities(s, "Schmidt coefficients");
  CVector psi = CVector::Zero(m * n);
  for (int i = 0; i < m; ++i) psi(i * n + i) = std::sqrt(s[i]);
  return DensityMatrix::from_matrix(psi * psi.adjoint(), {m, n});
}

DensityMatrix max_entangled(int m) {
  require_dim(m, "max_entangled");
  const std::vector<double> s(m, 1.0 / m);
  return pure_schmidt(s, m);
}

DensityMatrix classical_quantum(std::span<const double> p, const CMatrix& basis,
                                std::span<const CMatrix> sigmas) {
  const int m = static_cast<int>(basis.rows());
  require_dim(m, "classical_quantum");
  if (basis.cols() != m || static_cast<int>(p.size()) != m ||
      static_cast<int>(sigmas.size()) != m) {
    throw DimensionError("classical_quantum needs m probabilities, an m x m basis and m states");
  }
  require_probabilities(p, "block probabilities");
  if (unitarity_defect(basis) > kEpsEq) {
    throw InvalidInput("classical_quantum basis is not orthonormal");
  }
  const int n = static_cast<int>(sigmas.front().rows());
  require_dim(n, "classical_quantum party B");
  CMatrix rho = CMatrix::Zero(m * n, m * n);
  for (int k = 0; k < m; ++k) {
    if (sigmas[k].rows() != n || sigmas[k].cols() != n) {
      throw DimensionError("classical_quantum states must all be n x n");
    }
    const StateCheck c = check_state(sigmas[k]);
    if (!c.ok()) throw InvalidInput("classical_quantum block state is not a density matrix");
    const CMatrix proj = basis.col(k) * basis.col(k).adjoint();
    rho += p[k] * kron(proj, sigmas[k]);
  }
  return DensityMatrix::from_matrix(rho, {m, n});
}

DensityMatrix product(const CMatrix& rho_a, const CMatrix& rho_b) {
  if (!check_state(rho_a).ok() || !check_state(rho_b).ok()) {
    throw InvalidInput("product factors must be density matrices");
  }
  return DensityMatrix::from_matrix(kron(rho_a, rho_b),
                                    {static_cast<int>(rho_a.rows()), static_cast<int>(rho_b.rows())});
}

DensityMatrix random_mixed(int m, int n, int rank, std::uint64_t seed) {
  require_dim(m, "random_mixed");
  require_dim(n, "random_mixed");
  if (rank < 1 || rank > m * n) {
    throw DomainError("random_mixed rank must lie in [1, m*n], got " + std::to_string(rank));
  }
  Rng rng(splitmix64(seed));
  const CMatrix g = complex_gaussian(m * n, rank, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(rho, {m, n});
}

DensityMatrix random_pure(int m, int n, std::uint64_t seed) { return random_mixed(m, n, 1, seed); }

CMatrix random_unitary(int m, std::uint64_t seed) {
  require_dim(m, "random_unitary");
  Rng rng(splitmix64(seed));
  return haar_unitary(m, rng);
}

CMatrix random_local_state(int n, std::uint64_t seed) {
  require_dim(n, "random_local_state");
  Rng rng(splitmix64(seed));
  const CMatrix g = complex_gaussian(n, n, rng);
  CMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

std::vector<double> random_probabilities(int k, std::uint64_t seed) {
  Rng rng(splitmix64(seed));
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(k);
  double total = 0.0;
  for (double& v : p) {
    v = expo(rng);
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

DensityMatrix random_classical_quantum(int m, int n, std::span<const double> p,
                                       std::uint64_t seed) {
  require_dim(m, "classical_quantum");
  require_dim(n, "classical_quantum");
  const CMatrix basis = random_unitary(m, split_seed(seed, 0));
  std::vector<double> probs(p.begin(), p.end());
  if (probs.empty()) probs = random_probabilities(m, split_seed(seed, 1));
  std::vector<CMatrix> sigmas;
  sigmas.reserve(m);
  for (int k = 0; k < m; ++k) sigmas.push_back(random_local_state(n, split_seed(seed, 2 + k)));
  return classical_quantum(probs, basis, sigmas);
}

DensityMatrix random_product(int m, int n, std::uint64_t seed) {
  return product(random_local_state(m, split_seed(seed, 0)),
                 random_local_state(n, split_seed(seed, 1)));
}

DensityMatrix generate(const StateSpec& spec) {
  switch (spec.family) {
    case Family::werner:
      return werner(spec.m, spec.x);
    case Family::isotropic:
      return isotropic(spec.m, spec.x);
    case Family::pure_schmidt:
      return pure_schmidt(spec.s, spec.n);
    case Family::max_entangled:
      return max_entangled(spec.m);
    case Family::classical_quantum:
      return random_classical_quantum(spec.m, spec.n, spec.p, spec.seed);
    case Family::product:
      return random_product(spec.m, spec.n, spec.seed);
    case Family::random_mixed:
      return random_mixed(spec.m, spec.n, spec.rank == 0 ? spec.m * spec.n : spec.rank, spec.seed);
    case Family::random_pure:
      return random_pure(spec.m, spec.n, spec.seed);
  }
  throw InvalidInput("unknown state family");
}

}  // namespace discord
