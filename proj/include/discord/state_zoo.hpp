#pragma once

// Analytic state families and seeded random corpora.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discord/density_matrix.hpp"

namespace discord {

enum class Family {
  werner,
  isotropic,
  pure_schmidt,
  max_entangled,
  classical_quantum,
  product,
  random_mixed,
  random_pure,
};

std::string_view to_string(Family f);
/// Throws InvalidInput for an unknown name.
Family family_from_string(std::string_view name);

/// Parameters for `generate`. Fields a family does not use are ignored.
struct StateSpec {
  Family family = Family::werner;
  int m = 2;
  int n = 2;
  double x = 0.0;
  std::vector<double> s;  // Schmidt coefficients (pure_schmidt)
  std::vector<double> p;  // block probabilities (classical_quantum); drawn if empty
  std::uint64_t seed = 0;
  int rank = 0;  // random_mixed; 0 means full rank
};

/// ((m-x)/(m^3-m)) I + ((mx-1)/(m^3-m)) F, x in [-1, 1].
DensityMatrix werner(int m, double x);
/// ((1-x)/(m^2-1)) I + ((m^2 x-1)/(m^2-1)) |psi><psi|, x in [0, 1].
DensityMatrix isotropic(int m, double x);
/// sum_i sqrt(s_i)|ii> embedded in m (x) n with m = s.size() <= n.
DensityMatrix pure_schmidt(std::span<const double> s, int n);
/// (1/sqrt(m)) sum_k |kk>.
DensityMatrix max_entangled(int m);
/// sum_k p_k U|k><k|U^dagger (x) sigma_k.
DensityMatrix classical_quantum(std::span<const double> p, const CMatrix& basis,
                                std::span<const CMatrix> sigmas);
DensityMatrix product(const CMatrix& rho_a, const CMatrix& rho_b);

/// G G^dagger / Tr(G G^dagger) with G an (mn) x rank complex Gaussian.
DensityMatrix random_mixed(int m, int n, int rank, std::uint64_t seed);
DensityMatrix random_pure(int m, int n, std::uint64_t seed);
CMatrix random_unitary(int m, std::uint64_t seed);
/// Full-rank random n x n density matrix.
CMatrix random_local_state(int n, std::uint64_t seed);
/// Probability vector drawn uniformly from the simplex.
std::vector<double> random_probabilities(int k, std::uint64_t seed);
/// Classical-quantum state with a random basis and random full-rank sigma_k.
/// Children of `seed`: 0 basis, 1 probabilities (when p is empty), 2+k sigma_k.
DensityMatrix random_classical_quantum(int m, int n, std::span<const double> p, std::uint64_t seed);

/// Product family: random full-rank local states, children 0 (A) and 1 (B).
DensityMatrix random_product(int m, int n, std::uint64_t seed);

DensityMatrix generate(const StateSpec& spec);

}  // namespace discord
