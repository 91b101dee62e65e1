#pragma once

// Bloch form of a bipartite state:
//
//   rho = (1/mn) (I(x)I + x.lambda^A (x) I + I (x) y.lambda^B
//                 + sum_ij t_ij lambda^A_i (x) lambda^B_j)
//
// with x_i = (m/2) Tr[(lambda_i (x) I) rho], y_j = (n/2) Tr[(I (x) lambda_j) rho]
// and t_ij = (mn/4) Tr[(lambda_i (x) lambda_j) rho].

#include "discord/density_matrix.hpp"
#include "discord/operator_basis.hpp"

namespace discord {

struct BlochDecomposition {
  Dims dims;
  RVector x;  // party A coherence vector, m^2-1
  RVector y;  // party B coherence vector, n^2-1
  RMatrix t;  // correlation matrix, (m^2-1) x (n^2-1)
};

/// Result of rebuilding an operator from Bloch data. Hermitian with unit
/// trace by construction; positivity is reported, not enforced.
struct Reconstruction {
  CMatrix matrix;
  double min_eigenvalue = 0.0;
  bool positive = false;
};

/// Coefficients of rho in the orthonormal basis {X_i (x) Y_j}, m^2 x n^2.
struct CoefficientMatrix {
  RMatrix c;
};

/// sqrt(2/(m^2 n)) [x | sqrt(2/n) T], (m^2-1) x n^2. Same as the coefficient
/// matrix with its first row removed.
struct LeftCorrelation {
  RMatrix matrix;
};

/// G = x x^t + (2/n) T T^t.
struct GMatrix {
  RMatrix matrix;
};

BlochDecomposition decompose(const DensityMatrix& rho);
BlochDecomposition decompose(const DensityMatrix& rho, const GeneratorBasis& basis_a,
                             const GeneratorBasis& basis_b);

Reconstruction reconstruct(const BlochDecomposition& d);
Reconstruction reconstruct(const BlochDecomposition& d, const GeneratorBasis& basis_a,
                           const GeneratorBasis& basis_b);

CoefficientMatrix coefficient_matrix(const DensityMatrix& rho);
CoefficientMatrix coefficient_matrix(const BlochDecomposition& d);

LeftCorrelation left_correlation(const BlochDecomposition& d);
GMatrix g_matrix(const BlochDecomposition& d);

/// Bloch data of the swapped bipartition: x and y exchange, T transposes.
BlochDecomposition swap_parties(const BlochDecomposition& d);

}  // namespace discord
