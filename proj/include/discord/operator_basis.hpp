#pragma once

// Generalized Gell-Mann generators of SU(m) and the objects derived from them:
// orthonormal operator bases, projector coherence vectors, simplexes, the
// rank-(m-1) projections built from a simplex and the SU(m) weight vectors.
//
// Generator order is fixed: the m-1 Cartan (diagonal) generators first,
// ascending; then the symmetric generators |i><j| + |j><i| for i<j in
// lexicographic order; then the antisymmetric generators -i|i><j| + i|j><i|
// in the same pair order. Signs of correlation-matrix entries in the
// antisymmetric sector follow from this choice.

#include <string_view>
#include <vector>

#include "discord/linalg.hpp"

namespace discord {

enum class GeneratorOrdering {
  cartan_first,
  /// Test hook: an off-by-one in the pair enumeration that repeats the first
  /// symmetric generator in place of the last antisymmetric one. Used as a
  /// negative control by the self-test.
  corrupted_for_testing,
};

class GeneratorBasis {
 public:
  GeneratorBasis(int dim, std::vector<CMatrix> generators, GeneratorOrdering ordering);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const CMatrix& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<CMatrix>& generators() const noexcept { return generators_; }
  GeneratorOrdering ordering() const noexcept { return ordering_; }
  std::string_view ordering_tag() const noexcept;

 private:
  int dim_;
  std::vector<CMatrix> generators_;
  GeneratorOrdering ordering_;
};

/// X_0 = I/sqrt(m), X_i = lambda_i/sqrt(2). Tr(X_i X_j) = delta_ij.
class OrthonormalOperatorBasis {
 public:
  explicit OrthonormalOperatorBasis(const GeneratorBasis& generators);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return operators_.size(); }
  const CMatrix& operator[](std::size_t i) const { return operators_[i]; }
  const std::vector<CMatrix>& operators() const noexcept { return operators_; }

 private:
  int dim_;
  std::vector<CMatrix> operators_;
};

struct CoherenceVector {
  int dim = 0;
  RVector entries;
};

/// m coherence vectors of the projectors onto an orthonormal basis.
struct Simplex {
  int dim = 0;
  std::vector<RVector> vectors;
};

struct ProjectionOperator {
  RMatrix matrix;
};

GeneratorBasis gell_mann_basis(int m, GeneratorOrdering ordering = GeneratorOrdering::cartan_first);
OrthonormalOperatorBasis x_basis(int m);

/// (m/2) Tr(lambda_i op) for every generator. For a unit-trace local operator
/// this is its coherence vector.
RVector coherence_coordinates(const CMatrix& op, const GeneratorBasis& basis);

/// (I + a . lambda) / m.
CMatrix from_coherence_vector(const RVector& a, const GeneratorBasis& basis);

CoherenceVector projector_coherence_vector(const CVector& ket, const GeneratorBasis& basis);

/// Columns of `unitary` are the basis kets.
Simplex projector_simplex(const CMatrix& unitary, const GeneratorBasis& basis);

/// Largest deviation of a simplex from a_k . a_k' = -m/2 + (m^2/2) delta_kk'
/// and sum_k a_k = 0.
double simplex_defect(const Simplex& s);

/// P = (2/m^2) sum_k a_k a_k^t.
ProjectionOperator projection_from_simplex(const Simplex& s);

/// Weight vectors of the defining representation: (nu_s)_k =
/// <s|lambda_k|s>/sqrt(2) over the Cartan generators.
std::vector<RVector> weight_vectors(int m);

/// Tr(A B) without forming the product.
Complex trace_of_product(const CMatrix& a, const CMatrix& b);

}  // namespace discord
