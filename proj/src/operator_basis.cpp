#include "discord/operator_basis.hpp"

#include <cmath>
#include <string>

#include "discord/errors.hpp"

namespace discord {
namespace {

void require_dim(int m) {
  if (m < 2) {
    throw DimensionError("generator basis needs dimension >= 2, got " + std::to_string(m));
  }
}

}  // namespace

GeneratorBasis::GeneratorBasis(int dim, std::vector<CMatrix> generators, GeneratorOrdering ordering)
    : dim_(dim), generators_(std::move(generators)), ordering_(ordering) {
  require_dim(dim_);
  if (generators_.size() != static_cast<std::size_t>(dim_ * dim_ - 1)) {
    throw DimensionError("SU(m) needs m^2-1 generators");
  }
}

std::string_view GeneratorBasis::ordering_tag() const noexcept {
  switch (ordering_) {
    case GeneratorOrdering::cartan_first:
      return "cartan-first/symmetric/antisymmetric";
    case GeneratorOrdering::corrupted_for_testing:
      return "corrupted-for-testing";
  }
  return "unknown";
}

OrthonormalOperatorBasis::OrthonormalOperatorBasis(const GeneratorBasis& generators)
    : dim_(generators.dim()) {
  operators_.reserve(generators.size() + 1);
  operators_.push_back(CMatrix::Identity(dim_, dim_) / std::sqrt(static_cast<double>(dim_)));
  for (const CMatrix& g : generators.generators()) {
    operators_.push_back(g / std::sqrt(2.0));
  }
}

GeneratorBasis gell_mann_basis(int m, GeneratorOrdering ordering) {
  require_dim(m);
  std::vector<CMatrix> gens;
  gens.reserve(m * m - 1);

  for (int k = 1; k < m; ++k) {
    CMatrix h = CMatrix::Zero(m, m);
    const double scale = std::sqrt(2.0 / (k * (k + 1.0)));
    for (int i = 0; i < k; ++i) h(i, i) = scale;
    h(k, k) = -k * scale;
    gens.push_back(std::move(h));
  }
  const Complex I(0.0, 1.0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      CMatrix s = CMatrix::Zero(m, m);
      s(i, j) = 1.0;
      s(j, i) = 1.0;
      gens.push_back(std::move(s));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      CMatrix a = CMatrix::Zero(m, m);
      a(i, j) = -I;
      a(j, i) = I;
      gens.push_back(std::move(a));
    }
  }

  if (ordering == GeneratorOrdering::corrupted_for_testing) {
    gens.back() = gens[m - 1];
  }
  return GeneratorBasis(m, std::move(gens), ordering);
}

OrthonormalOperatorBasis x_basis(int m) { return OrthonormalOperatorBasis(gell_mann_basis(m)); }

Complex trace_of_product(const CMatrix& a, const CMatrix& b) {
  // Tr(AB) = sum_ij A_ij B_ji
  return (a.array() * b.transpose().array()).sum();
}

RVector coherence_coordinates(const CMatrix& op, const GeneratorBasis& basis) {
  const int m = basis.dim();
  if (op.rows() != m || op.cols() != m) {
    throw DimensionError("operator does not match generator dimension");
  }
  RVector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out(i) = 0.5 * m * trace_of_product(basis[i], op).real();
  }
  return out;
}

CMatrix from_coherence_vector(const RVector& a, const GeneratorBasis& basis) {
  const int m = basis.dim();
  if (a.size() != static_cast<Eigen::Index>(basis.size())) {
    throw DimensionError("coherence vector length must be m^2-1");
  }
  CMatrix out = CMatrix::Identity(m, m);
  for (std::size_t i = 0; i < basis.size(); ++i) out += a(i) * basis[i];
  return out / static_cast<double>(m);
}

CoherenceVector projector_coherence_vector(const CVector& ket, const GeneratorBasis& basis) {
  const int m = basis.dim();
  if (ket.size() != m) throw DimensionError("ket dimension does not match generator basis");
  if (std::abs(ket.norm() - 1.0) > kEpsEq) {
    throw InvalidInput("ket is not normalized (|ket| = " + std::to_string(ket.norm()) + ")");
  }
  RVector alpha(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    alpha(i) = 0.5 * m * ket.dot(basis[i] * ket).real();
  }
  return {m, std::move(alpha)};
}

Simplex projector_simplex(const CMatrix& unitary, const GeneratorBasis& basis) {
  const int m = basis.dim();
  if (unitary.rows() != m || unitary.cols() != m) {
    throw DimensionError("basis matrix must be m x m");
  }
  const double defect = unitarity_defect(unitary);
  if (defect > kEpsEq) {
    throw InvalidInput("basis vectors are not orthonormal (defect " + std::to_string(defect) + ")");
  }
  Simplex s{m, {}};
  s.vectors.reserve(m);
  for (int k = 0; k < m; ++k) {
    s.vectors.push_back(projector_coherence_vector(unitary.col(k), basis).entries);
  }
  return s;
}

double simplex_defect(const Simplex& s) {
  const int m = s.dim;
  if (static_cast<int>(s.vectors.size()) != m || m < 2) return INFINITY;
  double worst = 0.0;
  RVector total = RVector::Zero(s.vectors.front().size());
  for (int k = 0; k < m; ++k) {
    total += s.vectors[k];
    for (int l = 0; l < m; ++l) {
      const double expected = -0.5 * m + (k == l ? 0.5 * m * m : 0.0);
      worst = std::max(worst, std::abs(s.vectors[k].dot(s.vectors[l]) - expected));
    }
  }
  return std::max(worst, total.cwiseAbs().maxCoeff());
}

ProjectionOperator projection_from_simplex(const Simplex& s) {
  const double defect = simplex_defect(s);
  if (!(defect <= kEpsEq)) {
    throw InvalidInput("simplex relations violated (defect " + std::to_string(defect) + ")");
  }
  const Eigen::Index d = s.vectors.front().size();
  RMatrix p = RMatrix::Zero(d, d);
  for (const RVector& a : s.vectors) p.noalias() += a * a.transpose();
  p *= 2.0 / (static_cast<double>(s.dim) * s.dim);
  return {std::move(p)};
}

std::vector<RVector> weight_vectors(int m) {
  const GeneratorBasis basis = gell_mann_basis(m);
  std::vector<RVector> nu(m, RVector(m - 1));
  for (int s = 0; s < m; ++s) {
    for (int k = 0; k < m - 1; ++k) nu[s](k) = basis[k](s, s).real() / std::sqrt(2.0);
  }
  return nu;
}

}  // namespace discord
