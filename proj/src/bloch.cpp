#include "discord/bloch.hpp"

#include <cmath>

#include "discord/errors.hpp"

namespace discord {
namespace {

// R(b2, b) = sum_{a,a2} A(a, a2) rho(a2 n + b2, a n + b), so that
// Tr[(A (x) B) rho] = Tr(B R).
CMatrix contract_party_a(const CMatrix& rho, const CMatrix& a_op, Dims dims) {
  const int m = dims.m;
  const int n = dims.n;
  CMatrix r = CMatrix::Zero(n, n);
  for (int a = 0; a < m; ++a) {
    for (int a2 = 0; a2 < m; ++a2) {
      const Complex w = a_op(a, a2);
      if (w == Complex(0.0, 0.0)) continue;
      r += w * rho.block(a2 * n, a * n, n, n);
    }
  }
  return r;
}

void check_shape(const BlochDecomposition& d, const GeneratorBasis& basis_a,
                 const GeneratorBasis& basis_b) {
  const Eigen::Index ka = d.dims.m * d.dims.m - 1;
  const Eigen::Index kb = d.dims.n * d.dims.n - 1;
  if (d.dims.m < 2 || d.dims.n < 2 || d.x.size() != ka || d.y.size() != kb || d.t.rows() != ka ||
      d.t.cols() != kb) {
    throw DimensionError("Bloch data inconsistent with dimensions (m, n)");
  }
  if (basis_a.dim() != d.dims.m || basis_b.dim() != d.dims.n) {
    throw DimensionError("generator bases do not match (m, n)");
  }
}

}  // namespace

BlochDecomposition decompose(const DensityMatrix& rho) {
  return decompose(rho, gell_mann_basis(rho.m()), gell_mann_basis(rho.n()));
}

BlochDecomposition decompose(const DensityMatrix& rho, const GeneratorBasis& basis_a,
                             const GeneratorBasis& basis_b) {
  const Dims dims = rho.dims();
  if (basis_a.dim() != dims.m || basis_b.dim() != dims.n) {
    throw DimensionError("generator bases do not match (m, n)");
  }
  const CMatrix& r = rho.matrix();
  const double m = dims.m;
  const double n = dims.n;

  BlochDecomposition d;
  d.dims = dims;
  d.x = coherence_coordinates(partial_trace_b(r, dims), basis_a);
  d.y = coherence_coordinates(partial_trace_a(r, dims), basis_b);
  d.t.resize(basis_a.size(), basis_b.size());
  for (std::size_t i = 0; i < basis_a.size(); ++i) {
    const CMatrix reduced = contract_party_a(r, basis_a[i], dims);
    for (std::size_t j = 0; j < basis_b.size(); ++j) {
      d.t(i, j) = 0.25 * m * n * trace_of_product(basis_b[j], reduced).real();
    }
  }
  return d;
}

Reconstruction reconstruct(const BlochDecomposition& d) {
  return reconstruct(d, gell_mann_basis(d.dims.m), gell_mann_basis(d.dims.n));
}

Reconstruction reconstruct(const BlochDecomposition& d, const GeneratorBasis& basis_a,
                           const GeneratorBasis& basis_b) {
  check_shape(d, basis_a, basis_b);
  const int m = d.dims.m;
  const int n = d.dims.n;
  const CMatrix id_a = CMatrix::Identity(m, m);
  const CMatrix id_b = CMatrix::Identity(n, n);

  CMatrix local_a = CMatrix::Zero(m, m);
  for (std::size_t i = 0; i < basis_a.size(); ++i) local_a += d.x(i) * basis_a[i];
  CMatrix local_b = CMatrix::Zero(n, n);
  for (std::size_t j = 0; j < basis_b.size(); ++j) local_b += d.y(j) * basis_b[j];

  CMatrix out = CMatrix::Identity(m * n, m * n) + kron(local_a, id_b) + kron(id_a, local_b);
  for (std::size_t i = 0; i < basis_a.size(); ++i) {
    CMatrix row = CMatrix::Zero(n, n);
    for (std::size_t j = 0; j < basis_b.size(); ++j) row += d.t(i, j) * basis_b[j];
    out += kron(basis_a[i], row);
  }
  out /= static_cast<double>(m * n);

  Reconstruction rec;
  const RVector ev = hermitian_eigenvalues(0.5 * (out + out.adjoint()));
  rec.min_eigenvalue = ev(0);
  rec.positive = rec.min_eigenvalue >= -kPsdRelative * ev.cwiseAbs().maxCoeff();
  rec.matrix = std::move(out);
  return rec;
}

CoefficientMatrix coefficient_matrix(const DensityMatrix& rho) {
  return coefficient_matrix(decompose(rho));
}

CoefficientMatrix coefficient_matrix(const BlochDecomposition& d) {
  const double m = d.dims.m;
  const double n = d.dims.n;
  const Eigen::Index ka = d.x.size();
  const Eigen::Index kb = d.y.size();
  RMatrix c(ka + 1, kb + 1);
  const double pre = 1.0 / std::sqrt(m * n);
  c(0, 0) = pre;
  c.block(0, 1, 1, kb) = pre * std::sqrt(2.0 / n) * d.y.transpose();
  c.block(1, 0, ka, 1) = pre * std::sqrt(2.0 / m) * d.x;
  c.block(1, 1, ka, kb) = pre * (2.0 / std::sqrt(m * n)) * d.t;
  return {std::move(c)};
}

LeftCorrelation left_correlation(const BlochDecomposition& d) {
  const double m = d.dims.m;
  const double n = d.dims.n;
  const Eigen::Index ka = d.x.size();
  const Eigen::Index kb = d.y.size();
  if (d.t.rows() != ka || d.t.cols() != kb) throw DimensionError("T shape does not match x, y");
  RMatrix left(ka, kb + 1);
  left.col(0) = d.x;
  left.rightCols(kb) = std::sqrt(2.0 / n) * d.t;
  left *= std::sqrt(2.0 / (m * m * n));
  return {std::move(left)};
}

GMatrix g_matrix(const BlochDecomposition& d) {
  const double n = d.dims.n;
  RMatrix g = d.x * d.x.transpose();
  g.noalias() += (2.0 / n) * d.t * d.t.transpose();
  return {std::move(g)};
}

BlochDecomposition swap_parties(const BlochDecomposition& d) {
  return {{d.dims.n, d.dims.m}, d.y, d.x, d.t.transpose()};
}

}  // namespace discord
