#include "discord/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "discord/errors.hpp"

namespace discord {

StateCheck check_state(const CMatrix& rho) {
  StateCheck c;
  c.hermitian_defect = max_abs_diff(rho, rho.adjoint());
  c.hermitian = c.hermitian_defect <= kEpsEq;
  c.trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  c.unit_trace = c.trace_defect <= kEpsEq;
  if (c.hermitian) {
    const CMatrix h = 0.5 * (rho + rho.adjoint());
    const RVector ev = hermitian_eigenvalues(h);
    c.min_eigenvalue = ev(0);
    c.psd_tolerance = kPsdRelative * ev.cwiseAbs().maxCoeff();
    c.positive = c.min_eigenvalue >= -c.psd_tolerance;
  }
  return c;
}

DensityMatrix DensityMatrix::from_matrix(const CMatrix& rho, Dims dims) {
  if (dims.m < 2 || dims.n < 2) {
    throw ValidationError("dimensions", "subsystem dimensions must be >= 2");
  }
  if (rho.rows() != dims.total() || rho.cols() != dims.total()) {
    std::ostringstream os;
    os << "dimensions: matrix is " << rho.rows() << "x" << rho.cols() << " but m*n = "
       << dims.total();
    throw ValidationError("dimensions", os.str());
  }
  if (!rho.allFinite()) throw ValidationError("finite", "finite: matrix has non-finite entries");
  const StateCheck c = check_state(rho);
  if (!c.hermitian) {
    std::ostringstream os;
    os << "hermitian: max |rho - rho^dagger| = " << c.hermitian_defect;
    throw ValidationError("hermitian", os.str());
  }
  if (!c.unit_trace) {
    std::ostringstream os;
    os << "trace: |Tr(rho) - 1| = " << c.trace_defect;
    throw ValidationError("trace", os.str());
  }
  if (!c.positive) {
    std::ostringstream os;
    os << "positivity: minimum eigenvalue " << c.min_eigenvalue << " below -" << c.psd_tolerance;
    throw ValidationError("positivity", os.str());
  }
  return DensityMatrix(0.5 * (rho + rho.adjoint()), dims);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix swap_parties(const DensityMatrix& rho) {
  const int m = rho.m();
  const int n = rho.n();
  const CMatrix& r = rho.matrix();
  CMatrix out(m * n, m * n);
  // |a b> -> |b a>
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b)
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < n; ++b2) out(b * m + a, b2 * m + a2) = r(a * n + b, a2 * n + b2);
  return DensityMatrix::from_matrix(out, {n, m});
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const CMatrix& u1, const CMatrix& u2) {
  if (u1.rows() != rho.m() || u2.rows() != rho.n()) {
    throw DimensionError("local unitary dimensions do not match the state");
  }
  const CMatrix u = kron(u1, u2);
  return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint(), rho.dims());
}

CMatrix partial_trace_b(const CMatrix& rho, Dims dims) {
  CMatrix out = CMatrix::Zero(dims.m, dims.m);
  for (int a = 0; a < dims.m; ++a)
    for (int a2 = 0; a2 < dims.m; ++a2)
      for (int b = 0; b < dims.n; ++b) out(a, a2) += rho(a * dims.n + b, a2 * dims.n + b);
  return out;
}

CMatrix partial_trace_a(const CMatrix& rho, Dims dims) {
  CMatrix out = CMatrix::Zero(dims.n, dims.n);
  for (int b = 0; b < dims.n; ++b)
    for (int b2 = 0; b2 < dims.n; ++b2)
      for (int a = 0; a < dims.m; ++a) out(b, b2) += rho(a * dims.n + b, a * dims.n + b2);
  return out;
}

}  // namespace discord
