#pragma once

#include "discord/linalg.hpp"

namespace discord {

/// Bipartite dimensions; party A is the left tensor factor.
struct Dims {
  int m = 0;
  int n = 0;
  int total() const noexcept { return m * n; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

struct StateCheck {
  double hermitian_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  double psd_tolerance = 0.0;
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;
  bool ok() const noexcept { return hermitian && unit_trace && positive; }
};

/// Checks the density-matrix invariants without throwing. Positivity is only
/// evaluated on Hermitian input.
StateCheck check_state(const CMatrix& rho);

/// A validated m (x) n density matrix. Immutable once constructed.
class DensityMatrix {
 public:
  /// Throws ValidationError naming the first violated invariant.
  static DensityMatrix from_matrix(const CMatrix& rho, Dims dims);

  const CMatrix& matrix() const noexcept { return rho_; }
  Dims dims() const noexcept { return dims_; }
  int m() const noexcept { return dims_.m; }
  int n() const noexcept { return dims_.n; }

 private:
  DensityMatrix(CMatrix rho, Dims dims) : rho_(std::move(rho)), dims_(dims) {}
  CMatrix rho_;
  Dims dims_;
};

/// Reorders the tensor factors: the result is an n (x) m state with B first.
DensityMatrix swap_parties(const DensityMatrix& rho);

/// (U1 (x) U2) rho (U1 (x) U2)^dagger.
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const CMatrix& u1, const CMatrix& u2);

CMatrix partial_trace_b(const CMatrix& rho, Dims dims);
CMatrix partial_trace_a(const CMatrix& rho, Dims dims);

/// Kronecker product A (x) B.
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace discord
