#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the library's decomposition, spectra or optimizer code paths.

#include <cmath>
#include <numbers>
#include <vector>

#include "discord/linalg.hpp"

namespace oracle {

using discord::CMatrix;
using discord::Complex;
using discord::CVector;
using discord::RMatrix;
using discord::RVector;

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Gell-Mann generators written out entry by entry from the textbook
/// definition (Cartan, then symmetric pairs, then antisymmetric pairs).
inline std::vector<CMatrix> textbook_gell_mann(int m) {
  std::vector<CMatrix> g;
  for (int k = 1; k < m; ++k) {
    CMatrix h = CMatrix::Zero(m, m);
    for (int i = 0; i <= k; ++i) h(i, i) = (i < k ? 1.0 : -double(k));
    g.push_back(h * std::sqrt(2.0 / (k * (k + 1.0))));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      CMatrix s = CMatrix::Zero(m, m);
      s(i, j) = s(j, i) = 1.0;
      g.push_back(s);
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      CMatrix a = CMatrix::Zero(m, m);
      a(i, j) = Complex(0, -1);
      a(j, i) = Complex(0, 1);
      g.push_back(a);
    }
  return g;
}

inline double tr_real(const CMatrix& a) { return a.trace().real(); }

/// t_ij = (mn/4) Tr[(l_i (x) l_j) rho] with full Kronecker products.
inline RMatrix correlation_by_kron(const CMatrix& rho, int m, int n) {
  const auto ga = textbook_gell_mann(m);
  const auto gb = textbook_gell_mann(n);
  RMatrix t(ga.size(), gb.size());
  for (std::size_t i = 0; i < ga.size(); ++i)
    for (std::size_t j = 0; j < gb.size(); ++j)
      t(i, j) = 0.25 * m * n * tr_real(kron(ga[i], gb[j]) * rho);
  return t;
}

inline RVector coherence_a_by_kron(const CMatrix& rho, int m, int n) {
  const auto ga = textbook_gell_mann(m);
  RVector x(ga.size());
  for (std::size_t i = 0; i < ga.size(); ++i)
    x(i) = 0.5 * m * tr_real(kron(ga[i], CMatrix::Identity(n, n)) * rho);
  return x;
}

inline RVector coherence_b_by_kron(const CMatrix& rho, int m, int n) {
  const auto gb = textbook_gell_mann(n);
  RVector y(gb.size());
  for (std::size_t j = 0; j < gb.size(); ++j)
    y(j) = 0.5 * n * tr_real(kron(CMatrix::Identity(m, m), gb[j]) * rho);
  return y;
}

/// c_ij = Tr[(X_i (x) Y_j) rho] with X_0 = I/sqrt(m), X_i = l_i/sqrt(2).
inline RMatrix coefficients_by_trace(const CMatrix& rho, int m, int n) {
  auto basis = [](int d) {
    std::vector<CMatrix> x{CMatrix::Identity(d, d) / std::sqrt(double(d))};
    for (const CMatrix& g : textbook_gell_mann(d)) x.push_back(g / std::sqrt(2.0));
    return x;
  };
  const auto xa = basis(m);
  const auto xb = basis(n);
  RMatrix c(xa.size(), xb.size());
  for (std::size_t i = 0; i < xa.size(); ++i)
    for (std::size_t j = 0; j < xb.size(); ++j) c(i, j) = tr_real(kron(xa[i], xb[j]) * rho);
  return c;
}

/// ||rho - sum_k (P_k (x) I) rho (P_k (x) I)||^2 for a qubit measurement
/// along Bloch direction (theta, phi).
inline double qubit_measurement_disturbance(const CMatrix& rho, int n, double theta, double phi) {
  CVector up(2), down(2);
  up << std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2);
  down << -std::polar(1.0, -phi) * std::sin(theta / 2), std::cos(theta / 2);
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const CVector& v : {up, down}) {
    const CMatrix p = kron(v * v.adjoint(), CMatrix::Identity(n, n));
    out += p * rho * p;
  }
  return (rho - out).squaredNorm();
}

/// Minimum of the qubit disturbance over a dense (theta, phi) grid, then a
/// local grid refinement around the best cell.
inline double brute_force_gd_qubit(const CMatrix& rho, int n, int grid = 90) {
  double best = INFINITY, bt = 0, bp = 0;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j < 2 * grid; ++j) {
      const double t = std::numbers::pi * i / grid;
      const double p = std::numbers::pi * j / grid;
      const double v = qubit_measurement_disturbance(rho, n, t, p);
      if (v < best) best = v, bt = t, bp = p;
    }
  double step = std::numbers::pi / grid;
  for (int round = 0; round < 40; ++round) {
    bool moved = false;
    for (int dt = -1; dt <= 1; ++dt)
      for (int dp = -1; dp <= 1; ++dp) {
        const double v = qubit_measurement_disturbance(rho, n, bt + dt * step, bp + dp * step);
        if (v < best) best = v, bt += dt * step, bp += dp * step, moved = true;
      }
    if (!moved) step *= 0.5;
  }
  return best;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// nonincreasing.
inline RVector jacobi_eigenvalues(RMatrix a) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = 0.5 * std::atan2(2 * a(p, q), a(q, q) - a(p, p));
        const double c = std::cos(theta), s = std::sin(theta);
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  RVector ev = a.diagonal();
  std::sort(ev.data(), ev.data() + n, std::greater<>());
  return ev;
}

}  // namespace oracle
