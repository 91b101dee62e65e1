// Seeded property checks over generated corpora. Each case draws its states
// from a fixed root seed so failures are reproducible by index.

#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "discord/measures.hpp"
#include "discord/operator_basis.hpp"
#include "discord/random.hpp"
#include "discord/state_zoo.hpp"

using namespace discord;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::uint64_t seed() { return rng(); }
  int rank(int max) { return std::uniform_int_distribution<int>(1, max)(rng); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  DensityMatrix state(int m, int n) { return random_mixed(m, n, rank(m * n), seed()); }
};

const std::pair<int, int> kDims[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};

}  // namespace

TEST_CASE("property: projector round trip through the coherence vector") {
  Gen g(1);
  for (int m = 2; m <= 4; ++m) {
    const GeneratorBasis b = gell_mann_basis(m);
    for (int i = 0; i < 100; ++i) {
      const CMatrix u = random_unitary(m, g.seed());
      const CVector ket = u.col(0);
      const RVector a = projector_coherence_vector(ket, b).entries;
      CHECK(max_abs_diff(from_coherence_vector(a, b), CMatrix(ket * ket.adjoint())) < kEpsEq);
      const Simplex s = projector_simplex(u, b);
      CHECK(simplex_defect(s) < kEpsEq);
      const RMatrix p = projection_from_simplex(s).matrix;
      CHECK((p * p - p).norm() < kEpsEq);
      CHECK(std::abs(p.trace() - (m - 1)) < kEpsEq);
    }
  }
}

TEST_CASE("property: purity equals Tr(C C^t)") {
  Gen g(2);
  for (auto [m, n] : kDims) {
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho = g.state(m, n);
      const double purity = (rho.matrix() * rho.matrix()).trace().real();
      CHECK(std::abs(coefficient_matrix(rho).c.squaredNorm() - purity) < kEpsEq);
      CHECK(max_abs_diff(reconstruct(decompose(rho)).matrix, rho.matrix()) < kEpsEq);
    }
  }
}

TEST_CASE("property: decompose after reconstruct returns the Bloch data") {
  Gen g(3);
  for (auto [m, n] : kDims) {
    for (int i = 0; i < 10; ++i) {
      const BlochDecomposition d = decompose(g.state(m, n));
      const BlochDecomposition back =
          decompose(DensityMatrix::from_matrix(reconstruct(d).matrix, d.dims));
      CHECK(max_abs_diff(back.t, d.t) < kEpsEq);
      CHECK((back.x - d.x).cwiseAbs().maxCoeff() < kEpsEq);
      CHECK((back.y - d.y).cwiseAbs().maxCoeff() < kEpsEq);
    }
  }
}

TEST_CASE("property: local unitaries leave the eta spectrum and D_P unchanged") {
  Gen g(4);
  for (auto [m, n] : kDims) {
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho = g.state(m, n);
      const DensityMatrix rot =
          apply_local_unitaries(rho, random_unitary(m, g.seed()), random_unitary(n, g.seed()));
      const RVector e0 = eta_spectrum(decompose(rho));
      const RVector e1 = eta_spectrum(decompose(rot));
      CHECK((e0 - e1).cwiseAbs().maxCoeff() < kEpsEq);
      CHECK(std::abs(d_p(rho) - d_p(rot)) < kEpsEq);
    }
  }
}

TEST_CASE("property: spectra are nonincreasing and D_P routes agree") {
  Gen g(5);
  for (auto [m, n] : kDims) {
    for (int i = 0; i < 20; ++i) {
      const BlochDecomposition d = decompose(g.state(m, n));
      for (const RVector& v : {tau_spectrum(d), eta_spectrum(d)})
        for (Eigen::Index k = 1; k < v.size(); ++k) CHECK(v(k) <= v(k - 1));
      CHECK(std::abs(d_p(d) - d_p_from_eta(d)) < kEpsEq);
      const Correlations c = correlations(d);
      CHECK(c.c_p <= c.i_p + kEpsEq);
      CHECK(std::abs(c.i_p - (c.c_p + d_p(d))) < kEpsEq);
    }
  }
}

TEST_CASE("property: D_P and the objectives do not depend on y") {
  Gen g(6);
  int skipped = 0, checked = 0;
  for (auto [m, n] : kDims) {
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho = random_mixed(m, n, m * n, g.seed());
      // traceless Hermitian perturbation on B: only y moves
      const CMatrix h = random_local_state(n, g.seed()) - CMatrix::Identity(n, n) / double(n);
      const CMatrix shifted = rho.matrix() + 0.05 * kron(CMatrix::Identity(m, m) / double(m), h);
      if (!check_state(shifted).ok()) {
        ++skipped;
        continue;
      }
      ++checked;
      const DensityMatrix rho2 = DensityMatrix::from_matrix(shifted, rho.dims());
      const BlochDecomposition d1 = decompose(rho), d2 = decompose(rho2);
      CHECK((d1.y - d2.y).norm() > 1e-4);
      CHECK(max_abs_diff(d1.t, d2.t) < kEpsEq);
      CHECK(std::abs(d_p(d1) - d_p(d2)) < kEpsEq);
      const MeasurementBasis b = MeasurementBasis::from_unitary(random_unitary(m, g.seed()));
      CHECK(std::abs(gd_objective_measurement(rho, b) - gd_objective_measurement(rho2, b)) < kEpsEq);
      CHECK(std::abs(gd_objective_simplex(rho, b) - gd_objective_simplex(rho2, b)) < kEpsEq);
    }
  }
  MESSAGE("y-independence: checked " << checked << ", skipped " << skipped);
  CHECK(checked > 50);
}

TEST_CASE("property: zero-discord verdict agrees with D_P vanishing") {
  Gen g(7);
  for (int i = 0; i < 50; ++i) {
    const int m = 2 + i % 3, n = 2 + (i / 3) % 2;
    const DensityMatrix cq = random_classical_quantum(m, n, {}, g.seed());
    CHECK(is_zero_discord(cq).zero_discord);
    CHECK(d_p(cq) < kEpsZero);
    const DensityMatrix generic = random_mixed(m, n, m * n, g.seed());
    CHECK_FALSE(is_zero_discord(generic).zero_discord);
    CHECK(d_p(generic) >= kEpsZero);
  }
}

TEST_CASE("property: pure Schmidt states follow the closed-form Bloch structure") {
  Gen g(8);
  for (int m = 2; m <= 4; ++m) {
    const GeneratorBasis b = gell_mann_basis(m);
    for (int rep = 0; rep < 10; ++rep) {
      const std::vector<double> s = random_probabilities(m, g.seed());
      const BlochDecomposition d = decompose(pure_schmidt(s, m));
      const int cartan = m - 1, pairs = m * (m - 1) / 2;
      for (int k = 0; k < cartan; ++k) {
        double xk = 0, yk = 0;
        for (int i = 0; i < m; ++i) xk += 0.5 * m * s[i] * b[k](i, i).real();
        yk = xk;
        CHECK(std::abs(d.x(k) - xk) < kEpsEq);
        CHECK(std::abs(d.y(k) - yk) < kEpsEq);
        for (int l = 0; l < cartan; ++l) {
          double tc = 0;
          for (int i = 0; i < m; ++i) tc += 0.25 * m * m * s[i] * b[k](i, i).real() * b[l](i, i).real();
          CHECK(std::abs(d.t(k, l) - tc) < kEpsEq);
        }
      }
      CHECK(d.x.tail(2 * pairs).norm() < kEpsEq);
      // off-diagonal sector is diagonal: +(m^2/2)sqrt(s_i s_j) symmetric,
      // -(m^2/2)sqrt(s_i s_j) antisymmetric
      int idx = 0;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++idx) {
          const double v = 0.5 * m * m * std::sqrt(s[i] * s[j]);
          CHECK(std::abs(d.t(cartan + idx, cartan + idx) - v) < kEpsEq);
          CHECK(std::abs(d.t(cartan + pairs + idx, cartan + pairs + idx) + v) < kEpsEq);
        }
      RMatrix td = d.t.bottomRightCorner(2 * pairs, 2 * pairs);
      td.diagonal().setZero();
      CHECK(td.cwiseAbs().maxCoeff() < kEpsEq);
      CHECK(d.t.topRightCorner(cartan, 2 * pairs).cwiseAbs().maxCoeff() < kEpsEq);
    }
  }
}

TEST_CASE("property: D_P is a lower bound for the optimizer value") {
  Gen g(9);
  for (auto [m, n] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    for (int i = 0; i < 10; ++i) {
      const DensityMatrix rho = g.state(m, n);
      const double ub = gd_numeric(rho, {.restarts = 4, .seed = g.seed()}).value;
      CHECK(d_p(rho) <= ub + kEpsOpt);
    }
  }
}
