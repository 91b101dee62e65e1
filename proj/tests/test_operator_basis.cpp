#include "doctest.h"
#include "oracles.hpp"

#include "discord/errors.hpp"
#include "discord/operator_basis.hpp"
#include "discord/state_zoo.hpp"

using namespace discord;

TEST_CASE("generators match the textbook construction entry by entry") {
  for (int m = 2; m <= 5; ++m) {
    const GeneratorBasis basis = gell_mann_basis(m);
    const auto ref = oracle::textbook_gell_mann(m);
    REQUIRE(basis.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(max_abs_diff(basis[i], ref[i]) == 0.0);
  }
}

TEST_CASE("qubit generators are sigma_z, sigma_x, sigma_y") {
  const GeneratorBasis b = gell_mann_basis(2);
  CMatrix z(2, 2), x(2, 2), y(2, 2);
  z << 1, 0, 0, -1;
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  CHECK(max_abs_diff(b[0], z) == 0.0);
  CHECK(max_abs_diff(b[1], x) == 0.0);
  CHECK(max_abs_diff(b[2], y) == 0.0);
}

TEST_CASE("generators are traceless, hermitian and orthogonal with Tr = 2 delta") {
  for (int m = 2; m <= 6; ++m) {
    const GeneratorBasis b = gell_mann_basis(m);
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(std::abs(b[i].trace()) < kEpsEq);
      CHECK(max_abs_diff(b[i], CMatrix(b[i].adjoint())) < kEpsEq);
      for (std::size_t j = 0; j < b.size(); ++j) {
        const Complex t = trace_of_product(b[i], b[j]);
        CHECK(std::abs(t - Complex(i == j ? 2.0 : 0.0)) < kEpsEq);
      }
    }
  }
}

TEST_CASE("X basis is orthonormal and complete") {
  for (int m = 2; m <= 4; ++m) {
    const OrthonormalOperatorBasis xs = x_basis(m);
    REQUIRE(xs.size() == static_cast<std::size_t>(m * m));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        CHECK(std::abs(trace_of_product(xs[i], xs[j]) - Complex(i == j)) < kEpsEq);
    // sum_i X_i A X_i = Tr(A) I for any A (completeness)
    const CMatrix a = random_unitary(m, 17);
    CMatrix acc = CMatrix::Zero(m, m);
    for (const CMatrix& x : xs.operators()) acc += x * a * x;
    CHECK(max_abs_diff(acc, CMatrix(a.trace() * CMatrix::Identity(m, m))) < kEpsEq);
  }
}

TEST_CASE("dimension below two is rejected") {
  CHECK_THROWS_AS(gell_mann_basis(1), DimensionError);
  CHECK_THROWS_AS(gell_mann_basis(0), DimensionError);
}

TEST_CASE("corrupted ordering breaks orthogonality") {
  const GeneratorBasis b = gell_mann_basis(3, GeneratorOrdering::corrupted_for_testing);
  CHECK(b.ordering_tag() == "corrupted-for-testing");
  CHECK(std::abs(trace_of_product(b[2], b.generators().back())) > 1.0);
}

TEST_CASE("coherence vector round trip") {
  for (int m = 2; m <= 4; ++m) {
    const GeneratorBasis b = gell_mann_basis(m);
    const CMatrix rho = random_local_state(m, 100 + m);
    const RVector a = coherence_coordinates(rho, b);
    CHECK(max_abs_diff(from_coherence_vector(a, b), rho) < kEpsEq);
  }
}

TEST_CASE("projector coherence vectors of a qubit") {
  const GeneratorBasis b = gell_mann_basis(2);
  CVector up(2);
  up << 1, 0;
  const RVector a = projector_coherence_vector(up, b).entries;
  CHECK(a(0) == doctest::Approx(1.0));
  CHECK(a(1) == doctest::Approx(0.0));
  CHECK(a(2) == doctest::Approx(0.0));
  CVector plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const RVector ap = projector_coherence_vector(plus, b).entries;
  CHECK(ap(1) == doctest::Approx(1.0));
  CVector bad(2);
  bad << 1, 1;
  CHECK_THROWS_AS(projector_coherence_vector(bad, b), InvalidInput);
}

TEST_CASE("simplex relations hold for random bases") {
  for (int m = 2; m <= 5; ++m) {
    const GeneratorBasis b = gell_mann_basis(m);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Simplex s = projector_simplex(random_unitary(m, seed), b);
      CHECK(simplex_defect(s) < kEpsEq);
      // |a_k|^2 = m(m-1)/2
      CHECK(s.vectors[0].squaredNorm() == doctest::Approx(0.5 * m * (m - 1)));
    }
  }
}

TEST_CASE("projection from a simplex is a rank m-1 projector") {
  for (int m = 2; m <= 5; ++m) {
    const Simplex s = projector_simplex(random_unitary(m, 7 * m), gell_mann_basis(m));
    const RMatrix p = projection_from_simplex(s).matrix;
    CHECK(max_abs_diff(RMatrix(p * p), p) < kEpsEq);
    CHECK(max_abs_diff(RMatrix(p.transpose()), p) < kEpsEq);
    CHECK(p.trace() == doctest::Approx(m - 1.0));
    CHECK(numerical_rank_psd(p) == m - 1);
  }
}

TEST_CASE("a perturbed simplex is refused") {
  Simplex s = projector_simplex(random_unitary(3, 1), gell_mann_basis(3));
  s.vectors[0](0) += 1e-6;
  CHECK(simplex_defect(s) > kEpsEq);
  CHECK_THROWS_AS(projection_from_simplex(s), InvalidInput);
}

TEST_CASE("weight vectors are orthonormal and form the standard simplex") {
  for (int m = 2; m <= 6; ++m) {
    const auto nu = weight_vectors(m);
    REQUIRE(static_cast<int>(nu.size()) == m);
    // sum_s nu_s nu_s^t = I_{m-1}
    RMatrix gram = RMatrix::Zero(m - 1, m - 1);
    for (const RVector& v : nu) gram += v * v.transpose();
    CHECK(max_abs_diff(gram, RMatrix::Identity(m - 1, m - 1)) < kEpsEq);
    // nu_s . nu_t = delta_st - 1/m
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(std::abs(nu[i].dot(nu[j]) - ((i == j) - 1.0 / m)) < kEpsEq);
  }
  const auto nu2 = weight_vectors(2);
  CHECK(nu2[0](0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(nu2[1](0) == doctest::Approx(-1 / std::sqrt(2.0)));
}
