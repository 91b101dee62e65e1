#include "doctest.h"

#include "discord/errors.hpp"
#include "discord/random.hpp"
#include "discord/state_zoo.hpp"

using namespace discord;

TEST_CASE("split_seed follows the splitmix64 rule") {
  // splitmix64(0) is the published first output of the generator
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  CHECK(split_seed(5, 2) == splitmix64(5 + 3 * 0x9E3779B97F4A7C15ULL));
  CHECK(split_seed(5, 0) != split_seed(5, 1));
}

TEST_CASE("haar unitaries are unitary and seed-determined") {
  for (int m = 2; m <= 5; ++m) {
    const CMatrix u = random_unitary(m, 3);
    CHECK(unitarity_defect(u) < kEpsEq);
    CHECK(max_abs_diff(u, random_unitary(m, 3)) == 0.0);
    CHECK(max_abs_diff(u, random_unitary(m, 4)) > 1e-3);
  }
}

TEST_CASE("Werner state is U (x) U invariant and has the stated entries") {
  const DensityMatrix w = werner(2, 1.0);
  // x = 1: (1/6)(I + F); |00><00| entry 1/3, singlet sector empty
  CHECK(w.matrix()(0, 0).real() == doctest::Approx(1.0 / 3));
  CHECK(w.matrix()(1, 2).real() == doctest::Approx(1.0 / 6));
  const DensityMatrix w3 = werner(3, -0.4);
  const CMatrix u = random_unitary(3, 12);
  const DensityMatrix rot = apply_local_unitaries(w3, u, u);
  CHECK(max_abs_diff(rot.matrix(), w3.matrix()) < kEpsEq);
  CHECK_THROWS_AS(werner(3, 1.01), DomainError);
  CHECK_THROWS_AS(werner(1, 0.0), DimensionError);
}

TEST_CASE("isotropic state is U (x) U* invariant") {
  const DensityMatrix s = isotropic(3, 0.7);
  const CMatrix u = random_unitary(3, 5);
  const DensityMatrix rot = apply_local_unitaries(s, u, u.conjugate());
  CHECK(max_abs_diff(rot.matrix(), s.matrix()) < kEpsEq);
  CHECK(isotropic(3, 1.0 / 9).matrix().isApprox(CMatrix::Identity(9, 9) / 9.0));
  CHECK_THROWS_AS(isotropic(3, -0.1), DomainError);
}

TEST_CASE("pure Schmidt states") {
  const std::vector<double> s{0.7, 0.3};
  const DensityMatrix psi = pure_schmidt(s, 3);
  CHECK(psi.dims() == Dims{2, 3});
  CHECK(max_abs_diff(CMatrix(psi.matrix() * psi.matrix()), psi.matrix()) < kEpsEq);
  CHECK(psi.matrix()(0, 0).real() == doctest::Approx(0.7));
  CHECK(psi.matrix()(4, 4).real() == doctest::Approx(0.3));
  CHECK(psi.matrix()(0, 4).real() == doctest::Approx(std::sqrt(0.21)));
  const std::vector<double> bad{0.7, 0.2};
  CHECK_THROWS_AS(pure_schmidt(bad, 2), DomainError);
  CHECK_THROWS_AS(pure_schmidt(s, 1), DimensionError);
}

TEST_CASE("random states are valid and reproducible") {
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {3, 3}, {2, 4}}) {
    for (int rank : {1, 2, m * n}) {
      const DensityMatrix a = random_mixed(m, n, rank, 11);
      CHECK(check_state(a.matrix()).ok());
      CHECK(max_abs_diff(a.matrix(), random_mixed(m, n, rank, 11).matrix()) == 0.0);
      const RVector ev = hermitian_eigenvalues(a.matrix());
      int positive = 0;
      for (Eigen::Index k = 0; k < ev.size(); ++k) positive += ev(k) > 1e-12;
      CHECK(positive == rank);
    }
  }
  CHECK_THROWS_AS(random_mixed(2, 2, 5, 0), DomainError);
}

TEST_CASE("random probabilities lie on the simplex") {
  const std::vector<double> p = random_probabilities(5, 9);
  double total = 0;
  for (double v : p) {
    CHECK(v >= 0.0);
    total += v;
  }
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("generate dispatches by family") {
  StateSpec spec;
  spec.family = Family::werner;
  spec.m = 3;
  spec.x = 0.5;
  CHECK(max_abs_diff(generate(spec).matrix(), werner(3, 0.5).matrix()) == 0.0);
  spec.family = Family::random_mixed;
  spec.n = 2;
  spec.seed = 4;
  CHECK(max_abs_diff(generate(spec).matrix(), random_mixed(3, 2, 6, 4).matrix()) == 0.0);
  spec.family = Family::random_pure;
  CHECK(max_abs_diff(generate(spec).matrix(), random_mixed(3, 2, 1, 4).matrix()) == 0.0);
  CHECK(family_from_string("isotropic") == Family::isotropic);
  CHECK(to_string(Family::classical_quantum) == "classical_quantum");
  CHECK_THROWS_AS(family_from_string("ghz"), InvalidInput);
}

TEST_CASE("swap_parties twice is the identity") {
  const DensityMatrix rho = random_mixed(2, 3, 6, 1);
  const DensityMatrix back = swap_parties(swap_parties(rho));
  CHECK(back.dims() == rho.dims());
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);
  const DensityMatrix prod = product(random_local_state(2, 1), random_local_state(3, 2));
  CHECK(max_abs_diff(swap_parties(prod).matrix(),
                     kron(random_local_state(3, 2), random_local_state(2, 1))) < kEpsEq);
}
