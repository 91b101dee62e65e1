#include "discord/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "discord/errors.hpp"
#include "discord/measures.hpp"
#include "discord/random.hpp"
#include "discord/state_zoo.hpp"

namespace discord {
namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Worst deviation and count of samples over a threshold.
struct Tally {
  double worst = 0.0;
  int violations = 0;
  int samples = 0;
  void add(double deviation, double threshold) {
    ++samples;
    // NaN counts as a violation
    if (!(deviation < threshold)) ++violations;
    if (!(deviation <= worst)) worst = deviation;
  }
};

struct Context {
  const AcceptanceOptions& opt;
  GeneratorBasis basis(int m) const { return gell_mann_basis(m, opt.ordering); }
  int corpus(int full) const { return opt.quick ? std::max(full / 5, 4) : full; }
  std::uint64_t seed(int criterion, std::uint64_t i) const {
    return split_seed(split_seed(opt.seed, criterion), i);
  }
};

double one_minus_purity(const std::vector<double>& s) {
  double p = 0.0;
  for (double v : s) p += v * v;
  return 1.0 - p;
}

// Closed-form families: d_p and the flat tau spectrum, decomposed in the
// generator basis chosen by the options.
void closed_form(const Context& ctx, AnalyticFamily fam, CriterionResult& r) {
  Tally dp, tau;
  const int points = fam == AnalyticFamily::werner ? 21 : 11;
  const double lo = fam == AnalyticFamily::werner ? -1.0 : 0.0;
  for (int m = 2; m <= 4; ++m) {
    const GeneratorBasis b = ctx.basis(m);
    for (int k = 0; k < points; ++k) {
      const double x = k == points - 1 ? 1.0 : lo + (1.0 - lo) * k / (points - 1);
      const DensityMatrix rho = fam == AnalyticFamily::werner ? werner(m, x) : isotropic(m, x);
      const AnalyticReference ref = analytic_reference(fam, m, x);
      const BlochDecomposition d = decompose(rho, b, b);
      dp.add(std::abs(d_p(d) - ref.d_g), 1e-9);
      const RVector spec = tau_spectrum(d);
      tau.add((spec.array() - *ref.tau).abs().maxCoeff(), 1e-9);
    }
  }
  r.samples = dp.samples;
  r.passed = dp.violations == 0 && tau.violations == 0;
  r.measured = "max|d_p - ref| = " + sci(dp.worst) + ", max|tau_k - tau| = " + sci(tau.worst);
  r.expected = "< 1e-9 (both)";
}

void werner_criterion(const Context& ctx, CriterionResult& r) {
  closed_form(ctx, AnalyticFamily::werner, r);
}

void isotropic_criterion(const Context& ctx, CriterionResult& r) {
  closed_form(ctx, AnalyticFamily::isotropic, r);
}

void max_entangled_criterion(const Context& ctx, CriterionResult& r) {
  Tally t;
  std::ostringstream detail;
  for (int m = 2; m <= 4; ++m) {
    const DensityMatrix rho = max_entangled(m);
    const double target = (m - 1.0) / m;
    const double dp = d_p(rho);
    const double dg =
        m == 2 ? gd_exact_2xn(rho) : gd_numeric(rho, {.seed = ctx.seed(3, m)}).value;
    t.add(std::abs(dp - target), 1e-6);
    t.add(std::abs(dg - target), 1e-6);
    detail << (m == 2 ? "" : ", ") << "m=" << m << " d_g=" << sci(dg);
  }
  r.samples = 3;
  r.passed = t.violations == 0;
  r.measured = "max dev = " + sci(t.worst) + " (" + detail.str() + ")";
  r.expected = "d_p = d_g = (m-1)/m within 1e-6";
}

void pure_state_criterion(const Context& ctx, CriterionResult& r) {
  Tally t;
  const int count = ctx.corpus(100);
  for (int m : {2, 3}) {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = ctx.seed(4, 1000 * m + i);
      const std::vector<double> schmidt = random_probabilities(m, split_seed(s, 0));
      // random local bases so the state is not in Schmidt form
      const DensityMatrix rho = apply_local_unitaries(pure_schmidt(schmidt, m),
                                                      random_unitary(m, split_seed(s, 1)),
                                                      random_unitary(m, split_seed(s, 2)));
      const double value = m == 2 ? gd_exact_2xn(rho)
                                  : gd_numeric(rho, {.seed = split_seed(s, 3)}).value;
      t.add(std::abs(value - one_minus_purity(schmidt)), 1e-5);
    }
  }
  r.samples = t.samples;
  r.passed = t.violations == 0;
  r.measured = "max|D_G - (1 - sum s^2)| = " + sci(t.worst) + ", violations " +
               std::to_string(t.violations);
  r.expected = "< 1e-5";
}

// Ranks cycle 1..mn so low-rank and full-rank states both appear.
DensityMatrix corpus_state(int m, int n, int i, std::uint64_t seed) {
  return random_mixed(m, n, 1 + i % (m * n), seed);
}

void two_by_n_criterion(const Context& ctx, CriterionResult& r) {
  Tally exact, numeric;
  const int count = ctx.corpus(200);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = ctx.seed(5, 1000 * n + i);
      const DensityMatrix rho = corpus_state(2, n, i, split_seed(s, 0));
      const double dp = d_p(rho);
      exact.add(std::abs(dp - gd_exact_2xn(rho)), 1e-12);
      numeric.add(std::abs(dp - gd_numeric(rho, {.seed = split_seed(s, 1)}).value), 1e-6);
    }
  }
  r.samples = exact.samples;
  r.passed = exact.violations == 0 && numeric.violations == 0;
  r.measured = "max|d_p - exact| = " + sci(exact.worst) + ", max|d_p - numeric| = " +
               sci(numeric.worst);
  r.expected = "< 1e-12 and < 1e-6";
}

void lower_bound_criterion(const Context& ctx, CriterionResult& r) {
  int violations = 0, samples = 0;
  double worst_gap = INFINITY;  // min of (numeric - d_p)
  const int count = ctx.corpus(200);
  for (auto [m, n] : {std::pair{3, 2}, std::pair{3, 3}}) {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = ctx.seed(6, 1000 * n + i);
      const DensityMatrix rho = corpus_state(m, n, i, split_seed(s, 0));
      const double gap = gd_numeric(rho, {.seed = split_seed(s, 1)}).value - d_p(rho);
      ++samples;
      if (!(gap >= -1e-6)) ++violations;
      worst_gap = std::min(worst_gap, gap);
    }
  }
  r.samples = samples;
  r.passed = violations == 0;
  r.measured = "violations " + std::to_string(violations) + ", min(numeric - d_p) = " +
               sci(worst_gap);
  r.expected = "d_p <= numeric + 1e-6, 0 violations";
}

void zero_discord_criterion(const Context& ctx, CriterionResult& r) {
  int sound = 0, complete = 0;
  double worst_cq = 0.0, least_generic = INFINITY;
  const int count = ctx.corpus(100);
  for (int i = 0; i < count; ++i) {
    const int m = 2 + i % 3, n = 2 + (i / 3) % 3;
    const DensityMatrix cq = random_classical_quantum(m, n, {}, ctx.seed(7, i));
    const double dp = d_p(cq);
    worst_cq = std::max(worst_cq, dp);
    if (is_zero_discord(cq).zero_discord && dp < 1e-10) ++sound;
  }
  for (int i = 0; i < count; ++i) {
    const DensityMatrix g = random_mixed(3, 3, 9, ctx.seed(7, 10000 + i));
    const double dp = d_p(g);
    least_generic = std::min(least_generic, dp);
    if (!is_zero_discord(g).zero_discord && dp > 1e-6) ++complete;
  }
  r.samples = 2 * count;
  r.passed = sound == count && complete == count;
  r.measured = "cq ok " + std::to_string(sound) + "/" + std::to_string(count) + " (max d_p " +
               sci(worst_cq) + "), generic ok " + std::to_string(complete) + "/" +
               std::to_string(count) + " (min d_p " + sci(least_generic) + ")";
  r.expected = "all cq: verdict true, d_p < 1e-10; all generic: verdict false, d_p > 1e-6";
}

void three_form_criterion(const Context& ctx, CriterionResult& r) {
  Tally t;
  const int count = ctx.corpus(100);
  for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = ctx.seed(8, 1000 * m + i);
      const DensityMatrix rho = corpus_state(m, n, i, split_seed(s, 0));
      const MeasurementBasis b = MeasurementBasis::from_unitary(random_unitary(m, split_seed(s, 1)));
      const double f1 = gd_objective_measurement(rho, b);
      const double f2 = gd_objective_cmatrix(rho, b);
      const double f3 = gd_objective_simplex(rho, b);
      t.add(std::max({std::abs(f1 - f2), std::abs(f1 - f3), std::abs(f2 - f3)}), 1e-9);
    }
  }
  r.samples = t.samples;
  r.passed = t.violations == 0;
  r.measured = "max pairwise diff = " + sci(t.worst);
  r.expected = "< 1e-9";
}

void local_unitary_criterion(const Context& ctx, CriterionResult& r) {
  Tally t;
  const int count = ctx.corpus(100);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = ctx.seed(9, i);
    const DensityMatrix rho = corpus_state(3, 3, i, split_seed(s, 0));
    const DensityMatrix rot = apply_local_unitaries(rho, random_unitary(3, split_seed(s, 1)),
                                                    random_unitary(3, split_seed(s, 2)));
    t.add(std::abs(d_p(rho) - d_p(rot)), 1e-10);
  }
  r.samples = t.samples;
  r.passed = t.violations == 0;
  r.measured = "max|delta d_p| = " + sci(t.worst);
  r.expected = "< 1e-10";
}

void q_coincidence_criterion(const Context&, CriterionResult& r) {
  Tally t;
  auto check = [&t](const DensityMatrix& rho) {
    const BlochDecomposition d = decompose(rho);
    t.add(std::abs(zhou_q(d) - d_p(d)), 1e-10);
  };
  for (int m = 2; m <= 4; ++m) {
    for (int k = 0; k <= 20; ++k) check(werner(m, k == 20 ? 1.0 : -1.0 + 0.1 * k));
    for (int k = 0; k <= 10; ++k) check(isotropic(m, k == 10 ? 1.0 : 0.1 * k));
    check(max_entangled(m));
  }
  r.samples = t.samples;
  r.passed = t.violations == 0;
  r.measured = "max|Q - d_p| = " + sci(t.worst);
  r.expected = "< 1e-10";
}

void algebraic_criterion(const Context& ctx, CriterionResult& r) {
  Tally gens, simplex, proj, weights, bloch;
  for (int m = 2; m <= 6; ++m) {
    const GeneratorBasis b = ctx.basis(m);
    for (std::size_t i = 0; i < b.size(); ++i) {
      gens.add(std::abs(b[i].trace()), kEpsEq);
      for (std::size_t j = 0; j < b.size(); ++j)
        gens.add(std::abs(trace_of_product(b[i], b[j]) - Complex(i == j ? 2.0 : 0.0)), kEpsEq);
    }
    RMatrix gram = RMatrix::Zero(m - 1, m - 1);
    for (const RVector& nu : weight_vectors(m)) gram += nu * nu.transpose();
    weights.add(max_abs_diff(gram, RMatrix::Identity(m - 1, m - 1)), kEpsEq);
  }
  const int count = ctx.corpus(100);
  for (int m = 2; m <= 4; ++m) {
    const GeneratorBasis b = ctx.basis(m);
    for (int i = 0; i < count; ++i) {
      const Simplex s = projector_simplex(random_unitary(m, ctx.seed(11, 100 * m + i)), b);
      const double defect = simplex_defect(s);
      simplex.add(defect, kEpsEq);
      if (defect > kEpsEq) continue;
      const RMatrix p = projection_from_simplex(s).matrix;
      proj.add(std::max({(p * p - p).cwiseAbs().maxCoeff(), std::abs(p.trace() - (m - 1)),
                         numerical_rank_psd(p) == m - 1 ? 0.0 : 1.0}),
               kEpsEq);
    }
  }
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}}) {
    for (int i = 0; i < 10; ++i) {
      const DensityMatrix rho = random_mixed(m, n, 1 + i % (m * n), ctx.seed(11, 50000 + 100 * m * n + i));
      const GeneratorBasis ba = ctx.basis(m), bb = ctx.basis(n);
      const Reconstruction back = reconstruct(decompose(rho, ba, bb), ba, bb);
      bloch.add(max_abs_diff(back.matrix, rho.matrix()), kEpsEq);
    }
  }
  r.samples = gens.samples + simplex.samples + proj.samples + weights.samples + bloch.samples;
  r.passed = gens.violations + simplex.violations + proj.violations + weights.violations +
                 bloch.violations ==
             0 && proj.samples == simplex.samples;
  r.measured = "generators " + sci(gens.worst) + ", simplex " + sci(simplex.worst) +
               ", projector " + sci(proj.worst) + ", weights " + sci(weights.worst) +
               ", round trip " + sci(bloch.worst);
  r.expected = "all < 1e-10";
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*run)(const Context&, CriterionResult&);
};

constexpr Criterion kCriteria[] = {
    {1, "werner_closed_form", 5, werner_criterion},
    {2, "isotropic_closed_form", 5, isotropic_criterion},
    {3, "maximal_discord_states", 30, max_entangled_criterion},
    {4, "pure_state_formula", 120, pure_state_criterion},
    {5, "two_by_n_exactness", 180, two_by_n_criterion},
    {6, "lower_bound_ordering", 600, lower_bound_criterion},
    {7, "zero_discord_detection", 60, zero_discord_criterion},
    {8, "three_form_equality", 60, three_form_criterion},
    {9, "local_unitary_invariance", 30, local_unitary_criterion},
    {10, "q_equals_dp_without_local_bias", 5, q_coincidence_criterion},
    {11, "algebraic_substrate", 30, algebraic_criterion},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const Context ctx{options};
  std::vector<CriterionResult> out;
  for (const Criterion& c : kCriteria) {
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(ctx, r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.measured = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.limit_seconds) {
      r.passed = false;
      r.measured += " [over time budget]";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char time[64];
  std::snprintf(time, sizeof time, "%.2fs / %.0fs", r.seconds, r.limit_seconds);
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << "  n=" << r.samples
     << "  measured: " << r.measured << "  expected: " << r.expected << "  time: " << time;
  return os.str();
}

}  // namespace discord
