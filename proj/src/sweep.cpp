#include "discord/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>

#include "discord/errors.hpp"
#include "discord/random.hpp"

namespace discord {
namespace {

double grid_point(const SweepSpec& spec, int i) {
  if (i == spec.steps - 1) return spec.stop;
  return spec.start + (spec.stop - spec.start) * i / (spec.steps - 1.0);
}

std::vector<double> schmidt_for(const SweepSpec& spec, double s1) {
  std::vector<double> s(spec.m, (1.0 - s1) / (spec.m - 1));
  s[0] = s1;
  return s;
}

SweepRow evaluate(const SweepSpec& spec, int i) {
  SweepRow row;
  row.param = grid_point(spec, i);
  std::optional<DensityMatrix> rho;
  AnalyticReference ref;
  switch (spec.family) {
    case Family::werner:
      rho.emplace(werner(spec.m, row.param));
      ref = analytic_reference(AnalyticFamily::werner, spec.m, row.param);
      break;
    case Family::isotropic:
      rho.emplace(isotropic(spec.m, row.param));
      ref = analytic_reference(AnalyticFamily::isotropic, spec.m, row.param);
      break;
    case Family::pure_schmidt: {
      const std::vector<double> s = schmidt_for(spec, row.param);
      rho.emplace(pure_schmidt(s, spec.n == 0 ? spec.m : spec.n));
      ref = analytic_reference_pure(s);
      break;
    }
    default:
      throw InvalidInput("sweeps support werner, isotropic and pure_schmidt");
  }
  const BlochDecomposition d = decompose(*rho);
  row.d_p = d_p(d);
  row.q = zhou_q(d);
  row.analytic_d_g = ref.d_g;
  if (!spec.skip_dg) {
    if (spec.m == 2) {
      row.d_g = gd_exact_2xn(*rho);
    } else {
      OptimizerConfig cfg = spec.optimizer;
      cfg.seed = split_seed(spec.optimizer.seed, static_cast<std::uint64_t>(i));
      row.d_g = gd_numeric_serial(*rho, cfg).value;
    }
    row.abs_err = std::abs(*row.d_g - ref.d_g);
  }
  return row;
}

}  // namespace

std::string sweep_param_name(Family family) {
  return family == Family::pure_schmidt ? "s1" : "x";
}

std::vector<std::string> all_sweep_columns(Family family) {
  return {sweep_param_name(family), "d_p", "d_g", "q", "analytic_d_g", "abs_err"};
}

void validate(const SweepSpec& spec) {
  if (spec.steps < 2) throw InvalidInput("sweep needs steps >= 2");
  if (spec.m < 2) throw DimensionError("sweep needs m >= 2");
  double lo = 0.0;
  double hi = 1.0;
  switch (spec.family) {
    case Family::werner:
      lo = -1.0;
      break;
    case Family::isotropic:
    case Family::pure_schmidt:
      break;
    default:
      throw InvalidInput("sweeps support werner, isotropic and pure_schmidt");
  }
  if (spec.family == Family::pure_schmidt && spec.n != 0 && spec.n < spec.m) {
    throw DimensionError("pure_schmidt sweep needs n >= m");
  }
  for (double v : {spec.start, spec.stop}) {
    if (!(v >= lo && v <= hi)) {
      throw DomainError("sweep range must lie in [" + format_double(lo) + ", " +
                        format_double(hi) + "] for " + std::string(to_string(spec.family)));
    }
  }
  const std::vector<std::string> known = all_sweep_columns(spec.family);
  for (const std::string& c : spec.columns) {
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw InvalidInput("unknown sweep column '" + c + "'");
    }
  }
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
  validate(spec);
  std::vector<SweepRow> rows(spec.steps);
  for (int i = 0; i < spec.steps; ++i) rows[i] = evaluate(spec, i);
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<SweepRow> rows(spec.steps);
  std::vector<std::exception_ptr> errors(spec.steps);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < spec.steps; ++i) {
    try {
      rows[i] = evaluate(spec, i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  const std::vector<std::string> cols =
      spec.columns.empty() ? all_sweep_columns(spec.family) : spec.columns;
  const std::string param = sweep_param_name(spec.family);
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const SweepRow& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) os << ',';
      const std::string& name = cols[c];
      if (name == param) os << format_double(r.param);
      else if (name == "d_p") os << format_double(r.d_p);
      else if (name == "d_g") os << opt(r.d_g);
      else if (name == "q") os << format_double(r.q);
      else if (name == "analytic_d_g") os << opt(r.analytic_d_g);
      else if (name == "abs_err") os << opt(r.abs_err);
    }
    os << '\n';
  }
}

}  // namespace discord
