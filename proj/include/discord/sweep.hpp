#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "discord/measures.hpp"
#include "discord/state_zoo.hpp"

namespace discord {

/// One-parameter scan of a state family.
///
/// werner / isotropic sweep "x"; pure_schmidt sweeps "s1" with the remaining
/// weight 1 - s1 split evenly over the other m-1 Schmidt coefficients.
struct SweepSpec {
  Family family = Family::werner;
  int m = 2;
  int n = 0;  // pure_schmidt only; 0 means n = m
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
  std::vector<std::string> columns;  // empty: all columns
  OptimizerConfig optimizer;
  bool skip_dg = false;
};

struct SweepRow {
  double param = 0.0;
  double d_p = 0.0;
  std::optional<double> d_g;
  double q = 0.0;
  std::optional<double> analytic_d_g;
  std::optional<double> abs_err;  // |d_g - analytic|
};

std::string sweep_param_name(Family family);
std::vector<std::string> all_sweep_columns(Family family);

/// Throws InvalidInput / DomainError on an invalid spec.
void validate(const SweepSpec& spec);

/// Grid points evaluated in parallel; rows come back in grid order and match
/// run_sweep_serial exactly.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

/// Header row then one line per row; '.' decimal, 17 significant digits,
/// empty field for a value that does not apply.
void write_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// "%.17g" formatting shared by every CSV writer.
std::string format_double(double v);

}  // namespace discord
