#pragma once

// JSON formats.
//
// Matrix: {"m": int, "n": int, "data": [[re, im], ...]} with (mn)^2 pairs in
// row-major order. State spec: {"family": name, "m", "n", "x", "s", "p",
// "seed", "rank"}, unused keys optional. Doubles are written in shortest
// round-trip form, so output bytes are a function of the values only.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "discord/measures.hpp"
#include "discord/state_zoo.hpp"
#include "discord/sweep.hpp"

namespace discord {

nlohmann::json matrix_to_json(const CMatrix& rho, Dims dims);
nlohmann::json matrix_to_json(const DensityMatrix& rho);

/// Raw matrix and dims, no state validation. Throws InvalidInput on a
/// malformed document.
std::pair<CMatrix, Dims> raw_matrix_from_json(const nlohmann::json& doc);
/// Parses and validates. Throws InvalidInput / ValidationError.
DensityMatrix matrix_from_json(const nlohmann::json& doc);
DensityMatrix read_matrix_file(const std::filesystem::path& path);

nlohmann::json spec_to_json(const StateSpec& spec);
StateSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json read_json_file(const std::filesystem::path& path);

nlohmann::json report_to_json(const MeasureReport& report);

/// Sweep spec: {"family", "m", "n", "start", "stop", "steps", "columns",
/// "restarts", "seed", "skip_dg"}; family, start, stop and steps required.
SweepSpec sweep_spec_from_json(const nlohmann::json& doc);

/// Rows as objects keyed by the selected columns; null where a value does not
/// apply.
nlohmann::json sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace discord
