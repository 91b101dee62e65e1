#include "discord/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "discord/errors.hpp"

namespace discord {
namespace {

using nlohmann::json;

std::vector<double> to_std(const RVector& v) { return {v.data(), v.data() + v.size()}; }

template <typename T>
T get_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InvalidInput(std::string("parse: missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("parse: field '") + key + "': " + e.what());
  }
}

}  // namespace

json matrix_to_json(const CMatrix& rho, Dims dims) {
  json data = json::array();
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      data.push_back(json::array({rho(i, j).real(), rho(i, j).imag()}));
  json out;
  out["m"] = dims.m;
  out["n"] = dims.n;
  out["data"] = std::move(data);
  return out;
}

json matrix_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix(), rho.dims()); }

std::pair<CMatrix, Dims> raw_matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("parse: matrix document must be a JSON object");
  const Dims dims{get_field<int>(doc, "m"), get_field<int>(doc, "n")};
  if (dims.m < 1 || dims.n < 1) throw InvalidInput("parse: m and n must be positive");
  if (!doc.contains("data") || !doc["data"].is_array()) {
    throw InvalidInput("parse: 'data' must be an array of [re, im] pairs");
  }
  const json& data = doc["data"];
  const std::size_t d = static_cast<std::size_t>(dims.total());
  if (data.size() != d * d) {
    std::ostringstream os;
    os << "parse: 'data' has " << data.size() << " entries, expected (mn)^2 = " << d * d;
    throw InvalidInput(os.str());
  }
  CMatrix rho(d, d);
  for (std::size_t k = 0; k < data.size(); ++k) {
    const json& e = data[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InvalidInput("parse: data entry " + std::to_string(k) + " is not an [re, im] pair");
    }
    rho(k / d, k % d) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return {std::move(rho), dims};
}

DensityMatrix matrix_from_json(const json& doc) {
  auto [rho, dims] = raw_matrix_from_json(doc);
  return DensityMatrix::from_matrix(rho, dims);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("parse: cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("parse: '" + path.string() + "': " + e.what());
  }
}

DensityMatrix read_matrix_file(const std::filesystem::path& path) {
  return matrix_from_json(read_json_file(path));
}

json spec_to_json(const StateSpec& spec) {
  json out;
  out["family"] = std::string(to_string(spec.family));
  out["m"] = spec.m;
  out["n"] = spec.n;
  out["x"] = spec.x;
  out["s"] = spec.s;
  out["p"] = spec.p;
  out["seed"] = spec.seed;
  out["rank"] = spec.rank;
  return out;
}

StateSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("parse: state spec must be a JSON object");
  StateSpec spec;
  spec.family = family_from_string(get_field<std::string>(doc, "family"));
  if (doc.contains("m")) spec.m = get_field<int>(doc, "m");
  spec.n = doc.contains("n") ? get_field<int>(doc, "n") : spec.m;
  if (doc.contains("x")) spec.x = get_field<double>(doc, "x");
  if (doc.contains("s")) spec.s = get_field<std::vector<double>>(doc, "s");
  if (doc.contains("p")) spec.p = get_field<std::vector<double>>(doc, "p");
  if (doc.contains("seed")) spec.seed = get_field<std::uint64_t>(doc, "seed");
  if (doc.contains("rank")) spec.rank = get_field<int>(doc, "rank");
  if (spec.family == Family::pure_schmidt && !spec.s.empty()) {
    spec.m = static_cast<int>(spec.s.size());
    if (!doc.contains("n")) spec.n = spec.m;
  }
  return spec;
}

json report_to_json(const MeasureReport& r) {
  json zd;
  zd["verdict"] = r.zero_discord.zero_discord;
  zd["rank_left_gram"] = r.zero_discord.rank_left_gram;
  zd["rank_tt"] = r.zero_discord.rank_tt;
  zd["x_in_range"] = r.zero_discord.x_in_range;
  zd["range_residual"] = r.zero_discord.range_residual;
  zd["split_test"] = r.zero_discord.split_test;
  zd["consistent"] = r.zero_discord.consistent;

  json out;
  out["m"] = r.dims.m;
  out["n"] = r.dims.n;
  out["d_p"] = r.d_p;
  out["i_p"] = r.i_p;
  out["c_p"] = r.c_p;
  out["q"] = r.q;
  if (r.d_g_kind == DgKind::skipped) {
    out["d_g"] = nullptr;
  } else {
    out["d_g"] = r.d_g;
  }
  out["d_g_kind"] = std::string(to_string(r.d_g_kind));
  out["zero_discord"] = std::move(zd);
  out["tau_spectrum"] = to_std(r.tau_spectrum);
  out["eta_spectrum"] = to_std(r.eta_spectrum);
  out["lambda_spectrum"] = to_std(r.lambda_spectrum);
  json prov;
  prov["restarts"] = r.restarts;
  prov["seed"] = r.seed;
  prov["converged"] = r.converged;
  out["optimizer"] = std::move(prov);
  return out;
}

SweepSpec sweep_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("parse: sweep spec must be a JSON object");
  SweepSpec spec;
  spec.family = family_from_string(get_field<std::string>(doc, "family"));
  if (doc.contains("m")) spec.m = get_field<int>(doc, "m");
  if (doc.contains("n")) spec.n = get_field<int>(doc, "n");
  spec.start = get_field<double>(doc, "start");
  spec.stop = get_field<double>(doc, "stop");
  spec.steps = get_field<int>(doc, "steps");
  if (doc.contains("columns")) spec.columns = get_field<std::vector<std::string>>(doc, "columns");
  if (doc.contains("restarts")) spec.optimizer.restarts = get_field<int>(doc, "restarts");
  if (doc.contains("seed")) spec.optimizer.seed = get_field<std::uint64_t>(doc, "seed");
  if (doc.contains("skip_dg")) spec.skip_dg = get_field<bool>(doc, "skip_dg");
  return spec;
}

json sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  const std::vector<std::string> cols =
      spec.columns.empty() ? all_sweep_columns(spec.family) : spec.columns;
  const std::string param = sweep_param_name(spec.family);
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json out = json::array();
  for (const SweepRow& r : rows) {
    json row = json::object();
    for (const std::string& name : cols) {
      if (name == param) row[name] = r.param;
      else if (name == "d_p") row[name] = r.d_p;
      else if (name == "d_g") row[name] = opt(r.d_g);
      else if (name == "q") row[name] = r.q;
      else if (name == "analytic_d_g") row[name] = opt(r.analytic_d_g);
      else if (name == "abs_err") row[name] = opt(r.abs_err);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace discord
