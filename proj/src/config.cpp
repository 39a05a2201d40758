#include "gasket/config.hpp"

#include "json.hpp"

namespace gasket {

void RunConfig::validate() const {
  if (level < 0 || level > 12) throw config_error("level outside [0, 12]");
  if (refine < 0 || refine > kMaxRefine)
    throw config_error("refine outside [0, 22]");
  if (!(cutoff > 0.0)) throw config_error("cutoff must be positive");
  if (format != "json" && format != "csv" && format != "svg")
    throw config_error("format must be json, csv or svg");
  if (level_lo < 0 || level_hi > 12 || level_lo > level_hi)
    throw config_error("levels range must satisfy 0 <= a <= b <= 12");
  if (edge_budget == 0 || spectrum_budget == 0)
    throw config_error("budgets must be positive");
}

std::string RunConfig::to_json_text() const {
  nlohmann::json j;
  j["geometry"] = to_string(geometry);
  j["level"] = level;
  j["refine"] = refine;
  j["cutoff"] = cutoff;
  j["kind"] = to_string(kind);
  j["format"] = format;
  j["cache_dir"] = cache_dir;
  j["seed"] = seed;
  j["levels"] = {level_lo, level_hi};
  j["edge_budget"] = edge_budget;
  j["spectrum_budget"] = spectrum_budget;
  return j.dump(1);
}

RunConfig RunConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("config parse error: ") + e.what());
  }
  RunConfig c;
  try {
    if (j.contains("geometry") &&
        !geometry_from_string(j["geometry"].get<std::string>(), c.geometry))
      throw config_error("unknown geometry");
    if (j.contains("kind") &&
        !triple_kind_from_string(j["kind"].get<std::string>(), c.kind))
      throw config_error("unknown triple kind");
    c.level = j.value("level", c.level);
    c.refine = j.value("refine", c.refine);
    c.cutoff = j.value("cutoff", c.cutoff);
    c.format = j.value("format", c.format);
    c.cache_dir = j.value("cache_dir", c.cache_dir);
    c.seed = j.value("seed", c.seed);
    if (j.contains("levels")) {
      c.level_lo = j["levels"].at(0).get<int>();
      c.level_hi = j["levels"].at(1).get<int>();
    }
    c.edge_budget = j.value("edge_budget", c.edge_budget);
    c.spectrum_budget = j.value("spectrum_budget", c.spectrum_budget);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("config field error: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace gasket
