#include "dtr/cli/config.hpp"

#include <cstdlib>

#include "dtr/errors.hpp"

#ifndef DTR_GOLDEN_DEFAULT
#define DTR_GOLDEN_DEFAULT "data/golden_tables.txt"
#endif

namespace dtr::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  throw ConfigError("unknown format '" + s + "' (expected json, csv or markdown)");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Markdown: return "markdown";
  }
  return "json";
}

Polarization validated_polarization(const RunConfig& cfg) {
  if (cfg.r < 1 || cfg.r > 3) throw ConfigError("rank must be 1, 2 or 3");
  if (cfg.tmax < 0) throw ConfigError("--tmax must be non-negative");
  if (cfg.g < 0) throw ConfigError("genus must be non-negative");
  if (cfg.jobs < 1) throw ConfigError("--jobs must be at least 1");
  try {
    Polarization J = parse_polarization(cfg.polarization);
    validate_polarization(RuledSurface(cfg.g, cfg.d), J);
    return J;
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
}

std::string golden_path(const RunConfig& cfg) {
  if (cfg.data) return *cfg.data;
  if (const char* env = std::getenv("DTR_GOLDEN"); env && *env) return env;
  return DTR_GOLDEN_DEFAULT;
}

}  // namespace dtr::cli
