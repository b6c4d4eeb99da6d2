#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dtr/geometry/surface.hpp"

namespace dtr::cli {

enum class Format { Json, Csv, Markdown };

// Raised for anything the user can fix by changing the command line or the
// data file; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int g = 0;
  int d = 0;
  int r = 2;
  int beta = 0;
  int alpha = 0;
  std::string polarization = "suitable";
  int tmax = 5;
  Format format = Format::Json;
  int jobs = 1;
  bool full = false;
  std::optional<std::string> data;
  std::optional<std::string> inject_fault;
};

Format parse_format(const std::string& s);
std::string to_string(Format f);

// checks the invariants of a table request and returns the parsed polarization
Polarization validated_polarization(const RunConfig& cfg);

// --data, then DTR_GOLDEN, then the path baked in at build time
std::string golden_path(const RunConfig& cfg);

}  // namespace dtr::cli
