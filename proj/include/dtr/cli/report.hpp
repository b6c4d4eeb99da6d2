#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dtr/cli/config.hpp"
#include "dtr/invariants/omega.hpp"

namespace dtr::cli {

enum class Status { Ok, Mismatch, Alarm };
std::string to_string(Status s);

struct ReportRow {
  int g = 0;
  int d = 0;
  int r = 1;
  int beta = 0;
  int alpha = 0;
  std::int64_t c2 = 0;
  std::string polarization;
  int dim = 0;
  std::vector<std::int64_t> betti;
  std::optional<std::vector<std::int64_t>> betti_prime;
  std::int64_t omega = 0;
  Status status = Status::Ok;
};

// Betti numbers in the shape the tables print them: b_n for n <= dim (even n
// only on rational surfaces) and b'_n for n <= dim - g.
std::vector<std::int64_t> listed_betti(const OmegaResult& res, int g);
std::optional<std::vector<std::int64_t>> listed_betti_prime(const OmegaResult& res, int g);

ReportRow make_row(const RunConfig& cfg, const OmegaResult& res);

void write_rows(std::ostream& os, const std::vector<ReportRow>& rows, Format f);

}  // namespace dtr::cli
