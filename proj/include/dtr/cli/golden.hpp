#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dtr::cli {

struct GoldenRecord {
  std::string table_id;
  int g = 0;
  int d = 0;
  int r = 1;
  int beta = 0;
  int alpha = 0;
  int c2 = 0;
  std::string polarization;
  bool prime = false;  // values are b'_n rather than even b_n
  std::vector<std::int64_t> values;
  std::optional<std::int64_t> omega;
  int line = 0;
};

// whitespace separated records, '#' starts a comment; throws ConfigError
std::vector<GoldenRecord> parse_golden(std::istream& in, const std::string& source);
std::vector<GoldenRecord> load_golden(const std::string& path);

struct CellDiff {
  std::string table_id;
  int c2 = 0;
  std::string column;
  std::string expected;
  std::string actual;
};

struct TableCheck {
  std::string table_id;
  int rows = 0;
  std::vector<CellDiff> diffs;
  std::string error;  // set when the table could not be computed
  bool alarm = false;
};

// recompute one table (all records sharing a table_id) and compare cell by cell
TableCheck check_table(const std::vector<GoldenRecord>& records);

}  // namespace dtr::cli
