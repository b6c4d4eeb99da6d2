#include "dtr/cli/golden.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "dtr/cli/config.hpp"
#include "dtr/cli/report.hpp"
#include "dtr/errors.hpp"
#include "dtr/invariants/pipeline.hpp"

namespace dtr::cli {

namespace {

template <class T>
T parse_int(const std::string& s, const std::string& where) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError(where + ": expected an integer, got '" + s + "'");
  return v;
}

std::vector<std::int64_t> parse_list(const std::string& s, const std::string& where) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int<std::int64_t>(item, where));
  if (out.empty()) throw ConfigError(where + ": empty value list");
  return out;
}

}  // namespace

std::vector<GoldenRecord> parse_golden(std::istream& in, const std::string& source) {
  std::vector<GoldenRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> f;
    for (std::string w; ls >> w;) f.push_back(w);
    if (f.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    if (f.size() != 11) throw ConfigError(where + ": expected 11 fields, found " + std::to_string(f.size()));
    GoldenRecord rec;
    rec.table_id = f[0];
    rec.g = parse_int<int>(f[1], where);
    rec.d = parse_int<int>(f[2], where);
    rec.r = parse_int<int>(f[3], where);
    rec.beta = parse_int<int>(f[4], where);
    rec.alpha = parse_int<int>(f[5], where);
    rec.c2 = parse_int<int>(f[6], where);
    rec.polarization = f[7];
    if (f[8] != "b" && f[8] != "bp") throw ConfigError(where + ": kind must be b or bp");
    rec.prime = f[8] == "bp";
    rec.values = parse_list(f[9], where);
    if (f[10] != ".") rec.omega = parse_int<std::int64_t>(f[10], where);
    rec.line = lineno;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<GoldenRecord> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open golden data file " + path);
  auto recs = parse_golden(in, path);
  if (recs.empty()) throw ConfigError("golden data file " + path + " has no records");
  return recs;
}

TableCheck check_table(const std::vector<GoldenRecord>& records) {
  TableCheck tc;
  if (records.empty()) return tc;
  const GoldenRecord& head = records.front();
  tc.table_id = head.table_id;
  tc.rows = static_cast<int>(records.size());
  for (const auto& rec : records) {
    if (rec.g != head.g || rec.d != head.d || rec.r != head.r || rec.beta != head.beta || rec.alpha != head.alpha ||
        rec.polarization != head.polarization) {
      throw ConfigError("table " + head.table_id + " mixes surfaces or classes (line " + std::to_string(rec.line) + ")");
    }
  }
  RuledSurface S;
  Polarization J;
  try {
    S = RuledSurface(head.g, head.d);
    J = parse_polarization(head.polarization);
    validate_polarization(S, J);
  } catch (const InvalidInput& e) {
    throw ConfigError("table " + head.table_id + ": " + e.what());
  }
  const FirstChern c1{head.beta, head.alpha};
  const Rational offset = rdelta_offset(S, head.r, c1);
  int K = 0;
  for (const auto& rec : records) {
    Rational rd = Rational(rec.c2) - offset;
    if (rd < 0) throw ConfigError("table " + head.table_id + ": c2 = " + std::to_string(rec.c2) + " is below the Bogomolov bound");
    K = std::max(K, static_cast<int>(-to_int64(floor(-rd))));
  }

  std::map<std::int64_t, OmegaResult> computed;
  try {
    for (auto& res : compute_omega(S, head.r, c1, J, K)) computed.emplace(to_int64(res.gamma.c2), std::move(res));
  } catch (const InvariantViolation& e) {
    tc.error = e.what();
    tc.alarm = true;
    return tc;
  } catch (const std::exception& e) {
    tc.error = e.what();
    return tc;
  }

  auto diff = [&](int c2, std::string col, std::string exp, std::string act) {
    tc.diffs.push_back({head.table_id, c2, std::move(col), std::move(exp), std::move(act)});
  };
  for (const auto& rec : records) {
    auto it = computed.find(rec.c2);
    if (it == computed.end()) {
      diff(rec.c2, "row", "present", "absent");
      continue;
    }
    const OmegaResult& res = it->second;
    std::vector<std::int64_t> got;
    if (rec.prime) {
      auto bp = listed_betti_prime(res, head.g);
      if (bp) got = *bp;
    } else {
      got = listed_betti(res, head.g);
    }
    const std::string name = rec.prime ? "b'_" : "b_";
    const int step = !rec.prime && head.g == 0 ? 2 : 1;
    const std::size_t n = std::max(got.size(), rec.values.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::string e = i < rec.values.size() ? std::to_string(rec.values[i]) : "absent";
      std::string a = i < got.size() ? std::to_string(got[i]) : "absent";
      if (e != a) diff(rec.c2, name + std::to_string(static_cast<int>(i) * step), e, a);
    }
    if (rec.omega && *rec.omega != res.omega) diff(rec.c2, "omega", std::to_string(*rec.omega), std::to_string(res.omega));
  }
  return tc;
}

}  // namespace dtr::cli
