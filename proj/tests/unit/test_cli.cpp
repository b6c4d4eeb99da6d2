#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dtr/cli/app.hpp"
#include "dtr/cli/golden.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dtruled");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = dtr::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden_text() {
  std::ifstream in(DTR_TEST_GOLDEN);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

json row_for(const json& rows, int c2) {
  for (const auto& r : rows) {
    if (r["c2"] == c2) return r;
  }
  return json();
}

}  // namespace

TEST_CASE("table reproduces the rank 2 rational surface rows") {
  Run r = run({"table", "--g", "0", "--d", "0", "--r", "2", "--polarization", "suitable", "--tmax", "7"});
  REQUIRE(r.code == 0);
  json rows = json::parse(r.out);
  CHECK(row_for(rows, 2)["betti"] == json({1, 2, 3}));
  CHECK(row_for(rows, 2)["omega"] == -12);
  CHECK(row_for(rows, 7)["betti"] == json({1, 3, 10, 26, 65, 147, 318, 642, 1203, 2065, 3172, 4280, 4964}));
  CHECK(row_for(rows, 7)["omega"] == -33792);
  // one row per c2, increasing
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i]["c2"].get<int>() == rows[i - 1]["c2"].get<int>() + 1);
}

TEST_CASE("table with J_{6,5} at rank 3") {
  Run r = run({"table", "--g", "1", "--d", "0", "--r", "3", "--polarization", "6,5", "--tmax", "2"});
  REQUIRE(r.code == 0);
  json rows = json::parse(r.out);
  CHECK(row_for(rows, 1)["betti_prime"] == json({1, 2, 2, 2, 2, 2, 2}));
  CHECK(row_for(rows, 2)["betti_prime"] == json({1, 2, 4, 10, 19, 32, 52, 74, 89, 96, 100, 104, 106}));
}

TEST_CASE("rank one table starts with a point") {
  Run r = run({"table", "--r", "1", "--tmax", "2"});
  REQUIRE(r.code == 0);
  json rows = json::parse(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["c2"] == 0);
  CHECK(rows[0]["dim"] == 0);
  CHECK(rows[0]["betti"] == json({1}));
}

TEST_CASE("full Betti lists") {
  Run r = run({"table", "--r", "2", "--tmax", "2", "--full"});
  REQUIRE(r.code == 0);
  json row = row_for(json::parse(r.out), 2);
  CHECK(row["betti"] == json({1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1}));
}

TEST_CASE("json and csv carry the same numbers") {
  std::vector<std::string> base = {"table", "--g", "1", "--r", "2", "--polarization", "6,5", "--tmax", "3"};
  auto with = [&](const char* fmt) {
    auto a = base;
    a.push_back("--format");
    a.push_back(fmt);
    return run(a);
  };
  Run j = with("json");
  Run c = with("csv");
  REQUIRE(j.code == 0);
  REQUIRE(c.code == 0);
  json rows = json::parse(j.out);
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    REQUIRE(i < rows.size());
    const json& r = rows[i++];
    std::ostringstream expect;
    std::string bp;
    for (const auto& v : r["betti_prime"]) bp += (bp.empty() ? "" : " ") + std::to_string(v.get<long>());
    std::string b;
    for (const auto& v : r["betti"]) b += (b.empty() ? "" : " ") + std::to_string(v.get<long>());
    expect << r["g"] << ',' << r["d"] << ',' << r["r"] << ',' << r["beta"] << ',' << r["alpha"] << ',' << r["c2"]
           << ",\"6,5\"," << r["dim"] << ',' << b << ',' << bp << ',' << r["omega"] << ",ok";
    CHECK(line == expect.str());
  }
  CHECK(i == rows.size());
  Run m = with("markdown");
  CHECK(m.code == 0);
  CHECK(m.out.find("| 3 |") != std::string::npos);
}

TEST_CASE("output does not depend on the number of jobs") {
  Run a = run({"table", "--r", "3", "--tmax", "4", "--jobs", "1"});
  Run b = run({"table", "--r", "3", "--tmax", "4", "--jobs", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run va = run({"verify", "--jobs", "1"});
  Run vb = run({"verify", "--jobs", "3"});
  CHECK(va.out == vb.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"table", "--g", "1", "--polarization", "anticanonical"}).code == 2);
  CHECK(run({"table", "--r", "4"}).code == 2);
  CHECK(run({"table", "--tmax", "-1"}).code == 2);
  CHECK(run({"table", "--format", "xml"}).code == 2);
  CHECK(run({"table", "--polarization", "0,1"}).code == 2);
  CHECK(run({"table", "--d", "2", "--r", "3", "--polarization", "1,2", "--tmax", "5"}).code == 2);
  CHECK(run({"table", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify against the bundled tables") {
  Run r = run({"verify", "--data", DTR_TEST_GOLDEN});
  CHECK(r.code == 0);
  CHECK(r.out.find("all 14 tables match") != std::string::npos);
}

TEST_CASE("verify reports a perturbed cell") {
  std::string text = golden_text();
  const std::string from = "DT2 0 0 2 0 0 4 suitable b 1,3,10,24,51,82,103 -548";
  const std::string to = "DT2 0 0 2 0 0 4 suitable b 1,3,10,24,52,82,103 -548";
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  Run r = run({"verify", "--data", write_temp("dtr_perturbed.txt", text)});
  CHECK(r.code == 1);
  CHECK(r.out.find("table=DT2 c2=4 column=b_8 expected=52 actual=51") != std::string::npos);
}

TEST_CASE("verify reports a wrong omega") {
  Run r = run({"verify", "--data", write_temp("dtr_omega.txt", "X 0 0 2 0 0 2 suitable b 1,2,3 12\n")});
  CHECK(r.code == 1);
  CHECK(r.out.find("column=omega expected=12 actual=-12") != std::string::npos);
}

TEST_CASE("verify configuration errors") {
  CHECK(run({"verify", "--data", "/nonexistent/golden.txt"}).code == 2);
  CHECK(run({"verify", "--data", write_temp("dtr_bad.txt", "DT2 0 0 2\n")}).code == 2);
  CHECK(run({"verify", "--data", write_temp("dtr_empty.txt", "# nothing\n")}).code == 2);
  CHECK(run({"verify", "--data", write_temp("dtr_badpol.txt", "X 1 0 2 0 0 1 anticanonical b 1 .\n")}).code == 2);
}

TEST_CASE("golden parser") {
  std::istringstream in("# comment\nT 1 2 3 0 1 4 6,5 bp 1,2,3 .  # trailing\n\nU 0 0 2 0 0 2 suitable b 1,2,3 -12\n");
  auto recs = dtr::cli::parse_golden(in, "mem");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].table_id == "T");
  CHECK(recs[0].alpha == 1);
  CHECK(recs[0].prime);
  CHECK_FALSE(recs[0].omega);
  CHECK(recs[0].values == std::vector<std::int64_t>{1, 2, 3});
  CHECK(*recs[1].omega == -12);
  std::istringstream bad("T 1 2 3 0 1 4 6,5 bp 1,x,3 .\n");
  CHECK_THROWS(dtr::cli::parse_golden(bad, "mem"));
}

TEST_CASE("identity suite") {
  Run zero = run({"identity", "--tmax", "0"});
  CHECK(zero.code == 0);
  Run fault = run({"identity", "--tmax", "2", "--inject-fault", "mobius"});
  CHECK(fault.code == 1);
  CHECK(fault.out.find("FAIL") != std::string::npos);
  CHECK(run({"identity", "--inject-fault", "gravity"}).code == 2);
}
