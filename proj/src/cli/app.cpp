#include "dtr/cli/app.hpp"

#include <atomic>
#include <map>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "dtr/cli/golden.hpp"
#include "dtr/cli/identity.hpp"
#include "dtr/cli/report.hpp"
#include "dtr/errors.hpp"
#include "dtr/invariants/pipeline.hpp"

namespace dtr::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

MobiusFn mobius_for(const RunConfig& cfg) {
  if (!cfg.inject_fault) return mobius;
  if (*cfg.inject_fault == "mobius") return [](int n) { return n == 2 ? 1 : mobius(n); };
  throw ConfigError("unknown fault '" + *cfg.inject_fault + "'");
}

}  // namespace

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<ReportRow> rows;
  try {
    Polarization J = validated_polarization(cfg);
    MobiusFn mu = mobius_for(cfg);
    RuledSurface S(cfg.g, cfg.d);
    for (const auto& res : compute_omega(S, cfg.r, {cfg.beta, cfg.alpha}, J, cfg.tmax, mu)) rows.push_back(make_row(cfg, res));
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "alarm: " << e.what() << '\n';
    return kFail;
  }
  write_rows(out, rows, cfg.format);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<GoldenRecord>> tables;
  try {
    if (cfg.jobs < 1) throw ConfigError("--jobs must be at least 1");
    for (auto& rec : load_golden(golden_path(cfg))) {
      if (!tables.count(rec.table_id)) order.push_back(rec.table_id);
      tables[rec.table_id].push_back(std::move(rec));
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::vector<TableCheck> checks(order.size());
  std::vector<std::string> config_errors(order.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < order.size();) {
      try {
        checks[i] = check_table(tables[order[i]]);
      } catch (const ConfigError& e) {
        config_errors[i] = e.what();
      }
    }
  };
  const int nthreads = std::min<int>(cfg.jobs, static_cast<int>(order.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool usage = false;
  int failed = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!config_errors[i].empty()) {
      err << "error: " << config_errors[i] << '\n';
      usage = true;
      continue;
    }
    const TableCheck& tc = checks[i];
    if (!tc.error.empty()) {
      ++failed;
      out << tc.table_id << ": " << (tc.alarm ? "ALARM " : "ERROR ") << tc.error << '\n';
    } else if (!tc.diffs.empty()) {
      ++failed;
      out << tc.table_id << ": MISMATCH (" << tc.diffs.size() << " cells)\n";
      for (const auto& d : tc.diffs) {
        out << "  table=" << d.table_id << " c2=" << d.c2 << " column=" << d.column << " expected=" << d.expected
            << " actual=" << d.actual << '\n';
      }
    } else {
      out << tc.table_id << ": ok (" << tc.rows << " rows)\n";
    }
  }
  if (usage) return kUsage;
  out << (failed == 0 ? "all " + std::to_string(order.size()) + " tables match\n"
                      : std::to_string(failed) + " of " + std::to_string(order.size()) + " tables failed\n");
  return failed == 0 ? kOk : kFail;
}

int cmd_identity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  PropertyOptions opt;
  try {
    if (cfg.tmax < 0) throw ConfigError("--tmax must be non-negative");
    if (cfg.r < 1 || cfg.r > 3) throw ConfigError("rank must be 1, 2 or 3");
    opt.order = cfg.tmax;
    opt.max_rank = cfg.r;
    opt.mu = mobius_for(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  for (const auto& r : run_property_suite(opt, true)) {
    if (!r.passed) {
      out << "FAIL " << r.name << ": " << r.detail << '\n';
      return kFail;
    }
    out << "ok   " << r.name << " (" << r.cases << " cases)\n";
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers and DT invariants of moduli of sheaves on ruled surfaces"};
  app.require_subcommand(1);

  RunConfig table_cfg;
  table_cfg.command = "table";
  std::string table_format = "json";
  auto* table = app.add_subcommand("table", "compute Omega and Betti numbers for one class, one row per c2");
  table->add_option("--g", table_cfg.g, "genus of the base curve")->capture_default_str();
  table->add_option("--d", table_cfg.d, "degree d of Sigma_{g,d}")->capture_default_str();
  table->add_option("--r", table_cfg.r, "rank (1..3)")->capture_default_str();
  table->add_option("--beta", table_cfg.beta, "coefficient of C in c1")->capture_default_str();
  table->add_option("--alpha", table_cfg.alpha, "c1 = beta C - alpha f")->capture_default_str();
  table->add_option("--polarization", table_cfg.polarization, "boundary, suitable, anticanonical or m,n")
      ->capture_default_str();
  table->add_option("--tmax", table_cfg.tmax, "truncation order K in r Delta")->capture_default_str();
  table->add_option("--format", table_format, "json, csv or markdown")->capture_default_str();
  table->add_option("--jobs", table_cfg.jobs, "worker threads")->capture_default_str();
  table->add_flag("--full", table_cfg.full, "emit Betti numbers in all degrees");
  table->add_option("--inject-fault", table_cfg.inject_fault)->group("");

  RunConfig verify_cfg;
  verify_cfg.command = "verify";
  auto* verify = app.add_subcommand("verify", "recompute the golden tables and compare cell by cell");
  verify->add_option("--data", verify_cfg.data, "golden data file (default: DTR_GOLDEN or the bundled file)");
  verify->add_option("--jobs", verify_cfg.jobs, "tables checked in parallel")->capture_default_str();

  RunConfig identity_cfg;
  identity_cfg.command = "identity";
  identity_cfg.r = 3;
  auto* identity = app.add_subcommand("identity", "run the algebraic and structural property suite");
  identity->add_option("--tmax", identity_cfg.tmax, "truncation order")->capture_default_str();
  identity->add_option("--r", identity_cfg.r, "largest rank exercised")->capture_default_str();
  identity->add_option("--inject-fault", identity_cfg.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table) {
      table_cfg.format = parse_format(table_format);
      return cmd_table(table_cfg, out, err);
    }
    if (*verify) return cmd_verify(verify_cfg, out, err);
    return cmd_identity(identity_cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace dtr::cli
