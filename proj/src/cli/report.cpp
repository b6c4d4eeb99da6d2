#include "dtr/cli/report.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

namespace dtr::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Mismatch: return "mismatch";
    case Status::Alarm: return "alarm";
  }
  return "alarm";
}

std::vector<std::int64_t> listed_betti(const OmegaResult& res, int g) {
  std::vector<std::int64_t> out;
  if (res.betti.empty()) return out;
  for (int n = 0; n <= res.dim; ++n) {
    if (g == 0 && n % 2 == 1) continue;
    out.push_back(res.betti[static_cast<std::size_t>(n)]);
  }
  return out;
}

std::optional<std::vector<std::int64_t>> listed_betti_prime(const OmegaResult& res, int g) {
  if (!res.betti_prime) return std::nullopt;
  const auto& bp = *res.betti_prime;
  return std::vector<std::int64_t>(bp.begin(), bp.begin() + (res.dim - g + 1));
}

ReportRow make_row(const RunConfig& cfg, const OmegaResult& res) {
  ReportRow row;
  row.g = cfg.g;
  row.d = cfg.d;
  row.r = cfg.r;
  row.beta = cfg.beta;
  row.alpha = cfg.alpha;
  row.c2 = to_int64(res.gamma.c2);
  row.polarization = cfg.polarization;
  row.dim = res.dim;
  row.omega = res.omega;
  if (cfg.full) {
    row.betti = res.betti;
    row.betti_prime = res.betti_prime;
  } else {
    row.betti = listed_betti(res, cfg.g);
    row.betti_prime = listed_betti_prime(res, cfg.g);
  }
  return row;
}

namespace {

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

// "6,5" needs quoting in csv
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_json(std::ostream& os, const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["g"] = r.g;
    j["d"] = r.d;
    j["r"] = r.r;
    j["beta"] = r.beta;
    j["alpha"] = r.alpha;
    j["c2"] = r.c2;
    j["polarization"] = r.polarization;
    j["dim"] = r.dim;
    j["betti"] = r.betti;
    j["betti_prime"] = r.betti_prime ? nlohmann::ordered_json(*r.betti_prime) : nlohmann::ordered_json(nullptr);
    j["omega"] = r.omega;
    j["status"] = to_string(r.status);
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "g,d,r,beta,alpha,c2,polarization,dim,betti,betti_prime,omega,status\n";
  for (const auto& r : rows) {
    os << r.g << ',' << r.d << ',' << r.r << ',' << r.beta << ',' << r.alpha << ',' << r.c2 << ','
       << csv_field(r.polarization) << ',' << r.dim << ',' << join(r.betti, " ") << ','
       << (r.betti_prime ? join(*r.betti_prime, " ") : "") << ',' << r.omega << ',' << to_string(r.status) << '\n';
  }
}

void write_markdown(std::ostream& os, const std::vector<ReportRow>& rows) {
  const bool prime = !rows.empty() && rows.front().g >= 1;
  os << "| c2 | dim | " << (prime ? "b'" : "b") << " | omega | status |\n";
  os << "|---:|---:|:---|---:|:---|\n";
  for (const auto& r : rows) {
    const auto& v = prime && r.betti_prime ? *r.betti_prime : r.betti;
    os << "| " << r.c2 << " | " << r.dim << " | " << join(v, ", ") << " | " << r.omega << " | "
       << to_string(r.status) << " |\n";
  }
}

}  // namespace

void write_rows(std::ostream& os, const std::vector<ReportRow>& rows, Format f) {
  switch (f) {
    case Format::Json: write_json(os, rows); break;
    case Format::Csv: write_csv(os, rows); break;
    case Format::Markdown: write_markdown(os, rows); break;
  }
}

}  // namespace dtr::cli
