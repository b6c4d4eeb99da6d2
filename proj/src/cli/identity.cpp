#include "dtr/cli/identity.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "dtr/errors.hpp"
#include "dtr/invariants/htoh.hpp"
#include "dtr/invariants/pipeline.hpp"
#include "dtr/invariants/wallcross.hpp"

namespace dtr::cli {

namespace {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LaurentPoly laurent() {
    int low = uniform(-2, 1);
    std::vector<Rational> c;
    for (int i = 0, n = uniform(1, 3); i < n; ++i) c.push_back(make_rational(uniform(-3, 3), uniform(1, 2)));
    return LaurentPoly::from_coeffs(low, std::move(c));
  }

  RatFunc ratfunc() {
    RatFunc f(laurent());
    if (uniform(0, 3) == 0) f *= RatFunc::inv_one_minus(2 * uniform(1, 2));
    return f;
  }

  // a few nonzero terms in rank >= 1, no constant term
  GradedSeries graded(int rank_bound, int order) {
    GradedSeries F(rank_bound, order);
    for (int k = 0, n = uniform(1, 3); k < n; ++k) {
      GradedKey key{uniform(1, rank_bound), uniform(-1, 1), uniform(-1, 1)};
      TSeries s(order, 1);
      s[uniform(0, order)] = ratfunc();
      F.add_to(key, s);
    }
    return F;
  }

 private:
  std::mt19937 rng_;
};

PropertyResult start(const char* name) {
  PropertyResult r;
  r.name = name;
  return r;
}

void fail(PropertyResult& r, const std::string& what) {
  if (!r.passed) return;
  r.passed = false;
  r.detail = what;
}

int rank_bound(const PropertyOptions& o) { return std::clamp(o.max_rank, 1, 3); }

bool same_series(const TSeries& a, const TSeries& b) {
  if (a.order() != b.order()) return false;
  int q = std::lcm(a.grid(), b.grid());
  return a.regrid(q) == b.regrid(q);
}

struct Case {
  int g, d;
  Polarization J;
};

std::vector<Case> pipeline_cases() {
  return {{0, 0, Suitable{}},     {0, 1, Suitable{}},        {1, 0, Suitable{}},
          {2, 0, Suitable{}},     {1, 0, Mixed{6, 5}},       {1, 2, Mixed{6, 5}},
          {0, 0, AntiCanonical{}}, {0, 1, AntiCanonical{}}, {0, 2, Mixed{2, 3}}};
}

}  // namespace

PropertyResult check_exp_log_roundtrip(const PropertyOptions& o) {
  PropertyResult res = start("exp/log round trip");
  Gen gen(o.seed);
  for (int i = 0; i < o.cases && res.passed; ++i) {
    GradedSeries F = gen.graded(rank_bound(o), o.order);
    ++res.cases;
    if (graded_log(graded_exp(F)) != F) fail(res, "log(exp F) != F for F = " + F.to_string());
    if (plethystic_log(plethystic_exp(F), o.mu) != F) fail(res, "Log(Exp F) != F for F = " + F.to_string());
  }
  return res;
}

PropertyResult check_adams_composition(const PropertyOptions& o) {
  PropertyResult res = start("Adams composition");
  Gen gen(o.seed + 1);
  for (int i = 0; i < o.cases && res.passed; ++i) {
    GradedSeries F = gen.graded(rank_bound(o), o.order);
    int m = gen.uniform(1, 3), n = gen.uniform(1, 3);
    ++res.cases;
    if (F.adams(m).adams(n) != F.adams(m * n)) {
      fail(res, "psi_" + std::to_string(m) + " psi_" + std::to_string(n) + " != psi_" + std::to_string(m * n));
    }
    TSeries s(o.order, 2);
    s[gen.uniform(0, 2 * o.order)] = gen.ratfunc();
    if (s.adams(m).adams(n) != s.adams(m * n)) fail(res, "Adams composition fails on a t-series");
  }
  return res;
}

PropertyResult check_exp_multiplicative(const PropertyOptions& o) {
  PropertyResult res = start("Exp additive to multiplicative");
  Gen gen(o.seed + 2);
  for (int i = 0; i < o.cases && res.passed; ++i) {
    GradedSeries F = gen.graded(rank_bound(o), o.order);
    GradedSeries G = gen.graded(rank_bound(o), o.order);
    ++res.cases;
    if (plethystic_exp(F + G) != plethystic_exp(F) * plethystic_exp(G)) fail(res, "Exp(F + G) != Exp(F) Exp(G)");
  }
  return res;
}

PropertyResult check_mobius_roundtrip(const PropertyOptions& o) {
  PropertyResult res = start("Moebius round trip");
  Gen gen(o.seed + 3);
  const int R = std::max(2, rank_bound(o));
  for (int i = 0; i < o.cases && res.passed; ++i) {
    GradedSeries bar = gen.graded(R, o.order);
    // make sure a divisible class is present
    TSeries s(o.order, 1);
    s[0] = gen.ratfunc() + RatFunc(1);
    bar.add_to(GradedKey{1, 0, 0}, s);
    ++res.cases;
    if (omega_bar_from_omega(omega_from_omega_bar(bar, o.mu)) != bar) fail(res, "Omega-bar -> Omega -> Omega-bar changed the series");
  }
  return res;
}

PropertyResult check_rdelta_division(const PropertyOptions& o) {
  PropertyResult res = start("(r/m) Delta(gamma/m) = r Delta(gamma)/m");
  Gen gen(o.seed + 4);
  for (int i = 0; i < o.cases && res.passed; ++i) {
    RuledSurface S(gen.uniform(0, 2), gen.uniform(0, 3));
    int m = gen.uniform(1, 3);
    ChernCharacter base = ChernCharacter::from_gamma2(S, gen.uniform(1, 3), gen.uniform(-3, 3), gen.uniform(-3, 3),
                                                      make_rational(gen.uniform(-12, 12), 2));
    ChernCharacter gamma = ChernCharacter::from_gamma2(S, m * base.r, m * base.beta, m * base.alpha, m * base.gamma2(S));
    ChernCharacter part = divide(S, gamma, m);
    ++res.cases;
    Rational lhs = part.r * discriminant(S, part);
    Rational rhs = gamma.r * discriminant(S, gamma) / m;
    if (lhs != rhs) fail(res, "mismatch for " + gamma.to_string() + " and m = " + std::to_string(m));
  }
  return res;
}

PropertyResult check_htoh_two_routes(const PropertyOptions& o) {
  PropertyResult res = start("H to h two-route equality");
  for (int g = 0; g <= 2 && res.passed; ++g) {
    for (const Polarization& J : {Polarization(Suitable{}), Polarization(Mixed{6, 5})}) {
      RuledSurface S(g, g == 0 ? 1 : 0);
      BoundaryData B(g, rank_bound(o), o.order);
      for (int r = 1; r <= rank_bound(o); ++r) {
        HByRank H;
        for (int ri = 1; ri <= r; ++ri) H.emplace(ri, HSeries{S, ri, {0, 0}, J, compute_H(S, ri, {0, 0}, J, B)});
        ++res.cases;
        if (h_decomposition(S, r, {0, 0}, o.order, H) != h_log(S, r, {0, 0}, o.order, H)) {
          fail(res, "routes differ for g = " + std::to_string(g) + ", r = " + std::to_string(r) + ", J = " + to_string(J));
        }
      }
    }
  }
  return res;
}

PropertyResult check_d_independence(const PropertyOptions& o) {
  PropertyResult res = start("d-independence at suitable polarization");
  for (int r = 1; r <= rank_bound(o) && res.passed; ++r) {
    std::vector<std::vector<OmegaResult>> runs;
    for (int d = 0; d <= 3; ++d) runs.push_back(compute_omega(RuledSurface(0, d), r, {0, 0}, Suitable{}, o.order, o.mu));
    ++res.cases;
    for (int d = 1; d <= 3; ++d) {
      const auto& a = runs[0];
      const auto& b = runs[static_cast<std::size_t>(d)];
      bool same = a.size() == b.size();
      for (std::size_t i = 0; same && i < a.size(); ++i) {
        same = a[i].gamma.c2 == b[i].gamma.c2 && a[i].dim == b[i].dim && a[i].betti == b[i].betti && a[i].omega == b[i].omega;
      }
      if (!same) fail(res, "Sigma_{0,0} and Sigma_{0," + std::to_string(d) + "} differ at rank " + std::to_string(r));
    }
  }
  return res;
}

PropertyResult check_palindromic(const PropertyOptions& o) {
  PropertyResult res = start("palindromic Betti numbers");
  for (const auto& c : pipeline_cases()) {
    for (int r = 1; r <= rank_bound(o) && res.passed; ++r) {
      RuledSurface S(c.g, c.d);
      std::vector<OmegaResult> rows;
      try {
        rows = compute_omega(S, r, {0, 0}, c.J, o.order, o.mu);
      } catch (const std::exception& e) {
        fail(res, std::string(e.what()));
        break;
      }
      for (const auto& row : rows) {
        ++res.cases;
        const auto& b = row.betti;
        if (b.empty()) continue;
        if (!std::equal(b.begin(), b.end(), b.rbegin()) || b.front() != 1) {
          fail(res, "Betti numbers of " + row.gamma.to_string() + " are not palindromic");
        }
      }
    }
  }
  return res;
}

PropertyResult check_wallcross_oracle(const PropertyOptions& o) {
  PropertyResult res = start("Joyce enumeration vs resummed wall-crossing");
  const int K = std::min(o.order, 4);
  struct WC {
    int g, d, r;
    FirstChern c1;
    int m, n;
  };
  std::vector<WC> cases = {{0, 1, 2, {0, 0}, 1, 2}, {1, 0, 2, {0, 0}, 6, 5}, {0, 2, 2, {1, 0}, 1, 3},
                           {1, 1, 2, {1, 1}, 2, 3}, {0, 1, 3, {0, 0}, 1, 2}, {1, 0, 3, {0, 0}, 6, 5},
                           {0, 2, 3, {1, 2}, 1, 3}};
  for (const auto& c : cases) {
    if (c.r > rank_bound(o) || !res.passed) continue;
    RuledSurface S(c.g, c.d);
    ++res.cases;
    TSeries closed = c.r == 2 ? wallcross_H2(S, c.c1, c.m, c.n, K).series : wallcross_H3(S, c.c1, c.m, c.n, K).series;
    TSeries oracle = joyce_wallcross_general(S, c.r, c.c1, Suitable{}, Mixed{c.m, c.n}, K);
    if (!same_series(closed, oracle)) {
      std::ostringstream os;
      os << "r = " << c.r << ", Sigma_{" << c.g << "," << c.d << "}, J_{" << c.m << "," << c.n << "}";
      fail(res, os.str());
    }
  }
  return res;
}

std::vector<PropertyResult> run_property_suite(const PropertyOptions& o, bool stop_at_failure) {
  using Check = PropertyResult (*)(const PropertyOptions&);
  const std::pair<const char*, Check> checks[] = {
      {"exp/log round trip", check_exp_log_roundtrip},
      {"Adams composition", check_adams_composition},
      {"Exp additive to multiplicative", check_exp_multiplicative},
      {"Moebius round trip", check_mobius_roundtrip},
      {"(r/m) Delta(gamma/m) = r Delta(gamma)/m", check_rdelta_division},
      {"H to h two-route equality", check_htoh_two_routes},
      {"d-independence at suitable polarization", check_d_independence},
      {"palindromic Betti numbers", check_palindromic},
      {"Joyce enumeration vs resummed wall-crossing", check_wallcross_oracle}};
  std::vector<PropertyResult> out;
  for (const auto& [name, check] : checks) {
    PropertyResult r;
    try {
      r = check(o);
    } catch (const std::exception& e) {
      r.name = name;
      r.passed = false;
      r.detail = e.what();
    }
    out.push_back(r);
    if (stop_at_failure && !r.passed) break;
  }
  return out;
}

}  // namespace dtr::cli
