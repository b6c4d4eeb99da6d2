#pragma once

#include <string>
#include <vector>

#include "dtr/algebra/graded.hpp"

namespace dtr::cli {

struct PropertyResult {
  std::string name;
  int cases = 0;
  bool passed = true;
  std::string detail;
};

struct PropertyOptions {
  int order = 5;
  int max_rank = 3;
  int cases = 100;
  unsigned seed = 20240601;
  MobiusFn mu = mobius;
};

// the individual properties, each over `cases` random or enumerated instances
PropertyResult check_exp_log_roundtrip(const PropertyOptions& o);
PropertyResult check_adams_composition(const PropertyOptions& o);
PropertyResult check_exp_multiplicative(const PropertyOptions& o);
PropertyResult check_mobius_roundtrip(const PropertyOptions& o);
PropertyResult check_rdelta_division(const PropertyOptions& o);
PropertyResult check_htoh_two_routes(const PropertyOptions& o);
PropertyResult check_d_independence(const PropertyOptions& o);
PropertyResult check_palindromic(const PropertyOptions& o);
PropertyResult check_wallcross_oracle(const PropertyOptions& o);

// all of the above in a fixed order; stops at the first failure when asked
std::vector<PropertyResult> run_property_suite(const PropertyOptions& o, bool stop_at_failure);

}  // namespace dtr::cli
