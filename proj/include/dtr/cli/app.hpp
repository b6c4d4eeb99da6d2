#pragma once

#include <iosfwd>

#include "dtr/cli/config.hpp"

namespace dtr::cli {

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_identity(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parses argv and dispatches; returns the process exit status
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dtr::cli
