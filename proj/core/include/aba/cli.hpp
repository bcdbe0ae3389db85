#pragma once

#include <iosfwd>
#include <string>

#include "aba/framework.hpp"

namespace aba {

/// Exit codes: 0 success, 1 usage, 2 parse error, 3 cap exceeded.
enum ExitCode { exit_ok = 0, exit_usage = 1, exit_parse = 2, exit_capacity = 3 };

struct RunConfig {
  std::string subcommand;         // check | semantics | axioms | principles |
                                  // translate-paf | compare | dot
  std::string input;              // path to a framework or PAF file
  std::string semantics = "complete";
  std::string mode = "plus";      // plain | plus
  std::string format = "text";    // text | json
  std::string scope = "supports"; // dot: supports | all
  std::string output;             // path; empty writes to out
  Limits limits;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace aba
