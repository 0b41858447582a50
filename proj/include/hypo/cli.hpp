#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypo {

  // Exit status convention of the command line tool.
  enum ExitStatus : int {
    kAffirmative = 0,
    kNegative    = 1,
    kUsageError  = 2,
  };

  // Runs the command line tool on args (args[0] is the program name).
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  struct GoldenCheck {
    std::string name;
    bool        passed;
  };

  // Worked examples with known answers, used by `selftest`.
  std::vector<GoldenCheck> golden_checks();

}  // namespace hypo
