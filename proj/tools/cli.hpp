#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lgf/point.hpp"

namespace lgf::cli {

// Exit status of every subcommand.
enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,   // verify: at least one check above tolerance
  kInvalidInput = 2,  // bad flags, degenerate contour, rejected theta data
  kIoFailure = 3,
};

// Accepts "inf", "re,im", and a + b i forms such as "2+2i", "3", "-i",
// "0.5-1.5i", "1+i/2". Throws std::invalid_argument.
SpherePoint parse_lambda(const std::string& text);

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgf::cli
