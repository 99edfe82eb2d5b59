#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace designlab::cli {

/// Runs the designlab command line. Returns 0 on success, 1 when a
/// verification fails or the input is invalid, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace designlab::cli
