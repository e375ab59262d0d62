#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lincop::cli {

/// Dispatches one command-line invocation. args excludes the program name.
/// Results go to out; usage and error text go to err, which stays empty on
/// success. Exit codes: 0 success (for `decide`, positive density), 1 zero
/// density from `decide`, 2 usage error, 3 domain error (a = 0 or c = 0).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lincop::cli
