#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multimom::cli {

/// Dispatches one invocation. `args` excludes the program name, e.g.
/// {"moment", "--m", "10", "--x", "1/4", "--p", "2", "--central"}.
/// Returns 0 on success, 1 on any validation or usage error, 2 when a
/// verification sweep reports at least one failing case.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace multimom::cli
