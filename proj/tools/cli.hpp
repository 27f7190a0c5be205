#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankgini::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitInput = 2,
    kExitDegenerate = 3,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Reports go to `out` unless --output names a file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rankgini::cli
