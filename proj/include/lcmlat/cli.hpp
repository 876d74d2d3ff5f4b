#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcmlat {

// Runs one CLI invocation. Exit code 0 on success, 1 when the command's
// verdict is false, 2 on any error. Pure given its input files; all output is
// deterministic and independent of --jobs.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

} // namespace lcmlat
