#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace axtk {

// Command-line driver, callable in-process for tests.  args excludes the
// program name.  Returns 0 on success, 1 on a verification failure (e.g. a
// vector fails the axis check), 2 on input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace axtk
