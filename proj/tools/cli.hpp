#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cl3::cli {

// Runs the cl3cft command line. args[0] is the program name. Returns the
// process exit code: 0 on success, 1 for math or I/O errors (and failed
// verification), 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cl3::cli
