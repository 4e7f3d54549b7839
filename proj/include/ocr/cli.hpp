#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ocr {

// Runs one `ocr` command. Results go to `out`, diagnostics to `err`.
// Exit status: 0 success, 1 usage error, 2 data error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace ocr
