#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace lingame {

/// Entry point shared by the binary and the tests. JSON goes to `out`,
/// human-oriented notes to `err`; `in` backs "-" file arguments.
/// Exit status: 0 success, 1 usage or input error, 2 budget or iteration
/// cap exhausted, 3 internal consistency failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream* in = nullptr);

} // namespace lingame
