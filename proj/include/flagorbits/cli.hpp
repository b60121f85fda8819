#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace flagorbits {

// Runs one CLI invocation.  Exit code 0 on success, 2 on domain errors,
// 1 on I/O or parse errors.
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace flagorbits
