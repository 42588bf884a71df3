#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shiq {

// Runs one CLI invocation. Returns 0 on success/pass, 1 on verification
// failure or runtime refusal (counterexample or reason on `out`/`err`),
// 2 on usage errors.
int run_command(std::vector<std::string> args, std::ostream &out, std::ostream &err);

}  // namespace shiq
