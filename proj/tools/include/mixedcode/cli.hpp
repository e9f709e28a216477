#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mixedcode::cli {

/// Process exit statuses.
enum Status : int { success = 0, failure = 1, input_error = 2, budget_refusal = 3 };

/// Runs one invocation. args excludes the program name. Reads MIXEDCODE_BUDGET from the
/// environment ("codewords" or "codewords,ambient"); --max-codewords and --max-ambient win over it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mixedcode::cli
