#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch for the `dgres` tool.
 *
 * Every command prints a JSON report (sorted keys, exact scalars) carrying
 * the sign-convention tag, except `fixtures`, which prints a document.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace dgres::cli {

enum ExitCode : int { Verified = 0, Refuted = 1, Inconclusive = 2, InvalidInput = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgres::cli
