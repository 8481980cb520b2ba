#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tribo/sequence.hpp"

namespace tribo::cli {

/// "A" or "A..B" with 0 <= A <= B. Throws ParseError otherwise.
std::pair<std::size_t, std::size_t> parse_range(std::string_view text);

/// `key = value` lines with keys r, s, t, v0, v1, v2 (all required), '#'
/// comments, integer or "p/q" values. If any value is rational, all six are
/// promoted to ExactRational. Throws ParseError with a line number.
RecurrenceParams parse_config(std::istream& in);

/// Runs one invocation. args excludes the program name.
/// Returns 0 on success, 1 on any usage or input error, 2 when `verify` reports failures.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribo::cli
