#pragma once

#include <string>
#include <string_view>

namespace condkit::format {

/// Shortest decimal that round-trips to the same double; `inf`/`-inf` for
/// infinities. Output is locale-independent.
std::string shortest(double value);

/// `%.<digits>g` formatting, locale-independent.
std::string significant(double value, int digits);

/// Strict parse of a full token; accepts `inf`/`-inf`. InvalidInput otherwise.
double parse_double(std::string_view text);

}  // namespace condkit::format
