#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace edgecache::csv {

/// Shortest decimal representation that round-trips (locale-independent).
std::string format(double v);

/// Splits one CSV record on commas. Fields never contain quotes in the
/// formats this project writes.
std::vector<std::string_view> split(std::string_view line);

double parse_double(std::string_view field);
unsigned long long parse_uint(std::string_view field);

}  // namespace edgecache::csv
