#include "edgecache/csv.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "edgecache/error.hpp"

namespace edgecache::csv {

std::string format(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string_view> split(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view field) {
  double v = 0.0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw InvalidParameter("malformed number '" + std::string(field) + "'");
  }
  return v;
}

unsigned long long parse_uint(std::string_view field) {
  unsigned long long v = 0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw InvalidParameter("malformed integer '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace edgecache::csv
