#include <charconv>

#include "ssfd/errors.hpp"
#include "ssfd/problems.hpp"

namespace ssfd {

BenchmarkCase find_case(const std::string& name) {
  if (name.rfind("svanberg-", 0) == 0) {
    int n = 0;
    const char* first = name.c_str() + 9;
    const char* last = name.c_str() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last)
      throw ConfigError("bad svanberg dimension in '" + name + "'");
    return svanberg(n);
  }
  for (auto& c : toy_suite())
    if (c.problem.name() == name) return c;
  for (auto& c : hs_suite())
    if (c.problem.name() == name) return c;
  throw ConfigError("unknown problem '" + name + "'");
}

std::vector<std::string> known_case_names() {
  std::vector<std::string> names;
  for (const auto& c : toy_suite()) names.push_back(c.problem.name());
  for (const auto& c : hs_suite()) names.push_back(c.problem.name());
  for (int n : {10, 20, 30, 40, 50, 80, 100, 150, 200, 250})
    names.push_back("svanberg-" + std::to_string(n));
  return names;
}

}  // namespace ssfd
