#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace vlaser {

// All library failures funnel through this; the CLI maps it to exit codes.
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <typename T, typename... Rest>
void format_into(std::ostringstream& os, const T& v, const Rest&... rest) {
  os << v;
  format_into(os, rest...);
}
}  // namespace detail

template <typename... Args>
[[noreturn]] void raise(const Args&... args) {
  std::ostringstream os;
  os.precision(15);
  detail::format_into(os, args...);
  throw SimError(os.str());
}

template <typename... Args>
void require(bool cond, const Args&... args) {
  if (!cond) raise(args...);
}

}  // namespace vlaser
