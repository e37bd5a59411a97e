#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace covhom {

// Every failure carries a stable kind string.  Guard errors signal a breach of
// an internal consistency check rather than bad input; the CLI maps the two
// categories to different exit codes.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what, bool guard = false)
      : std::runtime_error(kind + ": " + what),
        kind_(std::move(kind)),
        guard_(guard) {}

  const std::string& kind() const noexcept { return kind_; }
  bool is_guard() const noexcept { return guard_; }

private:
  std::string kind_;
  bool guard_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
  throw Error(kind, what, false);
}

[[noreturn]] inline void fail_guard(const std::string& kind, const std::string& what) {
  throw Error(kind, what, true);
}

// Internal consistency assertion; never reachable from well-formed input.
inline void check_internal(bool ok, const std::string& what) {
  if (!ok) fail_guard("InternalCheckFailed", what);
}

}  // namespace covhom
