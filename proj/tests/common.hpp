#pragma once

#include <string>
#include <utility>

#include "covhom/cover_spec.hpp"
#include "covhom/error.hpp"
#include "covhom/group.hpp"
#include "covhom/spec_io.hpp"

namespace covhom::testing {

// Runs f and reports the Error kind it throws, or "" when it returns.
template <class F>
std::string error_kind(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

template <class F>
bool guard_trips(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.is_guard();
  }
  return false;
}

inline GroupPtr group_of(const std::string& generators) {
  return parse_input_text("group: " + generators).group;
}

inline CoverSpec spec_of(const std::string& text) {
  return parse_input_text(text).spec.value();
}

inline GroupPtr s3() { return group_of("(1 2);(1 2 3)"); }
inline GroupPtr s4() { return group_of("(1 2);(1 2 3 4)"); }
inline GroupPtr a4() { return group_of("(1 2 3);(1 2)(3 4)"); }
inline GroupPtr q8() { return group_of("(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)"); }
inline GroupPtr v4() { return group_of("(1 2);(3 4)"); }

}  // namespace covhom::testing
