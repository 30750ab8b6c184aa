#pragma once

#include <functional>

#include "exotica/error.hpp"

namespace exotica::testing {

/// Code of the Error thrown by f; kInternal when nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace exotica::testing
