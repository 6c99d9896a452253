#pragma once

#include <stdexcept>
#include <string>

namespace orbitcode {

/// Invalid parameters or malformed input.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant. Seeing one of these is a bug, not a usage error.
class internal_error : public error {
 public:
  using error::error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace orbitcode
