#pragma once

#include <stdexcept>
#include <string>

namespace hlts {

/// Domain error: malformed input, shape mismatch, unresolved reference,
/// violated precondition (e.g. "regularity required"). The CLI maps these
/// to exit code 2.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw error(what);
}

}  // namespace hlts
