#include "hlts/violation.hpp"

namespace hlts {

std::string ViolationReport::summary() const {
  if (pass()) return "pass";
  std::string s = std::to_string(v_.size()) + " violation(s)";
  for (const Violation& v : v_) {
    s += "\n  " + v.tag + " at (";
    for (size_t i = 0; i < v.witness.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v.witness[i]);
    }
    s += "): lhs=" + to_string(v.lhs) + " rhs=" + to_string(v.rhs);
  }
  return s;
}

}  // namespace hlts
