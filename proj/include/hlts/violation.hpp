#pragma once

#include <string>

#include "hlts/rational.hpp"

namespace hlts {

/// One failed identity: which check, at which basis index tuple, and the
/// two sides as evaluated.
struct Violation {
  std::string tag;
  std::vector<int> witness;
  QVec lhs;
  QVec rhs;

  bool operator==(const Violation&) const = default;
};

class ViolationReport {
 public:
  bool pass() const { return v_.empty(); }

  void add(std::string tag, std::vector<int> witness, QVec lhs, QVec rhs) {
    v_.push_back({std::move(tag), std::move(witness), std::move(lhs), std::move(rhs)});
  }

  /// Record a violation only when lhs != rhs.
  void check_eq(const std::string& tag, const std::vector<int>& witness, const QVec& lhs, const QVec& rhs) {
    if (lhs != rhs) add(tag, witness, lhs, rhs);
  }

  void check_zero(const std::string& tag, const std::vector<int>& witness, const QVec& lhs) {
    if (!is_zero(lhs)) add(tag, witness, lhs, zero_vec(static_cast<int>(lhs.size())));
  }

  void merge(const ViolationReport& other, const std::string& tag_prefix = "") {
    for (const Violation& v : other.v_) {
      Violation copy = v;
      copy.tag = tag_prefix + copy.tag;
      v_.push_back(std::move(copy));
    }
  }

  const std::vector<Violation>& violations() const { return v_; }

  std::string summary() const;

 private:
  std::vector<Violation> v_;
};

}  // namespace hlts
