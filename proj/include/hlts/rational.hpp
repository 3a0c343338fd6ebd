#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hlts {

/// Exact rational scalar. GMP keeps the canonical form: reduced fraction,
/// positive denominator, zero stored as 0/1.
using Rat = mpq_class;
using QVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q",
/// sign on the numerator only, no leading zeros.
std::string to_string(const Rat& x);

/// Accepts an optional leading '-', digits, and an optional "/digits" part
/// with nonzero denominator. Anything else (including "1/0", "1/-2", "+3",
/// leading zeros garbage like "0x1") yields nullopt.
std::optional<Rat> parse_rat(std::string_view text);

QVec zero_vec(int n);
bool is_zero(const QVec& v);
void add_into(QVec& a, const QVec& b);
void sub_into(QVec& a, const QVec& b);
QVec add(QVec a, const QVec& b);
QVec sub(QVec a, const QVec& b);
QVec scaled(QVec v, const Rat& c);
QVec basis_vec(int n, int i);

std::string to_string(const QVec& v);

}  // namespace hlts
