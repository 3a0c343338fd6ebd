#include "hlts/rational.hpp"

#include <cctype>

namespace hlts {

std::string to_string(const Rat& x) { return x.get_str(); }

namespace {

bool valid_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  // "0" is fine, "007" is not
  if (s.size() > 1 && s.front() == '0') return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && num.front() == '-') {
    neg = true;
    num.remove_prefix(1);
  }
  if (!valid_digits(num)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  if (neg) n = -n;
  mpz_class d(1);
  if (!den.data()) {
    // no '/' present
  } else {
    if (!valid_digits(den)) return std::nullopt;
    d = mpz_class(std::string(den), 10);
    if (d == 0) return std::nullopt;
  }
  Rat r(n, d);
  r.canonicalize();
  return r;
}

QVec zero_vec(int n) { return QVec(static_cast<size_t>(n), Rat(0)); }

bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

void add_into(QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

void sub_into(QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

QVec add(QVec a, const QVec& b) {
  add_into(a, b);
  return a;
}

QVec sub(QVec a, const QVec& b) {
  sub_into(a, b);
  return a;
}

QVec scaled(QVec v, const Rat& c) {
  for (Rat& x : v) x *= c;
  return v;
}

QVec basis_vec(int n, int i) {
  QVec v = zero_vec(n);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

std::string to_string(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace hlts
