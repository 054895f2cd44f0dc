#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "quandle/common.hpp"

namespace quandle {

using integer = boost::multiprecision::cpp_int;

/// Exact rational, always reduced with positive denominator.
using rational = boost::multiprecision::cpp_rational;

inline integer num(const rational& x) { return boost::multiprecision::numerator(x); }
inline integer den(const rational& x) { return boost::multiprecision::denominator(x); }

inline integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw structure_error("bad integer literal '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw structure_error("bad integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return integer(s);
}

/// Parses "p/q" or "p".
inline rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return rational(parse_integer(text));
  integer p = parse_integer(text.substr(0, slash));
  integer q = parse_integer(text.substr(slash + 1));
  if (q == 0) throw structure_error("rational literal '" + std::string(text) + "' has zero denominator");
  return rational(p, q);
}

inline std::string to_string(const rational& x) { return x.str(); }

/// Divides out of n every prime factor it shares with m. The result is 1
/// exactly when every prime factor of n divides m.
inline integer strip_common_primes(integer n, const integer& m) {
  if (n < 0) n = -n;
  for (integer g = gcd(n, m); g > 1; g = gcd(n, m)) {
    while (n % g == 0) n /= g;
  }
  return n;
}

inline bool primes_divide(const integer& n, const integer& m) { return strip_common_primes(n, m) == 1; }

/// Product of the distinct prime factors of a positive integer.
inline integer radical(integer m) {
  if (m <= 0) throw structure_error("radical: argument must be positive");
  integer r = 1;
  for (integer p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r *= p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r *= m;
  return r;
}

}  // namespace quandle
