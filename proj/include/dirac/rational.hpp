#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dirac/error.hpp"

namespace dirac {

using Rational = mpq_class;
using BigInt = mpz_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw Error(ErrorCode::not_integral, "expected a machine integer, got " + r.get_str());
  return r.get_num().get_si();
}

// "p" or "p/q" with optional sign; anything with '.', 'e' or stray characters is rejected.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::bad_argument,
                 "not an exact rational (expected \"p\" or \"p/q\"): \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!digits_ok(num, true)) throw bad();
  if (slash != std::string_view::npos && !digits_ok(den, false)) throw bad();
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  BigInt p(n, 10);
  BigInt q = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::division_by_zero, "zero denominator in \"" + std::string(text) + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Integers render as "p", everything else as "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt common_denominator(const RationalVector& v) {
  BigInt d = 1;
  for (const auto& x : v) d = lcm(d, x.get_den());
  return d;
}

inline bool all_integral(const RationalVector& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

// Representative of r modulo 1 in [0, 1).
inline Rational frac(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(q);
  return out;
}

}  // namespace dirac
