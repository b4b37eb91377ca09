#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lieext/error.hpp"

namespace lieext {

// mpq_class keeps every value canonical as long as we never touch the raw
// numerator/denominator without calling canonicalize().
using Scalar = mpq_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

// mpq_class(p, q) is not reduced by GMP; every two-argument construction goes through here
inline Scalar frac(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

// Accepts "3", "-3", "+3", "p/q". Anything else (floats, spaces, 1/0) is
// rejected so that nothing is ever rounded on the way in.
inline Scalar parse_scalar(std::string_view text) {
  auto fail = [&](const char* why) {
    throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty");
  std::size_t pos = 0;
  std::string num, den;
  if (text[0] == '+' || text[0] == '-') {
    if (text[0] == '-') num.push_back('-');
    pos = 1;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out.push_back(text[pos++]);
    return pos > start;
  };
  if (!digits(num)) fail("expected digits");
  if (pos < text.size()) {
    if (text[pos] != '/') fail("unexpected character");
    ++pos;
    if (!digits(den)) fail("expected denominator digits");
    if (pos != text.size()) fail("trailing characters");
  }
  mpz_class n(num, 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den, 10);
  if (d == 0) fail("zero denominator");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

// Exact integer power, negative exponents allowed for nonzero bases.
inline Scalar pow(const Scalar& base, long e) {
  Scalar b = base;
  if (e < 0) {
    b = Scalar(1) / base;
    e = -e;
  }
  Scalar r = 1;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Rational k-th root if one exists (positive root for even k).
inline bool rational_root(const Scalar& x, unsigned long k, Scalar& out) {
  if (k == 0) return false;
  if (sgn(x) < 0 && k % 2 == 0) return false;
  mpz_class n = abs(x.get_num()), d = x.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return false;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return false;
  out = Scalar(sgn(x) < 0 ? mpz_class(-rn) : rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace lieext
