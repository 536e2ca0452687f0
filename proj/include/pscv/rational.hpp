#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace pscv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRat& q) { return boost::multiprecision::denominator(q); }

// Builds n/d for any nonzero d, normalizing the sign into the numerator.
inline BigRat make_rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("make_rat: zero denominator");
  return BigRat(n) / BigRat(d);
}

inline BigInt ipow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline BigRat rat_pow(const BigRat& base, long e) {
  if (e >= 0) return BigRat(ipow(num(base), unsigned(e)), ipow(den(base), unsigned(e)));
  if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
  return BigRat(ipow(den(base), unsigned(-e)), ipow(num(base), unsigned(-e)));
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

/// Reduce q into the half-open interval [0, m), i.e. take the class of q in R/mZ.
inline BigRat reduce_mod(const BigRat& q, const BigInt& m) {
  BigInt whole = num(q) / (den(q) * m);  // truncated quotient of q/m
  BigRat r = q - BigRat(whole * m);
  if (r < 0) r += BigRat(m);
  return r;
}

/// Order of the class of q in Q/mZ (the least k >= 1 with k*q an integer multiple of m).
inline BigInt order_mod(const BigRat& q, const BigInt& m) {
  return den(q / BigRat(m));
}

inline std::string rat_str(const BigRat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline BigRat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return BigRat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
}

}  // namespace pscv
