#pragma once

#include "pscv/rational.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

namespace pscv {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

/// Exact division of integer polynomials (dense, index = degree). The division
/// must be exact; used only to peel cyclotomic factors off x^n - 1.
inline std::vector<BigInt> poly_div_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  std::vector<BigInt> q(a.size() - b.size() + 1);
  for (int i = int(q.size()) - 1; i >= 0; --i) {
    BigInt c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  return q;
}

/// Coefficients of the n-th cyclotomic polynomial, degree phi(n), computed by
/// iterated exact division of x^n - 1 by the lower cyclotomic factors.
inline const std::vector<BigInt>& cyclotomic_poly(int n) {
  static std::map<int, std::vector<BigInt>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<BigInt> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // cache[d] is filled before cache[n] since the recursion only descends
    std::vector<BigInt> sub;
    auto jt = cache.find(d);
    if (jt != cache.end()) {
      sub = jt->second;
    } else {
      std::vector<BigInt> p(d + 1);
      p[0] = -1;
      p[d] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) p = poly_div_exact(p, cache.at(e));
      cache.emplace(d, p);
      sub = p;
    }
    poly = poly_div_exact(poly, sub);
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace detail

/// Element of Q(zeta_n) in the power basis {zeta^0, ..., zeta^{phi(n)-1}}
/// reduced modulo the n-th cyclotomic polynomial. Zero coefficients are
/// absent from the map. Values are immutable; all operations are pure.
class CycNum {
 public:
  CycNum() : order_(1) {}
  explicit CycNum(const BigRat& r) : order_(1) {
    if (r != 0) coeff_[0] = r;
  }
  explicit CycNum(long v) : CycNum(BigRat(v)) {}

  int order() const { return order_; }
  const std::map<int, BigRat>& coefficients() const { return coeff_; }

  bool is_zero() const { return coeff_.empty(); }

  /// The rational value, present exactly when every positive-exponent
  /// coefficient vanishes.
  std::optional<BigRat> as_rational() const {
    if (coeff_.empty()) return BigRat(0);
    if (coeff_.size() == 1 && coeff_.begin()->first == 0) return coeff_.begin()->second;
    return std::nullopt;
  }

  static CycNum from_dense(int n, const std::vector<BigRat>& dense) {
    CycNum x;
    x.order_ = n;
    x.coeff_ = reduce(n, dense);
    return x;
  }

  /// Same number viewed in Q(zeta_m); requires order | m.
  CycNum lift(int m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::domain_error("CycNum::lift: target order not a multiple");
    int stride = m / order_;
    std::vector<BigRat> dense(size_t(m), BigRat(0));
    for (auto& [e, c] : coeff_) dense[size_t(e) * stride] = c;
    return from_dense(m, dense);
  }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    for (auto& [e, c] : y.coeff_) {
      auto [it, fresh] = x.coeff_.emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) x.coeff_.erase(it);
      }
    }
    return x;
  }

  friend CycNum operator-(const CycNum& a) {
    CycNum r = a;
    for (auto& [e, c] : r.coeff_) c = -c;
    return r;
  }

  friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    int n = x.order_;
    int ph = euler_phi(n);
    std::vector<BigRat> dense(size_t(2 * ph), BigRat(0));
    for (auto& [e1, c1] : x.coeff_)
      for (auto& [e2, c2] : y.coeff_) dense[size_t(e1 + e2)] += c1 * c2;
    return from_dense(n, dense);
  }

  friend CycNum operator*(const BigRat& s, const CycNum& a) {
    CycNum r;
    r.order_ = a.order_;
    if (s == 0) return r;
    r.coeff_ = a.coeff_;
    for (auto& [e, c] : r.coeff_) c *= s;
    return r;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    return x.coeff_ == y.coeff_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (auto& [e, c] : coeff_) {
      double v = double(num(c)) / double(den(c));
      z += v * std::polar(1.0, tau * double(e) / double(order_));
    }
    return z;
  }

  std::string str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeff_) {
      if (!first) os << " + ";
      first = false;
      os << rat_str(c);
      if (e > 0) os << "*z" << order_ << "^" << e;
    }
    return os.str();
  }

 private:
  int order_;
  std::map<int, BigRat> coeff_;

  /// Fold a dense coefficient vector (any degree) into the power basis of
  /// Q(zeta_n) by synthetic division with the cyclotomic polynomial.
  static std::map<int, BigRat> reduce(int n, std::vector<BigRat> dense) {
    const auto& phi = detail::cyclotomic_poly(n);
    int deg = int(phi.size()) - 1;  // = euler_phi(n)
    for (int i = int(dense.size()) - 1; i >= deg; --i) {
      if (dense[size_t(i)] == 0) continue;
      BigRat c = dense[size_t(i)];
      dense[size_t(i)] = 0;
      for (int j = 0; j < deg; ++j) dense[size_t(i - deg + j)] -= c * BigRat(phi[size_t(j)]);
    }
    std::map<int, BigRat> out;
    for (int e = 0; e < int(dense.size()) && e < deg; ++e)
      if (dense[size_t(e)] != 0) out[e] = dense[size_t(e)];
    return out;
  }

  static std::pair<CycNum, CycNum> aligned(const CycNum& a, const CycNum& b) {
    int m = int(big_lcm(a.order_, b.order_).convert_to<long>());
    return {a.lift(m), b.lift(m)};
  }

  friend CycNum invert(const CycNum&);
  friend CycNum galois(const CycNum&, int);
};

inline CycNum root_of_unity(int n, long k) {
  if (n < 1) throw std::domain_error("root_of_unity: order must be positive");
  long e = ((k % n) + n) % n;
  std::vector<BigRat> dense(size_t(e) + 1, BigRat(0));
  dense[size_t(e)] = 1;
  return CycNum::from_dense(n, dense);
}

/// Multiplicative inverse in Q(zeta_n), by the extended Euclidean algorithm
/// against the cyclotomic polynomial over Q.
inline CycNum invert(const CycNum& x) {
  if (x.is_zero()) throw std::domain_error("invert: division by zero");
  int n = x.order_;
  using Poly = std::vector<BigRat>;
  auto degree = [](const Poly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
      if (p[size_t(i)] != 0) return i;
    return -1;
  };
  Poly r0;  // cyclotomic polynomial
  for (auto& c : detail::cyclotomic_poly(n)) r0.push_back(BigRat(c));
  Poly r1(size_t(euler_phi(n)), BigRat(0));
  for (auto& [e, c] : x.coeff_) r1[size_t(e)] = c;
  Poly s0{BigRat(0)}, s1{BigRat(1)};  // coefficients of x in the Bezout identity
  while (true) {
    int d1 = degree(r1);
    if (d1 < 0) throw std::domain_error("invert: zero divisor (not coprime to cyclotomic)");
    if (d1 == 0) {
      // gcd reached a nonzero constant: s1 * x = r1 (mod cyclotomic)
      Poly out = s1;
      for (auto& v : out) v /= r1[0];
      return CycNum::from_dense(n, out);
    }
    int d0 = degree(r0);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    // r0 -= (lead(r0)/lead(r1)) x^(d0-d1) r1, and likewise for s
    BigRat c = r0[size_t(d0)] / r1[size_t(d1)];
    int shift = d0 - d1;
    if (s0.size() < s1.size() + size_t(shift)) s0.resize(s1.size() + size_t(shift), BigRat(0));
    for (int i = 0; i <= d1; ++i) r0[size_t(i + shift)] -= c * r1[size_t(i)];
    for (size_t i = 0; i < s1.size(); ++i) s0[i + size_t(shift)] -= c * s1[i];
  }
}

/// The Galois automorphism zeta -> zeta^k; k must be coprime to the order.
inline CycNum galois(const CycNum& x, int k) {
  int n = x.order_;
  int kk = ((k % n) + n) % n;
  if (big_gcd(kk == 0 ? n : kk, n) != 1) throw std::domain_error("galois: exponent not coprime to order");
  std::vector<BigRat> dense(size_t(n), BigRat(0));
  for (auto& [e, c] : x.coeff_) dense[size_t((long(e) * kk) % n)] += c;
  return CycNum::from_dense(n, dense);
}

/// Complex conjugation (the Galois map zeta -> zeta^{-1}).
inline CycNum conj(const CycNum& x) { return x.order() == 1 ? x : galois(x, x.order() - 1); }

}  // namespace pscv
