#pragma once

#include "pscv/rational.hpp"

#include <vector>

namespace pscv {

// One coordinate of a torsion vector: a class in Q/mZ with the representative
// normalized into [0, m). The modulus here is always 1 or 2 in practice.
struct TorsionCoord {
  BigRat value;
  BigRat modulus;
};

struct TorsionVector {
  std::vector<TorsionCoord> coords;

  bool is_zero() const {
    for (auto& c : coords)
      if (c.value != 0) return false;
    return true;
  }
};

inline BigRat reduce_mod_rat(const BigRat& q, const BigRat& m) {
  return reduce_mod(q / m, 1) * m;
}

inline TorsionVector torsion_vector(const std::vector<BigRat>& values, const std::vector<BigRat>& moduli) {
  if (values.size() != moduli.size()) throw std::invalid_argument("torsion_vector: size mismatch");
  TorsionVector v;
  for (size_t i = 0; i < values.size(); ++i) {
    if (moduli[i] <= 0) throw std::invalid_argument("torsion_vector: modulus must be positive");
    v.coords.push_back(TorsionCoord{reduce_mod_rat(values[i], moduli[i]), moduli[i]});
  }
  return v;
}

inline TorsionVector torsion_vector(const std::vector<BigRat>& values, const BigRat& modulus) {
  return torsion_vector(values, std::vector<BigRat>(values.size(), modulus));
}

// Minimal d >= 1 with d * value in modulus * Z, combined over coordinates.
inline BigInt element_order(const TorsionVector& v) {
  BigInt order = 1;
  for (auto& c : v.coords) order = big_lcm(order, den(c.value / c.modulus));
  return order;
}

// Smith normal form diagonal of an integer matrix: d_1 | d_2 | ..., all
// nonnegative, zeros trailing for rank deficiency.
inline std::vector<BigInt> snf(std::vector<std::vector<BigInt>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;
  size_t t = 0;
  auto abs_val = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
  while (t < rows && t < cols) {
    // Pick the nonzero entry of smallest absolute value as pivot.
    size_t pr = t, pc = t;
    BigInt best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || abs_val(m[i][j]) < best)) {
          best = abs_val(m[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        BigInt q = m[i][t] / m[t][t];
        if (q != 0)
          for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        BigInt q = m[t][j] / m[t][t];
        if (q != 0)
          for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs_val(m[t][t]));
    ++t;
  }
  while (diag.size() < std::min(rows, cols)) diag.push_back(0);
  // Enforce the divisibility chain d_i | d_{i+1} by gcd/lcm swaps.
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      bool divides = diag[i] == 0 ? diag[j] == 0 : diag[j] % diag[i] == 0;
      if (divides) continue;
      BigInt g = big_gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

struct SpanReport {
  BigInt order;
  std::vector<BigInt> elementary_divisors;  // each > 1, each dividing the next
};

// Order of the subgroup of a product of Q/mZ factors generated by the given
// vectors. Coordinates are first carried to Q/Z by the scaling isomorphism;
// with D the lcm of denominators, the span is D I_k together with the rows
// D v_i viewed inside Z^k, and the quotient by D Z^k is read off the SNF.
inline SpanReport span_order(const std::vector<TorsionVector>& vs) {
  if (vs.empty()) return SpanReport{1, {}};
  size_t k = vs[0].coords.size();
  if (k == 0) throw std::invalid_argument("span_order: empty coordinate signature");
  for (auto& v : vs) {
    if (v.coords.size() != k) throw std::invalid_argument("span_order: mismatched coordinate count");
    for (size_t i = 0; i < k; ++i)
      if (v.coords[i].modulus != vs[0].coords[i].modulus)
        throw std::invalid_argument("span_order: mismatched modulus signature");
  }
  std::vector<std::vector<BigRat>> w(vs.size(), std::vector<BigRat>(k));
  BigInt D = 1;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < k; ++j) {
      w[i][j] = vs[i].coords[j].value / vs[i].coords[j].modulus;
      D = big_lcm(D, den(w[i][j]));
    }
  std::vector<std::vector<BigInt>> m;
  for (auto& row : w) {
    std::vector<BigInt> r;
    for (auto& q : row) r.push_back(num(q * D));
    m.push_back(std::move(r));
  }
  for (size_t j = 0; j < k; ++j) {
    std::vector<BigInt> r(k, 0);
    r[j] = D;
    m.push_back(std::move(r));
  }
  std::vector<BigInt> diag = snf(std::move(m));
  SpanReport rep;
  rep.order = 1;
  std::vector<BigInt> divisors;
  for (size_t i = 0; i < k; ++i) {
    BigInt q = D / diag[i];
    rep.order *= q;
    if (q > 1) divisors.push_back(q);
  }
  // diag is ascending in divisibility, so the quotients descend; reverse them.
  rep.elementary_divisors.assign(divisors.rbegin(), divisors.rend());
  return rep;
}

// Exact determinant of a square rational matrix by Gaussian elimination.
inline BigRat det_rat(std::vector<std::vector<BigRat>> m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_rat: matrix not square");
  BigRat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      BigRat f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Order in Q/mZ of the determinant of a square matrix of torsion values that
// all share the single modulus m; a lower bound for the span order.
inline BigInt det_order_bound(const std::vector<TorsionVector>& rows) {
  size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("det_order_bound: empty matrix");
  BigRat modulus = rows[0].coords.at(0).modulus;
  std::vector<std::vector<BigRat>> m;
  for (auto& r : rows) {
    if (r.coords.size() != n) throw std::invalid_argument("det_order_bound: matrix not square");
    std::vector<BigRat> vals;
    for (auto& c : r.coords) {
      if (c.modulus != modulus) throw std::invalid_argument("det_order_bound: moduli differ");
      vals.push_back(c.value);
    }
    m.push_back(std::move(vals));
  }
  return den(det_rat(std::move(m)) / modulus);
}

}  // namespace pscv
