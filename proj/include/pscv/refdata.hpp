#pragma once

// Frozen reference data for the verification campaigns: closed-form
// dimension counts for the subspaces of mod-2 homology of classifying
// spaces that must be spanned by positive scalar curvature manifolds,
// together with the known shapes of the connective real K-groups
// ko_n(BG) of the finite 2-groups under study and the orders of the
// kernel of the periodicity map Ap on them.  Everything in this file is
// a stored target value; nothing is derived by the computational
// machinery, which is instead checked against these numbers.

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pscv/group.hpp"
#include "pscv/rational.hpp"

namespace pscv {

// Dimension of the part of H_n(BV(2); F_2) that lies in the kernel of the
// periodicity operator, i.e. the part that has to be realized by manifolds.
// It is k+1 in degrees n = 4k, k in degrees n = 4k+2, and zero in odd
// degrees and degrees below 4.
inline int v2_plus_dim(int n) {
  if (n <= 0 || n % 2 != 0) return 0;
  return (n % 4 == 0) ? n / 4 + 1 : (n - 2) / 4;
}

// Dimension of the corresponding subspace of H_n(BV(3); F_2).  Writing
// n = 4k + r, the closed forms are
//   r = 0: k^2 + 4k + 3,   r = 2: k^2 + 5k,
//   r = 1: k^2 + k + 1,    r = 3: k^2 + 2k,
// and zero for n < 4.
inline long long v3_kernel_dim(int n) {
  if (n < 4) return 0;
  long long k = n / 4;
  switch (n % 4) {
    case 0: return k * k + 4 * k + 3;
    case 1: return k * k + k + 1;
    case 2: return k * k + 5 * k;
    default: return k * k + 2 * k;
  }
}

// Number of independent classes of H_n(BD; F_2) obtained by pushing forward
// positive scalar curvature classes from the two elementary abelian rank-2
// subgroups up the chain of dihedral groups: in degrees n = 4K it is K+1
// for odd K and K for even K; in degrees n = 4k+2 it is k.
inline int dihedral_inclusion_dim(int n) {
  if (n <= 0 || n % 2 != 0) return 0;
  if (n % 4 == 2) return (n - 2) / 4;
  int K = n / 4;
  return (K % 2 != 0) ? K + 1 : K;
}

// Full target dimension for the dihedral groups (the "second column"):
// the same count as for V(2), namely K+1 in degrees 4K and k in degrees
// 4k+2.  In degrees 4K with K even the inclusion classes alone fall one
// short and a circle-bundle class supplies the remaining generator.
inline int dihedral_two_column_dim(int n) { return v2_plus_dim(n); }

// Target dimension for the semidihedral group of order 16 in degree n:
// K+1 in degrees n = 8K+4 and K in the other even degrees 8K, 8K+2, 8K+6;
// zero in odd degrees.
inline int sd16_two_column_dim(int n) {
  if (n <= 0 || n % 2 != 0) return 0;
  int K = n / 8;
  return (n % 8 == 4) ? K + 1 : K;
}

// The dimensions h_n of the Bott-torsion part of ko_n(BV(3)); the same
// closed forms as v3_kernel_dim, under the name used by the rank-three
// tables.  The formulas are the stable ones, valid for n >= 4; all
// degrees below 4 have trivial Bott torsion and return 0.
inline long long h_dim(int n) { return v3_kernel_dim(n); }

// ---------------------------------------------------------------------------
// Shapes of finite(ly generated) abelian 2-groups.
//
// A shape records a direct-sum decomposition Z^free_rank + sum of cyclic
// groups of prime-power order + optionally one summand whose order is
// known but whose isomorphism type is not ("<2^a>" entries of the stored
// tables).  Cyclic orders are kept sorted in decreasing order with all
// trivial factors dropped, so equality of shapes is field-wise equality.
// ---------------------------------------------------------------------------

struct AbelianShape {
  int free_rank = 0;
  std::vector<BigInt> cyclic_orders;              // each > 1, decreasing
  std::optional<BigInt> undetermined_order;       // > 1 when present

  // Order of the torsion part, counting the undetermined summand by its
  // order.  This is the invariant every order-only table entry pins down.
  BigInt torsion_order() const {
    BigInt t = 1;
    for (const BigInt& c : cyclic_orders) t *= c;
    if (undetermined_order) t *= *undetermined_order;
    return t;
  }

  bool operator==(const AbelianShape& o) const {
    return free_rank == o.free_rank && cyclic_orders == o.cyclic_orders &&
           undetermined_order == o.undetermined_order;
  }
  bool operator!=(const AbelianShape& o) const { return !(*this == o); }

  std::string str() const;
};

namespace detail {

// Prints an order, abbreviating large powers of two.
inline std::string order_str(const BigInt& o) {
  if (o > 512 && (o & (o - 1)) == 0) {
    return "2^" + std::to_string(boost::multiprecision::msb(o));
  }
  return o.str();
}

}  // namespace detail

inline std::string AbelianShape::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (std::size_t i = 0; i < cyclic_orders.size();) {
    std::size_t j = i;
    while (j < cyclic_orders.size() && cyclic_orders[j] == cyclic_orders[i]) ++j;
    std::string part = "[" + detail::order_str(cyclic_orders[i]) + "]";
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(part);
    i = j;
  }
  if (undetermined_order) {
    parts.push_back("<" + detail::order_str(*undetermined_order) + ">");
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const AbelianShape& s) {
  return os << s.str();
}

// Builds a normalized shape: trivial cyclic factors are dropped, the rest
// sorted in decreasing order, and a trivial undetermined summand erased.
inline AbelianShape make_shape(int free_rank, std::vector<BigInt> cyclic_orders,
                               std::optional<BigInt> undetermined_order = {}) {
  AbelianShape s;
  s.free_rank = free_rank;
  for (BigInt& c : cyclic_orders) {
    if (c <= 0) throw std::invalid_argument("make_shape: nonpositive cyclic order");
    if (c > 1) s.cyclic_orders.push_back(c);
  }
  std::sort(s.cyclic_orders.begin(), s.cyclic_orders.end(),
            [](const BigInt& a, const BigInt& b) { return a > b; });
  if (undetermined_order) {
    if (*undetermined_order <= 0) {
      throw std::invalid_argument("make_shape: nonpositive undetermined order");
    }
    if (*undetermined_order > 1) s.undetermined_order = undetermined_order;
  }
  return s;
}

inline AbelianShape shape_zero() { return make_shape(0, {}); }
inline AbelianShape shape_free(int rank) { return make_shape(rank, {}); }
inline AbelianShape shape_cyclics(std::vector<BigInt> orders) {
  return make_shape(0, std::move(orders));
}
// Elementary abelian 2-group of the given rank.
inline AbelianShape shape_elementary(int rank) {
  return make_shape(0, std::vector<BigInt>(static_cast<std::size_t>(rank), 2));
}
inline AbelianShape shape_undetermined(const BigInt& order) {
  return make_shape(0, {}, order);
}

// Direct sum of shapes.  Two undetermined summands merge into one whose
// order is the product, which is all the tables ever need.
inline AbelianShape operator+(const AbelianShape& a, const AbelianShape& b) {
  std::vector<BigInt> cyc = a.cyclic_orders;
  cyc.insert(cyc.end(), b.cyclic_orders.begin(), b.cyclic_orders.end());
  std::optional<BigInt> und;
  if (a.undetermined_order || b.undetermined_order) {
    BigInt u = 1;
    if (a.undetermined_order) u *= *a.undetermined_order;
    if (b.undetermined_order) u *= *b.undetermined_order;
    und = u;
  }
  return make_shape(a.free_rank + b.free_rank, std::move(cyc), und);
}

// ---------------------------------------------------------------------------
// Stored ko-homology tables.
// ---------------------------------------------------------------------------

// Exponent of |ko_n(BD_{2^{N+2}})| in the two families of odd dimensions
// where the whole group lies in the kernel of Ap:
//   n = 8k+3:  (2N+12)k + N + 8,
//   n = 8k+7:  (2N+12)(k+1) - 1.
inline long long dihedral_odd_exponent(int N, int n) {
  if (N < 1 || n < 0 || n % 4 != 3) {
    throw std::out_of_range("dihedral_odd_exponent: need n = 3 mod 4");
  }
  long long k = n / 8;
  return (n % 8 == 3) ? (2 * N + 12) * k + N + 8 : (2 * N + 12) * (k + 1) - 1;
}

namespace detail {

inline long long binom_small(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

// Bott-torsion ranks per elementary abelian rank; zero outside the stored
// range.  Rank one has none, rank two has them in even degrees only, and
// rank three follows the h_n closed forms.
inline long long elementary_h(int rank, int n) {
  if (rank == 1) return 0;
  if (rank == 2) return v2_plus_dim(n);
  return v3_kernel_dim(n);
}

// Sum of binomial coefficients C(rank, 1) + ... + C(rank, top), the rank of
// the light part of ko_n(BV(rank)) in degrees 1 and 2 mod 8 (where the sum
// is truncated at the degree itself in the first period).
inline long long binom_prefix(int rank, int top) {
  long long s = 0;
  for (int i = 1; i <= std::min(rank, top); ++i) s += binom_small(rank, i);
  return s;
}

// The ladder of cyclic summands in dimensions 3 mod 4: multiplicities
// C(rank, rank-1), ..., C(rank, 0) against orders 2^{base-1}, ..., with
// base = 4m+4 in dimensions 8m+3 and 4m+5 in dimensions 8m+7.
inline std::vector<BigInt> elementary_ladder(int rank, long long base) {
  std::vector<BigInt> orders;
  for (int i = 1; i <= rank; ++i) {
    long long e = base - i;
    if (e < 1) continue;
    long long mult = binom_small(rank, rank - i);
    for (long long j = 0; j < mult; ++j) orders.push_back(pow2(static_cast<unsigned>(e)));
  }
  return orders;
}

// ko_n(B(Z/2)^rank) for ranks one to three.  Rank one is the real
// projective table; the rank-two and rank-three tables refine it with the
// Bott-torsion ranks above.  The same row shapes cover every degree:
//   8m:   Z + 2^h              8m+4: Z + 2^h
//   8m+1: 2^{1 + sum C + h}    8m+5: 2^h
//   8m+2: 2^{1 + sum C + h}    8m+6: 2^h
//   8m+3: ladder + 2^{h - C(rank, 4m+3)}
//   8m+7: ladder + 2^h
inline AbelianShape ko_elementary(int rank, int n) {
  long long m = n / 8;
  long long h = elementary_h(rank, n);
  switch (n % 8) {
    case 0:
    case 4:
      return shape_free(1) + shape_elementary(static_cast<int>(h));
    case 1:
      return shape_elementary(
          static_cast<int>(1 + binom_prefix(rank, static_cast<int>(4 * m + 1)) + h));
    case 2:
      return shape_elementary(
          static_cast<int>(1 + binom_prefix(rank, static_cast<int>(4 * m + 2)) + h));
    case 3: {
      long long tail = h - binom_small(rank, static_cast<int>(4 * m + 3));
      return shape_cyclics(elementary_ladder(rank, 4 * m + 4)) +
             shape_elementary(static_cast<int>(std::max(0LL, tail)));
    }
    case 5:
    case 6:
      return shape_elementary(static_cast<int>(h));
    default:
      return shape_cyclics(elementary_ladder(rank, 4 * m + 5)) +
             shape_elementary(static_cast<int>(h));
  }
}

// ko_n(BC_4): every degree is stored.  The degree-1 group is the one
// non-split row, cyclic of order 4 plus one summand of order 2 rather
// than the stable elementary answer.
inline AbelianShape ko_cyclic4(int n) {
  unsigned m = static_cast<unsigned>(n / 8);
  switch (n % 8) {
    case 0:
    case 4:
      return shape_free(1);
    case 1:
      if (n == 1) return shape_cyclics({4, 2});
      return shape_cyclics({pow2(2 * m + 1)}) + shape_elementary(2);
    case 2:
      return shape_elementary(2);
    case 3:
      return shape_cyclics({pow2(4 * m + 3), pow2(2 * m + 1)});
    case 5:
      return shape_cyclics({pow2(2 * m + 2)});
    case 6:
      return shape_zero();
    default:
      return shape_cyclics({pow2(4 * m + 5), pow2(2 * m + 1)});
  }
}

// ko_n(BC_{2^{N+1}}) for N >= 2: only the two dimensions used by the
// extension arguments are stored.
//   n = 7:  [2^{N+4}] + [2^N]
//   n = 11: [2^8] + [2^3] + [2]^2 for N = 2, and
//           [2^{N+6}] + [2^{N+1}] + [2^{N-1}] + [2] for N >= 3.
inline AbelianShape ko_cyclic_large(int N, int n) {
  unsigned uN = static_cast<unsigned>(N);
  if (n == 7) return shape_cyclics({pow2(uN + 4), pow2(uN)});
  if (n == 11) {
    if (N == 2) return shape_cyclics({pow2(8), pow2(3), 2, 2});
    return shape_cyclics({pow2(uN + 6), pow2(uN + 1), pow2(uN - 1), 2});
  }
  throw std::out_of_range("ko_table: dimension not stored for this cyclic group");
}

// ko_n(BQ_8) in dimensions 3 mod 4; nothing else is stored as a shape.
inline AbelianShape ko_quaternion(int n) {
  unsigned m = static_cast<unsigned>(n / 8);
  if (n % 8 == 3) {
    return shape_cyclics({pow2(4 * m + 3), pow2(2 * m), pow2(2 * m + 2), pow2(2 * m + 2)});
  }
  if (n % 8 == 7) {
    return shape_cyclics({pow2(4 * m + 6), pow2(2 * m), pow2(2 * m + 2), pow2(2 * m + 2)});
  }
  throw std::out_of_range("ko_table: quaternion shapes stored in dimensions 3 mod 4 only");
}

// ko_n(BD_{2^{N+2}}).  Dimensions 3 and 7 mod 8 are explicit for the
// order-8 dihedral group and order-only for the larger ones; dimensions
// 4, 5, 6 mod 8 are stable from the start, while the refined answers in
// dimensions 0, 1, 2 mod 8 hold once k >= max(1, N-1).
inline AbelianShape ko_dihedral(int N, int n) {
  if (n == 0) return shape_free(1);
  unsigned k = static_cast<unsigned>(n / 8);
  unsigned uN = static_cast<unsigned>(N);
  switch (n % 8) {
    case 3:
    case 7: {
      if (N == 1) {
        unsigned big = (n % 8 == 3) ? 4 * k + 3 : 4 * k + 4;
        unsigned small = (n % 8 == 3) ? 2 * k : 2 * k + 1;
        return shape_cyclics({pow2(big), pow2(big), pow2(big), pow2(small)});
      }
      return shape_undetermined(
          pow2(static_cast<unsigned>(dihedral_odd_exponent(N, n))));
    }
    case 4:
      return shape_free(1) + shape_elementary(static_cast<int>(2 * k + 2));
    case 5:
      return shape_zero();
    case 6:
      return shape_elementary(static_cast<int>(2 * k + 1));
    default: {
      if (static_cast<int>(k) < std::max(1, N - 1)) {
        throw std::out_of_range("ko_table: dihedral group not stable in this dimension");
      }
      if (n % 8 == 0) {
        return shape_free(1) + shape_elementary(static_cast<int>(2 * k + (1u << uN)));
      }
      if (n % 8 == 1) return shape_elementary(static_cast<int>(2 + (1u << (uN + 1))));
      return shape_elementary(static_cast<int>(2 * k + (1u << uN) + 3));
    }
  }
}

// ko_n(BSD_16) in odd dimensions 3, 5, 7 mod 8 (where the whole group is
// the kernel of Ap).  The first dimension of each 3 mod 8 family is
// special; the 5 and 7 mod 8 rows are uniform in k.  Nothing is stored in
// even dimensions or dimensions 1 mod 8, where only filtration quotients
// are known.
inline AbelianShape ko_semidihedral(int n) {
  unsigned k = static_cast<unsigned>(n / 8);
  switch (n % 8) {
    case 3:
      if (n == 3) return shape_cyclics({4, 8, 8});
      return shape_cyclics({pow2(k - 1), pow2(2 * k + 1), pow2(2 * k + 2),
                            pow2(4 * k + 3), pow2(4 * k + 3)});
    case 5:
      return shape_cyclics({pow2(k + 1)});
    case 7:
      return shape_cyclics({pow2(k), pow2(2 * k + 1), pow2(2 * k + 2),
                            pow2(4 * k + 4), pow2(4 * k + 5)});
    default:
      throw std::out_of_range("ko_table: semidihedral shapes stored in odd dimensions only");
  }
}

}  // namespace detail

// Stored shape of ko_n(BG) (the full group, point summands included).
// Throws std::out_of_range for dimensions where no shape is stored.
inline AbelianShape ko_table(const Group& g, int n) {
  if (n < 0) throw std::out_of_range("ko_table: negative dimension");
  switch (g.family) {
    case GroupFamily::cyclic: {
      if (g.param == 2) return detail::ko_elementary(1, n);
      if (g.param == 4) return detail::ko_cyclic4(n);
      int N = 0;
      for (long long l = g.param; l > 2; l /= 2) ++N;
      return detail::ko_cyclic_large(N, n);
    }
    case GroupFamily::elementary_abelian: {
      if (g.param == 1) return detail::ko_elementary(1, n);
      if (g.param <= 3) return detail::ko_elementary(static_cast<int>(g.param), n);
      throw std::out_of_range("ko_table: rank-four Bott torsion is not stored");
    }
    case GroupFamily::dihedral:
      return detail::ko_dihedral(static_cast<int>(g.param), n);
    case GroupFamily::quaternion8:
      return detail::ko_quaternion(n);
    default:
      return detail::ko_semidihedral(n);
  }
}

// Order of Ker(Ap) inside ko_n(BG), the part that must be realized by
// positive scalar curvature manifolds.  Throws std::out_of_range where the
// stored tables give no closed form (for example the eta-multiple parts of
// the dihedral groups in dimensions 1 mod 8).
inline BigInt ker_ap_order(const Group& g, int n) {
  if (n < 0) throw std::out_of_range("ker_ap_order: negative dimension");
  unsigned k = static_cast<unsigned>(n / 8);
  switch (g.family) {
    case GroupFamily::cyclic:
    case GroupFamily::elementary_abelian: {
      long long rank_one_order =
          (g.family == GroupFamily::cyclic) ? g.param : 0;
      if (g.family == GroupFamily::elementary_abelian && g.param == 1) {
        rank_one_order = 2;
      }
      if (rank_one_order > 0) {
        BigInt l = rank_one_order;
        if (n % 2 == 0) {
          if (l <= 4) return 1;
          throw std::out_of_range("ker_ap_order: even dimensions not stored here");
        }
        switch (n % 8) {
          case 1: return ipow(l / 2, 2 * k + 1);
          case 3: return 2 * ipow(2 * l, 2 * k + 1);
          case 5: return ipow(l / 2, 2 * k + 2);
          default: return ipow(2 * l, 2 * k + 2);
        }
      }
      if (g.param == 2) {
        if (n == 0) return 1;
        switch (n % 8) {
          case 0: return pow2(2 * k + 1);
          case 1: return 1;
          case 2: return pow2(2 * k);
          case 3: return pow2(12 * k + 8);
          case 4: return pow2(2 * k + 2);
          case 5: return 1;
          case 6: return pow2(2 * k + 1);
          default: return pow2(12 * k + 11);
        }
      }
      throw std::out_of_range("ker_ap_order: kernel column stored for ranks one and two");
    }
    case GroupFamily::quaternion8: {
      if (n % 4 == 3) return pow2((n % 8 == 3) ? 10 * k + 7 : 10 * k + 10);
      if (n % 4 == 2) return 1;
      throw std::out_of_range("ker_ap_order: quaternion eta-multiple part not stored");
    }
    case GroupFamily::dihedral: {
      int N = static_cast<int>(g.param);
      if (n == 0) return 1;
      switch (n % 8) {
        case 0:
          if (static_cast<int>(k) < std::max(1, N - 1)) {
            throw std::out_of_range("ker_ap_order: dihedral kernel not stable here");
          }
          return pow2(2 * k + (1u << static_cast<unsigned>(N)));
        case 1:
          throw std::out_of_range("ker_ap_order: dihedral eta-multiple part not stored");
        case 2: return pow2(2 * k);
        case 3:
        case 7:
          return pow2(static_cast<unsigned>(dihedral_odd_exponent(N, n)));
        case 4: return pow2(2 * k + 2);
        case 5: return 1;
        default: return pow2(2 * k + 1);
      }
    }
    default: {
      if (n <= 2) return 1;
      if (n == 8 || n == 9) return 4;
      switch (n % 8) {
        case 0:
        case 1: return pow2(k + 2);
        case 2:
        case 6: return pow2(k);
        case 3: return pow2(13 * k + 8);
        case 4:
        case 5: return pow2(k + 1);
        default: return pow2(13 * k + 12);
      }
    }
  }
}

// Order of the subgroup of ko_n(BV(rank)) spanned by the images of the
// real projective spaces under the 2^rank - 1 embeddings of Z/2, in the
// dimensions n = 3 mod 4 where the eta invariant detects it: two raised to
//   (4m+4)(2^rank - 1) - rank 2^{rank-1}   in dimensions 8m+3,
//   (4m+5)(2^rank - 1) - rank 2^{rank-1}   in dimensions 8m+7.
// This is exactly the product of the cyclic ladder orders of the stored
// rank tables.
inline BigInt projective_span_order(int rank, int n) {
  if (rank < 1 || rank > 4 || n < 3 || n % 4 != 3) {
    throw std::out_of_range("projective_span_order: need a rank up to four and n = 3 mod 4");
  }
  long long m = n / 8;
  long long base = (n % 8 == 3) ? 4 * m + 4 : 4 * m + 5;
  long long exponent = base * ((1LL << rank) - 1) -
                       static_cast<long long>(rank) * (1LL << (rank - 1));
  return pow2(static_cast<unsigned>(exponent));
}

}  // namespace pscv
