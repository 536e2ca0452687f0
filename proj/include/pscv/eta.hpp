#pragma once

#include "pscv/character.hpp"
#include "pscv/cyclotomic.hpp"
#include "pscv/manifold.hpp"
#include "pscv/torsion.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pscv {

// One eta invariant, normalized into [0, modulus) with its order in the
// quotient circle R/(modulus Z).
struct EtaResult {
  BigRat value;
  int modulus = 1;
  BigInt order = 1;
};

inline BigRat eta_raw(const ManifoldExpr& m, const VirtualChar& rho);

namespace detail {

inline BigRat collapse_rational(const CycNum& x) {
  auto r = x.as_rational();
  if (!r) throw std::logic_error("eta: full-group sum failed to collapse to a rational");
  return *r;
}

// The fixed-point sum over the nontrivial elements of C_l: each lambda = zeta^t
// contributes Tr rho(lambda) * lambda^{A} / prod_j (1 - lambda^{a_j}) with
// A = (sum a_j)/2 the exponent of the chosen square root of det.  When Chern
// numbers are present, the summand picks up the extra bundle factor
// sum_j (c_j/2) (1 + lambda^{a_j}) / (1 - lambda^{a_j}).
inline BigRat lens_eta_raw(int l, const std::vector<int>& weights, const std::vector<int>* c1s,
                           const VirtualChar& rho) {
  long half_sum = 0;
  for (int a : weights) half_sum += a;
  half_sum /= 2;
  CycNum one(BigRat(1));
  CycNum total;
  for (int t = 1; t < l; ++t) {
    CycNum trace = rho.value_at(t);
    if (trace.is_zero()) continue;
    CycNum denom = one;
    for (int a : weights) denom = denom * (one - root_of_unity(l, long(a) * t));
    CycNum term = trace * root_of_unity(l, half_sum * t) * invert(denom);
    if (c1s) {
      CycNum bundle;
      for (size_t j = 0; j < weights.size(); ++j) {
        if ((*c1s)[j] == 0) continue;
        CycNum lam = root_of_unity(l, long(weights[j]) * t);
        bundle = bundle + make_rat((*c1s)[j], 2) * ((one + lam) * invert(one - lam));
      }
      term = term * bundle;
    }
    total = total + term;
  }
  return collapse_rational(total) / l;
}

inline BigRat quaternion_eta_raw(const QuaternionForm& q, const VirtualChar& rho) {
  CycNum total;
  for (const QuaternionClassEntry& e : q.class_data) {
    BigRat scalar = BigRat(e.class_size) * rat_pow(e.det_tau_sqrt, q.copies) / rat_pow(e.det_one_minus_tau, q.copies);
    total = total + scalar * rho.value_at(e.representative);
  }
  return collapse_rational(total) / q.group.order;
}

inline BigRat eta_raw_node(const ManifoldExpr& m, const VirtualChar& rho) {
  return std::visit(
      [&](const auto& node) -> BigRat {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Lens>) {
          return lens_eta_raw(node.l, node.weights, nullptr, rho);
        } else if constexpr (std::is_same_v<T, LensBundle>) {
          return lens_eta_raw(node.l, node.weights, &node.c1s, rho);
        } else if constexpr (std::is_same_v<T, QuaternionForm>) {
          return quaternion_eta_raw(node, rho);
        } else if constexpr (std::is_same_v<T, Included>) {
          return eta_raw_node(*node.inner, restrict_vchar(rho, node.inclusion));
        } else if constexpr (std::is_same_v<T, AhatScaled>) {
          return BigRat(node.factor) * eta_raw_node(*node.inner, rho);
        } else {
          BigRat sum;
          for (auto& [c, t] : node.terms)
            if (c != 0) sum += BigRat(c) * eta_raw_node(*t, rho);
          return sum;
        }
      },
      m.node);
}

}  // namespace detail

// The unnormalized eta invariant, as an exact rational; the defining sums run
// over full cyclic or quaternion groups, so the cyclotomic total is always
// Galois-stable and collapses.
inline BigRat eta_raw(const ManifoldExpr& m, const VirtualChar& rho) {
  if (rho.group != target_group(m)) throw std::invalid_argument("eta: character group mismatch");
  if (rho.vdim() != 0) throw std::invalid_argument("eta: virtual dimension must be zero");
  return detail::eta_raw_node(m, rho);
}

inline EtaResult eta(const ManifoldExpr& m, const VirtualChar& rho, int modulus) {
  if (modulus != 1 && modulus != 2) throw std::invalid_argument("eta: modulus must be 1 or 2");
  BigRat value = reduce_mod(eta_raw(m, rho), BigInt(modulus));
  return EtaResult{value, modulus, order_mod(value, BigInt(modulus))};
}

// Coordinate-wise eta against a list of (character, modulus) pairs, packaged
// for the span-order machinery.
inline TorsionVector eta_vector(const ManifoldExpr& m, const std::vector<std::pair<VirtualChar, int>>& rhos) {
  std::vector<BigRat> values, moduli;
  for (auto& [rho, modulus] : rhos) {
    EtaResult r = eta(m, rho, modulus);
    values.push_back(r.value);
    moduli.push_back(BigRat(r.modulus));
  }
  return torsion_vector(values, moduli);
}

// Advice on the refined target: modulus 2 when the dimension-and-type pairing
// (real in dimensions 3 mod 8, quaternionic in dimensions 7 mod 8) holds for
// every irreducible constituent.  A constituent of the opposite type with an
// even coefficient, or a complex constituent conjugate-paired with equal
// coefficient, still qualifies -- the doubled or paired piece carries the
// required structure -- but sets the advisory flag so the caller can decide
// whether to use the refinement.
struct ModulusAdvice {
  int modulus = 1;
  bool advisory = false;
};

inline ModulusAdvice suggest_modulus(int n, const VirtualChar& rho) {
  int r = ((n % 8) + 8) % 8;
  if (r != 3 && r != 7) return {1, false};
  int plain_fs = r == 3 ? 1 : -1;
  const CharTable& t = table_for(rho.group);
  bool advisory = false;
  for (auto& [name, mult] : rho.combo) {
    int fs = fs_indicator(t, name);
    if (fs == plain_fs) continue;
    if (fs == 0) {
      // Complex constituent: look for its conjugate with the same coefficient.
      const Character& chi = t.row(name);
      const Character* partner = nullptr;
      for (const Character& other : t.rows) {
        bool match = true;
        for (size_t c = 0; c < chi.values.size() && match; ++c)
          if (!(other.values[c] == conj(chi.values[c]))) match = false;
        if (match) {
          partner = &other;
          break;
        }
      }
      if (!partner) return {1, false};
      auto it = rho.combo.find(partner->name);
      if (it == rho.combo.end() || it->second != mult) return {1, false};
    } else {
      // Opposite indicator: a doubled copy acquires the required structure.
      if (mult % 2 != 0) return {1, false};
    }
    advisory = true;
  }
  return {2, advisory};
}

}  // namespace pscv
