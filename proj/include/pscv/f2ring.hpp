#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pscv {

// Mod-2 cohomology rings presented by finite confluent rewrite systems, plus
// the characteristic-class machinery built on top of them: Steenrod squares,
// Wu classes, projective bundles of real vector bundles, ring homomorphisms,
// and pushforwards of fundamental classes in mod-2 homology.

// A monomial is one exponent per generator; a polynomial is an XOR-set of
// monomials (coefficients live in F_2, so a monomial is present or absent).
using Monomial = std::vector<int>;

struct F2Poly {
  std::set<Monomial> monomials;

  bool is_zero() const { return monomials.empty(); }
  bool operator==(const F2Poly& o) const { return monomials == o.monomials; }
  bool operator!=(const F2Poly& o) const { return monomials != o.monomials; }
};

inline std::ostream& operator<<(std::ostream& os, const F2Poly& p) {
  if (p.is_zero()) return os << "0";
  bool outer = false;
  for (auto& m : p.monomials) {
    if (outer) os << " + ";
    outer = true;
    os << "(";
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ")";
  }
  return os;
}

inline void f2_toggle(std::set<Monomial>& s, const Monomial& m) {
  auto it = s.find(m);
  if (it == s.end()) s.insert(m); else s.erase(it);
}

inline F2Poly f2_add(const F2Poly& a, const F2Poly& b) {
  F2Poly out = a;
  for (auto& m : b.monomials) f2_toggle(out.monomials, m);
  return out;
}

inline bool contains(const F2Poly& p, const Monomial& m) {
  return p.monomials.count(m) != 0;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline bool mono_divides(const Monomial& d, const Monomial& m) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = m[i] - d[i];
  return out;
}

// One directed rewrite: the lead monomial is replaced by the tail polynomial.
// Every tail monomial must be strictly smaller than the lead in the ring's
// graded-lexicographic order, which makes reduction terminate.
struct RewriteRule {
  Monomial lead;
  F2Poly tail;
};

struct GradedRingF2 {
  std::vector<std::pair<std::string, int>> generators;  // (name, degree)
  std::vector<RewriteRule> rules;
  std::vector<int> priority;  // generator indices, most significant first
  std::optional<int> manifold_dim;
  // (generator index, i) -> Sq^i of that generator, for 1 <= i < degree.
  std::map<std::pair<int, int>, F2Poly> sq_actions;
  std::optional<F2Poly> tangent_w;  // total tangent class, kept reduced
  // Optional bijective relabeling of reduced monomials onto the basis the
  // homology side is indexed by (identity when absent).
  std::function<Monomial(const Monomial&)> basis_relabel;

  int arity() const { return static_cast<int>(generators.size()); }

  int gen_index(const std::string& name) const {
    for (int i = 0; i < arity(); ++i)
      if (generators[i].first == name) return i;
    throw std::invalid_argument("unknown generator '" + name + "'");
  }
};

inline int mono_degree(const GradedRingF2& r, const Monomial& m) {
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += m[i] * r.generators[i].second;
  return d;
}

// Graded-lexicographic order: first by total degree, then lexicographically
// on the exponents read in priority order.
inline bool mono_less(const GradedRingF2& r, const Monomial& a, const Monomial& b) {
  int da = mono_degree(r, a), db = mono_degree(r, b);
  if (da != db) return da < db;
  for (int g : r.priority) {
    if (a[g] != b[g]) return a[g] < b[g];
  }
  return false;
}

// Global guard against runaway reductions; raised via the environment when a
// computation legitimately needs deeper degrees.
inline int degree_cap() {
  if (const char* s = std::getenv("PSCV_DEGREE_CAP")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 64;
}

inline F2Poly f2_zero() { return F2Poly{}; }

inline F2Poly f2_one(const GradedRingF2& r) {
  return F2Poly{{Monomial(r.arity(), 0)}};
}

inline F2Poly gen(const GradedRingF2& r, const std::string& name) {
  Monomial m(r.arity(), 0);
  m[r.gen_index(name)] = 1;
  return F2Poly{{m}};
}

// Reduce to the unique normal form. Always processes the currently largest
// pending monomial, so each step strictly shrinks the monomial multiset and
// XOR cancellation is handled exactly.
inline F2Poly normal_form(const F2Poly& p, const GradedRingF2& r) {
  auto cmp = [&r](const Monomial& a, const Monomial& b) { return mono_less(r, a, b); };
  std::set<Monomial, decltype(cmp)> pending(cmp);
  auto toggle = [&pending](const Monomial& m) {
    auto it = pending.find(m);
    if (it == pending.end()) pending.insert(m); else pending.erase(it);
  };
  int cap = degree_cap();
  for (auto& m : p.monomials) {
    if (static_cast<int>(m.size()) != r.arity())
      throw std::invalid_argument("normal_form: monomial arity mismatch");
    toggle(m);
  }
  F2Poly out;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Monomial m = *it;
    pending.erase(it);
    int d = mono_degree(r, m);
    if (d > cap)
      throw std::domain_error("normal_form: degree " + std::to_string(d) +
                              " exceeds the cap " + std::to_string(cap) +
                              " (set PSCV_DEGREE_CAP to raise it)");
    const RewriteRule* hit = nullptr;
    for (auto& rule : r.rules) {
      if (mono_divides(rule.lead, m)) { hit = &rule; break; }
    }
    if (!hit) {
      out.monomials.insert(m);
      continue;
    }
    Monomial q = mono_div(m, hit->lead);
    for (auto& t : hit->tail.monomials) toggle(mono_mul(q, t));
  }
  return out;
}

inline F2Poly mul(const GradedRingF2& r, const F2Poly& a, const F2Poly& b) {
  F2Poly raw;
  for (auto& ma : a.monomials)
    for (auto& mb : b.monomials) f2_toggle(raw.monomials, mono_mul(ma, mb));
  return normal_form(raw, r);
}

// Squaring is the Frobenius over F_2: double every exponent.
inline F2Poly f2_square_raw(const F2Poly& p) {
  F2Poly out;
  for (auto& m : p.monomials) {
    Monomial d(m.size());
    for (size_t i = 0; i < m.size(); ++i) d[i] = 2 * m[i];
    out.monomials.insert(d);
  }
  return out;
}

inline F2Poly pow(const GradedRingF2& r, F2Poly base, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  F2Poly acc = f2_one(r);
  base = normal_form(base, r);
  while (e > 0) {
    if (e & 1) acc = mul(r, acc, base);
    e >>= 1;
    if (e) base = normal_form(f2_square_raw(base), r);
  }
  return acc;
}

inline F2Poly graded_piece(const GradedRingF2& r, const F2Poly& p, int d) {
  F2Poly out;
  for (auto& m : p.monomials)
    if (mono_degree(r, m) == d) out.monomials.insert(m);
  return out;
}

inline bool homogeneous_of_degree(const GradedRingF2& r, const F2Poly& p, int d) {
  for (auto& m : p.monomials)
    if (mono_degree(r, m) != d) return false;
  return true;
}

inline bool reduced_monomial(const GradedRingF2& r, const Monomial& m) {
  for (auto& rule : r.rules)
    if (mono_divides(rule.lead, m)) return false;
  return true;
}

// All reduced monomials of the given total degree, sorted ascending in the
// ring's monomial order. This is the additive basis of the degree-d piece.
inline std::vector<Monomial> basis(const GradedRingF2& r, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m(r.arity(), 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == r.arity()) {
      if (remaining == 0 && reduced_monomial(r, m)) out.push_back(m);
      return;
    }
    int gd = r.generators[i].second;
    for (int e = 0; e * gd <= remaining; ++e) {
      m[i] = e;
      rec(i + 1, remaining - e * gd);
    }
    m[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [&r](const Monomial& a, const Monomial& b) { return mono_less(r, a, b); });
  return out;
}

inline Monomial declared_label(const GradedRingF2& r, const Monomial& m) {
  return r.basis_relabel ? r.basis_relabel(m) : m;
}

// The degree-d basis in its declared labeling (the indexing the dual homology
// classes use; identical to basis() when no relabeling is installed).
inline std::vector<Monomial> declared_basis(const GradedRingF2& r, int d) {
  std::vector<Monomial> out;
  for (auto& m : basis(r, d)) out.push_back(declared_label(r, m));
  std::sort(out.begin(), out.end());
  return out;
}

// Coordinates of a class with respect to the declared basis.
inline std::set<Monomial> express(const GradedRingF2& r, const F2Poly& p) {
  std::set<Monomial> out;
  for (auto& m : normal_form(p, r).monomials) out.insert(declared_label(r, m));
  return out;
}

inline Monomial top_class(const GradedRingF2& r) {
  if (!r.manifold_dim)
    throw std::invalid_argument("top_class: ring carries no manifold dimension");
  auto b = basis(r, *r.manifold_dim);
  if (b.size() != 1)
    throw std::logic_error("top_class: top degree is not one-dimensional");
  return b[0];
}

// Exhaustively checks local confluence on every monomial of degree <= cap:
// all one-step reductions of a monomial must share one normal form. Together
// with the termination order this gives global confluence (all critical
// pairs live in degrees up to the largest pairwise lcm of rule leads).
inline void verify_confluence(const GradedRingF2& r, int cap) {
  if (r.rules.size() < 2) return;
  cap = std::min(cap, degree_cap());
  Monomial m(r.arity(), 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == r.arity()) {
      std::vector<const RewriteRule*> hits;
      for (auto& rule : r.rules)
        if (mono_divides(rule.lead, m)) hits.push_back(&rule);
      if (hits.size() < 2) return;
      bool first = true;
      F2Poly ref;
      for (auto* rule : hits) {
        F2Poly step;
        Monomial q = mono_div(m, rule->lead);
        for (auto& t : rule->tail.monomials) f2_toggle(step.monomials, mono_mul(q, t));
        F2Poly nf = normal_form(step, r);
        if (first) { ref = nf; first = false; }
        else if (nf != ref) {
          std::ostringstream os;
          os << "rewrite system is not confluent at " << F2Poly{{m}};
          throw std::logic_error(os.str());
        }
      }
      return;
    }
    int gd = r.generators[i].second;
    for (int e = 0; e * gd <= remaining; ++e) {
      m[i] = e;
      rec(i + 1, remaining - e * gd);
    }
    m[i] = 0;
  };
  rec(0, cap);
}

struct RingSpec {
  std::vector<std::pair<std::string, int>> generators;
  std::vector<RewriteRule> rules;
  std::vector<int> priority;  // empty means declaration order
  std::optional<int> manifold_dim;
  std::map<std::pair<int, int>, F2Poly> sq_actions;
  std::optional<F2Poly> tangent_w;
  std::function<Monomial(const Monomial&)> basis_relabel;
  int validate_to = -1;  // confluence check depth; -1 derives it from the rules
};

inline GradedRingF2 make_graded_ring(RingSpec spec) {
  GradedRingF2 r;
  r.generators = std::move(spec.generators);
  for (auto& g : r.generators) {
    if (g.first.empty()) throw std::invalid_argument("ring generator needs a name");
    if (g.second < 1) throw std::invalid_argument("ring generator '" + g.first + "' needs positive degree");
  }
  for (int i = 0; i < r.arity(); ++i)
    for (int j = i + 1; j < r.arity(); ++j)
      if (r.generators[i].first == r.generators[j].first)
        throw std::invalid_argument("duplicate generator name '" + r.generators[i].first + "'");

  if (spec.priority.empty()) {
    for (int i = 0; i < r.arity(); ++i) r.priority.push_back(i);
  } else {
    r.priority = std::move(spec.priority);
    std::vector<bool> seen(r.arity(), false);
    if (static_cast<int>(r.priority.size()) != r.arity())
      throw std::invalid_argument("priority must list every generator exactly once");
    for (int g : r.priority) {
      if (g < 0 || g >= r.arity() || seen[g])
        throw std::invalid_argument("priority must be a permutation of the generators");
      seen[g] = true;
    }
  }

  r.rules = std::move(spec.rules);
  for (auto& rule : r.rules) {
    if (static_cast<int>(rule.lead.size()) != r.arity())
      throw std::invalid_argument("rewrite lead has the wrong arity");
    bool lead_nonconstant = false;
    for (int e : rule.lead) {
      if (e < 0) throw std::invalid_argument("rewrite lead has a negative exponent");
      if (e > 0) lead_nonconstant = true;
    }
    if (!lead_nonconstant) throw std::invalid_argument("rewrite lead must be a nonconstant monomial");
    for (auto& t : rule.tail.monomials) {
      if (static_cast<int>(t.size()) != r.arity())
        throw std::invalid_argument("rewrite tail has the wrong arity");
      if (!mono_less(r, t, rule.lead))
        throw std::invalid_argument("rewrite tail is not smaller than its lead; the system would not terminate");
    }
  }

  r.sq_actions = std::move(spec.sq_actions);
  for (auto& [key, val] : r.sq_actions) {
    auto [g, i] = key;
    if (g < 0 || g >= r.arity())
      throw std::invalid_argument("Steenrod action on an unknown generator");
    int d = r.generators[g].second;
    if (d < 2 || i < 1 || i >= d)
      throw std::invalid_argument("Steenrod action index out of range for generator '" + r.generators[g].first + "'");
    if (!homogeneous_of_degree(r, val, d + i))
      throw std::invalid_argument("Steenrod action for '" + r.generators[g].first + "' has the wrong degree");
  }

  int need = 12;
  for (size_t i = 0; i < r.rules.size(); ++i) {
    for (size_t j = i + 1; j < r.rules.size(); ++j) {
      Monomial l(r.arity());
      for (int k = 0; k < r.arity(); ++k)
        l[k] = std::max(r.rules[i].lead[k], r.rules[j].lead[k]);
      need = std::max(need, mono_degree(r, l));
    }
  }
  int cap = spec.validate_to >= 0 ? spec.validate_to : need;
  verify_confluence(r, cap);

  if (spec.manifold_dim) {
    int n = *spec.manifold_dim;
    if (n < 0) throw std::invalid_argument("manifold dimension must be nonnegative");
    r.manifold_dim = n;
    if (basis(r, n).size() != 1)
      throw std::invalid_argument("top degree of a manifold ring must be one-dimensional");
    for (int d = 1; d <= 2; ++d)
      if (!basis(r, n + d).empty())
        throw std::invalid_argument("manifold ring has classes above its dimension");
  }

  r.basis_relabel = std::move(spec.basis_relabel);
  if (r.basis_relabel) {
    for (int d = 0; d <= std::min(cap, 10); ++d) {
      auto b = basis(r, d);
      std::set<Monomial> image;
      for (auto& m : b) {
        Monomial lm = r.basis_relabel(m);
        if (static_cast<int>(lm.size()) != r.arity())
          throw std::invalid_argument("basis relabeling changes arity");
        image.insert(lm);
      }
      if (image.size() != b.size())
        throw std::invalid_argument("basis relabeling is not injective in degree " + std::to_string(d));
    }
  }

  if (spec.tangent_w) r.tangent_w = normal_form(*spec.tangent_w, r);
  return r;
}

// ---------- parsing and printing ----------

// Accepts sums of monomial terms, e.g. "x^2*t + x*t^2", "1", "0". Factors in
// a term may be separated by '*' or whitespace. The result is not reduced.
inline F2Poly parse_poly(const GradedRingF2& r, const std::string& s) {
  F2Poly out;
  std::vector<std::string> terms;
  std::string cur;
  for (char c : s) {
    if (c == '+') { terms.push_back(cur); cur.clear(); }
    else cur.push_back(c);
  }
  terms.push_back(cur);
  for (auto& term : terms) {
    std::vector<std::string> factors;
    std::string f;
    for (char c : term) {
      if (c == ' ' || c == '\t' || c == '*') {
        if (!f.empty()) { factors.push_back(f); f.clear(); }
      } else f.push_back(c);
    }
    if (!f.empty()) factors.push_back(f);
    if (factors.empty()) {
      if (term.find_first_not_of(" \t") == std::string::npos && terms.size() == 1) return out;
      throw std::invalid_argument("empty term in polynomial '" + s + "'");
    }
    if (factors.size() == 1 && factors[0] == "0") continue;
    Monomial m(r.arity(), 0);
    for (auto& fac : factors) {
      if (fac == "1") continue;
      std::string name = fac;
      int e = 1;
      auto caret = fac.find('^');
      if (caret != std::string::npos) {
        name = fac.substr(0, caret);
        try {
          e = std::stoi(fac.substr(caret + 1));
        } catch (const std::exception&) {
          throw std::invalid_argument("bad exponent in '" + fac + "'");
        }
        if (e < 0) throw std::invalid_argument("negative exponent in '" + fac + "'");
      }
      m[r.gen_index(name)] += e;
    }
    f2_toggle(out.monomials, m);
  }
  return out;
}

inline std::string poly_str(const GradedRingF2& r, const F2Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<Monomial> ms(p.monomials.begin(), p.monomials.end());
  std::sort(ms.begin(), ms.end(),
            [&r](const Monomial& a, const Monomial& b) { return mono_less(r, b, a); });
  std::string out;
  for (auto& m : ms) {
    if (!out.empty()) out += " + ";
    std::string term;
    for (int i = 0; i < r.arity(); ++i) {
      if (m[i] == 0) continue;
      if (!term.empty()) term += "*";
      term += r.generators[i].first;
      if (m[i] > 1) term += "^" + std::to_string(m[i]);
    }
    out += term.empty() ? "1" : term;
  }
  return out;
}

// ---------- Steenrod squares ----------

// Total square of a single generator: Sq(g) = g + Sq^1 g + ... + g^2, with
// the intermediate actions supplied by the ring for generators of degree > 1.
inline F2Poly total_sq_generator(const GradedRingF2& r, int g) {
  int d = r.generators[g].second;
  Monomial one_g(r.arity(), 0);
  one_g[g] = 1;
  F2Poly total{{one_g}};
  for (int i = 1; i < d; ++i) {
    auto it = r.sq_actions.find({g, i});
    if (it == r.sq_actions.end())
      throw std::invalid_argument("missing Steenrod action Sq^" + std::to_string(i) +
                                  " for generator '" + r.generators[g].first + "'");
    total = f2_add(total, it->second);
  }
  Monomial sq_g(r.arity(), 0);
  sq_g[g] = 2;
  f2_toggle(total.monomials, sq_g);
  return total;
}

// Sq^i applied monomial by monomial through the Cartan formula: the total
// square is a ring homomorphism, so Sq(m) is a product of generator totals,
// and Sq^i(m) is its graded piece in degree |m| + i.
inline F2Poly sq(const GradedRingF2& r, int i, const F2Poly& p) {
  if (i < 0) throw std::invalid_argument("sq: negative index");
  F2Poly reduced = normal_form(p, r);
  if (i == 0) return reduced;
  F2Poly out;
  for (auto& m : reduced.monomials) {
    F2Poly total = f2_one(r);
    for (int g = 0; g < r.arity(); ++g) {
      if (m[g] == 0) continue;
      total = mul(r, total, pow(r, total_sq_generator(r, g), m[g]));
    }
    out = f2_add(out, graded_piece(r, total, mono_degree(r, m) + i));
  }
  return normal_form(out, r);
}

// ---------- Poincaré pairing and Wu classes ----------

// Intersection pairing of the degree-j and degree-(n-j) bases: entry (row y,
// column b) is the top-class coefficient of b*y.
inline std::vector<std::vector<int>> pairing_matrix(const GradedRingF2& r, int j) {
  if (!r.manifold_dim)
    throw std::invalid_argument("pairing_matrix: ring carries no manifold dimension");
  int n = *r.manifold_dim;
  Monomial t = top_class(r);
  auto bj = basis(r, j), bc = basis(r, n - j);
  std::vector<std::vector<int>> m(bc.size(), std::vector<int>(bj.size(), 0));
  for (size_t row = 0; row < bc.size(); ++row)
    for (size_t col = 0; col < bj.size(); ++col)
      m[row][col] = contains(mul(r, F2Poly{{bj[col]}}, F2Poly{{bc[row]}}), t) ? 1 : 0;
  return m;
}

inline int f2_matrix_rank(std::vector<std::vector<int>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = 0; i < rows; ++i) {
      if (i != rank && m[i][col]) {
        for (size_t k = col; k < cols; ++k) m[i][k] ^= m[rank][k];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

inline bool pairing_nonsingular(const GradedRingF2& r, int j) {
  int n = *r.manifold_dim;
  auto bj = basis(r, j), bc = basis(r, n - j);
  if (bj.size() != bc.size()) return false;
  return f2_matrix_rank(pairing_matrix(r, j)) == static_cast<int>(bj.size());
}

struct WuClasses {
  F2Poly v1, v2;  // Wu classes
  F2Poly w1, w2;  // the corresponding tangent Stiefel-Whitney classes
};

// Solves <v_j . y, [M]> = <Sq^j y, [M]> for all y of complementary degree.
// Throws if the Poincaré pairing of the presentation is degenerate.
inline WuClasses wu_classes(const GradedRingF2& r) {
  if (!r.manifold_dim)
    throw std::invalid_argument("wu_classes: ring carries no manifold dimension");
  int n = *r.manifold_dim;
  Monomial t = top_class(r);
  auto solve = [&](int j) -> F2Poly {
    auto bj = basis(r, j), bc = basis(r, n - j);
    if (bj.size() != bc.size())
      throw std::domain_error("degenerate Poincaré pairing in degree " + std::to_string(j));
    size_t k = bj.size();
    if (k == 0) return f2_zero();
    std::vector<std::vector<int>> aug(k, std::vector<int>(k + 1, 0));
    for (size_t row = 0; row < k; ++row) {
      F2Poly y{{bc[row]}};
      for (size_t col = 0; col < k; ++col)
        aug[row][col] = contains(mul(r, F2Poly{{bj[col]}}, y), t) ? 1 : 0;
      aug[row][k] = contains(sq(r, j, y), t) ? 1 : 0;
    }
    for (size_t col = 0; col < k; ++col) {
      size_t pivot = col;
      while (pivot < k && aug[pivot][col] == 0) ++pivot;
      if (pivot == k)
        throw std::domain_error("degenerate Poincaré pairing in degree " + std::to_string(j));
      std::swap(aug[col], aug[pivot]);
      for (size_t i = 0; i < k; ++i) {
        if (i != col && aug[i][col]) {
          for (size_t c = col; c <= k; ++c) aug[i][c] ^= aug[col][c];
        }
      }
    }
    F2Poly v;
    for (size_t col = 0; col < k; ++col)
      if (aug[col][k]) v.monomials.insert(bj[col]);
    return v;
  };
  WuClasses wu;
  wu.v1 = solve(1);
  wu.v2 = solve(2);
  wu.w1 = wu.v1;
  wu.w2 = normal_form(f2_add(mul(r, wu.v1, wu.v1), wu.v2), r);
  return wu;
}

// Attaches tangent data computed from the Wu classes. Only the degree-1 and
// degree-2 pieces are filled in, which is exactly what spin checks read.
inline GradedRingF2 with_wu_tangent(const GradedRingF2& r) {
  GradedRingF2 out = r;
  WuClasses wu = wu_classes(r);
  out.tangent_w = normal_form(f2_add(f2_add(f2_one(r), wu.w1), wu.w2), r);
  return out;
}

inline bool is_spin(const GradedRingF2& r) {
  if (!r.tangent_w)
    throw std::invalid_argument("is_spin: ring carries no tangent data");
  F2Poly w = normal_form(*r.tangent_w, r);
  return graded_piece(r, w, 1).is_zero() && graded_piece(r, w, 2).is_zero();
}

// ---------- projective bundles ----------

// A real bundle described by the first Stiefel-Whitney classes of its line
// summands plus a number of trivial summands.
struct BundleDesc {
  std::vector<F2Poly> line_w1s;
  int trivial_count = 0;
};

// A real bundle described only by its total Stiefel-Whitney class and rank
// (covers non-split bundles such as stable tangent summands).
struct BundleClass {
  F2Poly total_w;
  int rank = 0;
};

inline BundleClass whitney_class(const GradedRingF2& base, const BundleDesc& d) {
  if (d.trivial_count < 0)
    throw std::invalid_argument("whitney_class: negative trivial summand count");
  F2Poly total = f2_one(base);
  for (auto& w1 : d.line_w1s) {
    if (!homogeneous_of_degree(base, normal_form(w1, base), 1))
      throw std::invalid_argument("whitney_class: line summand class is not of degree 1");
    total = mul(base, total, f2_add(f2_one(base), w1));
  }
  return BundleClass{total, static_cast<int>(d.line_w1s.size()) + d.trivial_count};
}

struct ProjectiveBundle {
  GradedRingF2 ring;
  F2Poly w1, w2;  // tangent classes of the total space by the closed formulas
};

// Real projectivization of a bundle over a manifold ring. The fiber class t
// satisfies t^rank + w_1 t^(rank-1) + ... + w_rank = 0, and the tangent class
// of the total space is w(base) * sum_k w_k (1+t)^(rank-k).
inline ProjectiveBundle projectivize(const GradedRingF2& base, const BundleClass& pi,
                                     const std::string& fiber_name) {
  if (pi.rank < 1)
    throw std::invalid_argument("projectivize: bundle rank must be at least 1");
  if (!base.manifold_dim || !base.tangent_w)
    throw std::invalid_argument("projectivize: base ring needs manifold dimension and tangent data");
  for (auto& g : base.generators)
    if (g.first == fiber_name)
      throw std::invalid_argument("projectivize: fiber name '" + fiber_name + "' is already a generator");
  if (graded_piece(base, normal_form(pi.total_w, base), 0) != f2_one(base))
    throw std::invalid_argument("projectivize: total class must have constant term 1");

  int a = base.arity();
  int n = pi.rank;
  auto ext = [a](const F2Poly& p) {
    F2Poly out;
    for (auto& m : p.monomials) {
      Monomial e = m;
      e.push_back(0);
      out.monomials.insert(e);
    }
    return out;
  };

  RingSpec s;
  s.generators = base.generators;
  s.generators.push_back({fiber_name, 1});
  for (auto& rule : base.rules)
    s.rules.push_back({[&] { Monomial l = rule.lead; l.push_back(0); return l; }(), ext(rule.tail)});
  F2Poly w_total = normal_form(pi.total_w, base);
  Monomial fiber_lead(a + 1, 0);
  fiber_lead[a] = n;
  F2Poly fiber_tail;
  for (int k = 1; k <= n; ++k) {
    for (auto& m : graded_piece(base, w_total, k).monomials) {
      Monomial e = m;
      e.push_back(n - k);
      fiber_tail.monomials.insert(e);
    }
  }
  s.rules.push_back({fiber_lead, fiber_tail});
  s.priority.push_back(a);
  for (int g : base.priority) s.priority.push_back(g);
  s.manifold_dim = *base.manifold_dim + n - 1;
  for (auto& [key, val] : base.sq_actions) s.sq_actions[key] = ext(val);
  if (base.basis_relabel) {
    auto br = base.basis_relabel;
    s.basis_relabel = [br, a](const Monomial& m) {
      Monomial head(m.begin(), m.begin() + a);
      Monomial out = br(head);
      out.push_back(m[a]);
      return out;
    };
  }
  GradedRingF2 ring = make_graded_ring(std::move(s));

  F2Poly t = gen(ring, fiber_name);
  F2Poly one_plus_t = f2_add(f2_one(ring), t);
  F2Poly sum = f2_zero();
  F2Poly tpow = f2_one(ring);  // (1+t)^(n-k), built from k = n downward
  for (int k = n; k >= 0; --k) {
    sum = f2_add(sum, mul(ring, ext(graded_piece(base, w_total, k)), tpow));
    if (k) tpow = mul(ring, tpow, one_plus_t);
  }
  ring.tangent_w = mul(ring, ext(normal_form(*base.tangent_w, base)), sum);

  F2Poly b1 = ext(graded_piece(base, *base.tangent_w, 1));
  F2Poly b2 = ext(graded_piece(base, *base.tangent_w, 2));
  F2Poly p1 = ext(graded_piece(base, w_total, 1));
  F2Poly p2 = ext(graded_piece(base, w_total, 2));
  F2Poly nt = (n % 2) ? t : f2_zero();
  F2Poly w1 = normal_form(f2_add(f2_add(p1, b1), nt), ring);
  F2Poly w2 = f2_add(b2, mul(ring, b1, f2_add(nt, p1)));
  if ((n * (n - 1) / 2) % 2) w2 = f2_add(w2, mul(ring, t, t));
  if ((n - 1) % 2) w2 = f2_add(w2, mul(ring, p1, t));
  w2 = normal_form(f2_add(w2, p2), ring);
  return ProjectiveBundle{std::move(ring), w1, w2};
}

inline ProjectiveBundle projectivize(const GradedRingF2& base, const BundleDesc& d,
                                     const std::string& fiber_name) {
  return projectivize(base, whitney_class(base, d), fiber_name);
}

// Splits trivial summands off the stable tangent bundle: valid exactly when
// the tangent classes above the requested rank all vanish.
inline BundleClass stable_tangent_bundle(const GradedRingF2& r, int rank) {
  if (!r.manifold_dim || !r.tangent_w)
    throw std::invalid_argument("stable_tangent_bundle: ring needs manifold dimension and tangent data");
  if (rank < 1 || rank > *r.manifold_dim)
    throw std::invalid_argument("stable_tangent_bundle: rank out of range");
  F2Poly w = normal_form(*r.tangent_w, r);
  for (int d = rank + 1; d <= *r.manifold_dim; ++d)
    if (!graded_piece(r, w, d).is_zero())
      throw std::invalid_argument("stable_tangent_bundle: tangent class in degree " +
                                  std::to_string(d) + " obstructs rank " + std::to_string(rank));
  return BundleClass{w, rank};
}

// ---------- products ----------

inline GradedRingF2 ring_product(const GradedRingF2& a, const GradedRingF2& b) {
  int na = a.arity(), nb = b.arity();
  auto ext_a = [na, nb](const F2Poly& p) {
    F2Poly out;
    for (auto& m : p.monomials) {
      Monomial e = m;
      e.resize(na + nb, 0);
      out.monomials.insert(e);
    }
    return out;
  };
  auto ext_b = [na, nb](const F2Poly& p) {
    F2Poly out;
    for (auto& m : p.monomials) {
      Monomial e(na, 0);
      e.insert(e.end(), m.begin(), m.end());
      out.monomials.insert(e);
    }
    return out;
  };
  RingSpec s;
  s.generators = a.generators;
  for (auto& g : b.generators) s.generators.push_back(g);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      if (a.generators[i].first == b.generators[j].first)
        throw std::invalid_argument("ring_product: generator name '" + a.generators[i].first +
                                    "' appears in both factors");
  for (auto& rule : a.rules) {
    Monomial l = rule.lead;
    l.resize(na + nb, 0);
    s.rules.push_back({l, ext_a(rule.tail)});
  }
  for (auto& rule : b.rules) {
    Monomial l(na, 0);
    l.insert(l.end(), rule.lead.begin(), rule.lead.end());
    s.rules.push_back({l, ext_b(rule.tail)});
  }
  for (int g : a.priority) s.priority.push_back(g);
  for (int g : b.priority) s.priority.push_back(na + g);
  if (a.manifold_dim && b.manifold_dim)
    s.manifold_dim = *a.manifold_dim + *b.manifold_dim;
  for (auto& [key, val] : a.sq_actions) s.sq_actions[key] = ext_a(val);
  for (auto& [key, val] : b.sq_actions) s.sq_actions[{key.first + na, key.second}] = ext_b(val);
  if (a.basis_relabel || b.basis_relabel) {
    auto ra = a.basis_relabel, rb = b.basis_relabel;
    s.basis_relabel = [ra, rb, na](const Monomial& m) {
      Monomial ha(m.begin(), m.begin() + na), hb(m.begin() + na, m.end());
      Monomial out = ra ? ra(ha) : ha;
      Monomial tb = rb ? rb(hb) : hb;
      out.insert(out.end(), tb.begin(), tb.end());
      return out;
    };
  }
  GradedRingF2 r = make_graded_ring(std::move(s));
  if (a.tangent_w && b.tangent_w)
    r.tangent_w = mul(r, ext_a(*a.tangent_w), ext_b(*b.tangent_w));
  return r;
}

// ---------- ring homomorphisms ----------

struct RingMap {
  GradedRingF2 source, target;
  std::vector<F2Poly> images;  // one per source generator, reduced in target
};

inline F2Poly apply(const RingMap& f, const F2Poly& p) {
  F2Poly out;
  for (auto& m : p.monomials) {
    if (static_cast<int>(m.size()) != f.source.arity())
      throw std::invalid_argument("apply: monomial arity does not match the map's source");
    F2Poly acc = f2_one(f.target);
    for (int g = 0; g < f.source.arity(); ++g) {
      if (m[g] == 0) continue;
      acc = mul(f.target, acc, pow(f.target, f.images[g], m[g]));
    }
    out = f2_add(out, acc);
  }
  return normal_form(out, f.target);
}

inline RingMap make_ring_map(GradedRingF2 source, GradedRingF2 target,
                             std::vector<F2Poly> images) {
  if (images.size() != static_cast<size_t>(source.arity()))
    throw std::invalid_argument("ring map needs one image per source generator");
  RingMap f{std::move(source), std::move(target), {}};
  f.images.reserve(images.size());
  for (size_t g = 0; g < images.size(); ++g) {
    F2Poly img = normal_form(images[g], f.target);
    if (!homogeneous_of_degree(f.target, img, f.source.generators[g].second))
      throw std::invalid_argument("ring map image of '" + f.source.generators[g].first +
                                  "' is not homogeneous of its degree");
    f.images.push_back(img);
  }
  for (auto& rule : f.source.rules) {
    F2Poly lhs = apply(f, F2Poly{{rule.lead}});
    F2Poly rhs = apply(f, rule.tail);
    if (lhs != rhs)
      throw std::invalid_argument("ring map does not respect the relation with lead " +
                                  poly_str(f.source, F2Poly{{rule.lead}}));
  }
  return f;
}

// Checks naturality of Sq^i along the map on a given class.
inline bool sq_natural(const RingMap& f, int i, const F2Poly& p) {
  return apply(f, sq(f.source, i, p)) == sq(f.target, i, apply(f, p));
}

// Support of the image of the fundamental class under the map dual to f: a
// declared-basis monomial of the source contributes exactly when its image
// hits the top class of the target manifold.
inline F2Poly pushforward_fundamental(const RingMap& f) {
  if (!f.target.manifold_dim)
    throw std::invalid_argument("pushforward_fundamental: target carries no manifold dimension");
  int n = *f.target.manifold_dim;
  Monomial t = top_class(f.target);
  F2Poly out;
  for (auto& m : basis(f.source, n)) {
    if (contains(apply(f, F2Poly{{m}}), t))
      out.monomials.insert(declared_label(f.source, m));
  }
  return out;
}

// GF(2) rank of a family of classes (written in any common labeling).
inline int f2_rank(const std::vector<F2Poly>& v) {
  std::map<Monomial, size_t> index;
  for (auto& p : v)
    for (auto& m : p.monomials) index.emplace(m, index.size());
  std::vector<std::vector<int>> rows(v.size(), std::vector<int>(index.size(), 0));
  for (size_t i = 0; i < v.size(); ++i)
    for (auto& m : v[i].monomials) rows[i][index[m]] = 1;
  return f2_matrix_rank(std::move(rows));
}

// ---------- presets ----------

inline GradedRingF2 point_ring() {
  RingSpec s;
  s.manifold_dim = 0;
  s.tangent_w = F2Poly{{Monomial{}}};
  return make_graded_ring(std::move(s));
}

// Real projective space RP^n with its total tangent class (1+x)^(n+1).
inline GradedRingF2 rp_ring(int n, const std::string& name = "x") {
  if (n < 0) throw std::invalid_argument("rp_ring: dimension must be nonnegative");
  RingSpec s;
  s.generators = {{name, 1}};
  s.rules = {{Monomial{n + 1}, f2_zero()}};
  s.manifold_dim = n;
  GradedRingF2 r = make_graded_ring(std::move(s));
  r.tangent_w = pow(r, f2_add(f2_one(r), gen(r, name)), n + 1);
  return r;
}

// Polynomial ring of the classifying space of a rank-k elementary abelian
// 2-group: generators x1..xk of degree 1, no relations.
inline GradedRingF2 bv_ring(int k) {
  if (k < 1) throw std::invalid_argument("bv_ring: rank must be at least 1");
  RingSpec s;
  for (int i = 1; i <= k; ++i) s.generators.push_back({"x" + std::to_string(i), 1});
  return make_graded_ring(std::move(s));
}

// Classifying-space cohomology of the dihedral 2-groups (independent of the
// group's order): generators alpha, beta of degree 1 and delta of degree 2
// with beta^2 = alpha*beta, Sq^1(delta) = alpha*delta. Reduced monomials
// alpha^a*beta*delta^j are relabeled to the declared basis beta^(a+1)*delta^j.
inline GradedRingF2 bd_ring() {
  RingSpec s;
  s.generators = {{"alpha", 1}, {"beta", 1}, {"delta", 2}};
  s.priority = {1, 0, 2};
  s.rules = {{Monomial{0, 2, 0}, F2Poly{{Monomial{1, 1, 0}}}}};
  s.sq_actions[{2, 1}] = F2Poly{{Monomial{1, 0, 1}}};
  s.basis_relabel = [](const Monomial& m) {
    if (m[1] == 1) return Monomial{0, m[0] + 1, m[2]};
    return m;
  };
  return make_graded_ring(std::move(s));
}

// Classifying-space cohomology of the semidihedral group of order 16:
// generators x, y of degree 1, u of degree 3, P of degree 4, with relations
// x*y = x^2, x^3 = 0, x*u = 0, u^2 = (x^2+y^2)*P, and Steenrod actions
// Sq^1 u = 0, Sq^2 u = y^2 u + x P + y P, Sq^1 P = 0, Sq^2 P = u^2,
// Sq^3 P = 0.  The value of Sq^2 u is forced by naturality along the
// restriction to the dihedral subgroup (u -> alpha delta, where
// Sq^2(alpha delta) = alpha^3 delta + alpha delta^2) together with the
// circle-bundle classifying map; it also closes the Adem relation
// Sq^1 Sq^2 u = Sq^3 u = u^2.
inline GradedRingF2 bsd_ring() {
  RingSpec s;
  s.generators = {{"x", 1}, {"y", 1}, {"u", 3}, {"P", 4}};
  s.priority = {2, 1, 0, 3};
  s.rules = {
      {Monomial{1, 1, 0, 0}, F2Poly{{Monomial{2, 0, 0, 0}}}},
      {Monomial{3, 0, 0, 0}, f2_zero()},
      {Monomial{1, 0, 1, 0}, f2_zero()},
      {Monomial{0, 0, 2, 0}, F2Poly{{Monomial{2, 0, 0, 1}, Monomial{0, 2, 0, 1}}}},
  };
  s.sq_actions[{2, 1}] = f2_zero();
  s.sq_actions[{2, 2}] =
      F2Poly{{Monomial{0, 2, 1, 0}, Monomial{1, 0, 0, 1}, Monomial{0, 1, 0, 1}}};
  s.sq_actions[{3, 1}] = f2_zero();
  s.sq_actions[{3, 2}] = F2Poly{{Monomial{0, 0, 2, 0}}};
  s.sq_actions[{3, 3}] = f2_zero();
  return make_graded_ring(std::move(s));
}

// Cohomology of the orientable circle-bundle quotient of dimension dim = 2n
// attached to the dihedral groups: generators sigma, tau of degree 1 and x of
// degree 2 with sigma^2 = 0, tau^2 = sigma*tau, x^n = 0, Sq^1 x = x*sigma.
inline GradedRingF2 dihedral_circle_bundle_ring(int dim) {
  if (dim < 4 || dim % 2)
    throw std::invalid_argument("dihedral_circle_bundle_ring: dimension must be even and at least 4");
  int n = dim / 2;
  RingSpec s;
  s.generators = {{"sigma", 1}, {"tau", 1}, {"x", 2}};
  s.priority = {1, 0, 2};
  s.rules = {
      {Monomial{2, 0, 0}, f2_zero()},
      {Monomial{0, 2, 0}, F2Poly{{Monomial{1, 1, 0}}}},
      {Monomial{0, 0, n}, f2_zero()},
  };
  s.sq_actions[{2, 1}] = F2Poly{{Monomial{1, 0, 1}}};
  s.manifold_dim = dim;
  return make_graded_ring(std::move(s));
}

// Same shape for the semidihedral group of order 16; here the dimension is
// divisible by 8 and the degree-2 generator is called Z.
inline GradedRingF2 sd16_circle_bundle_ring(int dim) {
  if (dim < 8 || dim % 8)
    throw std::invalid_argument("sd16_circle_bundle_ring: dimension must be a positive multiple of 8");
  int n = dim / 2;
  RingSpec s;
  s.generators = {{"sigma", 1}, {"tau", 1}, {"Z", 2}};
  s.priority = {1, 0, 2};
  s.rules = {
      {Monomial{2, 0, 0}, f2_zero()},
      {Monomial{0, 2, 0}, F2Poly{{Monomial{1, 1, 0}}}},
      {Monomial{0, 0, n}, f2_zero()},
  };
  s.sq_actions[{2, 1}] = F2Poly{{Monomial{1, 0, 1}}};
  s.manifold_dim = dim;
  return make_graded_ring(std::move(s));
}

// ---------- preset maps ----------

// Restriction to the rank-2 elementary abelian subgroup generated by the two
// commuting reflections: alpha -> x1, beta -> 0, delta -> x2(x1+x2).
inline RingMap restrict_bd_to_v2() {
  auto src = bd_ring();
  auto tgt = bv_ring(2);
  return make_ring_map(std::move(src), std::move(tgt),
                       {F2Poly{{Monomial{1, 0}}}, f2_zero(),
                        F2Poly{{Monomial{1, 1}, Monomial{0, 2}}}});
}

// Restriction to the other conjugacy class of rank-2 elementary abelian
// subgroups: alpha -> x1, beta -> x1, delta -> x2(x1+x2).
inline RingMap restrict_bd_to_v2_prime() {
  auto src = bd_ring();
  auto tgt = bv_ring(2);
  return make_ring_map(std::move(src), std::move(tgt),
                       {F2Poly{{Monomial{1, 0}}}, F2Poly{{Monomial{1, 0}}},
                        F2Poly{{Monomial{1, 1}, Monomial{0, 2}}}});
}

// Restriction along the index-2 dihedral subgroup containing the preferred
// reflection: alpha -> alpha, beta -> 0, delta -> delta.
inline RingMap restrict_bd_to_d_even() {
  return make_ring_map(bd_ring(), bd_ring(),
                       {gen(bd_ring(), "alpha"), f2_zero(), gen(bd_ring(), "delta")});
}

// Restriction along the other index-2 dihedral subgroup: beta -> alpha.
inline RingMap restrict_bd_to_d_odd() {
  return make_ring_map(bd_ring(), bd_ring(),
                       {gen(bd_ring(), "alpha"), gen(bd_ring(), "alpha"),
                        gen(bd_ring(), "delta")});
}

// Restriction from the order-16 semidihedral group to its dihedral subgroup
// of order 8: x -> 0, y -> alpha, u -> alpha*delta, P -> delta^2.
inline RingMap restrict_bsd_to_bd() {
  return make_ring_map(bsd_ring(), bd_ring(),
                       {f2_zero(), F2Poly{{Monomial{1, 0, 0}}},
                        F2Poly{{Monomial{1, 0, 1}}}, F2Poly{{Monomial{0, 0, 2}}}});
}

// Classifying map of the dihedral circle-bundle quotient: alpha -> sigma,
// beta -> tau, delta -> x.
inline RingMap classify_dihedral_circle_bundle(int dim) {
  return make_ring_map(bd_ring(), dihedral_circle_bundle_ring(dim),
                       {F2Poly{{Monomial{1, 0, 0}}}, F2Poly{{Monomial{0, 1, 0}}},
                        F2Poly{{Monomial{0, 0, 1}}}});
}

// Classifying map of the semidihedral circle-bundle quotient: x -> tau,
// y -> sigma, u -> Z(tau+sigma), P -> Z^2 + Z*tau^2. The last image is the
// one compatible with Sq^2; the naive Z^2 also satisfies the relations but
// fails naturality, which the tests demonstrate.
inline RingMap classify_sd16_circle_bundle(int dim) {
  return make_ring_map(bsd_ring(), sd16_circle_bundle_ring(dim),
                       {F2Poly{{Monomial{0, 1, 0}}}, F2Poly{{Monomial{1, 0, 0}}},
                        F2Poly{{Monomial{0, 1, 1}, Monomial{1, 0, 1}}},
                        F2Poly{{Monomial{0, 0, 2}, Monomial{0, 2, 1}}}});
}

// Projectivization of twice the canonical line bundle plus trivials over
// RP^a, the spin representative dual to sums of two-coordinate classes.
// Returns the classifying map from the rank-2 polynomial ring; its target
// carries the manifold's ring and tangent data.
inline RingMap m_ab_map(int a, int n) {
  if (a < 5 || a % 4 != 1)
    throw std::invalid_argument("m_ab_map: first parameter must be 1 mod 4 and at least 5");
  if (n % 4 != 0 || n < a + 3)
    throw std::invalid_argument("m_ab_map: total dimension must be 0 mod 4 and at least a+3");
  auto base = rp_ring(a, "x");
  F2Poly x = gen(base, "x");
  auto pb = projectivize(base, BundleDesc{{x, x}, n - 1 - a}, "y");
  return make_ring_map(bv_ring(2), std::move(pb.ring),
                       {F2Poly{{Monomial{1, 0}}}, F2Poly{{Monomial{0, 1}}}});
}

// Iterated projective-bundle representatives for three-coordinate classes:
// an RP^b bundle over RP^a followed by an RP^c bundle over the total space.
// The two small sporadic cases split a rank-4 summand off the stable tangent
// bundle of the intermediate space. Returns the classifying map from the
// rank-3 polynomial ring.
inline RingMap m_abc_map(int a, int b, int c) {
  auto finish = [](ProjectiveBundle M) {
    return make_ring_map(bv_ring(3), std::move(M.ring),
                         {F2Poly{{Monomial{1, 0, 0}}}, F2Poly{{Monomial{0, 1, 0}}},
                          F2Poly{{Monomial{0, 0, 1}}}});
  };
  if (a == 2 && b == 3 && c == 3) {
    auto base = rp_ring(2, "x");
    F2Poly x = gen(base, "x");
    auto N = projectivize(base, BundleDesc{{x, x, x}, 1}, "t");
    auto T = stable_tangent_bundle(N.ring, 4);
    return finish(projectivize(N.ring, T, "u"));
  }
  if (a == 4 && b == 3 && c == 3) {
    auto base = rp_ring(4, "x");
    F2Poly x = gen(base, "x");
    auto N = projectivize(base, BundleDesc{{x}, 3}, "t");
    auto T = stable_tangent_bundle(N.ring, 4);
    return finish(projectivize(N.ring, T, "u"));
  }
  if (a < 2 || a % 2)
    throw std::invalid_argument("m_abc_map: first parameter must be even and at least 2");
  if (b < 3 || b % 2 == 0 || c % 4 != 3)
    throw std::invalid_argument("m_abc_map: need b odd >= 3 and c = 3 mod 4");
  if (b % 4 == 1 && b < 5)
    throw std::invalid_argument("m_abc_map: b = 1 mod 4 requires b >= 5");
  if (b % 4 == 3 && c < 7)
    throw std::invalid_argument("m_abc_map: b = 3 mod 4 requires c >= 7 (smaller cases are sporadic)");
  int n = a + b + c;
  int g_n = (n % 4 == 0) ? 1 : 3;
  int g_m = (b % 4 == 1) ? 1 : 3;
  auto base = rp_ring(a, "x");
  F2Poly x = gen(base, "x");
  auto N = projectivize(base, BundleDesc{std::vector<F2Poly>(g_n, x), b + 1 - g_n}, "t");
  F2Poly xn = gen(N.ring, "x"), tn = gen(N.ring, "t");
  std::vector<F2Poly> lines(g_m, f2_add(xn, tn));
  lines.push_back(tn);
  lines.push_back(xn);
  auto M = projectivize(N.ring, BundleDesc{lines, c + 1 - g_m - 2}, "u");
  return finish(std::move(M));
}

}  // namespace pscv
