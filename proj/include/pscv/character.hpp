#pragma once

#include "pscv/cyclotomic.hpp"
#include "pscv/group.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace pscv {

// One irreducible character: a name plus one exact value per conjugacy class,
// in the table's fixed class order.
struct Character {
  std::string name;
  std::vector<CycNum> values;

  long long degree() const {
    auto d = values.at(0).as_rational();
    if (!d || den(*d) != 1 || *d <= 0) throw std::logic_error("character degree must be a positive integer");
    return static_cast<long long>(num(*d));
  }
};

// The full character table of a preset group, rows and columns in the fixed
// preset order so that comparisons against the printed tables are positional.
struct CharTable {
  Group group;
  std::vector<std::vector<int>> classes;
  std::vector<std::string> class_names;
  std::vector<int> class_index;  // element -> class position
  std::vector<Character> rows;

  int class_of(int element) const { return class_index.at(element); }

  int row_index(const std::string& name) const {
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i].name == name) return int(i);
    return -1;
  }

  const Character& row(const std::string& name) const {
    int i = row_index(name);
    if (i < 0) throw std::invalid_argument("unknown character '" + name + "' in " + group.name());
    return rows[i];
  }

  CycNum value(const std::string& name, int element) const { return row(name).values[class_of(element)]; }
};

namespace detail {

inline std::string subset_letters(int mask, int rank) {
  static const char* letters = "xyzw";
  std::string s;
  for (int i = 0; i < rank; ++i)
    if (mask >> i & 1) s += letters[i];
  return s;
}

inline CycNum sign_num(int s) { return CycNum(BigRat(s)); }

}  // namespace detail

inline CharTable char_table(const Group& g) {
  CharTable t;
  t.group = g;
  t.classes = conjugacy_classes(g);
  t.class_index.assign(g.order, -1);
  for (size_t c = 0; c < t.classes.size(); ++c)
    for (int e : t.classes[c]) t.class_index[e] = int(c);
  for (auto& cls : t.classes) t.class_names.push_back((cls.size() > 1 ? "[" + g.element_str(cls[0]) + "]" : g.element_str(cls[0])));

  int nc = int(t.classes.size());
  auto row_from = [&](std::string name, std::vector<CycNum> vals) {
    t.rows.push_back(Character{std::move(name), std::move(vals)});
  };

  switch (g.family) {
    case GroupFamily::cyclic: {
      int l = g.order;
      for (int m = 0; m < l; ++m) {
        std::vector<CycNum> vals;
        for (int j = 0; j < l; ++j) vals.push_back(root_of_unity(l, m * j));
        row_from("rho_" + std::to_string(m), std::move(vals));
      }
      break;
    }
    case GroupFamily::elementary_abelian: {
      int n = g.param;
      // Row order: for rank 2 the three hat characters are named after the
      // generator of their kernel, matching the printed 4x4 table; for other
      // ranks the hat names list the generators the character is -1 on.
      std::vector<int> duals;
      for (int a = 0; a < (1 << n); ++a) duals.push_back(a);
      std::stable_sort(duals.begin(), duals.end(),
                       [](int a, int b) { return std::popcount(unsigned(a)) < std::popcount(unsigned(b)); });
      if (n == 2) duals = {0, 2, 1, 3};
      for (int a : duals) {
        std::vector<CycNum> vals;
        for (int c = 0; c < nc; ++c) {
          int e = t.classes[c][0];
          vals.push_back(detail::sign_num(std::popcount(unsigned(a & e)) % 2 ? -1 : 1));
        }
        std::string name = "1";
        if (a != 0) {
          if (n == 2) name = std::vector<std::string>{"", "y", "x", "z"}[a] + "-hat";
          else name = detail::subset_letters(a, n) + "-hat";
        }
        row_from(std::move(name), std::move(vals));
      }
      break;
    }
    case GroupFamily::dihedral: {
      int R = g.order / 2;
      auto one_dim = [&](std::string name, int on_rot_j, int on_s, int on_ws) {
        std::vector<CycNum> vals;
        vals.push_back(detail::sign_num(1));
        vals.push_back(detail::sign_num(on_rot_j ? (R / 2) % 2 ? -1 : 1 : 1));
        for (int j = 1; j < R / 2; ++j) vals.push_back(detail::sign_num(on_rot_j && j % 2 ? -1 : 1));
        vals.push_back(detail::sign_num(on_s));
        vals.push_back(detail::sign_num(on_ws));
        row_from(std::move(name), std::move(vals));
      };
      one_dim("rho_0", 0, 1, 1);
      one_dim("omega-hat", 0, -1, -1);
      one_dim("s-hat", 1, 1, -1);
      one_dim("omegas-hat", 1, -1, 1);
      for (int k = 1; k < R / 2; ++k) {
        std::vector<CycNum> vals;
        vals.push_back(detail::sign_num(2));
        vals.push_back(detail::sign_num(k % 2 ? -2 : 2));
        for (int j = 1; j < R / 2; ++j) vals.push_back(root_of_unity(R, j * k) + root_of_unity(R, R - j * k % R));
        vals.push_back(detail::sign_num(0));
        vals.push_back(detail::sign_num(0));
        row_from("sigma_" + std::to_string(k), std::move(vals));
      }
      break;
    }
    case GroupFamily::quaternion8: {
      auto pm = [&](std::string name, int a, int b, int c, int d, int e) {
        row_from(std::move(name), {detail::sign_num(a), detail::sign_num(b), detail::sign_num(c),
                                   detail::sign_num(d), detail::sign_num(e)});
      };
      pm("rho_0", 1, 1, 1, 1, 1);
      pm("kappa_1", 1, 1, -1, 1, -1);
      pm("kappa_2", 1, 1, 1, -1, -1);
      pm("kappa_3", 1, 1, -1, -1, 1);
      pm("tau", 2, -2, 0, 0, 0);
      break;
    }
    case GroupFamily::semidihedral16: {
      auto pm = [&](std::string name, std::vector<int> v) {
        std::vector<CycNum> vals;
        for (int x : v) vals.push_back(detail::sign_num(x));
        row_from(std::move(name), std::move(vals));
      };
      pm("rho_0", {1, 1, 1, 1, 1, 1, 1});
      pm("chi_2", {1, 1, 1, 1, 1, -1, -1});
      pm("chi_3", {1, 1, -1, 1, -1, 1, -1});
      pm("chi_4", {1, 1, -1, 1, -1, -1, 1});
      CycNum sqrt2i = root_of_unity(8, 1) + root_of_unity(8, 3);
      CycNum two = detail::sign_num(2);
      row_from("chi_rho", {two, -two, sqrt2i, CycNum(), -sqrt2i, CycNum(), CycNum()});
      pm("chi_rho2", {2, 2, 0, -2, 0, 0, 0});
      row_from("chi_rho5", {two, -two, -sqrt2i, CycNum(), sqrt2i, CycNum(), CycNum()});
      break;
    }
  }
  return t;
}

// Cached immutable tables, safe for concurrent first access.
inline const CharTable& table_for(const Group& g) {
  static std::map<std::pair<int, int>, std::unique_ptr<CharTable>> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_pair(int(g.family), g.param);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<CharTable>(char_table(g))).first;
  return *it->second;
}

// Standard inner product of two class functions given by per-class values.
inline CycNum inner_product(const CharTable& t, const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  CycNum sum;
  for (size_t c = 0; c < t.classes.size(); ++c)
    sum = sum + BigRat(long(t.classes[c].size())) * (a[c] * conj(b[c]));
  return BigRat(1, t.group.order) * sum;
}

// Frobenius-Schur indicator |G|^{-1} sum chi(g^2): 1 real, 0 complex, -1 quaternion.
inline int fs_indicator(const CharTable& t, const Character& chi) {
  CycNum sum;
  for (int g = 0; g < t.group.order; ++g) sum = sum + chi.values[t.class_of(t.group.mul(g, g))];
  auto v = (BigRat(1, t.group.order) * sum).as_rational();
  if (!v || den(*v) != 1 || *v < -1 || *v > 1) throw std::logic_error("indicator must be -1, 0, or 1");
  return int(num(*v));
}

inline int fs_indicator(const CharTable& t, const std::string& name) { return fs_indicator(t, t.row(name)); }

// Determinant of the square character-table matrix, by Gaussian elimination
// over the cyclotomic field.
inline CycNum char_table_det(const Group& g) {
  const CharTable& t = table_for(g);
  size_t n = t.rows.size();
  std::vector<std::vector<CycNum>> m(n);
  for (size_t i = 0; i < n; ++i) m[i] = t.rows[i].values;
  CycNum det(BigRat(1));
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return CycNum();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    CycNum inv = invert(m[col][col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      CycNum f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return det;
}

// An integer combination of irreducibles, stored by decomposition so that
// restriction and products stay exact and any non-integral decomposition is
// detected immediately.
struct VirtualChar {
  Group group;
  std::map<std::string, long long> combo;  // zero multiplicities absent

  static VirtualChar zero(const Group& g) { return VirtualChar{g, {}}; }

  static VirtualChar irreducible(const Group& g, const std::string& name, long long mult = 1) {
    table_for(g).row(name);  // validate the name
    VirtualChar v{g, {}};
    if (mult != 0) v.combo[name] = mult;
    return v;
  }

  static VirtualChar trivial(const Group& g, long long mult = 1) {
    return irreducible(g, table_for(g).rows[0].name, mult);
  }

  bool is_zero() const { return combo.empty(); }

  long long vdim() const {
    const CharTable& t = table_for(group);
    long long d = 0;
    for (auto& [name, mult] : combo) d += mult * t.row(name).degree();
    return d;
  }

  std::vector<CycNum> class_values() const {
    const CharTable& t = table_for(group);
    std::vector<CycNum> vals(t.classes.size());
    for (auto& [name, mult] : combo) {
      const Character& chi = t.row(name);
      for (size_t c = 0; c < vals.size(); ++c) vals[c] = vals[c] + BigRat(mult) * chi.values[c];
    }
    return vals;
  }

  CycNum value_at(int element) const {
    const CharTable& t = table_for(group);
    CycNum v;
    for (auto& [name, mult] : combo) v = v + BigRat(mult) * t.row(name).values[t.class_of(element)];
    return v;
  }

  std::string str() const {
    if (combo.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [name, mult] : combo) {
      if (!first) os << (mult > 0 ? " + " : " - ");
      else if (mult < 0) os << "-";
      long long a = mult > 0 ? mult : -mult;
      if (a != 1) os << a << "*";
      os << name;
      first = false;
    }
    return os.str();
  }
};

inline VirtualChar operator+(const VirtualChar& a, const VirtualChar& b) {
  if (a.group != b.group) throw std::invalid_argument("virtual characters live on different groups");
  VirtualChar r = a;
  for (auto& [name, mult] : b.combo) {
    long long m = (r.combo[name] += mult);
    if (m == 0) r.combo.erase(name);
  }
  return r;
}

inline VirtualChar operator-(const VirtualChar& a) {
  VirtualChar r = a;
  for (auto& [name, mult] : r.combo) mult = -mult;
  return r;
}

inline VirtualChar operator-(const VirtualChar& a, const VirtualChar& b) { return a + (-b); }

inline VirtualChar operator*(long long s, const VirtualChar& a) {
  VirtualChar r = a;
  if (s == 0) return VirtualChar::zero(a.group);
  for (auto& [name, mult] : r.combo) mult *= s;
  return r;
}

inline bool operator==(const VirtualChar& a, const VirtualChar& b) {
  return a.group == b.group && a.combo == b.combo;
}

// Decomposes a class function into irreducibles; throws if any multiplicity
// fails to be an integer, which signals a broken table or embedding.
inline VirtualChar decompose(const Group& g, const std::vector<CycNum>& values) {
  const CharTable& t = table_for(g);
  VirtualChar v{g, {}};
  for (const Character& chi : t.rows) {
    CycNum ip = inner_product(t, values, chi.values);
    auto m = ip.as_rational();
    if (!m || den(*m) != 1)
      throw std::domain_error("class function does not decompose integrally at " + chi.name);
    if (*m != 0) v.combo[chi.name] = static_cast<long long>(num(*m));
  }
  // Confirm the decomposition reproduces the input (guards against a
  // non-orthonormal table silently passing the integrality check).
  std::vector<CycNum> back = v.class_values();
  for (size_t c = 0; c < values.size(); ++c)
    if (!(back[c] == values[c])) throw std::domain_error("class function is not a virtual character");
  return v;
}

inline VirtualChar operator*(const VirtualChar& a, const VirtualChar& b) {
  if (a.group != b.group) throw std::invalid_argument("virtual characters live on different groups");
  std::vector<CycNum> va = a.class_values(), vb = b.class_values();
  for (size_t c = 0; c < va.size(); ++c) va[c] = va[c] * vb[c];
  return decompose(a.group, va);
}

inline VirtualChar vchar_pow(const VirtualChar& a, int e) {
  if (e < 0) throw std::invalid_argument("vchar_pow: negative exponent");
  VirtualChar r = VirtualChar::trivial(a.group);
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

// Pullback along an inclusion: evaluate on embedded elements and re-express
// in the subgroup's irreducibles.
inline VirtualChar restrict_vchar(const VirtualChar& v, const Inclusion& inc) {
  if (v.group != inc.sup) throw std::invalid_argument("restrict_vchar: group mismatch");
  const CharTable& ts = table_for(inc.sub);
  std::vector<CycNum> vals(ts.classes.size());
  for (size_t c = 0; c < ts.classes.size(); ++c) vals[c] = v.value_at(inc.image(ts.classes[c][0]));
  return decompose(inc.sub, vals);
}

// The named virtual characters the span computations use.
//   cyclic:         "rho_a-rho_0" (param a), "sigma" = rho_{l-3}+rho_3-2rho_0
//   quaternion8:    "2-tau", "(2-tau)^k" (param k), "eps2" = rho_0-kappa_1,
//                   "eps3" = rho_0-kappa_3
//   dihedral:       "1-omega-hat", "1-s-hat", "1-omegas-hat", "2-sigma_k" (param k)
//   semidihedral16: "2-chi_rho", "2-chi_rho2", "2-chi_rho5",
//                   "(2-chi_rho)(2-chi_rho5)"
//   elementary_abelian: "1-<row>" for any hat row, e.g. "1-x-hat"
inline VirtualChar preset_vchar(const Group& g, const std::string& name, int param = 0) {
  auto irr = [&](const std::string& n) { return VirtualChar::irreducible(g, n); };
  auto one = [&] { return VirtualChar::trivial(g); };
  switch (g.family) {
    case GroupFamily::cyclic: {
      int l = g.order;
      if (name == "rho_a-rho_0") return irr("rho_" + std::to_string(((param % l) + l) % l)) - one();
      if (name == "sigma" && l >= 4) return irr("rho_" + std::to_string(l - 3)) + irr("rho_3") - 2 * one();
      break;
    }
    case GroupFamily::quaternion8: {
      if (name == "2-tau") return 2 * one() - irr("tau");
      if (name == "(2-tau)^k") return vchar_pow(2 * one() - irr("tau"), param);
      if (name == "eps2") return one() - irr("kappa_1");
      if (name == "eps3") return one() - irr("kappa_3");
      break;
    }
    case GroupFamily::dihedral: {
      if (name == "1-omega-hat") return one() - irr("omega-hat");
      if (name == "1-s-hat") return one() - irr("s-hat");
      if (name == "1-omegas-hat") return one() - irr("omegas-hat");
      if (name == "2-sigma_k") return 2 * one() - irr("sigma_" + std::to_string(param));
      break;
    }
    case GroupFamily::semidihedral16: {
      if (name == "2-chi_rho") return 2 * one() - irr("chi_rho");
      if (name == "2-chi_rho2") return 2 * one() - irr("chi_rho2");
      if (name == "2-chi_rho5") return 2 * one() - irr("chi_rho5");
      if (name == "(2-chi_rho)(2-chi_rho5)")
        return (2 * one() - irr("chi_rho")) * (2 * one() - irr("chi_rho5"));
      break;
    }
    case GroupFamily::elementary_abelian: {
      if (name.rfind("1-", 0) == 0) return one() - irr(name.substr(2));
      break;
    }
  }
  std::string known;
  switch (g.family) {
    case GroupFamily::cyclic: known = "\"rho_a-rho_0\" (index via param), \"sigma\""; break;
    case GroupFamily::quaternion8: known = "\"2-tau\", \"(2-tau)^k\" (k via param), \"eps2\", \"eps3\""; break;
    case GroupFamily::dihedral:
      known = "\"1-omega-hat\", \"1-s-hat\", \"1-omegas-hat\", \"2-sigma_k\" (k via param)";
      break;
    case GroupFamily::semidihedral16:
      known = "\"2-chi_rho\", \"2-chi_rho2\", \"2-chi_rho5\", \"(2-chi_rho)(2-chi_rho5)\"";
      break;
    case GroupFamily::elementary_abelian: known = "\"1-<row>\" for any character row"; break;
  }
  throw std::invalid_argument("unknown virtual character preset '" + name + "' for " + g.name() +
                              "; known presets: " + known);
}

}  // namespace pscv
