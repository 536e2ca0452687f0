#pragma once

#include "pscv/rational.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace pscv {

enum class GroupFamily { cyclic, elementary_abelian, dihedral, quaternion8, semidihedral16 };

// A finite 2-group from the preset catalogue. Elements are encoded as
// integers 0..order-1:
//   cyclic(l)             r               meaning w^r
//   elementary_abelian(n) bitmask         bit i = generator i (x, y, z, w)
//   dihedral(N)           b*2^{N+1} + r   meaning w^r s^b, order 2^{N+2}
//   quaternion8           b*4 + r         meaning i^r j^b
//   semidihedral16        b*8 + r         meaning s^r t^b
struct Group {
  GroupFamily family = GroupFamily::cyclic;
  int param = 1;  // l, rank, or N; unused for quaternion8/semidihedral16
  int order = 1;

  int identity() const { return 0; }

  int mul(int a, int b) const {
    switch (family) {
      case GroupFamily::cyclic:
        return (a + b) % order;
      case GroupFamily::elementary_abelian:
        return a ^ b;
      case GroupFamily::dihedral: {
        int R = order / 2;
        int r = a % R, br = a / R, t = b % R, bc = b / R;
        return (br ^ bc) * R + ((r + (br ? R - t : t)) % R);
      }
      case GroupFamily::quaternion8: {
        int r = a % 4, br = a / 4, s = b % 4, bc = b / 4;
        int rot = (r + (br ? 4 - s : s) + ((br && bc) ? 2 : 0)) % 4;
        return (br ^ bc) * 4 + rot;
      }
      case GroupFamily::semidihedral16: {
        int r = a % 8, br = a / 8, u = b % 8, bc = b / 8;
        int rot = (r + (br ? 3 * u : u)) % 8;
        return (br ^ bc) * 8 + rot;
      }
    }
    throw std::logic_error("unreachable");
  }

  int inv(int a) const {
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == 0) return b;
    throw std::logic_error("no inverse found");
  }

  int power(int a, int e) const {
    int r = 0;
    for (int k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    int x = a, n = 1;
    while (x != 0) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  bool operator==(const Group& o) const { return family == o.family && param == o.param; }
  bool operator!=(const Group& o) const { return !(*this == o); }

  std::string name() const {
    switch (family) {
      case GroupFamily::cyclic: return "C" + std::to_string(order);
      case GroupFamily::elementary_abelian: return "V(" + std::to_string(param) + ")";
      case GroupFamily::dihedral: return "D" + std::to_string(order);
      case GroupFamily::quaternion8: return "Q8";
      case GroupFamily::semidihedral16: return "SD16";
    }
    return "?";
  }

  std::string element_str(int a) const {
    switch (family) {
      case GroupFamily::cyclic:
        if (a == 0) return "1";
        if (a == 1) return "w";
        return "w^" + std::to_string(a);
      case GroupFamily::elementary_abelian: {
        if (a == 0) return "e";
        if (param == 2) return std::vector<std::string>{"e", "x", "y", "z"}[a];
        static const char* letters = "xyzw";
        std::string s;
        for (int i = 0; i < param; ++i)
          if (a >> i & 1) s += letters[i];
        return s;
      }
      case GroupFamily::dihedral: {
        int R = order / 2, r = a % R, b = a / R;
        std::string s = r == 0 ? "" : (r == 1 ? "w" : "w^" + std::to_string(r));
        if (b) s += "s";
        return s.empty() ? "1" : s;
      }
      case GroupFamily::quaternion8: {
        static const char* names[8] = {"1", "i", "-1", "-i", "j", "ij", "-j", "-ij"};
        return names[a];
      }
      case GroupFamily::semidihedral16: {
        int r = a % 8, b = a / 8;
        std::string s = r == 0 ? "" : (r == 1 ? "s" : "s^" + std::to_string(r));
        if (b) s += "t";
        return s.empty() ? "1" : s;
      }
    }
    return "?";
  }
};

inline Group cyclic_group(int l) {
  if (l < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  return Group{GroupFamily::cyclic, l, l};
}

inline Group elementary_abelian(int rank) {
  if (rank < 1 || rank > 4) throw std::invalid_argument("elementary_abelian: rank must be 1..4");
  return Group{GroupFamily::elementary_abelian, rank, 1 << rank};
}

inline Group dihedral_group(int N) {
  if (N < 1 || N > 4) throw std::invalid_argument("dihedral_group: N must be 1..4");
  return Group{GroupFamily::dihedral, N, 1 << (N + 2)};
}

inline Group quaternion8() { return Group{GroupFamily::quaternion8, 0, 8}; }

inline Group semidihedral16() { return Group{GroupFamily::semidihedral16, 0, 16}; }

// Conjugacy classes in the fixed preset order used by the character tables:
//   cyclic:         1, w, w^2, ...
//   V(n):           by (popcount, mask): e; x, y, z, ...; xy, xz, yz, ...; ...
//   dihedral(N):    1, w^{2^N}, [w^j] for j=1..2^N-1, [s], [ws]
//   quaternion8:    1, -1, [i], [j], [ij]
//   semidihedral16: 1, s^4, [s], [s^2], [s^5], [t], [st]
inline std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<int>> out;
  switch (g.family) {
    case GroupFamily::cyclic:
      for (int a = 0; a < g.order; ++a) out.push_back({a});
      return out;
    case GroupFamily::elementary_abelian: {
      std::vector<int> masks;
      for (int a = 0; a < g.order; ++a) masks.push_back(a);
      std::stable_sort(masks.begin(), masks.end(),
                       [](int a, int b) { return std::popcount(unsigned(a)) < std::popcount(unsigned(b)); });
      for (int a : masks) out.push_back({a});
      return out;
    }
    case GroupFamily::dihedral: {
      int R = g.order / 2;
      out.push_back({0});
      out.push_back({R / 2});
      for (int j = 1; j < R / 2; ++j) out.push_back({j, R - j});
      std::vector<int> even, odd;
      for (int r = 0; r < R; ++r) (r % 2 ? odd : even).push_back(R + r);
      out.push_back(even);
      out.push_back(odd);
      return out;
    }
    case GroupFamily::quaternion8:
      return {{0}, {2}, {1, 3}, {4, 6}, {5, 7}};
    case GroupFamily::semidihedral16:
      return {{0}, {4}, {1, 3}, {2, 6}, {5, 7}, {8, 10, 12, 14}, {9, 11, 13, 15}};
  }
  throw std::logic_error("unreachable");
}

// An injective homomorphism from one preset group into another, stored as the
// image of every subgroup element. Constructors validate both properties.
struct Inclusion {
  Group sub;
  Group sup;
  std::vector<int> embed;  // indexed by subgroup element

  int image(int a) const { return embed.at(a); }
};

inline Inclusion make_inclusion(const Group& sub, const Group& sup, std::vector<int> embed) {
  if (int(embed.size()) != sub.order) throw std::invalid_argument("make_inclusion: wrong image count");
  std::vector<bool> seen(sup.order, false);
  for (int a : embed) {
    if (a < 0 || a >= sup.order) throw std::invalid_argument("make_inclusion: image out of range");
    if (seen[a]) throw std::invalid_argument("make_inclusion: embedding not injective");
    seen[a] = true;
  }
  for (int a = 0; a < sub.order; ++a)
    for (int b = 0; b < sub.order; ++b)
      if (embed[sub.mul(a, b)] != sup.mul(embed[a], embed[b]))
        throw std::invalid_argument("make_inclusion: not a homomorphism");
  return Inclusion{sub, sup, std::move(embed)};
}

// Builds the embedding from images of the family's standard generators:
// cyclic {w}; elementary abelian {x, y, ...}; dihedral {w, s};
// quaternion8 {i, j}; semidihedral16 {s, t}.
inline Inclusion include_generators(const Group& sub, const Group& sup, const std::vector<int>& gens) {
  std::vector<int> embed(sub.order);
  auto two_gen = [&](int rot_bits) {
    if (gens.size() != 2) throw std::invalid_argument("include_generators: need two generator images");
    int R = 1 << rot_bits;
    for (int a = 0; a < sub.order; ++a) {
      int r = a % R, b = a / R;
      embed[a] = sup.mul(sup.power(gens[0], r), sup.power(gens[1], b));
    }
  };
  switch (sub.family) {
    case GroupFamily::cyclic:
      if (gens.size() != 1) throw std::invalid_argument("include_generators: need one generator image");
      for (int a = 0; a < sub.order; ++a) embed[a] = sup.power(gens[0], a);
      break;
    case GroupFamily::elementary_abelian:
      if (int(gens.size()) != sub.param) throw std::invalid_argument("include_generators: need rank many images");
      for (int a = 0; a < sub.order; ++a) {
        int img = 0;
        for (int i = 0; i < sub.param; ++i)
          if (a >> i & 1) img = sup.mul(img, gens[i]);
        embed[a] = img;
      }
      break;
    case GroupFamily::dihedral:
      two_gen(sub.param + 1);
      break;
    case GroupFamily::quaternion8:
      two_gen(2);
      break;
    case GroupFamily::semidihedral16:
      two_gen(3);
      break;
  }
  return make_inclusion(sub, sup, std::move(embed));
}

// The cyclic subgroup generated by one element.
inline Inclusion cyclic_subgroup(const Group& sup, int g) {
  return include_generators(cyclic_group(sup.element_order(g)), sup, {g});
}

// Q8 = <s^2, st> inside SD16, sending i to s^2 and j to st.
inline Inclusion q8_in_sd16() { return include_generators(quaternion8(), semidihedral16(), {2, 9}); }

// D8 = <s^2, t> inside SD16, sending the rotation to s^2 and the reflection to t.
inline Inclusion d8_in_sd16() { return include_generators(dihedral_group(1), semidihedral16(), {2, 8}); }

// The maximal cyclic subgroup <w> of a dihedral group.
inline Inclusion cyclic_in_dihedral(int N) {
  return include_generators(cyclic_group(1 << (N + 1)), dihedral_group(N), {1});
}

// The two Klein four subgroups of D8: V(2) = <s, w^2> and V(2)' = <ws, w^2>.
inline Inclusion v2_in_d8(bool odd_reflections) {
  Group d8 = dihedral_group(1);
  int refl = odd_reflections ? 4 + 1 : 4;
  return include_generators(elementary_abelian(2), d8, {refl, 2});
}

// The two maximal dihedral subgroups of D_{2^{N+2}} for N >= 2:
// D' = <w^2, s> on the even reflections, D'' = <w^2, ws> on the odd ones.
inline Inclusion subdihedral_in_dihedral(int N, bool odd_reflections) {
  if (N < 2) throw std::invalid_argument("subdihedral_in_dihedral: need N >= 2; use v2_in_d8 for D8");
  Group sup = dihedral_group(N);
  int R = sup.order / 2;
  return include_generators(dihedral_group(N - 1), sup, {2, odd_reflections ? R + 1 : R});
}

}  // namespace pscv
