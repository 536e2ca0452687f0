#pragma once

#include "pscv/group.hpp"
#include "pscv/rational.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace pscv {

struct ManifoldExpr;

// Quotient of an odd sphere by a cyclic group of 2-power order l, acting with
// the given odd twisting weights.  An even weight count keeps the weight sum
// even, so the square root det^{1/2} = lambda^{sum/2} below is well defined.
struct Lens {
  int l = 2;
  std::vector<int> weights;
};

// Lens-space bundle over the two-sphere: each weight carries the first Chern
// number of its line-bundle layer.  The base raises the dimension of the
// total space by two; at least one Chern number must be nonzero, since the
// untwisted quotient is a plain lens space.
struct LensBundle {
  int l = 2;
  std::vector<int> weights;
  std::vector<int> c1s;
};

// Per-conjugacy-class scalar data for one copy of the defining two-dimensional
// representation of a quaternion group; the evaluator raises the determinant
// data to the m-th power for m copies.
struct QuaternionClassEntry {
  int representative;        // class representative element
  long class_size;
  BigRat det_one_minus_tau;  // det(I - tau(g)) for one copy
  BigRat det_tau_sqrt;       // det(tau(g))^{1/2} for one copy
};

// Quotient of S^{4m-1} by a quaternion group acting through m copies of its
// defining representation, described entirely by per-class scalars.
struct QuaternionForm {
  Group group;
  int copies = 1;
  std::vector<QuaternionClassEntry> class_data;  // nontrivial classes only
};

// The same manifold viewed over a larger group via an inclusion of its
// fundamental group, as when a subgroup quotient is pushed into the big group.
struct Included {
  std::shared_ptr<ManifoldExpr> inner;
  Inclusion inclusion;
};

// Product with a simply connected even-dimensional spin manifold, recorded
// only by its A-hat genus and its dimension (factor 1 / dimension 8 for the
// Bott manifold, factor 2 / dimension 4 for a K3 surface).
struct AhatScaled {
  std::shared_ptr<ManifoldExpr> inner;
  long long factor = 1;
  int added_dim = 8;
};

// Integer formal combination of manifolds of equal dimension over one group.
struct FormalSum {
  std::vector<std::pair<long long, std::shared_ptr<ManifoldExpr>>> terms;
};

struct ManifoldExpr {
  std::variant<Lens, LensBundle, QuaternionForm, Included, AhatScaled, FormalSum> node;
};

namespace detail {

inline bool power_of_two(long v) { return v >= 1 && (v & (v - 1)) == 0; }

inline void validate_lens_data(int l, const std::vector<int>& weights) {
  if (l < 2 || !power_of_two(l)) throw std::invalid_argument("lens: group order must be a power of two, at least 2");
  if (weights.empty() || weights.size() % 2 != 0)
    throw std::invalid_argument("lens: need a nonzero even number of weights");
  for (int a : weights)
    if (a % 2 == 0) throw std::invalid_argument("lens: weights must be odd");
}

inline void validate_bundle_data(const std::vector<int>& weights, const std::vector<int>& c1s) {
  if (c1s.size() != weights.size())
    throw std::invalid_argument("lens bundle: need one Chern number per weight");
  bool twisted = false;
  for (int c : c1s) twisted = twisted || c != 0;
  if (!twisted)
    throw std::invalid_argument("lens bundle: all Chern numbers vanish; the untwisted quotient is a plain lens space");
}

inline std::shared_ptr<ManifoldExpr> box(ManifoldExpr m) { return std::make_shared<ManifoldExpr>(std::move(m)); }

}  // namespace detail

inline ManifoldExpr make_lens(int l, std::vector<int> weights) {
  detail::validate_lens_data(l, weights);
  return ManifoldExpr{Lens{l, std::move(weights)}};
}

inline ManifoldExpr make_lens_bundle(int l, std::vector<int> weights, std::vector<int> c1s) {
  detail::validate_lens_data(l, weights);
  detail::validate_bundle_data(weights, c1s);
  return ManifoldExpr{LensBundle{l, std::move(weights), std::move(c1s)}};
}

// The quaternion space form S^{4m-1}/Q8: the central -1 acts as -I on each
// copy (so det(I - tau) = 4), the six order-four elements act with eigenvalue
// pairs (i, -i) (so det(I - tau) = 2), and det(tau)^{1/2} = 1 throughout.
inline ManifoldExpr quaternion_form(int copies) {
  if (copies < 1) throw std::invalid_argument("quaternion form: need at least one copy");
  Group q = quaternion8();
  std::vector<QuaternionClassEntry> data;
  data.push_back({2, 1, BigRat(4), BigRat(1)});  // central -1
  data.push_back({1, 2, BigRat(2), BigRat(1)});  // [i]
  data.push_back({4, 2, BigRat(2), BigRat(1)});  // [j]
  data.push_back({5, 2, BigRat(2), BigRat(1)});  // [ij]
  return ManifoldExpr{QuaternionForm{q, copies, std::move(data)}};
}

inline int dimension(const ManifoldExpr& m);
inline Group target_group(const ManifoldExpr& m);

inline ManifoldExpr make_included(ManifoldExpr inner, Inclusion inclusion) {
  if (target_group(inner) != inclusion.sub)
    throw std::invalid_argument("included: inclusion must start at the inner manifold's group");
  return ManifoldExpr{Included{detail::box(std::move(inner)), std::move(inclusion)}};
}

inline ManifoldExpr make_ahat_scaled(ManifoldExpr inner, long long factor, int added_dim = 8) {
  if (added_dim < 0 || added_dim % 2 != 0)
    throw std::invalid_argument("product factor: added dimension must be even and nonnegative");
  return ManifoldExpr{AhatScaled{detail::box(std::move(inner)), factor, added_dim}};
}

inline ManifoldExpr make_formal_sum(std::vector<std::pair<long long, ManifoldExpr>> terms) {
  if (terms.empty()) throw std::invalid_argument("formal sum: need at least one term");
  FormalSum s;
  for (auto& [c, m] : terms) s.terms.emplace_back(c, detail::box(std::move(m)));
  ManifoldExpr e{std::move(s)};
  dimension(e);     // validates equal dimensions
  target_group(e);  // validates equal groups
  return e;
}

inline Group target_group(const ManifoldExpr& m) {
  return std::visit(
      [](const auto& node) -> Group {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Lens>) return cyclic_group(node.l);
        else if constexpr (std::is_same_v<T, LensBundle>) return cyclic_group(node.l);
        else if constexpr (std::is_same_v<T, QuaternionForm>) return node.group;
        else if constexpr (std::is_same_v<T, Included>) return node.inclusion.sup;
        else if constexpr (std::is_same_v<T, AhatScaled>) return target_group(*node.inner);
        else {
          Group g = target_group(*node.terms.at(0).second);
          for (auto& [c, t] : node.terms)
            if (target_group(*t) != g) throw std::invalid_argument("formal sum: terms over different groups");
          return g;
        }
      },
      m.node);
}

inline int dimension(const ManifoldExpr& m) {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Lens>) {
          detail::validate_lens_data(node.l, node.weights);
          return 2 * int(node.weights.size()) - 1;
        } else if constexpr (std::is_same_v<T, LensBundle>) {
          detail::validate_lens_data(node.l, node.weights);
          detail::validate_bundle_data(node.weights, node.c1s);
          return 2 * int(node.weights.size()) - 1 + 2;
        } else if constexpr (std::is_same_v<T, QuaternionForm>) {
          if (node.copies < 1) throw std::invalid_argument("quaternion form: need at least one copy");
          return 4 * node.copies - 1;
        } else if constexpr (std::is_same_v<T, Included>) {
          return dimension(*node.inner);
        } else if constexpr (std::is_same_v<T, AhatScaled>) {
          return dimension(*node.inner) + node.added_dim;
        } else {
          if (node.terms.empty()) throw std::invalid_argument("formal sum: need at least one term");
          int d = dimension(*node.terms.at(0).second);
          for (auto& [c, t] : node.terms)
            if (dimension(*t) != d) throw std::invalid_argument("formal sum: terms of different dimensions");
          return d;
        }
      },
      m.node);
}

}  // namespace pscv
