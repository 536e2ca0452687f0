#include "pscv/character.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace pscv;

namespace {

std::vector<Group> presets() {
  return {cyclic_group(2),      cyclic_group(4),  cyclic_group(8),     cyclic_group(16),
          elementary_abelian(1), elementary_abelian(2), elementary_abelian(3), elementary_abelian(4),
          dihedral_group(1),    dihedral_group(2), dihedral_group(3),  quaternion8(),
          semidihedral16()};
}

long long isqrt_order(const Group& g) { return g.order; }

}  // namespace

TEST_CASE("group axioms hold on full enumeration") {
  for (const Group& g : presets()) {
    CAPTURE(g.name());
    std::set<int> elems;
    for (int a = 0; a < g.order; ++a) elems.insert(a);
    for (int a = 0; a < g.order; ++a) {
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
      for (int b = 0; b < g.order; ++b) {
        REQUIRE(elems.count(g.mul(a, b)) == 1);
        for (int c = 0; c < g.order; ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      }
    }
  }
}

TEST_CASE("presentation relations") {
  for (int N = 1; N <= 3; ++N) {
    Group d = dihedral_group(N);
    int R = d.order / 2;
    int w = 1, s = R;
    CHECK(d.power(w, R) == 0);
    CHECK(d.mul(s, s) == 0);
    CHECK(d.mul(d.mul(s, w), s) == d.inv(w));
  }
  Group sd = semidihedral16();
  int s = 1, t = 8;
  CHECK(sd.power(s, 8) == 0);
  CHECK(sd.mul(t, t) == 0);
  CHECK(sd.mul(sd.mul(t, s), t) == sd.power(s, 3));
  Group q = quaternion8();
  int i = 1, j = 4;
  CHECK(q.mul(i, i) == q.mul(j, j));
  CHECK(q.mul(q.mul(j, i), q.inv(j)) == q.inv(i));
}

TEST_CASE("conjugacy classes partition the group and are closed under conjugation") {
  for (const Group& g : presets()) {
    CAPTURE(g.name());
    auto classes = conjugacy_classes(g);
    std::set<int> seen;
    for (auto& cls : classes) {
      for (int e : cls) CHECK(seen.insert(e).second);
      std::set<int> as_set(cls.begin(), cls.end());
      for (int e : cls)
        for (int h = 0; h < g.order; ++h) CHECK(as_set.count(g.mul(g.mul(h, e), g.inv(h))) == 1);
    }
    CHECK(int(seen.size()) == g.order);
  }
}

TEST_CASE("quaternion and semidihedral tables match their printed rows") {
  const CharTable& q = table_for(quaternion8());
  REQUIRE(q.rows.size() == 5);
  auto sign_row = [](const Character& chi) {
    std::vector<BigRat> out;
    for (auto& v : chi.values) out.push_back(*v.as_rational());
    return out;
  };
  CHECK(q.rows[0].name == "rho_0");
  CHECK(sign_row(q.row("tau")) == std::vector<BigRat>{2, -2, 0, 0, 0});
  CHECK(sign_row(q.row("kappa_1")) == std::vector<BigRat>{1, 1, -1, 1, -1});
  CHECK(sign_row(q.row("kappa_2")) == std::vector<BigRat>{1, 1, 1, -1, -1});
  CHECK(sign_row(q.row("kappa_3")) == std::vector<BigRat>{1, 1, -1, -1, 1});

  const CharTable& sd = table_for(semidihedral16());
  REQUIRE(sd.rows.size() == 7);
  CHECK(sd.classes == std::vector<std::vector<int>>{{0}, {4}, {1, 3}, {2, 6}, {5, 7}, {8, 10, 12, 14}, {9, 11, 13, 15}});
  CycNum sqrt2i = root_of_unity(8, 1) + root_of_unity(8, 3);
  CHECK(sd.row("chi_rho").values[2] == sqrt2i);
  CHECK(sd.row("chi_rho5").values[2] == -sqrt2i);
  CHECK(sqrt2i * sqrt2i == CycNum(BigRat(-2)));
  CHECK(sign_row(sd.row("chi_rho2")) == std::vector<BigRat>{2, 2, 0, -2, 0, 0, 0});
  CHECK(sign_row(sd.row("chi_3")) == std::vector<BigRat>{1, 1, -1, 1, -1, 1, -1});
  CHECK(sign_row(sd.row("chi_4")) == std::vector<BigRat>{1, 1, -1, 1, -1, -1, 1});
}

TEST_CASE("Klein four-group table is the printed 4x4 sign matrix") {
  const CharTable& t = table_for(elementary_abelian(2));
  std::vector<std::vector<BigRat>> want = {
      {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  std::vector<std::string> names = {"1", "x-hat", "y-hat", "z-hat"};
  REQUIRE(t.rows.size() == 4);
  CHECK(t.class_names == std::vector<std::string>{"e", "x", "y", "z"});
  for (int i = 0; i < 4; ++i) {
    CHECK(t.rows[i].name == names[i]);
    for (int c = 0; c < 4; ++c) CHECK(*t.rows[i].values[c].as_rational() == want[i][c]);
  }
}

TEST_CASE("dihedral table matches the printed pattern") {
  for (int N = 1; N <= 3; ++N) {
    Group g = dihedral_group(N);
    const CharTable& t = table_for(g);
    int half = 1 << N;
    REQUIRE(int(t.rows.size()) == half + 3);
    CHECK(*t.row("omega-hat").values[half + 1].as_rational() == -1);
    CHECK(*t.row("s-hat").values[half + 1].as_rational() == 1);
    CHECK(*t.row("s-hat").values[half + 2].as_rational() == -1);
    CHECK(*t.row("omegas-hat").values[half + 2].as_rational() == 1);
    for (int j = 1; j < half; ++j) {
      CHECK(*t.row("s-hat").values[1 + j].as_rational() == (j % 2 ? -1 : 1));
      CHECK(*t.row("omega-hat").values[1 + j].as_rational() == 1);
    }
    for (int k = 1; k < half; ++k) {
      const Character& sk = t.row("sigma_" + std::to_string(k));
      CHECK(*sk.values[0].as_rational() == 2);
      CHECK(*sk.values[1].as_rational() == (k % 2 ? -2 : 2));
      for (int j = 1; j < half; ++j)
        CHECK(sk.values[1 + j] == root_of_unity(2 * half, j * k) + root_of_unity(2 * half, -j * k));
    }
  }
}

TEST_CASE("rows are orthonormal and columns satisfy the orthogonality relation") {
  for (const Group& g : presets()) {
    CAPTURE(g.name());
    const CharTable& t = table_for(g);
    REQUIRE(t.rows.size() == t.classes.size());
    for (size_t i = 0; i < t.rows.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        auto ip = inner_product(t, t.rows[i].values, t.rows[j].values).as_rational();
        REQUIRE(ip.has_value());
        CHECK(*ip == (i == j ? 1 : 0));
      }
    for (size_t c = 0; c < t.classes.size(); ++c)
      for (size_t d = 0; d <= c; ++d) {
        CycNum sum;
        for (auto& chi : t.rows) sum = sum + chi.values[c] * conj(chi.values[d]);
        auto v = sum.as_rational();
        REQUIRE(v.has_value());
        CHECK(*v == (c == d ? BigRat(isqrt_order(g)) / BigRat(long(t.classes[c].size())) : BigRat(0)));
      }
  }
}

TEST_CASE("character table determinants") {
  auto abs_det_as_int = [](const Group& g) {
    CycNum d = char_table_det(g);
    auto r = d.as_rational();
    REQUIRE(r.has_value());
    BigRat a = *r < 0 ? -*r : *r;
    return a;
  };
  CHECK(abs_det_as_int(cyclic_group(2)) == 2);
  CHECK(abs_det_as_int(elementary_abelian(2)) == 16);
  CHECK(abs_det_as_int(elementary_abelian(3)) == 4096);
  for (int n = 1; n <= 4; ++n) {
    BigRat want(ipow(BigInt(1) << n, unsigned(1 << (n - 1))));
    CHECK(abs_det_as_int(elementary_abelian(n)) == want);
  }
}

TEST_CASE("indicators classify real, complex, and quaternion characters") {
  CHECK(fs_indicator(table_for(quaternion8()), "tau") == -1);
  CHECK(fs_indicator(table_for(semidihedral16()), "chi_rho") == 0);
  CHECK(fs_indicator(table_for(semidihedral16()), "chi_rho5") == 0);
  CHECK(fs_indicator(table_for(semidihedral16()), "chi_rho2") == 1);
  for (const Group& g : presets()) {
    CAPTURE(g.name());
    const CharTable& t = table_for(g);
    CHECK(fs_indicator(t, t.rows[0]) == 1);
    for (auto& chi : t.rows) CHECK((fs_indicator(t, chi) >= -1 && fs_indicator(t, chi) <= 1));
  }
  for (auto& chi : table_for(dihedral_group(2)).rows) CHECK(fs_indicator(table_for(dihedral_group(2)), chi) == 1);
  const CharTable& c8 = table_for(cyclic_group(8));
  CHECK(fs_indicator(c8, "rho_0") == 1);
  CHECK(fs_indicator(c8, "rho_4") == 1);
  CHECK(fs_indicator(c8, "rho_1") == 0);
  CHECK(fs_indicator(c8, "rho_3") == 0);
}

TEST_CASE("restriction re-expresses characters in subgroup irreducibles") {
  Inclusion c8_sd = include_generators(cyclic_group(8), semidihedral16(), {1});
  VirtualChar chi_rho = VirtualChar::irreducible(semidihedral16(), "chi_rho");
  VirtualChar r = restrict_vchar(chi_rho, c8_sd);
  CHECK(r == VirtualChar::irreducible(cyclic_group(8), "rho_1") + VirtualChar::irreducible(cyclic_group(8), "rho_3"));

  for (int N = 1; N <= 3; ++N) {
    Inclusion inc = cyclic_in_dihedral(N);
    int half = 1 << N;
    for (int m = 1; m < half; ++m) {
      VirtualChar sm = VirtualChar::irreducible(dihedral_group(N), "sigma_" + std::to_string(m));
      VirtualChar want = VirtualChar::irreducible(inc.sub, "rho_" + std::to_string(m)) +
                         VirtualChar::irreducible(inc.sub, "rho_" + std::to_string(2 * half - m));
      CHECK(restrict_vchar(sm, inc) == want);
    }
    CHECK(restrict_vchar(VirtualChar::trivial(dihedral_group(N)), inc) == VirtualChar::trivial(inc.sub));
  }

  VirtualChar chi_rho2 = VirtualChar::irreducible(semidihedral16(), "chi_rho2");
  VirtualChar rq = restrict_vchar(chi_rho2, q8_in_sd16());
  CHECK(rq == VirtualChar::irreducible(quaternion8(), "kappa_1") + VirtualChar::irreducible(quaternion8(), "kappa_3"));
  CHECK(restrict_vchar(chi_rho, q8_in_sd16()) == VirtualChar::irreducible(quaternion8(), "tau"));

  Inclusion t_sub = cyclic_subgroup(semidihedral16(), 8);
  CHECK(t_sub.sub.order == 2);
  VirtualChar chi3 = VirtualChar::irreducible(semidihedral16(), "chi_3");
  VirtualChar chi2 = VirtualChar::irreducible(semidihedral16(), "chi_2");
  CHECK(restrict_vchar(chi3, t_sub) == VirtualChar::trivial(cyclic_group(2)));
  CHECK(restrict_vchar(chi2, t_sub) == VirtualChar::irreducible(cyclic_group(2), "rho_1"));
}

TEST_CASE("restriction is a ring homomorphism on virtual characters") {
  std::mt19937_64 rng(4242);
  std::vector<Inclusion> incs;
  incs.push_back(q8_in_sd16());
  incs.push_back(cyclic_in_dihedral(2));
  incs.push_back(v2_in_d8(false));
  incs.push_back(include_generators(cyclic_group(8), semidihedral16(), {1}));
  for (const Inclusion& inc : incs) {
    const CharTable& t = table_for(inc.sup);
    std::uniform_int_distribution<int> pick(0, int(t.rows.size()) - 1);
    std::uniform_int_distribution<long long> m(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
      VirtualChar v = VirtualChar::zero(inc.sup), w = VirtualChar::zero(inc.sup);
      for (int k = 0; k < 3; ++k) {
        v = v + VirtualChar::irreducible(inc.sup, t.rows[pick(rng)].name, m(rng));
        w = w + VirtualChar::irreducible(inc.sup, t.rows[pick(rng)].name, m(rng));
      }
      CHECK(restrict_vchar(v * w, inc) == restrict_vchar(v, inc) * restrict_vchar(w, inc));
      CHECK(restrict_vchar(v + w, inc) == restrict_vchar(v, inc) + restrict_vchar(w, inc));
    }
  }
}

TEST_CASE("virtual character presets") {
  Group c8 = cyclic_group(8);
  VirtualChar sigma = preset_vchar(c8, "sigma");
  CHECK(sigma == VirtualChar::irreducible(c8, "rho_5") + VirtualChar::irreducible(c8, "rho_3") -
                     2 * VirtualChar::trivial(c8));
  CHECK(sigma.vdim() == 0);

  Group q = quaternion8();
  VirtualChar sq = preset_vchar(q, "(2-tau)^k", 2);
  VirtualChar want = 5 * VirtualChar::trivial(q) + VirtualChar::irreducible(q, "kappa_1") +
                     VirtualChar::irreducible(q, "kappa_2") + VirtualChar::irreducible(q, "kappa_3") -
                     4 * VirtualChar::irreducible(q, "tau");
  CHECK(sq == want);
  CHECK(sq == preset_vchar(q, "2-tau") * preset_vchar(q, "2-tau"));
  CHECK(preset_vchar(q, "eps2") == VirtualChar::trivial(q) - VirtualChar::irreducible(q, "kappa_1"));
  CHECK(preset_vchar(q, "eps2").vdim() == 0);
  CHECK(preset_vchar(q, "(2-tau)^k", 3).vdim() == 0);

  CHECK((VirtualChar::trivial(q) - VirtualChar::trivial(q)).is_zero());
  CHECK(preset_vchar(cyclic_group(8), "rho_a-rho_0", 4) ==
        VirtualChar::irreducible(c8, "rho_4") - VirtualChar::trivial(c8));
  CHECK_THROWS_AS(preset_vchar(q, "no-such-name"), std::invalid_argument);
}

TEST_CASE("inclusions validate homomorphism and injectivity") {
  CHECK_THROWS_AS(make_inclusion(cyclic_group(2), cyclic_group(4), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_inclusion(cyclic_group(2), cyclic_group(4), {0, 0}), std::invalid_argument);
  Inclusion ok = make_inclusion(cyclic_group(2), cyclic_group(4), {0, 2});
  CHECK(ok.image(1) == 2);
  CHECK_THROWS_AS(include_generators(elementary_abelian(2), dihedral_group(1), {1, 4}), std::invalid_argument);
  Inclusion v2 = v2_in_d8(true);
  CHECK(v2.sub.order == 4);
  Inclusion d8 = d8_in_sd16();
  CHECK(d8.sub.order == 8);
  Inclusion dd = subdihedral_in_dihedral(2, false);
  CHECK(dd.sub.order == 8);
}

TEST_CASE("binomial exponent identity from the rank-n span count") {
  auto binom = [](long long n, long long k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (long long n = 1; n <= 12; ++n) {
    BigInt rhs = (BigInt(1) << n) - 1;
    for (long long k = 2; k <= n; ++k) rhs += BigInt(k - 1) * binom(n, k);
    CHECK(BigInt(n) * (BigInt(1) << (n - 1)) == rhs);
  }
}
