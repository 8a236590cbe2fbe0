#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ellis/semigroup.hpp"

using namespace ellis;

namespace {

FinSemigroup z2() { return FinSemigroup::from_table(2, {0, 1, 1, 0}); }
// op(x, y) = x
FinSemigroup left_zero2() { return FinSemigroup::from_table(2, {0, 0, 1, 1}); }
// op(x, y) = y
FinSemigroup right_zero2() { return FinSemigroup::from_table(2, {0, 1, 0, 1}); }

FinSemigroup z4() {
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[std::size_t(a * 4 + b)] = (a + b) % 4;
  return FinSemigroup::from_table(4, t);
}

// const0, const1, swap on two points
FinSemigroup two_point_monoid() {
  return FinSemigroup::from_generators(2, {{0, 0}, {1, 1}, {1, 0}});
}

// brute-force closure of maps under composition, independent of the
// breadth-first implementation
std::set<std::vector<int>> closure_oracle(const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> s(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(s.begin(), s.end());
    for (const auto& x : cur)
      for (const auto& y : cur) {
        std::vector<int> w(x.size());
        for (std::size_t p = 0; p < x.size(); ++p) w[p] = x[std::size_t(y[p])];
        if (s.insert(w).second) grew = true;
      }
  }
  return s;
}

}  // namespace

TEST_CASE("table mode verifies shape and associativity") {
  auto s = z2();
  CHECK(s.size() == 2);
  CHECK(s.identity() == 0);

  CHECK_THROWS_AS(FinSemigroup::from_table(2, {0, 1, 1}), ValidationError);
  CHECK_THROWS_AS(FinSemigroup::from_table(2, {0, 1, 1, 3}), ValidationError);

  // op = [[1,1],[0,0]]: (0*0)*0 = 0, 0*(0*0) = 1
  try {
    FinSemigroup::from_table(2, {1, 1, 0, 0});
    FAIL("expected AssociativityError");
  } catch (const AssociativityError& e) {
    CHECK(e.a == 0);
    CHECK(e.b == 0);
    CHECK(e.c == 0);
  }
}

TEST_CASE("generator closure of const0, const1, swap") {
  auto s = two_point_monoid();
  CHECK(s.size() == 4);
  // generators in input order, then products in discovery order
  CHECK(s.element_maps()[0] == std::vector<int>{0, 0});
  CHECK(s.element_maps()[1] == std::vector<int>{1, 1});
  CHECK(s.element_maps()[2] == std::vector<int>{1, 0});
  CHECK(s.element_maps()[3] == std::vector<int>{0, 1});  // swap*swap = id

  auto oracle = closure_oracle({{0, 0}, {1, 1}, {1, 0}});
  std::set<std::vector<int>> got(s.element_maps().begin(), s.element_maps().end());
  CHECK(got == oracle);

  CHECK_THROWS_AS(FinSemigroup::from_generators(2, {{0, 2}}), InvalidGenerator);
  CHECK_THROWS_AS(FinSemigroup::from_generators(2, {}), InvalidGenerator);
}

TEST_CASE("generator closure matches oracle on random map families") {
  std::uint64_t state = 12345;
  auto rnd = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 40; ++trial) {
    int m = 2 + int(rnd() % 3);
    int k = 1 + int(rnd() % 3);
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < k; ++i) {
      std::vector<int> g(static_cast<std::size_t>(m), 0);
      for (auto& v : g) v = int(rnd() % std::uint64_t(m));
      gens.push_back(g);
    }
    auto s = FinSemigroup::from_generators(m, gens);
    auto oracle = closure_oracle(gens);
    CHECK(std::size_t(s.size()) == oracle.size());
    for (int x = 0; x < s.size(); ++x)
      CHECK(oracle.count(s.element_maps()[std::size_t(x)]) == 1);
  }
}

TEST_CASE("idempotents") {
  CHECK(idempotents(z2()) == std::vector<int>{0});
  CHECK(idempotents(left_zero2()) == std::vector<int>{0, 1});
  CHECK(idempotents(two_point_monoid()) == std::vector<int>{0, 1, 3});
}

TEST_CASE("minimal left ideals") {
  auto rz = right_zero2();
  auto ideals = minimal_left_ideals(rz);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].members.elements() == std::vector<int>{0});
  CHECK(ideals[1].members.elements() == std::vector<int>{1});

  auto lz = left_zero2();
  ideals = minimal_left_ideals(lz);
  REQUIRE(ideals.size() == 1);
  CHECK(ideals[0].members.elements() == std::vector<int>{0, 1});

  auto m = two_point_monoid();
  ideals = minimal_left_ideals(m);
  REQUIRE(ideals.size() == 1);
  CHECK(ideals[0].members.elements() == std::vector<int>{0, 1});  // the constants

  for (const auto& ideal : ideals) CHECK(is_minimal_left_ideal(m, ideal.members));
}

TEST_CASE("ellis groups decompose minimal ideals") {
  auto rz = right_zero2();
  auto ideals = minimal_left_ideals(rz);
  auto gs = ellis_groups(rz, ideals[0]);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].members.elements() == std::vector<int>{0});

  auto m = two_point_monoid();
  auto mideals = minimal_left_ideals(m);
  auto mg = ellis_groups(m, mideals[0]);
  REQUIRE(mg.size() == 2);
  CHECK(mg[0].members.elements() == std::vector<int>{0});
  CHECK(mg[1].members.elements() == std::vector<int>{1});
  CHECK((mg[0].members | mg[1].members) == mideals[0].members);

  auto g4 = z4();
  auto gideals = minimal_left_ideals(g4);
  REQUIRE(gideals.size() == 1);
  CHECK(gideals[0].members.count() == 4);
  auto gg = ellis_groups(g4, gideals[0]);
  REQUIRE(gg.size() == 1);
  CHECK(gg[0].members.count() == 4);

  LeftIdeal fake{&rz, Bits(2, true), false};
  CHECK_THROWS_AS(ellis_groups(rz, fake), NonMinimalIdeal);
}

TEST_CASE("ellis group isomorphisms verify") {
  auto m = two_point_monoid();
  auto ideals = minimal_left_ideals(m);
  auto gs = ellis_groups(m, ideals[0]);
  auto iso = ellis_group_iso(m, gs[0], gs[1]);
  CHECK(iso == std::vector<int>{1});
  auto self = ellis_group_iso(m, gs[0], gs[0]);
  CHECK(self == std::vector<int>{0});

  // monotone maps on three points can give several ideals and groups
  std::uint64_t state = 99;
  auto rnd = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<int>> gens;
    int k = 2 + int(rnd() % 2);
    for (int i = 0; i < k; ++i) {
      std::vector<int> g(3);
      g[0] = int(rnd() % 3);
      g[1] = g[0] + int(rnd() % std::uint64_t(3 - g[0]));
      g[2] = g[1] + int(rnd() % std::uint64_t(3 - g[1]));
      gens.push_back(g);
    }
    auto s = FinSemigroup::from_generators(3, gens);
    std::vector<EllisGroup> all;
    for (const auto& ideal : minimal_left_ideals(s))
      for (auto& g : ellis_groups(s, ideal)) all.push_back(g);
    for (const auto& a : all)
      for (const auto& b : all) CHECK_NOTHROW(ellis_group_iso(s, a, b));
  }
}

TEST_CASE("canonical maps") {
  auto g4 = z4();
  auto cm = canonical_maps(g4);
  REQUIRE(cm.phi.has_value());
  REQUIRE(cm.psi.has_value());
  for (int x = 0; x < 4; ++x) {
    CHECK((*cm.phi)[std::size_t(x)] == x);
    CHECK((*cm.psi)[std::size_t(x)] == x);
  }

  auto lz = left_zero2();
  cm = canonical_maps(lz);
  CHECK(!cm.phi.has_value());
  REQUIRE(cm.psi.has_value());
  CHECK(*cm.psi == std::vector<int>{0, 0});

  auto rz = right_zero2();
  cm = canonical_maps(rz);
  REQUIRE(cm.phi.has_value());
  CHECK(!cm.psi.has_value());
  CHECK(*cm.phi == std::vector<int>{0, 0});
  CHECK(cm.phi_idem == 0);
}

TEST_CASE("structure flags") {
  std::vector<int> k4(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) k4[std::size_t(a * 4 + b)] = a ^ b;
  auto f = structure_flags(FinSemigroup::from_table(4, k4));
  CHECK(f.is_commutative);
  CHECK(f.is_group);
  CHECK(f.gip);
  CHECK(f.unique_minimal_ideal);
  CHECK(f.translate_minimal_verified);

  f = structure_flags(right_zero2());
  CHECK(!f.is_commutative);
  CHECK(f.gip);
  CHECK(!f.unique_minimal_ideal);
  CHECK(f.translate_minimal_verified);

  f = structure_flags(left_zero2());
  CHECK(!f.is_commutative);
  CHECK(!f.gip);
  CHECK(f.unique_minimal_ideal);
}

TEST_CASE("subsemigroup extraction") {
  auto m = two_point_monoid();
  Bits consts(4);
  consts.set(0);
  consts.set(1);
  auto sub = SubSemigroup::of(m, consts);
  CHECK(sub.closed());
  auto t = sub.table();
  CHECK(t.size() == 2);
  // constants form a right-zero semigroup under composition: x*y applies y
  // first, and a constant map absorbs whatever follows it... apply y first,
  // then x: the result is x. Check against the parent's table.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(sub.global(t.op(i, j)) == m.op(sub.global(i), sub.global(j)));

  Bits notclosed(4);
  notclosed.set(2);  // swap alone: swap*swap = id escapes
  auto sub2 = SubSemigroup::of(m, notclosed);
  CHECK(!sub2.closed());
  CHECK_THROWS_AS(sub2.table(), EllisError);
}
