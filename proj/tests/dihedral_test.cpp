#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "dihom/dihedral.hpp"

using namespace dihom;

namespace {

DihedralSet random_set(std::mt19937_64& rng, int n, int cardinality) {
  DihedralSet s(n);
  while (s.cardinality() < cardinality)
    s.insert(DihedralElement::decode(n, static_cast<int>(rng() % (2 * n))));
  return s;
}

std::map<std::pair<int, int>, int> multiset(const DihedralIntervalVector& v) {
  std::map<std::pair<int, int>, int> out;
  for (int l = 0; l < v.modulus; ++l) {
    if (v.at(l, +1) > 0) out[{l, +1}] = v.at(l, +1);
    if (v.at(l, -1) > 0) out[{l, -1}] = v.at(l, -1);
  }
  return out;
}

}  // namespace

TEST_CASE("semidirect product multiplication") {
  CHECK(mul(DihedralElement(12, 7, -1), DihedralElement(12, 0, +1)) == DihedralElement(12, 7, -1));
  CHECK(mul(DihedralElement(12, 4, +1), DihedralElement(12, 9, -1)) == DihedralElement(12, 1, -1));
  const DihedralElement x(12, 5, -1);
  CHECK(mul(x, DihedralElement::identity(12)) == x);
  CHECK_THROWS_AS(mul(DihedralElement(12, 0, 1), DihedralElement(10, 0, 1)), std::domain_error);
}

TEST_CASE("inverse") {
  CHECK(inverse(DihedralElement(12, 3, +1)) == DihedralElement(12, 9, +1));
  CHECK(inverse(DihedralElement(12, 5, -1)) == DihedralElement(12, 5, -1));
  for (int i = 0; i < 24; ++i) {
    const DihedralElement x = DihedralElement::decode(12, i);
    CHECK(mul(x, inverse(x)) == DihedralElement::identity(12));
    CHECK(mul(inverse(x), x) == DihedralElement::identity(12));
  }
}

TEST_CASE("group axioms hold exhaustively for small n") {
  for (int n = 1; n <= 8; ++n)
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) {
        const DihedralElement x = DihedralElement::decode(n, i);
        const DihedralElement y = DihedralElement::decode(n, j);
        for (int k = 0; k < 2 * n; ++k) {
          const DihedralElement z = DihedralElement::decode(n, k);
          CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        }
      }
  for (int n = 1; n <= 36; ++n) {
    for (int i = 0; i < 2 * n; ++i) {
      const DihedralElement x = DihedralElement::decode(n, i);
      CHECK(mul(x, DihedralElement::identity(n)) == x);
      CHECK(mul(DihedralElement::identity(n), x) == x);
      CHECK(mul(x, inverse(x)) == DihedralElement::identity(n));
      CHECK(mul(inverse(x), x) == DihedralElement::identity(n));
    }
  }
}

TEST_CASE("interval functions") {
  const DihedralElement c(12, 0, -1);
  const DihedralElement d_flat(12, 1, +1);
  CHECK(right_interval(c, d_flat) == DihedralElement(12, 11, -1));
  CHECK(left_interval(c, d_flat) == DihedralElement(12, 1, -1));
  CHECK(right_interval(c, c) == DihedralElement::identity(12));

  // the interval really transports x to y, for every pair
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      const DihedralElement x = DihedralElement::decode(12, i);
      const DihedralElement y = DihedralElement::decode(12, j);
      CHECK(mul(left_interval(x, y), x) == y);
      CHECK(mul(x, right_interval(x, y)) == y);
    }
}

TEST_CASE("interval vectors of a 3-element set") {
  DihedralSet s(12);
  s.insert(DihedralElement(12, 0, +1));
  s.insert(DihedralElement(12, 2, -1));
  s.insert(DihedralElement(12, 3, +1));

  const std::map<std::pair<int, int>, int> right_expected = {
      {{0, +1}, 3}, {{2, -1}, 2}, {{3, +1}, 1}, {{11, -1}, 2}, {{9, +1}, 1}};
  const std::map<std::pair<int, int>, int> left_expected = {
      {{0, +1}, 3}, {{2, -1}, 2}, {{3, +1}, 1}, {{5, -1}, 2}, {{9, +1}, 1}};
  CHECK(multiset(right_iv(s)) == right_expected);
  CHECK(multiset(left_iv(s)) == left_expected);

  // elementwise inversion changes the interval content
  DihedralSet inverted(12);
  for (const DihedralElement& e : s.elements()) inverted.insert(inverse(e));
  CHECK(right_iv(inverted) != right_iv(s));
  CHECK(left_iv(inverted) != left_iv(s));

  DihedralSet singleton(12);
  singleton.insert(DihedralElement(12, 7, -1));
  const DihedralIntervalVector v = right_iv(singleton);
  CHECK(v.at(0, +1) == 1);
  int total = 0;
  for (int count : v.counts) total += count;
  CHECK(total == 1);
}

TEST_CASE("interval vector invariants") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 14);
    const DihedralSet s = random_set(rng, n, 1 + static_cast<int>(rng() % 6));
    const DihedralIntervalVector rv = right_iv(s);
    CHECK(rv.at(0, +1) >= s.cardinality());
    int total = 0;
    for (int count : rv.counts) total += count;
    CHECK(total == s.cardinality() * s.cardinality());
  }
}

TEST_CASE("group actions preserve the opposite interval vector") {
  // exhaustive over every set of at most 4 elements and every translate,
  // for n up to 10
  for (int n = 3; n <= 10; ++n) {
    std::vector<DihedralSet> sets;
    sets.emplace_back(n);
    for (int size = 1; size <= 4; ++size) {
      std::vector<DihedralSet> next;
      for (const DihedralSet& s : sets) {
        if (s.cardinality() != size - 1) continue;
        int start = 0;
        for (const DihedralElement& e : s.elements()) start = std::max(start, e.encoded() + 1);
        for (int i = start; i < 2 * n; ++i) {
          DihedralSet grown = s;
          grown.insert(DihedralElement::decode(n, i));
          next.push_back(grown);
        }
      }
      sets.insert(sets.end(), next.begin(), next.end());
    }
    for (const DihedralSet& s : sets) {
      const DihedralIntervalVector rv = right_iv(s);
      const DihedralIntervalVector lv = left_iv(s);
      for (int i = 0; i < 2 * n; ++i) {
        const DihedralElement g = DihedralElement::decode(n, i);
        CHECK(right_iv(act_left(g, s)) == rv);
        CHECK(left_iv(act_right(s, g)) == lv);
      }
    }
  }
  // randomized beyond that scale
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 11 + static_cast<int>(rng() % 8);
    const DihedralSet s = random_set(rng, n, 1 + static_cast<int>(rng() % 7));
    const DihedralElement g = DihedralElement::decode(n, static_cast<int>(rng() % (2 * n)));
    CHECK(right_iv(act_left(g, s)) == right_iv(s));
    CHECK(left_iv(act_right(s, g)) == left_iv(s));
  }
  // identity acts trivially; rotations translate both parts
  const DihedralSet s = DihedralSet::parse(12, "0-,1+,3+,4-,8-");
  CHECK(act_left(DihedralElement::identity(12), s) == s);
  const DihedralSet shifted = act_left(DihedralElement(12, 2, +1), s);
  CHECK(shifted.plus_part() == s.plus_part().transposed(2));
  CHECK(shifted.minus_part() == s.minus_part().transposed(2));
}

TEST_CASE("set inversion") {
  const DihedralSet a = DihedralSet::parse(12, "0-,1+,3+,4-,8-");
  const DihedralSet expected = DihedralSet::parse(12, "0-,11+,9+,4-,8-");
  CHECK(set_inversion(a) == expected);
  CHECK(set_inversion(set_inversion(a)) == a);

  DihedralSet minus_only(12);
  minus_only.insert(DihedralElement(12, 2, -1));
  minus_only.insert(DihedralElement(12, 5, -1));
  CHECK(set_inversion(minus_only) == minus_only);
}

TEST_CASE("projection") {
  CHECK(project(DihedralSet::parse(12, "0-,1+,3+,4-,8-")) == ZnSet(12, {0, 1, 3, 4, 8}));
  CHECK(project(DihedralSet(12)).empty());

  DihedralSet both(12);
  both.insert(DihedralElement(12, 0, +1));
  both.insert(DihedralElement(12, 0, -1));
  CHECK(both.cardinality() == 2);
  CHECK(project(both) == ZnSet(12, {0}));

  // projection commutes with rotation translates when the parts stay disjoint
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 14);
    const DihedralSet s = random_set(rng, n, 1 + static_cast<int>(rng() % 5));
    if ((s.plus_mask() & s.minus_mask()) != 0) continue;
    const int p = static_cast<int>(rng() % n);
    CHECK(project(act_left(DihedralElement(n, p, +1), s)) == project(s).transposed(p));
  }
}

TEST_CASE("automorphisms") {
  CHECK(apply(DihedralAutomorphism{0, 1}, DihedralElement(12, 5, -1)) == DihedralElement(12, 5, -1));
  CHECK(apply(DihedralAutomorphism{1, 5}, DihedralElement(12, 3, -1)) == DihedralElement(12, 4, -1));
  CHECK_THROWS_AS(apply(DihedralAutomorphism{0, 2}, DihedralElement(12, 1, +1)), std::domain_error);

  // n * phi(n) members, all homomorphisms
  const std::map<int, int> phi = {{3, 2}, {4, 2}, {6, 2}, {8, 4}, {12, 4}};
  for (const auto& [n, phi_n] : phi) {
    const auto group = automorphism_group(n);
    CHECK(static_cast<int>(group.size()) == n * phi_n);
    for (const auto& a : group)
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
          const DihedralElement x = DihedralElement::decode(n, i);
          const DihedralElement y = DihedralElement::decode(n, j);
          CHECK(apply(a, mul(x, y)) == mul(apply(a, x), apply(a, y)));
        }
  }
}

TEST_CASE("only the identity automorphism preserves intervals") {
  for (int n : {8, 12}) {
    const auto preserving = interval_preserving_automorphisms(n);
    REQUIRE(preserving.size() == 1);
    CHECK(preserving[0] == DihedralAutomorphism{0, 1});
  }
}

TEST_CASE("element and set text forms") {
  CHECK(DihedralElement::parse(12, "4-") == DihedralElement(12, 4, -1));
  CHECK(DihedralElement::parse(12, "0+") == DihedralElement::identity(12));
  CHECK(DihedralElement(12, 4, -1).to_string() == "4-");
  CHECK_THROWS_AS(DihedralElement::parse(12, "12+"), std::invalid_argument);
  CHECK_THROWS_AS(DihedralElement::parse(12, "4"), std::invalid_argument);

  const DihedralSet s = DihedralSet::parse(12, "0+,1-,4-,6+");
  CHECK(s.to_string() == "0+,1-,4-,6+");
  CHECK(s.plus_part() == ZnSet(12, {0, 6}));
  CHECK(s.minus_part() == ZnSet(12, {1, 4}));
  CHECK_THROWS_AS(DihedralSet::parse(12, "0+,0+"), std::invalid_argument);
  CHECK_THROWS_AS(DihedralSet::parse(12, "0*"), std::invalid_argument);
}

TEST_CASE("element encoding round-trips") {
  for (int n : {1, 5, 12, 36})
    for (int i = 0; i < 2 * n; ++i) CHECK(DihedralElement::decode(n, i).encoded() == i);
}
