#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "dihom/zn.hpp"

using namespace dihom;

namespace {

// reference interval function by direct pair enumeration
IntervalVector ifunc_brute(const ZnSet& a, const ZnSet& b) {
  IntervalVector v{a.modulus(), std::vector<int>(static_cast<std::size_t>(a.modulus()), 0)};
  for (int x : a.residues())
    for (int y : b.residues())
      ++v.counts[static_cast<std::size_t>(((y - x) % a.modulus() + a.modulus()) % a.modulus())];
  return v;
}

ZnSet random_set(std::mt19937_64& rng, int n) {
  return ZnSet::from_mask(n, rng() & ((n == 64 ? ~0ull : (1ull << n) - 1)));
}

}  // namespace

TEST_CASE("ifunc counts ordered pairs") {
  const ZnSet a(12, {0, 6});
  const ZnSet b(12, {1, 4});
  const IntervalVector v = ifunc(a, b);
  CHECK(v.counts == std::vector<int>{0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0});

  const ZnSet empty(12);
  CHECK(ifunc(empty, b).counts == std::vector<int>(12, 0));

  const ZnSet c(12, {1, 3});
  const ZnSet d(12, {0, 4, 8});
  CHECK(ifunc(c, d).counts == std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("ifunc matches brute-force pair enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const ZnSet a = random_set(rng, n);
    const ZnSet b = random_set(rng, n);
    CHECK(ifunc(a, b) == ifunc_brute(a, b));
  }
}

TEST_CASE("ifunc rejects modulus mismatch") {
  CHECK_THROWS_AS(ifunc(ZnSet(12), ZnSet(10)), std::domain_error);
}

TEST_CASE("interval vector of the all-interval tetrachords") {
  const std::vector<int> expected = {4, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1};
  CHECK(iv(ZnSet(12, {0, 1, 4, 6})).counts == expected);
  CHECK(iv(ZnSet(12, {0, 1, 3, 7})).counts == expected);
  CHECK(iv(ZnSet(12, {0})).counts == std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("iv invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const ZnSet a = random_set(rng, n);
    const IntervalVector v = iv(a);
    CHECK(v.counts[0] == a.cardinality());
    int total = 0;
    for (int k = 0; k < n; ++k) {
      CHECK(v.counts[static_cast<std::size_t>(k)] ==
            v.counts[static_cast<std::size_t>((n - k) % n)]);
      total += v.counts[static_cast<std::size_t>(k)];
    }
    CHECK(total == a.cardinality() * a.cardinality());

    const int p = static_cast<int>(rng() % n);
    CHECK(iv(a.transposed(p)) == v);
    CHECK(iv(a.inverted(p)) == v);
  }
}

TEST_CASE("ifunc reciprocity: ifunc(A,B)(k) == ifunc(B,A)(n-k)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 16);
    const ZnSet a = random_set(rng, n);
    const ZnSet b = random_set(rng, n);
    const IntervalVector ab = ifunc(a, b);
    const IntervalVector ba = ifunc(b, a);
    for (int k = 0; k < n; ++k)
      CHECK(ab.counts[static_cast<std::size_t>(k)] ==
            ba.counts[static_cast<std::size_t>((n - k) % n)]);
  }
}

TEST_CASE("transpose and invert") {
  const ZnSet a(12, {1, 3});
  CHECK(a.transposed(0) == a);
  CHECK(a.transposed(2) == ZnSet(12, {3, 5}));
  CHECK(a.inverted(0) == ZnSet(12, {9, 11}));
  CHECK(a.inverted(0).cardinality() == a.cardinality());
}

TEST_CASE("homometry predicate") {
  CHECK(is_homometric(ZnSet(12, {0, 1, 4, 6}), ZnSet(12, {0, 1, 3, 7})));
  CHECK_FALSE(is_homometric(ZnSet(10, {0, 1, 2, 5, 7}), ZnSet(10, {0, 1, 6, 7, 8})));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 16);
    const ZnSet a = random_set(rng, n);
    CHECK(is_homometric(a, a.transposed(static_cast<int>(rng() % n))));
  }
}

TEST_CASE("trivial relation witness") {
  const ZnSet a(12, {0, 1, 4, 6});
  CHECK(trivial_relation(a, a) == ZnRelation{ZnRelation::Kind::transposition, 0});
  CHECK_FALSE(trivial_relation(a, ZnSet(12, {0, 1, 3, 7})).has_value());

  // both T_8 and I_0 map {1,3} onto {9,11}; the smaller p wins
  const auto witness = trivial_relation(ZnSet(12, {1, 3}), ZnSet(12, {9, 11}));
  REQUIRE(witness.has_value());
  CHECK(*witness == ZnRelation{ZnRelation::Kind::inversion, 0});
  CHECK(witness->to_string() == "I_0");
}

TEST_CASE("dft basics") {
  const Spectrum empty = dft(ZnSet(12));
  for (const auto& value : empty.values) CHECK(std::abs(value) == doctest::Approx(0.0));

  const Spectrum full = dft(ZnSet::from_mask(12, (1ull << 12) - 1));
  CHECK(full.values[0].real() == doctest::Approx(12.0));
  for (int t = 1; t < 12; ++t) CHECK(std::abs(full.values[static_cast<std::size_t>(t)]) < 1e-12);
}

TEST_CASE("homometric sets share magnitude spectra") {
  const Spectrum fa = dft(ZnSet(12, {0, 1, 4, 6}));
  const Spectrum fb = dft(ZnSet(12, {0, 1, 3, 7}));
  for (int t = 0; t < 12; ++t)
    CHECK(std::abs(fa.values[static_cast<std::size_t>(t)]) ==
          doctest::Approx(std::abs(fb.values[static_cast<std::size_t>(t)])).epsilon(1e-9));
}

TEST_CASE("dft convolution identity and Parseval") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 23);  // up to 24
    const ZnSet a = random_set(rng, n);
    const ZnSet b = random_set(rng, n);
    const Spectrum fa = dft(a);
    const Spectrum fb = dft(b);
    const IntervalVector v = ifunc(a, b);
    // F(ifunc(A,B))(t) == conj(F_A(t)) * F_B(t)
    for (int t = 0; t < n; ++t) {
      std::complex<double> transform{0.0, 0.0};
      for (int k = 0; k < n; ++k)
        transform += static_cast<double>(v.counts[static_cast<std::size_t>(k)]) *
                     std::polar(1.0, -2.0 * 3.14159265358979323846 * k * t / n);
      const std::complex<double> product =
          std::conj(fa.values[static_cast<std::size_t>(t)]) * fb.values[static_cast<std::size_t>(t)];
      CHECK(std::abs(transform - product) < 1e-9);
    }
    // sum of |F_A|^2 == n * |A|
    double energy = 0.0;
    for (const auto& value : fa.values) energy += std::norm(value);
    CHECK(energy == doctest::Approx(n * a.cardinality()).epsilon(1e-6));
  }
}

TEST_CASE("set text form") {
  CHECK(ZnSet::parse(12, "0,1,4,6") == ZnSet(12, {0, 1, 4, 6}));
  CHECK(ZnSet::parse(12, " 0, 1 ,4,6 ") == ZnSet(12, {0, 1, 4, 6}));
  CHECK(ZnSet::parse(12, "").empty());
  CHECK(ZnSet(12, {0, 1, 4, 6}).to_string() == "0,1,4,6");

  CHECK_THROWS_AS(ZnSet::parse(12, "0,0"), std::invalid_argument);
  CHECK_THROWS_AS(ZnSet::parse(12, "0,12"), std::invalid_argument);
  CHECK_THROWS_AS(ZnSet::parse(12, "0,,3"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(ZnSet::parse(12, "0,x"), doctest::Contains("position 2"),
                       std::invalid_argument);
}
