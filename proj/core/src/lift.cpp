#include "dihom/lift.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "dihom/enumeration.hpp"

namespace dihom {

void Decomposition::validate() const {
  if (a1.modulus() != a2.modulus() || b1.modulus() != b2.modulus() ||
      a1.modulus() != b1.modulus())
    throw std::domain_error("decomposition parts must share one modulus");
  if (!a1.disjoint_with(a2)) throw std::domain_error("A1 and A2 must be disjoint");
  if (!b1.disjoint_with(b2)) throw std::domain_error("B1 and B2 must be disjoint");
  if (!is_homometric(a(), b()))
    throw std::domain_error("A1 u A2 and B1 u B2 must be homometric");
  if (iv(a1) != iv(b1)) throw std::domain_error("iv(A1) must equal iv(B1)");
  if (iv(a2) != iv(b2)) throw std::domain_error("iv(A2) must equal iv(B2)");
}

LiftResult construct_lift(const Decomposition& d) {
  d.validate();
  // iv(A+) + iv(A-) == iv(B+) + iv(B-) holds for every assignment, so only
  // the cross condition ifunc(A+,A-) == ifunc(B+,B-) discriminates.
  const std::array<std::pair<const ZnSet*, const ZnSet*>, 2> a_orders = {
      {{&d.a1, &d.a2}, {&d.a2, &d.a1}}};
  const std::array<std::pair<const ZnSet*, const ZnSet*>, 2> b_orders = {
      {{&d.b1, &d.b2}, {&d.b2, &d.b1}}};
  for (const auto& [ap, am] : a_orders)
    for (const auto& [bp, bm] : b_orders) {
      const DihedralSet lifted_a = DihedralSet::from_parts(*ap, *am);
      const DihedralSet lifted_b = DihedralSet::from_parts(*bp, *bm);
      if (right_homometric_by_parts(lifted_a, lifted_b)) {
        LiftResult result{lifted_a, lifted_b, Side::right, false};
        result.nontrivial = !triviality_witness(lifted_a, lifted_b, Side::right).has_value();
        return result;
      }
    }
  throw std::logic_error("no sign assignment yields a right-homometric lift");
}

std::pair<ZnSet, ZnSet> rosenblatt_pair(int big_n, int a) {
  if (big_n < 2) throw std::domain_error("family parameter N must be >= 2");
  if (a < 1 || a > big_n - 1) throw std::domain_error("shift a must lie in [1, N-1]");
  const int n = 4 * big_n;
  if (n > ZnSet::kMaxModulus) throw std::domain_error("modulus 4N exceeds the supported range");
  return {ZnSet(n, {0, a, a + big_n, 2 * big_n}), ZnSet(n, {0, a, big_n, 2 * big_n + a})};
}

Decomposition rosenblatt_decomposition(int big_n, int a) {
  auto [set_a, set_b] = rosenblatt_pair(big_n, a);
  const int n = set_a.modulus();
  return Decomposition{ZnSet(n, {0, 2 * big_n}),
                       ZnSet(n, {a, a + big_n}),
                       ZnSet(n, {a, 2 * big_n + a}),
                       ZnSet(n, {0, big_n})};
}

namespace {

DihedralSet lifted_by_mask(const ZnSet& base, unsigned mask) {
  // bit i set => the i-th residue (ascending) gets sign -1
  DihedralSet out(base.modulus());
  const auto residues = base.residues();
  for (std::size_t i = 0; i < residues.size(); ++i)
    out.insert(DihedralElement(base.modulus(), residues[i], (mask >> i) & 1u ? -1 : +1));
  return out;
}

}  // namespace

std::vector<LiftResult> enumerate_lifts(const ZnSet& a, const ZnSet& b, Side side) {
  if (a.modulus() != b.modulus()) throw std::domain_error("modulus mismatch");
  if (a.cardinality() > 20 || b.cardinality() > 20)
    throw std::domain_error("lift enumeration is limited to sets of at most 20 elements");
  if (!is_homometric(a, b)) throw std::domain_error("sets must be homometric");

  std::vector<LiftResult> results;
  std::set<std::array<std::uint64_t, 4>> seen;
  const unsigned limit_a = 1u << a.cardinality();
  const unsigned limit_b = 1u << b.cardinality();
  for (unsigned mask_a = 0; mask_a < limit_a; ++mask_a) {
    const DihedralSet lifted_a = lifted_by_mask(a, mask_a);
    const CanonicalDnOrbit canon_a = canonicalize(lifted_a, side);
    for (unsigned mask_b = 0; mask_b < limit_b; ++mask_b) {
      const DihedralSet lifted_b = lifted_by_mask(b, mask_b);
      if (!homometric_by_parts(lifted_a, lifted_b, side)) continue;
      if (triviality_witness(lifted_a, lifted_b, side).has_value()) continue;
      const CanonicalDnOrbit canon_b = canonicalize(lifted_b, side);
      const std::array<std::uint64_t, 4> key = {
          canon_a.representative.plus_mask(), canon_a.representative.minus_mask(),
          canon_b.representative.plus_mask(), canon_b.representative.minus_mask()};
      if (!seen.insert(key).second) continue;
      results.push_back(LiftResult{lifted_a, lifted_b, side, true});
    }
  }
  return results;
}

LiftCoverageReport lift_coverage_z12(const std::vector<int>& cardinalities) {
  for (int card : cardinalities)
    if (card < 3 || card > 9)
      throw std::domain_error("cardinalities must lie in [3, 9], got " + std::to_string(card));

  LiftCoverageReport report;
  report.cardinalities = cardinalities;
  for (int card : cardinalities) {
    const ZnCensus census = enumerate_zn(12, card);
    for (const auto& cls : census.classes)
      for (std::size_t i = 0; i < cls.orbits.size(); ++i)
        for (std::size_t j = i + 1; j < cls.orbits.size(); ++j) {
          LiftCoverageEntry entry{cls.orbits[i], cls.orbits[j], 0, 0};
          for (const LiftResult& lift :
               enumerate_lifts(cls.orbits[i], cls.orbits[j], Side::right)) {
            ++entry.lift_count;
            if (lift.lifted_a.plus_mask() != 0 && lift.lifted_a.minus_mask() != 0 &&
                lift.lifted_b.plus_mask() != 0 && lift.lifted_b.minus_mask() != 0)
              ++entry.mixed_lift_count;
          }
          if (!entry.lifted()) ++report.failures;
          report.entries.push_back(std::move(entry));
        }
  }
  return report;
}

}  // namespace dihom
