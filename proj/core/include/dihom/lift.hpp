#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dihom/homometry.hpp"

namespace dihom {

/// Split of a homometric pair A = A1 u A2, B = B1 u B2 (both unions disjoint)
/// with iv(A1) == iv(B1) and iv(A2) == iv(B2).
struct Decomposition {
  ZnSet a1, a2, b1, b2;

  ZnSet a() const { return a1.united(a2); }
  ZnSet b() const { return b1.united(b2); }

  /// Throws std::domain_error unless the construction preconditions hold.
  void validate() const;
};

struct LiftResult {
  DihedralSet lifted_a;
  DihedralSet lifted_b;
  Side side = Side::right;
  bool nontrivial = false;
};

/// Lifts the decomposition into a right-homometric pair in D_n by testing the
/// candidate sign assignments {A+,A-} = {A1,A2}, {B+,B-} = {B1,B2} against the
/// exact by-parts condition; the first assignment that satisfies it wins
/// (A1 to plus first, then B1 to plus first).
///
/// Not every conforming decomposition admits one: the spectral argument
/// behind the construction picks between F_{A1}conj(F_{A2}) = F_{B1}conj(F_{B2})
/// and its conjugate per frequency, and the choice can differ across
/// frequencies (e.g. A1={1}, A2={0,4,6}, B1={0}, B2={1,3,7} in Z_12). When no
/// assignment works, std::logic_error is thrown. Decompositions whose parts
/// are translates of each other, such as rosenblatt_decomposition, always
/// lift.
LiftResult construct_lift(const Decomposition& d);

/// The four-element homometric family in Z_{4N}:
/// A = {0, a, a+N, 2N}, B = {0, a, N, 2N+a}, for N >= 2 and 1 <= a <= N-1.
std::pair<ZnSet, ZnSet> rosenblatt_pair(int big_n, int a);

/// Canonical decomposition of the family above:
/// A1 = {0,2N}, A2 = {a,a+N}, B1 = {a,2N+a}, B2 = {0,N}.
Decomposition rosenblatt_decomposition(int big_n, int a);

/// Exhausts the 2^|A| * 2^|B| sign assignments and returns every lift whose
/// pair is non-trivially homometric for the side, deduplicated modulo the
/// side's trivial translations, in ascending assignment-bitmask order.
/// Requires |A|, |B| <= 20 and A homometric with B.
std::vector<LiftResult> enumerate_lifts(const ZnSet& a, const ZnSet& b, Side side);

/// Per-pair outcome of the exhaustive lift search. A single-signature lift
/// (every element sent to the same sign) succeeds for any non-trivially
/// homometric pair, so coverage is judged on mixed lifts, the substantive
/// claim.
struct LiftCoverageEntry {
  ZnSet a;
  ZnSet b;
  std::size_t lift_count = 0;        // all non-trivial lift classes
  std::size_t mixed_lift_count = 0;  // those using both signs on both sets
  bool lifted() const { return mixed_lift_count > 0; }
};

struct LiftCoverageReport {
  std::vector<int> cardinalities;
  std::vector<LiftCoverageEntry> entries;
  std::size_t failures = 0;  // pairs without a mixed lift
};

/// Enumerates every non-trivially homometric pair in Z_12 at the given
/// cardinalities (subsets of {3..9}) and searches right-homometric lifts for
/// each. All of them are expected to lift.
LiftCoverageReport lift_coverage_z12(const std::vector<int>& cardinalities);

}  // namespace dihom
