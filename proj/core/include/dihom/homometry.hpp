#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dihom/dihedral.hpp"

namespace dihom {

/// Side of the group action. Right homometry (equal right interval vectors)
/// is invariant under left translation, and vice versa.
enum class Side { left, right };

std::string to_string(Side side);
Side parse_side(std::string_view text);

/// Equality of the corresponding interval vectors, exact integers.
bool is_right_homometric(const DihedralSet& a, const DihedralSet& b);
bool is_left_homometric(const DihedralSet& a, const DihedralSet& b);
bool is_homometric(const DihedralSet& a, const DihedralSet& b, Side side);

/// Decomposition route: right homometry holds iff
///   iv(A+) + iv(A-) == iv(B+) + iv(B-)  and  ifunc(A+,A-) == ifunc(B+,B-);
/// for the left side the second condition uses ifunc(I_0 A+, A-).
/// Agrees with the direct interval-vector comparison on every input.
bool right_homometric_by_parts(const DihedralSet& a, const DihedralSet& b);
bool left_homometric_by_parts(const DihedralSet& a, const DihedralSet& b);
bool homometric_by_parts(const DihedralSet& a, const DihedralSet& b, Side side);

/// Searches the 2n translations that preserve the side's interval vector
/// (left translations for side=right, right translations for side=left) for
/// one mapping a onto b. Returns the witness with the smallest element
/// encoding, or nullopt when the sets are not translates.
std::optional<DihedralElement> triviality_witness(const DihedralSet& a, const DihedralSet& b,
                                                  Side side);

struct HomometryVerdict {
  Side side = Side::right;
  bool homometric = false;
  std::optional<DihedralElement> trivial_witness;
};
HomometryVerdict classify_homometry(const DihedralSet& a, const DihedralSet& b, Side side);

/// Elementwise inversion of both sets. The input pair is non-trivially
/// right-homometric iff the output pair is non-trivially left-homometric.
std::pair<DihedralSet, DihedralSet> duality_transport(const DihedralSet& a, const DihedralSet& b);

/// Whether the first-factor projections are homometric in Z_n. True for
/// right-homometric pairs whenever both projections are faithful (no residue
/// carries both signs); can be false for left-homometric pairs.
bool projection_check(const DihedralSet& a, const DihedralSet& b);

/// Interval vector of the projection counted with multiplicity:
/// iv(A+) + iv(A-) + ifunc(A+,A-) + ifunc(A-,A+). Right-homometric sets
/// always agree on it, even when a residue carries both signs.
IntervalVector projection_multiset_iv(const DihedralSet& s);
bool projection_multiset_check(const DihedralSet& a, const DihedralSet& b);

/// True iff both plus parts (or both minus parts) are I_0-symmetric. When it
/// holds, right and left homometry of (a,b) are equivalent.
bool symmetric_part_criterion(const DihedralSet& a, const DihedralSet& b);

/// Spectral form of the by-parts conditions, checked pointwise within
/// kSpectralTolerance:
///   right: |F_{A+}|^2 + |F_{A-}|^2 == |F_{B+}|^2 + |F_{B-}|^2
///          and conj(F_{A+}) F_{A-} == conj(F_{B+}) F_{B-};
///   left:  second condition becomes F_{A+} F_{A-} == F_{B+} F_{B-}.
bool fourier_conditions(const DihedralSet& a, const DihedralSet& b, Side side);

}  // namespace dihom
