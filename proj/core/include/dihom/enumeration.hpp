#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dihom/homometry.hpp"

namespace dihom {

struct CanonicalZnOrbit {
  ZnSet representative;
  int orbit_size = 1;
};

struct CanonicalDnOrbit {
  DihedralSet representative;
  int orbit_size = 1;
  Side side = Side::right;
};

/// Minimum of the orbit of s under the side's trivial translations (left
/// translations for side=right), in (plus mask, minus mask) lexicographic
/// order. orbit_size divides 2n.
CanonicalDnOrbit canonicalize(const DihedralSet& s, Side side);

/// Minimum of the orbit under the 2n transpositions and inversions.
CanonicalZnOrbit canonicalize_zn(const ZnSet& s);

/// Census of homometric t-uples: canonical orbits grouped by their side
/// interval vector; a class holding exactly t >= 2 orbits counts as one
/// t-uple (t=2 pair, t=3 triple, ...).
struct DnCensus {
  int n = 0;
  int cardinality = 0;
  Side side = Side::right;

  /// multiplicity t -> class count, for classes of mixed sets (both signs
  /// used). Classes of single-signature sets carry no cross-sign intervals;
  /// their homometry reduces to plain Z_n structure, and the reference
  /// census does not count them. They are tallied separately below.
  std::map<int, std::int64_t> tuples;

  struct IvClass {
    std::vector<int> iv_counts;        // 2n counts, frozen layout
    std::vector<DihedralSet> orbits;   // canonical representatives, ascending
  };
  std::vector<IvClass> classes;        // mixed classes with >= 2 orbits

  /// multiplicity -> count of single-signature classes (representatives are
  /// not stored; each reduces to a Z_n interval-vector class modulo
  /// transposition alone)
  std::map<int, std::int64_t> degenerate_tuples;

  std::int64_t subset_count = 0;       // C(2n, cardinality)
  std::int64_t orbit_count = 0;        // number of canonical representatives
  std::int64_t orbit_size_total = 0;   // equals subset_count
};

/// Iterates every cardinality-subset of D_n, keeping only subsets that are
/// the minimum of their orbit, and groups the survivors by side interval
/// vector. Deterministic for any worker count.
DnCensus enumerate_dn(int n, int cardinality, Side side, int jobs = 1);

/// How pairs of canonical orbits from one side's census are tested for
/// homometry on the other side.
enum class SimultaneousConvention {
  frozen_representatives,  // compare the frozen canonical representatives as-is
  any_representative,      // allow independent re-translation of either orbit
};

/// Convention that reproduces the bundled census table; see README.
inline constexpr SimultaneousConvention kDefaultSimultaneousConvention =
    SimultaneousConvention::any_representative;

struct SimCensus {
  int n = 0;
  int cardinality = 0;
  Side side = Side::right;  // side of the base census
  SimultaneousConvention convention = kDefaultSimultaneousConvention;
  std::map<int, std::int64_t> tuples;
  std::vector<DnCensus::IvClass> classes;
};

/// Counts t-uples that are non-trivially homometric on both sides: within
/// each base-census class, representatives are regrouped by their other-side
/// interval vector and collapsed modulo the other side's trivial translations.
SimCensus enumerate_simultaneous(int n, int cardinality,
                                 SimultaneousConvention convention = kDefaultSimultaneousConvention,
                                 Side side = Side::right, int jobs = 1);

/// Same refinement applied to an already-computed census.
SimCensus simultaneous_from(const DnCensus& base,
                            SimultaneousConvention convention = kDefaultSimultaneousConvention);

struct ZnCensus {
  int n = 0;
  int cardinality = 0;
  std::map<int, std::int64_t> tuples;

  struct IvClass {
    std::vector<int> iv_counts;
    std::vector<ZnSet> orbits;
  };
  std::vector<IvClass> classes;

  std::int64_t subset_count = 0;
  std::int64_t orbit_count = 0;
  std::int64_t orbit_size_total = 0;
};

/// Same census over subsets of Z_n, with the trivial group being the 2n
/// transpositions and inversions.
ZnCensus enumerate_zn(int n, int cardinality, int jobs = 1);

/// "8 pairs, 2 triples" (empty census: "none").
std::string tuples_text(const std::map<int, std::int64_t>& tuples);
/// "2:8,3:2" (empty census: "-"); the machine-stable form used in TSV output.
std::string tuples_compact(const std::map<int, std::int64_t>& tuples);

std::string to_json(const DnCensus& census, bool include_classes = false);
std::string to_json(const ZnCensus& census, bool include_classes = false);
std::string to_json(const SimCensus& census, bool include_classes = false);

/// The (cardinality, n) cells of the bundled reference census table.
const std::vector<std::pair<int, int>>& census_grid();

/// One TSV row "p\tn\t<right census>\t<simultaneous census>" per grid cell,
/// in grid order. Byte-identical for any worker count.
std::string census_grid_tsv(int jobs = 1,
                            SimultaneousConvention convention = kDefaultSimultaneousConvention);

/// Re-translation of a canonical representative used for musical listings:
/// the orbit member whose plus part contains residue 0 with the smallest
/// (minus mask, plus mask).
DihedralSet display_normalized(const DihedralSet& s, Side side);

/// Classes of the musical D_12 listing at the given cardinality, each class a
/// sorted vector of rendered chord sets like "{C,c,eb,Gb}".
std::vector<std::vector<std::string>> table1_classes(int cardinality, Side side, int jobs = 1);

/// Full musical listing for D_12, cardinalities 4 and 5, both sides.
std::string table1_listing(int jobs = 1);

std::int64_t binomial(int n, int k);

}  // namespace dihom
