#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dihom/zn.hpp"

namespace dihom {

/// Element (k, eps) of the dihedral group D_n realised as the semidirect
/// product Z_n x| {+1,-1}, with product (k,e)(l,h) = (k + e*l, e*h).
struct DihedralElement {
  int n = 1;
  int k = 0;
  int eps = +1;

  DihedralElement() = default;
  DihedralElement(int modulus, int rotation, int sign);

  static DihedralElement identity(int modulus) { return DihedralElement(modulus, 0, +1); }

  /// Text form "k+" / "k-", e.g. "4-" for (4,-1).
  static DihedralElement parse(int modulus, std::string_view text);
  std::string to_string() const;

  /// Frozen element encoding: (k,+1) -> k, (k,-1) -> n + k.
  int encoded() const { return eps > 0 ? k : n + k; }
  static DihedralElement decode(int modulus, int index);

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

DihedralElement mul(const DihedralElement& x, const DihedralElement& y);
DihedralElement inverse(const DihedralElement& x);

/// Unique g with g * x == y.
DihedralElement left_interval(const DihedralElement& x, const DihedralElement& y);
/// Unique g with x * g == y.
DihedralElement right_interval(const DihedralElement& x, const DihedralElement& y);

/// Subset of D_n stored as the pair of residue masks of its +1 and -1 parts.
/// Comparison order (used for canonical orbit representatives) is
/// lexicographic on (plus mask, minus mask).
class DihedralSet {
 public:
  explicit DihedralSet(int modulus);
  static DihedralSet from_parts(const ZnSet& plus, const ZnSet& minus);
  static DihedralSet from_masks(int modulus, std::uint64_t plus, std::uint64_t minus);

  /// Text form "0-,1+,3+,4-,8-".
  static DihedralSet parse(int modulus, std::string_view text);

  int modulus() const { return n_; }
  std::uint64_t plus_mask() const { return plus_; }
  std::uint64_t minus_mask() const { return minus_; }
  ZnSet plus_part() const;   // residues of the (k,+1) elements
  ZnSet minus_part() const;  // residues of the (k,-1) elements

  int cardinality() const;
  bool empty() const { return plus_ == 0 && minus_ == 0; }
  bool contains(const DihedralElement& e) const;
  void insert(const DihedralElement& e);  // no-op on duplicates
  std::vector<DihedralElement> elements() const;  // ascending (k, +1 before -1)

  std::string to_string() const;

  friend bool operator==(const DihedralSet&, const DihedralSet&) = default;
  friend auto operator<=>(const DihedralSet&, const DihedralSet&) = default;

 private:
  int n_;
  std::uint64_t plus_;
  std::uint64_t minus_;
};

/// counts has 2n entries in the frozen layout (l,+1) -> index l,
/// (l,-1) -> index n + l.
struct DihedralIntervalVector {
  int modulus = 0;
  std::vector<int> counts;

  int at(int l, int eps) const { return counts[static_cast<std::size_t>(eps > 0 ? l : modulus + l)]; }
  std::string to_string() const;

  friend bool operator==(const DihedralIntervalVector&, const DihedralIntervalVector&) = default;
};

DihedralIntervalVector left_iv(const DihedralSet& s);
DihedralIntervalVector right_iv(const DihedralSet& s);

DihedralSet act_left(const DihedralElement& g, const DihedralSet& s);
DihedralSet act_right(const DihedralSet& s, const DihedralElement& g);

/// Elementwise group inverse: negates the +1 part, keeps the -1 part.
DihedralSet set_inversion(const DihedralSet& s);

/// Projection onto the first factor. Residues present in both parts appear once.
ZnSet project(const DihedralSet& s);

/// Automorphism (l,k) of D_n with gcd(k,n) = 1:
/// (p,+1) -> (k*p,+1), (q,-1) -> (k*q+l,-1).
struct DihedralAutomorphism {
  int l = 0;
  int k = 1;

  friend bool operator==(const DihedralAutomorphism&, const DihedralAutomorphism&) = default;
};

DihedralElement apply(const DihedralAutomorphism& a, const DihedralElement& x);

/// All n*phi(n) automorphisms, ordered by (l, k).
std::vector<DihedralAutomorphism> automorphism_group(int n);

/// The automorphisms preserving both left and right intervals on every pair
/// of elements. For n >= 3 this is exactly the identity (0,1).
std::vector<DihedralAutomorphism> interval_preserving_automorphisms(int n);

}  // namespace dihom
