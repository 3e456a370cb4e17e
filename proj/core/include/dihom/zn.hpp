#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dihom {

/// Subset of Z_n stored as an n-bit mask (bit k = membership of residue k).
/// The mask encoding makes transposition a rotate and interval counting a
/// handful of shifted popcounts.
class ZnSet {
 public:
  static constexpr int kMaxModulus = 64;

  explicit ZnSet(int modulus);
  ZnSet(int modulus, std::initializer_list<int> residues);
  static ZnSet from_mask(int modulus, std::uint64_t mask);

  /// Parses the text form "0,1,4,6". Duplicates and out-of-range residues
  /// are rejected with the offending position in the message.
  static ZnSet parse(int modulus, std::string_view text);

  int modulus() const { return n_; }
  std::uint64_t mask() const { return bits_; }
  int cardinality() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int residue) const;
  void insert(int residue);  // no-op on duplicates
  std::vector<int> residues() const;

  ZnSet transposed(int p) const;  // T_p : a -> p + a
  ZnSet inverted(int p) const;    // I_p : a -> p - a
  ZnSet united(const ZnSet& other) const;
  ZnSet intersected(const ZnSet& other) const;
  bool disjoint_with(const ZnSet& other) const;

  std::string to_string() const;

  friend bool operator==(const ZnSet&, const ZnSet&) = default;
  friend auto operator<=>(const ZnSet&, const ZnSet&) = default;

 private:
  int n_;
  std::uint64_t bits_;
};

/// counts[k] = number of ordered pairs at interval k. For iv(A) the vector is
/// palindromic (counts[k] == counts[n-k]) and counts[0] == |A|.
struct IntervalVector {
  int modulus = 0;
  std::vector<int> counts;

  IntervalVector& operator+=(const IntervalVector& other);
  friend IntervalVector operator+(IntervalVector a, const IntervalVector& b) {
    a += b;
    return a;
  }
  std::string to_string() const;  // "[4,1,1,...]"

  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;
};

/// ifunc(A,B)(k) = #{(a,b) in A x B : b - a = k mod n}.
IntervalVector ifunc(const ZnSet& a, const ZnSet& b);

/// iv(A) = ifunc(A,A).
IntervalVector iv(const ZnSet& a);

/// Exact integer comparison of interval vectors.
bool is_homometric(const ZnSet& a, const ZnSet& b);

/// Witness of a trivial relation: a transposition or inversion mapping a onto
/// b. Candidates are scanned with smallest p first, T_p before I_p.
struct ZnRelation {
  enum class Kind { transposition, inversion };
  Kind kind = Kind::transposition;
  int p = 0;

  std::string to_string() const;  // "T_8", "I_0"
  friend bool operator==(const ZnRelation&, const ZnRelation&) = default;
};
std::optional<ZnRelation> trivial_relation(const ZnSet& a, const ZnSet& b);

/// DFT of the indicator function: values[t] = sum_{k in A} e^{-2 pi i k t / n}.
struct Spectrum {
  int modulus = 0;
  std::vector<std::complex<double>> values;
};
Spectrum dft(const ZnSet& a);

/// Tolerance (infinity norm) for every floating-point spectral cross-check.
/// Roundoff for sums of at most a few dozen unit-modulus terms stays orders
/// of magnitude below this.
inline constexpr double kSpectralTolerance = 1e-9;

}  // namespace dihom
