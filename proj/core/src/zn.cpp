#include "dihom/zn.hpp"

#include <bit>
#include <charconv>
#include <numbers>
#include <stdexcept>

#include "dihom/detail/bits.hpp"

namespace dihom {

namespace {

void check_modulus(int n) {
  if (n < 1 || n > ZnSet::kMaxModulus)
    throw std::domain_error("modulus must lie in [1, 64], got " + std::to_string(n));
}

void check_same_modulus(const ZnSet& a, const ZnSet& b) {
  if (a.modulus() != b.modulus())
    throw std::domain_error("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                            std::to_string(b.modulus()));
}

}  // namespace

ZnSet::ZnSet(int modulus) : n_(modulus), bits_(0) { check_modulus(modulus); }

ZnSet::ZnSet(int modulus, std::initializer_list<int> residues) : ZnSet(modulus) {
  for (int r : residues) insert(r);
}

ZnSet ZnSet::from_mask(int modulus, std::uint64_t mask) {
  check_modulus(modulus);
  if (mask & ~detail::full_mask(modulus))
    throw std::domain_error("mask has bits outside [0, n)");
  ZnSet s(modulus);
  s.bits_ = mask;
  return s;
}

ZnSet ZnSet::parse(int modulus, std::string_view text) {
  ZnSet out(modulus);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t lo = pos, hi = end;
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    if (lo == hi) {
      if (pos == 0 && end == text.size()) break;  // "" is the empty set
      throw std::invalid_argument("empty residue at position " + std::to_string(pos));
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
    if (ec != std::errc{} || ptr != text.data() + hi)
      throw std::invalid_argument("invalid residue at position " + std::to_string(lo));
    if (value < 0 || value >= modulus)
      throw std::invalid_argument("residue " + std::to_string(value) + " out of range at position " +
                                  std::to_string(lo));
    if (out.contains(value))
      throw std::invalid_argument("duplicate residue " + std::to_string(value) + " at position " +
                                  std::to_string(lo));
    out.insert(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

int ZnSet::cardinality() const { return std::popcount(bits_); }

bool ZnSet::contains(int residue) const {
  return residue >= 0 && residue < n_ && ((bits_ >> residue) & 1u) != 0;
}

void ZnSet::insert(int residue) {
  if (residue < 0 || residue >= n_)
    throw std::domain_error("residue " + std::to_string(residue) + " out of range for modulus " +
                            std::to_string(n_));
  bits_ |= 1ull << residue;
}

std::vector<int> ZnSet::residues() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest));
  return out;
}

ZnSet ZnSet::transposed(int p) const {
  return from_mask(n_, detail::rotl(bits_, detail::mod(p, n_), n_));
}

ZnSet ZnSet::inverted(int p) const {
  return from_mask(n_, detail::rotl(detail::reflect(bits_, n_), detail::mod(p, n_), n_));
}

ZnSet ZnSet::united(const ZnSet& other) const {
  check_same_modulus(*this, other);
  return from_mask(n_, bits_ | other.bits_);
}

ZnSet ZnSet::intersected(const ZnSet& other) const {
  check_same_modulus(*this, other);
  return from_mask(n_, bits_ & other.bits_);
}

bool ZnSet::disjoint_with(const ZnSet& other) const {
  check_same_modulus(*this, other);
  return (bits_ & other.bits_) == 0;
}

std::string ZnSet::to_string() const {
  std::string out;
  for (int r : residues()) {
    if (!out.empty()) out += ',';
    out += std::to_string(r);
  }
  return out;
}

IntervalVector& IntervalVector::operator+=(const IntervalVector& other) {
  if (modulus != other.modulus) throw std::domain_error("modulus mismatch in interval-vector sum");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

std::string IntervalVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(counts[i]);
  }
  out += ']';
  return out;
}

IntervalVector ifunc(const ZnSet& a, const ZnSet& b) {
  check_same_modulus(a, b);
  const int n = a.modulus();
  IntervalVector v{n, std::vector<int>(static_cast<std::size_t>(n), 0)};
  // ifunc(A,B)(k) = |B intersect T_k A|
  for (int k = 0; k < n; ++k)
    v.counts[static_cast<std::size_t>(k)] =
        std::popcount(b.mask() & detail::rotl(a.mask(), k, n));
  return v;
}

IntervalVector iv(const ZnSet& a) { return ifunc(a, a); }

bool is_homometric(const ZnSet& a, const ZnSet& b) { return iv(a) == iv(b); }

std::string ZnRelation::to_string() const {
  return (kind == Kind::transposition ? "T_" : "I_") + std::to_string(p);
}

std::optional<ZnRelation> trivial_relation(const ZnSet& a, const ZnSet& b) {
  check_same_modulus(a, b);
  for (int p = 0; p < a.modulus(); ++p) {
    if (a.transposed(p) == b) return ZnRelation{ZnRelation::Kind::transposition, p};
    if (a.inverted(p) == b) return ZnRelation{ZnRelation::Kind::inversion, p};
  }
  return std::nullopt;
}

Spectrum dft(const ZnSet& a) {
  const int n = a.modulus();
  Spectrum s{n, std::vector<std::complex<double>>(static_cast<std::size_t>(n))};
  const double base = -2.0 * std::numbers::pi / n;
  const auto elems = a.residues();
  for (int t = 0; t < n; ++t) {
    std::complex<double> acc{0.0, 0.0};
    for (int k : elems) acc += std::polar(1.0, base * ((k * t) % n));
    s.values[static_cast<std::size_t>(t)] = acc;
  }
  return s;
}

}  // namespace dihom
