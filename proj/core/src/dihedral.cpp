#include "dihom/dihedral.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "dihom/detail/bits.hpp"

namespace dihom {

namespace {

void check_modulus(int n) {
  if (n < 1 || n > ZnSet::kMaxModulus)
    throw std::domain_error("modulus must lie in [1, 64], got " + std::to_string(n));
}

void check_same_modulus(int a, int b) {
  if (a != b)
    throw std::domain_error("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

DihedralElement::DihedralElement(int modulus, int rotation, int sign) : n(modulus) {
  check_modulus(modulus);
  if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");
  k = detail::mod(rotation, modulus);
  eps = sign;
}

DihedralElement DihedralElement::parse(int modulus, std::string_view text) {
  if (text.size() < 2 || (text.back() != '+' && text.back() != '-'))
    throw std::invalid_argument("dihedral element must end in '+' or '-': '" + std::string(text) + "'");
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size() - 1, value);
  if (ec != std::errc{} || ptr != text.data() + text.size() - 1)
    throw std::invalid_argument("invalid rotation in dihedral element '" + std::string(text) + "'");
  if (value < 0 || value >= modulus)
    throw std::invalid_argument("rotation " + std::to_string(value) + " out of range in '" +
                                std::string(text) + "'");
  return DihedralElement(modulus, value, text.back() == '+' ? +1 : -1);
}

std::string DihedralElement::to_string() const {
  return std::to_string(k) + (eps > 0 ? "+" : "-");
}

DihedralElement DihedralElement::decode(int modulus, int index) {
  if (index < 0 || index >= 2 * modulus) throw std::domain_error("element index out of range");
  return index < modulus ? DihedralElement(modulus, index, +1)
                         : DihedralElement(modulus, index - modulus, -1);
}

DihedralElement mul(const DihedralElement& x, const DihedralElement& y) {
  check_same_modulus(x.n, y.n);
  return DihedralElement(x.n, x.k + x.eps * y.k, x.eps * y.eps);
}

DihedralElement inverse(const DihedralElement& x) {
  return DihedralElement(x.n, -x.k * x.eps, x.eps);
}

DihedralElement left_interval(const DihedralElement& x, const DihedralElement& y) {
  return mul(y, inverse(x));
}

DihedralElement right_interval(const DihedralElement& x, const DihedralElement& y) {
  return mul(inverse(x), y);
}

DihedralSet::DihedralSet(int modulus) : n_(modulus), plus_(0), minus_(0) {
  check_modulus(modulus);
}

DihedralSet DihedralSet::from_parts(const ZnSet& plus, const ZnSet& minus) {
  check_same_modulus(plus.modulus(), minus.modulus());
  DihedralSet s(plus.modulus());
  s.plus_ = plus.mask();
  s.minus_ = minus.mask();
  return s;
}

DihedralSet DihedralSet::from_masks(int modulus, std::uint64_t plus, std::uint64_t minus) {
  DihedralSet s(modulus);
  if ((plus | minus) & ~detail::full_mask(modulus))
    throw std::domain_error("mask has bits outside [0, n)");
  s.plus_ = plus;
  s.minus_ = minus;
  return s;
}

DihedralSet DihedralSet::parse(int modulus, std::string_view text) {
  DihedralSet out(modulus);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t lo = pos, hi = end;
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    if (lo == hi) {
      if (pos == 0 && end == text.size()) break;  // "" is the empty set
      throw std::invalid_argument("empty element at position " + std::to_string(pos));
    }
    DihedralElement e;
    try {
      e = DihedralElement::parse(modulus, text.substr(lo, hi - lo));
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument(std::string(err.what()) + " at position " + std::to_string(lo));
    }
    if (out.contains(e))
      throw std::invalid_argument("duplicate element '" + e.to_string() + "' at position " +
                                  std::to_string(lo));
    out.insert(e);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

ZnSet DihedralSet::plus_part() const { return ZnSet::from_mask(n_, plus_); }
ZnSet DihedralSet::minus_part() const { return ZnSet::from_mask(n_, minus_); }

int DihedralSet::cardinality() const { return std::popcount(plus_) + std::popcount(minus_); }

bool DihedralSet::contains(const DihedralElement& e) const {
  if (e.n != n_) return false;
  const std::uint64_t part = e.eps > 0 ? plus_ : minus_;
  return ((part >> e.k) & 1u) != 0;
}

void DihedralSet::insert(const DihedralElement& e) {
  check_same_modulus(e.n, n_);
  (e.eps > 0 ? plus_ : minus_) |= 1ull << e.k;
}

std::vector<DihedralElement> DihedralSet::elements() const {
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (int k = 0; k < n_; ++k) {
    if ((plus_ >> k) & 1u) out.push_back(DihedralElement(n_, k, +1));
    if ((minus_ >> k) & 1u) out.push_back(DihedralElement(n_, k, -1));
  }
  return out;
}

std::string DihedralSet::to_string() const {
  std::string out;
  for (const DihedralElement& e : elements()) {
    if (!out.empty()) out += ',';
    out += e.to_string();
  }
  return out;
}

std::string DihedralIntervalVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(counts[i]);
  }
  out += ']';
  return out;
}

namespace {

DihedralIntervalVector interval_vector(const DihedralSet& s, bool right) {
  const int n = s.modulus();
  DihedralIntervalVector v{n, std::vector<int>(static_cast<std::size_t>(2 * n), 0)};
  const auto elems = s.elements();
  for (const DihedralElement& x : elems)
    for (const DihedralElement& y : elems) {
      const DihedralElement g = right ? right_interval(x, y) : left_interval(x, y);
      ++v.counts[static_cast<std::size_t>(g.encoded())];
    }
  return v;
}

}  // namespace

DihedralIntervalVector left_iv(const DihedralSet& s) { return interval_vector(s, false); }
DihedralIntervalVector right_iv(const DihedralSet& s) { return interval_vector(s, true); }

DihedralSet act_left(const DihedralElement& g, const DihedralSet& s) {
  check_same_modulus(g.n, s.modulus());
  const int n = s.modulus();
  if (g.eps > 0) {
    // (p,1)(a,e) = (p+a, e): both parts transpose
    return DihedralSet::from_masks(n, detail::rotl(s.plus_mask(), g.k, n),
                                   detail::rotl(s.minus_mask(), g.k, n));
  }
  // (p,-1)(a,1) = (p-a,-1) and (p,-1)(a,-1) = (p-a,1): parts swap and invert
  return DihedralSet::from_masks(n, detail::rotl(detail::reflect(s.minus_mask(), n), g.k, n),
                                 detail::rotl(detail::reflect(s.plus_mask(), n), g.k, n));
}

DihedralSet act_right(const DihedralSet& s, const DihedralElement& g) {
  check_same_modulus(g.n, s.modulus());
  const int n = s.modulus();
  if (g.eps > 0) {
    // (a,1)(p,1) = (a+p,1), (a,-1)(p,1) = (a-p,-1)
    return DihedralSet::from_masks(n, detail::rotl(s.plus_mask(), g.k, n),
                                   detail::rotr(s.minus_mask(), g.k, n));
  }
  // (a,1)(p,-1) = (a+p,-1), (a,-1)(p,-1) = (a-p,1)
  return DihedralSet::from_masks(n, detail::rotr(s.minus_mask(), g.k, n),
                                 detail::rotl(s.plus_mask(), g.k, n));
}

DihedralSet set_inversion(const DihedralSet& s) {
  const int n = s.modulus();
  return DihedralSet::from_masks(n, detail::reflect(s.plus_mask(), n), s.minus_mask());
}

ZnSet project(const DihedralSet& s) {
  return ZnSet::from_mask(s.modulus(), s.plus_mask() | s.minus_mask());
}

DihedralElement apply(const DihedralAutomorphism& a, const DihedralElement& x) {
  if (detail::gcd_int(detail::mod(a.k, x.n), x.n) != 1)
    throw std::domain_error("automorphism multiplier " + std::to_string(a.k) +
                            " is not a unit modulo " + std::to_string(x.n));
  if (x.eps > 0) return DihedralElement(x.n, a.k * x.k, +1);
  return DihedralElement(x.n, a.k * x.k + a.l, -1);
}

std::vector<DihedralAutomorphism> automorphism_group(int n) {
  check_modulus(n);
  std::vector<DihedralAutomorphism> out;
  for (int l = 0; l < n; ++l)
    for (int k = 1; k < (n == 1 ? 2 : n); ++k)
      if (detail::gcd_int(k, n) == 1) out.push_back(DihedralAutomorphism{l, k});
  return out;
}

std::vector<DihedralAutomorphism> interval_preserving_automorphisms(int n) {
  if (n < 3) throw std::domain_error("interval-preserving search requires n >= 3");
  std::vector<DihedralAutomorphism> out;
  for (const DihedralAutomorphism& a : automorphism_group(n)) {
    bool preserving = true;
    for (int i = 0; i < 2 * n && preserving; ++i) {
      const DihedralElement x = DihedralElement::decode(n, i);
      const DihedralElement ax = apply(a, x);
      for (int j = 0; j < 2 * n; ++j) {
        const DihedralElement y = DihedralElement::decode(n, j);
        const DihedralElement ay = apply(a, y);
        if (right_interval(ax, ay) != right_interval(x, y) ||
            left_interval(ax, ay) != left_interval(x, y)) {
          preserving = false;
          break;
        }
      }
    }
    if (preserving) out.push_back(a);
  }
  return out;
}

}  // namespace dihom
