#include "dihom/homometry.hpp"

#include <cmath>
#include <stdexcept>

namespace dihom {

namespace {

void check_same_modulus(const DihedralSet& a, const DihedralSet& b) {
  if (a.modulus() != b.modulus())
    throw std::domain_error("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                            std::to_string(b.modulus()));
}

}  // namespace

std::string to_string(Side side) { return side == Side::left ? "left" : "right"; }

Side parse_side(std::string_view text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw std::invalid_argument("side must be 'left' or 'right', got '" + std::string(text) + "'");
}

bool is_right_homometric(const DihedralSet& a, const DihedralSet& b) {
  check_same_modulus(a, b);
  return right_iv(a) == right_iv(b);
}

bool is_left_homometric(const DihedralSet& a, const DihedralSet& b) {
  check_same_modulus(a, b);
  return left_iv(a) == left_iv(b);
}

bool is_homometric(const DihedralSet& a, const DihedralSet& b, Side side) {
  return side == Side::right ? is_right_homometric(a, b) : is_left_homometric(a, b);
}

namespace {

bool by_parts(const DihedralSet& a, const DihedralSet& b, Side side) {
  check_same_modulus(a, b);
  const ZnSet ap = a.plus_part(), am = a.minus_part();
  const ZnSet bp = b.plus_part(), bm = b.minus_part();
  if (iv(ap) + iv(am) != iv(bp) + iv(bm)) return false;
  if (side == Side::right) return ifunc(ap, am) == ifunc(bp, bm);
  return ifunc(ap.inverted(0), am) == ifunc(bp.inverted(0), bm);
}

}  // namespace

bool right_homometric_by_parts(const DihedralSet& a, const DihedralSet& b) {
  return by_parts(a, b, Side::right);
}

bool left_homometric_by_parts(const DihedralSet& a, const DihedralSet& b) {
  return by_parts(a, b, Side::left);
}

bool homometric_by_parts(const DihedralSet& a, const DihedralSet& b, Side side) {
  return by_parts(a, b, side);
}

std::optional<DihedralElement> triviality_witness(const DihedralSet& a, const DihedralSet& b,
                                                  Side side) {
  check_same_modulus(a, b);
  const int n = a.modulus();
  for (int i = 0; i < 2 * n; ++i) {
    const DihedralElement g = DihedralElement::decode(n, i);
    const DihedralSet image = side == Side::right ? act_left(g, a) : act_right(a, g);
    if (image == b) return g;
  }
  return std::nullopt;
}

HomometryVerdict classify_homometry(const DihedralSet& a, const DihedralSet& b, Side side) {
  HomometryVerdict v;
  v.side = side;
  v.homometric = is_homometric(a, b, side);
  if (v.homometric) v.trivial_witness = triviality_witness(a, b, side);
  return v;
}

std::pair<DihedralSet, DihedralSet> duality_transport(const DihedralSet& a, const DihedralSet& b) {
  check_same_modulus(a, b);
  return {set_inversion(a), set_inversion(b)};
}

bool projection_check(const DihedralSet& a, const DihedralSet& b) {
  check_same_modulus(a, b);
  return is_homometric(project(a), project(b));
}

IntervalVector projection_multiset_iv(const DihedralSet& s) {
  const ZnSet plus = s.plus_part(), minus = s.minus_part();
  return iv(plus) + iv(minus) + ifunc(plus, minus) + ifunc(minus, plus);
}

bool projection_multiset_check(const DihedralSet& a, const DihedralSet& b) {
  check_same_modulus(a, b);
  return projection_multiset_iv(a) == projection_multiset_iv(b);
}

bool symmetric_part_criterion(const DihedralSet& a, const DihedralSet& b) {
  check_same_modulus(a, b);
  const ZnSet ap = a.plus_part(), am = a.minus_part();
  const ZnSet bp = b.plus_part(), bm = b.minus_part();
  return (ap.inverted(0) == ap && bp.inverted(0) == bp) ||
         (am.inverted(0) == am && bm.inverted(0) == bm);
}

bool fourier_conditions(const DihedralSet& a, const DihedralSet& b, Side side) {
  check_same_modulus(a, b);
  const int n = a.modulus();
  const Spectrum fap = dft(a.plus_part()), fam = dft(a.minus_part());
  const Spectrum fbp = dft(b.plus_part()), fbm = dft(b.minus_part());
  for (int t = 0; t < n; ++t) {
    const auto i = static_cast<std::size_t>(t);
    const double power_a = std::norm(fap.values[i]) + std::norm(fam.values[i]);
    const double power_b = std::norm(fbp.values[i]) + std::norm(fbm.values[i]);
    if (std::abs(power_a - power_b) > kSpectralTolerance) return false;
    const std::complex<double> cross_a = side == Side::right
                                             ? std::conj(fap.values[i]) * fam.values[i]
                                             : fap.values[i] * fam.values[i];
    const std::complex<double> cross_b = side == Side::right
                                             ? std::conj(fbp.values[i]) * fbm.values[i]
                                             : fbp.values[i] * fbm.values[i];
    if (std::abs(cross_a - cross_b) > kSpectralTolerance) return false;
  }
  return true;
}

}  // namespace dihom
