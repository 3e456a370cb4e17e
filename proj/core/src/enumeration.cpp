#include "dihom/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "dihom/detail/bits.hpp"
#include "dihom/music.hpp"

namespace dihom {

using detail::full_mask;
using detail::mod;
using detail::reflect;
using detail::rotl;
using detail::rotr;

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

namespace {

struct MaskPair {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;

  friend auto operator<=>(const MaskPair&, const MaskPair&) = default;
};

// Returns the stabilizer size when (plus, minus) is the minimum of its orbit
// under the side's trivial translations, 0 otherwise.
int canonical_stabilizer(std::uint64_t plus, std::uint64_t minus, int n, Side side) {
  int stab = 0;
  if (side == Side::right) {
    // orbit under left translation: (p,1) rotates both parts, (p,-1) swaps
    // the reflected parts
    const std::uint64_t rp = reflect(plus, n), rm = reflect(minus, n);
    for (int p = 0; p < n; ++p) {
      std::uint64_t cp = rotl(plus, p, n), cm = rotl(minus, p, n);
      if (cp < plus || (cp == plus && cm < minus)) return 0;
      if (cp == plus && cm == minus) ++stab;
      cp = rotl(rm, p, n);
      cm = rotl(rp, p, n);
      if (cp < plus || (cp == plus && cm < minus)) return 0;
      if (cp == plus && cm == minus) ++stab;
    }
  } else {
    // orbit under right translation
    for (int p = 0; p < n; ++p) {
      std::uint64_t cp = rotl(plus, p, n), cm = rotr(minus, p, n);
      if (cp < plus || (cp == plus && cm < minus)) return 0;
      if (cp == plus && cm == minus) ++stab;
      cp = rotr(minus, p, n);
      cm = rotl(plus, p, n);
      if (cp < plus || (cp == plus && cm < minus)) return 0;
      if (cp == plus && cm == minus) ++stab;
    }
  }
  return stab;
}

int zn_canonical_stabilizer(std::uint64_t bits, int n) {
  const std::uint64_t rb = reflect(bits, n);
  int stab = 0;
  for (int p = 0; p < n; ++p) {
    std::uint64_t c = rotl(bits, p, n);
    if (c < bits) return 0;
    if (c == bits) ++stab;
    c = rotl(rb, p, n);
    if (c < bits) return 0;
    if (c == bits) ++stab;
  }
  return stab;
}

// Packed side interval vector of a subset given by its part masks; one byte
// per interval in the frozen layout. Cardinality <= 12 keeps counts < 256.
void pack_side_iv(std::uint64_t plus, std::uint64_t minus, int n, Side side, std::string& key) {
  int ks[24];
  int es[24];
  int count = 0;
  for (std::uint64_t rest = plus; rest != 0; rest &= rest - 1) {
    ks[count] = std::countr_zero(rest);
    es[count++] = +1;
  }
  for (std::uint64_t rest = minus; rest != 0; rest &= rest - 1) {
    ks[count] = std::countr_zero(rest);
    es[count++] = -1;
  }
  unsigned char counts[128] = {0};
  if (side == Side::right) {
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j) {
        const int l = mod(es[i] * (ks[j] - ks[i]), n);
        ++counts[es[i] * es[j] > 0 ? l : n + l];
      }
  } else {
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j) {
        const int eta = es[i] * es[j];
        const int l = mod(ks[j] - eta * ks[i], n);
        ++counts[eta > 0 ? l : n + l];
      }
  }
  key.assign(reinterpret_cast<const char*>(counts), static_cast<std::size_t>(2 * n));
}

struct PartialCensus {
  std::unordered_map<std::string, std::vector<MaskPair>> classes;
  std::int64_t orbit_count = 0;
  std::int64_t orbit_size_total = 0;
};

template <typename Mask>
int mask_ctz(Mask m) {
  if constexpr (sizeof(Mask) <= 8) {
    return std::countr_zero(static_cast<std::uint64_t>(m));
  } else {
    const auto low = static_cast<std::uint64_t>(m);
    if (low != 0) return std::countr_zero(low);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
  }
}

// Scans all cardinality-subsets of D_n whose highest element index lies in
// [lead_lo, lead_hi), accumulating canonical orbits into `out`.
template <typename Mask>
void scan_dn_range(int n, int cardinality, Side side, int lead_lo, int lead_hi,
                   PartialCensus& out) {
  std::string key;
  const std::uint64_t low_mask = full_mask(n);
  const auto process = [&](Mask mask) {
    const auto plus = static_cast<std::uint64_t>(mask) & low_mask;
    const auto minus = static_cast<std::uint64_t>(mask >> n);
    const int stab = canonical_stabilizer(plus, minus, n, side);
    if (stab == 0) return;
    ++out.orbit_count;
    out.orbit_size_total += 2 * n / stab;
    pack_side_iv(plus, minus, n, side, key);
    out.classes[key].push_back(MaskPair{plus, minus});
  };

  for (int lead = std::max(lead_lo, cardinality - 1); lead < lead_hi; ++lead) {
    const Mask high = Mask(1) << lead;
    if (cardinality == 1) {
      process(high);
      continue;
    }
    Mask sub = (Mask(1) << (cardinality - 1)) - 1;
    while (sub < high) {
      process(sub | high);
      const Mask carry = sub & (~sub + 1);
      const Mask ripple = sub + carry;
      sub = ((ripple ^ sub) >> (2 + mask_ctz(carry))) | ripple;
    }
  }
}

// Splits the leading-element range [cardinality-1, total_bits) into at most
// `jobs` contiguous spans of roughly equal subset counts.
std::vector<std::pair<int, int>> partition_leads(int total_bits, int cardinality, int jobs) {
  std::vector<std::pair<int, int>> spans;
  if (cardinality == 0) return spans;
  const int lo = cardinality - 1;
  std::int64_t total = 0;
  for (int lead = lo; lead < total_bits; ++lead) total += binomial(lead, cardinality - 1);
  const std::int64_t target = std::max<std::int64_t>(1, total / jobs);
  int span_start = lo;
  std::int64_t span_weight = 0;
  for (int lead = lo; lead < total_bits; ++lead) {
    span_weight += binomial(lead, cardinality - 1);
    const bool last = lead + 1 == total_bits;
    if ((span_weight >= target && static_cast<int>(spans.size()) + 1 < jobs) || last) {
      spans.emplace_back(span_start, lead + 1);
      span_start = lead + 1;
      span_weight = 0;
    }
  }
  return spans;
}

int clamp_jobs(int jobs) { return std::clamp(jobs, 1, 64); }

std::vector<int> unpack_counts(const std::string& key) {
  std::vector<int> counts(key.size());
  for (std::size_t i = 0; i < key.size(); ++i)
    counts[i] = static_cast<unsigned char>(key[i]);
  return counts;
}

}  // namespace

CanonicalDnOrbit canonicalize(const DihedralSet& s, Side side) {
  const int n = s.modulus();
  DihedralSet best = s;
  int stab = 0;
  for (int i = 0; i < 2 * n; ++i) {
    const DihedralElement g = DihedralElement::decode(n, i);
    const DihedralSet image = side == Side::right ? act_left(g, s) : act_right(s, g);
    if (image < best) best = image;
    if (image == s) ++stab;
  }
  return CanonicalDnOrbit{best, 2 * n / stab, side};
}

CanonicalZnOrbit canonicalize_zn(const ZnSet& s) {
  const int n = s.modulus();
  ZnSet best = s;
  int stab = 0;
  for (int p = 0; p < n; ++p) {
    for (const ZnSet image : {s.transposed(p), s.inverted(p)}) {
      if (image.mask() < best.mask()) best = image;
      if (image == s) ++stab;
    }
  }
  return CanonicalZnOrbit{best, 2 * n / stab};
}

DnCensus enumerate_dn(int n, int cardinality, Side side, int jobs) {
  if (n < 3 || n > 36) throw std::domain_error("census requires 3 <= n <= 36");
  if (cardinality < 0 || cardinality > 2 * n)
    throw std::domain_error("cardinality out of range");
  if (cardinality > 12) throw std::domain_error("census is limited to cardinality <= 12");
  jobs = clamp_jobs(jobs);

  DnCensus census;
  census.n = n;
  census.cardinality = cardinality;
  census.side = side;
  census.subset_count = binomial(2 * n, cardinality);
  if (cardinality == 0) {
    census.orbit_count = 1;
    census.orbit_size_total = 1;
    return census;
  }

  const auto spans = partition_leads(2 * n, cardinality, jobs);
  std::vector<PartialCensus> partials(spans.size());
  const auto run = [&](std::size_t index) {
    const auto [lo, hi] = spans[index];
    if (2 * n <= 64)
      scan_dn_range<std::uint64_t>(n, cardinality, side, lo, hi, partials[index]);
    else
      scan_dn_range<unsigned __int128>(n, cardinality, side, lo, hi, partials[index]);
  };
  if (spans.size() == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) threads.emplace_back(run, i);
    for (std::thread& t : threads) t.join();
  }

  // order-independent merge: classes keyed by packed interval vector,
  // representatives sorted afterwards
  std::map<std::string, std::vector<MaskPair>> merged;
  for (PartialCensus& partial : partials) {
    census.orbit_count += partial.orbit_count;
    census.orbit_size_total += partial.orbit_size_total;
    for (auto& [key, reps] : partial.classes) {
      auto& bucket = merged[key];
      bucket.insert(bucket.end(), reps.begin(), reps.end());
    }
  }
  for (auto& [key, reps] : merged) {
    if (reps.size() < 2) continue;
    std::sort(reps.begin(), reps.end());
    // a class is uniformly mixed or uniformly single-signature: the cross
    // half of the interval vector vanishes exactly when one part is empty
    if (reps.front().plus == 0 || reps.front().minus == 0) {
      ++census.degenerate_tuples[static_cast<int>(reps.size())];
      continue;
    }
    ++census.tuples[static_cast<int>(reps.size())];
    DnCensus::IvClass cls;
    cls.iv_counts = unpack_counts(key);
    cls.orbits.reserve(reps.size());
    for (const MaskPair& rep : reps)
      cls.orbits.push_back(DihedralSet::from_masks(n, rep.plus, rep.minus));
    census.classes.push_back(std::move(cls));
  }
  return census;
}

namespace {

std::string pack_counts(const DihedralIntervalVector& v) {
  std::string key(v.counts.size(), '\0');
  for (std::size_t i = 0; i < v.counts.size(); ++i)
    key[i] = static_cast<char>(static_cast<unsigned char>(v.counts[i]));
  return key;
}

// Conjugation by g permutes intervals: (l,+1) -> (eps*l,+1),
// (l,-1) -> (2p + eps*l,-1) for g = (p,eps). The minimum of the permuted
// count arrays is a translation-independent key.
std::string min_conjugated_key(const DihedralIntervalVector& v) {
  const int n = v.modulus;
  std::string best;
  std::string candidate(static_cast<std::size_t>(2 * n), '\0');
  for (int p = 0; p < n; ++p)
    for (int eps : {+1, -1}) {
      for (int l = 0; l < n; ++l) {
        candidate[static_cast<std::size_t>(mod(eps * l, n))] =
            static_cast<char>(static_cast<unsigned char>(v.counts[static_cast<std::size_t>(l)]));
        candidate[static_cast<std::size_t>(n + mod(2 * p + eps * l, n))] = static_cast<char>(
            static_cast<unsigned char>(v.counts[static_cast<std::size_t>(n + l)]));
      }
      if (best.empty() || candidate < best) best = candidate;
    }
  return best;
}

}  // namespace

SimCensus enumerate_simultaneous(int n, int cardinality, SimultaneousConvention convention,
                                 Side side, int jobs) {
  return simultaneous_from(enumerate_dn(n, cardinality, side, jobs), convention);
}

SimCensus simultaneous_from(const DnCensus& base, SimultaneousConvention convention) {
  const Side side = base.side;
  const Side other = side == Side::right ? Side::left : Side::right;

  SimCensus out;
  out.n = base.n;
  out.cardinality = base.cardinality;
  out.side = side;
  out.convention = convention;

  for (const DnCensus::IvClass& cls : base.classes) {
    std::map<std::string, std::vector<DihedralSet>> parts;
    for (const DihedralSet& rep : cls.orbits) {
      const DihedralIntervalVector other_iv = other == Side::left ? left_iv(rep) : right_iv(rep);
      const std::string key = convention == SimultaneousConvention::frozen_representatives
                                  ? pack_counts(other_iv)
                                  : min_conjugated_key(other_iv);
      parts[key].push_back(rep);
    }
    for (auto& [key, members] : parts) {
      if (members.size() < 2) continue;
      // collapse members related by the other side's trivial translations
      std::map<DihedralSet, DihedralSet> by_other_orbit;  // other-canonical -> member
      for (const DihedralSet& member : members) {
        const DihedralSet canon = canonicalize(member, other).representative;
        auto [it, inserted] = by_other_orbit.try_emplace(canon, member);
        if (!inserted && member < it->second) it->second = member;
      }
      if (by_other_orbit.size() < 2) continue;
      ++out.tuples[static_cast<int>(by_other_orbit.size())];
      DnCensus::IvClass part;
      part.iv_counts = cls.iv_counts;
      for (const auto& [canon, member] : by_other_orbit) part.orbits.push_back(member);
      std::sort(part.orbits.begin(), part.orbits.end());
      out.classes.push_back(std::move(part));
    }
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const DnCensus::IvClass& a, const DnCensus::IvClass& b) {
              return a.orbits < b.orbits;
            });
  return out;
}

namespace {

struct ZnPartial {
  std::unordered_map<std::string, std::vector<std::uint64_t>> classes;
  std::int64_t orbit_count = 0;
  std::int64_t orbit_size_total = 0;
};

void scan_zn_range(int n, int cardinality, int lead_lo, int lead_hi, ZnPartial& out) {
  std::string key(static_cast<std::size_t>(n), '\0');
  const auto process = [&](std::uint64_t bits) {
    const int stab = zn_canonical_stabilizer(bits, n);
    if (stab == 0) return;
    ++out.orbit_count;
    out.orbit_size_total += 2 * n / stab;
    for (int k = 0; k < n; ++k)
      key[static_cast<std::size_t>(k)] =
          static_cast<char>(std::popcount(bits & rotl(bits, k, n)));
    out.classes[key].push_back(bits);
  };

  for (int lead = std::max(lead_lo, cardinality - 1); lead < lead_hi; ++lead) {
    const std::uint64_t high = 1ull << lead;
    if (cardinality == 1) {
      process(high);
      continue;
    }
    std::uint64_t sub = (1ull << (cardinality - 1)) - 1;
    while (sub < high) {
      process(sub | high);
      const std::uint64_t carry = sub & (~sub + 1);
      const std::uint64_t ripple = sub + carry;
      sub = ((ripple ^ sub) >> (2 + std::countr_zero(carry))) | ripple;
    }
  }
}

}  // namespace

ZnCensus enumerate_zn(int n, int cardinality, int jobs) {
  if (n < 1 || n > 36) throw std::domain_error("census requires 1 <= n <= 36");
  if (cardinality < 0 || cardinality > n) throw std::domain_error("cardinality out of range");
  if (cardinality > 12) throw std::domain_error("census is limited to cardinality <= 12");
  jobs = clamp_jobs(jobs);

  ZnCensus census;
  census.n = n;
  census.cardinality = cardinality;
  census.subset_count = binomial(n, cardinality);
  if (cardinality == 0) {
    census.orbit_count = 1;
    census.orbit_size_total = 1;
    return census;
  }

  const auto spans = partition_leads(n, cardinality, jobs);
  std::vector<ZnPartial> partials(spans.size());
  const auto run = [&](std::size_t index) {
    const auto [lo, hi] = spans[index];
    scan_zn_range(n, cardinality, lo, hi, partials[index]);
  };
  if (spans.size() == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) threads.emplace_back(run, i);
    for (std::thread& t : threads) t.join();
  }

  std::map<std::string, std::vector<std::uint64_t>> merged;
  for (ZnPartial& partial : partials) {
    census.orbit_count += partial.orbit_count;
    census.orbit_size_total += partial.orbit_size_total;
    for (auto& [key, reps] : partial.classes) {
      auto& bucket = merged[key];
      bucket.insert(bucket.end(), reps.begin(), reps.end());
    }
  }
  for (auto& [key, reps] : merged) {
    if (reps.size() < 2) continue;
    std::sort(reps.begin(), reps.end());
    ++census.tuples[static_cast<int>(reps.size())];
    ZnCensus::IvClass cls;
    cls.iv_counts = unpack_counts(key);
    cls.orbits.reserve(reps.size());
    for (std::uint64_t rep : reps) cls.orbits.push_back(ZnSet::from_mask(n, rep));
    census.classes.push_back(std::move(cls));
  }
  return census;
}

std::string tuples_text(const std::map<int, std::int64_t>& tuples) {
  static const std::map<int, std::string> names = {
      {2, "pair"},    {3, "triple"},   {4, "quadruple"}, {5, "quintuple"},
      {6, "sextuple"}, {7, "septuple"}, {8, "octuple"}};
  if (tuples.empty()) return "none";
  std::string out;
  for (const auto& [t, count] : tuples) {
    if (!out.empty()) out += ", ";
    out += std::to_string(count) + ' ';
    const auto it = names.find(t);
    out += it != names.end() ? it->second : std::to_string(t) + "-uple";
    if (count != 1) out += 's';
  }
  return out;
}

std::string tuples_compact(const std::map<int, std::int64_t>& tuples) {
  if (tuples.empty()) return "-";
  std::string out;
  for (const auto& [t, count] : tuples) {
    if (!out.empty()) out += ',';
    out += std::to_string(t) + ':' + std::to_string(count);
  }
  return out;
}

namespace {

nlohmann::ordered_json tuples_json(const std::map<int, std::int64_t>& tuples) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [t, count] : tuples) out[std::to_string(t)] = count;
  return out;
}

template <typename Class>
nlohmann::ordered_json classes_json(const std::vector<Class>& classes) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& cls : classes) {
    nlohmann::ordered_json entry;
    entry["iv"] = cls.iv_counts;
    nlohmann::ordered_json orbits = nlohmann::ordered_json::array();
    for (const auto& orbit : cls.orbits) orbits.push_back(orbit.to_string());
    entry["orbits"] = std::move(orbits);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::string to_json(const DnCensus& census, bool include_classes) {
  nlohmann::ordered_json j;
  j["n"] = census.n;
  j["p"] = census.cardinality;
  j["side"] = to_string(census.side);
  j["tuples"] = tuples_json(census.tuples);
  j["degenerate_tuples"] = tuples_json(census.degenerate_tuples);
  if (include_classes) j["classes"] = classes_json(census.classes);
  return j.dump();
}

std::string to_json(const ZnCensus& census, bool include_classes) {
  nlohmann::ordered_json j;
  j["n"] = census.n;
  j["p"] = census.cardinality;
  j["side"] = "zn";
  j["tuples"] = tuples_json(census.tuples);
  if (include_classes) j["classes"] = classes_json(census.classes);
  return j.dump();
}

std::string to_json(const SimCensus& census, bool include_classes) {
  nlohmann::ordered_json j;
  j["n"] = census.n;
  j["p"] = census.cardinality;
  j["side"] = "simultaneous";
  j["base_side"] = to_string(census.side);
  j["convention"] = census.convention == SimultaneousConvention::frozen_representatives
                        ? "frozen"
                        : "any";
  j["tuples"] = tuples_json(census.tuples);
  if (include_classes) j["classes"] = classes_json(census.classes);
  return j.dump();
}

const std::vector<std::pair<int, int>>& census_grid() {
  static const std::vector<std::pair<int, int>> grid = {
      {4, 8},  {4, 12}, {4, 16},                                               //
      {5, 8},  {5, 10}, {5, 12}, {5, 14}, {5, 15}, {5, 16}, {5, 18},           //
      {6, 8},  {6, 9},  {6, 10}, {6, 12}, {6, 14}, {6, 15}, {6, 16}, {6, 18},  //
      {7, 8},  {7, 9},  {7, 10}, {7, 11}, {7, 12}, {7, 13}, {7, 14}, {7, 15},
      {7, 16}, {7, 17}, {7, 18}};
  return grid;
}

std::string census_grid_tsv(int jobs, SimultaneousConvention convention) {
  std::string out;
  for (const auto& [cardinality, n] : census_grid()) {
    const DnCensus right = enumerate_dn(n, cardinality, Side::right, jobs);
    const SimCensus sim = simultaneous_from(right, convention);
    out += std::to_string(cardinality) + '\t' + std::to_string(n) + '\t' +
           tuples_compact(right.tuples) + '\t' + tuples_compact(sim.tuples) + '\n';
  }
  return out;
}

DihedralSet display_normalized(const DihedralSet& s, Side side) {
  if (s.empty()) return s;
  const int n = s.modulus();
  bool found = false;
  DihedralSet best = s;
  for (int i = 0; i < 2 * n; ++i) {
    const DihedralElement g = DihedralElement::decode(n, i);
    const DihedralSet image = side == Side::right ? act_left(g, s) : act_right(s, g);
    if ((image.plus_mask() & 1u) == 0) continue;
    const bool better = !found || std::pair(image.minus_mask(), image.plus_mask()) <
                                      std::pair(best.minus_mask(), best.plus_mask());
    if (better) {
      best = image;
      found = true;
    }
  }
  return best;
}

std::vector<std::vector<std::string>> table1_classes(int cardinality, Side side, int jobs) {
  const DnCensus census = enumerate_dn(12, cardinality, side, jobs);
  std::vector<std::vector<std::string>> out;
  for (const DnCensus::IvClass& cls : census.classes) {
    std::vector<std::string> rendered;
    rendered.reserve(cls.orbits.size());
    for (const DihedralSet& orbit : cls.orbits)
      rendered.push_back("{" + render_chord_set(display_normalized(orbit, side)) + "}");
    std::sort(rendered.begin(), rendered.end());
    out.push_back(std::move(rendered));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string table1_listing(int jobs) {
  std::string out;
  for (int cardinality : {4, 5})
    for (Side side : {Side::left, Side::right})
      for (const auto& cls : table1_classes(cardinality, side, jobs)) {
        out += "p=" + std::to_string(cardinality) + ' ' + to_string(side) + ' ';
        out += cls.size() == 2 ? "pair" : cls.size() == 3 ? "triple" : std::to_string(cls.size()) + "-uple";
        out += ": ";
        for (std::size_t i = 0; i < cls.size(); ++i) {
          if (i != 0) out += " & ";
          out += cls[i];
        }
        out += '\n';
      }
  return out;
}

}  // namespace dihom
