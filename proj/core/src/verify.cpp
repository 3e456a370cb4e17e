#include "dihom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "dihom/detail/bits.hpp"
#include "dihom/lift.hpp"
#include "dihom/music.hpp"

namespace dihom {

namespace {

CheckResult check(std::string name, bool passed, std::string detail) {
  return CheckResult{std::move(name), passed, std::move(detail)};
}

int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (detail::gcd_int(k, n) == 1) ++count;
  return count;
}

std::vector<DnCensus> grid_right_censuses(int jobs) {
  std::vector<DnCensus> out;
  out.reserve(census_grid().size());
  for (const auto& [cardinality, n] : census_grid())
    out.push_back(enumerate_dn(n, cardinality, Side::right, jobs));
  return out;
}

DihedralSet random_dihedral_set(std::mt19937_64& rng, int n, int cardinality) {
  DihedralSet s(n);
  std::uniform_int_distribution<int> index(0, 2 * n - 1);
  while (s.cardinality() < cardinality) s.insert(DihedralElement::decode(n, index(rng)));
  return s;
}

ZnSet random_zn_set(std::mt19937_64& rng, int n, int cardinality) {
  ZnSet s(n);
  std::uniform_int_distribution<int> residue(0, n - 1);
  while (s.cardinality() < cardinality) s.insert(residue(rng));
  return s;
}

// All 3-subsets of D_6 as sets; small enough for exhaustive pair scans.
std::vector<DihedralSet> all_triples_d6() {
  std::vector<DihedralSet> out;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int k = j + 1; k < 12; ++k) {
        DihedralSet s(6);
        s.insert(DihedralElement::decode(6, i));
        s.insert(DihedralElement::decode(6, j));
        s.insert(DihedralElement::decode(6, k));
        out.push_back(s);
      }
  return out;
}

// Every homometric pair enumerated in D_12 (right side, cardinalities 4-7,
// plus the left mirrors at 4-5); exercises the "true" branch of the
// equivalence checks, which random pairs almost never hit.
std::vector<std::pair<DihedralSet, DihedralSet>> census_positive_pairs(int jobs) {
  std::vector<std::pair<DihedralSet, DihedralSet>> out;
  const auto collect = [&](const DnCensus& census) {
    for (const auto& cls : census.classes)
      for (std::size_t i = 0; i < cls.orbits.size(); ++i)
        for (std::size_t j = i + 1; j < cls.orbits.size(); ++j)
          out.emplace_back(cls.orbits[i], cls.orbits[j]);
  };
  for (const int cardinality : {4, 5, 6, 7})
    collect(enumerate_dn(12, cardinality, Side::right, jobs));
  for (const int cardinality : {4, 5})
    collect(enumerate_dn(12, cardinality, Side::left, jobs));
  return out;
}

const DihedralSet& d10_left_pair_a() {
  static const DihedralSet a = DihedralSet::parse(10, "0+,1-,2+,5-,7-");
  return a;
}

const DihedralSet& d10_left_pair_b() {
  static const DihedralSet b = DihedralSet::parse(10, "0+,1-,6+,7-,8+");
  return b;
}

}  // namespace

std::vector<CheckResult> verify_automorphism_suite(const VerifyOptions&) {
  std::vector<CheckResult> results;

  bool identity_only = true;
  std::string offender;
  for (int n = 3; n <= 12; ++n) {
    const auto preserving = interval_preserving_automorphisms(n);
    if (preserving.size() != 1 || !(preserving[0] == DihedralAutomorphism{0, 1})) {
      identity_only = false;
      offender = "n=" + std::to_string(n);
      break;
    }
  }
  results.push_back(check("interval-preserving automorphisms == {identity}, 3<=n<=12",
                          identity_only, identity_only ? "exhaustive over n*phi(n) maps" : offender));

  bool sizes_ok = true;
  bool homomorphic = true;
  for (int n = 3; n <= 12 && sizes_ok && homomorphic; ++n) {
    const auto group = automorphism_group(n);
    if (static_cast<int>(group.size()) != n * euler_phi(n)) sizes_ok = false;
    for (const auto& a : group) {
      for (int i = 0; i < 2 * n && homomorphic; ++i)
        for (int j = 0; j < 2 * n; ++j) {
          const DihedralElement x = DihedralElement::decode(n, i);
          const DihedralElement y = DihedralElement::decode(n, j);
          if (apply(a, mul(x, y)) != mul(apply(a, x), apply(a, y))) {
            homomorphic = false;
            break;
          }
        }
      if (!homomorphic) break;
    }
  }
  results.push_back(check("automorphism group has n*phi(n) members, 3<=n<=12", sizes_ok, ""));
  results.push_back(check("every (l,k) map is a homomorphism, 3<=n<=12", homomorphic, ""));
  return results;
}

std::vector<CheckResult> verify_projection_suite(const VerifyOptions& options,
                                                 const std::vector<DnCensus>* right_censuses) {
  std::vector<CheckResult> results;

  std::vector<DnCensus> computed;
  if (right_censuses == nullptr) {
    computed = grid_right_censuses(options.jobs);
    right_censuses = &computed;
  }

  std::int64_t pairs_checked = 0;
  std::int64_t faithful_checked = 0;
  bool multiset_ok = true;
  bool faithful_ok = true;
  std::string offender;
  for (const DnCensus& census : *right_censuses) {
    for (const auto& cls : census.classes)
      for (std::size_t i = 0; i < cls.orbits.size() && multiset_ok && faithful_ok; ++i)
        for (std::size_t j = i + 1; j < cls.orbits.size(); ++j) {
          const DihedralSet& a = cls.orbits[i];
          const DihedralSet& b = cls.orbits[j];
          ++pairs_checked;
          if (!projection_multiset_check(a, b)) {
            multiset_ok = false;
            offender = "n=" + std::to_string(census.n) + " p=" + std::to_string(census.cardinality);
            break;
          }
          // set projections only inherit homometry when no residue carries
          // both signs in either set
          const bool faithful = (a.plus_mask() & a.minus_mask()) == 0 &&
                                (b.plus_mask() & b.minus_mask()) == 0;
          if (!faithful) continue;
          ++faithful_checked;
          if (!projection_check(a, b)) {
            faithful_ok = false;
            offender = "n=" + std::to_string(census.n) + " p=" + std::to_string(census.cardinality);
            break;
          }
        }
  }
  results.push_back(check("right pairs agree on the multiset projection interval vector",
                          multiset_ok,
                          multiset_ok ? std::to_string(pairs_checked) + " pairs over the census grid"
                                      : offender));
  results.push_back(check("faithful projections of right pairs are homometric in Z_n",
                          faithful_ok,
                          faithful_ok ? std::to_string(faithful_checked) + " collision-free pairs"
                                      : offender));

  const DihedralSet& a = d10_left_pair_a();
  const DihedralSet& b = d10_left_pair_b();
  const bool counterexample = is_left_homometric(a, b) && !is_right_homometric(a, b) &&
                              !projection_check(a, b) &&
                              project(a) == ZnSet(10, {0, 1, 2, 5, 7}) &&
                              project(b) == ZnSet(10, {0, 1, 6, 7, 8});
  results.push_back(check("D_10 left-homometric pair has non-homometric projections",
                          counterexample, ""));

  // trivial relatedness also projects: translate random sets and compare
  std::mt19937_64 rng(options.seed);
  bool trivial_projects = true;
  for (int trial = 0; trial < 200 && trivial_projects; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 16);
    const DihedralSet s = random_dihedral_set(rng, n, 1 + static_cast<int>(rng() % 6));
    const DihedralElement g = DihedralElement::decode(n, static_cast<int>(rng() % (2 * n)));
    const DihedralSet t = act_left(g, s);
    trivial_projects = trivial_relation(project(s), project(t)).has_value();
  }
  results.push_back(check("trivially related pairs have trivially related projections",
                          trivial_projects, "200 random translates"));
  return results;
}

std::vector<CheckResult> verify_symmetry_suite(const VerifyOptions& options) {
  std::vector<CheckResult> results;

  // full scan of canonical 5-subsets of D_12
  std::vector<DihedralSet> reps;
  {
    const int n = 12;
    for (int i = 0; i < 24; ++i)
      for (int j = i + 1; j < 24; ++j)
        for (int k = j + 1; k < 24; ++k)
          for (int l = k + 1; l < 24; ++l)
            for (int m = l + 1; m < 24; ++m) {
              DihedralSet s(n);
              for (int idx : {i, j, k, l, m}) s.insert(DihedralElement::decode(n, idx));
              if (canonicalize(s, Side::right).representative == s) reps.push_back(s);
            }
  }

  std::int64_t applicable = 0;
  bool verdicts_agree = true;
  for (std::size_t i = 0; i < reps.size() && verdicts_agree; ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (!symmetric_part_criterion(reps[i], reps[j])) continue;
      ++applicable;
      if (is_right_homometric(reps[i], reps[j]) != is_left_homometric(reps[i], reps[j])) {
        verdicts_agree = false;
        break;
      }
    }
  results.push_back(check("I_0-symmetric parts force identical right/left verdicts (n=12, p=5)",
                          verdicts_agree,
                          std::to_string(applicable) + " applicable pairs among " +
                              std::to_string(reps.size()) + " orbits"));

  // the two symmetric pairs of the musical listing appear in both columns;
  // membership is checked through canonical orbits so rendering order cannot
  // interfere
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"C,c,d,E,Ab", "C,d,e,E,Ab"},
      {"C,db,eb,E,Ab", "C,eb,E,f,Ab"},
  };
  bool listed_both = true;
  for (const Side side : {Side::left, Side::right}) {
    const DnCensus census = enumerate_dn(12, 5, side, options.jobs);
    for (const auto& [first, second] : expected) {
      const DihedralSet canon_first =
          canonicalize(parse_chord_set(first), side).representative;
      const DihedralSet canon_second =
          canonicalize(parse_chord_set(second), side).representative;
      bool found = false;
      for (const auto& cls : census.classes) {
        const bool has_first =
            std::find(cls.orbits.begin(), cls.orbits.end(), canon_first) != cls.orbits.end();
        const bool has_second =
            std::find(cls.orbits.begin(), cls.orbits.end(), canon_second) != cls.orbits.end();
        if (has_first && has_second) found = true;
      }
      if (!found) listed_both = false;
    }
  }
  results.push_back(check("symmetric listing pairs appear in both columns", listed_both, ""));

  // both named pairs satisfy the criterion itself
  const DihedralSet pair1_a = parse_chord_set("C,c,d,E,Ab");
  const DihedralSet pair1_b = parse_chord_set("C,d,e,E,Ab");
  results.push_back(check("named pairs satisfy the symmetric-part criterion",
                          symmetric_part_criterion(pair1_a, pair1_b) &&
                              is_right_homometric(pair1_a, pair1_b) &&
                              is_left_homometric(pair1_a, pair1_b),
                          ""));
  return results;
}

std::vector<CheckResult> verify_lift_suite(const VerifyOptions&) {
  std::vector<CheckResult> results;

  // constructive lift over the whole tetrachord family, re-verified from
  // first principles
  bool family_ok = true;
  std::string offender;
  int family_count = 0;
  for (int big_n = 2; big_n <= 8 && family_ok; ++big_n)
    for (int a = 1; a <= big_n - 1; ++a) {
      ++family_count;
      const auto [set_a, set_b] = rosenblatt_pair(big_n, a);
      if (!is_homometric(set_a, set_b)) {
        family_ok = false;
        offender = "not homometric: N=" + std::to_string(big_n) + " a=" + std::to_string(a);
        break;
      }
      const LiftResult lift = construct_lift(rosenblatt_decomposition(big_n, a));
      const bool sound = project(lift.lifted_a) == set_a && project(lift.lifted_b) == set_b &&
                         is_right_homometric(lift.lifted_a, lift.lifted_b) &&
                         !triviality_witness(lift.lifted_a, lift.lifted_b, Side::right) &&
                         lift.nontrivial;
      if (!sound) {
        family_ok = false;
        offender = "unsound lift: N=" + std::to_string(big_n) + " a=" + std::to_string(a);
        break;
      }
    }
  results.push_back(check("constructive lift succeeds on the tetrachord family (N=2..8)",
                          family_ok,
                          family_ok ? std::to_string(family_count) + " pairs" : offender));

  // the corrected sign assignment for the all-interval tetrachords: swapping
  // B's parts is required, and the corrected lift is returned
  {
    const Decomposition d = rosenblatt_decomposition(3, 1);
    const DihedralSet printed_a = DihedralSet::from_parts(d.a1, d.a2);  // A+ = {0,6}
    const DihedralSet printed_b = DihedralSet::from_parts(d.b1, d.b2);  // B+ = {1,7}
    const bool printed_fails = !right_homometric_by_parts(printed_a, printed_b);
    const LiftResult lift = construct_lift(d);
    const DihedralSet expected_a = DihedralSet::parse(12, "0+,1-,4-,6+");
    const DihedralSet expected_b = DihedralSet::parse(12, "0+,1-,3+,7-");
    results.push_back(check("all-interval tetrachords lift with B's parts swapped",
                            printed_fails && lift.lifted_a == expected_a &&
                                lift.lifted_b == expected_b,
                            ""));
  }

  const LiftCoverageReport report = lift_coverage_z12({4, 5, 6, 7, 8});
  results.push_back(check("every non-trivially homometric Z_12 pair (p=4..8) lifts",
                          report.failures == 0,
                          std::to_string(report.entries.size()) + " pairs, " +
                              std::to_string(report.failures) + " failures"));
  return results;
}

std::vector<CheckResult> verify_decomposition_suite(const VerifyOptions& options) {
  std::vector<CheckResult> results;

  const auto triples = all_triples_d6();
  bool exhaustive_ok = true;
  for (std::size_t i = 0; i < triples.size() && exhaustive_ok; ++i)
    for (std::size_t j = i; j < triples.size(); ++j) {
      if (right_homometric_by_parts(triples[i], triples[j]) !=
              is_right_homometric(triples[i], triples[j]) ||
          left_homometric_by_parts(triples[i], triples[j]) !=
              is_left_homometric(triples[i], triples[j])) {
        exhaustive_ok = false;
        break;
      }
    }
  results.push_back(check("by-parts == direct interval vectors, all 3-subset pairs of D_6",
                          exhaustive_ok, std::to_string(triples.size()) + " sets"));

  std::mt19937_64 rng(options.seed);
  bool random_ok = true;
  for (int trial = 0; trial < 1000 && random_ok; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 16);  // up to 18
    const int card = static_cast<int>(rng() % static_cast<unsigned>(std::min(2 * n, 9)));
    const DihedralSet a = random_dihedral_set(rng, n, card);
    const DihedralSet b = random_dihedral_set(rng, n, card);
    random_ok = right_homometric_by_parts(a, b) == is_right_homometric(a, b) &&
                left_homometric_by_parts(a, b) == is_left_homometric(a, b);
  }
  results.push_back(check("by-parts == direct interval vectors, 1000 random pairs (n<=18)",
                          random_ok, ""));

  bool positive_ok = true;
  const auto positives = census_positive_pairs(options.jobs);
  for (const auto& [a, b] : positives) {
    const Side side = is_right_homometric(a, b) ? Side::right : Side::left;
    if (!homometric_by_parts(a, b, side)) positive_ok = false;
  }
  results.push_back(check("by-parts confirms every census pair", positive_ok,
                          std::to_string(positives.size()) + " homometric pairs"));
  return results;
}

std::vector<CheckResult> verify_fourier_suite(const VerifyOptions& options) {
  std::vector<CheckResult> results;

  const auto triples = all_triples_d6();
  bool exhaustive_ok = true;
  for (std::size_t i = 0; i < triples.size() && exhaustive_ok; ++i)
    for (std::size_t j = i; j < triples.size(); ++j) {
      if (fourier_conditions(triples[i], triples[j], Side::right) !=
              is_right_homometric(triples[i], triples[j]) ||
          fourier_conditions(triples[i], triples[j], Side::left) !=
              is_left_homometric(triples[i], triples[j])) {
        exhaustive_ok = false;
        break;
      }
    }
  results.push_back(check("spectral == exact conditions, all 3-subset pairs of D_6",
                          exhaustive_ok, ""));

  std::mt19937_64 rng(options.seed);
  bool random_ok = true;
  for (int trial = 0; trial < 1000 && random_ok; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 14);  // up to 16
    const int card = static_cast<int>(rng() % static_cast<unsigned>(std::min(2 * n, 9)));
    const DihedralSet a = random_dihedral_set(rng, n, card);
    const DihedralSet b = random_dihedral_set(rng, n, card);
    random_ok = fourier_conditions(a, b, Side::right) == is_right_homometric(a, b) &&
                fourier_conditions(a, b, Side::left) == is_left_homometric(a, b);
  }
  results.push_back(check("spectral == exact conditions, 1000 random pairs (n<=16)", random_ok, ""));

  bool positive_ok = true;
  const auto positives = census_positive_pairs(options.jobs);
  for (const auto& [a, b] : positives) {
    const Side side = is_right_homometric(a, b) ? Side::right : Side::left;
    if (!fourier_conditions(a, b, side)) positive_ok = false;
  }
  results.push_back(check("spectral conditions confirm every census pair", positive_ok,
                          std::to_string(positives.size()) + " homometric pairs"));

  // magnitude-spectrum criterion in Z_n: |F_A| == |F_B| iff iv(A) == iv(B)
  bool zn_ok = true;
  for (int trial = 0; trial < 1000 && zn_ok; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 14);
    const int card = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const ZnSet a = random_zn_set(rng, n, card);
    const ZnSet b = random_zn_set(rng, n, card);
    const Spectrum fa = dft(a), fb = dft(b);
    bool magnitudes_equal = true;
    for (int t = 0; t < n; ++t)
      if (std::abs(std::abs(fa.values[static_cast<std::size_t>(t)]) -
                   std::abs(fb.values[static_cast<std::size_t>(t)])) > kSpectralTolerance)
        magnitudes_equal = false;
    zn_ok = magnitudes_equal == is_homometric(a, b);
  }
  // positives from the Z_12 and Z_16 censuses
  for (const int n : {12, 16}) {
    for (int card = 4; card <= 6 && zn_ok; ++card) {
      const ZnCensus census = enumerate_zn(n, card, options.jobs);
      for (const auto& cls : census.classes)
        for (std::size_t i = 0; i + 1 < cls.orbits.size(); ++i) {
          const Spectrum fa = dft(cls.orbits[i]), fb = dft(cls.orbits[i + 1]);
          for (int t = 0; t < n; ++t)
            if (std::abs(std::abs(fa.values[static_cast<std::size_t>(t)]) -
                         std::abs(fb.values[static_cast<std::size_t>(t)])) > kSpectralTolerance)
              zn_ok = false;
        }
    }
  }
  results.push_back(check("|F_A| == |F_B| iff iv(A) == iv(B), Z_n with n<=16", zn_ok, ""));
  return results;
}

std::vector<CheckResult> run_verification_suite(std::string_view name,
                                                const VerifyOptions& options) {
  if (name == "prop2") return verify_automorphism_suite(options);
  if (name == "prop4") return verify_projection_suite(options);
  if (name == "prop6") return verify_symmetry_suite(options);
  if (name == "cor2") return verify_lift_suite(options);
  if (name == "thm1") return verify_decomposition_suite(options);
  if (name == "thm4") return verify_fourier_suite(options);
  throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
}

const std::vector<std::string>& verification_suite_names() {
  static const std::vector<std::string> names = {"prop2", "prop4", "prop6",
                                                 "cor2",  "thm1",  "thm4"};
  return names;
}

}  // namespace dihom
