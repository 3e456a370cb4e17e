// Acceptance suite: one pass/fail line per criterion, covering the census
// tables, the duality and projection properties, the oracle equivalences,
// the lift constructions and determinism. Exits non-zero when any fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dihom/enumeration.hpp"
#include "dihom/lift.hpp"
#include "dihom/music.hpp"
#include "dihom/verify.hpp"

namespace {

using namespace dihom;

int failures = 0;

void report(int criterion, bool passed, const std::string& description,
            const std::string& detail = "") {
  std::cout << (passed ? "PASS" : "FAIL") << " criterion " << criterion << ": " << description;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n" << std::flush;
  if (!passed) ++failures;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

bool suite_passed(const std::vector<CheckResult>& results, std::string& detail) {
  bool passed = true;
  int count = 0;
  for (const CheckResult& result : results) {
    ++count;
    if (!result.passed) {
      passed = false;
      detail = "failed: " + result.name;
    }
  }
  if (passed) detail = std::to_string(count) + " checks";
  return passed;
}

// ---- the musical listing, normalized for order-insensitive comparison ----

using ChordSet = std::set<std::string>;       // one rendered set
using ListingClass = std::set<ChordSet>;      // one homometric class
using Listing = std::set<ListingClass>;       // one table column

ChordSet parse_braced(const std::string& text) {
  ChordSet out;
  std::string token;
  for (char c : text) {
    if (c == '{' || c == ' ') continue;
    if (c == ',' || c == '}') {
      if (!token.empty()) out.insert(token);
      token.clear();
      continue;
    }
    token += c;
  }
  if (!token.empty()) out.insert(token);
  return out;
}

std::map<std::pair<int, std::string>, Listing> parse_listing_file(const std::string& content) {
  std::map<std::pair<int, std::string>, Listing> out;
  std::istringstream stream(content);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    // "p=4 left pair: {..} & {..}"
    const std::size_t colon = line.find(':');
    std::istringstream head(line.substr(0, colon));
    std::string p_token, side;
    std::string kind;
    head >> p_token >> side >> kind;
    const int cardinality = std::stoi(p_token.substr(2));
    ListingClass cls;
    std::string rest = line.substr(colon + 1);
    std::size_t pos = 0;
    while ((pos = rest.find('{')) != std::string::npos) {
      const std::size_t end = rest.find('}', pos);
      cls.insert(parse_braced(rest.substr(pos, end - pos + 1)));
      rest = rest.substr(end + 1);
    }
    out[{cardinality, side}].insert(cls);
  }
  return out;
}

Listing computed_listing(int cardinality, Side side, int jobs) {
  Listing out;
  for (const auto& cls : table1_classes(cardinality, side, jobs)) {
    ListingClass normalized;
    for (const std::string& rendered : cls) normalized.insert(parse_braced(rendered));
    out.insert(normalized);
  }
  return out;
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  const unsigned hw = std::thread::hardware_concurrency();
  const int jobs = hw == 0 ? 2 : static_cast<int>(hw);
  const std::string golden_dir = DIHOM_GOLDEN_DIR;

  // ---- criterion 1: census table, right + simultaneous, exact ------------
  std::string grid_tsv_parallel;
  std::vector<DnCensus> right_censuses;
  {
    std::string detail;
    bool passed = false;
    try {
      const std::string golden = read_file(golden_dir + "/table2_census.tsv");
      for (const auto& [cardinality, n] : census_grid())
        right_censuses.push_back(enumerate_dn(n, cardinality, Side::right, jobs));
      std::size_t row = 0;
      for (const auto& [cardinality, n] : census_grid()) {
        const SimCensus sim = simultaneous_from(right_censuses[row]);
        grid_tsv_parallel += std::to_string(cardinality) + '\t' + std::to_string(n) + '\t' +
                             tuples_compact(right_censuses[row].tuples) + '\t' +
                             tuples_compact(sim.tuples) + '\n';
        ++row;
      }
      passed = grid_tsv_parallel == golden;
      detail = std::to_string(census_grid().size()) + " cells";
      if (!passed) detail = "computed table differs from the golden file";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(1, passed, "census table reproduced exactly (right and simultaneous columns)", detail);
  }

  // ---- criterion 2: musical listing --------------------------------------
  {
    std::string detail;
    bool passed = false;
    try {
      const auto golden = parse_listing_file(read_file(golden_dir + "/table1_musical.txt"));
      passed = true;
      for (int cardinality : {4, 5})
        for (Side side : {Side::left, Side::right}) {
          const auto key = std::pair{cardinality, to_string(side)};
          const auto it = golden.find(key);
          if (it == golden.end() || computed_listing(cardinality, side, jobs) != it->second) {
            passed = false;
            detail = "mismatch at p=" + std::to_string(cardinality) + " " + to_string(side);
          }
        }
      if (passed) detail = "26 classes, chord names";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(2, passed, "musical listing reproduced (3+3 pairs at p=4, 8+2 per side at p=5)",
           detail);
  }

  // ---- criterion 3: inversion duality across the grid --------------------
  {
    std::string detail;
    bool passed = true;
    try {
      std::size_t row = 0;
      for (const auto& [cardinality, n] : census_grid()) {
        const DnCensus& right = right_censuses.at(row++);
        const DnCensus left = enumerate_dn(n, cardinality, Side::left, jobs);
        if (right.tuples != left.tuples || right.degenerate_tuples != left.degenerate_tuples) {
          passed = false;
          detail = "tuple counts differ at n=" + std::to_string(n) +
                   " p=" + std::to_string(cardinality);
          break;
        }
        std::set<std::vector<DihedralSet>> left_classes;
        for (const auto& cls : left.classes) left_classes.insert(cls.orbits);
        for (const auto& cls : right.classes) {
          std::vector<DihedralSet> transported;
          for (const DihedralSet& orbit : cls.orbits)
            transported.push_back(canonicalize(set_inversion(orbit), Side::left).representative);
          std::sort(transported.begin(), transported.end());
          if (left_classes.count(transported) != 1) {
            passed = false;
            detail = "transport misses a class at n=" + std::to_string(n) +
                     " p=" + std::to_string(cardinality);
            break;
          }
        }
        if (!passed) break;
      }
      if (passed) detail = "left == right counts and classes transport, all cells";
    } catch (const std::exception& e) {
      passed = false;
      detail = e.what();
    }
    report(3, passed, "inversion duality: left and right censuses coincide", detail);
  }

  // ---- criterion 4: automorphism rigidity --------------------------------
  {
    std::string detail;
    const bool passed = suite_passed(verify_automorphism_suite(), detail);
    report(4, passed, "only the identity automorphism preserves intervals (3 <= n <= 12)",
           detail);
  }

  // ---- criterion 5: projection property ----------------------------------
  {
    std::string detail;
    VerifyOptions options;
    options.jobs = jobs;
    const bool passed = suite_passed(verify_projection_suite(options, &right_censuses), detail);
    report(5, passed, "right pairs project homometrically; D_10 left counterexample holds",
           detail);
  }

  // ---- criterion 6: oracle equivalences ----------------------------------
  {
    std::string detail1, detail2;
    VerifyOptions options;
    options.jobs = jobs;
    const bool thm1 = suite_passed(verify_decomposition_suite(options), detail1);
    const bool thm4 = suite_passed(verify_fourier_suite(options), detail2);
    report(6, thm1 && thm4, "by-parts and spectral conditions match the direct predicates",
           thm1 && thm4 ? detail1 + " + " + detail2 : (!thm1 ? detail1 : detail2));
  }

  // ---- criterion 7: lifts -------------------------------------------------
  {
    std::string detail;
    VerifyOptions options;
    options.jobs = jobs;
    const bool passed = suite_passed(verify_lift_suite(options), detail);
    report(7, passed, "constructive lifts verified; every Z_12 pair (p=4..8) lifts", detail);
  }

  // ---- criterion 8: symmetric parts force equal verdicts -----------------
  {
    std::string detail;
    VerifyOptions options;
    options.jobs = jobs;
    const bool passed = suite_passed(verify_symmetry_suite(options), detail);
    report(8, passed, "I_0-symmetric parts give identical right/left verdicts (n=12, p=5)",
           detail);
  }

  // ---- criterion 9: cyclic-group milestones -------------------------------
  {
    std::string detail;
    bool passed = true;
    try {
      for (int n = 3; n <= 16 && passed; ++n)
        for (int p = 2; p <= std::min(n - 1, 6) && passed; ++p) {
          const ZnCensus census = enumerate_zn(n, p, jobs);
          const bool has_pair = !census.tuples.empty();
          const bool has_triple = census.tuples.upper_bound(2) != census.tuples.end();
          const bool pair_allowed = n > 8 || (n == 8 && p >= 4);
          if (has_pair && !pair_allowed) {
            passed = false;
            detail = "unexpected pair at n=" + std::to_string(n) + " p=" + std::to_string(p);
          }
          if (has_triple && !(n == 16 && p >= 6)) {
            passed = false;
            detail = "unexpected triple at n=" + std::to_string(n) + " p=" + std::to_string(p);
          }
        }
      if (passed && enumerate_zn(8, 4, jobs).tuples.empty()) {
        passed = false;
        detail = "no pair at n=8, p=4";
      }
      const ZnCensus z166 = enumerate_zn(16, 6, jobs);
      if (passed && z166.tuples.upper_bound(2) == z166.tuples.end()) {
        passed = false;
        detail = "no triple at n=16, p=6";
      }
      if (passed) detail = "first pair at (8,4), first triple at (16,6), none earlier";
    } catch (const std::exception& e) {
      passed = false;
      detail = e.what();
    }
    report(9, passed, "cyclic census milestones (exhaustive, p <= 6)", detail);
  }

  // ---- criterion 10: determinism across worker counts ---------------------
  {
    std::string detail;
    bool passed = false;
    try {
      const std::string single = census_grid_tsv(1);
      const std::string quad = census_grid_tsv(4);
      passed = single == grid_tsv_parallel && single == quad;
      detail = passed ? "1 and 4 workers byte-identical" : "reports differ across worker counts";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(10, passed, "census reports are byte-identical for 1 vs 4 workers", detail);
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - started);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << elapsed.count() << " s\n";
  return failures == 0 ? 0 : 1;
}
