#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dihom/enumeration.hpp"

namespace dihom {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int jobs = 1;
  std::uint64_t seed = 0x5eed5eedull;
};

/// "prop2": only the identity automorphism preserves intervals, 3 <= n <= 12,
/// and the automorphism group has exactly n*phi(n) members.
std::vector<CheckResult> verify_automorphism_suite(const VerifyOptions& options = {});

/// "prop4": right-homometric pairs project to homometric pairs in Z_n over
/// the whole census grid, plus the D_10 left-homometric counterexample whose
/// projections are not homometric. Pass precomputed right censuses to avoid
/// re-enumerating.
std::vector<CheckResult> verify_projection_suite(const VerifyOptions& options = {},
                                                 const std::vector<DnCensus>* right_censuses = nullptr);

/// "prop6": wherever both plus parts (or both minus parts) are I_0-symmetric,
/// right and left homometry verdicts coincide (full n=12, p=5 scan), and the
/// two symmetric listing pairs appear in both columns.
std::vector<CheckResult> verify_symmetry_suite(const VerifyOptions& options = {});

/// "cor2": the constructive lift succeeds on the whole tetrachord family and
/// every non-trivially homometric pair in Z_12 (cardinalities 4-8) admits a
/// non-trivial right-homometric lift.
std::vector<CheckResult> verify_lift_suite(const VerifyOptions& options = {});

/// "thm1": the by-parts conditions agree with direct interval-vector
/// equality, exhaustively on 3-subsets of D_6 and on random pairs up to n=18.
std::vector<CheckResult> verify_decomposition_suite(const VerifyOptions& options = {});

/// "thm4": the spectral conditions agree with the exact predicates, and the
/// magnitude-spectrum criterion matches homometry in Z_n up to n=16.
std::vector<CheckResult> verify_fourier_suite(const VerifyOptions& options = {});

/// Suite by CLI name: prop2, prop4, prop6, cor2, thm1, thm4.
std::vector<CheckResult> run_verification_suite(std::string_view name,
                                                const VerifyOptions& options = {});
const std::vector<std::string>& verification_suite_names();

}  // namespace dihom
