#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gcsing/superbracket.hpp"

namespace gcs {

inline constexpr std::uint64_t kDefaultVerifySeed = 20070531;

struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  double threshold = 0.0;
  int checks = 0;
  std::string detail;
};

struct VerifySummary {
  std::uint64_t seed = kDefaultVerifySeed;
  int trials = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
  std::string render() const;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultVerifySeed;
  int trials = 1000;
  /// Monomial table checked by the expansion suite; defaults to the library's.
  std::span<const BracketMonomial> monomials = expansion_monomials();
};

// Individual suites, each seeded from options.seed.
SuiteResult verify_bracket_relations(const VerifyOptions& options);
SuiteResult verify_superbracket_identity(const VerifyOptions& options);
SuiteResult verify_upu3_factorization(const VerifyOptions& options);
SuiteResult verify_verne_chain(const VerifyOptions& options);
SuiteResult verify_verne_cases(const VerifyOptions& options);
SuiteResult verify_delta_reduction(const VerifyOptions& options);

/// All suites. Failures are reported in the summary, never thrown.
VerifySummary run_verification(const VerifyOptions& options);

}  // namespace gcs
