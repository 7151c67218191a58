#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturmian/cf_core.hpp"

namespace sturmian {

struct SuiteResult {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::int64_t vacuous = 0;  // bound checks that hold trivially, reported apart
  std::string detail;
  std::string first_failure;

  bool passed() const { return failures == 0 && checks > 0; }
  void expect(bool ok, const std::string& what);
};

struct VerifyOptions {
  std::int64_t oracle_max = 2000;
  std::int64_t word_max = 120;            // atoms and right-special words
  std::int64_t enumerate_cap = 1 << 16;   // blocks checked arc by arc
  std::int64_t h_support_cap = 1 << 21;
  std::int64_t pair_cap = 1 << 20;        // q_j bound for the h_i h_j sweep
  std::int64_t kesten_triples = 1000;
  std::int64_t kesten_block_cap = 1 << 18;
  std::int64_t quasi_draws = 200;
  std::int64_t quasi_union_draws = 50;
  std::int64_t quasi_block_cap = 1 << 16;
  std::int64_t symbolic_points = 4;
  std::int64_t symbolic_max = 300;
  std::uint64_t seed = 1;
};

SuiteResult suite_oracle_equivalence(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_atoms(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_theta(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_disjointness(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_nesting(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_block_measures(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_sum_bounds(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_h_integrals(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_kesten(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_quasi_independence(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_h_pairs(const Alpha& alpha, const VerifyOptions& opt);
SuiteResult suite_symbolic_count(const Alpha& alpha, const VerifyOptions& opt);

struct VerifyReport {
  std::string alpha;
  std::vector<SuiteResult> suites;

  bool passed() const;
  const SuiteResult& suite(const std::string& name) const;
};

/// Every suite above; suites run concurrently on up to `jobs` threads.
VerifyReport verify_alpha(const Alpha& alpha, const VerifyOptions& opt, unsigned jobs);

/// golden-40, thirty 2s, (1,2,3) x 10 and 20 sampled prefixes of 12
/// elements (streams from 0, skipping imprecise draws).
std::vector<Alpha> standard_alpha_set(std::uint64_t seed);

}  // namespace sturmian
