#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sturmian/cf_core.hpp"
#include "sturmian/grid.hpp"
#include "sturmian/interval.hpp"
#include "sturmian/rotation.hpp"
#include "sturmian/targets.hpp"

namespace sturmian {

// In this module V_l for a time l in some J^i_b means the undetermined arc at
// depth l (V_at_depth), the indexing under which the block lemmas hold.

/// Sorted, merged non-wrapping pieces [lo, hi) of [0, Q).
struct GridPieces {
  std::vector<std::pair<GridInt, GridInt>> pieces;
  bool disjoint = true;  // false if any two input arcs overlapped

  GridInt measure() const;
  GridInt overlap(const GridPieces& other) const;
  bool contains(GridInt g) const;
};

GridPieces make_pieces(GridInt modulus, std::span<const GridArc> arcs);

/// Arcs of V_l for every l in a depth range.
std::vector<GridArc> block_arcs(const DepthArcs& arcs, const JIndex& block);

/// Uniform point of a set at 2^-128 resolution (inverse CDF over the pieces).
Rational sample_in(const IntervalSet& set, std::uint64_t seed, std::uint64_t stream);
/// Uniform point of [0,1) at 2^-128 resolution.
Rational sample_unit(std::uint64_t seed, std::uint64_t stream);

struct BoundCheck {
  bool vacuous = false;
  bool lower_ok = true;
  bool upper_ok = true;
  bool ok() const { return lower_ok && upper_ok; }
};

// -- h_i ---------------------------------------------------------------------

struct HStat {
  std::size_t i = 0;
  Rational integral;     // Σ_{l in J^i_2} λ(V_l)
  Rational closed_form;  // q_i θ_{i-1}
  std::int64_t pieces = 0;
  bool support_checked = false;
  bool support_disjoint = false;
  Rational support_measure;
  std::optional<IntervalSet> support;  // materialized when q_i <= 4096

  bool ok() const;
};

HStat h_integral(const Alpha& alpha, std::size_t i, std::int64_t support_cap = std::int64_t{1} << 21);

struct PairReport {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational value;
  Rational h_i;
  Rational h_j;
  Rational factor;  // 3 q_{i+1} / q_j
  BoundCheck bounds;
  bool range_ok = true;
  bool decay_ok = true;  // |value - h_i h_j| <= 3 (√2)^-(j-i)

  bool ok() const { return bounds.ok() && range_ok; }
};

PairReport h_pair_integral(const Alpha& alpha, std::size_t i, std::size_t j);

/// Every pair j >= i + min_gap with both J^i_2 and J^j_2 inside the horizon
/// and q_j <= cap; supports are built once per index.
std::vector<PairReport> h_pair_sweep(const Alpha& alpha, std::size_t min_gap, std::int64_t cap);

// -- Kesten counting -----------------------------------------------------------

struct KestenReport {
  std::int64_t count = 0;
  std::int64_t size = 0;
  Rational expected;  // λ([c,d)) |J^i_b|
  bool bound_ok = true;
};

/// Points {-lα}, l in J^i_b, inside the arc.
KestenReport kesten_count(const Alpha& alpha, const CircleInterval& interval, std::size_t i, std::int64_t b);

// -- quasi-independence ----------------------------------------------------------

struct QuasiReport {
  std::int64_t k = 0;
  std::size_t i = 0;
  std::int64_t b = 0;
  Rational intersection;
  Rational lambda_k;
  Rational union_measure;
  Rational scale;  // λ(V_k) |J^i_b|
  BoundCheck bounds;
  bool monotone_ok = true;
};

QuasiReport quasi_independence_check(const Alpha& alpha, std::int64_t k, std::size_t i, std::int64_t b);

struct QuasiUnionReport {
  std::size_t i = 0;
  std::int64_t b_inner = 0;
  std::size_t j = 0;
  std::int64_t b_outer = 0;
  Rational intersection;
  Rational inner_measure;
  Rational outer_measure;
  Rational scale;  // λ(V_k) |J^j_b| for k in J^i_{b'}
  BoundCheck bounds;
};

/// λ(∪_{k in J^i_{b'}} V_k ∩ ∪_{l in J^j_b} V_l) against the summed bounds, i < j.
QuasiUnionReport quasi_union_check(const Alpha& alpha, std::size_t i, std::int64_t b_inner, std::size_t j,
                                   std::int64_t b_outer);

// -- Theorem A -------------------------------------------------------------------

struct ThmAPoint {
  std::int64_t N = 0;
  std::optional<std::size_t> m;  // N = q_m - 1
  std::int64_t count = 0;
  Rational measure_sum;
  std::optional<std::string> ratio;  // log count / log measure_sum, 30 digits
  double ratio_value = 0;
  std::optional<bool> count_bounds_ok;    // (m-2)/4 < count <= Σ_{i<=m} a_i
  std::optional<bool> measure_bounds_ok;  // (m-2)/2 < sum < Σ_{i<=m} a_i
};

std::vector<ThmAPoint> theorem_a_ratio(const Alpha& alpha, const CirclePoint& x,
                                       std::span<const std::int64_t> checkpoints);

struct ThmASummary {
  std::vector<std::int64_t> checkpoints;
  std::vector<Rational> xs;
  std::vector<std::vector<ThmAPoint>> series;  // per x
  std::vector<double> median_abs_error;        // per checkpoint, over defined ratios
  std::int64_t samples_all_bounds_ok = 0;
};

ThmASummary theorem_a_experiment(const Alpha& alpha, std::span<const std::int64_t> checkpoints,
                                 std::int64_t samples, std::uint64_t seed, unsigned jobs);
/// Same over given points.
ThmASummary theorem_a_summary(const Alpha& alpha, std::span<const std::int64_t> checkpoints, std::vector<Rational> xs,
                              unsigned jobs);

// -- Theorem B -------------------------------------------------------------------

struct ThmBConfig {
  std::size_t m = 0;
  Rational rho;
  Rational sigma;
  Rational C;
};

struct WbCheck {
  std::int64_t b = 0;
  Rational measure;
  Rational closed_form;
  bool nested_in_previous = true;  // W_b ⊆ W_{b-1}, checked for b >= 3
  bool match() const { return measure == closed_form; }
};

struct PairSample {
  Rational x;
  Rational y;
  std::int64_t block_count_x = 0;  // hits over times [q_{m-1}, q_m)
  std::int64_t block_count_y = 0;
  std::int64_t count_x = 0;  // hits over steps 1..q_m - 1
  std::int64_t count_y = 0;
  Rational f_x;
  Rational f_y;
  bool ok = false;
};

struct ThmBReport {
  ThmBConfig config;
  BigInt a_m;
  std::int64_t rho_am = 0;
  std::int64_t sigma_am = 0;
  IntervalSet X;
  IntervalSet Y;
  Rational lambda_X;
  Rational lambda_Y;
  Rational D;
  Rational measure_sum;  // Σ_{j=1}^{q_m-1} λ(V_j)
  std::vector<WbCheck> wb_checks;
  std::vector<PairSample> pairs;
  Rational min_gap;

  bool measures_ok() const;
  bool closed_forms_ok() const;
  bool pairs_ok() const;
  bool passed() const { return measures_ok() && closed_forms_ok() && pairs_ok(); }
};

/// Checks the configuration against alpha; throws ConfigError.
void validate(const Alpha& alpha, const ThmBConfig& cfg);

ThmBReport theorem_b_experiment(const Alpha& alpha, const ThmBConfig& cfg, std::int64_t samples, std::uint64_t seed,
                                unsigned jobs);

/// k ones, then A = max(ceil(C k) + 1, min_large) at position k + 1.
Alpha engineered_alpha(std::size_t ones, const Rational& C, const BigInt& min_large = BigInt(100000),
                       const BigInt& tail = default_tail());

struct OscillationReport {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  Rational x;
  Rational f_m1;
  Rational f_m2;
  Rational D;
  bool ok = false;  // f_m1 - f_m2 >= D / 2
};

/// Picks x in X_{m1} ∩ Y_{m2} and compares f at the two checkpoints.
OscillationReport oscillation_demo(const Alpha& alpha, const ThmBConfig& first, const ThmBConfig& second,
                                   std::uint64_t seed);

// -- Monte Carlo over α -------------------------------------------------------------

struct WnEstimate {
  std::int64_t n = 0;
  std::int64_t samples = 0;
  std::int64_t hits = 0;
  std::int64_t skipped = 0;
  Rational estimate;  // hits / accepted samples
  double sigma = 0;
  double half_width_99 = 0;
  bool precision_ok = true;  // skipped <= 1%

  double lower_3sigma() const { return to_double(estimate) - 3 * sigma; }
};

WnEstimate monte_carlo_Wn(std::int64_t n, std::int64_t samples, std::uint64_t seed, unsigned jobs);

struct BigTimeStats {
  Rational C;
  std::int64_t n_max = 0;
  std::int64_t samples = 0;
  std::int64_t skipped = 0;
  std::int64_t with_witness = 0;
  Rational fraction;
  std::map<std::int64_t, std::int64_t> first_m;
};

/// Fraction of α with some 2 <= m <= n_max such that a_m > C Σ_{i<m} a_i.
BigTimeStats find_large_element(std::uint64_t seed, const Rational& C, std::int64_t n_max, std::int64_t samples,
                                unsigned jobs);

struct GrowthRow {
  std::int64_t n = 0;
  std::int64_t samples = 0;
  std::int64_t exceeding = 0;  // Σ a_i > n (ln n)^3
  Rational fraction;
  BigInt min_sum;
  BigInt max_sum;
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  std::int64_t skipped = 0;
  bool monotone = true;
};

GrowthTable sum_ai_growth(std::uint64_t seed, std::span<const std::int64_t> checkpoints, std::int64_t samples,
                          unsigned jobs);

}  // namespace sturmian
