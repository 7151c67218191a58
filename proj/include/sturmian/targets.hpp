#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/cf_core.hpp"
#include "sturmian/grid.hpp"
#include "sturmian/interval.hpp"
#include "sturmian/rotation.hpp"

namespace sturmian {

// Two indexings are in play.  A *step* j is the coding length index: V_j is
// the set of x whose coding c_0..c_j does not determine c_{j+1}.  A *depth*
// d counts the orbit points {mα}, 1 <= m <= d, that cut out the arc R(U) of
// the closed form.  V_j is the depth j + 2 arc rotated back by j + 1, and the
// J^i_b time blocks below are ranges of depths.

constexpr std::int64_t depth_of_step(std::int64_t j) { return j + 2; }
constexpr std::int64_t step_of_depth(std::int64_t d) { return d - 2; }

enum class ArcCase { frac_r_below_half, frac_r_above_half };

std::string to_string(ArcCase c);

struct TargetDecomposition {
  std::int64_t depth = 0;
  std::size_t k = 0;  // r = q_k, s = q_{k-1}
  BigInt r;
  BigInt s;
  std::int64_t t = 0;
  ArcCase arc_case = ArcCase::frac_r_below_half;
  CircleInterval ru;
  Rational measure;
};

/// Closed form at a depth with q_1 <= depth <= horizon_j + 2.
TargetDecomposition rst(const Alpha& alpha, std::int64_t depth);
CircleInterval target_RU(const Alpha& alpha, std::int64_t depth);

/// Undetermined arc at a depth >= 1; depth 1 is the whole circle and depths
/// below q_1 come from the oracle.
CircleInterval V_at_depth(const Alpha& alpha, std::int64_t depth);
Rational measure_at_depth(const Alpha& alpha, std::int64_t depth);

/// V_j for 0 <= j with j + 1 <= horizon_j.
CircleInterval V_interval(const Alpha& alpha, std::int64_t j);
/// λ(V_j) for 0 <= j <= horizon_j.
Rational measure_V(const Alpha& alpha, std::int64_t j);

// -- time blocks -----------------------------------------------------------

struct JIndex {
  std::size_t i = 0;
  std::int64_t b = 0;
  std::int64_t begin = 0;  // depth range [begin, end)
  std::int64_t end = 0;
  /// b <= a_{i+1}; a J^i_2 with a_{i+1} = 1 lies outside the collection.
  bool in_collection = true;
  /// Parent I_i = [q_i, q_{i+1}).
  BigInt parent_begin;
  BigInt parent_end;

  std::int64_t size() const { return end - begin; }
  friend bool operator==(const JIndex&, const JIndex&) = default;
};

/// J^i_b for i >= 1 and b >= 1, or i = 0 and b >= 2.
JIndex j_block(const Alpha& alpha, std::size_t i, std::int64_t b);

/// Every J^i_b of the collection whose range lies in [1, up_to], followed by
/// the J^i_2 (i >= 1) that are not already listed.  Disjointness of the
/// collection and of the J^i_2 family is validated.
std::vector<JIndex> j_intervals(const Alpha& alpha, std::int64_t up_to);

/// J^i_2 when its range lies within horizon_j, else nullopt.
std::optional<JIndex> j_two(const Alpha& alpha, std::size_t i);

// -- sweeps ----------------------------------------------------------------

// A run of consecutive steps on which the closed form is constant.  Steps
// whose depth is below q_1 come one at a time from the oracle.
struct StepBlock {
  std::int64_t first = 0;  // inclusive
  std::int64_t last = 0;   // inclusive
  std::size_t i = 0;
  std::int64_t b = 0;
  Rational measure;
  std::optional<TargetDecomposition> decomposition;
  /// R(U), shared by every step of the block; V_j is ru rotated by -(j+1)α.
  CircleInterval ru;

  std::int64_t size() const { return last - first + 1; }
};

/// Visits the blocks covering steps [first, last], 0 <= first,
/// last <= horizon_j, in increasing order.
void for_each_step_block(const Alpha& alpha, std::int64_t first, std::int64_t last,
                         const std::function<void(const StepBlock&)>& visit);

/// Grid arc of R(U) for a block.
GridArc ru_grid_arc(const OrbitGrid& grid, const StepBlock& block);

/// #{j in [first, last] : x in V_j} for the grid index of x.
std::int64_t count_hits(const Alpha& alpha, const OrbitGrid& grid, GridInt x_index, std::int64_t first,
                        std::int64_t last);

// Grid form of the closed form, for sweeps over millions of depths.  Holds
// references: the alpha and grid must outlive it.
class DepthArcs {
 public:
  DepthArcs(const Alpha& alpha, const OrbitGrid& grid);

  GridArc ru(std::int64_t depth) const;
  /// Undetermined arc at a depth, 2 <= depth <= horizon_j + 1.
  GridArc at_depth(std::int64_t depth) const;
  GridArc at_step(std::int64_t j) const { return at_depth(depth_of_step(j)); }
  const OrbitGrid& grid() const { return grid_; }

 private:
  const Alpha& alpha_;
  const OrbitGrid& grid_;
  std::vector<std::int64_t> q_;
};

struct CountReport {
  CirclePoint x;
  std::int64_t N = 0;
  std::int64_t count = 0;
  Rational measure_sum;
};

/// Sums over 1 <= j <= N, N <= horizon_j.
CountReport count_undetermined(const Alpha& alpha, const CirclePoint& x, std::int64_t N);
Rational measure_sum(const Alpha& alpha, std::int64_t N);

struct PerStepRow {
  std::int64_t j = 0;
  std::size_t i = 0;
  std::int64_t b = 0;
  std::optional<TargetDecomposition> decomposition;
  Rational lambda;
  std::optional<bool> chi;
};

/// Rows for steps [first, last]; chi is filled when x is given.
std::vector<PerStepRow> per_step_rows(const Alpha& alpha, std::int64_t first, std::int64_t last,
                                      const std::optional<CirclePoint>& x);

}  // namespace sturmian
