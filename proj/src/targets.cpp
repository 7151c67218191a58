#include "sturmian/targets.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturmian {

namespace {

// Largest k with q_k <= d (0 when d < q_1).
std::size_t k_at_depth(const Alpha& alpha, std::int64_t d) {
  const auto& conv = alpha.convergents();
  BigInt dd(static_cast<long>(d));
  auto it = std::upper_bound(conv.begin(), conv.end(), dd,
                             [](const BigInt& v, const Convergent& c) { return v < c.q; });
  return static_cast<std::size_t>(it - conv.begin()) - 1;
}

void require_depth(const Alpha& alpha, std::int64_t d, const char* op) {
  if (d < 1) throw DomainError(std::string(op) + ": depth must be >= 1");
  if (BigInt(static_cast<long>(d)) > alpha.horizon_j() + 2) {
    throw HorizonError(std::string(op) + ": depth " + std::to_string(d) + " beyond horizon_j + 2");
  }
}

Rational orbit_point(const Alpha& alpha, const BigInt& m) { return frac(Rational(m) * alpha.value()); }

bool first_element_at_least_two(const Alpha& alpha) { return alpha.a(1) >= 2; }

void require_step_range(const Alpha& alpha, std::int64_t first, std::int64_t last) {
  if (first < 0) throw DomainError("step range must start at j >= 0");
  if (first <= last && BigInt(static_cast<long>(last)) > alpha.horizon_j()) {
    throw HorizonError("step range ends at " + std::to_string(last) + " beyond horizon_j = " +
                       to_string(alpha.horizon_j()));
  }
}

// Integer-only view of the step blocks: k = 0 marks a single oracle step.
struct StepRun {
  std::int64_t first;
  std::int64_t last;
  std::size_t k;
  std::int64_t t;
};

template <class Fn>
void for_each_run(const Alpha& alpha, std::int64_t first, std::int64_t last, Fn&& fn) {
  require_step_range(alpha, first, last);
  std::vector<std::int64_t> q;
  for (const auto& c : alpha.convergents()) {
    if (!c.q.fits_slong_p()) break;
    q.push_back(c.q.get_si());
  }
  std::int64_t j = first;
  while (j <= last) {
    const std::int64_t d = depth_of_step(j);
    auto it = std::upper_bound(q.begin(), q.end(), d);
    std::size_t k = static_cast<std::size_t>(it - q.begin()) - 1;
    StepRun run{j, j, k, 0};
    if (k > 0) {
      run.t = (d - q[k - 1]) / q[k];
      std::int64_t end_depth = q[k - 1] + (run.t + 1) * q[k];
      run.last = std::min(end_depth - 3, last);
    }
    fn(run);
    j = run.last + 1;
  }
}

}  // namespace

std::string to_string(ArcCase c) {
  return c == ArcCase::frac_r_below_half ? "frac_r_below_half" : "frac_r_above_half";
}

TargetDecomposition rst(const Alpha& alpha, std::int64_t depth) {
  require_depth(alpha, depth, "rst");
  std::size_t k = k_at_depth(alpha, depth);
  if (k == 0) {
    throw DomainError("rst: depth " + std::to_string(depth) + " is below q_1 = " + to_string(alpha.q(1)));
  }
  TargetDecomposition out;
  out.depth = depth;
  out.k = k;
  out.r = alpha.q(k);
  out.s = alpha.q(k - 1);
  BigInt t = (BigInt(static_cast<long>(depth)) - out.s) / out.r;
  out.t = to_int64(t, "t");
  if ((k < alpha.horizon_k() || alpha.tail()) && !(t < alpha.a(k + 1))) {
    throw std::logic_error("rst: t >= a_{k+1} at depth " + std::to_string(depth));
  }
  const Rational& th_k = alpha.theta(k);
  out.measure = th_k + alpha.theta(k - 1) - Rational(t) * th_k;
  out.arc_case = k % 2 == 0 ? ArcCase::frac_r_below_half : ArcCase::frac_r_above_half;

  Rational r_point = orbit_point(alpha, out.r);
  if (th_k != 0 && (r_point < Rational(1, 2)) != (out.arc_case == ArcCase::frac_r_below_half)) {
    throw std::logic_error("rst: {r alpha} on the wrong side of 1/2");
  }
  Rational u_point = orbit_point(alpha, out.s + t * out.r);
  if (out.measure == 1) {
    out.ru = CircleInterval::full();
  } else if (out.arc_case == ArcCase::frac_r_below_half) {
    out.ru = CircleInterval::from_endpoints(u_point, r_point);
  } else {
    out.ru = CircleInterval::from_endpoints(r_point, u_point);
  }
  if (out.ru.length() != out.measure) {
    throw std::logic_error("rst: arc length disagrees with the measure formula at depth " + std::to_string(depth));
  }
  return out;
}

CircleInterval target_RU(const Alpha& alpha, std::int64_t depth) { return rst(alpha, depth).ru; }

CircleInterval V_at_depth(const Alpha& alpha, std::int64_t depth) {
  require_depth(alpha, depth, "V_at_depth");
  if (depth == 1) return CircleInterval::full();
  if (k_at_depth(alpha, depth) == 0) return oracle_V(alpha, step_of_depth(depth));
  if (BigInt(static_cast<long>(depth - 1)) > alpha.horizon_j()) {
    throw HorizonError("V_at_depth: depth " + std::to_string(depth) + " needs depth - 1 <= horizon_j");
  }
  return target_RU(alpha, depth).rotated(-Rational(depth - 1) * alpha.value());
}

Rational measure_at_depth(const Alpha& alpha, std::int64_t depth) {
  require_depth(alpha, depth, "measure_at_depth");
  if (depth == 1) return Rational(1);
  if (k_at_depth(alpha, depth) == 0) return oracle_V(alpha, step_of_depth(depth)).length();
  return rst(alpha, depth).measure;
}

CircleInterval V_interval(const Alpha& alpha, std::int64_t j) {
  if (j < 0) throw DomainError("V_interval: j must be >= 0");
  if (BigInt(static_cast<long>(j + 1)) > alpha.horizon_j()) {
    throw HorizonError("V_interval: j = " + std::to_string(j) + " needs j + 1 <= horizon_j = " +
                       to_string(alpha.horizon_j()));
  }
  if (!alpha.tail() && BigInt(static_cast<long>(j + 2)) > alpha.horizon_j()) {
    throw HorizonError("V_interval: j = " + std::to_string(j) + " is the periodic last step of " + alpha.spec());
  }
  return V_at_depth(alpha, depth_of_step(j));
}

Rational measure_V(const Alpha& alpha, std::int64_t j) {
  if (j < 0) throw DomainError("measure_V: j must be >= 0");
  if (BigInt(static_cast<long>(j)) > alpha.horizon_j()) {
    throw HorizonError("measure_V: j = " + std::to_string(j) + " beyond horizon_j = " + to_string(alpha.horizon_j()));
  }
  return measure_at_depth(alpha, depth_of_step(j));
}

// -- time blocks -------------------------------------------------------------

JIndex j_block(const Alpha& alpha, std::size_t i, std::int64_t b) {
  if (i + 1 > alpha.horizon_k()) {
    throw HorizonError("j_block: i = " + std::to_string(i) + " needs i < horizon_k");
  }
  if (b < 1 || (i == 0 && b < 2)) throw DomainError("j_block: branch out of range");
  BigInt q_prev = i == 0 ? BigInt(0) : alpha.q(i - 1);
  const BigInt& q_i = alpha.q(i);
  BigInt bb(static_cast<long>(b));
  BigInt begin = b == 1 ? q_i : q_prev + (bb - 1) * q_i;
  BigInt end = q_prev + bb * q_i;
  JIndex out;
  out.i = i;
  out.b = b;
  out.begin = to_int64(begin, "J begin");
  out.end = to_int64(end, "J end");
  out.in_collection = bb <= alpha.a(i + 1);
  out.parent_begin = q_i;
  out.parent_end = alpha.q(i + 1);
  return out;
}

std::vector<JIndex> j_intervals(const Alpha& alpha, std::int64_t up_to) {
  if (BigInt(static_cast<long>(up_to)) > alpha.horizon_j()) {
    throw HorizonError("j_intervals: up_to beyond horizon_j");
  }
  std::vector<JIndex> out;
  const std::size_t n = alpha.horizon_k();
  for (std::size_t i = first_element_at_least_two(alpha) ? 0 : 1; i < n; ++i) {
    if (alpha.q(i) > up_to) break;
    for (std::int64_t b = i == 0 ? 2 : 1; BigInt(static_cast<long>(b)) <= alpha.a(i + 1); ++b) {
      JIndex block = j_block(alpha, i, b);
      if (block.end - 1 > up_to) break;
      out.push_back(std::move(block));
    }
  }
  auto disjoint_sorted = [](std::vector<const JIndex*> blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const JIndex* a, const JIndex* b) { return a->begin < b->begin; });
    for (std::size_t k = 1; k < blocks.size(); ++k) {
      if (blocks[k]->begin < blocks[k - 1]->end) return false;
    }
    return true;
  };
  std::vector<const JIndex*> collection;
  for (const auto& block : out) collection.push_back(&block);
  if (!disjoint_sorted(collection)) throw std::logic_error("j_intervals: collection ranges overlap");

  for (std::size_t i = 1; i < n; ++i) {
    if (alpha.a(i + 1) != 1) continue;
    JIndex block = j_block(alpha, i, 2);
    if (block.end - 1 > up_to) break;
    out.push_back(std::move(block));
  }
  std::vector<const JIndex*> twos;
  for (const auto& block : out) {
    if (block.b == 2 && block.i >= 1) twos.push_back(&block);
  }
  if (!disjoint_sorted(twos)) throw std::logic_error("j_intervals: J^i_2 ranges overlap");
  return out;
}

std::optional<JIndex> j_two(const Alpha& alpha, std::size_t i) {
  if (i < 1 || i + 1 > alpha.horizon_k()) return std::nullopt;
  JIndex block = j_block(alpha, i, 2);
  if (BigInt(static_cast<long>(block.end - 1)) > alpha.horizon_j()) return std::nullopt;
  return block;
}

// -- sweeps ------------------------------------------------------------------

void for_each_step_block(const Alpha& alpha, std::int64_t first, std::int64_t last,
                         const std::function<void(const StepBlock&)>& visit) {
  require_step_range(alpha, first, last);
  if (first > last) return;
  std::optional<OracleSweep> sweep;
  std::int64_t j = first;
  while (j <= last) {
    const std::int64_t d = depth_of_step(j);
    StepBlock block;
    block.first = j;
    std::size_t k = k_at_depth(alpha, d);
    if (k == 0) {
      if (!sweep) sweep.emplace(alpha);
      while (sweep->step() < j) sweep->advance();
      CircleInterval v = sweep->undetermined();
      block.last = j;
      block.i = 0;
      block.b = d + 1;
      block.measure = v.length();
      block.ru = v.rotated(Rational(j + 1) * alpha.value());
    } else {
      TargetDecomposition dec = rst(alpha, d);
      BigInt end_depth = dec.s + BigInt(static_cast<long>(dec.t + 1)) * dec.r;  // exclusive
      BigInt block_last = end_depth - 3;
      block.last = block_last < last ? to_int64(block_last, "block end") : last;
      block.i = k;
      block.b = dec.t + 1;
      block.measure = dec.measure;
      block.ru = dec.ru;
      block.decomposition = std::move(dec);
    }
    visit(block);
    j = block.last + 1;
  }
}

GridArc ru_grid_arc(const OrbitGrid& grid, const StepBlock& block) { return grid.from_interval(block.ru); }

DepthArcs::DepthArcs(const Alpha& alpha, const OrbitGrid& grid) : alpha_(alpha), grid_(grid) {
  for (const auto& c : alpha.convergents()) {
    if (!c.q.fits_slong_p()) break;
    q_.push_back(c.q.get_si());
  }
}

GridArc DepthArcs::ru(std::int64_t depth) const {
  require_depth(alpha_, depth, "DepthArcs::ru");
  auto it = std::upper_bound(q_.begin(), q_.end(), depth);
  std::size_t k = static_cast<std::size_t>(it - q_.begin()) - 1;
  if (k == 0) {
    if (depth == 1) return {0, grid_.modulus()};
    return grid_.shifted(grid_.from_interval(oracle_V(alpha_, step_of_depth(depth))), grid_.orbit(depth - 1));
  }
  const std::int64_t r = q_[k];
  const std::int64_t s = q_[k - 1];
  const std::int64_t t = (depth - s) / r;
  GridInt r_point = grid_.orbit(r);
  GridInt u_point = grid_.orbit(s + t * r);
  GridInt lo = k % 2 == 0 ? u_point : r_point;
  GridInt hi = k % 2 == 0 ? r_point : u_point;
  GridInt len = grid_.reduce(hi - lo);
  if (len == 0) len = grid_.modulus();
  return {lo, len};
}

GridArc DepthArcs::at_depth(std::int64_t depth) const {
  if (depth < 2 || BigInt(static_cast<long>(depth - 1)) > alpha_.horizon_j()) {
    throw HorizonError("DepthArcs::at_depth: depth " + std::to_string(depth) + " outside [2, horizon_j + 1]");
  }
  return grid_.shifted(ru(depth), -grid_.orbit(depth - 1));
}

std::int64_t count_hits(const Alpha& alpha, const OrbitGrid& grid, GridInt x_index, std::int64_t first,
                        std::int64_t last) {
  const GridInt q = grid.modulus();
  const GridInt p = grid.step();
  DepthArcs arcs(alpha, grid);
  std::int64_t hits = 0;
  for_each_run(alpha, first, last, [&](const StepRun& run) {
    GridArc arc = arcs.ru(depth_of_step(run.first));
    GridInt offset = grid.reduce(x_index + grid.orbit(run.first + 1) - arc.start);
    for (std::int64_t j = run.first; j <= run.last; ++j) {
      if (offset < arc.length) ++hits;
      offset += p;
      if (offset >= q) offset -= q;
    }
  });
  return hits;
}

CountReport count_undetermined(const Alpha& alpha, const CirclePoint& x, std::int64_t N) {
  if (N < 0) throw DomainError("count_undetermined: N must be >= 0");
  CountReport out;
  out.x = x;
  out.N = N;
  out.measure_sum = measure_sum(alpha, N);
  if (N >= 1) {
    OrbitGrid grid(alpha);
    out.count = count_hits(alpha, grid, grid.floor_index(x.value()), 1, N);
  }
  return out;
}

Rational measure_sum(const Alpha& alpha, std::int64_t N) {
  if (N < 0) throw DomainError("measure_sum: N must be >= 0");
  Rational total(0);
  std::optional<OracleSweep> sweep;
  for_each_run(alpha, 1, N, [&](const StepRun& run) {
    if (run.k == 0) {
      if (!sweep) sweep.emplace(alpha);
      while (sweep->step() < run.first) sweep->advance();
      total += sweep->undetermined().length();
      return;
    }
    const Rational& th = alpha.theta(run.k);
    Rational lambda = th + alpha.theta(run.k - 1) - Rational(run.t) * th;
    total += lambda * Rational(BigInt(static_cast<long>(run.last - run.first + 1)));
  });
  return total;
}

std::vector<PerStepRow> per_step_rows(const Alpha& alpha, std::int64_t first, std::int64_t last,
                                      const std::optional<CirclePoint>& x) {
  std::vector<PerStepRow> rows;
  for_each_step_block(alpha, first, last, [&](const StepBlock& block) {
    Rational shifted = x ? frac(x->value() + Rational(block.first + 1) * alpha.value()) : Rational(0);
    for (std::int64_t j = block.first; j <= block.last; ++j) {
      PerStepRow row;
      row.j = j;
      row.i = block.i;
      row.b = block.b;
      row.decomposition = block.decomposition;
      row.lambda = block.measure;
      if (x) {
        row.chi = block.ru.contains(shifted);
        shifted += alpha.value();
        if (shifted >= 1) shifted -= 1;
      }
      rows.push_back(std::move(row));
    }
  });
  return rows;
}

}  // namespace sturmian
