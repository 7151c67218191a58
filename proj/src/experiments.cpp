#include "sturmian/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sturmian/parallel.hpp"

namespace sturmian {

namespace {

constexpr std::int64_t kPairCap = std::int64_t{1} << 21;
constexpr std::int64_t kMaterializeCap = 4096;

Rational grid_measure(const OrbitGrid& grid, GridInt units) {
  return make_rational(to_bigint(units), to_bigint(grid.modulus()));
}

void require_block_in_horizon(const Alpha& alpha, const JIndex& block, const char* op) {
  if (BigInt(static_cast<long>(block.end - 1)) > alpha.horizon_j()) {
    throw HorizonError(std::string(op) + ": J^" + std::to_string(block.i) + "_" + std::to_string(block.b) +
                       " reaches beyond horizon_j");
  }
}

GridArc arc_at(const DepthArcs& arcs, std::int64_t depth) {
  if (depth == 1) return {0, arcs.grid().modulus()};
  return arcs.at_depth(depth);
}

// Hits of x over depths [d_first, d_last].
std::int64_t count_depth_hits(const Alpha& alpha, const OrbitGrid& grid, GridInt x, std::int64_t d_first,
                              std::int64_t d_last) {
  std::int64_t hits = 0;
  if (d_first == 1) {
    ++hits;
    d_first = 2;
  }
  if (d_first <= d_last) hits += count_hits(alpha, grid, x, step_of_depth(d_first), step_of_depth(d_last));
  return hits;
}

Rational sum_elements(const Alpha& alpha, std::size_t upto) {
  BigInt total(0);
  for (std::size_t i = 1; i <= upto; ++i) total += alpha.a(i);
  return Rational(total);
}

IntervalSet to_interval_set(const OrbitGrid& grid, const GridPieces& pieces) {
  std::vector<CircleInterval> arcs;
  arcs.reserve(pieces.pieces.size());
  for (const auto& [lo, hi] : pieces.pieces) arcs.push_back(grid.to_interval({lo, hi - lo}));
  return IntervalSet::from_arcs(arcs);
}

BoundCheck multiplicative_bounds(const Rational& value, const Rational& scale, const Rational& product) {
  BoundCheck out;
  out.vacuous = scale <= 3;
  Rational lower = (scale - 3) / scale * product;
  Rational upper = (scale + 3) / scale * product;
  out.lower_ok = out.vacuous || lower <= value;
  out.upper_ok = value <= upper;
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace

// -- grid pieces ---------------------------------------------------------------

GridInt GridPieces::measure() const {
  GridInt total = 0;
  for (const auto& [lo, hi] : pieces) total += hi - lo;
  return total;
}

GridInt GridPieces::overlap(const GridPieces& other) const {
  GridInt total = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pieces.size() && j < other.pieces.size()) {
    GridInt lo = std::max(pieces[i].first, other.pieces[j].first);
    GridInt hi = std::min(pieces[i].second, other.pieces[j].second);
    if (lo < hi) total += hi - lo;
    if (pieces[i].second < other.pieces[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

bool GridPieces::contains(GridInt g) const {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), g,
                             [](GridInt v, const std::pair<GridInt, GridInt>& p) { return v < p.first; });
  if (it == pieces.begin()) return false;
  --it;
  return g < it->second;
}

GridPieces make_pieces(GridInt modulus, std::span<const GridArc> arcs) {
  std::vector<std::pair<GridInt, GridInt>> raw;
  raw.reserve(arcs.size() + 1);
  for (const auto& arc : arcs) {
    if (arc.length <= 0) continue;
    if (arc.length >= modulus) {
      raw.emplace_back(0, modulus);
      continue;
    }
    GridInt end = arc.start + arc.length;
    if (end <= modulus) {
      raw.emplace_back(arc.start, end);
    } else {
      raw.emplace_back(arc.start, modulus);
      raw.emplace_back(0, end - modulus);
    }
  }
  std::sort(raw.begin(), raw.end());
  GridPieces out;
  for (const auto& piece : raw) {
    if (!out.pieces.empty() && piece.first < out.pieces.back().second) out.disjoint = false;
    if (!out.pieces.empty() && piece.first <= out.pieces.back().second) {
      out.pieces.back().second = std::max(out.pieces.back().second, piece.second);
    } else {
      out.pieces.push_back(piece);
    }
  }
  return out;
}

std::vector<GridArc> block_arcs(const DepthArcs& arcs, const JIndex& block) {
  std::vector<GridArc> out;
  out.reserve(static_cast<std::size_t>(block.size()));
  const OrbitGrid& grid = arcs.grid();
  std::int64_t d = block.begin;
  if (d == 1) {
    out.push_back({0, grid.modulus()});
    ++d;
  }
  if (d >= block.end) return out;
  GridArc current = arcs.at_depth(d);
  for (; d < block.end; ++d) {
    out.push_back(current);
    current.start -= grid.step();
    if (current.start < 0) current.start += grid.modulus();
  }
  GridArc last = arcs.at_depth(block.end - 1);
  if (last.start != out.back().start || last.length != out.back().length) {
    throw std::logic_error("block_arcs: closed form not constant on J^" + std::to_string(block.i) + "_" +
                           std::to_string(block.b));
  }
  return out;
}

Rational sample_unit(std::uint64_t seed, std::uint64_t stream) {
  BigInt den(1);
  den <<= 128;
  return make_rational(random_bits(seed, stream, 128), den);
}

Rational sample_in(const IntervalSet& set, std::uint64_t seed, std::uint64_t stream) {
  if (set.empty()) throw DomainError("cannot sample from an empty set");
  Rational r = sample_unit(seed, stream) * set.measure();
  for (const auto& piece : set.pieces()) {
    Rational len = piece.hi - piece.lo;
    if (r < len) return piece.lo + r;
    r -= len;
  }
  throw std::logic_error("sample_in: inverse CDF ran past the last piece");
}

// -- h_i -----------------------------------------------------------------------

bool HStat::ok() const {
  bool in_range = Rational(1, 2) < integral && integral < 1;
  bool support_ok = !support_checked || (support_disjoint && support_measure == integral);
  return integral == closed_form && in_range && support_ok;
}

HStat h_integral(const Alpha& alpha, std::size_t i, std::int64_t support_cap) {
  auto block = j_two(alpha, i);
  if (!block) throw HorizonError("h_integral: J^" + std::to_string(i) + "_2 not within horizon");
  HStat out;
  out.i = i;
  out.pieces = block->size();
  Rational first = measure_at_depth(alpha, block->begin);
  Rational last = measure_at_depth(alpha, block->end - 1);
  out.integral = first * Rational(BigInt(static_cast<long>(block->size())));
  if (first != last) out.integral = Rational(-1);
  out.closed_form = Rational(alpha.q(i)) * alpha.theta(i - 1);
  if (block->size() <= support_cap) {
    OrbitGrid grid(alpha);
    DepthArcs arcs(alpha, grid);
    auto arcs_of_block = block_arcs(arcs, *block);
    GridPieces pieces = make_pieces(grid.modulus(), arcs_of_block);
    GridInt total = 0;
    for (const auto& arc : arcs_of_block) total += arc.length;
    out.support_checked = true;
    out.support_disjoint = pieces.disjoint && pieces.measure() == total;
    out.support_measure = grid_measure(grid, pieces.measure());
    if (block->size() <= kMaterializeCap) out.support = to_interval_set(grid, pieces);
  }
  return out;
}

namespace {

PairReport pair_from_pieces(const Alpha& alpha, const OrbitGrid& grid, std::size_t i, std::size_t j,
                            const GridPieces& pi, const GridPieces& pj) {
  PairReport out;
  out.i = i;
  out.j = j;
  out.value = grid_measure(grid, pi.overlap(pj));
  out.h_i = Rational(alpha.q(i)) * alpha.theta(i - 1);
  out.h_j = Rational(alpha.q(j)) * alpha.theta(j - 1);
  out.factor = Rational(3 * alpha.q(i + 1)) / Rational(alpha.q(j));
  Rational product = out.h_i * out.h_j;
  out.bounds.vacuous = out.factor >= 1;
  out.bounds.lower_ok = out.bounds.vacuous || (1 - out.factor) * product <= out.value;
  out.bounds.upper_ok = out.value <= (1 + out.factor) * product;
  out.range_ok = out.value >= 0 && out.value <= std::min(out.h_i, out.h_j);
  Rational diff = out.value - product;
  BigInt pow(1);
  pow <<= static_cast<mp_bitcnt_t>(j - i);
  out.decay_ok = diff * diff <= Rational(9) / Rational(pow);
  return out;
}

GridPieces h_support(const DepthArcs& arcs, const JIndex& block) {
  auto list = block_arcs(arcs, block);
  return make_pieces(arcs.grid().modulus(), list);
}

}  // namespace

PairReport h_pair_integral(const Alpha& alpha, std::size_t i, std::size_t j) {
  if (!(i < j)) throw DomainError("h_pair_integral needs i < j");
  auto bi = j_two(alpha, i);
  auto bj = j_two(alpha, j);
  if (!bi || !bj) throw HorizonError("h_pair_integral: J^i_2 or J^j_2 not within horizon");
  if (bj->size() > kPairCap) throw DomainError("h_pair_integral: q_j beyond the 2^21 sweep cap");
  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  return pair_from_pieces(alpha, grid, i, j, h_support(arcs, *bi), h_support(arcs, *bj));
}

std::vector<PairReport> h_pair_sweep(const Alpha& alpha, std::size_t min_gap, std::int64_t cap) {
  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  std::vector<std::optional<GridPieces>> supports{std::nullopt};
  for (std::size_t i = 1;; ++i) {
    auto block = j_two(alpha, i);
    if (!block || block->size() > cap) break;
    supports.push_back(h_support(arcs, *block));
  }
  std::vector<PairReport> out;
  for (std::size_t i = 1; i < supports.size(); ++i) {
    for (std::size_t j = i + min_gap; j < supports.size(); ++j) {
      out.push_back(pair_from_pieces(alpha, grid, i, j, *supports[i], *supports[j]));
    }
  }
  return out;
}

// -- Kesten --------------------------------------------------------------------

KestenReport kesten_count(const Alpha& alpha, const CircleInterval& interval, std::size_t i, std::int64_t b) {
  JIndex block = j_block(alpha, i, b);
  require_block_in_horizon(alpha, block, "kesten_count");
  OrbitGrid grid(alpha);
  Rational q(to_bigint(grid.modulus()));
  GridInt s = to_grid_int(ceil_of(interval.left() * q));
  GridInt e = to_grid_int(ceil_of((interval.left() + interval.length()) * q));
  GridArc cover{grid.reduce(s), e - s};
  KestenReport out;
  out.size = block.size();
  GridInt g = grid.reduce(-grid.orbit(block.begin));
  for (std::int64_t l = block.begin; l < block.end; ++l) {
    if (grid.contains(cover, g)) ++out.count;
    g -= grid.step();
    if (g < 0) g += grid.modulus();
  }
  out.expected = interval.length() * Rational(BigInt(static_cast<long>(out.size)));
  Rational c(BigInt(static_cast<long>(out.count)));
  out.bound_ok = out.expected - 2 <= c && c <= out.expected + 2;
  return out;
}

// -- quasi-independence ------------------------------------------------------------

QuasiReport quasi_independence_check(const Alpha& alpha, std::int64_t k, std::size_t i, std::int64_t b) {
  if (k < 1) throw DomainError("quasi_independence_check: k must be >= 1");
  if (!(alpha.q(i) > k)) throw DomainError("quasi_independence_check: needs q_i > k");
  JIndex block = j_block(alpha, i, b);
  require_block_in_horizon(alpha, block, "quasi_independence_check");
  if (block.size() > kPairCap) throw DomainError("quasi_independence_check: block beyond the 2^21 sweep cap");
  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  GridArc vk = arc_at(arcs, k);
  auto union_arcs = block_arcs(arcs, block);
  GridPieces pk = make_pieces(grid.modulus(), std::span<const GridArc>(&vk, 1));
  GridPieces pu = make_pieces(grid.modulus(), union_arcs);
  QuasiReport out;
  out.k = k;
  out.i = i;
  out.b = b;
  out.intersection = grid_measure(grid, pk.overlap(pu));
  out.lambda_k = grid_measure(grid, vk.length);
  out.union_measure = grid_measure(grid, pu.measure());
  out.scale = out.lambda_k * Rational(BigInt(static_cast<long>(block.size())));
  out.bounds = multiplicative_bounds(out.intersection, out.scale, out.lambda_k * out.union_measure);
  out.monotone_ok = out.intersection <= out.lambda_k && out.intersection <= out.union_measure;
  return out;
}

QuasiUnionReport quasi_union_check(const Alpha& alpha, std::size_t i, std::int64_t b_inner, std::size_t j,
                                   std::int64_t b_outer) {
  if (!(i < j)) throw DomainError("quasi_union_check needs i < j");
  JIndex inner = j_block(alpha, i, b_inner);
  JIndex outer = j_block(alpha, j, b_outer);
  require_block_in_horizon(alpha, outer, "quasi_union_check");
  if (!(alpha.q(j) > inner.end - 1)) throw DomainError("quasi_union_check: needs q_j > every k of the inner block");
  if (outer.size() + inner.size() > kPairCap) throw DomainError("quasi_union_check: blocks beyond the sweep cap");
  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  GridPieces pi = make_pieces(grid.modulus(), block_arcs(arcs, inner));
  GridPieces po = make_pieces(grid.modulus(), block_arcs(arcs, outer));
  QuasiUnionReport out;
  out.i = i;
  out.b_inner = b_inner;
  out.j = j;
  out.b_outer = b_outer;
  out.intersection = grid_measure(grid, pi.overlap(po));
  out.inner_measure = grid_measure(grid, pi.measure());
  out.outer_measure = grid_measure(grid, po.measure());
  Rational lambda_k = grid_measure(grid, arc_at(arcs, inner.begin).length);
  out.scale = lambda_k * Rational(BigInt(static_cast<long>(outer.size())));
  out.bounds = multiplicative_bounds(out.intersection, out.scale, out.inner_measure * out.outer_measure);
  return out;
}

// -- Theorem A -----------------------------------------------------------------------

std::vector<ThmAPoint> theorem_a_ratio(const Alpha& alpha, const CirclePoint& x,
                                       std::span<const std::int64_t> checkpoints) {
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    if (checkpoints[c] < 1 || (c > 0 && checkpoints[c] <= checkpoints[c - 1])) {
      throw ConfigError("checkpoints must be positive and strictly increasing");
    }
  }
  OrbitGrid grid(alpha);
  GridInt xi = grid.floor_index(x.value());
  std::vector<ThmAPoint> out;
  std::int64_t count = 0;
  std::int64_t done = 0;
  for (std::int64_t N : checkpoints) {
    count += count_hits(alpha, grid, xi, done + 1, N);
    done = N;
    ThmAPoint point;
    point.N = N;
    point.count = count;
    point.measure_sum = measure_sum(alpha, N);
    for (std::size_t m = 1; m <= alpha.horizon_k(); ++m) {
      if (alpha.q(m) - 1 == N) {
        point.m = m;
        break;
      }
    }
    if (point.m) {
      Rational lower(static_cast<long>(*point.m) - 2);
      Rational cap = sum_elements(alpha, *point.m);
      Rational c(BigInt(static_cast<long>(count)));
      point.count_bounds_ok = lower / 4 < c && c <= cap;
      point.measure_bounds_ok = lower / 2 < point.measure_sum && point.measure_sum < cap;
    }
    if (count >= 2 && point.measure_sum > 1) {
      Rational c(BigInt(static_cast<long>(count)));
      point.ratio = log_ratio_decimal(c, point.measure_sum, 30);
      point.ratio_value = log_ratio(c, point.measure_sum);
    }
    out.push_back(std::move(point));
  }
  return out;
}

ThmASummary theorem_a_experiment(const Alpha& alpha, std::span<const std::int64_t> checkpoints,
                                 std::int64_t samples, std::uint64_t seed, unsigned jobs) {
  if (samples < 1) throw ConfigError("samples must be >= 1");
  std::vector<Rational> xs(static_cast<std::size_t>(samples));
  for (std::size_t s = 0; s < xs.size(); ++s) xs[s] = sample_unit(seed, s);
  return theorem_a_summary(alpha, checkpoints, std::move(xs), jobs);
}

ThmASummary theorem_a_summary(const Alpha& alpha, std::span<const std::int64_t> checkpoints, std::vector<Rational> xs,
                              unsigned jobs) {
  ThmASummary out;
  out.checkpoints.assign(checkpoints.begin(), checkpoints.end());
  out.xs = std::move(xs);
  out.series.resize(out.xs.size());
  parallel_for(out.xs.size(), jobs, [&](std::size_t s) {
    out.series[s] = theorem_a_ratio(alpha, CirclePoint(out.xs[s]), checkpoints);
  });
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    std::vector<double> errors;
    for (const auto& series : out.series) {
      if (series[c].ratio) errors.push_back(std::abs(series[c].ratio_value - 1));
    }
    out.median_abs_error.push_back(median(std::move(errors)));
  }
  for (const auto& series : out.series) {
    bool all = std::all_of(series.begin(), series.end(), [](const ThmAPoint& p) {
      return p.count_bounds_ok.value_or(true) && p.measure_bounds_ok.value_or(true);
    });
    if (all) ++out.samples_all_bounds_ok;
  }
  return out;
}

// -- Theorem B -------------------------------------------------------------------------

namespace {

GridPieces w_pieces(const DepthArcs& arcs, const Alpha& alpha, std::size_t m, std::int64_t b) {
  JIndex block = j_block(alpha, m - 1, b);
  auto list = block_arcs(arcs, block);
  return make_pieces(arcs.grid().modulus(), list);
}

std::int64_t exact_product(const Rational& r, const BigInt& a, const char* what) {
  Rational prod = r * Rational(a);
  prod.canonicalize();
  if (prod.get_den() != 1) throw ConfigError(std::string(what) + " * a_m is not an integer");
  return to_int64(prod.get_num(), what);
}

Rational gap_bound(const ThmBConfig& cfg) { return (cfg.rho - cfg.sigma - 1 / cfg.C) / (1 + 1 / cfg.C); }

Rational f_value(const Alpha& alpha, const OrbitGrid& grid, GridInt x, std::size_t m, const Rational& sum) {
  std::int64_t N = to_int64(alpha.q(m) - 1, "q_m");
  return Rational(BigInt(static_cast<long>(count_hits(alpha, grid, x, 1, N)))) / sum;
}

}  // namespace

void validate(const Alpha& alpha, const ThmBConfig& cfg) {
  if (cfg.m < 2 || cfg.m > alpha.horizon_k()) {
    throw ConfigError("thmB: m must satisfy 2 <= m <= n = " + std::to_string(alpha.horizon_k()));
  }
  if (!(Rational(1, 8) < cfg.rho && cfg.rho < Rational(1, 4))) throw ConfigError("thmB: rho must lie in (1/8, 1/4)");
  if (!(Rational(1, 16) < cfg.sigma && cfg.sigma < Rational(1, 8))) {
    throw ConfigError("thmB: sigma must lie in (1/16, 1/8)");
  }
  if (!(cfg.C > 0)) throw ConfigError("thmB: C must be positive");
  const BigInt& am = alpha.a(cfg.m);
  exact_product(cfg.rho, am, "rho");
  if (exact_product(cfg.sigma, am, "sigma") < 2) throw ConfigError("thmB: sigma * a_m must be >= 2");
  if (!(Rational(am) > cfg.C * sum_elements(alpha, cfg.m - 1))) {
    throw ConfigError("thmB: witness condition a_m > C * sum_{i<m} a_i fails");
  }
}

bool ThmBReport::measures_ok() const { return lambda_X >= Rational(1, 4) && lambda_Y >= Rational(1, 128); }

bool ThmBReport::closed_forms_ok() const {
  return !wb_checks.empty() && std::all_of(wb_checks.begin(), wb_checks.end(),
                                           [](const WbCheck& w) { return w.match() && w.nested_in_previous; });
}

bool ThmBReport::pairs_ok() const {
  return !pairs.empty() && std::all_of(pairs.begin(), pairs.end(), [](const PairSample& p) { return p.ok; });
}

ThmBReport theorem_b_experiment(const Alpha& alpha, const ThmBConfig& cfg, std::int64_t samples, std::uint64_t seed,
                                unsigned jobs) {
  validate(alpha, cfg);
  if (samples < 1) throw ConfigError("samples must be >= 1");
  const std::size_t m = cfg.m;
  ThmBReport out;
  out.config = cfg;
  out.a_m = alpha.a(m);
  out.rho_am = exact_product(cfg.rho, out.a_m, "rho");
  out.sigma_am = exact_product(cfg.sigma, out.a_m, "sigma");
  out.D = gap_bound(cfg);

  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  GridPieces wx = w_pieces(arcs, alpha, m, out.rho_am);
  GridPieces w1 = w_pieces(arcs, alpha, m, 1);
  GridPieces ws = w_pieces(arcs, alpha, m, out.sigma_am);
  out.X = to_interval_set(grid, wx);
  out.Y = to_interval_set(grid, w1).subtract(to_interval_set(grid, ws));
  out.lambda_X = out.X.measure();
  out.lambda_Y = out.Y.measure();

  const std::int64_t am = to_int64(out.a_m, "a_m");
  std::set<std::int64_t> bs{2, am, out.rho_am, out.sigma_am};
  for (int step = 1; step <= 6; ++step) bs.insert(2 + (am - 2) * step / 7);
  for (std::int64_t b = 3; bs.size() < 10 && b <= am; ++b) bs.insert(b);
  const Rational th_prev = alpha.theta(m - 2);
  const Rational th = alpha.theta(m - 1);
  const Rational q_prev(alpha.q(m - 1));
  for (std::int64_t b : bs) {
    WbCheck check;
    check.b = b;
    GridPieces wb = w_pieces(arcs, alpha, m, b);
    GridPieces before = b >= 3 ? w_pieces(arcs, alpha, m, b - 1) : GridPieces{};
    check.measure = wb.disjoint ? grid_measure(grid, wb.measure()) : Rational(-1);
    check.closed_form = q_prev * (th_prev - Rational(b - 2) * th);
    check.nested_in_previous = b < 3 || wb.overlap(before) == wb.measure();
    out.wb_checks.push_back(std::move(check));
  }

  const std::int64_t N = to_int64(alpha.q(m) - 1, "q_m");
  out.measure_sum = measure_sum(alpha, N);
  const std::int64_t d_first = to_int64(alpha.q(m - 1), "q_{m-1}");
  out.pairs.resize(static_cast<std::size_t>(samples));
  parallel_for(static_cast<std::size_t>(samples), jobs, [&](std::size_t s) {
    PairSample& p = out.pairs[s];
    p.x = sample_in(out.X, seed, 2 * s);
    p.y = sample_in(out.Y, seed, 2 * s + 1);
    GridInt gx = grid.floor_index(p.x);
    GridInt gy = grid.floor_index(p.y);
    p.block_count_x = count_depth_hits(alpha, grid, gx, d_first, N);
    p.block_count_y = count_depth_hits(alpha, grid, gy, d_first, N);
    p.count_x = count_hits(alpha, grid, gx, 1, N);
    p.count_y = count_hits(alpha, grid, gy, 1, N);
    p.f_x = Rational(BigInt(static_cast<long>(p.count_x))) / out.measure_sum;
    p.f_y = Rational(BigInt(static_cast<long>(p.count_y))) / out.measure_sum;
    p.ok = out.X.contains(p.x) && out.Y.contains(p.y) && p.block_count_x >= out.rho_am &&
           p.block_count_y <= out.sigma_am - 1 && p.f_x - p.f_y >= out.D;
  });
  out.min_gap = out.pairs.front().f_x - out.pairs.front().f_y;
  for (const auto& p : out.pairs) out.min_gap = std::min(out.min_gap, Rational(p.f_x - p.f_y));
  return out;
}

Alpha engineered_alpha(std::size_t ones, const Rational& C, const BigInt& min_large, const BigInt& tail) {
  if (ones < 1) throw ConfigError("engineered alpha needs at least one leading 1");
  BigInt big = ceil_of(C * Rational(BigInt(static_cast<long>(ones)))) + 1;
  if (big < min_large) big = min_large;
  std::vector<BigInt> prefix(ones, BigInt(1));
  prefix.push_back(big);
  return Alpha::from_prefix(std::move(prefix), tail);
}

OscillationReport oscillation_demo(const Alpha& alpha, const ThmBConfig& first, const ThmBConfig& second,
                                   std::uint64_t seed) {
  validate(alpha, first);
  validate(alpha, second);
  if (!(first.m < second.m)) throw ConfigError("oscillation: the first large element must come first");
  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  auto rho_am = exact_product(first.rho, alpha.a(first.m), "rho");
  auto sigma_am = exact_product(second.sigma, alpha.a(second.m), "sigma");
  IntervalSet x1 = to_interval_set(grid, w_pieces(arcs, alpha, first.m, rho_am));
  IntervalSet y2 = to_interval_set(grid, w_pieces(arcs, alpha, second.m, 1))
                       .subtract(to_interval_set(grid, w_pieces(arcs, alpha, second.m, sigma_am)));
  IntervalSet both = x1.intersect(y2);
  if (both.empty()) throw DomainError("oscillation: X_{m1} and Y_{m2} do not meet");
  OscillationReport out;
  out.m1 = first.m;
  out.m2 = second.m;
  out.x = sample_in(both, seed, 0);
  GridInt gx = grid.floor_index(out.x);
  out.f_m1 = f_value(alpha, grid, gx, first.m, measure_sum(alpha, to_int64(alpha.q(first.m) - 1, "q_m")));
  out.f_m2 = f_value(alpha, grid, gx, second.m, measure_sum(alpha, to_int64(alpha.q(second.m) - 1, "q_m")));
  out.D = std::min(gap_bound(first), gap_bound(second));
  out.ok = out.f_m1 - out.f_m2 >= out.D / 2;
  return out;
}

// -- Monte Carlo over α ---------------------------------------------------------------------

WnEstimate monte_carlo_Wn(std::int64_t n, std::int64_t samples, std::uint64_t seed, unsigned jobs) {
  if (n < 10) throw ConfigError("mc-wn: n must be >= 10");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  const BigInt threshold(static_cast<long>(std::floor(10.0 * static_cast<double>(n) * std::log(static_cast<double>(n)))));
  std::vector<int> outcome(static_cast<std::size_t>(samples));  // -1 skipped, 0 miss, 1 hit
  parallel_for(outcome.size(), jobs, [&](std::size_t s) {
    auto cf = sample_cf_prefix(seed, s, static_cast<std::size_t>(n));
    if (!cf) {
      outcome[s] = -1;
      return;
    }
    BigInt total(0);
    for (const auto& a : cf->elements) total += a;
    outcome[s] = total <= threshold ? 1 : 0;
  });
  WnEstimate out;
  out.n = n;
  out.samples = samples;
  for (int o : outcome) {
    if (o < 0) ++out.skipped;
    if (o > 0) ++out.hits;
  }
  std::int64_t accepted = samples - out.skipped;
  out.precision_ok = out.skipped * 100 <= samples;
  if (accepted > 0) {
    out.estimate = make_rational(BigInt(static_cast<long>(out.hits)), BigInt(static_cast<long>(accepted)));
    double p = to_double(out.estimate);
    out.sigma = std::sqrt(p * (1 - p) / static_cast<double>(accepted));
    out.half_width_99 = 2.5758293035489 * out.sigma;
  }
  return out;
}

BigTimeStats find_large_element(std::uint64_t seed, const Rational& C, std::int64_t n_max, std::int64_t samples,
                                unsigned jobs) {
  if (C < 1) throw ConfigError("mc-bigtime: C must be >= 1");
  if (n_max < 2 || n_max > 200) throw ConfigError("mc-bigtime: n_max must lie in [2, 200]");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  std::vector<std::int64_t> first(static_cast<std::size_t>(samples), 0);  // -1 skipped, 0 none
  parallel_for(first.size(), jobs, [&](std::size_t s) {
    auto cf = sample_cf_prefix(seed, s, static_cast<std::size_t>(n_max));
    if (!cf) {
      first[s] = -1;
      return;
    }
    BigInt before = cf->elements[0];
    for (std::size_t m = 2; m <= cf->elements.size(); ++m) {
      if (Rational(cf->elements[m - 1]) > C * Rational(before)) {
        first[s] = static_cast<std::int64_t>(m);
        return;
      }
      before += cf->elements[m - 1];
    }
  });
  BigTimeStats out;
  out.C = C;
  out.n_max = n_max;
  out.samples = samples;
  for (std::int64_t f : first) {
    if (f < 0) {
      ++out.skipped;
    } else if (f > 0) {
      ++out.with_witness;
      ++out.first_m[f];
    }
  }
  std::int64_t accepted = samples - out.skipped;
  if (accepted > 0) {
    out.fraction = make_rational(BigInt(static_cast<long>(out.with_witness)), BigInt(static_cast<long>(accepted)));
  }
  return out;
}

GrowthTable sum_ai_growth(std::uint64_t seed, std::span<const std::int64_t> checkpoints, std::int64_t samples,
                          unsigned jobs) {
  if (checkpoints.empty()) throw ConfigError("growth: no checkpoints");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    if (checkpoints[c] < 2 || (c > 0 && checkpoints[c] <= checkpoints[c - 1])) {
      throw ConfigError("growth: checkpoints must be >= 2 and strictly increasing");
    }
  }
  const std::int64_t n_max = checkpoints.back();
  std::vector<std::optional<std::vector<BigInt>>> sums(static_cast<std::size_t>(samples));
  parallel_for(sums.size(), jobs, [&](std::size_t s) {
    auto cf = sample_cf_prefix(seed, s, static_cast<std::size_t>(n_max));
    if (!cf) return;
    std::vector<BigInt> at;
    BigInt total(0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < cf->elements.size() && next < checkpoints.size(); ++i) {
      total += cf->elements[i];
      if (static_cast<std::int64_t>(i + 1) == checkpoints[next]) {
        at.push_back(total);
        ++next;
      }
    }
    sums[s] = std::move(at);
  });
  GrowthTable out;
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    GrowthRow row;
    row.n = checkpoints[c];
    double n = static_cast<double>(row.n);
    BigInt threshold(static_cast<long>(std::floor(n * std::pow(std::log(n), 3))));
    bool first = true;
    for (const auto& s : sums) {
      if (!s) continue;
      const BigInt& v = (*s)[c];
      ++row.samples;
      if (v > threshold) ++row.exceeding;
      if (first || v < row.min_sum) row.min_sum = v;
      if (first || v > row.max_sum) row.max_sum = v;
      first = false;
      if (c > 0 && v < (*s)[c - 1]) out.monotone = false;
    }
    if (row.samples > 0) {
      row.fraction = make_rational(BigInt(static_cast<long>(row.exceeding)), BigInt(static_cast<long>(row.samples)));
    }
    out.rows.push_back(std::move(row));
  }
  for (const auto& s : sums) {
    if (!s) ++out.skipped;
  }
  return out;
}

}  // namespace sturmian
