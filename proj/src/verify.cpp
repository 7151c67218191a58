#include "sturmian/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sturmian/experiments.hpp"
#include "sturmian/grid.hpp"
#include "sturmian/parallel.hpp"
#include "sturmian/rotation.hpp"
#include "sturmian/targets.hpp"

namespace sturmian {

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  if (failures == 0) first_failure = what;
  ++failures;
}

namespace {

// Suite streams keep draws of different suites independent.
enum Stream : std::uint64_t { kesten_stream = 11, quasi_stream = 12, symbolic_stream = 13 };

SuiteResult named(std::string name) {
  SuiteResult out;
  out.name = std::move(name);
  return out;
}

// Largest step index for the oracle on this alpha.
std::int64_t oracle_limit(const Alpha& alpha) { return alpha.horizon_j64() - (alpha.tail() ? 1 : 2); }

GridArc arc_at(const DepthArcs& arcs, std::int64_t depth) {
  if (depth == 1) return {0, arcs.grid().modulus()};
  return arcs.at_depth(depth);
}

bool grid_contains(const OrbitGrid& grid, const GridArc& outer, const GridArc& inner) {
  if (outer.length == grid.modulus() || inner.length == 0) return true;
  GridInt off = grid.reduce(inner.start - outer.start);
  return off + inner.length <= outer.length;
}

std::string block_name(const JIndex& block) {
  return "J^" + std::to_string(block.i) + "_" + std::to_string(block.b);
}

std::vector<JIndex> all_blocks(const Alpha& alpha) { return j_intervals(alpha, alpha.horizon_j64()); }

// min over 1 <= t < size of ||tα||, in grid units.
GridInt min_return_gap(const Alpha& alpha, const OrbitGrid& grid, std::int64_t size) {
  std::size_t r = 0;
  while (r + 1 <= alpha.horizon_k() && alpha.q(r + 1) <= size - 1) ++r;
  return to_grid_int(floor_of(alpha.theta(r) * Rational(to_bigint(grid.modulus()))));
}

Rational unit_draw(std::mt19937_64& rng) {
  BigInt den(1);
  den <<= 64;
  std::uint64_t bits = rng();
  BigInt num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof bits, 0, 0, &bits);
  return make_rational(num, den);
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

}  // namespace

SuiteResult suite_oracle_equivalence(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("oracle_equivalence");
  std::int64_t last = std::min(opt.oracle_max, oracle_limit(alpha));
  OracleSweep sweep(alpha);
  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  for (std::int64_t j = 0; j <= last; ++j, sweep.advance()) {
    CircleInterval oracle = sweep.undetermined();
    out.expect(V_interval(alpha, j) == oracle, "V_interval differs from the oracle at j = " + std::to_string(j));
    out.expect(grid.to_interval(arcs.at_step(j)) == oracle,
               "grid arc differs from the oracle at j = " + std::to_string(j));
  }
  out.detail = "j = 0.." + std::to_string(last);
  return out;
}

SuiteResult suite_atoms(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("atoms");
  std::int64_t last = std::min(opt.oracle_max, oracle_limit(alpha));
  OracleSweep sweep(alpha);
  for (std::int64_t j = 0; j <= last; ++j, sweep.advance()) {
    out.expect(static_cast<std::int64_t>(sweep.atom_count()) == j + 2,
               "atom count at j = " + std::to_string(j) + " is " + std::to_string(sweep.atom_count()));
  }
  std::int64_t words = std::min(opt.word_max, alpha.horizon_j64() - 2);
  for (std::int64_t j = 0; j <= words; ++j) {
    std::string at = " at j = " + std::to_string(j);
    AtomPartition part = atoms(alpha, j);
    AtomPartition next = atoms(alpha, j + 1);
    Rational total(0);
    std::set<std::string> codings;
    for (const auto& atom : part.atoms) {
      total += atom.interval.length();
      codings.insert(atom.coding.bits);
    }
    out.expect(static_cast<std::int64_t>(part.atoms.size()) == j + 2, "atoms() size" + at);
    out.expect(total == 1, "atom lengths do not sum to 1" + at);
    out.expect(codings.size() == part.atoms.size(), "repeated coding" + at);
    std::map<std::string, int> extensions;
    for (const auto& atom : next.atoms) ++extensions[atom.coding.bits.substr(0, static_cast<std::size_t>(j) + 1)];
    std::vector<std::string> special;
    for (const auto& [word, count] : extensions) {
      if (count == 2) special.push_back(word);
    }
    out.expect(special.size() == 1, "expected exactly one right-special word" + at);
    if (special.size() == 1) {
      out.expect(special.front() == right_special_word(alpha, j).bits, "right-special word mismatch" + at);
      auto it = std::find_if(part.atoms.begin(), part.atoms.end(),
                             [&](const Atom& a) { return a.coding.bits == special.front(); });
      out.expect(it != part.atoms.end() && it->interval == oracle_V(alpha, j), "special atom is not V" + at);
    }
  }
  out.detail = "counts for j <= " + std::to_string(last) + ", words for j <= " + std::to_string(words);
  return out;
}

SuiteResult suite_theta(const Alpha& alpha, const VerifyOptions&) {
  SuiteResult out = named("theta");
  const std::size_t n = alpha.horizon_k();
  Rational previous(1);  // θ_{-1}
  for (std::size_t k = 0; k + 1 <= n; ++k) {
    std::string at = " at k = " + std::to_string(k);
    const Rational& th = alpha.theta(k);
    const Rational& next = alpha.theta(k + 1);
    Rational qk(alpha.q(k));
    Rational qk1(alpha.q(k + 1));
    out.expect(qk1 * th + qk * next == 1, "q_{k+1} θ_k + q_k θ_{k+1} != 1" + at);
    out.expect(next == previous - Rational(alpha.a(k + 1)) * th, "θ recursion" + at);
    if (!alpha.tail() && k + 1 == n) {
      out.expect(th == 1 / qk1, "last θ_k != 1/q_n for an exact rational" + at);
    } else {
      out.expect(1 / (qk + qk1) < th && th < 1 / qk1, "θ_k outside (1/(q_k+q_{k+1}), 1/q_{k+1})" + at);
    }
    if (k >= 1) {
      out.expect(nearest_distance(alpha, alpha.q64(k)) == th, "<<q_k α>> != θ_k" + at);
      Rational f = frac(qk * alpha.value());
      out.expect((f < Rational(1, 2)) == (k % 2 == 0), "side of {q_k α}" + at);
    }
    const Convergent& c = alpha.convergents()[k + 1];
    out.expect(gcd(c.p, c.q) == 1, "convergent not reduced" + at);
    previous = th;
  }
  out.expect(value_of_cf(alpha.cf()) == Rational(alpha.p(n), alpha.q(n)), "p_n/q_n != [0; a_1..a_n]");
  return out;
}

SuiteResult suite_disjointness(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("disjointness");
  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  std::int64_t enumerated = 0;
  auto blocks = all_blocks(alpha);
  for (const auto& block : blocks) {
    std::string at = " in " + block_name(block);
    GridArc first = arc_at(arcs, block.begin);
    GridArc last = arc_at(arcs, block.end - 1);
    out.expect(first.length == last.length, "arc length not constant" + at);
    if (block.size() >= 2) {
      out.expect(first.length <= min_return_gap(alpha, grid, block.size()),
                 "arc longer than the shortest return" + at);
    }
    if (block.size() <= opt.enumerate_cap) {
      auto list = block_arcs(arcs, block);
      GridPieces pieces = make_pieces(grid.modulus(), list);
      GridInt total = 0;
      for (const auto& arc : list) total += arc.length;
      out.expect(pieces.disjoint && pieces.measure() == total, "arcs overlap" + at);
      ++enumerated;
    }
  }
  out.detail = std::to_string(blocks.size()) + " blocks by return gaps, " + std::to_string(enumerated) +
               " also arc by arc";
  return out;
}

SuiteResult suite_nesting(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("nesting");
  OrbitGrid grid(alpha);
  DepthArcs arcs(alpha, grid);
  std::vector<std::int64_t> cuts;
  for (const auto& block : all_blocks(alpha)) {
    if (block.in_collection) cuts.push_back(block.begin);
  }
  std::sort(cuts.begin(), cuts.end());
  const std::int64_t max_depth = alpha.horizon_j64();
  std::int64_t depths = 0;
  std::int64_t direct = 0;
  for (std::size_t k = 0; k + 1 <= alpha.horizon_k(); ++k) {
    std::int64_t shift = alpha.q64(k);
    std::int64_t lo = std::max<std::int64_t>(shift, 1);
    std::int64_t hi = std::min(alpha.q64(k + 1) - shift, max_depth - shift);
    if (lo > hi) continue;
    // Both arcs move by -α per unit depth inside a block, so one check per
    // segment on which neither depth crosses a block boundary covers it.
    std::vector<std::int64_t> seg{lo, hi + 1};
    for (std::int64_t c : cuts) {
      if (c > lo && c <= hi) seg.push_back(c);
      if (c - shift > lo && c - shift <= hi) seg.push_back(c - shift);
    }
    std::sort(seg.begin(), seg.end());
    seg.erase(std::unique(seg.begin(), seg.end()), seg.end());
    for (std::size_t s = 0; s + 1 < seg.size(); ++s) {
      for (std::int64_t d : {seg[s], seg[s + 1] - 1}) {
        out.expect(grid_contains(grid, arc_at(arcs, d), arc_at(arcs, d + shift)),
                   "V at depth " + std::to_string(d + shift) + " not inside depth " + std::to_string(d));
      }
    }
    depths += hi - lo + 1;
    for (std::int64_t d = lo; d <= hi && direct < opt.enumerate_cap; ++d, ++direct) {
      out.expect(grid_contains(grid, arc_at(arcs, d), arc_at(arcs, d + shift)),
                 "direct check failed at depth " + std::to_string(d) + ", q_k = " + std::to_string(shift));
    }
  }
  out.detail = std::to_string(depths) + " (depth, q_k) pairs by segments, " + std::to_string(direct) + " directly";
  return out;
}

SuiteResult suite_block_measures(const Alpha& alpha, const VerifyOptions&) {
  SuiteResult out = named("block_measures");
  std::map<std::pair<std::size_t, std::int64_t>, Rational> measure;
  for (const auto& block : all_blocks(alpha)) {
    if (block.i == 0) continue;
    std::string at = " in " + block_name(block);
    TargetDecomposition head = rst(alpha, block.begin);
    TargetDecomposition tail = rst(alpha, block.end - 1);
    out.expect(head.k == tail.k && head.t == tail.t && head.ru == tail.ru, "closed form not constant" + at);
    measure[{block.i, block.b}] = head.measure;
    const Rational& prev_theta = alpha.theta(block.i - 1);
    const Rational& th = alpha.theta(block.i);
    if (block.b == 1) out.expect(head.measure == prev_theta + th, "λ(J^i_1 arcs) != θ_{i-1} + θ_i" + at);
    if (block.b == 2) out.expect(head.measure == prev_theta, "λ(J^i_2 arcs) != θ_{i-1}" + at);
  }
  for (const auto& [key, value] : measure) {
    auto next = measure.find({key.first, key.second + 1});
    if (next == measure.end()) continue;
    out.expect(next->second == value - alpha.theta(key.first),
               "measure step across b != θ_i at i = " + std::to_string(key.first));
  }
  return out;
}

SuiteResult suite_sum_bounds(const Alpha& alpha, const VerifyOptions&) {
  SuiteResult out = named("sum_bounds");
  BigInt elements(0);
  Rational previous(-1);
  for (std::size_t m = 1; m <= alpha.horizon_k(); ++m) {
    elements += alpha.a(m);
    std::string at = " at m = " + std::to_string(m);
    Rational sum = measure_sum(alpha, alpha.q64(m) - 1);
    out.expect(sum < Rational(elements), "sum not below Σ a_i" + at);
    out.expect(2 * sum > Rational(static_cast<long>(m) - 2), "sum not above (m-2)/2" + at);
    out.expect(sum >= previous, "sum not monotone" + at);
    previous = sum;
  }
  return out;
}

SuiteResult suite_h_integrals(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("h_integrals");
  std::int64_t supports = 0;
  for (std::size_t i = 1; j_two(alpha, i); ++i) {
    HStat h = h_integral(alpha, i, opt.h_support_cap);
    out.expect(h.ok(), "h integral check failed at i = " + std::to_string(i));
    if (h.support_checked) ++supports;
  }
  out.detail = std::to_string(out.checks) + " indices, " + std::to_string(supports) + " supports enumerated";
  return out;
}

SuiteResult suite_kesten(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("kesten");
  std::vector<JIndex> blocks;
  for (auto& block : all_blocks(alpha)) {
    if (block.size() <= opt.kesten_block_cap) blocks.push_back(std::move(block));
  }
  if (blocks.empty()) return out;
  std::mt19937_64 rng(substream_seed(opt.seed, kesten_stream));
  for (std::int64_t t = 0; t < opt.kesten_triples; ++t) {
    const JIndex& block = pick(rng, blocks);
    CircleInterval arc = t == 0   ? CircleInterval::full()
                         : t == 1 ? CircleInterval::from_start_length(unit_draw(rng), Rational(0))
                                  : CircleInterval::from_start_length(unit_draw(rng), unit_draw(rng));
    KestenReport r = kesten_count(alpha, arc, block.i, block.b);
    std::string at = " in " + block_name(block) + " for " + arc.to_string();
    out.expect(r.bound_ok, "count " + std::to_string(r.count) + " off by more than 2" + at);
    if (t == 0) out.expect(r.count == r.size, "full circle count != |J|" + at);
    if (t == 1) out.expect(r.count == 0, "empty arc count != 0" + at);
  }
  return out;
}

SuiteResult suite_quasi_independence(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("quasi_independence");
  std::vector<JIndex> blocks;
  for (auto& block : all_blocks(alpha)) {
    if (block.i >= 1 && block.size() >= 64 && block.size() <= opt.quasi_block_cap) blocks.push_back(std::move(block));
  }
  if (blocks.empty()) {
    out.detail = "no block of size 64.." + std::to_string(opt.quasi_block_cap);
    return out;
  }
  std::mt19937_64 rng(substream_seed(opt.seed, quasi_stream));
  std::int64_t vacuous = 0;
  for (std::int64_t d = 0; d < opt.quasi_draws; ++d) {
    const JIndex& block = pick(rng, blocks);
    std::uniform_int_distribution<std::int64_t> kdist(2, std::max<std::int64_t>(2, block.size() / 16));
    std::int64_t k = kdist(rng);
    QuasiReport r = quasi_independence_check(alpha, k, block.i, block.b);
    std::string at = " for k = " + std::to_string(k) + ", " + block_name(block);
    out.expect(r.bounds.ok(), "multiplicative bound" + at);
    out.expect(r.monotone_ok, "intersection exceeds a factor" + at);
    if (r.bounds.vacuous) ++vacuous;
  }
  out.expect(vacuous * 10 <= opt.quasi_draws * 3, "more than 30% of draws vacuous");

  std::int64_t union_vacuous = 0;
  std::int64_t unions = 0;
  for (std::int64_t d = 0; d < opt.quasi_union_draws; ++d) {
    const JIndex& outer = pick(rng, blocks);
    std::vector<const JIndex*> inner;
    for (const auto& block : blocks) {
      if (block.i < outer.i && block.end - 1 < alpha.q(outer.i)) inner.push_back(&block);
    }
    if (inner.empty()) continue;
    const JIndex& in = *pick(rng, inner);
    QuasiUnionReport r = quasi_union_check(alpha, in.i, in.b, outer.i, outer.b);
    out.expect(r.bounds.ok(), "union bound for " + block_name(in) + " against " + block_name(outer));
    if (r.bounds.vacuous) ++union_vacuous;
    ++unions;
  }
  out.vacuous = vacuous + union_vacuous;
  out.detail = std::to_string(opt.quasi_draws) + " draws (" + std::to_string(vacuous) + " vacuous), " +
               std::to_string(unions) + " union draws (" + std::to_string(union_vacuous) + " vacuous)";
  return out;
}

SuiteResult suite_h_pairs(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("h_pairs");
  std::int64_t decay = 0;
  for (const auto& r : h_pair_sweep(alpha, 4, opt.pair_cap)) {
    std::string at = " at (" + std::to_string(r.i) + ", " + std::to_string(r.j) + ")";
    out.expect(r.ok(), "pair bound" + at);
    if (r.bounds.vacuous) ++out.vacuous;
    if (r.decay_ok) ++decay;
  }
  out.detail = std::to_string(out.checks) + " pairs, " + std::to_string(decay) + " within the decay estimate";
  return out;
}

SuiteResult suite_symbolic_count(const Alpha& alpha, const VerifyOptions& opt) {
  SuiteResult out = named("symbolic_count");
  std::int64_t last = std::min(opt.symbolic_max, alpha.horizon_j64() - 2);
  if (last < 1) return out;
  std::vector<std::string> words;
  std::vector<CircleInterval> arcs;
  for (std::int64_t j = 1; j <= last; ++j) {
    words.push_back(right_special_word(alpha, j).bits);
    arcs.push_back(V_interval(alpha, j));
  }
  for (std::int64_t p = 0; p < opt.symbolic_points; ++p) {
    CirclePoint x(sample_unit(opt.seed, symbolic_stream * 1000 + static_cast<std::uint64_t>(p)));
    std::int64_t symbolic = 0;
    std::string bits = code(alpha, x, last + 1).bits;
    for (std::int64_t j = 1; j <= last; ++j) {
      bool special = bits.compare(0, static_cast<std::size_t>(j) + 1, words[static_cast<std::size_t>(j - 1)]) == 0;
      out.expect(special == arcs[static_cast<std::size_t>(j - 1)].contains(x.value()),
                 "membership differs from the symbolic test at j = " + std::to_string(j));
      if (special) ++symbolic;
    }
    out.expect(count_undetermined(alpha, x, last).count == symbolic, "count differs from the symbolic count");
  }
  out.detail = std::to_string(opt.symbolic_points) + " points, j <= " + std::to_string(last);
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const SuiteResult& VerifyReport::suite(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return s;
  }
  throw DomainError("no suite named " + name);
}

VerifyReport verify_alpha(const Alpha& alpha, const VerifyOptions& opt, unsigned jobs) {
  using Suite = SuiteResult (*)(const Alpha&, const VerifyOptions&);
  static constexpr Suite suites[] = {
      suite_oracle_equivalence, suite_atoms,    suite_theta, suite_disjointness,
      suite_nesting,            suite_block_measures, suite_sum_bounds, suite_h_integrals,
      suite_kesten,             suite_quasi_independence, suite_h_pairs, suite_symbolic_count,
  };
  VerifyReport out;
  out.alpha = alpha.spec();
  out.suites.resize(std::size(suites));
  parallel_for(std::size(suites), jobs, [&](std::size_t i) { out.suites[i] = suites[i](alpha, opt); });
  return out;
}

std::vector<Alpha> standard_alpha_set(std::uint64_t seed) {
  std::vector<Alpha> out{make_alpha("preset:golden-40"), make_alpha("preset:silver-30"),
                         make_alpha("preset:cycle123-30")};
  for (std::uint64_t stream = 0; out.size() < 23; ++stream) {
    if (auto alpha = sample_alpha(seed, 12, stream)) out.push_back(std::move(*alpha));
  }
  return out;
}

}  // namespace sturmian
