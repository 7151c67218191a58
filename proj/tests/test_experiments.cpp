#include <doctest.h>

#include <cmath>

#include "sturmian/experiments.hpp"

using namespace sturmian;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("h integrals") {
  Alpha golden = make_alpha("preset:golden-40");
  HStat h4 = h_integral(golden, 4);
  CHECK(h4.integral == Rational(BigInt("24157831930352"), BigInt("33116048666831")));
  CHECK(h4.integral == h4.closed_form);
  CHECK(h4.support_checked);
  CHECK(h4.support_disjoint);
  CHECK(h4.support_measure == h4.integral);
  CHECK(h4.ok());
  for (std::size_t i = 1; i < 30; ++i) CHECK(h_integral(golden, i).ok());
}

TEST_CASE("h pair integrals") {
  Alpha golden = make_alpha("preset:golden-40");
  PairReport far = h_pair_integral(golden, 3, 10);
  CHECK(!far.bounds.vacuous);
  CHECK(far.ok());
  CHECK(far.decay_ok);
  PairReport near = h_pair_integral(golden, 5, 6);
  CHECK(near.bounds.vacuous);

  auto sweep = h_pair_sweep(make_alpha("preset:silver-14"), 2, 1 << 16);
  REQUIRE(!sweep.empty());
  for (const auto& p : sweep) {
    CAPTURE(p.i);
    CAPTURE(p.j);
    CHECK(p.ok());
    CHECK(p.j >= p.i + 2);
  }
}

TEST_CASE("Kesten counting") {
  Alpha golden = make_alpha("preset:golden-40");
  KestenReport k = kesten_count(golden, CircleInterval::from_endpoints(0, Rational(1, 2)), 4, 1);
  CHECK(k.count == 1);
  CHECK(k.size == 3);
  CHECK(k.expected == Rational(3, 2));
  CHECK(k.bound_ok);

  KestenReport full = kesten_count(golden, CircleInterval::full(), 6, 1);
  CHECK(full.count == full.size);
  CHECK(full.bound_ok);
  KestenReport none = kesten_count(golden, CircleInterval::from_endpoints(Rational(1, 3), Rational(1, 3)), 6, 1);
  CHECK(none.count == 0);
  CHECK(none.bound_ok);
}

TEST_CASE("quasi-independence") {
  Alpha golden = make_alpha("preset:golden-40");
  QuasiReport q = quasi_independence_check(golden, 3, 8, 1);
  CHECK(q.bounds.ok());
  CHECK(q.monotone_ok);
  CHECK(q.intersection <= q.lambda_k);

  Alpha silver = make_alpha("preset:silver-20");
  for (std::int64_t k = 2; k < 12; ++k) {
    QuasiReport r = quasi_independence_check(silver, k, 6, 1);
    CAPTURE(k);
    CHECK(r.bounds.ok());
  }
  QuasiUnionReport u = quasi_union_check(silver, 2, 1, 6, 1);
  CHECK(u.bounds.ok());
}

TEST_CASE("sampling points") {
  CHECK(sample_unit(1, 2) == sample_unit(1, 2));
  CHECK(sample_unit(1, 2) != sample_unit(1, 3));
  IntervalSet set = IntervalSet::from_arcs(std::vector<CircleInterval>{
      CircleInterval::from_endpoints(Rational(1, 10), Rational(2, 10)),
      CircleInterval::from_endpoints(Rational(7, 10), Rational(3, 4))});
  for (std::uint64_t s = 0; s < 100; ++s) CHECK(set.contains(sample_in(set, 5, s)));
}

TEST_CASE("ratio at a checkpoint") {
  Alpha golden = make_alpha("preset:golden-40");
  std::vector<std::int64_t> checkpoints{golden.q64(15) - 1, golden.q64(30) - 1};
  auto points = theorem_a_ratio(golden, CirclePoint(Rational(1, 3)), checkpoints);
  REQUIRE(points.size() == 2);
  CHECK(points[1].m == std::optional<std::size_t>(30));
  REQUIRE(points[1].ratio);
  CHECK(points[1].ratio_value > 0.7);
  CHECK(points[1].ratio_value < 1.3);
  CHECK(points[1].count_bounds_ok.value_or(false));
  CHECK(points[1].measure_bounds_ok.value_or(false));

  auto one = theorem_a_experiment(golden, checkpoints, 8, 3, 1);
  auto many = theorem_a_experiment(golden, checkpoints, 8, 3, 4);
  CHECK(one.median_abs_error == many.median_abs_error);
  CHECK(one.samples_all_bounds_ok == many.samples_all_bounds_ok);
}

TEST_CASE("configuration checks for the large-element experiment") {
  Alpha e = engineered_alpha(10, Rational(1000));
  CHECK(e.a(11) == 100000);
  ThmBConfig ok{11, Rational(1, 5), Rational(1, 10), Rational(1000)};
  CHECK_NOTHROW(validate(e, ok));
  CHECK_THROWS_AS(validate(e, ThmBConfig{11, Rational(1, 10), Rational(1, 5), Rational(1000)}), ConfigError);
  CHECK_THROWS_AS(validate(e, ThmBConfig{5, Rational(1, 5), Rational(1, 10), Rational(1000)}), ConfigError);
  CHECK_THROWS_AS(validate(e, ThmBConfig{11, Rational(1, 5), Rational(1, 10), Rational(1000000)}), ConfigError);
  CHECK_THROWS_AS(validate(e, ThmBConfig{40, Rational(1, 5), Rational(1, 10), Rational(10)}), ConfigError);
}

TEST_CASE("large-element experiment") {
  Alpha e = engineered_alpha(6, Rational(100));
  ThmBConfig cfg{7, Rational(1, 5), Rational(1, 10), Rational(100)};
  ThmBReport r = theorem_b_experiment(e, cfg, 12, 1, 2);
  CHECK(r.measures_ok());
  CHECK(r.closed_forms_ok());
  CHECK(r.pairs_ok());
  CHECK(r.D > 0);
  CHECK(r.pairs.size() == 12);
  for (const auto& w : r.wb_checks) CHECK(w.match());
}

TEST_CASE("oscillation between two large elements") {
  Alpha a = Alpha::from_prefix(ints({1, 1, 1, 1, 1, 200, 1, 1, 1, 5000}));
  ThmBConfig first{6, Rational(6, 25), Rational(13, 200), Rational(20)};
  ThmBConfig second{10, Rational(6, 25), Rational(13, 200), Rational(20)};
  OscillationReport r = oscillation_demo(a, first, second, 1);
  CHECK(r.ok);
  CHECK(r.f_m1 - r.f_m2 >= r.D / 2);
}

TEST_CASE("Monte Carlo over alpha") {
  WnEstimate w = monte_carlo_Wn(10, 2000, 1, 1);
  CHECK(w.precision_ok);
  CHECK(w.lower_3sigma() > 0.1);
  WnEstimate w4 = monte_carlo_Wn(10, 2000, 1, 4);
  CHECK(w4.estimate == w.estimate);
  CHECK(w4.hits == w.hits);

  BigTimeStats easy = find_large_element(1, Rational(1), 50, 1000, 2);
  CHECK(to_double(easy.fraction) > 0.5);
  BigTimeStats hard = find_large_element(1, Rational(1000000000), 50, 1000, 2);
  CHECK(to_double(hard.fraction) < 0.01);
  for (const auto& [m, count] : easy.first_m) CHECK(m >= 2);

  std::vector<std::int64_t> ns{10, 100, 400};
  GrowthTable g = sum_ai_growth(1, ns, 300, 2);
  REQUIRE(g.rows.size() == 3);
  for (const auto& row : g.rows) CHECK(row.min_sum >= row.n);
}
