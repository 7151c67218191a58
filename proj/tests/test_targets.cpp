#include <doctest.h>

#include "sturmian/targets.hpp"

using namespace sturmian;

namespace {

Rational golden_frac(const char* num) { return Rational(BigInt(num), BigInt("165580243334155")); }

void check_rst(const Alpha& a, std::int64_t depth, long r, long s, std::int64_t t) {
  CAPTURE(depth);
  TargetDecomposition d = rst(a, depth);
  CHECK(d.r == r);
  CHECK(d.s == s);
  CHECK(d.t == t);
  CHECK(d.s + d.t * d.r <= depth);
  CHECK(d.s + (d.t + 1) * d.r > depth);
}

}  // namespace

TEST_CASE("decomposition of depths") {
  Alpha golden = make_alpha("preset:golden-40");
  check_rst(golden, 6, 5, 3, 0);
  check_rst(golden, 8, 8, 5, 0);
  check_rst(golden, 12, 8, 5, 0);
  check_rst(golden, 13, 13, 8, 0);
  check_rst(make_alpha("cf:2,2"), 2, 2, 1, 0);
  check_rst(make_alpha("cf:1,4,2"), 9, 5, 1, 1);
}

TEST_CASE("closed form at a depth") {
  Alpha golden = make_alpha("preset:golden-40");
  CircleInterval ru = target_RU(golden, 6);
  CHECK(ru.length() == golden.theta(3) + golden.theta(4));
  CHECK(ru.contains(0));
  CHECK(measure_at_depth(golden, 6) == golden.theta(3) + golden.theta(4));
  CHECK(V_at_depth(golden, 1) == CircleInterval::full());
}

TEST_CASE("undetermined arcs by step") {
  Alpha golden = make_alpha("preset:golden-40");
  CHECK(V_interval(golden, 6) == oracle_V(golden, 6));
  CHECK(V_interval(golden, 6).left() == golden_frac("102334218245986"));
  CHECK(measure_V(golden, 6) == golden.theta(3));
  CHECK(measure_V(golden, 0) == golden.value());

  Alpha ten = make_alpha("cf:1,1,1,1,1,1,1,1,1,1");
  CHECK_NOTHROW(V_interval(ten, 87));
  CHECK_THROWS_AS(V_interval(ten, 88), HorizonError);
  CHECK_THROWS_AS(measure_V(ten, 89), HorizonError);
}

TEST_CASE("time blocks") {
  Alpha golden = make_alpha("preset:golden-40");
  JIndex first = j_block(golden, 4, 1);
  CHECK(first.begin == 5);
  CHECK(first.end == 8);
  CHECK(first.in_collection);
  JIndex second = j_block(golden, 4, 2);
  CHECK(second.begin == 8);
  CHECK(second.end == 13);
  CHECK(!second.in_collection);
  CHECK(j_two(golden, 4) == second);

  auto blocks = j_intervals(golden, 13);
  REQUIRE(!blocks.empty());
  std::int64_t collection_size = 0;
  for (const auto& b : blocks) {
    CHECK(b.end <= 13);
    if (b.in_collection) collection_size += b.size();
  }
  CHECK(collection_size <= 13);

  Alpha mixed = make_alpha("cf:1,3");
  auto m = j_intervals(mixed, 3);
  REQUIRE(m.size() >= 1);
  CHECK(m.front().i == 1);
  CHECK(m.front().begin == 1);
  CHECK(m.front().end == 2);

  CHECK_THROWS_AS(j_block(golden, 0, 1), DomainError);
  CHECK_THROWS_AS(j_block(golden, 40, 1), HorizonError);
}

TEST_CASE("frozen sums and counts") {
  Alpha golden = make_alpha("preset:golden-40");
  CHECK(measure_sum(golden, 88) == golden_frac("847898846029982"));
  CHECK(measure_sum(golden, 80) == Rational(BigInt("12652226834886"), BigInt("2547388358987")));
  CHECK(measure_sum(golden, 0) == 0);
  CountReport r = count_undetermined(golden, CirclePoint(Rational(1, 3)), 80);
  CHECK(r.count == 5);
  CHECK(r.measure_sum == measure_sum(golden, 80));
  CHECK(count_undetermined(golden, CirclePoint(Rational(1, 3)), 0).count == 0);

  Alpha two = make_alpha("cf:2,2");
  CHECK(two.value() == Rational(2000001, 5000002));
  CHECK(measure_sum(two, 4) == Rational(3000002, 2500001));
}

TEST_CASE("closed form agrees with the brute force on random prefixes") {
  for (std::uint64_t stream = 0; stream < 12; ++stream) {
    auto a = sample_alpha(99, 6, stream);
    REQUIRE(a);
    std::int64_t last = std::min<std::int64_t>(a->horizon_j64() - 1, 400);
    OracleSweep sweep(*a);
    Rational running = 0;
    for (std::int64_t j = 0; j <= last; ++j) {
      CAPTURE(a->spec());
      CAPTURE(j);
      CircleInterval v = sweep.undetermined();
      CHECK(V_interval(*a, j) == v);
      CHECK(measure_V(*a, j) == v.length());
      if (j >= 1) running += v.length();
      if (j % 37 == 0) CHECK(measure_sum(*a, j) == running);
      if (j < last) sweep.advance();
    }
  }
}

TEST_CASE("sums are monotone and counts bounded by steps") {
  Alpha a = make_alpha("cf:3,1,4,1,5,9,2,6");
  Rational prev = 0;
  std::int64_t prev_count = 0;
  CirclePoint x(Rational(2, 7));
  for (std::int64_t N = 1; N <= 300; N += 7) {
    Rational s = measure_sum(a, N);
    CHECK(s > prev);
    prev = s;
    auto c = count_undetermined(a, x, N);
    CHECK(c.count >= prev_count);
    CHECK(c.count <= N);
    prev_count = c.count;
  }
}

TEST_CASE("depth nesting along convergent shifts") {
  Alpha a = make_alpha("preset:silver-12");
  for (std::size_t k = 1; k + 1 < a.horizon_k(); ++k) {
    std::int64_t qk = a.q64(k);
    std::int64_t qk1 = a.q64(k + 1);
    for (std::int64_t d = qk; d <= qk1 - qk && d + qk <= a.horizon_j64() && d < 3000; ++d) {
      CAPTURE(d);
      IntervalSet inner = V_at_depth(a, d + qk).to_set();
      CHECK(inner.is_subset_of(V_at_depth(a, d).to_set()));
    }
  }
}

TEST_CASE("per-step rows") {
  Alpha golden = make_alpha("preset:golden-20");
  CirclePoint x(Rational(1, 3));
  auto rows = per_step_rows(golden, 1, 200, x);
  REQUIRE(rows.size() == 200);
  std::int64_t hits = 0;
  Rational total = 0;
  for (const auto& row : rows) {
    CHECK(row.lambda == measure_V(golden, row.j));
    REQUIRE(row.chi);
    CHECK(*row.chi == V_interval(golden, row.j).contains(x.value()));
    hits += *row.chi ? 1 : 0;
    total += row.lambda;
  }
  CHECK(hits == count_undetermined(golden, x, 200).count);
  CHECK(total == measure_sum(golden, 200));
  CHECK(!per_step_rows(golden, 1, 3, std::nullopt).front().chi);
}
