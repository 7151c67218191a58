#include <doctest.h>

#include <cmath>

#include "sturmian/cf_core.hpp"

using namespace sturmian;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<BigInt> repeat(long value, int count) { return std::vector<BigInt>(count, BigInt(value)); }

// golden-40 proxy value, from tools/oracle.py
const Rational kGolden(BigInt("102334218245986"), BigInt("165580243334155"));

}  // namespace

TEST_CASE("Euclid expansions") {
  CHECK(cf_of_rational(3, 7).elements == ints({2, 3}));
  CHECK(cf_of_rational(1, 2).elements == ints({2}));
  auto fib = repeat(1, 8);
  fib.emplace_back(2);
  CHECK(cf_of_rational(55, 89).elements == fib);
  CHECK(value_of_cf(cf_of_rational(55, 89)) == Rational(55, 89));
  CHECK_THROWS(cf_of_rational(7, 3));
}

TEST_CASE("convergents") {
  auto c = convergents(ContinuedFraction{repeat(1, 5)});
  std::vector<long> q;
  for (const auto& k : c) q.push_back(k.q.get_si());
  CHECK(q == std::vector<long>{1, 1, 2, 3, 5, 8});

  auto small = convergents(ContinuedFraction{ints({2, 3})});
  REQUIRE(small.size() == 3);
  CHECK((small[0].p == 0 && small[0].q == 1));
  CHECK((small[1].p == 1 && small[1].q == 2));
  CHECK((small[2].p == 3 && small[2].q == 7));

  auto ten = convergents(ContinuedFraction{repeat(1, 10)});
  CHECK(ten[10].q == 89);
  CHECK(ten[10].q == convergents(cf_of_rational(55, 89)).back().q);
}

TEST_CASE("proxy alpha and horizons") {
  Alpha ten = Alpha::from_prefix(repeat(1, 10));
  CHECK(ten.horizon_j() == 88);
  CHECK(ten.horizon_k() == 10);
  CHECK(ten.tail() == default_tail());

  Alpha r = Alpha::from_rational(Rational(3, 7));
  CHECK(r.horizon_j() == 6);
  CHECK(!r.tail());
  CHECK(r.value() == Rational(3, 7));

  CHECK(Alpha::from_prefix(ints({2}), BigInt(2)).value() == Rational(2, 5));
  CHECK(make_alpha("preset:golden-40").value() == kGolden);
  CHECK(make_alpha("cf:1,2;tail=5").value() == value_of_cf(ContinuedFraction{ints({1, 2, 5})}));
  CHECK_THROWS_AS(Alpha::from_prefix({}), DomainError);
  CHECK_THROWS_AS(make_alpha("cf:1,0"), ConfigError);
  CHECK_THROWS_AS(make_alpha("rat:7/3"), ConfigError);
  CHECK_THROWS_AS(make_alpha("preset:unknown-3"), ConfigError);
  CHECK_THROWS_AS(make_alpha("nonsense"), ConfigError);
}

TEST_CASE("spec strings round-trip") {
  for (const char* spec : {"preset:golden-40", "cf:3,1,4,1,5", "rat:3/7", "cf:2,2;tail=9"}) {
    Alpha a = make_alpha(spec);
    Alpha b = make_alpha(a.spec());
    CHECK(a.value() == b.value());
    CHECK(a.spec() == b.spec());
  }
}

TEST_CASE("theta") {
  Alpha golden = make_alpha("preset:golden-40");
  CHECK(theta(golden, 4) == Rational(BigInt("2986072245493"), BigInt("33116048666831")));
  CHECK(theta(golden, 3) == Rational(BigInt("24157831930352"), BigInt("165580243334155")));
  CHECK(to_double(theta(golden, 4)) == doctest::Approx(0.090170).epsilon(1e-5));
  CHECK(to_double(theta(golden, 3)) == doctest::Approx(0.145898).epsilon(1e-5));
  Alpha two_fifths = make_alpha("rat:2/5");
  CHECK(theta(two_fifths, 0) == Rational(2, 5));
  CHECK_THROWS_AS(theta(golden, 41), HorizonError);
}

TEST_CASE("nearest distance") {
  Alpha golden = make_alpha("preset:golden-40");
  CHECK(nearest_distance(golden, 0) == 0);
  CHECK(nearest_distance(golden, 6) == Rational(BigInt("48315663860704"), BigInt("165580243334155")));
  for (std::size_t k = 1; k <= 40; ++k) CHECK(nearest_distance(golden, golden.q64(k)) == golden.theta(k));
  CHECK_THROWS_AS(nearest_distance(golden, golden.horizon_j64() + 2), HorizonError);
}

TEST_CASE("theta identities on assorted prefixes") {
  for (const char* spec : {"preset:golden-30", "preset:silver-20", "cf:7,1,12,3,1,1,40,2", "cf:1,300,2,1,9"}) {
    Alpha a = make_alpha(spec);
    for (std::size_t k = 0; k < a.horizon_k(); ++k) {
      Rational qk(a.q(k));
      Rational qk1(a.q(k + 1));
      CHECK(qk1 * a.theta(k) + qk * a.theta(k + 1) == 1);
      CHECK(a.theta(k + 1) < a.theta(k));
      CHECK(a.theta(k) < 1 / qk1);
    }
  }
}

TEST_CASE("sampler determinism and validity") {
  auto a = sample_alpha(1, 10);
  auto b = sample_alpha(1, 10);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->cf() == b->cf());
  CHECK(a->cf().size() == 10);
  CHECK(sample_alpha(1, 10, 1)->cf() != a->cf());
  for (std::uint64_t s = 0; s < 50; ++s) {
    if (auto c = sample_cf_prefix(7, s, 12)) {
      for (const auto& e : c->elements) CHECK(e >= 1);
    }
  }
  CHECK(substream_seed(1, 0) != substream_seed(1, 1));
  CHECK(substream_seed(1, 0) != substream_seed(2, 0));
  CHECK(random_bits(3, 4, 100) == random_bits(3, 4, 100));
  CHECK(random_bits(3, 4, 100) < (BigInt(1) << 100));
}

TEST_CASE("sampler element frequencies") {
  // a_1 = 1 iff α > 1/2, probability 1/2 under λ; a_10 follows Gauss–Kuzmin
  // closely, P(a = 1) = log2(4/3).
  const int samples = 10000;
  int first_one = 0;
  int tenth_one = 0;
  int accepted = 0;
  for (int s = 0; s < samples; ++s) {
    auto c = sample_cf_prefix(2024, static_cast<std::uint64_t>(s), 10);
    if (!c) continue;
    ++accepted;
    if (c->elements[0] == 1) ++first_one;
    if (c->elements[9] == 1) ++tenth_one;
  }
  CHECK(accepted >= samples * 99 / 100);
  auto within = [&](int hits, double p) {
    double sigma = std::sqrt(p * (1 - p) / accepted);
    return std::abs(static_cast<double>(hits) / accepted - p) <= 3 * sigma;
  };
  CHECK(within(first_one, 0.5));
  CHECK(within(tenth_one, std::log2(4.0 / 3.0)));
}
