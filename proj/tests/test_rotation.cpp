#include <doctest.h>

#include <set>

#include "sturmian/rotation.hpp"

using namespace sturmian;

namespace {

Rational golden_frac(const char* num) { return Rational(BigInt(num), BigInt("165580243334155")); }

}  // namespace

TEST_CASE("rotation") {
  Alpha golden = make_alpha("preset:golden-40");
  CirclePoint x(Rational(1, 3));
  CHECK(rotate(golden, x, 0) == x);
  CHECK(rotate(golden, rotate(golden, x, 17), -17) == x);
  CHECK(rotate(make_alpha("rat:2/5"), CirclePoint(Rational(0)), 3).value() == Rational(1, 5));
  CHECK(rotate(golden, CirclePoint(Rational(0)), 8).value() == golden_frac("156352772631268"));
  CHECK(CirclePoint(Rational(7, 3)).value() == Rational(1, 3));
  CHECK(CirclePoint(Rational(-1, 4)).value() == Rational(3, 4));
}

TEST_CASE("codings") {
  Alpha two_fifths = make_alpha("rat:2/5");
  CHECK(code(two_fifths, CirclePoint(Rational(0)), 5).bits == "01101");

  Alpha golden = make_alpha("preset:golden-40");
  CHECK(code(golden, CirclePoint(golden.value() / 2), 1).bits == "0");
  CHECK(code(golden, CirclePoint(golden.value()), 1).bits == "1");

  Coding word = code(golden, CirclePoint(Rational(1, 3)), 20);
  CHECK(word.size() == 20);
  std::set<std::string> windows;
  for (std::size_t i = 0; i + 5 <= word.size(); ++i) windows.insert(word.bits.substr(i, 5));
  CHECK(windows.size() == 6);
  CHECK_THROWS_AS(code(golden, CirclePoint(Rational(0)), -1), DomainError);
}

TEST_CASE("atoms") {
  Alpha golden = make_alpha("preset:golden-40");
  AtomPartition p0 = atoms(golden, 0);
  REQUIRE(p0.atoms.size() == 2);
  CHECK(p0.atoms[0].interval == CircleInterval::from_endpoints(0, golden.value()));
  CHECK(p0.atoms[0].coding.bits == "0");
  CHECK(p0.atoms[1].coding.bits == "1");

  for (std::int64_t j = 1; j <= 60; ++j) {
    AtomPartition p = atoms(golden, j);
    CHECK(p.atoms.size() == static_cast<std::size_t>(j + 2));
    Rational total = 0;
    std::set<std::string> words;
    for (const auto& a : p.atoms) {
      total += a.interval.length();
      words.insert(a.coding.bits);
      CHECK(a.coding.size() == static_cast<std::size_t>(j + 1));
      CHECK(code(golden, CirclePoint(a.interval.left()), j + 1) == a.coding);
    }
    CHECK(total == 1);
    CHECK(words.size() == p.atoms.size());
  }
}

TEST_CASE("undetermined arcs by brute force") {
  Alpha golden = make_alpha("preset:golden-40");
  CircleInterval v6 = oracle_V(golden, 6);
  CHECK(v6.left() == golden_frac("102334218245986"));
  CHECK(v6.right() == golden_frac("126492050176338"));
  CHECK(v6.length() == golden.theta(3));
  CHECK(oracle_V(golden, 0).length() == golden.value());
  CHECK(oracle_V(golden, 1).length() == golden_frac("63246025088169"));
  CHECK(oracle_V(golden, 2).length() == golden_frac("63246025088169"));
  CHECK(oracle_V(golden, 3).length() == golden_frac("39088193157817"));

  CHECK(oracle_V(make_alpha("rat:2/5"), 0) == CircleInterval::from_endpoints(Rational(2, 5), 1));
}

TEST_CASE("right-special words extend both ways") {
  Alpha a = make_alpha("cf:2,1,3,1,1,4");
  for (std::int64_t j = 0; j <= 40; ++j) {
    CircleInterval v = oracle_V(a, j);
    Coding w = right_special_word(a, j);
    CHECK(w.size() == static_cast<std::size_t>(j + 1));
    Coding lo = code(a, CirclePoint(v.left()), j + 2);
    Coding hi = code(a, CirclePoint(v.left() + v.length() * Rational(999, 1000)), j + 2);
    CHECK(lo.bits.substr(0, j + 1) == w.bits);
    CHECK(hi.bits.substr(0, j + 1) == w.bits);
    CHECK(lo.bits.back() != hi.bits.back());
  }
}

TEST_CASE("incremental oracle matches the brute force") {
  for (const char* spec : {"preset:golden-12", "cf:3,1,4,1,5", "cf:1,7,2,2"}) {
    Alpha a = make_alpha(spec);
    OracleSweep sweep(a);
    std::int64_t last = std::min<std::int64_t>(a.horizon_j64() - 1, 150);
    for (std::int64_t j = 0; j <= last; ++j) {
      CHECK(sweep.step() == j);
      CHECK(sweep.undetermined() == oracle_V(a, j));
      CHECK(sweep.atom_count() == static_cast<std::size_t>(j + 2));
      if (j < last) sweep.advance();
    }
  }
}

TEST_CASE("horizon limits") {
  Alpha r = make_alpha("rat:3/7");
  CHECK_NOTHROW(oracle_V(r, 4));
  CHECK_THROWS_AS(oracle_V(r, 5), HorizonError);
  Alpha ten = make_alpha("cf:1,1,1,1,1,1,1,1,1,1");
  CHECK_NOTHROW(oracle_V(ten, 87));
  CHECK_THROWS_AS(oracle_V(ten, 88), HorizonError);
}
