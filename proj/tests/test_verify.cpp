#include <doctest.h>

#include "sturmian/verify.hpp"

using namespace sturmian;

namespace {

VerifyOptions quick() {
  VerifyOptions opt;
  opt.oracle_max = 300;
  opt.kesten_triples = 200;
  opt.quasi_draws = 40;
  opt.quasi_union_draws = 10;
  return opt;
}

}  // namespace

TEST_CASE("suite bookkeeping") {
  SuiteResult s;
  s.name = "demo";
  CHECK(!s.passed());
  s.expect(true, "first");
  CHECK(s.passed());
  CHECK(s.checks == 1);
  s.expect(false, "second");
  s.expect(false, "third");
  CHECK(!s.passed());
  CHECK(s.failures == 2);
  CHECK(s.first_failure == "second");
}

TEST_CASE("golden prefix passes every suite") {
  VerifyReport r = verify_alpha(make_alpha("preset:golden-40"), quick(), 2);
  CHECK(r.suites.size() >= 6);
  for (const auto& s : r.suites) {
    CAPTURE(s.name);
    CAPTURE(s.first_failure);
    CHECK(s.passed());
  }
  CHECK(r.passed());
  CHECK(r.suite("kesten").checks > 0);
  CHECK_THROWS(r.suite("no-such-suite"));
}

TEST_CASE("small alphas pass") {
  for (const char* spec : {"cf:3,1,4", "rat:55/89", "cf:1,2,1,9,1,1"}) {
    CAPTURE(spec);
    VerifyReport r = verify_alpha(make_alpha(spec), quick(), 1);
    for (const auto& s : r.suites) {
      CAPTURE(s.name);
      CAPTURE(s.first_failure);
      CHECK(s.failures == 0);
    }
  }
}

TEST_CASE("standard set") {
  auto set = standard_alpha_set(1);
  CHECK(set.size() == 23);
  CHECK(set[0].spec() == make_alpha("preset:golden-40").spec());
  auto again = standard_alpha_set(1);
  for (std::size_t i = 0; i < set.size(); ++i) CHECK(set[i].value() == again[i].value());
}
