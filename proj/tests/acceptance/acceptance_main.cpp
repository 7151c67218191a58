// Runs every acceptance criterion through the CLI in-process and prints one
// PASS/FAIL line per criterion.  Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sturmian/cli.hpp"

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Run {
  std::vector<std::string> args;
  int status = 0;
  std::string payload;
  double seconds = 0;
  Json doc;
};

Run invoke(std::vector<std::string> args) {
  Run r;
  r.args = std::move(args);
  std::ostringstream out;
  std::ostringstream err;
  auto start = Clock::now();
  r.status = sturmian::run(r.args, out, err);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.payload = out.str();
  if (r.status == 2) std::cerr << err.str();
  r.doc = Json::parse(r.payload, nullptr, false);
  return r;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

class Reporter {
 public:
  void line(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << detail << ")\n";
    if (!ok) failed_ = true;
  }
  bool failed() const { return failed_; }

 private:
  bool failed_ = false;
};

std::string seconds(double s, double limit) {
  std::ostringstream out;
  out.precision(3);
  out << s << " s of " << limit << " s";
  return out.str();
}

struct SuiteTally {
  long alphas = 0;
  long passing = 0;
  long checks = 0;
  long failures = 0;
  long vacuous = 0;
  std::string first_failure;
};

// Per suite name, over all alphas of a verify document.
std::map<std::string, SuiteTally> tally(const Json& doc) {
  std::map<std::string, SuiteTally> out;
  if (!doc.is_object()) return out;
  for (const auto& a : doc["result"]["alphas"]) {
    for (const auto& s : a["suites"]) {
      auto& t = out[s["suite"].get<std::string>()];
      ++t.alphas;
      t.passing += s["passed"].get<bool>() ? 1 : 0;
      t.checks += s["checks"].get<long>();
      t.failures += s["failures"].get<long>();
      t.vacuous += s["vacuous"].get<long>();
      if (t.first_failure.empty() && !s["first_failure"].get<std::string>().empty()) {
        t.first_failure = a["alpha"]["spec"].get<std::string>() + ": " + s["first_failure"].get<std::string>();
      }
    }
  }
  return out;
}

bool suites_ok(const std::map<std::string, SuiteTally>& t, const std::vector<std::string>& names, long alphas,
               std::string& detail) {
  bool ok = true;
  std::ostringstream d;
  for (const auto& n : names) {
    auto it = t.find(n);
    if (it == t.end()) {
      d << n << ": missing; ";
      ok = false;
      continue;
    }
    const auto& s = it->second;
    bool good = s.alphas == alphas && s.passing == alphas && s.failures == 0;
    ok = ok && good;
    d << n << ": " << s.checks << " checks, " << s.failures << " failures";
    if (!s.first_failure.empty()) d << " [" << s.first_failure << "]";
    d << "; ";
  }
  detail = d.str();
  return ok;
}

double number(const Json& j) { return std::stod(j.get<std::string>()); }

}  // namespace

int main() {
  Reporter report;
  std::vector<Run> runs;

  // Criteria 1-4 share one verify run over the standard alpha set.
  Run verify = invoke({"verify", "--alpha", "standard", "--format", "json"});
  runs.push_back(verify);
  auto t = tally(verify.doc);
  const long alphas = verify.doc.is_object() ? static_cast<long>(verify.doc["result"]["alphas"].size()) : 0;
  std::string detail;

  bool c1 = verify.doc.is_object() && alphas == 23 && suites_ok(t, {"oracle_equivalence"}, alphas, detail);
  report.line(1, "oracle equivalence", c1 && verify.seconds < 120,
              std::to_string(alphas) + " alphas; " + detail + "whole verify run " + seconds(verify.seconds, 120));

  bool c2 = suites_ok(t, {"disjointness", "sum_bounds", "h_integrals", "nesting", "atoms"}, alphas, detail);
  report.line(2, "lemma suite", c2 && verify.seconds < 300, detail + seconds(verify.seconds, 300));

  bool c3 = suites_ok(t, {"kesten"}, alphas, detail);
  for (const auto& a : verify.doc.is_object() ? verify.doc["result"]["alphas"] : Json::array()) {
    for (const auto& s : a["suites"]) {
      if (s["suite"] == "kesten" && s["checks"].get<long>() < 1000) c3 = false;
    }
  }
  report.line(3, "Kesten counting", c3 && verify.seconds < 60,
              detail + "at least 1000 triples per alpha; whole verify run " + seconds(verify.seconds, 60));

  bool c4 = suites_ok(t, {"quasi_independence", "h_pairs"}, alphas, detail);
  report.line(4, "quasi-independence", c4 && verify.seconds < 300, detail + seconds(verify.seconds, 300));

  Run thm_a = invoke({"thmA", "--format", "json"});
  runs.push_back(thm_a);
  {
    bool ok = thm_a.status == 0 && thm_a.doc.is_object();
    std::ostringstream d;
    if (ok) {
      const auto& r = thm_a.doc["result"];
      long good = r["samples_all_bounds_ok"].get<long>();
      const auto& med = r["medians"];
      double first = number(med.front()["median_abs_ratio_error"]);
      double last = number(med.back()["median_abs_ratio_error"]);
      ok = med.size() == 4 && good >= 95 && last < first && last <= 0.25;
      d << good << "/100 samples within bounds; median |ratio-1| " << first << " at N=" << med.front()["N"]
        << ", " << last << " at N=" << med.back()["N"] << "; ";
    }
    d << seconds(thm_a.seconds, 600);
    report.line(5, "shrinking-target ratio on the golden prefix", ok && thm_a.seconds < 600, d.str());
  }

  Run thm_b = invoke({"thmB", "--format", "json"});
  runs.push_back(thm_b);
  {
    bool ok = thm_b.status == 0 && thm_b.doc.is_object();
    std::ostringstream d;
    if (ok) {
      const auto& r = thm_b.doc["result"];
      long matches = 0;
      for (const auto& w : r["w_b"]) matches += w["match"].get<bool>() ? 1 : 0;
      long pairs_ok = 0;
      for (const auto& p : r["pairs"]) pairs_ok += p["ok"].get<bool>() ? 1 : 0;
      bool positive = r["D"]["num"].get<std::string>().front() != '-' && r["D"]["num"].get<std::string>() != "0";
      ok = r["measures_ok"].get<bool>() && r["w_b"].size() == 10 && matches == 10 && r["pairs"].size() == 50 &&
           pairs_ok == 50 && positive;
      d << "lambda(X) " << r["lambda_X"]["float"].get<std::string>() << ", lambda(Y) "
        << r["lambda_Y"]["float"].get<std::string>() << ", " << matches << "/10 closed forms, " << pairs_ok
        << "/50 pairs, D " << r["D"]["float"].get<std::string>() << "; ";
    }
    d << seconds(thm_b.seconds, 300);
    report.line(6, "gap construction at a large element", ok && thm_b.seconds < 300, d.str());
  }

  {
    bool ok = true;
    double total = 0;
    std::ostringstream d;
    for (const char* n : {"10", "100"}) {
      Run wn = invoke({"mc-wn", "--n", n, "--samples", "10000", "--format", "json"});
      runs.push_back(wn);
      total += wn.seconds;
      if (wn.status != 0 || !wn.doc.is_object()) {
        ok = false;
        continue;
      }
      const auto& r = wn.doc["result"];
      double lower = number(r["lower_3sigma"]);
      ok = ok && lower > 0.1 && r["precision_ok"].get<bool>();
      d << "n=" << n << " estimate " << r["estimate"]["float"].get<std::string>() << " lower " << lower << "; ";
    }
    d << seconds(total, 120);
    report.line(7, "Monte Carlo measure of W_n", ok && total < 120, d.str());
  }

  {
    bool ok = true;
    std::ostringstream d;
    for (const auto& r : runs) {
      auto args = r.args;
      args.push_back("--jobs");
      args.push_back("8");
      Run again = invoke(args);
      bool same = again.status == r.status && again.payload == r.payload;
      if (!same) d << "differs: " << join(r.args) << "; ";
      ok = ok && same;
    }
    d << runs.size() << " payloads compared at --jobs 8";
    report.line(8, "determinism", ok, d.str());
  }

  return report.failed() ? EXIT_FAILURE : EXIT_SUCCESS;
}
