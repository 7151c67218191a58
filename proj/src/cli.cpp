#include "sturmian/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sturmian/experiments.hpp"
#include "sturmian/report.hpp"
#include "sturmian/targets.hpp"
#include "sturmian/verify.hpp"

namespace sturmian {

namespace {

constexpr std::int64_t kRowCap = 1'000'000;

struct HelpRequested {
  std::string text;
};

bool takes_alpha(const std::string& c) { return c != "mc-wn" && c != "mc-bigtime"; }

std::string default_alpha(const std::string& c) {
  if (c == "verify") return "standard";
  if (c == "thmB") return "engineered";
  return "preset:golden-40";
}

std::string default_format(const std::string& c) {
  if (c == "count" || c == "thmB" || c == "mc-wn" || c == "mc-bigtime") return "json";
  return "csv";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

Rational parse_x(const std::string& text) {
  std::string body = text.rfind("rat:", 0) == 0 ? text.substr(4) : text;
  Rational x = parse_rational(body);
  if (x < 0 || x >= 1) throw ConfigError("--x must lie in [0, 1)");
  return x;
}

std::string normalized_rational(const std::string& text, const char* flag) {
  try {
    return to_string(parse_rational(text));
  } catch (const Error&) {
    throw ConfigError(std::string(flag) + ": not a rational: '" + text + "'");
  }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
}

void add_alpha(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "cf:a1,a2,... | rat:p/q | preset:golden-40 ...");
  sub->add_option("--tail", cfg.tail, "proxy tail element M");
}

void add_sampling(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "base seed");
  sub->add_option("--samples", cfg.samples, "number of samples");
}

Alpha resolve_alpha(const RunConfig& cfg) {
  std::optional<BigInt> tail;
  if (cfg.tail) tail = parse_bigint(*cfg.tail);
  return make_alpha(cfg.alpha, tail);
}

std::int64_t resolve_checkpoint(const Alpha& alpha, const std::string& token) {
  if (!token.empty() && (token[0] == 'q' || token[0] == 'Q')) {
    std::size_t k = 0;
    try {
      k = std::stoul(token.substr(1));
    } catch (const std::exception&) {
      throw ConfigError("bad checkpoint '" + token + "'");
    }
    if (k < 1 || k > alpha.horizon_k()) {
      throw ConfigError("checkpoint " + token + " outside 1..n = " + std::to_string(alpha.horizon_k()));
    }
    return to_int64(alpha.q(k) - 1, "checkpoint");
  }
  try {
    return std::stoll(token);
  } catch (const std::exception&) {
    throw ConfigError("bad checkpoint '" + token + "'");
  }
}

std::filesystem::path output_path(const std::string& path) {
  std::filesystem::path p(path);
  const char* dir = std::getenv("STURMIAN_OUT_DIR");
  if (p.is_relative() && dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  return p;
}

void write_file(const std::string& path, const std::string& text) {
  auto p = output_path(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream file(p, std::ios::binary);
  if (!file) throw ConfigError("cannot open " + p.string() + " for writing");
  file << text;
}

struct Output {
  std::string payload;
  int status = 0;
  std::string summary;  // for stderr
};

Output emit(const RunConfig& cfg, const Json& json, const std::string& csv) {
  Output out;
  out.payload = cfg.format == "json" ? json_document(canonical(cfg), json) : csv_document(canonical(cfg), csv);
  return out;
}

std::vector<PerStepRow> rows_for(const Alpha& alpha, std::int64_t first, std::int64_t last,
                                 const std::optional<CirclePoint>& x) {
  if (last - first + 1 > kRowCap) throw ConfigError("per-step dumps are limited to 10^6 rows");
  return per_step_rows(alpha, first, last, x);
}

// -- commands ------------------------------------------------------------------------

Output cmd_cf(const RunConfig& cfg) {
  Alpha alpha = resolve_alpha(cfg);
  return emit(cfg, cf_json(alpha), cf_csv(alpha));
}

Output cmd_targets(const RunConfig& cfg) {
  Alpha alpha = resolve_alpha(cfg);
  std::optional<CirclePoint> x;
  if (!cfg.x.empty()) x = CirclePoint(parse_x(cfg.x));
  auto rows = rows_for(alpha, 1, *cfg.N, x);
  return emit(cfg, Json{{"alpha", alpha_json(alpha)}, {"rows", per_step_json(rows)}}, per_step_csv(rows));
}

Output cmd_count(const RunConfig& cfg) {
  Alpha alpha = resolve_alpha(cfg);
  CirclePoint x(parse_x(cfg.x));
  CountReport report = count_undetermined(alpha, x, *cfg.N);
  if (!cfg.dump_per_j.empty()) {
    auto rows = rows_for(alpha, 1, *cfg.N, x);
    write_file(cfg.dump_per_j, csv_document(canonical(cfg), per_step_csv(rows)));
  }
  Json json = count_json(report);
  json["alpha"] = alpha_json(alpha);
  return emit(cfg, json, count_csv(report));
}

Output cmd_verify(const RunConfig& cfg) {
  std::vector<Alpha> alphas;
  if (cfg.alpha == "standard") {
    alphas = standard_alpha_set(cfg.seed);
  } else {
    alphas.push_back(resolve_alpha(cfg));
  }
  VerifyOptions opt;
  opt.oracle_max = cfg.oracle_max;
  opt.seed = cfg.seed;
  std::vector<VerifyReport> reports;
  for (const auto& alpha : alphas) reports.push_back(verify_alpha(alpha, opt, cfg.jobs));
  Output out = emit(cfg, verify_json(reports), verify_csv(reports));
  std::ostringstream summary;
  std::int64_t suites = 0;
  std::int64_t failed = 0;
  for (const auto& report : reports) {
    for (const auto& s : report.suites) {
      ++suites;
      if (!s.passed()) {
        ++failed;
        summary << "FAIL " << report.alpha << ' ' << s.name << ": " << s.first_failure << '\n';
      }
    }
  }
  summary << "verify: " << reports.size() << " alpha(s), " << suites << " suites, " << failed << " failed\n";
  out.summary = summary.str();
  out.status = failed == 0 ? 0 : 1;
  return out;
}

Output cmd_thm_a(const RunConfig& cfg) {
  Alpha alpha = resolve_alpha(cfg);
  std::vector<std::int64_t> checkpoints;
  for (const auto& token : cfg.checkpoints) checkpoints.push_back(resolve_checkpoint(alpha, token));
  ThmASummary summary = cfg.x.empty()
                            ? theorem_a_experiment(alpha, checkpoints, *cfg.samples, cfg.seed, cfg.jobs)
                            : theorem_a_summary(alpha, checkpoints, {parse_x(cfg.x)}, cfg.jobs);
  if (!cfg.plot_data.empty()) write_file(cfg.plot_data, thm_a_plot(summary));
  Json json = thm_a_json(summary);
  json["alpha"] = alpha_json(alpha);
  return emit(cfg, json, thm_a_csv(summary));
}

ThmBConfig thm_b_config(const RunConfig& cfg) {
  return ThmBConfig{static_cast<std::size_t>(*cfg.m), parse_rational(cfg.rho), parse_rational(cfg.sigma),
                    parse_rational(cfg.C)};
}

Output cmd_thm_b(const RunConfig& cfg) {
  ThmBConfig b = thm_b_config(cfg);
  if (b.m < 2) throw ConfigError("--m must be >= 2");
  Alpha alpha = cfg.alpha == "engineered"
                    ? engineered_alpha(b.m - 1, b.C, BigInt(100000), cfg.tail ? parse_bigint(*cfg.tail) : default_tail())
                    : resolve_alpha(cfg);
  ThmBReport report = theorem_b_experiment(alpha, b, *cfg.samples, cfg.seed, cfg.jobs);
  Json json = thm_b_json(report);
  json["alpha"] = alpha_json(alpha);
  bool ok = report.passed();
  if (cfg.oscillation) {
    // Two large elements: a_6 = 200 and a_10 = 5000.
    Alpha two = Alpha::from_prefix({1, 1, 1, 1, 1, 200, 1, 1, 1, 5000});
    ThmBConfig first{6, Rational(6, 25), Rational(13, 200), Rational(20)};
    ThmBConfig second{10, Rational(6, 25), Rational(13, 200), Rational(20)};
    OscillationReport osc = oscillation_demo(two, first, second, cfg.seed);
    Json o = oscillation_json(osc);
    o["alpha"] = alpha_json(two);
    json["oscillation"] = o;
    ok = ok && osc.ok;
  }
  Output out = emit(cfg, json, thm_b_csv(report));
  out.status = ok ? 0 : 1;
  out.summary = std::string("thmB: ") + (ok ? "passed" : "FAILED") + ", lambda(X) = " +
                to_decimal(report.lambda_X, 6) + ", lambda(Y) = " + to_decimal(report.lambda_Y, 6) +
                ", min gap = " + to_decimal(report.min_gap, 6) + ", D = " + to_decimal(report.D, 6) + "\n";
  return out;
}

Output cmd_mc_wn(const RunConfig& cfg) {
  WnEstimate e = monte_carlo_Wn(*cfg.n, *cfg.samples, cfg.seed, cfg.jobs);
  Output out = emit(cfg, wn_json(e), wn_csv(e));
  if (!e.precision_ok) {
    out.status = 1;
    out.summary = "mc-wn: more than 1% of samples skipped for precision\n";
  }
  return out;
}

Output cmd_mc_bigtime(const RunConfig& cfg) {
  Rational C = parse_rational(cfg.C);
  BigTimeStats stats = find_large_element(cfg.seed, C, *cfg.n, *cfg.samples, cfg.jobs);
  Json json{{"large_element", bigtime_json(stats)}};
  std::string csv = bigtime_csv(stats);
  if (cfg.growth) {
    const std::vector<std::int64_t> checkpoints{10, 100, 1000};
    GrowthTable table = sum_ai_growth(cfg.seed, checkpoints, *cfg.samples, cfg.jobs);
    json["growth"] = growth_json(table);
    csv += "\n" + growth_csv(table);
  }
  return emit(cfg, json, csv);
}

void fill_defaults(RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (cfg.format.empty()) cfg.format = default_format(c);
  if (takes_alpha(c) && cfg.alpha.empty()) cfg.alpha = default_alpha(c);
  if ((c == "targets" || c == "count") && !cfg.N) throw ConfigError(c + " needs --N");
  if (c == "count" && cfg.x.empty()) throw ConfigError("count needs --x");
  if (cfg.N && *cfg.N < 0) throw ConfigError("--N must be >= 0");
  if (c == "thmA") {
    if (cfg.checkpoints.empty()) cfg.checkpoints = {"q15", "q20", "q25", "q30"};
    if (!cfg.samples) cfg.samples = 100;
  }
  if (c == "thmB") {
    if (!cfg.m) cfg.m = 11;
    if (cfg.C.empty()) cfg.C = "1000";
    if (!cfg.samples) cfg.samples = 50;
  }
  if (c == "mc-wn") {
    if (!cfg.n) cfg.n = 10;
    if (!cfg.samples) cfg.samples = 10000;
  }
  if (c == "mc-bigtime") {
    if (!cfg.n) cfg.n = 50;
    if (cfg.C.empty()) cfg.C = "1";
    if (!cfg.samples) cfg.samples = 10000;
  }
  if (c == "thmB" || c == "mc-bigtime") cfg.C = normalized_rational(cfg.C, "--C");
  if (c == "thmB") {
    cfg.rho = normalized_rational(cfg.rho, "--rho");
    cfg.sigma = normalized_rational(cfg.sigma, "--sigma");
  }
  if (!cfg.x.empty()) cfg.x = "rat:" + to_string(parse_x(cfg.x));
  if (cfg.samples && *cfg.samples < 1) throw ConfigError("--samples must be >= 1");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Undetermined-arc sums for Sturmian codings of circle rotations", "sturmian"};
  app.require_subcommand(1);
  std::string checkpoints;

  auto* cf = app.add_subcommand("cf", "convergents and theta table");
  add_alpha(cf, cfg);

  auto* targets = app.add_subcommand("targets", "per-step closed form dump for steps 1..N");
  add_alpha(targets, cfg);
  targets->add_option("--N", cfg.N, "last step");
  targets->add_option("--x", cfg.x, "optional point for the chi column");

  auto* count = app.add_subcommand("count", "hits of x and the measure sum over steps 1..N");
  add_alpha(count, cfg);
  count->add_option("--x", cfg.x, "point, rat:p/q")->required();
  count->add_option("--N", cfg.N, "last step")->required();
  count->add_option("--dump-per-j", cfg.dump_per_j, "write per-step rows to this CSV file");

  auto* verify = app.add_subcommand("verify", "invariant suites");
  add_alpha(verify, cfg);
  verify->add_option("--oracle-max", cfg.oracle_max, "largest step compared with the oracle")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 20));
  verify->add_option("--seed", cfg.seed, "base seed");

  auto* thm_a = app.add_subcommand("thmA", "log-ratio series at checkpoints");
  add_alpha(thm_a, cfg);
  add_sampling(thm_a, cfg);
  thm_a->add_option("--x", cfg.x, "single point instead of sampling");
  thm_a->add_option("--checkpoints", checkpoints, "comma list of qK tokens or integers");
  thm_a->add_option("--plot-data", cfg.plot_data, "write 'N ratio' columns to this file");

  auto* thm_b = app.add_subcommand("thmB", "gap construction around a large element");
  add_alpha(thm_b, cfg);
  add_sampling(thm_b, cfg);
  thm_b->add_option("--m", cfg.m, "index of the large element");
  thm_b->add_option("--rho", cfg.rho, "rational in (1/8, 1/4)");
  thm_b->add_option("--sigma", cfg.sigma, "rational in (1/16, 1/8)");
  thm_b->add_option("--C", cfg.C, "witness constant");
  thm_b->add_flag("--oscillation", cfg.oscillation, "also run the two-large-element demo");

  auto* mc_wn = app.add_subcommand("mc-wn", "Monte Carlo estimate of lambda(W_n)");
  add_sampling(mc_wn, cfg);
  mc_wn->add_option("--n", cfg.n, "number of elements");

  auto* mc_big = app.add_subcommand("mc-bigtime", "Monte Carlo search for large elements");
  add_sampling(mc_big, cfg);
  mc_big->add_option("--n", cfg.n, "largest index searched");
  mc_big->add_option("--C", cfg.C, "witness constant");
  mc_big->add_flag("--growth", cfg.growth, "also tabulate sums of elements at n = 10, 100, 1000");

  for (auto* sub : {cf, targets, count, verify, thm_a, thm_b, mc_wn, mc_big}) add_common(sub, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    throw HelpRequested{subs.empty() ? app.help() : subs.front()->help()};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.checkpoints = split(checkpoints, ',');
  fill_defaults(cfg);
  return cfg;
}

std::string canonical(const RunConfig& cfg) {
  std::ostringstream out;
  const std::string& c = cfg.command;
  out << c;
  if (takes_alpha(c)) {
    out << " --alpha " << cfg.alpha;
    if (cfg.tail) out << " --tail " << parse_bigint(*cfg.tail).get_str();
  }
  if (c == "targets" || c == "count") out << " --N " << *cfg.N;
  if (!cfg.x.empty() && (c == "targets" || c == "count" || c == "thmA")) out << " --x " << cfg.x;
  if (c == "verify") out << " --oracle-max " << cfg.oracle_max << " --seed " << cfg.seed;
  if (c == "thmA") {
    if (cfg.x.empty()) out << " --samples " << *cfg.samples << " --seed " << cfg.seed;
    out << " --checkpoints " << join(cfg.checkpoints, ',');
  }
  if (c == "thmB") {
    out << " --m " << *cfg.m << " --rho " << cfg.rho << " --sigma " << cfg.sigma << " --C " << cfg.C
        << " --samples " << *cfg.samples << " --seed " << cfg.seed;
    if (cfg.oscillation) out << " --oscillation";
  }
  if (c == "mc-wn") out << " --n " << *cfg.n << " --samples " << *cfg.samples << " --seed " << cfg.seed;
  if (c == "mc-bigtime") {
    out << " --C " << cfg.C << " --n " << *cfg.n << " --samples " << *cfg.samples << " --seed " << cfg.seed;
    if (cfg.growth) out << " --growth";
  }
  out << " --format " << cfg.format;
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg = parse_args(args);
    Output result;
    const std::string& c = cfg.command;
    if (c == "cf") result = cmd_cf(cfg);
    else if (c == "targets") result = cmd_targets(cfg);
    else if (c == "count") result = cmd_count(cfg);
    else if (c == "verify") result = cmd_verify(cfg);
    else if (c == "thmA") result = cmd_thm_a(cfg);
    else if (c == "thmB") result = cmd_thm_b(cfg);
    else if (c == "mc-wn") result = cmd_mc_wn(cfg);
    else result = cmd_mc_bigtime(cfg);
    if (cfg.out.empty()) {
      out << result.payload;
    } else {
      write_file(cfg.out, result.payload);
    }
    err << result.summary;
    return result.status;
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const Error& e) {
    err << "error[" << e.code() << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error[E_INTERNAL]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sturmian
