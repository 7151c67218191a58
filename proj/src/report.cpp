#include "sturmian/report.hpp"

#include <sstream>

namespace sturmian {

namespace {

std::string str(const BigInt& v) { return v.get_str(); }

std::string yes_no(bool v) { return v ? "1" : "0"; }

std::string opt_bool(const std::optional<bool>& v) { return v ? yes_no(*v) : ""; }

Json opt_bool_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

// num,den,float columns
std::string rational_cells(const Rational& x) {
  return x.get_num().get_str() + ',' + x.get_den().get_str() + ',' + to_decimal(x, 15);
}

Json decomposition_json(const std::optional<TargetDecomposition>& d) {
  if (!d) return nullptr;
  return Json{{"k", d->k}, {"r", str(d->r)}, {"s", str(d->s)}, {"t", d->t}, {"case", to_string(d->arc_case)}};
}

}  // namespace

Json rational_json(const Rational& x) {
  return Json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}, {"float", to_decimal(x, 15)}};
}

Json alpha_json(const Alpha& alpha) {
  return Json{{"spec", alpha.spec()},
              {"cf", format_cf(alpha.cf())},
              {"horizon_k", alpha.horizon_k()},
              {"horizon_j", str(alpha.horizon_j())}};
}

std::string json_document(const std::string& config, const Json& result) {
  Json doc{{"config", config}, {"result", result}};
  return doc.dump(2) + "\n";
}

std::string csv_document(const std::string& config, const std::string& body) {
  return "# config: " + config + "\n" + body;
}

// -- cf ------------------------------------------------------------------------

Json cf_json(const Alpha& alpha) {
  Json rows = Json::array();
  for (const auto& c : alpha.convergents()) {
    rows.push_back(Json{{"k", c.k},
                        {"a", c.k == 0 ? Json(nullptr) : Json(str(alpha.a(c.k)))},
                        {"p", str(c.p)},
                        {"q", str(c.q)},
                        {"theta", rational_json(alpha.theta(c.k))}});
  }
  return Json{{"alpha", alpha_json(alpha)}, {"value", rational_json(alpha.value())}, {"convergents", rows}};
}

std::string cf_csv(const Alpha& alpha) {
  std::ostringstream out;
  out << "k,a,p,q,theta_num,theta_den,theta_float\n";
  for (const auto& c : alpha.convergents()) {
    out << c.k << ',' << (c.k == 0 ? "" : str(alpha.a(c.k))) << ',' << str(c.p) << ',' << str(c.q) << ','
        << rational_cells(alpha.theta(c.k)) << '\n';
  }
  return out.str();
}

// -- per-step rows -----------------------------------------------------------------

Json per_step_json(std::span<const PerStepRow> rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back(Json{{"j", row.j},
                       {"depth", depth_of_step(row.j)},
                       {"i", row.i},
                       {"b", row.b},
                       {"closed_form", decomposition_json(row.decomposition)},
                       {"lambda", rational_json(row.lambda)},
                       {"chi", opt_bool_json(row.chi)}});
  }
  return out;
}

std::string per_step_csv(std::span<const PerStepRow> rows) {
  std::ostringstream out;
  out << "j,depth,i,b,r,s,t,lambda_num,lambda_den,lambda_float,chi\n";
  for (const auto& row : rows) {
    out << row.j << ',' << depth_of_step(row.j) << ',' << row.i << ',' << row.b << ',';
    if (row.decomposition) {
      out << str(row.decomposition->r) << ',' << str(row.decomposition->s) << ',' << row.decomposition->t;
    } else {
      out << ",,";
    }
    out << ',' << rational_cells(row.lambda) << ',' << (row.chi ? yes_no(*row.chi) : "") << '\n';
  }
  return out.str();
}

// -- count -----------------------------------------------------------------------------

Json count_json(const CountReport& report) {
  return Json{{"x", rational_json(report.x.value())},
              {"N", report.N},
              {"count", report.count},
              {"measure_sum", rational_json(report.measure_sum)}};
}

std::string count_csv(const CountReport& report) {
  std::ostringstream out;
  out << "x_num,x_den,x_float,N,count,measure_num,measure_den,measure_float\n";
  out << rational_cells(report.x.value()) << ',' << report.N << ',' << report.count << ','
      << rational_cells(report.measure_sum) << '\n';
  return out.str();
}

// -- verify ------------------------------------------------------------------------------

Json verify_json(std::span<const VerifyReport> reports) {
  Json out = Json::array();
  bool all = true;
  for (const auto& report : reports) {
    Json suites = Json::array();
    for (const auto& s : report.suites) {
      suites.push_back(Json{{"suite", s.name},
                            {"passed", s.passed()},
                            {"checks", s.checks},
                            {"failures", s.failures},
                            {"vacuous", s.vacuous},
                            {"detail", s.detail},
                            {"first_failure", s.first_failure}});
    }
    out.push_back(Json{{"alpha", report.alpha}, {"passed", report.passed()}, {"suites", suites}});
    all = all && report.passed();
  }
  return Json{{"passed", all}, {"alphas", out}};
}

std::string verify_csv(std::span<const VerifyReport> reports) {
  std::ostringstream out;
  out << "alpha,suite,passed,checks,failures,vacuous,detail\n";
  for (const auto& report : reports) {
    for (const auto& s : report.suites) {
      out << '"' << report.alpha << "\"," << s.name << ',' << yes_no(s.passed()) << ',' << s.checks << ','
          << s.failures << ',' << s.vacuous << ",\"" << s.detail << "\"\n";
    }
  }
  return out.str();
}

// -- Theorem A ------------------------------------------------------------------------------

Json thm_a_json(const ThmASummary& summary) {
  Json series = Json::array();
  for (std::size_t s = 0; s < summary.series.size(); ++s) {
    Json points = Json::array();
    for (const auto& p : summary.series[s]) {
      points.push_back(Json{{"N", p.N},
                            {"m", p.m ? Json(*p.m) : Json(nullptr)},
                            {"count", p.count},
                            {"measure_sum", rational_json(p.measure_sum)},
                            {"ratio", p.ratio ? Json(*p.ratio) : Json(nullptr)},
                            {"count_bounds_ok", opt_bool_json(p.count_bounds_ok)},
                            {"measure_bounds_ok", opt_bool_json(p.measure_bounds_ok)}});
    }
    series.push_back(Json{{"x", rational_json(summary.xs[s])}, {"points", points}});
  }
  Json medians = Json::array();
  for (std::size_t c = 0; c < summary.checkpoints.size(); ++c) {
    std::ostringstream v;
    v.precision(15);
    v << summary.median_abs_error[c];
    medians.push_back(Json{{"N", summary.checkpoints[c]}, {"median_abs_ratio_error", v.str()}});
  }
  return Json{{"samples_all_bounds_ok", summary.samples_all_bounds_ok},
              {"medians", medians},
              {"series", series}};
}

std::string thm_a_csv(const ThmASummary& summary) {
  std::ostringstream out;
  out << "sample,x_num,x_den,x_float,N,m,count,measure_num,measure_den,measure_float,ratio,count_bounds_ok,"
         "measure_bounds_ok\n";
  for (std::size_t s = 0; s < summary.series.size(); ++s) {
    for (const auto& p : summary.series[s]) {
      out << s << ',' << rational_cells(summary.xs[s]) << ',' << p.N << ',' << (p.m ? std::to_string(*p.m) : "")
          << ',' << p.count << ',' << rational_cells(p.measure_sum) << ',' << p.ratio.value_or("") << ','
          << opt_bool(p.count_bounds_ok) << ',' << opt_bool(p.measure_bounds_ok) << '\n';
    }
  }
  return out.str();
}

std::string thm_a_plot(const ThmASummary& summary) {
  std::ostringstream out;
  for (std::size_t s = 0; s < summary.series.size(); ++s) {
    if (s > 0) out << "\n\n";
    out << "# x = " << to_string(summary.xs[s]) << '\n';
    for (const auto& p : summary.series[s]) {
      if (p.ratio) out << p.N << ' ' << *p.ratio << '\n';
    }
  }
  return out.str();
}

// -- Theorem B ------------------------------------------------------------------------------

Json thm_b_json(const ThmBReport& report) {
  Json wb = Json::array();
  for (const auto& c : report.wb_checks) {
    wb.push_back(Json{{"b", c.b},
                      {"measure", rational_json(c.measure)},
                      {"closed_form", rational_json(c.closed_form)},
                      {"match", c.match()},
                      {"nested_in_previous", c.nested_in_previous}});
  }
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back(Json{{"x", rational_json(p.x)},
                         {"y", rational_json(p.y)},
                         {"block_count_x", p.block_count_x},
                         {"block_count_y", p.block_count_y},
                         {"count_x", p.count_x},
                         {"count_y", p.count_y},
                         {"f_x", rational_json(p.f_x)},
                         {"f_y", rational_json(p.f_y)},
                         {"ok", p.ok}});
  }
  return Json{{"m", report.config.m},
              {"rho", rational_json(report.config.rho)},
              {"sigma", rational_json(report.config.sigma)},
              {"C", rational_json(report.config.C)},
              {"a_m", str(report.a_m)},
              {"rho_a_m", report.rho_am},
              {"sigma_a_m", report.sigma_am},
              {"lambda_X", rational_json(report.lambda_X)},
              {"lambda_Y", rational_json(report.lambda_Y)},
              {"X_pieces", report.X.pieces().size()},
              {"Y_pieces", report.Y.pieces().size()},
              {"D", rational_json(report.D)},
              {"measure_sum", rational_json(report.measure_sum)},
              {"min_gap", rational_json(report.min_gap)},
              {"measures_ok", report.measures_ok()},
              {"closed_forms_ok", report.closed_forms_ok()},
              {"pairs_ok", report.pairs_ok()},
              {"passed", report.passed()},
              {"w_b", wb},
              {"pairs", pairs}};
}

std::string thm_b_csv(const ThmBReport& report) {
  std::ostringstream out;
  out << "pair,x_num,x_den,x_float,y_num,y_den,y_float,block_count_x,block_count_y,count_x,count_y,"
         "f_x_num,f_x_den,f_x_float,f_y_num,f_y_den,f_y_float,ok\n";
  for (std::size_t s = 0; s < report.pairs.size(); ++s) {
    const auto& p = report.pairs[s];
    out << s << ',' << rational_cells(p.x) << ',' << rational_cells(p.y) << ',' << p.block_count_x << ','
        << p.block_count_y << ',' << p.count_x << ',' << p.count_y << ',' << rational_cells(p.f_x) << ','
        << rational_cells(p.f_y) << ',' << yes_no(p.ok) << '\n';
  }
  return out.str();
}

Json oscillation_json(const OscillationReport& report) {
  return Json{{"m1", report.m1},
              {"m2", report.m2},
              {"x", rational_json(report.x)},
              {"f_m1", rational_json(report.f_m1)},
              {"f_m2", rational_json(report.f_m2)},
              {"D", rational_json(report.D)},
              {"ok", report.ok}};
}

// -- Monte Carlo ------------------------------------------------------------------------------

namespace {

std::string fixed(double v) {
  std::ostringstream out;
  out.precision(15);
  out << v;
  return out.str();
}

}  // namespace

Json wn_json(const WnEstimate& e) {
  return Json{{"n", e.n},
              {"samples", e.samples},
              {"hits", e.hits},
              {"skipped", e.skipped},
              {"estimate", rational_json(e.estimate)},
              {"sigma", fixed(e.sigma)},
              {"half_width_99", fixed(e.half_width_99)},
              {"lower_3sigma", fixed(e.lower_3sigma())},
              {"precision_ok", e.precision_ok}};
}

std::string wn_csv(const WnEstimate& e) {
  std::ostringstream out;
  out << "n,samples,hits,skipped,estimate_num,estimate_den,estimate_float,sigma,half_width_99,lower_3sigma\n";
  out << e.n << ',' << e.samples << ',' << e.hits << ',' << e.skipped << ',' << rational_cells(e.estimate) << ','
      << fixed(e.sigma) << ',' << fixed(e.half_width_99) << ',' << fixed(e.lower_3sigma()) << '\n';
  return out.str();
}

Json bigtime_json(const BigTimeStats& s) {
  Json first = Json::array();
  for (const auto& [m, count] : s.first_m) first.push_back(Json{{"m", m}, {"count", count}});
  return Json{{"C", rational_json(s.C)},
              {"n_max", s.n_max},
              {"samples", s.samples},
              {"skipped", s.skipped},
              {"with_witness", s.with_witness},
              {"fraction", rational_json(s.fraction)},
              {"first_m", first}};
}

std::string bigtime_csv(const BigTimeStats& s) {
  std::ostringstream out;
  out << "m,count\n";
  for (const auto& [m, count] : s.first_m) out << m << ',' << count << '\n';
  return out.str();
}

Json growth_json(const GrowthTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"samples", r.samples},
                        {"exceeding", r.exceeding},
                        {"fraction", rational_json(r.fraction)},
                        {"min_sum", str(r.min_sum)},
                        {"max_sum", str(r.max_sum)}});
  }
  return Json{{"skipped", table.skipped}, {"monotone", table.monotone}, {"rows", rows}};
}

std::string growth_csv(const GrowthTable& table) {
  std::ostringstream out;
  out << "n,samples,exceeding,fraction_num,fraction_den,fraction_float,min_sum,max_sum\n";
  for (const auto& r : table.rows) {
    out << r.n << ',' << r.samples << ',' << r.exceeding << ',' << rational_cells(r.fraction) << ','
        << str(r.min_sum) << ',' << str(r.max_sum) << '\n';
  }
  return out.str();
}

}  // namespace sturmian
