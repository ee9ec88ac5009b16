#include "ppart/almkvist.hpp"
#include "ppart/circle.hpp"
#include "ppart/dedekind.hpp"
#include "ppart/exact.hpp"
#include "ppart/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace ppart;

namespace {

struct Globals {
  int digits = 0;
  std::string json_path;
  std::string csv_path;
  bool quiet = false;
};

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  std::string seconds() const {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

PrecisionContext ctx_for(const Globals& g, int fallback) {
  return PrecisionContext::with_digits(g.digits > 0 ? g.digits : fallback);
}

void emit(const Globals& g, const Json& doc) {
  if (g.json_path == "-")
    std::cout << dump(doc);
  else if (!g.json_path.empty())
    write_file(g.json_path, dump(doc));
}

void say(const Globals& g, const std::string& line) {
  if (!g.quiet && g.json_path != "-") std::cout << line << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane partition counts: exact values and circle-method estimates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--digits", g.digits, "working precision in decimal digits (default: automatic)")
      ->check(CLI::Range(30, 200000));
  app.add_option("--json", g.json_path, "write the JSON report to PATH ('-' for stdout)");
  app.add_option("--csv", g.csv_path, "write tabular output to PATH");
  app.add_flag("--quiet", g.quiet, "suppress human-readable output");

  long ex_n = 0;
  bool ex_table = false;
  auto* ex = app.add_subcommand("exact", "p2(n) from the MacMahon product");
  ex->add_option("n", ex_n)->required();
  ex->add_flag("--table", ex_table, "write p2(0..n) as CSV (needs --csv)");

  long es_n = 0;
  EstimateOptions es_opt;
  auto* es = app.add_subcommand("estimate", "superasymptotic estimate of p2(n)");
  es->add_option("n", es_n)->required();
  es->add_option("--kappa2", es_opt.kappa2, "minor-arc exponent for the theoretical cutoff");
  es->add_option("--k-threshold", es_opt.k_threshold, "cutoff probe threshold")->capture_default_str();
  es->add_option("--m-floor", es_opt.m_floor, "per-term floor for truncation in m")->capture_default_str();
  es->add_flag("--with-exact", es_opt.with_exact, "compare with the exact value");
  es->add_flag("--theory-cutoff", es_opt.theory_cutoff, "use N(n) instead of the numeric cutoff");

  long ph_n = 0, ph_k = 0;
  bool ph_per_m = false;
  double ph_floor = 0.001;
  auto* ph = app.add_subcommand("phi", "phi_k(n) with truncation metadata");
  ph->add_option("n", ph_n)->required();
  ph->add_option("k", ph_k)->required();
  ph->add_flag("--per-m", ph_per_m, "emit every computed term as CSV");
  ph->add_option("--m-floor", ph_floor, "per-term floor")->capture_default_str();

  std::string sb_list, sb_out;
  auto* sb = app.add_subcommand("scan-bmin", "minimum of b_{h,k} over h for each k");
  sb->add_option("--k-list", sb_list, "e.g. 2,35-40,primes:211-997")->required();
  sb->add_option("--out", sb_out, "CSV output path");

  long dk_h = 0, dk_k = 1;
  auto* dk = app.add_subcommand("dedekind", "Dedekind-type sums and bound checks for (h,k)");
  dk->add_option("residue", dk_h, "h, coprime to k")->required();
  dk->add_option("k", dk_k)->required();

  auto* cs = app.add_subcommand("constants", "fundamental and derived constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Timer timer;
    if (ex->parsed()) {
      if (ex_n < 0) throw DomainError("n must be non-negative");
      auto t = p2_exact_table(ex_n);
      if (ex_table) {
        if (g.csv_path.empty()) throw DomainError("--table needs --csv PATH");
        CsvTable csv;
        csv.header = {"n", "p2"};
        for (long i = 0; i <= ex_n; ++i) csv.rows.push_back({std::to_string(i), t.values[i].get_str()});
        write_file(g.csv_path, csv.str());
      }
      std::string v = t.values.back().get_str();
      say(g, v);
      emit(g, report_document("exact", {{"n", std::to_string(ex_n)}, {"table", ex_table ? "true" : "false"}},
                              {{"p2", v}, {"digits", std::to_string(v.size())}}, {{"total_s", timer.seconds()}}));
    } else if (es->parsed()) {
      if (es_n < 1) throw DomainError("n must be positive");
      es_opt.digits = g.digits;
      EstimateReport r = p2_estimate(es_n, es_opt);
      say(g, "estimate        " + fmt_real(r.estimate, 6));
      say(g, "rounded         " + r.rounded.get_str());
      say(g, "estimated_error " + r.estimated_error.to_sci(6));
      say(g, "N_used          " + std::to_string(r.N_used));
      if (r.has_exact) {
        say(g, "exact           " + r.exact.get_str());
        say(g, "actual_error    " + r.actual_error.to_sci(6));
        say(g, "digits_agreeing " + std::to_string(r.digits_agreeing) + "/" + std::to_string(r.exact.get_str().size()));
      }
      if (!g.quiet)
        for (const auto& b : r.per_k)
          std::cout << "  k=" << b.k << " phi=" << fmt_real(b.phi_value, 4) << " m*=" << b.m_star_used << " "
                    << to_string(b.stop_reason) << " err=" << b.trunc_error_est.to_sci(3) << '\n';
      Json in{{"n", std::to_string(es_n)},
              {"kappa2", std::to_string(es_opt.kappa2)},
              {"k_threshold", std::to_string(es_opt.k_threshold)},
              {"m_floor", std::to_string(es_opt.m_floor)},
              {"digits", g.digits > 0 ? std::to_string(g.digits) : "auto"},
              {"with_exact", es_opt.with_exact ? "true" : "false"},
              {"cutoff", es_opt.theory_cutoff ? "theory" : "numeric"}};
      emit(g, report_document("estimate", in, to_json(r), {{"total_s", timer.seconds()}}));
      if (!g.csv_path.empty()) {
        CsvTable csv;
        csv.header = {"k", "phi", "m_star_used", "stop_reason", "trunc_error_est"};
        for (const auto& b : r.per_k)
          csv.rows.push_back({std::to_string(b.k), fmt_real(b.phi_value), std::to_string(b.m_star_used),
                              to_string(b.stop_reason), b.trunc_error_est.to_sci(6)});
        write_file(g.csv_path, csv.str());
      }
    } else if (ph->parsed()) {
      if (ph_n < 1 || ph_k < 1) throw DomainError("n and k must be positive");
      PrecisionContext ctx = g.digits > 0 ? PrecisionContext::with_digits(g.digits) : precision_for(ph_n);
      PhiBreakdown b = mstar_numeric(ph_n, ph_k, ctx, ph_floor);
      say(g, "phi             " + fmt_real(b.phi_value));
      say(g, "m_star_used     " + std::to_string(b.m_star_used));
      say(g, "stop_reason     " + to_string(b.stop_reason));
      say(g, "trunc_error_est " + b.trunc_error_est.to_sci(6));
      Json in{{"n", std::to_string(ph_n)},
              {"k", std::to_string(ph_k)},
              {"m_floor", std::to_string(ph_floor)},
              {"digits", std::to_string(ctx.digits)}};
      emit(g, report_document("phi", in, to_json(b, ph_per_m), {{"total_s", timer.seconds()}}));
      if (ph_per_m) {
        std::string csv = per_m_table(b).str();
        if (g.csv_path.empty())
          std::cout << csv;
        else
          write_file(g.csv_path, csv);
      }
    } else if (sb->parsed()) {
      PrecisionContext ctx = ctx_for(g, 40);
      auto ks = parse_k_list(sb_list);
      CsvTable csv;
      csv.header = {"k", "h_min", "b_min"};
      Json rows = Json::array();
      for (long k : ks) {
        if (k < 2) throw DomainError("scan-bmin needs k >= 2");
        BminRow r = b_min(k, ctx);
        std::string v = fmt_real(r.b, 20);
        csv.rows.push_back({std::to_string(k), std::to_string(r.h), v});
        rows.push_back({{"k", std::to_string(k)}, {"h", std::to_string(r.h)}, {"b_min", v}});
        say(g, std::to_string(k) + " " + std::to_string(r.h) + " " + v);
      }
      std::string out = !sb_out.empty() ? sb_out : g.csv_path;
      if (!out.empty()) write_file(out, csv.str());
      emit(g, report_document("scan-bmin", {{"k_list", sb_list}, {"digits", std::to_string(ctx.digits)}},
                              {{"rows", rows}}, {{"total_s", timer.seconds()}}));
    } else if (dk->parsed()) {
      PrecisionContext ctx = ctx_for(g, 50);
      DedekindSummary s = dedekind_summary(dk_h, dk_k, ctx);
      Json o = to_json(s);
      say(g, "C_hk  " + fmt_real(s.C_hk, 30));
      if (s.has_b) say(g, "b_hk  " + fmt_real(s.b_hk, 30));
      say(g, "v1    " + fmt_complex(s.v1, 30));
      if (s.has_residual) say(g, "reciprocity_residual " + s.residual.to_sci(12));
      for (const auto& v : s.bound_flags)
        say(g, v.name + " " + (v.applicable ? (v.pass ? "pass" : "FAIL") : "skipped"));
      emit(g, report_document("dedekind",
                              {{"h", std::to_string(dk_h)}, {"k", std::to_string(dk_k)},
                               {"digits", std::to_string(ctx.digits)}},
                              o, {{"total_s", timer.seconds()}}));
    } else if (cs->parsed()) {
      PrecisionContext ctx = ctx_for(g, 50);
      const Constants& c = constants(ctx);
      DerivedConstants d = derived_constants(ctx);
      Real zero(0L, ctx.bits());
      Real lc = lambda_critical(ctx);
      SaddleData sd = saddle_data(lc, ctx);
      Json o{{"pi", fmt_real(c.pi, ctx.digits - 10)},
             {"a", fmt_real(c.a, ctx.digits - 10)},
             {"zeta_prime_m1", fmt_real(c.zeta_prime_m1, ctx.digits - 10)},
             {"log2", fmt_real(c.log2, ctx.digits - 10)},
             {"c1", fmt_real(d.c1, ctx.digits - 10)},
             {"c2", fmt_real(d.c2, ctx.digits - 10)},
             {"c_of_0", fmt_real(c_of_lambda(zero, ctx), ctx.digits - 10)},
             {"lambda_c", fmt_real(lc, ctx.digits - 10)},
             {"f1_at_lambda_c", fmt_real(sd.f1, ctx.digits - 10)},
             {"f1p_at_lambda_c", fmt_real(sd.f1p, ctx.digits - 10)}};
      for (auto it = o.begin(); it != o.end(); ++it) say(g, it.key() + " " + it.value().get<std::string>());
      emit(g, report_document("constants", {{"digits", std::to_string(ctx.digits)}}, o,
                              {{"total_s", timer.seconds()}}));
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
