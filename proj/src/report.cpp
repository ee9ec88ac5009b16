#include "ppart/report.hpp"

#include <fstream>
#include <sstream>

namespace ppart {

Json report_document(const std::string& command, Json inputs, Json outputs, Json timings) {
  Json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["outputs"] = std::move(outputs);
  doc["timings"] = std::move(timings);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string fmt_real(const Real& x, int decimals) {
  // tiny magnitudes would print as zero in fixed notation
  if (!x.is_zero() && x.exponent10() < -decimals / 2) return x.to_sci(12);
  return x.to_fixed(decimals);
}

std::string fmt_complex(const Complex& z, int decimals) {
  std::string im = fmt_real(z.im, decimals);
  if (im[0] != '-') im = "+" + im;
  return fmt_real(z.re, decimals) + im + "i";
}

Json to_json(const PhiBreakdown& b, bool with_terms) {
  Json j;
  j["k"] = std::to_string(b.k);
  j["phi"] = fmt_real(b.phi_value);
  j["m_star_used"] = std::to_string(b.m_star_used);
  j["stop_reason"] = to_string(b.stop_reason);
  j["trunc_error_est"] = b.trunc_error_est.to_sci(6);
  j["terms_summed"] = std::to_string(b.terms.size());
  if (with_terms) {
    Json t = Json::array();
    for (const auto& r : b.terms) t.push_back({{"m", std::to_string(r.m)}, {"value", r.value.to_sci(20)}});
    j["terms"] = std::move(t);
  }
  return j;
}

Json to_json(const EstimateReport& r) {
  Json o;
  o["digits"] = std::to_string(r.ctx.digits);
  o["N_cutoff"] = std::to_string(r.N_cutoff);
  o["N_used"] = std::to_string(r.N_used);
  o["estimate"] = fmt_real(r.estimate, 6);
  o["rounded"] = r.rounded.get_str();
  o["estimated_error"] = r.estimated_error.to_sci(6);
  if (r.has_exact) {
    o["exact"] = r.exact.get_str();
    o["actual_error"] = r.actual_error.to_sci(6);
    o["digits_agreeing"] = std::to_string(r.digits_agreeing);
    o["total_digits"] = std::to_string(r.exact.get_str().size());
  }
  Json per = Json::array();
  for (const auto& b : r.per_k) per.push_back(to_json(b, false));
  o["per_k"] = std::move(per);
  o["probe"] = to_json(r.probe, false);
  return o;
}

Json to_json(const DedekindSummary& s) {
  Json o;
  o["C_hk"] = fmt_real(s.C_hk, 30);
  o["b_hk"] = s.has_b ? Json(fmt_real(s.b_hk, 30)) : Json(nullptr);
  o["v1"] = fmt_complex(s.v1, 30);
  o["reciprocity_residual"] = s.has_residual ? Json(s.residual.to_sci(12)) : Json(nullptr);
  Json flags = Json::array();
  for (const auto& v : s.bound_flags)
    flags.push_back({{"name", v.name},
                     {"applicable", v.applicable ? "true" : "false"},
                     {"pass", v.applicable ? (v.pass ? "true" : "false") : "skipped"}});
  o["bound_flags"] = std::move(flags);
  return o;
}

std::string CsvTable::str() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

CsvTable per_m_table(const PhiBreakdown& b) {
  CsvTable t;
  t.header = {"k", "m", "value", "abs_value", "summed"};
  auto add = [&](const TermRecord& r, bool summed) {
    t.rows.push_back({std::to_string(r.k), std::to_string(r.m), r.value.is_zero() ? "0" : r.value.to_sci(20),
                      r.abs_value.is_zero() ? "0" : r.abs_value.to_sci(20), summed ? "1" : "0"});
  };
  for (const auto& r : b.terms) add(r, true);
  for (const auto& r : b.tail) add(r, false);
  return t;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open " + path + " for writing");
  f << content;
  if (!f) throw DomainError("failed writing " + path);
}

std::vector<long> parse_k_list(const std::string& spec) {
  std::vector<long> out;
  std::stringstream ss(spec);
  std::string item;
  auto is_prime = [](long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
      if (p % f == 0) return false;
    return true;
  };
  auto to_long = [&](const std::string& s) {
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      throw DomainError("bad k-list entry: " + s);
    }
    if (pos != s.size() || v < 1) throw DomainError("bad k-list entry: " + s);
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    bool primes = false;
    if (item.rfind("primes:", 0) == 0) {
      primes = true;
      item = item.substr(7);
    }
    auto dash = item.find('-');
    long lo, hi;
    if (dash == std::string::npos) {
      lo = hi = to_long(item);
    } else {
      lo = to_long(item.substr(0, dash));
      hi = to_long(item.substr(dash + 1));
    }
    if (hi < lo) throw DomainError("bad k-list range: " + item);
    for (long k = lo; k <= hi; ++k)
      if (!primes || is_prime(k)) out.push_back(k);
  }
  if (out.empty()) throw DomainError("empty k-list");
  return out;
}

}  // namespace ppart
