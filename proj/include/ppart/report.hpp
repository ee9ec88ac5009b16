#pragma once

#include "ppart/circle.hpp"
#include "ppart/dedekind.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ppart {

using Json = nlohmann::ordered_json;

// {schema_version, command, inputs, outputs, timings}
Json report_document(const std::string& command, Json inputs, Json outputs, Json timings);
std::string dump(const Json& doc);

std::string fmt_real(const Real& x, int decimals = 10);
std::string fmt_complex(const Complex& z, int decimals = 10);

Json to_json(const PhiBreakdown& b, bool with_terms);
Json to_json(const EstimateReport& r);
Json to_json(const DedekindSummary& s);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string str() const;
};

CsvTable per_m_table(const PhiBreakdown& b);

void write_file(const std::string& path, const std::string& content);

// "2,3,10-20,primes:211-997"
std::vector<long> parse_k_list(const std::string& spec);

}  // namespace ppart
