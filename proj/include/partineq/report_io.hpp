#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "partineq/verifier.hpp"

namespace partineq {

using Json = nlohmann::ordered_json;

/// Version tag carried by every JSON document (see docs/report-schema.md).
inline constexpr const char* kReportSchema = "partineq-report/1";

/// {"schema": ..., "kind": kind, "data": data}
Json envelope(const std::string& kind, Json data);

Json to_json(const InjectionParams& params);
Json to_json(const CaseLabel& label);
Json to_json(const InequalityResult& r, Int L, Int s, Int k, Int N);
Json to_json(const InjectionReport& r);
Json to_json(const PositivityReport& r);
Json to_json(const TableResult& t);
Json to_json(const SuiteSummary& s);
/// Coefficients n = lo..hi as [[n, "c_n"], ...]; big values stay exact as strings.
Json series_to_json(const TruncatedSeries& f, Int lo, Int hi);

/// RFC 4180 style, header line first, "\n" line endings.
std::string series_to_csv(const TruncatedSeries& f, Int lo, Int hi);
std::string to_csv(const PositivityReport& r);
std::string to_csv(const std::vector<InjectionReport>& reports);
std::string to_csv(const TableResult& t);
std::string to_csv(const SuiteSummary& s);

}  // namespace partineq
