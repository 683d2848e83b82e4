#include "partineq/report_io.hpp"

#include <algorithm>
#include <sstream>

namespace partineq {

namespace {

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

// Integers that fit go out as numbers, others as decimal strings.
Json number(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

Json pairs(const std::vector<std::pair<Int, BigInt>>& v) {
  Json out = Json::array();
  for (const auto& [n, c] : v) out.push_back(Json::array({n, number(c)}));
  return out;
}

Json optional_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

Json envelope(const std::string& kind, Json data) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = kind;
  j["data"] = std::move(data);
  return j;
}

Json to_json(const InjectionParams& p) {
  Json j;
  j["theorem"] = std::string(theorem_name(p.theorem));
  j["L"] = p.L;
  j["s"] = p.s;
  j["k"] = p.k;
  j["literal"] = p.literal;
  return j;
}

Json to_json(const CaseLabel& label) {
  Json j;
  j["theorem"] = std::string(theorem_name(label.theorem));
  j["case"] = label.path_string();
  Json sel = Json::object();
  for (const auto& [k, v] : label.selectors) sel[k] = number(v);
  j["selectors"] = sel;
  return j;
}

Json to_json(const InequalityResult& r, Int L, Int s, Int k, Int N) {
  Json j;
  j["L"] = L;
  j["s"] = s;
  j["k"] = k;
  j["N"] = N;
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["strict"] = r.strict;
  return j;
}

Json to_json(const InjectionReport& r) {
  Json j;
  j["params"] = to_json(r.params);
  j["N"] = r.N;
  j["method"] = r.method;
  j["domain_size"] = r.domain_size;
  j["image_size"] = r.image_size;
  j["not_applicable_count"] = r.not_applicable_count;
  j["weight_ok"] = r.weight_ok;
  j["codomain_ok"] = r.codomain_ok;
  j["injective"] = r.injective;
  j["signature_checked"] = r.signature_checked;
  j["signature_ok"] = r.signature_ok;
  j["witness_attempted"] = r.witness_attempted;
  j["witness_found"] = r.witness_found;
  j["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
  j["witness_note"] = r.witness_note;
  Json cases = Json::object();
  for (const auto& [k, v] : r.case_counts) cases[k] = v;
  j["case_counts"] = cases;
  j["failures"] = r.failures;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const PositivityReport& r) {
  Json j;
  j["series"] = r.series.to_string();
  j["N_lo"] = r.N_lo;
  j["N_hi"] = r.N_hi;
  j["T"] = r.T;
  j["violations"] = pairs(r.violations);
  j["empirical_threshold"] = optional_int(r.empirical_threshold);
  j["expected_exceptions"] = r.expected_exceptions;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const TableResult& t) {
  Json j;
  j["id"] = t.id;
  j["title"] = t.title;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  Json checks = Json::array();
  for (const NamedCheck& c : t.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["pass"] = t.pass;
  return j;
}

Json to_json(const SuiteSummary& s) {
  Json j;
  Json cfg;
  cfg["id"] = s.config.id;
  cfg["L"] = Json::array({s.config.L_lo, s.config.L_hi});
  cfg["s"] = Json::array({s.config.s_lo, s.config.s_hi});
  cfg["k_extra"] = s.config.k_extra;
  cfg["N_max"] = s.config.N_max;
  j["config"] = cfg;
  Json entries = Json::array();
  for (const SuiteEntry& e : s.entries) {
    Json ej;
    ej["L"] = e.L;
    ej["s"] = e.s;
    ej["k"] = e.k;
    ej["failures"] = pairs(e.failures);
    ej["empirical_threshold"] = optional_int(e.empirical_threshold);
    ej["expected_exceptions"] = e.expected_exceptions;
    ej["pass"] = e.pass;
    ej["note"] = e.note;
    entries.push_back(ej);
  }
  j["entries"] = entries;
  j["pass"] = s.pass;
  return j;
}

Json series_to_json(const TruncatedSeries& f, Int lo, Int hi) {
  Json out = Json::array();
  for (Int n = lo; n <= hi; ++n) out.push_back(Json::array({n, number(f.coeff(n))}));
  return out;
}

std::string series_to_csv(const TruncatedSeries& f, Int lo, Int hi) {
  std::string out = csv_line({"n", "coefficient"});
  for (Int n = lo; n <= hi; ++n) out += csv_line({std::to_string(n), f.coeff(n).get_str()});
  return out;
}

std::string to_csv(const PositivityReport& r) {
  std::string out = csv_line({"series", "n", "coefficient", "expected"});
  for (const auto& [n, c] : r.violations) {
    const bool expected =
        std::find(r.expected_exceptions.begin(), r.expected_exceptions.end(), n) != r.expected_exceptions.end();
    out += csv_line({r.series.to_string(), std::to_string(n), c.get_str(), yes(expected)});
  }
  return out;
}

std::string to_csv(const std::vector<InjectionReport>& reports) {
  std::string out = csv_line({"theorem", "L", "s", "k", "N", "method", "domain_size", "image_size",
                              "not_applicable", "weight_ok", "codomain_ok", "injective", "signature_ok",
                              "witness_found", "witness"});
  for (const InjectionReport& r : reports)
    out += csv_line({std::string(theorem_name(r.params.theorem)), std::to_string(r.params.L),
                     std::to_string(r.params.s), std::to_string(r.params.k), std::to_string(r.N), r.method,
                     std::to_string(r.domain_size), std::to_string(r.image_size),
                     std::to_string(r.not_applicable_count), yes(r.weight_ok), yes(r.codomain_ok),
                     yes(r.injective), yes(r.signature_ok), yes(r.witness_found),
                     r.witness ? r.witness->to_string() : ""});
  return out;
}

std::string to_csv(const TableResult& t) {
  std::string out = csv_line(t.columns);
  for (const auto& row : t.rows) out += csv_line(row);
  return out;
}

std::string to_csv(const SuiteSummary& s) {
  std::string out = csv_line({"id", "L", "s", "k", "failures", "empirical_threshold", "pass"});
  for (const SuiteEntry& e : s.entries) {
    std::ostringstream f;
    for (std::size_t i = 0; i < e.failures.size(); ++i)
      f << (i ? " " : "") << e.failures[i].first << ":" << e.failures[i].second.get_str();
    out += csv_line({s.config.id, std::to_string(e.L), std::to_string(e.s), std::to_string(e.k), f.str(),
                     e.empirical_threshold ? std::to_string(*e.empirical_threshold) : "", yes(e.pass)});
  }
  return out;
}

}  // namespace partineq
