// partineq: command-line front end. See README.md for the grammar.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "partineq/arith.hpp"
#include "partineq/injections.hpp"
#include "partineq/partition.hpp"
#include "partineq/qseries.hpp"
#include "partineq/report_io.hpp"
#include "partineq/thresholds.hpp"
#include "partineq/verifier.hpp"

namespace pi = partineq;
using pi::BigInt;
using pi::Int;
using pi::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Range {
  Int lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const Int v = std::stoll(text);
      return {v, v};
    }
    Range r{std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    if (r.hi < r.lo) throw UsageError(std::string(what) + " range is empty: " + text);
    return r;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("cannot parse ") + what + " range '" + text + "' (expected n or lo:hi)");
  }
}

std::string plain_parts(const pi::Partition& p) {
  std::string out;
  for (const auto& e : p.entries())
    for (Int i = 0; i < e.freq; ++i) out += (out.empty() ? "" : ",") + std::to_string(e.part);
  return out;
}

// Numbers when they fit in 64 bits, decimal strings otherwise.
Json num(const BigInt& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

pi::SetSpec make_family(const std::string& name, Int L, Int s, Int k) {
  if (name == "D") return pi::SetSpec::D(L, s);
  if (name == "I") {
    if (k == 0) throw UsageError("family I needs --k");
    return pi::SetSpec::I(L, s, k);
  }
  if (name == "C") return pi::SetSpec::C(L, s);
  if (name == "Cstar") return pi::SetSpec::Cstar(L, s);
  if (name == "A") return pi::SetSpec::A(L, s);
  if (name == "B") return pi::SetSpec::B(L, s);
  if (name == "E") return pi::SetSpec::E(L, s);
  if (name == "F") return pi::SetSpec::F(L, s);
  throw UsageError("unknown family '" + name + "' (expected D, I, C, Cstar, A, B, E or F)");
}

pi::SeriesSelector make_series(const std::string& name, Int L, Int s, Int k) {
  if (name == "H") {
    if (k == 0) throw UsageError("series H needs --k");
    return pi::SeriesSelector::H(L, s, k);
  }
  if (name == "G2") return pi::SeriesSelector::G2(L);
  if (name == "lemma14") return pi::SeriesSelector::Lemma14(L, s);
  throw UsageError("unknown series '" + name + "' (expected H, G2 or lemma14)");
}

std::string check_mark(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted partition inequalities: counting, series, injections and verification"};
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  // Shared parameter storage; each subcommand registers what it uses.
  Int L = 0, s = 0, k = 0, T = -1;
  std::string family = "D", series_name = "H", theorem_name, partition_text, n_text, id;
  bool literal = false;
  Int cap = pi::kDefaultEnumerationCap;

  auto add_Lsk = [&](CLI::App* sub, bool need_s) {
    sub->add_option("--L", L, "L")->required();
    auto* so = sub->add_option("--s", s, "s");
    if (need_s) so->required();
    sub->add_option("--k", k, "k (impermissible part)");
  };

  auto* count_cmd = app.add_subcommand("count", "Count a partition family at weight N or over a range");
  count_cmd->add_option("--family", family, "D, I, C, Cstar, A, B, E or F")->capture_default_str();
  add_Lsk(count_cmd, true);
  count_cmd->add_option("--N", n_text, "n or lo:hi")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "List the members of a family at weight N");
  enum_cmd->add_option("--family", family, "D, I, C, Cstar, A, B, E or F")->capture_default_str();
  add_Lsk(enum_cmd, true);
  enum_cmd->add_option("--N", n_text, "weight")->required();
  enum_cmd->add_option("--cap", cap, "largest N allowed")->capture_default_str();

  auto* coeff_cmd = app.add_subcommand("coeff", "One coefficient of H, G2 or lemma14");
  coeff_cmd->add_option("--series", series_name, "H, G2 or lemma14")->capture_default_str();
  add_Lsk(coeff_cmd, false);
  coeff_cmd->add_option("--N", n_text, "exponent")->required();

  auto* series_cmd = app.add_subcommand("series", "Coefficients of H, G2 or lemma14");
  series_cmd->add_option("--series", series_name, "H, G2 or lemma14")->capture_default_str();
  add_Lsk(series_cmd, false);
  series_cmd->add_option("--N", n_text, "exponent range lo:hi (default 0:T)");
  series_cmd->add_option("--T", T, "truncation order (default: upper end of --N)");

  auto add_theorem = [&](CLI::App* sub) {
    sub->add_option("--theorem", theorem_name, "T8, T9, T10, T12, T16, T17, T18, T19 or L14easy")->required();
    sub->add_option("--L", L, "L")->required();
    sub->add_option("--s", s, "s (T16-T19: 2)");
    sub->add_option("--k", k, "k (T8: L+s-1, T16-T19: L)");
    sub->add_flag("--literal", literal, "T16: keep the unrepaired Case 2(A) at s(pi) = L+2");
  };

  auto* inject_cmd = app.add_subcommand("inject", "Apply an injection to a partition");
  add_theorem(inject_cmd);
  inject_cmd->add_option("--partition", partition_text, "e.g. 3,5 or 2^3,5")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Case of a partition under an injection");
  add_theorem(classify_cmd);
  classify_cmd->add_option("--partition", partition_text, "e.g. 3,5 or 2^3,5")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Strictness witness of weight N");
  add_theorem(witness_cmd);
  witness_cmd->add_option("--N", n_text, "weight")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Verification workflows");
  verify_cmd->require_subcommand(1);
  auto* v_ineq = verify_cmd->add_subcommand("inequality", "|I(L,s,k)| versus |D(L,s)| at weight N");
  add_Lsk(v_ineq, true);
  v_ineq->add_option("--N", n_text, "n or lo:hi")->required();
  auto* v_inj = verify_cmd->add_subcommand("injection", "Check an injection on every domain partition");
  add_theorem(v_inj);
  v_inj->add_option("--N", n_text, "n or lo:hi")->required();
  auto* v_pos = verify_cmd->add_subcommand("positivity", "Scan a series for negative coefficients");
  v_pos->add_option("--series", series_name, "H, G2 or lemma14")->capture_default_str();
  add_Lsk(v_pos, false);
  v_pos->add_option("--N", n_text, "range lo:hi")->required();
  v_pos->add_option("--T", T, "truncation order (default: upper end of --N)");

  auto* tables_cmd = app.add_subcommand("tables", "Recompute a reference table and compare");
  tables_cmd->add_option("--id", id, "T4, T5, T6, T7 or all")->required();

  std::string L_range = "", s_range = "";
  Int k_extra = -1, N_max = -1;
  unsigned jobs = 1;
  auto* suite_cmd = app.add_subcommand("suite", "Run a conjecture suite over a parameter grid");
  suite_cmd->add_option("--id", id, "C1, C2, C3 or C5")->required();
  suite_cmd->add_option("--L", L_range, "L range lo:hi");
  suite_cmd->add_option("--s", s_range, "s range lo:hi");
  suite_cmd->add_option("--k-extra", k_extra, "C3: k runs up to L+s+k_extra");
  suite_cmd->add_option("--N", N_max, "largest N");
  suite_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  std::string solve_kind = "sylvester";
  Int a = 0, b = 0, n = 0;
  auto* solve_cmd = app.add_subcommand("solve", "Nonnegative solutions of the linear equations used by the maps");
  solve_cmd->add_option("--kind", solve_kind, "sylvester, shared or simple")
      ->check(CLI::IsMember({"sylvester", "shared", "simple"}))
      ->capture_default_str();
  solve_cmd->add_option("--a", a, "a (simple: s)")->required();
  solve_cmd->add_option("--b", b, "b");
  solve_cmd->add_option("--n", n, "right-hand side")->required();

  auto* thr_cmd = app.add_subcommand("thresholds", "Threshold constants for (L, s)");
  thr_cmd->add_option("--L", L, "L")->required();
  thr_cmd->add_option("--s", s, "s")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const Format fmt = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;

  try {
    auto params = [&] {
      return pi::make_params(pi::parse_theorem(theorem_name), L, s, k, literal);
    };

    if (count_cmd->parsed()) {
      const pi::SetSpec spec = make_family(family, L, s, k);
      const Range r = parse_range(n_text, "N");
      const auto table = pi::count_table(spec, r.hi);
      if (fmt == Format::Json) {
        Json rows = Json::array();
        for (Int N = r.lo; N <= r.hi; ++N) rows.push_back(Json::array({N, num(table[N])}));
        Json d;
        d["family"] = spec.to_string();
        d["counts"] = rows;
        print_json(pi::envelope("count", d));
      } else if (fmt == Format::Csv || r.lo != r.hi) {
        std::cout << "N,count\n";
        for (Int N = r.lo; N <= r.hi; ++N) std::cout << N << "," << table[N].get_str() << "\n";
      } else {
        std::cout << table[r.hi].get_str() << "\n";
      }
      return kOk;
    }

    if (enum_cmd->parsed()) {
      const pi::SetSpec spec = make_family(family, L, s, k);
      const Range r = parse_range(n_text, "N");
      if (r.lo != r.hi) throw UsageError("enumerate takes a single N");
      const auto members = pi::enumerate(spec, r.lo, cap);
      if (fmt == Format::Json) {
        Json list = Json::array();
        for (const auto& p : members) list.push_back(p.to_string());
        Json d;
        d["family"] = spec.to_string();
        d["N"] = r.lo;
        d["members"] = list;
        print_json(pi::envelope("enumerate", d));
      } else {
        if (fmt == Format::Csv) std::cout << "partition\n";
        for (const auto& p : members)
          std::cout << (fmt == Format::Csv ? "\"" + p.to_string() + "\"" : p.to_string()) << "\n";
      }
      return kOk;
    }

    if (coeff_cmd->parsed()) {
      const Range r = parse_range(n_text, "N");
      if (r.lo != r.hi || r.lo < 0) throw UsageError("coeff takes a single nonnegative N");
      const pi::SeriesSelector sel = make_series(series_name, L, s, k);
      const BigInt c = sel.compute(r.lo).coeff(r.lo);
      if (fmt == Format::Json) {
        Json d;
        d["series"] = sel.to_string();
        d["N"] = r.lo;
        d["coefficient"] = num(c);
        print_json(pi::envelope("coeff", d));
      } else if (fmt == Format::Csv) {
        std::cout << "n,coefficient\n" << r.lo << "," << c.get_str() << "\n";
      } else {
        std::cout << c.get_str() << "\n";
      }
      return kOk;
    }

    if (series_cmd->parsed()) {
      Range r{0, T};
      if (!n_text.empty()) r = parse_range(n_text, "N");
      if (T < 0) T = r.hi;
      if (r.hi < 0) throw UsageError("series needs --T or --N");
      if (T < r.hi) throw UsageError("--T must be at least the upper end of --N");
      const pi::SeriesSelector sel = make_series(series_name, L, s, k);
      const pi::TruncatedSeries f = sel.compute(T);
      if (fmt == Format::Json) {
        Json d;
        d["series"] = sel.to_string();
        d["T"] = T;
        d["coefficients"] = pi::series_to_json(f, r.lo, r.hi);
        print_json(pi::envelope("series", d));
      } else if (fmt == Format::Csv) {
        std::cout << pi::series_to_csv(f, r.lo, r.hi);
      } else {
        for (Int N = r.lo; N <= r.hi; ++N) std::cout << N << " " << f.coeff(N).get_str() << "\n";
      }
      return kOk;
    }

    if (inject_cmd->parsed() || classify_cmd->parsed()) {
      const auto prm = params();
      const pi::Partition p = pi::Partition::parse(partition_text);
      const bool build = inject_cmd->parsed();
      const pi::Mapped m = build ? pi::map_partition(prm, p) : pi::Mapped{pi::classify(prm, p), {}};
      if (fmt == Format::Json) {
        Json d;
        d["params"] = pi::to_json(prm);
        d["partition"] = p.to_string();
        d["label"] = pi::to_json(m.label);
        if (build) {
          d["image"] = m.image.to_string();
          d["image_parts"] = m.image.parts();
        }
        print_json(pi::envelope(build ? "inject" : "classify", d));
      } else if (fmt == Format::Csv) {
        std::cout << (build ? "partition,case,image\n" : "partition,case\n");
        std::cout << "\"" << p.to_string() << "\"," << m.label.path_string();
        if (build) std::cout << ",\"" << plain_parts(m.image) << "\"";
        std::cout << "\n";
      } else if (build) {
        std::cout << plain_parts(m.image) << "\n" << "case " << m.label.path_string() << "\n";
      } else {
        std::cout << m.label.path_string() << "\n";
      }
      return kOk;
    }

    if (witness_cmd->parsed()) {
      const auto prm = params();
      const Range r = parse_range(n_text, "N");
      if (r.lo != r.hi) throw UsageError("witness takes a single N");
      const pi::Partition w = pi::witness(prm, r.lo);
      if (fmt == Format::Json) {
        Json d;
        d["params"] = pi::to_json(prm);
        d["N"] = r.lo;
        d["witness"] = w.to_string();
        print_json(pi::envelope("witness", d));
      } else if (fmt == Format::Csv) {
        std::cout << "N,witness\n" << r.lo << ",\"" << w.to_string() << "\"\n";
      } else {
        std::cout << w.to_string() << "\n";
      }
      return kOk;
    }

    if (v_ineq->parsed()) {
      const Range r = parse_range(n_text, "N");
      bool all_strict = true;
      Json rows = Json::array();
      if (fmt == Format::Csv) std::cout << "N,lhs,rhs,strict\n";
      for (Int N = r.lo; N <= r.hi; ++N) {
        const pi::InequalityResult res = pi::verify_inequality(L, s, k, N);
        all_strict = all_strict && res.strict;
        if (fmt == Format::Json) rows.push_back(pi::to_json(res, L, s, k, N));
        else if (fmt == Format::Csv)
          std::cout << N << "," << res.lhs.get_str() << "," << res.rhs.get_str() << "," << (res.strict ? "true" : "false")
                    << "\n";
        else
          std::cout << "N=" << N << " lhs=" << res.lhs.get_str() << " rhs=" << res.rhs.get_str()
                    << (res.strict ? " strict" : " not strict") << "\n";
      }
      if (fmt == Format::Json) print_json(pi::envelope("inequality", rows));
      return all_strict ? kOk : kFailed;
    }

    if (v_inj->parsed()) {
      const auto prm = params();
      const Range r = parse_range(n_text, "N");
      if (r.lo < 1) throw UsageError("N must be positive");
      std::vector<pi::InjectionReport> reports;
      const bool gl2 = prm.theorem == pi::Theorem::T16 || prm.theorem == pi::Theorem::T17 ||
                       prm.theorem == pi::Theorem::T18 || prm.theorem == pi::Theorem::T19;
      if (gl2) {
        for (auto& rep : pi::verify_gl2_exhaustive(prm, r.hi, pi::gl2_witness_from(prm)))
          if (rep.N >= r.lo) reports.push_back(std::move(rep));
      } else {
        for (Int N = r.lo; N <= r.hi; ++N) reports.push_back(pi::verify_injection(prm, N));
      }
      bool ok = true;
      for (const auto& rep : reports) ok = ok && rep.ok();
      if (fmt == Format::Json) {
        Json list = Json::array();
        for (const auto& rep : reports) list.push_back(pi::to_json(rep));
        print_json(pi::envelope("injection", list));
      } else if (fmt == Format::Csv) {
        std::cout << pi::to_csv(reports);
      } else {
        for (const auto& rep : reports) {
          std::cout << "N=" << rep.N << " domain=" << rep.domain_size << " image=" << rep.image_size
                    << " not_applicable=" << rep.not_applicable_count << " weight=" << check_mark(rep.weight_ok)
                    << " codomain=" << check_mark(rep.codomain_ok) << " injective=" << check_mark(rep.injective);
          if (rep.signature_checked) std::cout << " signature=" << check_mark(rep.signature_ok);
          if (rep.witness_attempted)
            std::cout << " witness=" << (rep.witness_found ? rep.witness->to_string() : "none");
          std::cout << "\n";
          for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
        }
      }
      return ok ? kOk : kFailed;
    }

    if (v_pos->parsed()) {
      const Range r = parse_range(n_text, "N");
      if (T < 0) T = r.hi;
      const pi::PositivityReport rep = pi::scan_positivity(make_series(series_name, L, s, k), r.lo, r.hi, T);
      if (fmt == Format::Json) {
        print_json(pi::envelope("positivity", pi::to_json(rep)));
      } else if (fmt == Format::Csv) {
        std::cout << pi::to_csv(rep);
      } else {
        std::cout << rep.series.to_string() << " on [" << rep.N_lo << ", " << rep.N_hi << "]\n";
        std::cout << "negative coefficients:";
        for (const auto& [N, c] : rep.violations) std::cout << " " << N << ":" << c.get_str();
        std::cout << (rep.violations.empty() ? " none\n" : "\n");
        std::cout << "positive from: "
                  << (rep.empirical_threshold ? std::to_string(*rep.empirical_threshold) : "not found") << "\n";
        std::cout << check_mark(rep.pass) << "\n";
      }
      return rep.pass ? kOk : kFailed;
    }

    if (tables_cmd->parsed()) {
      std::vector<std::string> ids = id == "all" ? pi::table_ids() : std::vector<std::string>{id};
      bool ok = true;
      Json list = Json::array();
      for (const auto& tid : ids) {
        const pi::TableResult t = pi::reproduce_table(tid);
        ok = ok && t.pass;
        if (fmt == Format::Json) {
          list.push_back(pi::to_json(t));
        } else if (fmt == Format::Csv) {
          std::cout << pi::to_csv(t);
        } else {
          std::cout << t.id << ": " << t.title << "\n";
          for (std::size_t c = 0; c < t.columns.size(); ++c) std::cout << (c ? "\t" : "") << t.columns[c];
          std::cout << "\n";
          for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "\t" : "") << row[c];
            std::cout << "\n";
          }
          for (const auto& c : t.checks)
            if (!c.pass) std::cout << "mismatch " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
          std::cout << check_mark(t.pass) << "\n";
        }
      }
      if (fmt == Format::Json) print_json(pi::envelope("tables", list));
      return ok ? kOk : kFailed;
    }

    if (suite_cmd->parsed()) {
      pi::SuiteConfig cfg = pi::SuiteConfig::defaults(id);
      if (!L_range.empty()) {
        const Range r = parse_range(L_range, "L");
        cfg.L_lo = r.lo, cfg.L_hi = r.hi;
      }
      if (!s_range.empty()) {
        const Range r = parse_range(s_range, "s");
        cfg.s_lo = r.lo, cfg.s_hi = r.hi;
      }
      if (k_extra >= 0) cfg.k_extra = k_extra;
      if (N_max >= 0) cfg.N_max = N_max;
      cfg.jobs = jobs;
      const pi::SuiteSummary sum = pi::run_conjecture_suite(cfg);
      if (fmt == Format::Json) {
        print_json(pi::envelope("suite", pi::to_json(sum)));
      } else if (fmt == Format::Csv) {
        std::cout << pi::to_csv(sum);
      } else {
        for (const auto& e : sum.entries) {
          std::cout << cfg.id << " L=" << e.L << " s=" << e.s << " k=" << e.k << " failures=";
          if (e.failures.empty()) std::cout << "none";
          for (std::size_t i = 0; i < e.failures.size(); ++i)
            std::cout << (i ? "," : "") << e.failures[i].first << ":" << e.failures[i].second.get_str();
          std::cout << " threshold="
                    << (e.empirical_threshold ? std::to_string(*e.empirical_threshold) : "not found") << " "
                    << check_mark(e.pass) << "\n";
        }
        std::cout << check_mark(sum.pass) << "\n";
      }
      return sum.pass ? kOk : kFailed;
    }

    if (solve_cmd->parsed()) {
      Json d;
      std::string text;
      if (solve_kind == "simple") {
        const pi::SimpleSolution sol = pi::simple_solve(a, n);
        Json counts = Json::object();
        std::ostringstream os;
        for (Int part = a + 1; part <= 2 * a + 1; ++part) {
          counts[std::to_string(part)] = sol.at(part);
          os << (part == a + 1 ? "" : " ") << "X" << part << "=" << sol.at(part);
        }
        d["kind"] = "simple";
        d["s"] = a;
        d["n"] = n;
        d["solution"] = counts;
        text = os.str();
      } else {
        const pi::PairSolution sol =
            solve_kind == "shared" ? pi::solve_pair_shared_factor(a, b, n) : pi::sylvester_solve(a, b, n);
        d["kind"] = solve_kind;
        d["a"] = a;
        d["b"] = b;
        d["n"] = n;
        d["x"] = sol.x;
        d["y"] = sol.y;
        text = "x=" + std::to_string(sol.x) + " y=" + std::to_string(sol.y);
      }
      if (fmt == Format::Json) print_json(pi::envelope("solve", d));
      else std::cout << text << "\n";
      return kOk;
    }

    if (thr_cmd->parsed()) {
      const pi::Thresholds t = pi::thresholds(L, s);
      if (fmt == Format::Json) {
        Json d;
        d["L"] = L;
        d["s"] = s;
        d["F"] = num(t.F);
        d["kappa"] = num(t.kappa);
        d["Fp"] = num(t.Fp);
        d["kappap"] = num(t.kappap);
        d["Fpp"] = num(t.Fpp);
        d["kappapp"] = num(t.kappapp);
        d["P"] = num(t.P);
        d["gamma"] = t.gamma.to_string();
        d["Gamma"] = t.Gamma.to_string();
        d["N_L"] = t.N_L;
        print_json(pi::envelope("thresholds", d));
      } else {
        std::cout << "F=" << t.F.get_str() << "\nkappa=" << t.kappa.get_str() << "\nFp=" << t.Fp.get_str()
                  << "\nkappap=" << t.kappap.get_str() << "\nFpp=" << t.Fpp.get_str()
                  << "\nkappapp=" << t.kappapp.get_str() << "\nP=" << t.P.get_str()
                  << "\ngamma=" << t.gamma.to_string() << "\nGamma=" << t.Gamma.to_string() << "\nN_L=" << t.N_L
                  << "\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const pi::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const pi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
