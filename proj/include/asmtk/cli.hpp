#pragma once

// Command-line front end. run_cli() parses argv, dispatches to the library
// and writes to the given streams.
//
// Exit codes: 0 success (or every check passed), 1 a verification failed,
// 2 usage or limit error.

#include "asmtk/combinatorics.hpp"
#include "asmtk/formulas.hpp"
#include "asmtk/operator_formula.hpp"
#include "asmtk/report_json.hpp"
#include "asmtk/verifier.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace asmtk {

namespace cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// Size caps for the direct commands.
struct CliLimits {
  std::size_t closed_form_n = 200;
  std::size_t brute_n = 7;
  std::size_t enumerate_n = 6;
  std::size_t row_length = 7;        // operator formula
  std::size_t brute_row_length = 12; // triangle recursion
  std::size_t side_brute_n = 5;
  std::size_t side_brute_k = 9;
  std::size_t side_k = 400;
  std::size_t dpp_n = 40;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Row parse_row(const std::string& text) {
  Row row;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad row entry '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad row entry '" + item + "'");
    row.push_back(value);
  }
  if (row.empty()) throw UsageError("row is empty");
  return row;
}

inline void check_cap(const char* what, std::size_t value, std::size_t cap) {
  if (value > cap) {
    throw LimitError(std::string(what) + " = " + std::to_string(value) + " exceeds the limit " +
                     std::to_string(cap));
  }
}

inline void check_positive(const char* what, std::size_t value) {
  if (value < 1) throw UsageError(std::string(what) + " must be at least 1");
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t > 0) out += sep;
    if constexpr (std::is_same_v<T, Integer>) {
      out += to_string(values[t]);
    } else {
      out += std::to_string(values[t]);
    }
  }
  return out;
}

inline Json integers_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline Json row_json(const Row& row) {
  Json out = Json::array();
  for (auto v : row) out.push_back(v);
  return out;
}

/// Parsed options shared by all subcommands.
struct Options {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string row;
  bool brute = false;
  bool json = false;
  bool last = false;
  // verify
  std::vector<std::string> suites;
  std::optional<std::size_t> n_cap;
  std::optional<std::size_t> poly_max_n;
  std::optional<std::size_t> lemma_k_max_n;
  std::optional<std::size_t> brute_max_n;
  std::optional<std::size_t> matrix_max_n;
  std::optional<std::size_t> closed_form_max_n;
  std::optional<std::size_t> q_order;
  std::optional<std::size_t> ideal_max_n;
  std::optional<std::size_t> side_max_n;
  std::optional<std::size_t> side_max_k;
  std::size_t threads = 0;
  bool list = false;
};

inline void emit(std::ostream& out, const Options& o, Json record, const std::string& plain) {
  if (o.json) {
    out << record.dump() << '\n';
  } else {
    out << plain << '\n';
  }
}

inline int run_count(const Options& o, const CliLimits& lim, std::ostream& out) {
  check_positive("--n", o.n);
  check_cap("--n", o.n, o.brute ? lim.brute_n : lim.closed_form_n);
  const Integer value = o.brute ? count_asms_brute(o.n) : asm_total(o.n);
  emit(out, o,
       Json{{"command", "count"}, {"n", o.n}, {"method", o.brute ? "brute" : "formula"}, {"value", to_string(value)}},
       to_string(value));
  return kOk;
}

inline int run_refined(const Options& o, const CliLimits& lim, std::ostream& out) {
  check_positive("--n", o.n);
  check_cap("--n", o.n, o.brute ? lim.brute_n : lim.closed_form_n);
  const std::vector<Integer> values = o.brute ? refined_counts_brute(o.n) : refined_table(o.n);
  emit(out, o,
       Json{{"command", "refined"}, {"n", o.n}, {"method", o.brute ? "brute" : "formula"},
            {"values", integers_json(values)}},
       join(values));
  return kOk;
}

inline int run_alpha(const Options& o, const CliLimits& lim, std::ostream& out) {
  if (o.row.empty()) throw UsageError("alpha needs --row");
  const Row row = parse_row(o.row);
  Integer value;
  if (o.brute) {
    check_cap("row length", row.size(), lim.brute_row_length);
    value = alpha_brute(row);
  } else {
    check_cap("row length", row.size(), lim.row_length);
    value = alpha_eval(row, FormulaLimits{lim.row_length});
  }
  emit(out, o,
       Json{{"command", "alpha"}, {"row", row_json(row)}, {"method", o.brute ? "brute" : "formula"},
            {"value", to_string(value)}},
       to_string(value));
  return kOk;
}

inline int run_alpha_poly(const Options& o, const CliLimits& lim, std::ostream& out) {
  check_positive("--n", o.n);
  check_cap("--n", o.n, lim.row_length);
  const FormulaLimits limits{lim.row_length};
  const std::string text =
      o.last ? alpha_last_var_poly(o.n, limits).to_string() : alpha_poly(o.n, limits).poly().to_string();
  emit(out, o,
       Json{{"command", "alpha-poly"}, {"n", o.n}, {"last", o.last}, {"poly", text}}, text);
  return kOk;
}

inline int run_enumerate(const Options& o, const CliLimits& lim, std::ostream& out) {
  if (!o.row.empty()) {
    const Row row = parse_row(o.row);
    check_cap("row length", row.size(), lim.enumerate_n);
    require_strictly_increasing(row);
    TriangleEnumerator it(row);
    std::size_t count = 0;
    while (auto t = it.next()) {
      ++count;
      if (o.json) {
        Json rows = Json::array();
        for (const auto& r : t->rows()) rows.push_back(row_json(r));
        out << Json{{"triangle", rows}}.dump() << '\n';
      } else {
        out << t->to_string() << '\n';
      }
    }
    if (o.json) out << Json{{"summary", {{"count", count}}}}.dump() << '\n';
    else out << "count " << count << '\n';
    return kOk;
  }
  check_positive("--n", o.n);
  check_cap("--n", o.n, lim.enumerate_n);
  const auto asms = enumerate_asms(o.n);
  for (const auto& m : asms) {
    if (o.json) {
      out << Json{{"matrix", m.to_nested()}}.dump() << '\n';
    } else {
      out << m.to_string() << '\n';
    }
  }
  if (o.json) out << Json{{"summary", {{"count", asms.size()}}}}.dump() << '\n';
  else out << "count " << asms.size() << '\n';
  return kOk;
}

inline int run_side(const Options& o, const CliLimits& lim, std::ostream& out) {
  check_positive("--n", o.n);
  if (o.k < o.n) throw UsageError("side needs --k >= --n");
  if (o.brute) {
    check_cap("--n", o.n, lim.side_brute_n);
    check_cap("--k", o.k, lim.side_brute_k);
  } else {
    check_cap("--n", o.n, lim.closed_form_n);
    check_cap("--k", o.k, lim.side_k);
  }
  const Integer value = o.brute ? count_side_matrices_brute(o.n, o.k) : side_formula(o.n, o.k);
  emit(out, o,
       Json{{"command", "side"}, {"n", o.n}, {"k", o.k}, {"method", o.brute ? "brute" : "formula"},
            {"value", to_string(value)}},
       to_string(value));
  return kOk;
}

inline int run_dpp(const Options& o, const CliLimits& lim, std::ostream& out) {
  if (o.n < 2) throw UsageError("dpp needs --n >= 2");
  check_cap("--n", o.n, lim.dpp_n);
  const Integer value = to_integer(dpp_determinant(o.n));
  emit(out, o, Json{{"command", "dpp"}, {"n", o.n}, {"value", to_string(value)}}, to_string(value));
  return kOk;
}

inline VerifyConfig verify_config(const Options& o) {
  VerifyConfig c = o.n_cap ? VerifyConfig::capped(*o.n_cap) : VerifyConfig{};
  auto set = [](std::size_t& field, const std::optional<std::size_t>& value) {
    if (value) field = *value;
  };
  set(c.poly_max_n, o.poly_max_n);
  set(c.lemma_k_max_n, o.lemma_k_max_n);
  set(c.brute_max_n, o.brute_max_n);
  set(c.matrix_max_n, o.matrix_max_n);
  set(c.closed_form_max_n, o.closed_form_max_n);
  set(c.q_order, o.q_order);
  set(c.ideal_max_n, o.ideal_max_n);
  set(c.side_max_n, o.side_max_n);
  set(c.side_max_k, o.side_max_k);
  c.suites = o.suites;
  c.threads = o.threads;
  return c;
}

inline std::string params_text(const CheckParams& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + "=" + std::to_string(value);
  }
  return out;
}

inline int verify_exit_code(const VerificationReport& report) { return report.all_passed() ? kOk : kFailed; }

inline int run_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& name : suite_names()) out << name << '\n';
    return kOk;
  }
  const VerifyConfig config = verify_config(o);
  const VerificationReport report = run_all(config);
  if (o.json) {
    write_report(out, report);
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.params.empty()) out << ' ' << params_text(c.params);
      out << '\n';
      if (!c.passed) out << "  lhs: " << c.lhs << "\n  rhs: " << c.rhs << '\n';
    }
    const ReportSummary s = report.summary();
    out << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << '\n';
  }
  return verify_exit_code(report);
}

}  // namespace cli

/// Runs the command line in argv against the given streams and returns the
/// process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   const cli::CliLimits& limits = {}) {
  using namespace cli;
  Options o;
  CLI::App app{"Alternating sign matrices, monotone triangles and the operator formula", "asmtk"};
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", o.n, "size");
    if (required) opt->required();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "line-delimited JSON output"); };
  auto add_brute = [&](CLI::App* sub) {
    sub->add_flag("--brute", o.brute, "count by enumeration instead of the closed form");
  };

  auto* count = app.add_subcommand("count", "number of n x n alternating sign matrices");
  add_n(count, true);
  add_brute(count);
  add_json(count);

  auto* refined = app.add_subcommand("refined", "refined counts A(n,1), ..., A(n,n)");
  add_n(refined, true);
  add_brute(refined);
  add_json(refined);

  auto* alpha = app.add_subcommand("alpha", "number of monotone triangles with a given bottom row");
  alpha->add_option("--row", o.row, "strictly increasing, comma separated")->required();
  alpha->add_flag("--brute", o.brute, "use the triangle recursion instead of the operator formula");
  add_json(alpha);

  auto* alpha_poly_cmd = app.add_subcommand("alpha-poly", "operator formula as a polynomial in k1..kn");
  add_n(alpha_poly_cmd, true);
  alpha_poly_cmd->add_flag("--last", o.last, "specialize to (1, ..., n-1, k)");
  add_json(alpha_poly_cmd);

  auto* enumerate = app.add_subcommand("enumerate", "list n x n ASMs, or triangles with --row");
  add_n(enumerate, false);
  enumerate->add_option("--row", o.row, "bottom row; lists monotone triangles");
  add_json(enumerate);

  auto* side = app.add_subcommand("side", "generalized n x k matrices, columns n..k-1 summing to 0");
  add_n(side, true);
  side->add_option("--k", o.k, "number of columns")->required();
  add_brute(side);
  add_json(side);

  auto* dpp = app.add_subcommand("dpp", "descending plane partition determinant");
  add_n(dpp, true);
  add_json(dpp);

  auto* verify = app.add_subcommand("verify", "run the identity checks");
  verify->add_option("--suite", o.suites, "suite to run (repeatable); default all");
  verify->add_flag("--list", o.list, "list suite names");
  verify->add_option("--n-cap", o.n_cap, "cap every size at this value");
  verify->add_option("--poly-max-n", o.poly_max_n);
  verify->add_option("--lemma-k-max-n", o.lemma_k_max_n);
  verify->add_option("--brute-max-n", o.brute_max_n);
  verify->add_option("--matrix-max-n", o.matrix_max_n);
  verify->add_option("--closed-form-max-n", o.closed_form_max_n);
  verify->add_option("--q-order", o.q_order);
  verify->add_option("--ideal-max-n", o.ideal_max_n);
  verify->add_option("--side-max-n", o.side_max_n);
  verify->add_option("--side-max-k", o.side_max_k);
  verify->add_option("--threads", o.threads, "worker threads; 0 uses all cores");
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) return run_count(o, limits, out);
    if (refined->parsed()) return run_refined(o, limits, out);
    if (alpha->parsed()) return run_alpha(o, limits, out);
    if (alpha_poly_cmd->parsed()) return run_alpha_poly(o, limits, out);
    if (enumerate->parsed()) return run_enumerate(o, limits, out);
    if (side->parsed()) return run_side(o, limits, out);
    if (dpp->parsed()) return run_dpp(o, limits, out);
    if (verify->parsed()) return run_verify(o, out);
  } catch (const LimitError& e) {
    err << "limit error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace asmtk
