#include "pfshuffle/cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfshuffle/closedforms.hpp"
#include "pfshuffle/error.hpp"
#include "pfshuffle/parkfun.hpp"
#include "pfshuffle/recursions.hpp"
#include "pfshuffle/serialize.hpp"
#include "pfshuffle/suites.hpp"

namespace pfshuffle::cli {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, Method> kMethods = {
    {"enumerate", Method::enumerate},
    {"formula", Method::formula},
    {"recursion", Method::recursion},
    {"qt-bridge", Method::qt_bridge},
};

const char* method_name(Method m) {
  for (const auto& [name, value] : kMethods)
    if (value == m) return name.c_str();
  return "?";
}

// Sums f(s) over s when the family leaves s free.
template <typename Poly, typename F>
Poly over_s(const Family& f, F per_s) {
  if (f.s) return per_s(*f.s);
  Poly sum;
  for (int s = 0; s <= f.b; ++s) sum += per_s(s);
  return sum;
}

QPoly by_formula(const Family& f) {
  if (f.r) return over_s<QPoly>(f, [&](int s) { return thm_qara(f.a, f.b, *f.r, s); });
  if (f.s) return thm_isthm(f.a, f.b, *f.s);
  return thm_wolf(f.a, f.b);
}

QPoly by_recursion(const Family& f) {
  if (f.r) return over_s<QPoly>(f, [&](int s) { return recur_parkq_rs(f.a, f.b, *f.r, s); });
  return over_s<QPoly>(f, [&](int s) { return recur_parkq_s(f.a, f.b, s); });
}

QTPoly by_qt_recursion(const Family& f) {
  if (f.r) return over_s<QTPoly>(f, [&](int s) { return recur_parkqt_rs(f.a, f.b, *f.r, s); });
  return over_s<QTPoly>(f, [&](int s) { return recur_parkqt_s(f.a, f.b, s); });
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- stats ----------------------------------------------------------------

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

void cmd_stats(const std::string& text, const std::optional<std::string>& mu, std::ostream& out) {
  const auto pf = ParkingFunction::parse(text);
  const int n = pf.size();
  const auto d = dinv(pf);
  const auto sigma = diagonal_word(pf);
  out << "n: " << n << "\n"
      << "area: " << area(pf) << "\n"
      << "coarea: " << coarea(pf) << "\n"
      << "dinv: " << d.total() << " (primary " << d.primary << ", secondary " << d.secondary << ")\n"
      << "diagonal word: " << join_ints(sigma) << "\n";

  std::vector<ShuffleSpec> specs;
  if (mu) {
    specs.push_back(ShuffleSpec::parse(*mu));
  } else {
    for (int a = 1; a < n; ++a) specs.emplace_back(std::vector<int>{a, n - a});
  }
  for (const auto& spec : specs) {
    const bool yes = is_shuffle(sigma, spec);
    out << "shuffle " << spec.to_text() << ": " << (yes ? "yes" : "no");
    if (yes && spec.parts().size() == 2) {
      const auto t = to_tableau(pf, spec.parts()[0]);
      const auto dc = diag_counts(t);
      out << " (r=" << dc.small << ", s=" << dc.big << ", tableau " << t.to_text() << ")";
    }
    out << "\n";
  }
}

// ---- poly -----------------------------------------------------------------

struct PolyArgs {
  int a = 0;
  int b = 0;
  std::optional<int> r;
  std::optional<int> s;
  std::string method = "formula";
  bool check_all = false;
};

int cmd_poly(const PolyArgs& args, const EnumOptions& opt, std::ostream& out, std::ostream& err) {
  const auto it = kMethods.find(args.method);
  if (it == kMethods.end()) throw Usage("unknown method '" + args.method + "'");
  const Family family{args.a, args.b, args.r, args.s};
  const QPoly result = compute_poly(family, it->second, opt);
  if (!args.check_all) {
    out << to_json(result) << "\n";
    return 0;
  }
  json all = json::object();
  bool agree = true;
  for (const auto& [name, m] : kMethods) {
    if (m == Method::enumerate && family.n() > kEnumerateMaxN) {
      err << "note: enumerate skipped, a+b > " << kEnumerateMaxN << "\n";
      continue;
    }
    const QPoly p = m == it->second ? result : compute_poly(family, m, opt);
    all[name] = json::parse(to_json(p));
    agree = agree && p == result;
  }
  if (agree) {
    out << to_json(result) << "\n";
    return 0;
  }
  json cx;
  cx["check"] = "methods disagree";
  cx["params"] = {{"a", args.a}, {"b", args.b}};
  if (args.r) cx["params"]["r"] = *args.r;
  if (args.s) cx["params"]["s"] = *args.s;
  cx["results"] = all;
  out << cx.dump() << "\n";
  return 1;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& suite, int max_n, const EnumOptions& opt, std::ostream& out) {
  const SuiteInfo* info = find_suite(suite);
  if (!info) {
    std::string names;
    for (const auto& s : suites()) names += std::string(names.empty() ? "" : ", ") + s.name;
    throw Usage("unknown suite '" + suite + "' (expected one of: " + names + ")");
  }
  if (max_n < 0 || max_n > info->max_n_limit)
    throw Usage("--max-n " + std::to_string(max_n) + " outside the feasible range 0.." +
                std::to_string(info->max_n_limit) + " for suite " + suite);
  const SuiteResult res = run_suite(suite, max_n, opt);
  out << "suite: " << res.suite << "\n"
      << "max-n: " << res.max_n << "\n"
      << "checks: " << res.checks << "\n";
  for (const auto& note : res.notes) out << note << "\n";
  if (res.ok()) {
    out << "result: PASS\n";
    return 0;
  }
  out << "result: FAIL\n"
      << "counterexample: " << *res.counterexample << "\n";
  return 1;
}

// ---- table ----------------------------------------------------------------

struct Row {
  int a, b;
  std::optional<int> r, s;
  QPoly poly;
};

std::vector<Row> table_rows(const std::string& target, int max_n) {
  std::vector<Row> rows;
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      if (target == "wolf") {
        rows.push_back({a, b, std::nullopt, std::nullopt, thm_wolf(a, b)});
      } else if (target == "isthm") {
        for (int s = 0; s <= b; ++s) rows.push_back({a, b, std::nullopt, s, thm_isthm(a, b, s)});
      } else {
        for (int r = 0; r <= a; ++r)
          for (int s = 0; s <= b; ++s) rows.push_back({a, b, r, s, thm_qara(a, b, r, s)});
      }
    }
  return rows;
}

std::string opt_text(const std::optional<int>& x) { return x ? std::to_string(*x) : std::string(); }

int cmd_table(const std::string& target, int max_n, const std::string& format, std::ostream& out) {
  if (target != "qara" && target != "isthm" && target != "wolf")
    throw Usage("unknown table target '" + target + "' (expected qara, isthm or wolf)");
  if (format != "csv" && format != "json") throw Usage("unknown format '" + format + "' (expected csv or json)");
  if (max_n < 0 || max_n > kSymbolicMaxN)
    throw Usage("--max-n must lie in 0.." + std::to_string(kSymbolicMaxN));
  const auto rows = table_rows(target, max_n);
  if (format == "csv") {
    out << "a,b,r,s,coeffs\n";
    for (const auto& row : rows)
      out << row.a << "," << row.b << "," << opt_text(row.r) << "," << opt_text(row.s) << ","
          << to_coeff_list(row.poly) << "\n";
    return 0;
  }
  json arr = json::array();
  for (const auto& row : rows) {
    json j;
    j["a"] = row.a;
    j["b"] = row.b;
    if (row.r) j["r"] = *row.r;
    if (row.s) j["s"] = *row.s;
    j["coeffs"] = json::parse(to_json(row.poly))["coeffs"];
    arr.push_back(std::move(j));
  }
  out << arr.dump(1) << "\n";
  return 0;
}

}  // namespace

QPoly compute_poly(const Family& family, Method method, const EnumOptions& options) {
  family.validate();
  const int n = family.n();
  const int cap = method == Method::enumerate ? kEnumerateMaxN : kSymbolicMaxN;
  if (n > cap)
    throw DomainError(std::string(method_name(method)) + ": a+b = " + std::to_string(n) +
                      " exceeds the feasibility bound " + std::to_string(cap));
  switch (method) {
    case Method::enumerate:
      return parkq_poly(family, options);
    case Method::formula:
      return by_formula(family);
    case Method::recursion:
      return by_recursion(family);
    case Method::qt_bridge:
      return bridge_to_q(by_qt_recursion(family), n);
  }
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shuffle parking functions: statistics, polynomials, verification suites", "pfshuffle"};
  app.require_subcommand(1);

  unsigned threads = 0;
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads for enumeration (0 = all cores)");
  };

  auto* stats = app.add_subcommand("stats", "statistics of a parking function given as \"u1,...,un;v1,...,vn\"");
  std::string pf_text;
  std::optional<std::string> mu;
  stats->add_option("pf", pf_text, "parking function")->required();
  stats->add_option("--mu", mu, "composition for the shuffle verdict, e.g. 3,5 (default: every two-part split)");
  add_threads(stats);

  auto* poly = app.add_subcommand("poly", "Parkq polynomial of PF_{a,b}, optionally restricted by r and s");
  PolyArgs pa;
  poly->add_option("--a", pa.a, "small cars")->required();
  poly->add_option("--b", pa.b, "big cars")->required();
  poly->add_option("--r", pa.r, "small cars on the main diagonal");
  poly->add_option("--s", pa.s, "big cars on the main diagonal");
  poly->add_option("--method", pa.method, "enumerate | formula | recursion | qt-bridge");
  poly->add_flag("--check-all", pa.check_all, "compute with every method and compare");
  add_threads(poly);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int max_n = 0;
  verify->add_option("--suite", suite, "qara | isthm | wolf | conj2 | recursions | bijections | qbin | principal | narayana")
      ->required();
  verify->add_option("--max-n", max_n, "size bound")->required();
  add_threads(verify);

  auto* table = app.add_subcommand("table", "tabulate closed forms");
  std::string target;
  std::string format = "csv";
  int table_max_n = 0;
  table->add_option("target,--target", target, "qara | isthm | wolf")->required();
  table->add_option("--max-n", table_max_n, "largest a+b")->required();
  table->add_option("--format", format, "csv | json");
  add_threads(table);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("pfshuffle");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const EnumOptions opt{threads};
  try {
    if (*stats) {
      cmd_stats(pf_text, mu, out);
      return 0;
    }
    if (*poly) return cmd_poly(pa, opt, out, err);
    if (*verify) return cmd_verify(suite, max_n, opt, out);
    if (*table) return cmd_table(target, table_max_n, format, out);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pfshuffle::cli
