#include "pfshuffle/suites.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include <json.hpp>

#include "pfshuffle/bijections.hpp"
#include "pfshuffle/closedforms.hpp"
#include "pfshuffle/recursions.hpp"
#include "pfshuffle/serialize.hpp"

namespace pfshuffle::cli {

namespace {

using json = nlohmann::ordered_json;

std::string poly_cmd(int a, int b, std::optional<int> r, std::optional<int> s) {
  std::string cmd = "pfshuffle poly --a " + std::to_string(a) + " --b " + std::to_string(b);
  if (r) cmd += " --r " + std::to_string(*r);
  if (s) cmd += " --s " + std::to_string(*s);
  return cmd + " --check-all";
}

json params(std::initializer_list<std::pair<const char*, int>> kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

class Checker {
 public:
  Checker(SuiteResult& result) : result_(result) {}

  bool failed() const { return result_.counterexample.has_value(); }

  template <typename Poly>
  bool same(const std::string& check, json where, const Poly& expected, const Poly& actual,
            const std::string& reproduce) {
    ++result_.checks;
    if (expected == actual) return true;
    json cx;
    cx["suite"] = result_.suite;
    cx["check"] = check;
    cx["params"] = std::move(where);
    cx["expected"] = json::parse(to_json(expected));
    cx["actual"] = json::parse(to_json(actual));
    cx["reproduce"] = reproduce;
    result_.counterexample = cx.dump();
    return false;
  }

  bool holds(const std::string& check, json where, bool ok, const std::string& detail,
             const std::string& reproduce) {
    ++result_.checks;
    if (ok) return true;
    json cx;
    cx["suite"] = result_.suite;
    cx["check"] = check;
    cx["params"] = std::move(where);
    cx["detail"] = detail;
    cx["reproduce"] = reproduce;
    result_.counterexample = cx.dump();
    return false;
  }

  void note(std::string line) { result_.notes.push_back(std::move(line)); }

 private:
  SuiteResult& result_;
};

std::string verify_cmd(const std::string& suite, int n) {
  return "pfshuffle verify --suite " + suite + " --max-n " + std::to_string(n);
}

void suite_qara(Checker& c, int max_n, const EnumOptions& opt) {
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      for (int r = 0; r <= a; ++r)
        for (int s = 0; s <= b; ++s) {
          const QPoly enumerated = parkq_poly({a, b, r, s}, opt);
          const auto where = params({{"a", a}, {"b", b}, {"r", r}, {"s", s}});
          if (!c.same("thm_qara = parkq_poly", where, enumerated, thm_qara(a, b, r, s), poly_cmd(a, b, r, s)))
            return;
          if (a >= 1 && r == 0 && s < b &&
              !c.same("parkq_poly vanishes at r = 0", where, QPoly{}, enumerated, poly_cmd(a, b, r, s)))
            return;
        }
    }
}

void suite_isthm(Checker& c, int max_n, const EnumOptions& opt) {
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      for (int s = 0; s <= b; ++s)
        if (!c.same("thm_isthm = parkq_poly", params({{"a", a}, {"b", b}, {"s", s}}),
                    parkq_poly({a, b, std::nullopt, s}, opt), thm_isthm(a, b, s),
                    poly_cmd(a, b, std::nullopt, s)))
          return;
    }
  for (int a = 0; a <= max_n; ++a)
    for (int b = 0; b <= max_n; ++b)
      for (int s = 0; s <= b; ++s) {
        QPoly sum;
        for (int r = 0; r <= a; ++r) sum += thm_qara(a, b, r, s);
        if (!c.same("sum over r of thm_qara = thm_isthm", params({{"a", a}, {"b", b}, {"s", s}}), thm_isthm(a, b, s),
                    sum, verify_cmd("isthm", max_n)))
          return;
      }
}

void suite_wolf(Checker& c, int max_n, const EnumOptions& opt) {
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      if (!c.same("thm_wolf = parkq_poly", params({{"a", a}, {"b", b}}), parkq_poly({a, b, std::nullopt, std::nullopt}, opt), thm_wolf(a, b),
                  poly_cmd(a, b, std::nullopt, std::nullopt)))
        return;
    }
  for (int a = 0; a <= max_n; ++a)
    for (int b = 0; b <= max_n; ++b) {
      QPoly sum;
      for (int s = 0; s <= b; ++s) sum += thm_isthm(a, b, s);
      const auto where = params({{"a", a}, {"b", b}});
      if (!c.same("sum over s of thm_isthm = thm_wolf", where, thm_wolf(a, b), sum, verify_cmd("wolf", max_n)))
        return;
      if (a >= 1 && b >= 1 &&
          !c.same("thm_wolf = conj2_rhs((a,b))", where, conj2_rhs(ShuffleSpec({a, b})), thm_wolf(a, b),
                  verify_cmd("wolf", max_n)))
        return;
    }
}

void suite_conj2(Checker& c, int max_n, const EnumOptions& opt) {
  for (int n = 1; n <= max_n; ++n) {
    const auto specs = compositions(n);
    for (const auto& spec : specs) {
      json where;
      where["mu"] = spec.parts();
      if (!c.same("shuffle_enumerator = conj2_rhs", where, shuffle_enumerator(spec, opt), conj2_rhs(spec),
                  verify_cmd("conj2", n)))
        return;
    }
    c.note("n=" + std::to_string(n) + ": " + std::to_string(specs.size()) + " compositions checked");
  }
}

constexpr int kRecursionEnumCap = 10;

void suite_recursions(Checker& c, int max_n, const EnumOptions& opt) {
  for (int a = 0; a <= max_n; ++a)
    for (int b = 0; b <= max_n; ++b)
      for (int s = 0; s <= b; ++s) {
        for (int r = 0; r <= a; ++r)
          if (!c.same("recur_parkq_rs = thm_qara", params({{"a", a}, {"b", b}, {"r", r}, {"s", s}}),
                      thm_qara(a, b, r, s), recur_parkq_rs(a, b, r, s), poly_cmd(a, b, r, s)))
            return;
        if (!c.same("recur_parkq_s = thm_isthm", params({{"a", a}, {"b", b}, {"s", s}}), thm_isthm(a, b, s),
                    recur_parkq_s(a, b, s), poly_cmd(a, b, std::nullopt, s)))
          return;
      }
  const int enum_n = std::min(max_n, kRecursionEnumCap);
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      for (int s = 0; s <= b; ++s) {
        for (int r = 0; r <= a; ++r) {
          const auto where = params({{"a", a}, {"b", b}, {"r", r}, {"s", s}});
          const QTPoly qt = recur_parkqt_rs(a, b, r, s);
          if (n <= enum_n &&
              !c.same("recur_parkqt_rs = parkqt_poly", where, parkqt_poly({a, b, r, s}, opt), qt, poly_cmd(a, b, r, s)))
            return;
          if (!c.same("t = 1/q bridge (rs family)", where, recur_parkq_rs(a, b, r, s), bridge_to_q(qt, n),
                      poly_cmd(a, b, r, s)))
            return;
        }
        const auto where = params({{"a", a}, {"b", b}, {"s", s}});
        const QTPoly qt = recur_parkqt_s(a, b, s);
        if (n <= enum_n && !c.same("recur_parkqt_s = parkqt_poly", where, parkqt_poly({a, b, std::nullopt, s}, opt),
                                   qt, poly_cmd(a, b, std::nullopt, s)))
          return;
        if (!c.same("t = 1/q bridge (s family)", where, recur_parkq_s(a, b, s), bridge_to_q(qt, n),
                    poly_cmd(a, b, std::nullopt, s)))
          return;
      }
    }
  if (enum_n < max_n)
    c.note("(q,t) enumeration oracle capped at a+b <= " + std::to_string(enum_n) + "; symbolic checks ran to the full bound");
}

void suite_bijections(Checker& c, int max_n, const EnumOptions&) {
  std::size_t images = 0;
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      for (int s = 0; s <= b; ++s) {
        if (s < b)
          for (int r = 0; r <= a; ++r) {
            const AuditReport rep = audit_trecur(a, b, r, s);
            images += rep.family_size;
            if (!c.holds("trecur_map audit", params({{"a", a}, {"b", b}, {"r", r}, {"s", s}}), rep.ok, rep.failure,
                         verify_cmd("bijections", n)))
              return;
          }
        if (a >= 1) {
          const AuditReport rep = audit_tisrecur(a, b, s);
          images += rep.family_size;
          if (!c.holds("tisrecur_map audit", params({{"a", a}, {"b", b}, {"s", s}}), rep.ok, rep.failure,
                       verify_cmd("bijections", n)))
            return;
        }
      }
    }
  c.note(std::to_string(images) + " target tableaux covered");
}

constexpr int kRectPathCap = 8;

void suite_qbin(Checker& c, int max_n, const EnumOptions&) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= max_n; ++k)
      for (int m = 1; m <= n; ++m)
        if (!c.same("lemma_qbin_rhs = qbinom(n+k,n)", params({{"n", n}, {"k", k}, {"m", m}}), qbinom(n + k, n),
                    lemma_qbin_rhs(n, k, m), verify_cmd("qbin", max_n)))
          return;
  const int cap = std::min(max_n, kRectPathCap);
  for (int n = 0; n <= cap; ++n)
    for (int k = 0; k <= cap; ++k) {
      const QPoly expected = qbinom(n + k, k);
      if (!c.same("rect_path_poly = qbinom(n+k,k)", params({{"n", n}, {"k", k}}), expected, rect_path_poly(n, k),
                  verify_cmd("qbin", max_n)))
        return;
      for (int m = 1; m <= n; ++m)
        if (!c.same("split lattice-path form", params({{"n", n}, {"k", k}, {"m", m}}), expected,
                    rect_path_poly(n, k, m), verify_cmd("qbin", max_n)))
          return;
    }
  if (cap < max_n) c.note("lattice-path oracle capped at n,k <= " + std::to_string(cap));
}

void suite_principal(Checker& c, int max_n, const EnumOptions&) {
  for (int n1 = 1; n1 <= max_n; ++n1)
    for (int a = 0; a <= n1; ++a)
      if (!c.same("principal_e = q^C(a,2) [n+1,a]", params({{"a", a}, {"n", n1 - 1}}),
                  monomial_shift(qbinom(n1, a), choose2(a)), principal_e(a, n1 - 1), verify_cmd("principal", max_n)))
        return;
}

void suite_narayana(Checker& c, int max_n, const EnumOptions&) {
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      const mpz_class at_one = thm_wolf(a, b).at_one();
      const mpz_class expected = narayana(a + b + 1, a + 1);
      if (!c.holds("thm_wolf at q=1 = Narayana", params({{"a", a}, {"b", b}}), at_one == expected && narayana_check(a, b),
                   "thm_wolf(1) = " + at_one.get_str() + ", Narayana = " + expected.get_str(),
                   verify_cmd("narayana", max_n)))
        return;
    }
}

using SuiteFn = void (*)(Checker&, int, const EnumOptions&);

struct Entry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"qara", 12, "closed form for PF_{a,b}^{(r,s)} vs enumeration, a+b <= max-n"}, suite_qara},
      {{"isthm", 12, "closed form for PF_{a,b}^{(s)} vs enumeration, plus sum over r"}, suite_isthm},
      {{"wolf", 12, "closed form for PF_{a,b} vs enumeration, sum over s, two-part product"}, suite_wolf},
      {{"conj2", 8, "shuffle enumeration vs product formula, every composition of n <= max-n"}, suite_conj2},
      {{"recursions", 12, "recursions vs closed forms, (q,t) enumeration, t = 1/q bridge"}, suite_recursions},
      {{"bijections", 10, "exhaustive audits of both constructive bijections, a+b <= max-n"}, suite_bijections},
      {{"qbin", 12, "q-binomial split identity and lattice-path oracle"}, suite_qbin},
      {{"principal", 16, "brute-force principal specialization, n+1 <= max-n"}, suite_principal},
      {{"narayana", 40, "q = 1 specialization vs Narayana numbers, a+b <= max-n"}, suite_narayana},
  };
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& info : suites())
    if (name == info.name) return &info;
  return nullptr;
}

SuiteResult run_suite(const std::string& name, int max_n, const EnumOptions& options) {
  SuiteResult result;
  result.suite = name;
  result.max_n = max_n;
  Checker checker(result);
  for (const auto& e : entries())
    if (name == e.info.name) e.fn(checker, max_n, options);
  return result;
}

}  // namespace pfshuffle::cli
