#include "pfshuffle/serialize.hpp"

#include <json.hpp>

#include "pfshuffle/error.hpp"

namespace pfshuffle {

using json = nlohmann::ordered_json;

namespace {

json coeff_array(const std::vector<mpz_class>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

mpz_class parse_big(const json& j) {
  if (!j.is_string()) throw ParseError("coefficient must be a decimal string");
  mpz_class c;
  const std::string s = j.get<std::string>();
  if (s.empty() || c.set_str(s, 10) != 0) throw ParseError("bad decimal integer '" + s + "'");
  return c;
}

std::vector<mpz_class> parse_coeffs(const json& j) {
  if (!j.is_array()) throw ParseError("\"coeffs\" must be an array");
  std::vector<mpz_class> out;
  out.reserve(j.size());
  for (const auto& c : j) out.push_back(parse_big(c));
  return out;
}

json parse_object(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ParseError("expected a JSON object");
  return j;
}

void expect_var_q(const json& j) {
  if (!j.contains("var") || j["var"] != "q") throw ParseError("expected \"var\":\"q\"");
  if (!j.contains("coeffs")) throw ParseError("missing \"coeffs\"");
}

std::string term_string(const mpz_class& c, const std::string& mono) {
  if (mono.empty()) return c.get_str();
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return c.get_str() + mono;
}

std::string power(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_json(const QPoly& p) {
  json j;
  j["var"] = "q";
  j["coeffs"] = coeff_array(p.coeffs());
  return j.dump();
}

std::string to_json(const QLaurent& p) {
  json j;
  j["var"] = "q";
  j["offset"] = p.offset();
  j["coeffs"] = coeff_array(p.coeffs());
  return j.dump();
}

std::string to_json(const QTPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e.q, e.t, c.get_str()}));
  json j;
  j["vars"] = json::array({"q", "t"});
  j["terms"] = std::move(terms);
  return j.dump();
}

QPoly qpoly_from_json(std::string_view text) {
  const json j = parse_object(text);
  expect_var_q(j);
  if (j.contains("offset")) throw ParseError("QPoly has no \"offset\"");
  return QPoly(parse_coeffs(j["coeffs"]));
}

QLaurent qlaurent_from_json(std::string_view text) {
  const json j = parse_object(text);
  expect_var_q(j);
  if (!j.contains("offset") || !j["offset"].is_number_integer()) {
    throw ParseError("QLaurent needs an integer \"offset\"");
  }
  return QLaurent(j["offset"].get<int>(), parse_coeffs(j["coeffs"]));
}

QTPoly qtpoly_from_json(std::string_view text) {
  const json j = parse_object(text);
  if (!j.contains("vars") || j["vars"] != json::array({"q", "t"})) {
    throw ParseError("expected \"vars\":[\"q\",\"t\"]");
  }
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing \"terms\" array");
  QTPoly p;
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() ||
        !term[1].is_number_integer()) {
      throw ParseError("each term must be [i, j, \"c\"]");
    }
    p.add_term(term[0].get<int>(), term[1].get<int>(), parse_big(term[2]));
  }
  return p;
}

std::string to_coeff_list(const QPoly& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ' ';
    out += c.get_str();
  }
  return out;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const mpz_class& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += term_string(c, power("q", i));
  }
  return out;
}

std::string to_string(const QTPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += term_string(c, power("q", e.q) + power("t", e.t));
  }
  return out;
}

}  // namespace pfshuffle
