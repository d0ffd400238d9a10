#pragma once

// Text and JSON forms.
//
//   field spec   "gf2:<n>[:<modulus-hex>]", always written with the modulus
//   element      lowercase hex of the integer encoding, zero-padded to whole bytes
//   polynomial   {"n": n, "coeffs": [hex, ...]}, coeffs[i] multiplies X^(2^i)
//   triple       {"field", "family", "m", "params", "phi1", "phi2", "phi3"}
//   truth table  {"kind": "boolean_function", "n", "field", "origin", "table"}
//                where hex digit k of "table" holds bits 4k..4k+3, bit 4k in
//                the digit's least significant position
//   spectrum     CSV "index,value" or a summary object

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bentlab/error.hpp"
#include "bentlab/field.hpp"
#include "bentlab/linpoly.hpp"
#include "bentlab/triples.hpp"
#include "bentlab/walsh.hpp"
#include "json.hpp"

namespace bentlab::io {

using Json = nlohmann::ordered_json;

inline std::uint64_t parse_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("not a hex number: '" + std::string(text) + "'");
  }
  return value;
}

inline std::string to_hex(std::uint64_t value, int digits) {
  std::string s(static_cast<std::size_t>(digits), '0');
  static constexpr char kDigits[] = "0123456789abcdef";
  for (int i = digits - 1; i >= 0 && value != 0; --i, value >>= 4) s[i] = kDigits[value & 15u];
  if (value != 0) throw InvalidArgument("value does not fit the requested hex width");
  return s;
}

inline int element_hex_width(const Field& f) { return 2 * ((f.degree() + 7) / 8); }

inline std::string format_element(const Field& f, Element e) {
  f.check(e);
  return to_hex(e.value(), element_hex_width(f));
}

inline Element parse_element(const Field& f, std::string_view text) { return f.element(parse_hex(text)); }

inline std::string format_field(const Field& f) {
  std::string modulus_hex = to_hex(f.modulus(), (f.degree() + 4) / 4);
  return "gf2:" + std::to_string(f.degree()) + ":" + modulus_hex;
}

inline Field parse_field(std::string_view spec) {
  if (!spec.starts_with("gf2:")) throw InvalidArgument("field spec must look like gf2:<n>[:<modulus-hex>]");
  spec.remove_prefix(4);
  const auto colon = spec.find(':');
  const std::string_view degree_text = spec.substr(0, colon);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(degree_text.data(), degree_text.data() + degree_text.size(), n);
  if (degree_text.empty() || ec != std::errc() || ptr != degree_text.data() + degree_text.size()) {
    throw InvalidArgument("bad field degree in spec");
  }
  if (colon == std::string_view::npos) return Field(n);
  const std::uint64_t modulus = parse_hex(spec.substr(colon + 1));
  if (modulus > 0xffffffffu) throw InvalidArgument("modulus too large");
  return Field(n, static_cast<Word>(modulus));
}

inline Json poly_to_json(const LinearizedPoly& p) {
  Json coeffs = Json::array();
  for (Element c : p.coeffs()) coeffs.push_back(format_element(p.field(), c));
  return Json{{"n", p.degree()}, {"coeffs", coeffs}};
}

inline LinearizedPoly poly_from_json(const Field& f, const Json& j) {
  if (j.at("n").get<int>() != f.degree()) throw InvalidArgument("polynomial degree does not match field");
  std::vector<Element> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_element(f, c.get<std::string>()));
  return LinearizedPoly(f, std::move(coeffs));
}

// "c0*X + c1*X^2 + c2*X^4 + ..." with zero terms dropped; "0" for the zero map.
inline std::string format_poly(const LinearizedPoly& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    const Element c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += format_element(p.field(), c) + "*X";
    if (i > 0) out += "^" + std::to_string(std::uint64_t{1} << i);
  }
  return out.empty() ? "0" : out;
}

inline LinearizedPoly parse_poly(const Field& f, std::string_view text) {
  LinearizedPoly p(f);
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return p;
  while (!text.empty()) {
    const auto plus = text.find('+');
    const std::string_view term = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
    const auto star = term.find("*X");
    if (star == std::string_view::npos) throw InvalidArgument("polynomial term must look like <hex>*X^<2^i>");
    const Element c = parse_element(f, term.substr(0, star));
    std::string_view rest = term.substr(star + 2);
    std::uint64_t exponent = 1;
    if (!rest.empty()) {
      if (rest.front() != '^') throw InvalidArgument("polynomial term must look like <hex>*X^<2^i>");
      rest.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) throw InvalidArgument("bad exponent");
    }
    if (!std::has_single_bit(exponent)) throw InvalidArgument("exponent of a linearized term must be a power of two");
    p.accumulate(std::countr_zero(exponent), c);
  }
  return p;
}

inline Json params_to_json(const Field& f, const ParamSet& params) {
  Json j = Json::object();
  for (const auto& [name, value] : params) j[name] = format_element(f, value);
  return j;
}

inline ParamSet params_from_json(const Field& f, const Json& j) {
  ParamSet params;
  for (const auto& [name, value] : j.items()) params[name] = parse_element(f, value.get<std::string>());
  return params;
}

inline Json triple_to_json(const PermutationTriple& t) {
  return Json{{"field", format_field(t.field)},
              {"family", std::string(to_string(t.family))},
              {"m", t.m},
              {"params", params_to_json(t.field, t.params)},
              {"phi1", poly_to_json(t.phi[0])},
              {"phi2", poly_to_json(t.phi[1])},
              {"phi3", poly_to_json(t.phi[2])}};
}

// The three polynomials are taken as written; family metadata is carried
// along but not re-validated (verification is the caller's job).
inline PermutationTriple triple_from_json(const Json& j) {
  const Field f = parse_field(j.at("field").get<std::string>());
  PermutationTriple t{f,
                      {poly_from_json(f, j.at("phi1")), poly_from_json(f, j.at("phi2")), poly_from_json(f, j.at("phi3"))},
                      j.contains("family") ? parse_family(j.at("family").get<std::string>()) : Family::custom,
                      j.value("m", 0),
                      j.contains("params") ? params_from_json(f, j.at("params")) : ParamSet{}};
  return t;
}

inline Json an_report_to_json(const AnReport& r) {
  return Json{{"each_permutation", {r.each_permutation[0], r.each_permutation[1], r.each_permutation[2]}},
              {"sum_is_permutation", r.sum_is_permutation},
              {"inverse_sum_identity", r.inverse_sum_identity},
              {"satisfied", r.satisfied}};
}

inline Json e_report_to_json(const EUnionReport& r) {
  return Json{{"e12", r.e12},
              {"e13", r.e13},
              {"e23", r.e23},
              {"e_union", r.e_union},
              {"covers_field", r.covers_field},
              {"mm_sufficient", r.mm_sufficient}};
}

inline std::string table_to_hex(const BooleanFunction& fn) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t digits = (fn.size() + 3) / 4;
  std::string s(digits, '0');
  for (std::uint64_t k = 0; k < digits; ++k) {
    const std::uint64_t word = fn.words()[(4 * k) >> 6];
    s[k] = kDigits[(word >> ((4 * k) & 63)) & 15u];
  }
  return s;
}

inline BooleanFunction table_from_hex(const Field& f, std::string_view hex) {
  BooleanFunction fn(f);
  const std::uint64_t digits = (fn.size() + 3) / 4;
  if (hex.size() != digits) throw InvalidArgument("truth table has the wrong number of hex digits");
  for (std::uint64_t k = 0; k < digits; ++k) {
    const std::uint64_t nibble = parse_hex(hex.substr(k, 1));
    for (int b = 0; b < 4 && 4 * k + b < fn.size(); ++b) fn.set(4 * k + b, (nibble >> b) & 1u);
  }
  return fn;
}

inline Json function_to_json(const BooleanFunction& fn, const std::optional<PermutationTriple>& origin = std::nullopt) {
  return Json{{"kind", "boolean_function"},
              {"n", fn.field().degree()},
              {"field", format_field(fn.field())},
              {"origin", origin ? triple_to_json(*origin) : Json(nullptr)},
              {"table", table_to_hex(fn)}};
}

inline BooleanFunction function_from_json(const Json& j) {
  const Field f = parse_field(j.at("field").get<std::string>());
  if (j.at("n").get<int>() != f.degree()) throw InvalidArgument("truth table degree does not match field");
  return table_from_hex(f, j.at("table").get<std::string>());
}

inline Json spectrum_summary(const WalshSpectrum& s, std::uint64_t weight) {
  return Json{{"max_abs", s.max_abs}, {"is_bent", is_bent(s)}, {"nonlinearity", nonlinearity(s)}, {"weight", weight}};
}

inline std::string spectrum_csv(const WalshSpectrum& s) {
  std::ostringstream out;
  out << "index,value\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) out << i << ',' << s.values[i] << '\n';
  return out.str();
}

}  // namespace bentlab::io
