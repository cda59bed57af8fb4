#pragma once

#include <cctype>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qchar/qpolynomial.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/ymonomial.hpp"

namespace qchar {

inline constexpr int schema_version = 1;

using Json = nlohmann::ordered_json;

/// Malformed input; what() names the location (line:column or JSON pointer).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A character together with the root datum it lives on. node is set for
/// characters of fundamental modules.
struct CharacterDocument {
  LieType type = LieType::A;
  int rank = 1;
  std::optional<Node> node;
  QCharacter character;
};

inline Json monomial_to_json(const YMonomial& m) {
  Json a = Json::array();
  for (const auto& f : m.factors()) a.push_back({f.node, f.shift, f.exponent});
  return a;
}

inline Json character_to_json(const QCharacter& chi) {
  Json terms = Json::array();
  for (const auto& [m, c] : chi.terms()) terms.push_back({{"m", monomial_to_json(m)}, {"c", c.str()}});
  return terms;
}

inline Json document_to_json(const CharacterDocument& doc) {
  Json j;
  j["schema"] = schema_version;
  j["type"] = std::string(1, to_char(doc.type));
  j["rank"] = doc.rank;
  if (doc.node) j["node"] = *doc.node;
  j["terms"] = character_to_json(doc.character);
  return j;
}

namespace detail {

[[noreturn]] inline void fail_at(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline int json_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail_at(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) fail_at(where, "integer out of range");
  return static_cast<int>(x);
}

inline Coeff json_coeff(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Coeff(v.get<long long>());
  if (!v.is_string()) fail_at(where, "expected a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail_at(where, "expected a positive decimal integer, got \"" + s + "\"");
  return Coeff(s);
}

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline YMonomial monomial_from_json(const Json& a, const std::string& where) {
  if (!a.is_array()) detail::fail_at(where, "expected an array of [node, shift, exponent]");
  YMonomial m;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::string w = where + "/" + std::to_string(k);
    if (!a[k].is_array() || a[k].size() != 3) detail::fail_at(w, "expected [node, shift, exponent]");
    m.multiply_factor(detail::json_int(a[k][0], w + "/0"), detail::json_int(a[k][1], w + "/1"),
                      detail::json_int(a[k][2], w + "/2"));
  }
  return m;
}

inline QCharacter character_from_json(const Json& terms, const std::string& where = "/terms") {
  if (!terms.is_array()) detail::fail_at(where, "expected an array of terms");
  QCharacter chi;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string w = where + "/" + std::to_string(k);
    const auto& t = terms[k];
    if (!t.is_object() || !t.contains("m") || !t.contains("c")) detail::fail_at(w, "expected {\"m\": ..., \"c\": ...}");
    const Coeff c = detail::json_coeff(t["c"], w + "/c");
    if (c == 0) detail::fail_at(w + "/c", "zero coefficient");
    chi.add(monomial_from_json(t["m"], w + "/m"), c);
  }
  return chi;
}

inline CharacterDocument document_from_json(const Json& j) {
  if (!j.is_object()) detail::fail_at("/", "expected an object");
  if (!j.contains("schema") || detail::json_int(j["schema"], "/schema") != schema_version)
    detail::fail_at("/schema", "unsupported or missing schema (expected " + std::to_string(schema_version) + ")");
  CharacterDocument doc;
  if (!j.contains("type") || !j["type"].is_string()) detail::fail_at("/type", "expected a type letter");
  try {
    doc.type = parse_lie_type(j["type"].get<std::string>());
  } catch (const std::exception& e) {
    detail::fail_at("/type", e.what());
  }
  if (!j.contains("rank")) detail::fail_at("/rank", "missing");
  doc.rank = detail::json_int(j["rank"], "/rank");
  if (j.contains("node")) doc.node = detail::json_int(j["node"], "/node");
  if (!j.contains("terms")) detail::fail_at("/terms", "missing");
  doc.character = character_from_json(j["terms"]);
  return doc;
}

inline CharacterDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(detail::line_column(text, e.byte) + ": " + e.what());
  }
  return document_from_json(j);
}

/// Parses the canonical text form "Y{1,0}^1 * Y{2,3}^-1" (or "1").
inline YMonomial parse_monomial(std::string_view s) {
  YMonomial m;
  std::size_t pos = 0;
  auto where = [&] { return "column " + std::to_string(pos + 1); };
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= s.size() || s[pos] != ch) detail::fail_at(where(), std::string("expected '") + ch + "'");
    ++pos;
  };
  auto integer = [&] {
    skip();
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1]))) {
      pos = start;
      detail::fail_at(where(), "expected an integer");
    }
    return std::stoi(std::string(s.substr(start, pos - start)));
  };
  skip();
  if (pos < s.size() && s[pos] == '1') {
    ++pos;
    skip();
    if (pos != s.size()) detail::fail_at(where(), "trailing input");
    return m;
  }
  while (true) {
    expect('Y');
    expect('{');
    const int i = integer();
    expect(',');
    const int n = integer();
    expect('}');
    int e = 1;
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = integer();
    }
    m.multiply_factor(i, n, e);
    skip();
    if (pos == s.size()) break;
    expect('*');
  }
  return m;
}

/// Parses a sum such as "[Y{1,0}^1] + 2*[Y{1,2}^-1]" as printed by
/// MonomialSum::to_string; brackets are optional around single monomials.
inline QCharacter parse_character_text(std::string_view s) {
  QCharacter chi;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t depth = 0, end = pos;
    for (; end < s.size(); ++end) {
      if (s[end] == '[' || s[end] == '{') ++depth;
      if (s[end] == ']' || s[end] == '}') --depth;
      if (depth == 0 && s[end] == '+') break;
    }
    std::string term(s.substr(pos, end - pos));
    const std::string where = "term at column " + std::to_string(pos + 1);
    auto first = term.find_first_not_of(" \t\n");
    if (first == std::string::npos) detail::fail_at(where, "empty term");
    term = term.substr(first, term.find_last_not_of(" \t\n") - first + 1);
    Coeff c = 1;
    if (std::isdigit(static_cast<unsigned char>(term[0])) && term.find('*') != std::string::npos &&
        term.find('*') < term.find_first_of("[Y")) {
      const auto star = term.find('*');
      auto digits = term.substr(0, star);
      digits.erase(digits.find_last_not_of(' ') + 1);
      if (digits.find_first_not_of("0123456789") != std::string::npos) detail::fail_at(where, "bad coefficient");
      c = Coeff(digits);
      term = term.substr(term.find_first_not_of(' ', star + 1));
    }
    if (term.front() == '[') {
      if (term.back() != ']') detail::fail_at(where, "unbalanced '['");
      term = term.substr(1, term.size() - 2);
    }
    try {
      chi.add(parse_monomial(term), c);
    } catch (const ParseError& e) {
      detail::fail_at(where, e.what());
    }
    pos = end + 1;
  }
  return chi;
}

}  // namespace qchar
