#include <json.hpp>
#include <optional>

#include "cursor.hpp"
#include "heiscat/symfunc.hpp"

namespace heiscat {

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    out += detail::signed_prefix(c, first, true);
    out += basis_letter(basis_);
    out += lambda.str();
    first = false;
  }
  return out;
}

SymFunc SymFunc::parse(std::string_view text) {
  detail::Cursor cur(text);
  if (cur.done()) throw ParseError("empty symmetric function literal", 0);
  std::optional<SymFunc> result;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.eat('+')) {
      if (first) cur.fail("leading '+'");
    } else if (cur.eat('-')) {
      sign = -1;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    Rational coeff = 1;
    if (cur.at_digit()) coeff = cur.read_rational();
    const char letter = cur.peek();
    if (std::string_view("mehps").find(letter) == std::string_view::npos || letter == '\0')
      cur.fail("expected a basis letter m, e, h, p or s");
    cur.advance();
    if (cur.peek_raw() != '[') cur.fail("expected '['");
    const std::size_t open = cur.pos();
    std::vector<int> parts;
    cur.expect('[');
    if (!cur.eat(']')) {
      do {
        parts.push_back(cur.read_int());
      } while (cur.eat(','));
      cur.expect(']');
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] < 1 || (i + 1 < parts.size() && parts[i] < parts[i + 1]))
        throw ParseError("parts must be positive and weakly decreasing", open);
    const Basis b = basis_from_letter(letter);
    SymFunc term = SymFunc::term(b, Partition(parts), sign * coeff);
    result = result ? *result + term : term;
    first = false;
  }
  return *result;
}

std::string SymFunc::to_json() const {
  nlohmann::ordered_json j;
  j["basis"] = basis_name(basis_);
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [lambda, c] : terms_) {
    nlohmann::ordered_json t;
    t["partition"] = lambda.parts();
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

SymFunc SymFunc::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    const std::string name = j.at("basis").get<std::string>();
    Basis basis = Basis::schur;
    bool known = false;
    for (Basis b : {Basis::monomial, Basis::elementary, Basis::complete, Basis::powersum, Basis::schur})
      if (basis_name(b) == name) {
        basis = b;
        known = true;
      }
    if (!known) throw ParseError("unknown basis '" + name + "'", 0);
    Terms terms;
    for (const auto& t : j.at("terms")) {
      // num/den may be strings (arbitrary precision) or plain integers.
      auto read = [](const nlohmann::json& v) {
        return v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long>());
      };
      const Integer den = read(t.at("den"));
      if (den == 0) throw ParseError("zero denominator", 0);
      Rational c(read(t.at("num")), den);
      c.canonicalize();
      Partition lambda(t.at("partition").get<std::vector<int>>());
      terms[lambda] += c;
    }
    return SymFunc(basis, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace heiscat
