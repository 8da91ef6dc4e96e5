#include "heiscat/weyl.hpp"

#include <string>
#include <vector>

#include "cursor.hpp"

namespace heiscat {

namespace {

constexpr int kClosedFormThreshold = 2;

void add_term(WeylElement::Terms& terms, std::pair<int, int> key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Words over {'x','d'} rewritten with dx -> xd + 1 until sorted.
WeylElement::Terms normal_order_word(const std::string& start, const Integer& coeff) {
  std::map<std::string, Integer> pending{{start, coeff}};
  WeylElement::Terms out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const auto pos = w.find("dx");
    if (pos == std::string::npos) {
      const auto a = static_cast<int>(w.find('d') == std::string::npos ? w.size() : w.find('d'));
      add_term(out, {a, static_cast<int>(w.size()) - a}, node.mapped());
      continue;
    }
    std::string swapped = w;
    swapped[pos] = 'x';
    swapped[pos + 1] = 'd';
    std::string dropped = w.substr(0, pos) + w.substr(pos + 2);
    pending[swapped] += node.mapped();
    pending[dropped] += node.mapped();
  }
  return out;
}

std::string letters(int a, int b) { return std::string(static_cast<std::size_t>(a), 'x') + std::string(static_cast<std::size_t>(b), 'd'); }

WeylElement::Terms product_of_monomials(int a, int b, int c, int e) {
  WeylElement::Terms out;
  if (b >= kClosedFormThreshold && c >= kClosedFormThreshold) {
    for (int k = 0; k <= std::min(b, c); ++k)
      add_term(out, {a + c - k, b + e - k}, binomial(b, k) * binomial(c, k) * factorial(k));
    return out;
  }
  return normal_order_word(letters(a, b) + letters(c, e), 1);
}

}  // namespace

WeylElement::WeylElement(Terms terms) {
  for (auto& [key, c] : terms) {
    if (key.first < 0 || key.second < 0) throw PreconditionError("negative Weyl exponent");
    if (c != 0) terms_.emplace(key, std::move(c));
  }
}

WeylElement WeylElement::monomial(int a, int b, const Integer& coeff) { return WeylElement(Terms{{{a, b}, coeff}}); }

WeylElement WeylElement::operator+(const WeylElement& other) const {
  WeylElement r = *this;
  for (const auto& [key, c] : other.terms_) add_term(r.terms_, key, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& other) const { return *this + other * Integer(-1); }

WeylElement WeylElement::operator*(const Integer& scalar) const {
  WeylElement r;
  if (scalar != 0)
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, c * scalar);
  return r;
}

WeylElement weyl_multiply(const WeylElement& u, const WeylElement& v) {
  WeylElement::Terms out;
  for (const auto& [ab, cu] : u.terms())
    for (const auto& [ce, cv] : v.terms())
      for (const auto& [key, c] : product_of_monomials(ab.first, ab.second, ce.first, ce.second))
        add_term(out, key, c * cu * cv);
  return WeylElement(std::move(out));
}

WeylElement weyl_multiply_by_rewriting(const WeylElement& u, const WeylElement& v) {
  WeylElement::Terms out;
  for (const auto& [ab, cu] : u.terms())
    for (const auto& [ce, cv] : v.terms())
      for (const auto& [key, c] :
           normal_order_word(letters(ab.first, ab.second) + letters(ce.first, ce.second), cu * cv))
        add_term(out, key, c);
  return WeylElement(std::move(out));
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest total degree first reads naturally; the map order is by (a, b).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [a, b] = it->first;
    const Integer& c = it->second;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Integer mag = abs(c);
    std::string mono;
    auto power = [](const char* var, int e) { return e == 1 ? std::string(var) : var + ("^" + std::to_string(e)); };
    if (a > 0) mono += power("x", a);
    if (b > 0) mono += std::string(mono.empty() ? "" : " ") + power("d", b);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + " ";
      out += mono;
    }
    first = false;
  }
  return out;
}

WeylElement WeylElement::parse(std::string_view text) {
  detail::Cursor cur(text);
  if (cur.done()) throw ParseError("empty Weyl literal", 0);
  Terms terms;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.eat('-')) {
      sign = -1;
    } else if (!cur.eat('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    Integer coeff = 1;
    bool has_coeff = false;
    if (cur.at_digit()) {
      coeff = cur.read_int();
      has_coeff = true;
    }
    int a = 0;
    int b = 0;
    bool has_factor = false;
    for (;;) {
      const char c = cur.peek();
      if (c != 'x' && c != 'd') break;
      cur.advance();
      int e = 1;
      if (cur.eat('^')) e = cur.read_int();
      (c == 'x' ? a : b) += e;
      // x after d is not normal order; reject rather than silently reorder.
      if (c == 'x' && b > 0) cur.fail("x after d in a term");
      has_factor = true;
    }
    if (!has_coeff && !has_factor) cur.fail("expected a term");
    add_term(terms, {a, b}, sign * coeff);
    first = false;
  }
  return WeylElement(std::move(terms));
}

// ---- lattices --------------------------------------------------------------

std::string lattice_name(Lattice l) { return l == Lattice::divided_powers ? "R" : "Rprime"; }

PolyVector PolyVector::basis(Lattice lattice, int n) { return PolyVector{lattice, {{n, 1}}}; }

PolyVector& PolyVector::prune() {
  for (auto it = coeffs.begin(); it != coeffs.end();) it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  return *this;
}

std::string PolyVector::str() const {
  std::string out = "lattice:" + lattice_name(lattice) + " [";
  const int top = coeffs.empty() ? -1 : coeffs.rbegin()->first;
  for (int n = 0; n <= top; ++n) {
    if (n) out += ',';
    auto it = coeffs.find(n);
    out += it == coeffs.end() ? "0" : it->second.get_str();
  }
  return out + "]";
}

PolyVector PolyVector::parse(std::string_view text) {
  detail::Cursor cur(text);
  if (!cur.eat_word("lattice:")) cur.fail("expected 'lattice:'");
  PolyVector v;
  if (cur.eat_word("Rprime") || cur.eat_word("R'")) {
    v.lattice = Lattice::monomials;
  } else if (cur.eat_word("R")) {
    v.lattice = Lattice::divided_powers;
  } else {
    cur.fail("expected lattice R or Rprime");
  }
  cur.expect('[');
  if (!cur.eat(']')) {
    int n = 0;
    do {
      const bool negative = cur.eat('-');
      Integer c = cur.read_int();
      v.coeffs[n++] = negative ? Integer(-c) : c;
    } while (cur.eat(','));
    cur.expect(']');
  }
  if (!cur.done()) cur.fail("trailing characters");
  v.prune();
  return v;
}

PolyVector weyl_apply(const WeylElement& u, const PolyVector& v) {
  PolyVector out{v.lattice, {}};
  for (const auto& [ab, c] : u.terms()) {
    const auto [a, b] = ab;
    for (const auto& [n, vc] : v.coeffs) {
      if (n < b) continue;
      // d^b first, then x^a.
      Integer coeff = c * vc;
      int m = n;
      if (v.lattice == Lattice::monomials) {
        for (int k = 0; k < b; ++k) coeff *= m--;
        m += a;
      } else {
        m -= b;
        for (int k = 1; k <= a; ++k) coeff *= m + k;
        m += a;
      }
      out.coeffs[m] += coeff;
    }
  }
  return out.prune();
}

Integer weyl_pairing(const PolyVector& v, const PolyVector& w) {
  if (v.lattice != Lattice::monomials || w.lattice != Lattice::divided_powers)
    throw LatticeMismatch("pairing takes a vector of Rprime and a vector of R, got " + lattice_name(v.lattice) +
                          " and " + lattice_name(w.lattice));
  Integer total = 0;
  for (const auto& [n, c] : v.coeffs)
    if (auto it = w.coeffs.find(n); it != w.coeffs.end()) total += c * it->second;
  return total;
}

}  // namespace heiscat
