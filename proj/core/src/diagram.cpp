#include "heiscat/diagram.hpp"

#include "cursor.hpp"

namespace heiscat {

std::string signature_str(const Signature& s) {
  std::string out;
  for (Orientation o : s) out += static_cast<char>(o);
  return out;
}

Signature parse_signature(std::string_view text) {
  Signature s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'U') {
      s.push_back(Orientation::up);
    } else if (text[i] == 'D') {
      s.push_back(Orientation::down);
    } else {
      throw ParseError("signature symbols are U and D", i);
    }
  }
  return s;
}

Signature all_up(int n) { return Signature(static_cast<std::size_t>(n), Orientation::up); }
Signature all_down(int n) { return Signature(static_cast<std::size_t>(n), Orientation::down); }

Signature Slice::apply(const Signature& below) const {
  const auto len = static_cast<int>(below.size());
  Signature above = below;
  const auto i = static_cast<std::size_t>(pos - 1);
  switch (kind) {
    case Kind::cross:
      if (pos < 1 || pos + 1 > len) throw IllFormedSlice(str() + " needs strands " + std::to_string(pos) + " and " + std::to_string(pos + 1) + " on " + signature_str(below));
      std::swap(above[i], above[i + 1]);
      return above;
    case Kind::cup:
      if (pos < 1 || pos > len + 1) throw IllFormedSlice(str() + " position outside " + signature_str(below));
      above.insert(above.begin() + static_cast<std::ptrdiff_t>(i),
                   {ccw ? Orientation::down : Orientation::up, ccw ? Orientation::up : Orientation::down});
      return above;
    case Kind::cap: {
      if (pos < 1 || pos + 1 > len) throw IllFormedSlice(str() + " needs strands " + std::to_string(pos) + " and " + std::to_string(pos + 1) + " on " + signature_str(below));
      const Orientation left = ccw ? Orientation::down : Orientation::up;
      const Orientation right = ccw ? Orientation::up : Orientation::down;
      if (below[i] != left || below[i + 1] != right)
        throw IllFormedSlice(str() + " cannot join " + signature_str({below[i], below[i + 1]}));
      above.erase(above.begin() + static_cast<std::ptrdiff_t>(i), above.begin() + static_cast<std::ptrdiff_t>(i + 2));
      return above;
    }
  }
  return above;
}

std::string Slice::str() const {
  switch (kind) {
    case Kind::cross: return "x" + std::to_string(pos);
    case Kind::cup: return std::string(ccw ? "cup+" : "cup-") + std::to_string(pos);
    case Kind::cap: return std::string(ccw ? "cap+" : "cap-") + std::to_string(pos);
  }
  return "?";
}

Diagram::Diagram(Signature domain, std::vector<Slice> slices)
    : domain_(std::move(domain)), codomain_(domain_), slices_(std::move(slices)) {
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    try {
      codomain_ = slices_[k].apply(codomain_);
    } catch (const IllFormedSlice& e) {
      throw IllFormedSlice("slice " + std::to_string(k + 1) + ": " + e.what());
    }
  }
}

Signature Diagram::level(std::size_t k) const {
  Signature s = domain_;
  for (std::size_t j = 0; j < k && j < slices_.size(); ++j) s = slices_[j].apply(s);
  return s;
}

std::string Diagram::str() const {
  std::string out = "sig:" + signature_str(domain_);
  for (const Slice& s : slices_) out += "; " + s.str();
  return out;
}

Diagram Diagram::parse(std::string_view text) {
  detail::Cursor cur(text);
  if (!cur.eat_word("sig:")) cur.fail("expected 'sig:'");
  Signature domain;
  while (cur.peek_raw() == 'U' || cur.peek_raw() == 'D') {
    domain.push_back(static_cast<Orientation>(cur.peek_raw()));
    cur.advance();
  }
  std::vector<Slice> slices;
  while (!cur.done()) {
    cur.expect(';');
    const bool cup = cur.eat_word("cup");
    if (cup || cur.eat_word("cap")) {
      bool ccw = true;
      if (cur.peek_raw() == '+') {
        ccw = true;
      } else if (cur.peek_raw() == '-') {
        ccw = false;
      } else {
        cur.fail("expected '+' or '-' after " + std::string(cup ? "cup" : "cap"));
      }
      cur.advance();
      if (!std::isdigit(static_cast<unsigned char>(cur.peek_raw()))) cur.fail("expected a position");
      const int pos = cur.read_int();
      slices.push_back(cup ? Slice::cup(pos, ccw) : Slice::cap(pos, ccw));
    } else if (cur.eat('x')) {
      if (!std::isdigit(static_cast<unsigned char>(cur.peek_raw()))) cur.fail("expected a position");
      slices.push_back(Slice::cross(cur.read_int()));
    } else {
      cur.fail("expected a slice xI, cup+I, cup-I, cap+I or cap-I");
    }
  }
  return Diagram(std::move(domain), std::move(slices));
}

std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
  if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
  return a.slices_ <=> b.slices_;
}

// ---- morphisms -------------------------------------------------------------

Morphism::Morphism(const Diagram& d) : domain_(d.domain()), codomain_(d.codomain()) { terms_.emplace(d, 1); }

void Morphism::add(const Diagram& d, const Rational& c) {
  if (d.domain() != domain_ || d.codomain() != codomain_)
    throw SignatureMismatch("diagram " + d.str() + " does not have boundary " + signature_str(domain_) + " -> " +
                            signature_str(codomain_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Morphism Morphism::operator+(const Morphism& other) const {
  if (other.domain_ != domain_ || other.codomain_ != codomain_)
    throw SignatureMismatch("adding morphisms with different boundaries");
  Morphism r = *this;
  for (const auto& [d, c] : other.terms_) r.add(d, c);
  return r;
}

Morphism Morphism::operator-(const Morphism& other) const { return *this + other * Rational(-1); }

Morphism Morphism::operator*(const Rational& scalar) const {
  Morphism r(domain_, codomain_);
  if (scalar != 0)
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, c * scalar);
  return r;
}

std::string Morphism::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    out += detail::signed_prefix(c, first, true);
    out += "[" + d.str() + "]";
    first = false;
  }
  return out;
}

Diagram compose(const Diagram& f, const Diagram& g) {
  if (g.codomain() != f.domain())
    throw SignatureMismatch("cannot compose: " + signature_str(g.codomain()) + " vs " + signature_str(f.domain()));
  std::vector<Slice> slices = g.slices();
  slices.insert(slices.end(), f.slices().begin(), f.slices().end());
  return Diagram(g.domain(), std::move(slices));
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  Signature domain = f.domain();
  domain.insert(domain.end(), g.domain().begin(), g.domain().end());
  std::vector<Slice> slices = f.slices();
  const auto shift = static_cast<int>(f.codomain().size());
  for (Slice s : g.slices()) {
    s.pos += shift;
    slices.push_back(s);
  }
  return Diagram(std::move(domain), std::move(slices));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (g.codomain() != f.domain())
    throw SignatureMismatch("cannot compose: " + signature_str(g.codomain()) + " vs " + signature_str(f.domain()));
  Morphism out(g.domain(), f.codomain());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) out.add(compose(df, dg), cf * cg);
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  Signature domain = f.domain();
  domain.insert(domain.end(), g.domain().begin(), g.domain().end());
  Signature codomain = f.codomain();
  codomain.insert(codomain.end(), g.codomain().begin(), g.codomain().end());
  Morphism out(domain, codomain);
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) out.add(tensor(df, dg), cf * cg);
  return out;
}

}  // namespace heiscat
