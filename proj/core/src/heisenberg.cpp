#include "heiscat/heisenberg.hpp"

#include <algorithm>
#include <json.hpp>

#include "cursor.hpp"

namespace heiscat {

namespace {

void add_term(HeisNormal::Terms& terms, const HeisNormal::Key& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Sorts every maximal run of letters of one kind; letters of one kind
// commute, so this picks a representative of the word.
void canonicalize(HeisWord& w) {
  std::size_t start = 0;
  while (start < w.size()) {
    std::size_t end = start;
    while (end < w.size() && w[end].kind == w[start].kind) ++end;
    std::sort(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(end),
              [](const HeisLetter& a, const HeisLetter& b) { return a.n > b.n; });
    start = end;
  }
}

HeisWord word_of(const HeisNormal::Key& key) {
  HeisWord w;
  for (int part : key.first.parts()) w.push_back(HeisLetter::E(part));
  for (int part : key.second.parts()) w.push_back(HeisLetter::Hstar(part));
  return w;
}

std::string partition_tag(const char* name, const Partition& p) { return std::string(name) + p.str(); }

}  // namespace

// ---- words -----------------------------------------------------------------

HeisWord parse_heis_word(std::string_view text) {
  detail::Cursor cur(text);
  HeisWord word;
  while (!cur.done()) {
    const char c = cur.peek();
    if (c != 'e' && c != 'h') cur.fail("expected a letter e<n> or h<n>*");
    cur.advance();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek_raw()))) cur.fail("expected an index");
    const int n = cur.read_int();
    if (n < 1) cur.fail("generator indices start at 1");
    if (c == 'e') {
      if (cur.peek_raw() == '*') cur.fail("e letters take no star");
      word.push_back(HeisLetter::E(n));
    } else {
      if (cur.peek_raw() != '*') cur.fail("h letters must be starred");
      cur.advance();
      word.push_back(HeisLetter::Hstar(n));
    }
    const char next = cur.peek_raw();
    if (next != '\0' && !std::isspace(static_cast<unsigned char>(next))) cur.fail("letters are separated by spaces");
  }
  return word;
}

std::string heis_word_str(const HeisWord& word) {
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    out += (l.kind == HeisLetter::Kind::e ? "e" : "h") + std::to_string(l.n);
    if (l.kind == HeisLetter::Kind::hstar) out += '*';
  }
  return out;
}

// ---- HeisNormal --------------------------------------------------------------

HeisNormal::HeisNormal(Terms terms) {
  for (auto& [key, c] : terms)
    if (c != 0) terms_.emplace(key, std::move(c));
}

HeisNormal HeisNormal::term(const Partition& e_part, const Partition& hstar_part, const Integer& coeff) {
  return HeisNormal(Terms{{{e_part, hstar_part}, coeff}});
}

HeisNormal HeisNormal::e(int n) {
  if (n < 0) return HeisNormal();
  return term(Partition::row(n), Partition());
}

HeisNormal HeisNormal::hstar(int n) {
  if (n < 0) return HeisNormal();
  return term(Partition(), Partition::row(n));
}

HeisNormal HeisNormal::operator+(const HeisNormal& other) const {
  HeisNormal r = *this;
  for (const auto& [key, c] : other.terms_) add_term(r.terms_, key, c);
  return r;
}

HeisNormal HeisNormal::operator-(const HeisNormal& other) const { return *this + other * Integer(-1); }

HeisNormal HeisNormal::operator*(const Integer& scalar) const {
  HeisNormal r;
  if (scalar != 0)
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, c * scalar);
  return r;
}

std::string HeisNormal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest terms first, so the constant term comes last.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    const bool unit = key.first.empty() && key.second.empty();
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Integer mag = abs(c);
    if (unit) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + " ";
      std::string mono;
      if (!key.first.empty()) mono += partition_tag("e", key.first);
      if (!key.second.empty()) mono += (mono.empty() ? "" : " ") + partition_tag("h*", key.second);
      out += mono;
    }
    first = false;
  }
  return out;
}

std::string HeisNormal::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, c] : terms_)
    arr.push_back({{"e_partition", key.first.parts()}, {"hstar_partition", key.second.parts()}, {"coeff", c.get_str()}});
  return arr.dump();
}

// ---- normal ordering -----------------------------------------------------

HeisNormal heis_normalize(const HeisWord& word) {
  std::map<HeisWord, Integer> pending;
  // e_0 = h_0* = 1, and letters with negative index vanish.
  HeisWord start;
  for (const auto& l : word) {
    if (l.n < 0) return HeisNormal();
    if (l.n > 0) start.push_back(l);
  }
  canonicalize(start);
  pending.emplace(std::move(start), 1);
  HeisNormal::Terms out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const HeisWord& w = node.key();
    std::size_t k = 0;
    while (k + 1 < w.size() &&
           !(w[k].kind == HeisLetter::Kind::hstar && w[k + 1].kind == HeisLetter::Kind::e))
      ++k;
    if (k + 1 >= w.size()) {
      std::vector<int> e_parts;
      std::vector<int> h_parts;
      for (const auto& l : w) (l.kind == HeisLetter::Kind::e ? e_parts : h_parts).push_back(l.n);
      add_term(out, {Partition(e_parts), Partition(h_parts)}, node.mapped());
      continue;
    }
    const int m = w[k].n;
    const int n = w[k + 1].n;
    // h_m* e_n -> e_n h_m* + e_{n-1} h_{m-1}*, dropping index-0 letters.
    HeisWord swapped(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    swapped.push_back(HeisLetter::E(n));
    swapped.push_back(HeisLetter::Hstar(m));
    swapped.insert(swapped.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
    HeisWord lowered(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    if (n > 1) lowered.push_back(HeisLetter::E(n - 1));
    if (m > 1) lowered.push_back(HeisLetter::Hstar(m - 1));
    lowered.insert(lowered.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
    canonicalize(swapped);
    canonicalize(lowered);
    pending[std::move(swapped)] += node.mapped();
    pending[std::move(lowered)] += node.mapped();
  }
  return HeisNormal(std::move(out));
}

HeisNormal heis_product(const HeisNormal& a, const HeisNormal& b) {
  HeisNormal out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      HeisWord w = word_of(ka);
      const HeisWord tail = word_of(kb);
      w.insert(w.end(), tail.begin(), tail.end());
      out = out + heis_normalize(w) * (ca * cb);
    }
  return out;
}

SymFunc fock_apply(const HeisNormal& a, const SymFunc& f) {
  SymFunc out(f.basis());
  for (const auto& [key, c] : a.terms()) {
    SymFunc g = f;
    if (!key.second.empty()) g = dual_apply(h_basis(key.second), g);
    if (!key.first.empty()) g = multiply(g, e_basis(key.first));
    out = out + g * Rational(c);
  }
  return out;
}

// ---- verifications ---------------------------------------------------------

VerificationReport verify_heis_relation(int m, int n, int max_degree) {
  if (m < 1 || n < 1) throw PreconditionError("generator indices must be positive");
  if (max_degree < 0) throw PreconditionError("degree cutoff must be nonnegative");
  VerificationReport report;
  const HeisNormal lhs = heis_product(HeisNormal::hstar(m), HeisNormal::e(n));
  const HeisNormal rhs = heis_product(HeisNormal::e(n), HeisNormal::hstar(m)) +
                         heis_product(HeisNormal::e(n - 1), HeisNormal::hstar(m - 1));
  report.add("structural h*_" + std::to_string(m) + " e_" + std::to_string(n), max_degree, lhs == rhs,
             lhs.str() + " vs " + rhs.str());

  bool ok = true;
  std::string detail = "all s_lambda with |lambda| <= " + std::to_string(max_degree);
  for (const Partition& lambda : partitions_up_to(max_degree)) {
    const SymFunc s = s_basis(lambda);
    const SymFunc left = dual_apply(h_basis(Partition::row(m)), multiply(s, e_basis(Partition::row(n))));
    SymFunc right = multiply(dual_apply(h_basis(Partition::row(m)), s), e_basis(Partition::row(n)));
    right = right + multiply(dual_apply(h_basis(Partition::row(m - 1)), s), e_basis(Partition::row(n - 1)));
    if (left != right) {
      ok = false;
      detail = "fails on s" + lambda.str() + ": " + left.str() + " vs " + right.str();
      break;
    }
  }
  report.add("operator h*_" + std::to_string(m) + " e_" + std::to_string(n), max_degree, ok, detail);
  return report;
}

VerificationReport verify_boson_relation(int m, int n, int max_degree) {
  if (m < 1 || n < 1) throw PreconditionError("generator indices must be positive");
  if (max_degree < 0) throw PreconditionError("degree cutoff must be nonnegative");
  VerificationReport report;
  const SymFunc pn = p_basis(Partition::row(n));
  const SymFunc pm = p_basis(Partition::row(m));
  const Rational expected = m == n ? Rational(n) : Rational(0);
  bool ok = true;
  std::string detail = "commutator = " + to_string(expected) + " id";
  for (const Partition& lambda : partitions_up_to(max_degree)) {
    const SymFunc s = s_basis(lambda);
    const SymFunc commutator = dual_apply(pm, multiply(s, pn)) - multiply(dual_apply(pm, s), pn);
    if (commutator != s * expected) {
      ok = false;
      detail = "fails on s" + lambda.str() + ": " + commutator.str();
      break;
    }
  }
  report.add("q_" + std::to_string(m) + " p_" + std::to_string(n) + " commutator", max_degree, ok, detail);
  return report;
}

SymFunc specht_to_sym(const Partition& lambda) { return convert(schur(lambda), Basis::schur); }

SymFunc ind_class(const SymFunc& m, const SymFunc& n) { return convert(multiply(m, n), Basis::schur); }

SymFunc res_class(const SymFunc& m, const SymFunc& n) { return convert(dual_apply(m, n), Basis::schur); }

VerificationReport verify_weak_fock(int m, int n, int max_degree) {
  if (m < 1 || n < 1) throw PreconditionError("generator indices must be positive");
  if (max_degree < 0) throw PreconditionError("degree cutoff must be nonnegative");
  // E_k = S^{(1^k)} and L_k = S^{(k)}; index 0 is the trivial module of A_0.
  auto E = [](int k) { return specht_to_sym(Partition::column(k)); };
  auto L = [](int k) { return specht_to_sym(Partition::row(k)); };
  const std::string mn = " m=" + std::to_string(m) + " n=" + std::to_string(n);

  bool mixed = true;
  bool ind_commute = true;
  bool res_commute = true;
  bool positive = true;
  std::string mixed_detail;
  std::string ind_detail;
  std::string res_detail;
  std::string positive_detail;
  for (const Partition& lambda : partitions_up_to(max_degree)) {
    const SymFunc s = specht_to_sym(lambda);
    const SymFunc lhs = res_class(L(m), ind_class(E(n), s));
    const SymFunc rhs = ind_class(E(n), res_class(L(m), s)) + ind_class(E(n - 1), res_class(L(m - 1), s));
    if (mixed && lhs != rhs) {
      mixed = false;
      mixed_detail = "fails on S^" + lambda.str();
    }
    const SymFunc ee = ind_class(E(m), ind_class(E(n), s));
    if (ind_commute && ee != ind_class(E(n), ind_class(E(m), s))) {
      ind_commute = false;
      ind_detail = "fails on S^" + lambda.str();
    }
    if (res_commute && res_class(L(m), res_class(L(n), s)) != res_class(L(n), res_class(L(m), s))) {
      res_commute = false;
      res_detail = "fails on S^" + lambda.str();
    }
    for (const SymFunc* f : {&lhs, &ee})
      for (const auto& [nu, c] : f->terms())
        if (c < 0 && positive) {
          positive = false;
          positive_detail = "negative multiplicity of S^" + nu.str();
        }
  }
  VerificationReport report;
  report.add("Res_L Ind_E = Ind_E Res_L + Ind_E' Res_L'" + mn, max_degree, mixed, mixed_detail);
  report.add("Ind_E Ind_E commute" + mn, max_degree, ind_commute, ind_detail);
  report.add("Res_L Res_L commute" + mn, max_degree, res_commute, res_detail);
  report.add("multiplicities nonnegative" + mn, max_degree, positive, positive_detail);
  return report;
}

}  // namespace heiscat
