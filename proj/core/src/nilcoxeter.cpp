#include "heiscat/nilcoxeter.hpp"

#include <deque>
#include <optional>
#include <set>

#include "cursor.hpp"

namespace heiscat {

namespace {

void add_term(NilcoxElem::Terms& terms, const Permutation& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void require_same_rank(const NilcoxElem& a, const NilcoxElem& b) {
  if (a.rank() != b.rank())
    throw RankMismatch("N_" + std::to_string(a.rank()) + " and N_" + std::to_string(b.rank()));
}

// Returns the product u_v u_w of basis elements, or nullopt when it vanishes.
std::optional<Permutation> basis_product(const Permutation& v, const Permutation& w) {
  Permutation vw = v * w;
  if (perm_length(vw) != perm_length(v) + perm_length(w)) return std::nullopt;
  return vw;
}

// True iff the braid-move class of `word` contains a word with a repeated
// adjacent letter, i.e. iff `word` is not reduced.
bool braid_class_has_square(const std::vector<int>& word) {
  constexpr std::size_t kMaxStates = 500000;
  std::set<std::vector<int>> seen{word};
  std::deque<std::vector<int>> queue{word};
  while (!queue.empty()) {
    std::vector<int> w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] == w[k + 1]) return true;
    auto visit = [&](std::vector<int> next) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    };
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (std::abs(w[k] - w[k + 1]) >= 2) {
        auto next = w;
        std::swap(next[k], next[k + 1]);
        visit(std::move(next));
      }
      if (k + 2 < w.size() && w[k] == w[k + 2] && std::abs(w[k] - w[k + 1]) == 1) {
        auto next = w;
        std::swap(next[k], next[k + 1]);
        next[k + 2] = next[k];
        visit(std::move(next));
      }
    }
    if (seen.size() > kMaxStates) throw PreconditionError("braid class too large to explore");
  }
  return false;
}

SparseVector to_sparse(const NilcoxElem& a) {
  SparseVector v;
  for (const auto& [w, c] : a.terms()) v[static_cast<int>(w.index())] = c;
  return v;
}

}  // namespace

NilcoxElem::NilcoxElem(int n, Terms terms) : n_(n) {
  for (auto& [w, c] : terms) {
    if (w.rank() != n) throw RankMismatch("permutation " + w.str() + " is not in S_" + std::to_string(n));
    if (c != 0) terms_.emplace(w, std::move(c));
  }
}

NilcoxElem NilcoxElem::u(const Permutation& w, const Integer& coeff) {
  return NilcoxElem(w.rank(), Terms{{w, coeff}});
}

NilcoxElem NilcoxElem::generator(int i, int n) { return u(Permutation::simple(i, n)); }

Integer NilcoxElem::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

NilcoxElem NilcoxElem::operator+(const NilcoxElem& other) const {
  require_same_rank(*this, other);
  NilcoxElem r = *this;
  for (const auto& [w, c] : other.terms_) add_term(r.terms_, w, c);
  return r;
}

NilcoxElem NilcoxElem::operator-(const NilcoxElem& other) const { return *this + other * Integer(-1); }

NilcoxElem NilcoxElem::operator*(const Integer& scalar) const {
  NilcoxElem r(n_);
  if (scalar != 0)
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * scalar);
  return r;
}

NilcoxElem NilcoxElem::embedded(int m) const {
  NilcoxElem r(m);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.embedded(m), c);
  return r;
}

std::string NilcoxElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    out += detail::signed_prefix(Rational(c), first, true);
    out += "u[";
    const auto word = reduced_word(w);
    for (std::size_t k = 0; k < word.letters.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(word.letters[k]);
    }
    out += ']';
    first = false;
  }
  return out;
}

NilcoxElem NilcoxElem::parse(std::string_view text, int n) {
  detail::Cursor cur(text);
  if (cur.done()) throw ParseError("empty nilcoxeter literal", 0);
  struct Parsed {
    std::vector<int> word;
    Integer coeff;
    std::size_t pos;
  };
  std::vector<Parsed> parsed;
  int top = 0;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.eat('-')) {
      sign = -1;
    } else if (!cur.eat('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    Integer coeff = 1;
    if (cur.at_digit()) coeff = cur.read_int();
    if (!cur.eat('u')) cur.fail("expected 'u'");
    const std::size_t pos = cur.pos();
    cur.expect('[');
    std::vector<int> word;
    if (!cur.eat(']')) {
      do {
        word.push_back(cur.read_int());
        top = std::max(top, word.back());
      } while (cur.eat(','));
      cur.expect(']');
    }
    parsed.push_back({std::move(word), sign * coeff, pos});
    first = false;
  }
  const int rank = n < 0 ? top + 1 : n;
  Terms terms;
  for (const auto& p : parsed) {
    GeneratorWord gw{p.word, rank};
    Permutation w;
    try {
      w = word_eval(gw);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), p.pos);
    }
    if (perm_length(w) != static_cast<int>(p.word.size())) throw ParseError("word is not reduced", p.pos);
    add_term(terms, w, p.coeff);
  }
  return NilcoxElem(rank, std::move(terms));
}

NilcoxElem nc_product(const NilcoxElem& a, const NilcoxElem& b) {
  require_same_rank(a, b);
  NilcoxElem::Terms out;
  for (const auto& [v, cv] : a.terms())
    for (const auto& [w, cw] : b.terms())
      if (auto vw = basis_product(v, w)) add_term(out, *vw, cv * cw);
  return NilcoxElem(a.rank(), std::move(out));
}

NilcoxElem nc_product_by_words(const NilcoxElem& a, const NilcoxElem& b) {
  require_same_rank(a, b);
  NilcoxElem::Terms out;
  for (const auto& [v, cv] : a.terms())
    for (const auto& [w, cw] : b.terms()) {
      GeneratorWord word = reduced_word(v);
      const auto tail = reduced_word(w).letters;
      word.letters.insert(word.letters.end(), tail.begin(), tail.end());
      word.n = a.rank();
      if (!braid_class_has_square(word.letters)) add_term(out, word_eval(word), cv * cw);
    }
  return NilcoxElem(a.rank(), std::move(out));
}

NilcoxElem nc_word(const GeneratorWord& word) {
  NilcoxElem acc = NilcoxElem::one(word.n);
  for (int i : word.letters) acc = nc_product(acc, NilcoxElem::generator(i, word.n));
  return acc;
}

std::vector<NilcoxElem> x_right_basis(int n) {
  if (n < 0) throw PreconditionError("x_right_basis needs n >= 0");
  std::vector<NilcoxElem> basis;
  for (int j = 0; j <= n; ++j) basis.push_back(NilcoxElem::u(coset_representative(n + 1 - j, n)));
  return basis;
}

RightFactor x_right_factor(const Permutation& w) {
  const auto [i, rest] = coset_decompose(w);
  return {w.rank() - i, rest};
}

// ---- bimodule isomorphism --------------------------------------------------

VerificationReport verify_bimodule_iso(int n) {
  if (n < 1) throw PreconditionError("verify_bimodule_iso needs n >= 1");
  VerificationReport report;
  const auto perms_n = permutations_of(n);
  const auto perms_n1 = permutations_of(n + 1);
  const auto left_basis = x_right_basis(n - 1);  // elements of N_n
  const NilcoxElem u_n = NilcoxElem::generator(n, n + 1);

  const Integer dim_target = factorial(n + 1);
  const Integer dim_m1 = factorial(n);
  const Integer dim_m2 = Integer(static_cast<long>(left_basis.size())) * factorial(n);
  report.add("dimension identity", n, dim_m1 + dim_m2 == dim_target,
             dim_m1.get_str() + " + " + dim_m2.get_str() + " = " + dim_target.get_str());

  auto m1 = [&](const NilcoxElem& a) { return a.embedded(n + 1); };
  // Domain of m2 is spanned by b_j (x) u_tau; coefficients keyed by (j, tau).
  using Domain = std::map<std::pair<int, Permutation>, Integer>;
  auto m2 = [&](const Domain& x) {
    NilcoxElem out(n + 1);
    for (const auto& [jt, c] : x) {
      const NilcoxElem a = left_basis[static_cast<std::size_t>(jt.first)].embedded(n + 1);
      out = out + nc_product(nc_product(a, u_n), NilcoxElem::u(jt.second).embedded(n + 1)) * c;
    }
    return out;
  };
  auto pure = [](int j, const Permutation& tau) { return Domain{{{j, tau}, 1}}; };

  SparseEchelon image1;
  for (const auto& w : perms_n) image1.insert(to_sparse(m1(NilcoxElem::u(w))));
  report.add("m1 injective", n, Integer(static_cast<long>(image1.rank())) == dim_m1,
             "rank " + std::to_string(image1.rank()));

  SparseEchelon image2;
  for (std::size_t j = 0; j < left_basis.size(); ++j)
    for (const auto& tau : perms_n) image2.insert(to_sparse(m2(pure(static_cast<int>(j), tau))));
  report.add("m2 injective", n, Integer(static_cast<long>(image2.rank())) == dim_m2,
             "rank " + std::to_string(image2.rank()));

  SparseEchelon both = image1;
  for (std::size_t j = 0; j < left_basis.size(); ++j)
    for (const auto& tau : perms_n) both.insert(to_sparse(m2(pure(static_cast<int>(j), tau))));
  report.add("images intersect trivially", n, both.rank() == image1.rank() + image2.rank(),
             "joint rank " + std::to_string(both.rank()));
  report.add("images span", n, Integer(static_cast<long>(both.rank())) == dim_target,
             "joint rank " + std::to_string(both.rank()) + " of " + dim_target.get_str());

  bool characterization = true;
  std::string bad;
  for (const auto& w : perms_n1) {
    const bool fixes = w(n + 1) == n + 1;
    if (image1.contains(to_sparse(NilcoxElem::u(w))) != fixes) {
      characterization = false;
      bad = w.str();
      break;
    }
  }
  report.add("m1 image is u_w with w(n+1) = n+1", n, characterization, bad);

  // m2 is balanced over N_{n-1}: a u_i u_n b = a u_n u_i b for i <= n-2.
  bool balanced = true;
  for (int i = 1; i <= n - 2 && balanced; ++i) {
    const NilcoxElem ui = NilcoxElem::generator(i, n + 1);
    for (const auto& a : left_basis)
      for (const auto& tau : perms_n) {
        const NilcoxElem ae = a.embedded(n + 1);
        const NilcoxElem b = NilcoxElem::u(tau).embedded(n + 1);
        if (nc_product(nc_product(nc_product(ae, ui), u_n), b) !=
            nc_product(nc_product(nc_product(ae, u_n), ui), b)) {
          balanced = false;
          bad = "u_" + std::to_string(i) + " against " + tau.str();
        }
      }
  }
  report.add("m2 balanced over N_{n-1}", n, balanced, balanced ? "" : bad);

  // Bimodule compatibility on generators u_1..u_{n-1} of N_n.
  bool left_ok = true;
  bool right_ok = true;
  bool m1_ok = true;
  for (int i = 1; i <= n - 1; ++i) {
    const NilcoxElem ui = NilcoxElem::generator(i, n);
    const NilcoxElem ui_big = ui.embedded(n + 1);
    for (std::size_t j = 0; j < left_basis.size(); ++j)
      for (const auto& tau : perms_n) {
        const Domain x = pure(static_cast<int>(j), tau);
        const NilcoxElem image = m2(x);
        // u_i b_j = b_{j'} u_{rest}; move u_rest across the tensor sign.
        Domain left;
        const NilcoxElem uib = nc_product(ui, left_basis[j]);
        for (const auto& [w, c] : uib.terms()) {
          const RightFactor f = x_right_factor(w);
          const NilcoxElem moved = nc_product(NilcoxElem::u(f.rest).embedded(n), NilcoxElem::u(tau));
          for (const auto& [rho, d] : moved.terms()) left[{f.index, rho}] += c * d;
        }
        if (m2(left) != nc_product(ui_big, image)) left_ok = false;
        Domain right;
        const NilcoxElem tau_ui = nc_product(NilcoxElem::u(tau), ui);
        for (const auto& [rho, d] : tau_ui.terms())
          right[{static_cast<int>(j), rho}] += d;
        if (m2(right) != nc_product(image, ui_big)) right_ok = false;
      }
    for (const auto& w : perms_n) {
      const NilcoxElem a = NilcoxElem::u(w);
      if (m1(nc_product(ui, a)) != nc_product(ui_big, m1(a)) || m1(nc_product(a, ui)) != nc_product(m1(a), ui_big))
        m1_ok = false;
    }
  }
  report.add("m2 left N_n-linear", n, left_ok);
  report.add("m2 right N_n-linear", n, right_ok);
  report.add("m1 bimodule map", n, m1_ok);
  return report;
}

// ---- Grothendieck groups ---------------------------------------------------

std::string flavor_name(Flavor f) { return f == Flavor::simples ? "G" : "K"; }

KVector KVector::basis(Flavor flavor, int n, const Integer& coeff) {
  KVector v{flavor, {{n, coeff}}};
  return v.prune();
}

KVector& KVector::prune() {
  for (auto it = coords.begin(); it != coords.end();) it = it->second == 0 ? coords.erase(it) : std::next(it);
  return *this;
}

KVector KVector::operator+(const KVector& other) const {
  if (flavor != other.flavor) throw FlavorMismatch("adding classes of different flavors");
  KVector r = *this;
  for (const auto& [n, c] : other.coords) r.coords[n] += c;
  return r.prune();
}

KVector KVector::operator-(const KVector& other) const {
  KVector neg = other;
  for (auto& [n, c] : neg.coords) c = -c;
  return *this + neg;
}

std::string KVector::str() const {
  if (coords.empty()) return "0";
  const char* name = flavor == Flavor::simples ? "L" : "N";
  std::string out;
  bool first = true;
  for (const auto& [n, c] : coords) {
    out += detail::signed_prefix(Rational(c), first, true);
    out += "[" + std::string(name) + "_" + std::to_string(n) + "]";
    first = false;
  }
  return out;
}

namespace {

// All multiplicities are read off dimensions: N_n has dimension n!, L_n has
// dimension one, and N_{n+1} is free over N_n on x_right_basis(n).
Integer dim_projective(int n) { return factorial(n); }
Integer dim_simple(int) { return 1; }
Integer induction_rank(int n) { return static_cast<long>(x_right_basis(n).size()); }

}  // namespace

KVector ind_K(const KVector& v) {
  KVector out{v.flavor, {}};
  for (const auto& [n, c] : v.coords) {
    if (v.flavor == Flavor::simples) {
      // N_{n+1} (x)_{N_n} L_n has dimension rank * dim L_n, all of it L_{n+1}.
      out.coords[n + 1] += c * induction_rank(n) * dim_simple(n) / dim_simple(n + 1);
    } else {
      // N_{n+1} (x)_{N_n} N_n = N_{n+1}.
      out.coords[n + 1] += c * dim_projective(n + 1) / dim_projective(n + 1);
    }
  }
  return out.prune();
}

KVector res_K(const KVector& v) {
  KVector out{v.flavor, {}};
  for (const auto& [n, c] : v.coords) {
    if (n == 0) continue;  // there is no N_{-1}
    if (v.flavor == Flavor::simples) {
      out.coords[n - 1] += c * dim_simple(n) / dim_simple(n - 1);
    } else {
      // N_n restricted to N_{n-1} is free of rank dim N_n / dim N_{n-1}.
      const Integer rank = dim_projective(n) / dim_projective(n - 1);
      if (rank != induction_rank(n - 1)) throw PreconditionError("inconsistent induction rank");
      out.coords[n - 1] += c * rank;
    }
  }
  return out.prune();
}

Integer k_pairing(const KVector& projective, const KVector& simple) {
  if (projective.flavor != Flavor::projectives || simple.flavor != Flavor::simples)
    throw FlavorMismatch("k_pairing takes a K class and a G class");
  Integer total = 0;
  for (const auto& [n, c] : projective.coords)
    if (auto it = simple.coords.find(n); it != simple.coords.end()) total += c * it->second;
  return total;
}

ModuleRep regular_module(int n) {
  const auto perms = permutations_of(n);
  ModuleRep out{perms.size(), {}};
  for (int i = 1; i < n; ++i) {
    Matrix a(perms.size(), perms.size());
    const NilcoxElem ui = NilcoxElem::generator(i, n);
    for (std::size_t col = 0; col < perms.size(); ++col) {
      const NilcoxElem image = nc_product(ui, NilcoxElem::u(perms[col]));
      for (const auto& [w, c] : image.terms()) a(w.index(), col) = c;
    }
    out.generators.push_back(std::move(a));
  }
  return out;
}

ModuleRep simple_module(int n) {
  return ModuleRep{1, std::vector<Matrix>(static_cast<std::size_t>(std::max(n - 1, 0)), Matrix(1, 1))};
}

std::size_t hom_dimension(const ModuleRep& source, const ModuleRep& target) {
  if (source.generators.size() != target.generators.size())
    throw PreconditionError("modules over different algebras");
  const std::size_t p = source.dim;
  const std::size_t m = target.dim;
  // Unknown F(r, c) is variable r * p + c; equations (F A - B F)(r, c) = 0.
  SparseEchelon rows;
  for (std::size_t g = 0; g < source.generators.size(); ++g) {
    const Matrix& a = source.generators[g];
    const Matrix& b = target.generators[g];
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < p; ++c) {
        SparseVector eq;
        for (std::size_t k = 0; k < p; ++k)
          if (a(k, c) != 0) eq[static_cast<int>(r * p + k)] += a(k, c);
        for (std::size_t k = 0; k < m; ++k)
          if (b(r, k) != 0) eq[static_cast<int>(k * p + c)] -= b(r, k);
        rows.insert(std::move(eq));
      }
  }
  return m * p - rows.rank();
}

PolyVector phi_G(const KVector& v) {
  if (v.flavor != Flavor::simples) throw FlavorMismatch("phi_G takes a G class");
  PolyVector out{Lattice::divided_powers, v.coords};
  return out.prune();
}

PolyVector phi_K(const KVector& v) {
  if (v.flavor != Flavor::projectives) throw FlavorMismatch("phi_K takes a K class");
  PolyVector out{Lattice::monomials, v.coords};
  return out.prune();
}

}  // namespace heiscat
