#include "heiscat/suite.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <set>
#include <tuple>

#include "heiscat/bimodel.hpp"
#include "heiscat/combinatorics.hpp"
#include "heiscat/diagcat.hpp"
#include "heiscat/heisenberg.hpp"
#include "heiscat/nilcoxeter.hpp"
#include "heiscat/symfunc.hpp"
#include "heiscat/weyl.hpp"

namespace heiscat {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Entry {
  std::string module;
  std::string id;
  std::map<std::string, std::string> parameters;
  std::function<Outcome()> run;
};

Outcome from_report(const VerificationReport& r) {
  if (const CheckResult* bad = r.first_failure())
    return {false, bad->check + " n=" + std::to_string(bad->n) + (bad->detail.empty() ? "" : ": " + bad->detail)};
  return {true, std::to_string(r.checks.size()) + " checks"};
}

Outcome counted(std::size_t checked, const std::string& failure) {
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(checked) + " checks"};
}

const std::vector<Basis> kIntegral = {Basis::monomial, Basis::elementary, Basis::complete, Basis::schur};

// ---- combinatorics ----------------------------------------------------------

Outcome reduced_words(int max_n) {
  std::size_t checked = 0;
  for (int n = 0; n <= max_n; ++n)
    for (const auto& w : permutations_of(n)) {
      const GeneratorWord word = reduced_word(w);
      if (word_eval(word) != w || static_cast<int>(word.letters.size()) != perm_length(w))
        return {false, "reduced word of " + w.str()};
      ++checked;
    }
  return counted(checked, "");
}

Outcome partition_counts(int max_n) {
  // p(n) by the standard recurrence over the largest allowed part.
  std::vector<long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= max_n; ++part)
    for (int s = part; s <= max_n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  for (int n = 0; n <= max_n; ++n) {
    const auto parts = partitions_of(n);
    if (static_cast<long>(parts.size()) != p[static_cast<std::size_t>(n)])
      return {false, "p(" + std::to_string(n) + ") = " + std::to_string(parts.size())};
    for (const auto& l : parts)
      if (l.size() != n) return {false, l.str() + " has the wrong size"};
  }
  return {true, "p(0.." + std::to_string(max_n) + ") match"};
}

Outcome coset_bijection(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    std::set<std::pair<int, Permutation>> seen;
    for (const auto& w : permutations_of(n + 1)) {
      const CosetDecomposition cd = coset_decompose(w);
      if (cd.rest.rank() != n || coset_representative(cd.i, n) * cd.rest.embedded(n + 1) != w)
        return {false, "decomposition of " + w.str()};
      seen.emplace(cd.i, cd.rest);
    }
    if (seen.size() != static_cast<std::size_t>(factorial(n + 1).get_ui()))
      return {false, "not injective for n=" + std::to_string(n)};
  }
  return {true, "S_{n+1} = {1..n+1} x S_n for n <= " + std::to_string(max_n)};
}

// ---- symfunc ------------------------------------------------------------------

std::vector<SymFunc> basis_elements(Basis b, int max_degree) {
  std::vector<SymFunc> out;
  for (const auto& l : partitions_up_to(max_degree)) out.push_back(SymFunc::term(b, l));
  return out;
}

Outcome multiply_oracle(int d) {
  constexpr int kVars = 10;
  std::map<std::pair<Basis, Partition>, Polynomial> expansions;
  auto expand = [&](Basis b, const Partition& l) -> const Polynomial& {
    auto it = expansions.find({b, l});
    if (it == expansions.end()) it = expansions.emplace(std::pair(b, l), monomial_expand(SymFunc::term(b, l), kVars)).first;
    return it->second;
  };
  std::size_t checked = 0;
  for (Basis b1 : kIntegral)
    for (Basis b2 : kIntegral)
      for (const auto& l : partitions_up_to(d))
        for (const auto& m : partitions_up_to(d - l.size())) {
          const SymFunc prod = multiply(SymFunc::term(b1, l), SymFunc::term(b2, m));
          if (monomial_expand(prod, kVars) != multiply_polynomials(expand(b1, l), expand(b2, m)))
            return {false, basis_letter(b1) + l.str() + " * " + basis_letter(b2) + m.str()};
          ++checked;
        }
  return counted(checked, "");
}

Outcome basis_round_trip(int d) {
  std::size_t checked = 0;
  for (Basis from : kIntegral)
    for (Basis to : kIntegral)
      for (const auto& f : basis_elements(from, d)) {
        const SymFunc back = convert(convert(f, to), from);
        if (back.basis() != from || back.terms() != f.terms()) return {false, f.str() + " via " + basis_name(to)};
        ++checked;
      }
  return counted(checked, "");
}

Outcome hopf_pairing(int d) {
  std::size_t checked = 0;
  for (Basis b : kIntegral)
    for (const auto& c : partitions_up_to(d)) {
      const SymFunc cf = SymFunc::term(b, c);
      const SymTensor dc = coproduct(cf);
      for (const auto& l : partitions_up_to(c.size()))
        for (const auto& m : partitions_of(c.size() - l.size())) {
          const SymFunc a = SymFunc::term(b, l);
          const SymFunc bb = SymFunc::term(b, m);
          SymTensor ab{b, b, {{{l, m}, 1}}};
          if (hall_pairing(multiply(a, bb), cf) != tensor_pairing(ab, dc))
            return {false, "<" + a.str() + " " + bb.str() + ", " + cf.str() + ">"};
          ++checked;
        }
    }
  return counted(checked, "");
}

Outcome antipode_axiom(int d) {
  std::size_t checked = 0;
  for (Basis b : kIntegral)
    for (const auto& f : basis_elements(b, d)) {
      const SymTensor t = coproduct(f);
      SymFunc acc(b);
      for (const auto& [key, c] : t.terms)
        acc = acc + multiply(antipode(SymFunc::term(t.left, key.first)), SymFunc::term(t.right, key.second)) * c;
      if (!(acc == SymFunc::one(b) * counit(f))) return {false, "antipode axiom on " + f.str()};
      ++checked;
    }
  return counted(checked, "");
}

Outcome kostka_unitriangular(int d) {
  std::size_t checked = 0;
  for (int n = 0; n <= d; ++n) {
    const auto parts = partitions_of(n);
    const auto t = transition_to_monomial(Basis::schur, n);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const Rational& k = t[i][j];
        if (k < 0 || !is_integral(k)) return {false, "K(" + parts[j].str() + "," + parts[i].str() + ") = " + to_string(k)};
        if (i == j && k != 1) return {false, "diagonal at " + parts[i].str()};
        if (k != 0 && !parts[j].dominates(parts[i]))
          return {false, "s" + parts[j].str() + " contains m" + parts[i].str() + " outside dominance order"};
        ++checked;
      }
  }
  return counted(checked, "");
}

Outcome dual_apply_adjoint(int d) {
  std::size_t checked = 0;
  for (Basis b : {Basis::schur, Basis::complete})
    for (const auto& fl : partitions_up_to(d))
      for (const auto& al : partitions_up_to(d - fl.size())) {
        const SymFunc f = SymFunc::term(b, fl);
        const SymFunc a = SymFunc::term(b, al);
        for (const auto& bl : partitions_of(fl.size() + al.size())) {
          const SymFunc g = SymFunc::term(b, bl);
          if (hall_pairing(a, dual_apply(f, g)) != hall_pairing(multiply(f, a), g))
            return {false, "f=" + f.str() + " a=" + a.str() + " b=" + g.str()};
          ++checked;
        }
      }
  return counted(checked, "");
}

// ---- weyl ---------------------------------------------------------------------

WeylElement random_weyl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> count(1, 3);
  WeylElement u;
  for (int k = count(rng); k > 0; --k) u = u + WeylElement::monomial(exp(rng), exp(rng), coeff(rng));
  return u;
}

Outcome weyl_normal_ordering(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const WeylElement u = random_weyl(rng);
    const WeylElement v = random_weyl(rng);
    const WeylElement uv = weyl_multiply(u, v);
    if (uv != weyl_multiply_by_rewriting(u, v)) return {false, "closed form and rewriting differ on " + u.str() + " * " + v.str()};
    for (Lattice l : {Lattice::divided_powers, Lattice::monomials})
      for (int n = 0; n <= 12; ++n) {
        const PolyVector e = PolyVector::basis(l, n);
        if (weyl_apply(uv, e) != weyl_apply(u, weyl_apply(v, e)))
          return {false, "(" + u.str() + ")(" + v.str() + ") on " + e.str()};
        ++checked;
      }
  }
  return counted(checked, "");
}

Outcome weyl_adjointness(int max_n) {
  const WeylElement x = WeylElement::x();
  const WeylElement d = WeylElement::d();
  std::size_t checked = 0;
  for (int i = 0; i <= max_n; ++i)
    for (int j = 0; j <= max_n; ++j) {
      const PolyVector v = PolyVector::basis(Lattice::monomials, i);
      const PolyVector w = PolyVector::basis(Lattice::divided_powers, j);
      if (weyl_pairing(weyl_apply(x, v), w) != weyl_pairing(v, weyl_apply(d, w)) ||
          weyl_pairing(weyl_apply(d, v), w) != weyl_pairing(v, weyl_apply(x, w)))
        return {false, "basis pair " + std::to_string(i) + "," + std::to_string(j)};
      ++checked;
    }
  return counted(checked, "");
}

// x^a d^b applied to a basis vector in Q[x], then read back in the lattice.
Outcome weyl_integrality(int max_n) {
  std::size_t checked = 0;
  for (Lattice l : {Lattice::divided_powers, Lattice::monomials})
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int n = 0; n <= max_n; ++n) {
          const Rational scale = l == Lattice::divided_powers ? Rational(1, factorial(n)) : Rational(1);
          PolyVector expected{l, {}};
          if (n >= b) {
            const int k = n - b + a;
            Rational coeff = scale * Rational(factorial(n)) / Rational(factorial(n - b));
            if (l == Lattice::divided_powers) coeff *= Rational(factorial(k));
            if (!is_integral(coeff)) return {false, "non-integral coordinate"};
            expected.coeffs[k] = coeff.get_num();
          }
          expected.prune();
          const PolyVector got = weyl_apply(WeylElement::monomial(a, b), PolyVector::basis(l, n));
          if (got != expected)
            return {false, "x^" + std::to_string(a) + " d^" + std::to_string(b) + " on " + PolyVector::basis(l, n).str()};
          ++checked;
        }
  return counted(checked, "");
}

// ---- nilcoxeter -----------------------------------------------------------------

Outcome nil_braid(int max_n) {
  std::size_t checked = 0;
  for (int n = 2; n <= max_n; ++n)
    for (int i = 1; i < n; ++i) {
      const NilcoxElem ui = NilcoxElem::generator(i, n);
      if (!nc_product(ui, ui).is_zero()) return {false, "u_i^2 != 0"};
      for (int j = 1; j < n; ++j) {
        const NilcoxElem uj = NilcoxElem::generator(j, n);
        if (std::abs(i - j) >= 2 && nc_product(ui, uj) != nc_product(uj, ui))
          return {false, "distant generators do not commute"};
        if (j == i + 1 && nc_product(nc_product(ui, uj), ui) != nc_product(nc_product(uj, ui), uj))
          return {false, "braid relation fails"};
        ++checked;
      }
    }
  return counted(checked, "");
}

Outcome commutative_squares(int max_n) {
  const WeylElement x = WeylElement::x();
  const WeylElement d = WeylElement::d();
  std::size_t checked = 0;
  for (int n = 0; n <= max_n; ++n) {
    const KVector g = KVector::basis(Flavor::simples, n);
    const KVector k = KVector::basis(Flavor::projectives, n);
    if (phi_G(ind_K(g)) != weyl_apply(x, phi_G(g))) return {false, "phi_G Ind at " + std::to_string(n)};
    if (phi_G(res_K(g)) != weyl_apply(d, phi_G(g))) return {false, "phi_G Res at " + std::to_string(n)};
    if (phi_K(ind_K(k)) != weyl_apply(x, phi_K(k))) return {false, "phi_K Ind at " + std::to_string(n)};
    if (phi_K(res_K(k)) != weyl_apply(d, phi_K(k))) return {false, "phi_K Res at " + std::to_string(n)};
    checked += 4;
  }
  return counted(checked, "");
}

Outcome k_weyl_relation(int max_n) {
  std::size_t checked = 0;
  for (Flavor f : {Flavor::simples, Flavor::projectives})
    for (int n = 0; n <= max_n; ++n) {
      const KVector v = KVector::basis(f, n);
      if (res_K(ind_K(v)) != ind_K(res_K(v)) + v) return {false, "Res Ind != Ind Res + id on " + v.str()};
      ++checked;
    }
  return counted(checked, "");
}

Outcome k_adjointness(int max_n) {
  std::size_t checked = 0;
  for (int m = 0; m <= max_n; ++m)
    for (int n = 0; n <= max_n; ++n) {
      const KVector p = KVector::basis(Flavor::projectives, m);
      const KVector s = KVector::basis(Flavor::simples, n);
      if (k_pairing(ind_K(p), s) != k_pairing(p, res_K(s)))
        return {false, "<Ind N_" + std::to_string(m) + ", L_" + std::to_string(n) + ">"};
      ++checked;
    }
  return counted(checked, "");
}

Outcome bimodule_iso(int max_n) {
  VerificationReport r;
  for (int n = 1; n <= max_n; ++n) r.append(verify_bimodule_iso(n));
  return from_report(r);
}

// ---- heisenberg -----------------------------------------------------------------

Outcome heis_confluence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> idx(0, 4);
  std::uniform_int_distribution<int> kind(0, 1);
  std::size_t checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    HeisWord w;
    for (int k = len(rng); k > 0; --k) w.push_back(kind(rng) ? HeisLetter::E(idx(rng)) : HeisLetter::Hstar(idx(rng)));
    const HeisNormal base = heis_normalize(w);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].kind != w[i + 1].kind) continue;
      HeisWord swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      if (heis_normalize(swapped) != base) return {false, heis_word_str(w) + " vs " + heis_word_str(swapped)};
      ++checked;
    }
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      const HeisWord left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
      const HeisWord right(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
      if (heis_product(heis_normalize(left), heis_normalize(right)) != base)
        return {false, "split of " + heis_word_str(w) + " at " + std::to_string(cut)};
      ++checked;
    }
  }
  return counted(checked, "");
}

Outcome fock_faithful(int bidegree, int test_degree) {
  std::vector<HeisNormal> elements;
  for (const auto& l : partitions_up_to(bidegree))
    for (const auto& m : partitions_up_to(bidegree)) elements.push_back(HeisNormal::term(l, m));
  // Refine classes of elements with equal action, one test vector at a time.
  std::vector<std::vector<std::size_t>> classes{{}};
  for (std::size_t i = 0; i < elements.size(); ++i) classes[0].push_back(i);
  std::size_t used = 0;
  for (const auto& nu : partitions_up_to(test_degree)) {
    if (std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; })) break;
    const SymFunc s = SymFunc::term(Basis::schur, nu);
    ++used;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& cls : classes) {
      if (cls.size() == 1) {
        next.push_back(cls);
        continue;
      }
      std::map<SymFunc::Terms, std::vector<std::size_t>> split;
      for (std::size_t i : cls) split[fock_apply(elements[i], s).terms()].push_back(i);
      for (auto& [_, part] : split) next.push_back(std::move(part));
    }
    classes = std::move(next);
  }
  for (const auto& cls : classes)
    if (cls.size() > 1) return {false, elements[cls[0]].str() + " and " + elements[cls[1]].str() + " act equally"};
  return {true, std::to_string(elements.size()) + " elements separated by " + std::to_string(used) + " Schur functions"};
}

Outcome phi_intertwining(int d) {
  std::size_t checked = 0;
  for (int n = 0; n <= d; ++n)
    for (const auto& l : partitions_up_to(d - n)) {
      const SymFunc got = convert(fock_apply(HeisNormal::e(n), specht_to_sym(l)), Basis::schur);
      for (const auto& [nu, c] : lr_coefficients(Partition::column(n), l))
        if (got.coeff(nu) != Rational(c)) return {false, "e_" + std::to_string(n) + " on " + l.str()};
      Rational total = 0;
      for (const auto& [nu, c] : got.terms()) total += c;
      Integer expected = 0;
      for (const auto& [nu, c] : lr_coefficients(Partition::column(n), l)) expected += c;
      if (total != Rational(expected)) return {false, "extra terms for e_" + std::to_string(n) + " on " + l.str()};
      ++checked;
    }
  return counted(checked, "");
}

Outcome specht_orthonormal(int d) {
  std::size_t checked = 0;
  for (const auto& l : partitions_up_to(d))
    for (const auto& m : partitions_up_to(d)) {
      if (hall_pairing(specht_to_sym(l), specht_to_sym(m)) != (l == m ? 1 : 0)) return {false, l.str() + ", " + m.str()};
      ++checked;
    }
  return counted(checked, "");
}

Outcome ranged(int lo, int hi, const std::function<VerificationReport(int, int)>& f) {
  VerificationReport r;
  for (int m = lo; m <= hi; ++m)
    for (int n = lo; n <= hi; ++n) r.append(f(m, n));
  return from_report(r);
}

// ---- bimodel --------------------------------------------------------------------

Outcome characters_vs_lr(int d) {
  std::size_t checked = 0;
  for (const auto& l : partitions_up_to(d))
    for (const auto& m : partitions_up_to(d - l.size())) {
      if (induced_character_decomposition(l, m, d) != lr_coefficients(l, m)) return {false, l.str() + " x " + m.str()};
      ++checked;
    }
  return counted(checked, "");
}

Outcome idempotents(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const GroupAlgElem e = symmetrizer(n);
    const GroupAlgElem f = antisymmetrizer(n);
    if (ga_product(e, e) != e) return {false, "e(" + std::to_string(n) + ") not idempotent"};
    if (ga_product(f, f) != f) return {false, "e'(" + std::to_string(n) + ") not idempotent"};
    if (!ga_product(e, f).is_zero() || !ga_product(f, e).is_zero())
      return {false, "e(" + std::to_string(n) + ") e'(" + std::to_string(n) + ") != 0"};
  }
  return {true, "2 <= n <= " + std::to_string(max_n)};
}

Outcome symmetrizer_rank(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    if (right_multiplication_matrix(symmetrizer(n)).rank() != 1) return {false, "rank of e(" + std::to_string(n) + ")"};
    if (right_multiplication_matrix(antisymmetrizer(n)).rank() != 1) return {false, "rank of e'(" + std::to_string(n) + ")"};
  }
  return {true, "rank 1 for n <= " + std::to_string(max_n)};
}

// ---- diagcat --------------------------------------------------------------------

Outcome simplify_terminates() {
  std::size_t checked = 0;
  for (const auto& text : diagram_corpus()) {
    const Diagram d = Diagram::parse(text);
    const Morphism s = simplify(Morphism(d));
    for (const auto& [nd, c] : s.terms())
      if (diagram_measure(d) < diagram_measure(nd)) return {false, text + " grew into " + nd.str()};
    ++checked;
  }
  return counted(checked, "");
}

Outcome simplify_sound(int max_base) {
  std::size_t checked = 0;
  for (const auto& text : diagram_corpus()) {
    const Morphism m = Morphism::parse(text);
    const Morphism s = simplify(m);
    for (int n = 0; n <= max_base; ++n) {
      if (!realizable(m.domain(), n) || !realizable(m.codomain(), n)) continue;
      if (realized_map(m, n) != realized_map(s, n)) return {false, text + " at base " + std::to_string(n)};
      ++checked;
    }
  }
  return counted(checked, "");
}

Outcome closed_values() {
  auto scalar = [](const char* text) -> std::optional<Rational> {
    const ClosedValue v = evaluate_closed(Morphism::parse(text));
    if (const Rational* r = std::get_if<Rational>(&v)) return *r;
    return std::nullopt;
  };
  if (scalar("sig:; cup+1; cap+1") != Rational(1)) return {false, "ccw circle"};
  if (scalar("sig:; cup+1; cup+2; cap+2; cap+1") != Rational(1)) return {false, "nested ccw circles"};
  if (scalar("sig:; cup+1; cup+2; x3; cap+2; cap+1") != Rational(0)) return {false, "closed left curl"};
  if (scalar("sig:; cup-1; cap-1")) return {false, "cw circle evaluated"};
  const LinearMapRep circle = diagram_to_map(Diagram::parse("sig:; cup+1; cap+1"), 2);
  const LinearMapRep curl = diagram_to_map(Diagram::parse("sig:U; cup+1; x2; cap+1"), 2);
  if (circle != LinearMapRep::identity(TensorBasis({}, 2)) || !curl.is_zero()) return {false, "bimodule images"};
  return {true, "ccw circle 1, left curl 0, cw circle irreducible"};
}

Outcome sym_image_hom(int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t checked = 0;
  for (int n = 2; n <= max_n; ++n) {
    std::uniform_int_distribution<int> letter(1, n - 1);
    std::uniform_int_distribution<int> len(0, 5);
    auto random_diagram = [&] {
      std::vector<Slice> s;
      for (int k = len(rng); k > 0; --k) s.push_back(Slice::cross(letter(rng)));
      return Morphism(Diagram(all_up(n), s));
    };
    for (int trial = 0; trial < 30; ++trial) {
      const Morphism f = random_diagram() + random_diagram() * Rational(2);
      const Morphism g = random_diagram() - random_diagram();
      if (sym_image(compose(f, g)) != ga_product(sym_image(f), sym_image(g))) return {false, "n=" + std::to_string(n)};
      ++checked;
    }
  }
  return counted(checked, "");
}

Outcome idempotent_images(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const GroupAlgElem e = sym_image(braid_section(symmetrizer(n)));
    const GroupAlgElem f = sym_image(braid_section(antisymmetrizer(n)));
    if (e != symmetrizer(n) || f != antisymmetrizer(n)) return {false, "section is not a right inverse"};
    if (ga_product(e, e) != e || ga_product(f, f) != f) return {false, "not idempotent at n=" + std::to_string(n)};
    if (n >= 2 && (!ga_product(e, f).is_zero() || !ga_product(f, e).is_zero()))
      return {false, "not orthogonal at n=" + std::to_string(n)};
  }
  return {true, "n <= " + std::to_string(max_n)};
}

std::vector<Entry> entries(const SuiteOptions& o) {
  const int d = o.max_degree;
  const int nr = o.max_rank;
  const std::string D = std::to_string(d);
  const std::string seed = std::to_string(o.seed);
  const int d5 = std::min(d, 5);
  return {
      {"combinatorics", "reduced-words", {{"max_n", "6"}}, [] { return reduced_words(6); }},
      {"combinatorics", "partition-counts", {{"max_n", "8"}}, [] { return partition_counts(8); }},
      {"combinatorics", "coset-bijection", {{"max_n", "5"}}, [] { return coset_bijection(5); }},
      {"symfunc", "multiply-oracle", {{"max_degree", std::to_string(d5)}, {"nvars", "10"}}, [=] { return multiply_oracle(d5); }},
      {"symfunc", "basis-round-trip", {{"max_degree", D}}, [=] { return basis_round_trip(d); }},
      {"symfunc", "hopf-pairing", {{"max_degree", D}}, [=] { return hopf_pairing(d); }},
      {"symfunc", "antipode-axiom", {{"max_degree", std::to_string(d5)}}, [=] { return antipode_axiom(d5); }},
      {"symfunc", "kostka-unitriangular", {{"max_degree", D}}, [=] { return kostka_unitriangular(d); }},
      {"symfunc", "dual-apply-adjoint", {{"max_degree", std::to_string(d5)}}, [=] { return dual_apply_adjoint(d5); }},
      {"weyl", "normal-ordering", {{"seed", seed}, {"max_n", "12"}}, [=] { return weyl_normal_ordering(o.seed); }},
      {"weyl", "adjointness", {{"max_n", "10"}}, [] { return weyl_adjointness(10); }},
      {"weyl", "integrality", {{"max_n", "12"}}, [] { return weyl_integrality(12); }},
      {"nilcoxeter", "braid-relations", {{"max_n", "6"}}, [] { return nil_braid(6); }},
      {"nilcoxeter", "commutative-squares", {{"max_n", "10"}}, [] { return commutative_squares(10); }},
      {"nilcoxeter", "k-weyl-relation", {{"max_n", "10"}}, [] { return k_weyl_relation(10); }},
      {"nilcoxeter", "k-adjointness", {{"max_n", "8"}}, [] { return k_adjointness(8); }},
      {"nilcoxeter", "bimodule-iso", {{"max_n", "5"}}, [] { return bimodule_iso(5); }},
      {"heisenberg", "normalize-confluence", {{"seed", seed}}, [=] { return heis_confluence(o.seed); }},
      {"heisenberg", "fock-faithful", {{"bidegree", "4"}, {"max_degree", "8"}}, [] { return fock_faithful(4, 8); }},
      {"heisenberg", "phi-intertwining", {{"max_degree", D}}, [=] { return phi_intertwining(d); }},
      {"heisenberg", "specht-orthonormal", {{"max_degree", D}}, [=] { return specht_orthonormal(d); }},
      {"heisenberg", "heis-relation", {{"max_mn", "4"}, {"max_degree", "8"}},
       [] { return ranged(1, 4, [](int m, int n) { return verify_heis_relation(m, n, 8); }); }},
      {"heisenberg", "boson-relation", {{"max_mn", "3"}, {"max_degree", D}},
       [=] { return ranged(1, 3, [=](int m, int n) { return verify_boson_relation(m, n, d); }); }},
      {"heisenberg", "weak-fock", {{"max_mn", "3"}, {"max_degree", D}},
       [=] { return ranged(1, 3, [=](int m, int n) { return verify_weak_fock(m, n, d); }); }},
      {"bimodel", "local-relations", {{"max_rank", std::to_string(nr)}},
       [=] {
         VerificationReport r;
         for (LocalRelation rel : all_local_relations())
           for (int n = 0; n <= nr; ++n) r.append(verify_local_relation(rel, n));
         return from_report(r);
       }},
      {"bimodel", "mackey", {{"max_k", std::to_string(nr + 1)}},
       [=] {
         VerificationReport r;
         for (int k = 1; k <= nr + 1; ++k) r.append(mackey_check(k));
         return from_report(r);
       }},
      {"bimodel", "characters-vs-lr", {{"max_degree", D}}, [=] { return characters_vs_lr(d); }},
      {"bimodel", "idempotents", {{"max_n", "5"}}, [] { return idempotents(5); }},
      {"bimodel", "symmetrizer-rank", {{"max_n", "5"}}, [] { return symmetrizer_rank(5); }},
      {"diagcat", "simplify-terminates", {}, [] { return simplify_terminates(); }},
      {"diagcat", "simplify-sound", {{"max_rank", std::to_string(std::min(nr, 2))}},
       [=] { return simplify_sound(std::min(nr, 2)); }},
      {"diagcat", "closed-values", {}, [] { return closed_values(); }},
      {"diagcat", "sym-image-hom", {{"max_n", "4"}, {"seed", seed}}, [=] { return sym_image_hom(4, o.seed); }},
      {"diagcat", "idempotent-images", {{"max_n", "4"}}, [] { return idempotent_images(4); }},
      {"diagcat", "k0-relations", {{"max_mn", std::to_string(nr + 1)}},
       [=] { return ranged(1, nr + 1, [](int m, int n) { return verify_k0_relations(m, n); }); }},
  };
}

VerificationCase execute(const Entry& e) {
  VerificationCase c{e.id, e.module, e.parameters, CaseStatus::fail, {}};
  try {
    const Outcome o = e.run();
    c.status = o.pass ? CaseStatus::pass : CaseStatus::fail;
    c.detail = o.detail;
  } catch (const Error& err) {
    c.detail = err.what();
  }
  return c;
}

}  // namespace

std::vector<VerificationCase> run_suite(const SuiteOptions& options) {
  if (options.max_degree < 0 || options.max_rank < 0) throw PreconditionError("suite limits must be nonnegative");
  const std::vector<Entry> list = entries(options);
  std::vector<VerificationCase> cases;
  if (options.parallel) {
    std::vector<std::future<VerificationCase>> futures;
    for (const Entry& e : list) futures.push_back(std::async(std::launch::async, [&e] { return execute(e); }));
    for (auto& f : futures) cases.push_back(f.get());
  } else {
    for (const Entry& e : list) cases.push_back(execute(e));
  }
  std::stable_sort(cases.begin(), cases.end(), [](const VerificationCase& a, const VerificationCase& b) {
    return std::tie(a.module, a.id) < std::tie(b.module, b.id);
  });
  return cases;
}

std::vector<std::string> suite_case_ids() {
  std::vector<std::pair<std::string, std::string>> keys;
  for (const Entry& e : entries(SuiteOptions{})) keys.emplace_back(e.module, e.id);
  std::sort(keys.begin(), keys.end());
  std::vector<std::string> ids;
  for (auto& [m, id] : keys) ids.push_back(id);
  return ids;
}

std::vector<std::string> diagram_corpus() {
  return {
      "sig:",
      "sig:; cup+1; cap+1",
      "sig:; cup+1; cup+2; cap+2; cap+1",
      "sig:; cup+1; cup+1; cap+3; cap+1",
      "sig:; cup-1; cap-1",
      "sig:; cup+1; cup+2; x3; cap+2; cap+1",
      "sig:U; cup+1; x2; cap+1",
      "sig:U; cup-2; x1; cap-2",
      "sig:U; cup+2; cap-1",
      "sig:U; cup-1; cap+2",
      "sig:D; cup+1; cap-2",
      "sig:U; cup+2; x1; x1; cap-1",
      "sig:UU; x1; x1",
      "sig:UU; x1; cup+1; cap+1; x1",
      "sig:UUU; x1; x2; x1; x2",
      "sig:UUU; x1; x2; x1; x2; x1; x2",
      "sig:DU; x1; x1",
      "sig:DU; x1; x1; x1; x1",
      "sig:DU; cap+1; cup+1; x1; x1",
      "sig:UD; x1; x1",
      "sig:DD; x1; x1",
      "sig:DUU; x2; x1; x1; x2",
      "sig:UD; cup+1; x2; cap-3",
      "sig:DD; cup-3; cup-4; x3; cap+2; cap+1",
  };
}

}  // namespace heiscat
