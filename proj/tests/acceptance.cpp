// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heiscat/bimodel.hpp"
#include "heiscat/diagcat.hpp"
#include "heiscat/heisenberg.hpp"
#include "heiscat/nilcoxeter.hpp"
#include "heiscat/symfunc.hpp"
#include "heiscat/weyl.hpp"
#include "oracles.hpp"

using namespace heiscat;

namespace {

/// Collects the first few mismatches of a criterion.
struct Outcome {
  bool ok = true;
  int checks = 0;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (ok) notes << what;
    ok = false;
  }
  void require(const VerificationReport& r, const std::string& what) {
    const CheckResult* bad = r.first_failure();
    expect(bad == nullptr, bad ? what + ": " + bad->check + " (" + bad->detail + ")" : what);
  }
};

constexpr Basis kProductBases[] = {Basis::monomial, Basis::elementary, Basis::complete, Basis::schur};

oracle::Poly oracle_poly(Basis b, const oracle::Parts& lambda, int nv) {
  switch (b) {
    case Basis::monomial: return oracle::poly_m(lambda, nv);
    case Basis::elementary: return oracle::poly_e(lambda, nv);
    case Basis::complete: return oracle::poly_h(lambda, nv);
    case Basis::powersum: return oracle::poly_p(lambda, nv);
    case Basis::schur: return oracle::poly_s(lambda, nv);
  }
  return {};
}

void criterion_products(Outcome& out) {
  constexpr int nv = 10;
  constexpr int max_degree = 5;
  std::map<std::pair<Basis, oracle::Parts>, oracle::Poly> expanded;
  for (Basis b : kProductBases)
    for (const oracle::Parts& lambda : oracle::partitions_up_to(max_degree)) {
      oracle::Poly poly = oracle_poly(b, lambda, nv);
      const SymFunc f = SymFunc::term(b, oracle::to_partition(lambda));
      out.expect(oracle::to_poly(monomial_expand(f, nv)) == poly, "monomial_expand differs on " + f.str());
      expanded.emplace(std::make_pair(b, lambda), std::move(poly));
    }
  for (Basis bf : kProductBases)
    for (Basis bg : kProductBases)
      for (const oracle::Parts& lambda : oracle::partitions_up_to(max_degree))
        for (const oracle::Parts& mu : oracle::partitions_up_to(max_degree - oracle::size(lambda))) {
          const SymFunc f = SymFunc::term(bf, oracle::to_partition(lambda));
          const SymFunc g = SymFunc::term(bg, oracle::to_partition(mu));
          const oracle::Poly expected = oracle::poly_mul(expanded.at({bf, lambda}), expanded.at({bg, mu}));
          out.expect(oracle::to_poly(monomial_expand(multiply(f, g), nv)) == expected,
                     "product " + f.str() + " * " + g.str());
        }
}

void criterion_pairing(Outcome& out) {
  const std::vector<Partition> parts = partitions_up_to(6);
  for (const Partition& a : parts)
    for (const Partition& b : parts) {
      const Rational delta = a == b ? 1 : 0;
      out.expect(hall_pairing(m_basis(a), h_basis(b)) == delta, "<m" + a.str() + ", h" + b.str() + ">");
      out.expect(hall_pairing(s_basis(a), s_basis(b)) == delta, "<s" + a.str() + ", s" + b.str() + ">");
    }
}

SymTensor tensor_product(const SymTensor& x, const SymTensor& y) {
  SymTensor out{x.left, x.right, {}};
  for (const auto& [ab, c] : x.terms)
    for (const auto& [cd, d] : y.terms) {
      const SymFunc l = multiply(SymFunc::term(x.left, ab.first), SymFunc::term(y.left, cd.first));
      const SymFunc r = multiply(SymFunc::term(x.right, ab.second), SymFunc::term(y.right, cd.second));
      for (const auto& [lp, lc] : l.terms())
        for (const auto& [rp, rc] : r.terms()) {
          Rational& slot = out.terms[{lp, rp}];
          slot += c * d * lc * rc;
        }
    }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SymFunc counit_left(const SymTensor& t) {
  SymFunc out(t.right);
  for (const auto& [ab, c] : t.terms)
    if (ab.first.empty()) out = out + SymFunc::term(t.right, ab.second, c);
  return out;
}

SymFunc counit_right(const SymTensor& t) {
  SymFunc out(t.left);
  for (const auto& [ab, c] : t.terms)
    if (ab.second.empty()) out = out + SymFunc::term(t.left, ab.first, c);
  return out;
}

SymFunc antipode_convolution(const SymTensor& t) {
  SymFunc out(t.left);
  for (const auto& [ab, c] : t.terms)
    out = out + multiply(antipode(SymFunc::term(t.left, ab.first)), SymFunc::term(t.right, ab.second)) * c;
  return out;
}

void criterion_hopf(Outcome& out) {
  std::vector<SymFunc> gens;
  for (int n = 1; n <= 6; ++n) {
    gens.push_back(e_basis(Partition::row(n)));
    gens.push_back(h_basis(Partition::row(n)));
    gens.push_back(p_basis(Partition::row(n)));
    gens.push_back(s_basis(Partition::row(n)));
    gens.push_back(m_basis(Partition::row(n)));
  }
  for (const SymFunc& a : gens) {
    const SymTensor da = coproduct(a);
    out.expect(counit_left(da) == a, "left counit on " + a.str());
    out.expect(counit_right(da) == a, "right counit on " + a.str());
    out.expect(antipode_convolution(da) == SymFunc::one() * counit(a), "antipode law on " + a.str());
    out.expect(counit(a) == 0, "counit of " + a.str());
  }
  // Coproducts of the three generator families, term by term.
  for (int n = 1; n <= 6; ++n) {
    SymTensor expect_e{Basis::elementary, Basis::elementary, {}};
    SymTensor expect_h{Basis::complete, Basis::complete, {}};
    for (int k = 0; k <= n; ++k) {
      expect_e.terms[{Partition::row(k), Partition::row(n - k)}] = 1;
      expect_h.terms[{Partition::row(k), Partition::row(n - k)}] = 1;
    }
    SymTensor expect_p{Basis::powersum, Basis::powersum, {}};
    expect_p.terms[{Partition::row(n), Partition()}] = 1;
    expect_p.terms[{Partition(), Partition::row(n)}] = 1;
    out.expect(coproduct(e_basis(Partition::row(n))) == expect_e, "coproduct of e" + std::to_string(n));
    out.expect(coproduct(h_basis(Partition::row(n))) == expect_h, "coproduct of h" + std::to_string(n));
    out.expect(coproduct(p_basis(Partition::row(n))) == expect_p, "coproduct of p" + std::to_string(n));
    const SymFunc sign_h = h_basis(Partition::row(n)) * Rational(n % 2 ? -1 : 1);
    out.expect(antipode(e_basis(Partition::row(n))) == sign_h, "antipode of e" + std::to_string(n));
  }
  for (const SymFunc& a : gens)
    for (const SymFunc& b : gens) {
      const int d = a.degree() + b.degree();
      if (d > 6) continue;
      out.expect(coproduct(multiply(a, b)) == tensor_product(coproduct(a), coproduct(b)),
                 "coproduct multiplicative on " + a.str() + ", " + b.str());
      for (const SymFunc& c : gens) {
        if (c.degree() != d) continue;
        SymTensor ab{a.basis(), b.basis(), {{{a.terms().begin()->first, b.terms().begin()->first}, 1}}};
        out.expect(hall_pairing(multiply(a, b), c) == tensor_pairing(ab, coproduct(c)),
                   "Hopf pairing on " + a.str() + ", " + b.str() + ", " + c.str());
      }
    }
  // The Hopf pairing also on products of generators against all Schur functions.
  for (const SymFunc& a : gens)
    for (const SymFunc& b : gens) {
      const int d = a.degree() + b.degree();
      if (d > 6) continue;
      SymTensor ab{a.basis(), b.basis(), {{{a.terms().begin()->first, b.terms().begin()->first}, 1}}};
      for (const Partition& nu : partitions_of(d))
        out.expect(hall_pairing(multiply(a, b), s_basis(nu)) == tensor_pairing(ab, coproduct(s_basis(nu))),
                   "Hopf pairing against s" + nu.str());
    }
}

void criterion_weyl_squares(Outcome& out) {
  const WeylElement x = WeylElement::x();
  const WeylElement d = WeylElement::d();
  for (int n = 0; n <= 10; ++n) {
    const std::string tag = " at n=" + std::to_string(n);
    const KVector L = KVector::basis(Flavor::simples, n);
    const KVector N = KVector::basis(Flavor::projectives, n);
    // Class values of induction and restriction.
    out.expect(ind_K(L) == KVector::basis(Flavor::simples, n + 1, n + 1), "[Ind L] = (n+1)[L]" + tag);
    out.expect(ind_K(N) == KVector::basis(Flavor::projectives, n + 1), "[Ind N] = [N]" + tag);
    if (n >= 1) {
      out.expect(res_K(L) == KVector::basis(Flavor::simples, n - 1), "[Res L] = [L]" + tag);
      out.expect(res_K(N) == KVector::basis(Flavor::projectives, n - 1, n), "[Res N] = n[N]" + tag);
    }
    // The four squares: Ind is x and Res is d on both lattices.
    out.expect(phi_G(ind_K(L)) == weyl_apply(x, phi_G(L)), "G square for Ind" + tag);
    out.expect(phi_G(res_K(L)) == weyl_apply(d, phi_G(L)), "G square for Res" + tag);
    out.expect(phi_K(ind_K(N)) == weyl_apply(x, phi_K(N)), "K square for Ind" + tag);
    out.expect(phi_K(res_K(N)) == weyl_apply(d, phi_K(N)), "K square for Res" + tag);
    // Res Ind - Ind Res = id.
    out.expect(res_K(ind_K(L)) - ind_K(res_K(L)) == L, "Res Ind - Ind Res on L" + tag);
    out.expect(res_K(ind_K(N)) - ind_K(res_K(N)) == N, "Res Ind - Ind Res on N" + tag);
    // The pairing of the two lattices is preserved by the adjoint pair.
    for (int m = 0; m <= 10; ++m) {
      const KVector Nm = KVector::basis(Flavor::projectives, m);
      out.expect(k_pairing(ind_K(Nm), L) == k_pairing(Nm, res_K(L)), "Ind/Res adjoint" + tag);
    }
  }
  const WeylElement dx = weyl_multiply(d, x);
  const WeylElement xd = weyl_multiply(x, d);
  out.expect(dx - xd == WeylElement::one(), "dx - xd = 1");
}

void criterion_bimodule_iso(Outcome& out) {
  for (int n = 1; n <= 5; ++n) {
    const VerificationReport r = verify_bimodule_iso(n);
    out.require(r, "verify_bimodule_iso(" + std::to_string(n) + ")");
    const long lhs = oracle::factorial(n) + n * oracle::factorial(n);
    out.expect(lhs == oracle::factorial(n + 1), "n! + n n! = (n+1)!");
    out.expect(x_right_basis(n).size() == static_cast<std::size_t>(n + 1), "coset basis size");
  }
}

oracle::SchurVec basis_vec(const oracle::Parts& lambda) { return {{lambda, 1}}; }

oracle::SchurVec add(oracle::SchurVec a, const oracle::SchurVec& b) {
  for (const auto& [p, c] : b) oracle::add_to(a, p, c);
  return a;
}

void criterion_heisenberg(Outcome& out) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const std::string tag = " for m=" + std::to_string(m) + ", n=" + std::to_string(n);
      const HeisNormal lhs = heis_normalize({HeisLetter::Hstar(m), HeisLetter::E(n)});
      const HeisNormal rhs = HeisNormal::term(Partition::row(n), Partition::row(m)) +
                             HeisNormal::term(Partition::row(n - 1), Partition::row(m - 1));
      out.expect(lhs == rhs, "normal form" + tag + ": " + lhs.str());
      out.require(verify_heis_relation(m, n, 8), "verify_heis_relation" + tag);
      for (const oracle::Parts& lambda : oracle::partitions_up_to(8)) {
        const oracle::SchurVec s = basis_vec(lambda);
        const oracle::SchurVec left = oracle::skew_h(m, oracle::pieri_e(n, s));
        const oracle::SchurVec right =
            add(oracle::pieri_e(n, oracle::skew_h(m, s)), oracle::pieri_e(n - 1, oracle::skew_h(m - 1, s)));
        out.expect(left == right, "Pieri operators" + tag);
        if (oracle::size(lambda) + n <= 10) {
          const SymFunc f = fock_apply(lhs, s_basis(oracle::to_partition(lambda)));
          out.expect(oracle::to_schur_vec(f) == left, "fock_apply" + tag);
        }
      }
    }
}

void criterion_boson(Outcome& out) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const std::string tag = " for m=" + std::to_string(m) + ", n=" + std::to_string(n);
      out.require(verify_boson_relation(m, n, 6), "verify_boson_relation" + tag);
      for (const oracle::Parts& lambda : oracle::partitions_up_to(6)) {
        const oracle::SchurVec s = basis_vec(lambda);
        oracle::SchurVec comm = oracle::mn_remove(m, oracle::mn_multiply(n, s));
        const oracle::SchurVec other = oracle::mn_multiply(n, oracle::mn_remove(m, s));
        for (const auto& [p, c] : other) oracle::add_to(comm, p, -c);
        oracle::SchurVec expected;
        if (m == n) expected[lambda] = n;
        out.expect(comm == expected, "Murnaghan-Nakayama commutator" + tag);
        const SymFunc sl = s_basis(oracle::to_partition(lambda));
        out.expect(oracle::to_schur_vec(multiply(sl, p_basis(Partition::row(n)))) == oracle::mn_multiply(n, s),
                   "p_n s_lambda" + tag);
        out.expect(oracle::to_schur_vec(dual_apply(p_basis(Partition::row(m)), sl)) == oracle::mn_remove(m, s),
                   "p_m^* s_lambda" + tag);
      }
    }
}

void criterion_weak_fock(Outcome& out) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      out.require(verify_weak_fock(m, n, 6), "verify_weak_fock(" + std::to_string(m) + ", " + std::to_string(n) + ")");
  for (const oracle::Parts& lambda : oracle::partitions_up_to(6))
    for (const oracle::Parts& mu : oracle::partitions_up_to(6 - oracle::size(lambda))) {
      const Partition l = oracle::to_partition(lambda);
      const Partition u = oracle::to_partition(mu);
      const auto lr = lr_coefficients(l, u);
      const auto ch = induced_character_decomposition(l, u);
      out.expect(lr == ch, "lr vs characters on " + l.str() + ", " + u.str());
      oracle::SchurVec lr_vec;
      for (const auto& [nu, c] : lr) lr_vec[nu.parts()] = c;
      out.expect(lr_vec == oracle::lr_by_characters(lambda, mu), "lr vs Murnaghan-Nakayama characters on " +
                                                                     l.str() + ", " + u.str());
    }
  for (const oracle::Parts& lambda : oracle::partitions_up_to(5)) {
    const auto chi = character(oracle::to_partition(lambda));
    for (const oracle::Parts& rho : oracle::partitions(oracle::size(lambda)))
      out.expect(chi.at(oracle::to_partition(rho)) == Rational(oracle::mn_character(lambda, rho)),
                 "character table entry");
  }
}

void criterion_local_relations(Outcome& out) {
  for (LocalRelation r : all_local_relations())
    for (int n = 0; n <= 3; ++n)
      out.require(verify_local_relation(r, n), relation_name(r) + " at n=" + std::to_string(n));
  const Morphism circle = Morphism::parse("sig:; cup+1; cap+1");
  const Morphism closed_curl = Morphism::parse("sig:; cup+1; cup+2; x3; cap+2; cap+1");
  const Morphism open_curl = Morphism::parse("sig:U; cup+1; x2; cap+1");
  const ClosedValue cv = evaluate_closed(circle);
  out.expect(std::holds_alternative<Rational>(cv) && std::get<Rational>(cv) == 1, "ccw circle evaluates to 1");
  const ClosedValue lv = evaluate_closed(closed_curl);
  out.expect(std::holds_alternative<Rational>(lv) && std::get<Rational>(lv) == 0, "closed left curl evaluates to 0");
  out.expect(simplify(open_curl).is_zero(), "left curl simplifies to 0");
  for (int n = 0; n <= 3; ++n) {
    const LinearMapRep c = diagram_to_map(circle, n);
    out.expect(c == LinearMapRep::identity(TensorBasis({}, n)), "ccw circle is 1 at n=" + std::to_string(n));
    out.expect(c.rows == static_cast<std::size_t>(oracle::factorial(n)), "circle acts on A_n");
    out.expect(realized_map(open_curl, n).is_zero(), "left curl is 0 at n=" + std::to_string(n));
    out.expect(realized_map(closed_curl, n).is_zero(), "closed left curl is 0 at n=" + std::to_string(n));
  }
}

void criterion_k0(Outcome& out) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const std::string tag = " for m=" + std::to_string(m) + ", n=" + std::to_string(n);
      out.require(verify_k0_relations(m, n), "verify_k0_relations" + tag);
      // The class of S^n (x) Lambda^m acts on the Fock space as h_n^* e_m.
      const HeisNormal cls = k0_class({{IdempotentKind::S_down, n}, {IdempotentKind::Lambda_up, m}});
      for (const oracle::Parts& lambda : oracle::partitions_up_to(4)) {
        const oracle::SchurVec expected = oracle::skew_h(n, oracle::pieri_e(m, basis_vec(lambda)));
        out.expect(oracle::to_schur_vec(fock_apply(cls, s_basis(oracle::to_partition(lambda)))) == expected,
                   "class acts as h* e" + tag);
      }
      // Dimensions in the bimodule model against double-coset counts.
      for (int k = 0; k <= 3; ++k) {
        const int N = k + m;
        std::vector<int> sym, alt;
        if (N - n >= 0)
          for (int i = N - n + 1; i <= N; ++i) sym.push_back(i);
        for (int i = k + 1; i <= N; ++i) alt.push_back(i);
        const long lhs = N - n >= 0 ? oracle::sym_alt_dimension(N, sym, alt) : 0;
        auto reversed = [&](int mm, int nn) -> long {
          if (mm < 0 || nn < 0 || k - nn < 0) return 0;
          return oracle::binomial(k - nn + mm, mm) * oracle::factorial(k) / oracle::factorial(nn);
        };
        const std::string at = tag + ", k=" + std::to_string(k);
        out.expect(idempotent_image_dimension(n, m, false, k) == Integer(lhs), "dim S^n Lambda^m" + at);
        out.expect(idempotent_image_dimension(n, m, true, k) == Integer(reversed(m, n)), "dim Lambda^m S^n" + at);
        out.expect(lhs == reversed(m, n) + reversed(m - 1, n - 1), "dimension identity" + at);
      }
    }
  for (int k = 1; k <= 4; ++k) {
    out.require(mackey_check(k), "mackey_check(" + std::to_string(k) + ")");
    out.expect(oracle::factorial(k + 1) == k * oracle::factorial(k) + oracle::factorial(k), "(k+1)! = k k! + k!");
  }
}

struct Criterion {
  int number;
  std::string title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "products agree with polynomial multiplication (m, e, h, s; degree <= 5; 10 variables)",
       criterion_products},
      {2, "<m, h> and <s, s> are Kronecker deltas up to degree 6", criterion_pairing},
      {3, "bialgebra, counit, antipode and Hopf pairing identities on generators up to degree 6", criterion_hopf},
      {4, "Weyl categorification squares for n <= 10 and Res Ind - Ind Res = id", criterion_weyl_squares},
      {5, "nilCoxeter bimodule isomorphism for 1 <= n <= 5", criterion_bimodule_iso},
      {6, "h*_m e_n = e_n h*_m + e_{n-1} h*_{m-1} structurally and on s_lambda, |lambda| <= 8",
       criterion_heisenberg},
      {7, "boson relation q_m p_n - p_n q_m = n delta id up to degree 6", criterion_boson},
      {8, "weak Fock functor relations and Littlewood-Richardson vs characters", criterion_weak_fock},
      {9, "local relations at n <= 3, circle = 1 and left curl = 0", criterion_local_relations},
      {10, "K0 relations for 1 <= m, n <= 4 and Mackey decomposition for k <= 4", criterion_k0},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome out;
    try {
      c.run(out);
    } catch (const std::exception& e) {
      if (out.ok) out.notes << "exception: " << e.what();
      out.ok = false;
    }
    all = all && out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << out.checks
              << " checks]";
    if (!out.ok) std::cout << " -- " << out.notes.str();
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
