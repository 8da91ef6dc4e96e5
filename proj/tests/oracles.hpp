#pragma once

// Test-local reference implementations.  Nothing here calls into the library
// except for the final conversion helpers at the bottom; the combinatorics
// is redone from scratch on plain vectors.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "heiscat/combinatorics.hpp"
#include "heiscat/symfunc.hpp"

namespace oracle {

using heiscat::Integer;
using heiscat::Rational;

using Parts = std::vector<int>;
using Poly = std::map<std::vector<int>, Integer>;
/// Linear combination of Schur functions keyed by the parts of the shape;
/// the same container type as Poly, so add_to serves both.
using SchurVec = std::map<Parts, Integer>;

inline std::vector<Parts> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {Parts{}};
  std::vector<Parts> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (Parts rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

inline std::vector<Parts> partitions_up_to(int n) {
  std::vector<Parts> out;
  for (int d = 0; d <= n; ++d)
    for (Parts& p : partitions(d)) out.push_back(std::move(p));
  return out;
}

inline int size(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Parts conjugate(const Parts& p) {
  Parts c(p.empty() ? 0 : static_cast<std::size_t>(p.front()), 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) ++c[static_cast<std::size_t>(j)];
  return c;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---- polynomials in nv variables --------------------------------------------

inline void add_to(Poly& p, const std::vector<int>& e, const Integer& c) {
  Integer& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

inline Poly poly_one(int nv) { return Poly{{std::vector<int>(static_cast<std::size_t>(nv), 0), 1}}; }

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_to(out, e, ca * cb);
    }
  return out;
}

/// Sum over distinct placements of the parts of lambda into nv slots.
inline Poly poly_m(const Parts& lambda, int nv) {
  Poly out;
  std::vector<int> e(static_cast<std::size_t>(nv), 0);
  std::set<std::vector<int>> seen;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == lambda.size()) {
      if (seen.insert(e).second) add_to(out, e, 1);
      return;
    }
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] == 0) {
        e[v] = lambda[k];
        place(k + 1);
        e[v] = 0;
      }
  };
  if (static_cast<int>(lambda.size()) <= nv) place(0);
  return out;
}

/// e_n: squarefree monomials of degree n.
inline Poly poly_e1(int n, int nv) {
  Poly out;
  std::vector<int> e(static_cast<std::size_t>(nv), 0);
  std::function<void(int, int)> pick = [&](int from, int left) {
    if (left == 0) {
      add_to(out, e, 1);
      return;
    }
    for (int v = from; v < nv; ++v) {
      e[static_cast<std::size_t>(v)] = 1;
      pick(v + 1, left - 1);
      e[static_cast<std::size_t>(v)] = 0;
    }
  };
  pick(0, n);
  return out;
}

/// h_n: every monomial of degree n.
inline Poly poly_h1(int n, int nv) {
  Poly out;
  std::vector<int> e(static_cast<std::size_t>(nv), 0);
  std::function<void(int, int)> fill = [&](int v, int left) {
    if (v == nv - 1) {
      e[static_cast<std::size_t>(v)] = left;
      add_to(out, e, 1);
      e[static_cast<std::size_t>(v)] = 0;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(v)] = k;
      fill(v + 1, left - k);
    }
    e[static_cast<std::size_t>(v)] = 0;
  };
  fill(0, n);
  return out;
}

inline Poly poly_p1(int n, int nv) {
  Poly out;
  for (int v = 0; v < nv; ++v) {
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    e[static_cast<std::size_t>(v)] = n;
    add_to(out, e, 1);
  }
  return out;
}

inline Poly poly_product(const Parts& lambda, int nv, Poly (*one_part)(int, int)) {
  Poly out = poly_one(nv);
  for (int part : lambda) out = poly_mul(out, one_part(part, nv));
  return out;
}

inline Poly poly_e(const Parts& l, int nv) { return poly_product(l, nv, poly_e1); }
inline Poly poly_h(const Parts& l, int nv) { return poly_product(l, nv, poly_h1); }
inline Poly poly_p(const Parts& l, int nv) { return poly_product(l, nv, poly_p1); }

/// Sum of x^T over semistandard tableaux of shape lambda with entries 1..nv.
inline Poly poly_s(const Parts& lambda, int nv) {
  Poly out;
  std::vector<std::vector<int>> t;
  for (int row : lambda) t.emplace_back(static_cast<std::size_t>(row), 0);
  std::vector<int> e(static_cast<std::size_t>(nv), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      add_to(out, e, 1);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= nv; ++v) {
      t[r][c] = v;
      ++e[static_cast<std::size_t>(v - 1)];
      fill(k + 1);
      --e[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0);
  return out;
}

// ---- Schur-basis operators ---------------------------------------------------

inline Parts trimmed(Parts p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Shapes mu containing lambda with mu / lambda a horizontal strip of n boxes.
inline std::vector<Parts> add_horizontal_strip(const Parts& lambda, int n) {
  std::vector<Parts> out;
  Parts mu(lambda.size() + 1, 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i == mu.size()) {
      if (left == 0) out.push_back(trimmed(mu));
      return;
    }
    const int low = i < lambda.size() ? lambda[i] : 0;
    const int high = i == 0 ? low + left : std::min(low + left, lambda[i - 1]);
    for (int v = low; v <= high; ++v) {
      mu[i] = v;
      go(i + 1, left - (v - low));
    }
  };
  go(0, n);
  return out;
}

/// Shapes mu inside lambda with lambda / mu a horizontal strip of n boxes.
inline std::vector<Parts> remove_horizontal_strip(const Parts& lambda, int n) {
  std::vector<Parts> out;
  Parts mu(lambda.size(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i == lambda.size()) {
      if (left == 0) out.push_back(trimmed(mu));
      return;
    }
    const int below = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= below && lambda[i] - v <= left; --v) {
      mu[i] = v;
      go(i + 1, left - (lambda[i] - v));
    }
  };
  go(0, n);
  return out;
}

inline std::vector<Parts> add_vertical_strip(const Parts& lambda, int n) {
  std::vector<Parts> out;
  for (const Parts& c : add_horizontal_strip(conjugate(lambda), n)) out.push_back(conjugate(c));
  return out;
}

/// e_n s_lambda by the dual Pieri rule.
inline SchurVec pieri_e(int n, const SchurVec& v) {
  SchurVec out;
  for (const auto& [lambda, c] : v)
    for (const Parts& mu : add_vertical_strip(lambda, n)) add_to(out, mu, c);
  return out;
}

/// h_m^* s_lambda = s_{lambda / (m)}.
inline SchurVec skew_h(int m, const SchurVec& v) {
  SchurVec out;
  for (const auto& [lambda, c] : v)
    for (const Parts& mu : remove_horizontal_strip(lambda, m)) add_to(out, mu, c);
  return out;
}

/// First-column hook lengths with `len` beads: beta_i = lambda_i + len - i.
inline std::vector<int> beta_numbers(const Parts& lambda, std::size_t len) {
  std::vector<int> b(len);
  for (std::size_t i = 0; i < len; ++i)
    b[i] = (i < lambda.size() ? lambda[i] : 0) + static_cast<int>(len - i - 1);
  return b;
}

inline Parts from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  Parts p(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) p[i] = b[i] - static_cast<int>(b.size() - i - 1);
  return trimmed(p);
}

/// Moves one bead by `shift` (positive adds a rim hook, negative removes one)
/// and returns every resulting (shape, sign) with sign (-1)^{height}.
inline std::vector<std::pair<Parts, int>> move_bead(const Parts& lambda, int shift) {
  const std::size_t len = lambda.size() + static_cast<std::size_t>(std::abs(shift)) + 1;
  const std::vector<int> b = beta_numbers(lambda, len);
  std::set<int> beads(b.begin(), b.end());
  std::vector<std::pair<Parts, int>> out;
  for (int bead : b) {
    const int target = bead + shift;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int x : b)
      if (x > std::min(bead, target) && x < std::max(bead, target)) ++between;
    std::vector<int> moved(b);
    std::replace(moved.begin(), moved.end(), bead, target);
    out.emplace_back(from_beta(moved), between % 2 ? -1 : 1);
  }
  return out;
}

/// p_n s_lambda by Murnaghan-Nakayama.
inline SchurVec mn_multiply(int n, const SchurVec& v) {
  SchurVec out;
  for (const auto& [lambda, c] : v)
    for (const auto& [mu, sign] : move_bead(lambda, n)) add_to(out, mu, c * sign);
  return out;
}

/// p_n^* s_lambda: remove rim hooks.
inline SchurVec mn_remove(int n, const SchurVec& v) {
  SchurVec out;
  for (const auto& [lambda, c] : v)
    for (const auto& [mu, sign] : move_bead(lambda, -n)) add_to(out, mu, c * sign);
  return out;
}

/// chi^lambda at cycle type rho, stripping rim hooks of the parts of rho.
inline Integer mn_character(const Parts& lambda, const Parts& rho) {
  if (rho.empty()) return size(lambda) == 0 ? 1 : 0;
  const Parts rest(rho.begin() + 1, rho.end());
  Integer total = 0;
  for (const auto& [mu, sign] : move_bead(lambda, -rho.front())) total += sign * mn_character(mu, rest);
  return total;
}

inline long centralizer(const Parts& rho) {
  std::map<int, int> mult;
  for (int r : rho) ++mult[r];
  long z = 1;
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return z;
}

/// Multiplicities of s_nu in s_lambda s_mu from characters: the inner product
/// of chi^nu with the induced character.
inline SchurVec lr_by_characters(const Parts& lambda, const Parts& mu) {
  SchurVec out;
  const int a = size(lambda);
  const int b = size(mu);
  for (const Parts& nu : partitions(a + b)) {
    Rational total = 0;
    for (const Parts& rho : partitions(a))
      for (const Parts& tau : partitions(b)) {
        Parts joint(rho);
        joint.insert(joint.end(), tau.begin(), tau.end());
        std::sort(joint.rbegin(), joint.rend());
        total += Rational(mn_character(lambda, rho) * mn_character(mu, tau) * mn_character(nu, joint),
                          Integer(centralizer(rho) * centralizer(tau)));
      }
    total.canonicalize();
    if (total != 0) out[nu] = total.get_num();
  }
  return out;
}

// ---- permutations ------------------------------------------------------------

/// dim e A_N e' where e symmetrizes the letters in `sym` and e' antisymmetrizes
/// the letters in `alt`: one dimension per double coset H w K on which the
/// trivial and sign characters agree, i.e. w^{-1}(sym) meets alt at most once.
inline long sym_alt_dimension(int N, const std::vector<int>& sym, const std::vector<int>& alt) {
  std::vector<int> w(static_cast<std::size_t>(N));
  std::iota(w.begin(), w.end(), 1);
  std::set<int> in_sym(sym.begin(), sym.end());
  long good = 0;
  do {
    int meet = 0;
    for (int a : alt)
      if (in_sym.count(w[static_cast<std::size_t>(a - 1)])) ++meet;
    if (meet <= 1) ++good;
  } while (std::next_permutation(w.begin(), w.end()));
  return good / (factorial(static_cast<int>(sym.size())) * factorial(static_cast<int>(alt.size())));
}

// ---- conversions from library types -----------------------------------------

inline heiscat::Partition to_partition(const Parts& p) { return heiscat::Partition(p); }

inline SchurVec to_schur_vec(const heiscat::SymFunc& f) {
  SchurVec out;
  const heiscat::SymFunc in_schur = heiscat::convert(f, heiscat::Basis::schur);
  for (const auto& [lambda, c] : in_schur.terms()) {
    if (!heiscat::is_integral(c)) throw std::runtime_error("non-integral Schur coefficient");
    out[lambda.parts()] = c.get_num();
  }
  return out;
}

inline Poly to_poly(const heiscat::Polynomial& p) {
  Poly out;
  for (const auto& [e, c] : p) {
    if (!heiscat::is_integral(c)) throw std::runtime_error("non-integral polynomial coefficient");
    out[e] = c.get_num();
  }
  return out;
}

}  // namespace oracle
