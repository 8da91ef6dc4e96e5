#pragma once

// Nilcoxeter algebras N_n with basis u_w (w in S_n), the induction bimodule
// basis of N_{n+1} over N_n, the bimodule decomposition behind the Weyl
// relation, and the Grothendieck-group model of induction and restriction.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "heiscat/combinatorics.hpp"
#include "heiscat/linalg.hpp"
#include "heiscat/report.hpp"
#include "heiscat/scalar.hpp"
#include "heiscat/weyl.hpp"

namespace heiscat {

struct RankMismatch : Error {
  explicit RankMismatch(const std::string& what) : Error("RankMismatch", what) {}
};

struct FlavorMismatch : Error {
  explicit FlavorMismatch(const std::string& what) : Error("FlavorMismatch", what) {}
};

class NilcoxElem {
 public:
  using Terms = std::map<Permutation, Integer>;

  explicit NilcoxElem(int n = 0) : n_(n) {}
  /// Throws RankMismatch if a permutation has a rank other than n.
  NilcoxElem(int n, Terms terms);

  static NilcoxElem u(const Permutation& w, const Integer& coeff = 1);
  static NilcoxElem one(int n) { return u(Permutation::identity(n)); }
  /// The generator u_i of N_n.
  static NilcoxElem generator(int i, int n);

  int rank() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(const Permutation& w) const;

  NilcoxElem operator+(const NilcoxElem& other) const;
  NilcoxElem operator-(const NilcoxElem& other) const;
  NilcoxElem operator*(const Integer& scalar) const;
  /// Same element viewed in N_m, m >= rank.
  NilcoxElem embedded(int m) const;

  friend bool operator==(const NilcoxElem&, const NilcoxElem&) = default;

  /// `3 u[] + u[1,2]`, each bracket holding the canonical reduced word.
  std::string str() const;
  /// Brackets must hold reduced words.  With n < 0 the rank is the largest
  /// letter plus one.
  static NilcoxElem parse(std::string_view text, int n = -1);

 private:
  int n_;
  Terms terms_;
};

/// u_v u_w = u_{vw} when lengths add, else 0.
NilcoxElem nc_product(const NilcoxElem& a, const NilcoxElem& b);

/// Reference product on words: concatenates reduced words and explores the
/// braid-move class; the product vanishes iff some word in the class has two
/// equal adjacent letters.
NilcoxElem nc_product_by_words(const NilcoxElem& a, const NilcoxElem& b);

/// u_{i_1} ... u_{i_k} in N_n.
NilcoxElem nc_word(const GeneratorWord& word);

/// [1, u_n, u_{n-1}u_n, ..., u_1...u_n] in N_{n+1}.
std::vector<NilcoxElem> x_right_basis(int n);

struct RightFactor {
  /// Position in x_right_basis(n).
  int index = 0;
  /// Right factor in S_n.
  Permutation rest;
};

/// u_w = x_right_basis(n)[index] * u_rest for w in S_{n+1}.
RightFactor x_right_factor(const Permutation& w);

/// Checks that N_n (+) (N_n (x)_{N_{n-1}} N_n) -> N_{n+1} given by the unit
/// inclusion and a (x) b -> a u_n b is an isomorphism of bimodules.
VerificationReport verify_bimodule_iso(int n);

enum class Flavor {
  /// Classes of the simple modules L_n.
  simples,
  /// Classes of the projective modules N_n.
  projectives,
};

std::string flavor_name(Flavor f);

struct KVector {
  Flavor flavor = Flavor::simples;
  std::map<int, Integer> coords;

  static KVector basis(Flavor flavor, int n, const Integer& coeff = 1);
  KVector& prune();
  KVector operator+(const KVector& other) const;
  KVector operator-(const KVector& other) const;
  friend bool operator==(const KVector&, const KVector&) = default;
  std::string str() const;
};

KVector ind_K(const KVector& v);
KVector res_K(const KVector& v);

/// <[N_m], [L_n]> = delta.
Integer k_pairing(const KVector& projective, const KVector& simple);

/// A module presented by the action matrices of the generators u_1..u_{n-1}.
struct ModuleRep {
  std::size_t dim = 0;
  std::vector<Matrix> generators;
};

/// N_n acting on itself by left multiplication, columns indexed by
/// Permutation::index().
ModuleRep regular_module(int n);
/// The one-dimensional simple L_n, on which every u_i acts by zero.
ModuleRep simple_module(int n);
/// dim {F : F A_i = B_i F for all i}, the dimension of Hom(source, target).
std::size_t hom_dimension(const ModuleRep& source, const ModuleRep& target);

PolyVector phi_G(const KVector& v);
PolyVector phi_K(const KVector& v);

}  // namespace heiscat
