#pragma once

// The ring Sym of symmetric functions in the bases m, e, h, p and s.
//
// Coefficients are exact rationals.  Every basis except the power sums is a
// Z-basis, so outside `powersum` coefficients are kept integral and any
// operation that would break that throws NonIntegralResult.  The monomial
// basis is the pivot: all conversions go through transition matrices to m,
// which are computed once per (basis, degree) and cached.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heiscat/combinatorics.hpp"
#include "heiscat/scalar.hpp"

namespace heiscat {

enum class Basis { monomial, elementary, complete, powersum, schur };

/// Single-letter tag used by the literal grammar: m, e, h, p, s.
char basis_letter(Basis b);
Basis basis_from_letter(char c);
std::string basis_name(Basis b);

struct NonIntegralResult : Error {
  explicit NonIntegralResult(const std::string& what) : Error("NonIntegralResult", what) {}
};

struct InsufficientVariables : Error {
  explicit InsufficientVariables(const std::string& what) : Error("InsufficientVariables", what) {}
};

class SymFunc {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymFunc(Basis basis = Basis::schur) : basis_(basis) {}
  /// Drops zero coefficients; throws NonIntegralResult on a fractional
  /// coefficient outside the power-sum basis.
  SymFunc(Basis basis, Terms terms);

  static SymFunc term(Basis basis, const Partition& lambda, const Rational& coeff = 1);
  static SymFunc one(Basis basis = Basis::schur) { return term(basis, Partition()); }

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  Rational coeff(const Partition& lambda) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest partition size present; 0 for the zero element.
  int degree() const;
  bool is_homogeneous() const;
  /// Degree-d part, in the same basis.
  SymFunc component(int d) const;
  /// Every nonzero homogeneous component keyed by degree.
  std::map<int, SymFunc> components() const;

  /// Result keeps the basis of the left operand.
  SymFunc operator+(const SymFunc& other) const;
  SymFunc operator-(const SymFunc& other) const;
  SymFunc operator-() const;
  SymFunc operator*(const Rational& scalar) const;

  /// Equality in Sym: both sides are compared in the monomial basis.
  bool operator==(const SymFunc& other) const;

  /// Literal in the element's own basis, e.g. `s[2,1] + 2 m[1,1,1]`.
  std::string str() const;
  static SymFunc parse(std::string_view text);

  /// `{"basis":"schur","terms":[{"partition":[2,1],"num":"1","den":"1"}]}`.
  std::string to_json() const;
  static SymFunc from_json(std::string_view text);

 private:
  friend struct SymAccess;
  Basis basis_;
  Terms terms_;
};

SymFunc operator*(const Rational& scalar, const SymFunc& f);

/// Basis element shorthands.
SymFunc m_basis(const Partition& lambda);
SymFunc e_basis(const Partition& lambda);
SymFunc h_basis(const Partition& lambda);
SymFunc p_basis(const Partition& lambda);
SymFunc s_basis(const Partition& lambda);

SymFunc convert(const SymFunc& f, Basis target);
/// Product in Sym, returned in the basis of `f`.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Rational>;

/// Image of f in Q[x_1..x_nvars]; throws InsufficientVariables when some
/// monomial term m_lambda of f has more parts than nvars, since it would
/// silently vanish.
Polynomial monomial_expand(const SymFunc& f, int nvars);
Polynomial multiply_polynomials(const Polynomial& a, const Polynomial& b);

/// Element of Sym (x) Sym as a sparse map over pairs of basis indices.
struct SymTensor {
  Basis left = Basis::schur;
  Basis right = Basis::schur;
  std::map<std::pair<Partition, Partition>, Rational> terms;

  SymTensor in_bases(Basis l, Basis r) const;
  bool operator==(const SymTensor& other) const;
};

/// Coproduct in the basis of `f` on both tensor factors.
SymTensor coproduct(const SymFunc& f);
Rational counit(const SymFunc& f);
SymFunc antipode(const SymFunc& f);

/// Bilinear form with <m_lambda, h_mu> = delta.
Rational hall_pairing(const SymFunc& f, const SymFunc& g);
/// <a (x) b, c (x) d> = <a,c><b,d>.
Rational tensor_pairing(const SymTensor& x, const SymTensor& y);
/// Multiplication map Sym (x) Sym -> Sym, in the left basis of `x`.
SymFunc tensor_multiply(const SymTensor& x);

/// Jacobi-Trudi determinant det(h_{lambda_i - i + j}), in the complete basis.
SymFunc schur(const Partition& lambda);

std::map<Partition, Integer> lr_coefficients(const Partition& lambda, const Partition& mu);

/// f*(g): adjoint of multiplication by f under the Hall form, returned in
/// the basis of `g`.
SymFunc dual_apply(const SymFunc& f, const SymFunc& g);

/// Transition matrix from `b` to the monomial basis in degree d, with rows
/// and columns indexed by partitions_of(d).  Entry (i, j) is the coefficient
/// of m_{nu_i} in b_{lambda_j}.
std::vector<std::vector<Rational>> transition_to_monomial(Basis b, int d);

}  // namespace heiscat
