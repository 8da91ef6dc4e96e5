#pragma once

// The Weyl algebra Z<x, d>/(dx - xd - 1) in normal order x^a d^b, acting on
// the monomial lattice R' = span{x^n} and the divided-power lattice
// R = span{x^n/n!}.

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "heiscat/scalar.hpp"

namespace heiscat {

struct LatticeMismatch : Error {
  explicit LatticeMismatch(const std::string& what) : Error("LatticeMismatch", what) {}
};

class WeylElement {
 public:
  /// (a, b) -> coefficient of x^a d^b.
  using Terms = std::map<std::pair<int, int>, Integer>;

  WeylElement() = default;
  explicit WeylElement(Terms terms);

  static WeylElement monomial(int a, int b, const Integer& coeff = 1);
  static WeylElement one() { return monomial(0, 0); }
  static WeylElement x() { return monomial(1, 0); }
  static WeylElement d() { return monomial(0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  WeylElement operator+(const WeylElement& other) const;
  WeylElement operator-(const WeylElement& other) const;
  WeylElement operator*(const Integer& scalar) const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// `3 x^2 d + 1`; d stands for the derivative.
  std::string str() const;
  static WeylElement parse(std::string_view text);

 private:
  Terms terms_;
};

/// Normal-ordered product.  Pairs of monomials with both inner exponents at
/// least two use the closed form
///   (x^a d^b)(x^c d^e) = sum_k C(b,k) C(c,k) k! x^{a+c-k} d^{b+e-k};
/// everything else is rewritten one dx -> xd + 1 step at a time.
WeylElement weyl_multiply(const WeylElement& u, const WeylElement& v);

/// Reference product by single-step rewriting of letter words only.
WeylElement weyl_multiply_by_rewriting(const WeylElement& u, const WeylElement& v);

enum class Lattice {
  /// Coordinates against x^n / n!.
  divided_powers,
  /// Coordinates against x^n.
  monomials,
};

std::string lattice_name(Lattice l);

struct PolyVector {
  Lattice lattice = Lattice::monomials;
  std::map<int, Integer> coeffs;

  static PolyVector basis(Lattice lattice, int n);
  /// Drops zero coordinates.
  PolyVector& prune();

  friend bool operator==(const PolyVector&, const PolyVector&) = default;

  /// `lattice:R [c0,c1,...]` or `lattice:Rprime [c0,...]`.
  std::string str() const;
  static PolyVector parse(std::string_view text);
};

PolyVector weyl_apply(const WeylElement& u, const PolyVector& v);

/// <x^n, x^m/m!> = delta; the first argument must be in R', the second in R.
Integer weyl_pairing(const PolyVector& v, const PolyVector& w);

}  // namespace heiscat
