#pragma once

// The integral Heisenberg algebra on generators e_n and h_n* with
//   h_m* e_n = e_n h_m* + e_{n-1} h_{m-1}*,   e_0 = h_0* = 1,
// its action on the Fock space Sym, and the symmetric-group K-theory layer
// where induction is multiplication and restriction is the adjoint.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heiscat/combinatorics.hpp"
#include "heiscat/report.hpp"
#include "heiscat/symfunc.hpp"

namespace heiscat {

struct HeisLetter {
  enum class Kind { e, hstar };
  Kind kind = Kind::e;
  int n = 1;

  static HeisLetter E(int n) { return {Kind::e, n}; }
  static HeisLetter Hstar(int n) { return {Kind::hstar, n}; }

  friend auto operator<=>(const HeisLetter&, const HeisLetter&) = default;
};

using HeisWord = std::vector<HeisLetter>;

/// Space-separated letters such as `e3 h2* e1`; the empty string is the unit.
HeisWord parse_heis_word(std::string_view text);
std::string heis_word_str(const HeisWord& word);

/// Sum of c * e_lambda (h_mu)* in normal order.
class HeisNormal {
 public:
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, Integer>;

  HeisNormal() = default;
  explicit HeisNormal(Terms terms);

  static HeisNormal term(const Partition& e_part, const Partition& hstar_part, const Integer& coeff = 1);
  static HeisNormal one() { return term(Partition(), Partition()); }
  /// e_n, with e_0 = 1.
  static HeisNormal e(int n);
  /// h_n*, with h_0* = 1.
  static HeisNormal hstar(int n);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  HeisNormal operator+(const HeisNormal& other) const;
  HeisNormal operator-(const HeisNormal& other) const;
  HeisNormal operator*(const Integer& scalar) const;

  friend bool operator==(const HeisNormal&, const HeisNormal&) = default;

  /// `e[1] h*[1] + 1`.
  std::string str() const;
  /// `[{"e_partition":[1],"hstar_partition":[1],"coeff":"1"}, ...]`.
  std::string to_json() const;

 private:
  Terms terms_;
};

HeisNormal heis_normalize(const HeisWord& word);
HeisNormal heis_product(const HeisNormal& a, const HeisNormal& b);

/// e_lambda acts by multiplication, (h_mu)* by dual_apply; the starred
/// factor acts first.  The result keeps the basis of `f`.
SymFunc fock_apply(const HeisNormal& a, const SymFunc& f);

VerificationReport verify_heis_relation(int m, int n, int max_degree);
/// q_m p_n - p_n q_m = n delta_{mn} on the Fock space, with p_n acting by
/// multiplication and q_m = p_m*.
VerificationReport verify_boson_relation(int m, int n, int max_degree);

/// Class of the Specht module S^lambda as the Schur function s_lambda.
SymFunc specht_to_sym(const Partition& lambda);

/// Induction from A_m (x) A_n: multiplication, in the Schur basis.
SymFunc ind_class(const SymFunc& m, const SymFunc& n);
/// Restriction along A_m (x) A_{k-m}, keeping the A_{k-m} part: M*(N).
SymFunc res_class(const SymFunc& m, const SymFunc& n);

/// The three functor relations between Ind_{E_n} and Res_{L_m} checked on
/// classes of Specht modules.
VerificationReport verify_weak_fock(int m, int n, int max_degree);

}  // namespace heiscat
