#pragma once

// Symmetric-group algebras A_n = Q[S_n] and the bimodule images of planar
// diagrams.
//
// A signature e_1 ... e_m at base rank n labels the regions between strands:
// the rightmost region has rank n and crossing an up strand leftwards adds
// one, a down strand subtracts one.  Strand j carries A_M (M the larger of
// its two regions) as a bimodule over its neighbours, and the signature
// stands for the tensor product of these bimodules over the region algebras.
//
// Canonical basis.  Every pure tensor g_1 (x) ... (x) g_m can be pushed to
// c_1 (x) ... (x) c_m h where c_j = 1 on down strands, c_j is a minimal coset
// representative s_i ... s_r of S_{r+1}/S_r on an up strand with right region
// r, and h lies in S_n.  The basis has prod_{up}(r_j + 1) * n! elements.
//
// Images of the generating diagrams (r is the rank right of the local
// picture):
//   up-up crossing       x (x) y  ->  x y s_{r+1} (x) 1
//   down-down crossing   x (x) y  ->  1 (x) s_{r-1} x y
//   up-down to down-up   a (x) b  ->  a s_r b (x) 1
//   down-up to up-down   x        ->  a (x) b if x = a s_r b, 0 if x in S_r
//   cup+ (makes DU)      inclusion A_r -> A_{r+1}
//   cap+ (joins DU)      trace A_{r+1} -> A_r, keeps the S_r part
//   cup- (makes UD)      1 -> sum_i t_i (x) t_i^{-1} over S_r / S_{r-1}
//   cap- (joins UD)      multiplication A_r (x)_{A_{r-1}} A_r -> A_r
// With this table a counterclockwise circle is 1 and a clockwise circle is
// multiplication by r.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "heiscat/combinatorics.hpp"
#include "heiscat/diagram.hpp"
#include "heiscat/linalg.hpp"
#include "heiscat/nilcoxeter.hpp"
#include "heiscat/report.hpp"
#include "heiscat/scalar.hpp"

namespace heiscat {

struct UnrealizableAtRank : Error {
  explicit UnrealizableAtRank(const std::string& what) : Error("UnrealizableAtRank", what) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what) : Error("BoundExceeded", what) {}
};

class GroupAlgElem {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit GroupAlgElem(int n = 0) : n_(n) {}
  /// Throws RankMismatch if a permutation has a rank other than n.
  GroupAlgElem(int n, Terms terms);

  static GroupAlgElem group(const Permutation& w, const Rational& coeff = 1);
  static GroupAlgElem one(int n) { return group(Permutation::identity(n)); }

  int rank() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Permutation& w) const;

  GroupAlgElem operator+(const GroupAlgElem& other) const;
  GroupAlgElem operator-(const GroupAlgElem& other) const;
  GroupAlgElem operator*(const Rational& scalar) const;

  friend bool operator==(const GroupAlgElem&, const GroupAlgElem&) = default;

  /// `1/2 (1,2) + 1/2 (2,1)` in one-line notation.
  std::string str() const;

 private:
  int n_;
  Terms terms_;
};

GroupAlgElem ga_product(const GroupAlgElem& a, const GroupAlgElem& b);

/// e(n) = (1/n!) sum_w w.
GroupAlgElem symmetrizer(int n);
/// e'(n) = (1/n!) sum_w sign(w) w.
GroupAlgElem antisymmetrizer(int n);

/// Matrix of x -> x a on A_n in the basis ordered by Permutation::index().
Matrix right_multiplication_matrix(const GroupAlgElem& a);

/// Ranks n_0, n_1, ..., n_k with adjacent entries differing by one; n_0 is
/// the base rank and each step up is an induction bimodule.
struct BimodulePath {
  std::vector<int> levels;

  /// Path read off a signature from right to left.
  static BimodulePath from_signature(const Signature& sig, int base_rank);
  /// Inverse of from_signature; throws PreconditionError on a bad step.
  Signature signature() const;
  int base_rank() const { return levels.empty() ? 0 : levels.front(); }
};

/// Region ranks r_0 (leftmost) ... r_m (= base rank) of a signature.
std::vector<int> region_ranks(const Signature& sig, int base_rank);
bool realizable(const Signature& sig, int base_rank);

/// The canonical basis of the tensor bimodule of a signature.
class TensorBasis {
 public:
  /// Throws UnrealizableAtRank when some region rank is negative.
  TensorBasis(Signature sig, int base_rank);

  const Signature& signature() const noexcept { return sig_; }
  int base_rank() const noexcept { return base_; }
  const std::vector<int>& regions() const noexcept { return regions_; }
  std::size_t size() const noexcept { return size_; }

  /// A pure tensor (g_1, ..., g_m, h): one group element per strand plus the
  /// trailing factor in S_n.
  using Tuple = std::vector<Permutation>;

  /// Tuple of basis element `index`.
  Tuple element(std::size_t index) const;
  /// Index of the basis element equal to the pure tensor `t`.
  std::size_t index_of(const Tuple& t) const;
  /// `c_1 (x) ... | h`, listing coset representatives and the final factor.
  std::string describe(std::size_t index) const;

 private:
  Signature sig_;
  int base_;
  std::vector<int> regions_;
  std::vector<std::size_t> up_strands_;
  std::size_t size_ = 0;
};

std::size_t tensor_basis_size(const BimodulePath& path);

/// Sparse rational matrix between two canonical bases.  The dense form is
/// available through `dense()` and `dump()`.
struct LinearMapRep {
  Signature domain;
  Signature codomain;
  int base_rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// columns[j] maps row index to entry.
  std::vector<std::map<std::size_t, Rational>> columns;

  static LinearMapRep zero(const TensorBasis& dom, const TensorBasis& cod);
  static LinearMapRep identity(const TensorBasis& basis);

  LinearMapRep operator+(const LinearMapRep& other) const;
  LinearMapRep operator-(const LinearMapRep& other) const;
  LinearMapRep operator*(const Rational& scalar) const;
  bool is_zero() const;
  std::size_t rank() const;
  Matrix dense() const;
  std::string dump() const;

  friend bool operator==(const LinearMapRep&, const LinearMapRep&) = default;
};

/// a after b.
LinearMapRep operator*(const LinearMapRep& a, const LinearMapRep& b);

/// Image of a diagram under the bimodule functor at base rank n.  Throws
/// UnrealizableAtRank if some intermediate signature has a negative region.
LinearMapRep diagram_to_map(const Diagram& d, int base_rank);
LinearMapRep diagram_to_map(const Morphism& m, int base_rank);
/// Like diagram_to_map, except that a diagram passing through an
/// unrealizable signature factors through the zero bimodule and contributes
/// nothing.  The boundary signatures must still be realizable.
LinearMapRep realized_map(const Morphism& m, int base_rank);

enum class LocalRelation {
  up_up_double_crossing,
  braid,
  down_up_double_crossing,
  up_down_double_crossing,
  ccw_circle,
  left_curl,
};

std::vector<LocalRelation> all_local_relations();
std::string relation_name(LocalRelation r);
/// Throws PreconditionError for an unknown name.
LocalRelation relation_from_name(const std::string& name);
/// Both sides of the relation as morphisms (left, right).
std::pair<Morphism, Morphism> relation_sides(LocalRelation r);

VerificationReport verify_local_relation(LocalRelation r, int n);

/// Res Ind = Ind Res + Id for A_{k-1} in A_k in A_{k+1}, through the
/// inclusion A_k -> A_{k+1} and a (x) b -> a s_k b.
VerificationReport mackey_check(int k);

/// chi^lambda on each cycle type, from the Young symmetrizer of lambda.
std::map<Partition, Rational> character(const Partition& lambda);

/// Multiplicities of the simples in Ind(S^lambda (x) S^mu), by Frobenius
/// reciprocity.  Throws BoundExceeded when |lambda| + |mu| > bound.
std::map<Partition, Integer> induced_character_decomposition(const Partition& lambda, const Partition& mu,
                                                             int bound = 7);

}  // namespace heiscat
