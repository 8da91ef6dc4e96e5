#pragma once

// Partitions, permutations and reduced words: the index sets for every
// basis in the library.
//
// Permutations are stored in one-line notation with values 1..n and compose
// as functions: (u * v)(i) = u(v(i)).  Simple transpositions s_i are 1-based.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heiscat/scalar.hpp"

namespace heiscat {

/// Weakly decreasing sequence of positive integers.
///
/// The total order is: smaller size first, then reverse lexicographic on the
/// parts, so (3) < (2,1) < (1,1,1) among partitions of 3.  Reverse
/// lexicographic order refines dominance order, so this is also the order
/// used for triangularity statements.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// All parts equal to one: (1^n).
  static Partition column(int n);
  /// The one-row partition (n), or () for n = 0.
  static Partition row(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Part i (0-based), or 0 past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// Multiset union of parts.
  Partition merged(const Partition& other) const;
  /// Removes one occurrence of `part`; returns false if absent.
  bool remove_part(int part, Partition& out) const;
  /// True iff this dominates `other` (same size assumed).
  bool dominates(const Partition& other) const;

  /// `[3,1,1]`; the empty partition prints as `[]`.
  std::string str() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Every partition of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Partitions of every size 0..max_size, in the Partition total order.
std::vector<Partition> partitions_up_to(int max_size);
/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of cycle type lambda.
Integer centralizer_order(const Partition& cycle_type);

class Permutation {
 public:
  /// Identity of S_0.
  Permutation() = default;
  /// Throws PreconditionError unless `one_line` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n);
  /// s_i = (i, i+1) in S_n.
  static Permutation simple(int i, int n);
  /// i -> n - i + 1.
  static Permutation longest(int n);

  int rank() const noexcept { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const noexcept { return one_line_; }
  /// Image of i (1-based); points beyond the rank are fixed.
  int operator()(int i) const noexcept {
    return i >= 1 && i <= rank() ? one_line_[static_cast<std::size_t>(i - 1)] : i;
  }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Same permutation viewed in S_m (m >= rank), fixing rank()+1..m.
  Permutation embedded(int m) const;
  /// Drops trailing fixed points down to rank m; throws if a dropped point moves.
  Permutation restricted(int m) const;

  /// Lexicographic index of the one-line word in S_n, 0..n!-1.
  std::size_t index() const;
  static Permutation from_index(std::size_t index, int n);

  Partition cycle_type() const;
  int sign() const;

  /// `(2,3,1)`.
  std::string str() const;
  static Permutation parse(std::string_view text);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// Composition (u * v)(i) = u(v(i)); ranks are padded to the larger one.
Permutation operator*(const Permutation& u, const Permutation& v);
std::ostream& operator<<(std::ostream& os, const Permutation& w);

/// Every element of S_n in lexicographic order of one-line notation.
std::vector<Permutation> permutations_of(int n);

/// Inversion count, equal to the Coxeter length.
int perm_length(const Permutation& w);

/// A word s_{i_1} s_{i_2} ... s_{i_k} in the simple transpositions of S_n.
struct GeneratorWord {
  std::vector<int> letters;
  int n = 0;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Product s_{i_1} * s_{i_2} * ... * s_{i_k}; throws PreconditionError when a
/// letter lies outside 1..n-1.
Permutation word_eval(const GeneratorWord& word);
bool is_reduced(const GeneratorWord& word);

/// Reduced word built by repeatedly peeling off the leftmost descent
/// w(i) > w(i+1): w = (w s_i) s_i with the letter i appended last.
GeneratorWord reduced_word(const Permutation& w);

struct CosetDecomposition {
  /// i = w(n+1).
  int i = 0;
  /// w = (s_i s_{i+1} ... s_n) * rest, with rest in S_n.
  Permutation rest;
};

/// Unique factorisation of w in S_{n+1} through the minimal left coset
/// representatives of S_n.
CosetDecomposition coset_decompose(const Permutation& w);

/// s_i s_{i+1} ... s_n as an element of S_{n+1}; i = n+1 gives the identity.
Permutation coset_representative(int i, int n);

}  // namespace heiscat
