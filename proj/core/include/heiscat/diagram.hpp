#pragma once

// Planar oriented diagrams in generic position, stored as a bottom-to-top
// sequence of slices over a signature of up/down points.
//
// DSL:  `sig:UD; x1; cup+2; cap-1`
//   xI      crossing of strands I and I+1
//   cup+I   counterclockwise cup, creates (D,U) at I, I+1
//   cup-I   clockwise cup, creates (U,D) at I, I+1
//   cap+I   counterclockwise cap, consumes (D,U) at I, I+1
//   cap-I   clockwise cap, consumes (U,D) at I, I+1

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "heiscat/scalar.hpp"

namespace heiscat {

struct IllFormedSlice : Error {
  explicit IllFormedSlice(const std::string& what) : Error("IllFormedSlice", what) {}
};

struct SignatureMismatch : Error {
  explicit SignatureMismatch(const std::string& what) : Error("SignatureMismatch", what) {}
};

enum class Orientation : char { up = 'U', down = 'D' };

using Signature = std::vector<Orientation>;

std::string signature_str(const Signature& s);
/// String over {U, D}.
Signature parse_signature(std::string_view text);
Signature all_up(int n);
Signature all_down(int n);

struct Slice {
  enum class Kind { cross, cup, cap };
  Kind kind = Kind::cross;
  /// 1-based position of the left strand involved.
  int pos = 1;
  /// Winding of a cup or cap; ignored for crossings.
  bool ccw = true;

  static Slice cross(int i) { return {Kind::cross, i, true}; }
  static Slice cup(int i, bool ccw) { return {Kind::cup, i, ccw}; }
  static Slice cap(int i, bool ccw) { return {Kind::cap, i, ccw}; }

  /// Signature above the slice; throws IllFormedSlice if inapplicable.
  Signature apply(const Signature& below) const;
  std::string str() const;

  friend auto operator<=>(const Slice&, const Slice&) = default;
};

class Diagram {
 public:
  Diagram() = default;
  /// Throws IllFormedSlice naming the first inapplicable slice.
  Diagram(Signature domain, std::vector<Slice> slices);

  static Diagram identity(Signature s) { return Diagram(std::move(s), {}); }

  const Signature& domain() const noexcept { return domain_; }
  const Signature& codomain() const noexcept { return codomain_; }
  const std::vector<Slice>& slices() const noexcept { return slices_; }
  /// Signature below slice k (k = slices().size() gives the codomain).
  Signature level(std::size_t k) const;

  std::string str() const;
  static Diagram parse(std::string_view text);

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.domain_ == b.domain_ && a.slices_ == b.slices_;
  }
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b);

 private:
  Signature domain_;
  Signature codomain_;
  std::vector<Slice> slices_;
};

/// Rational linear combination of diagrams with a common boundary.
class Morphism {
 public:
  Morphism(Signature domain, Signature codomain) : domain_(std::move(domain)), codomain_(std::move(codomain)) {}
  /// One diagram with coefficient 1.
  Morphism(const Diagram& d);  // NOLINT(google-explicit-constructor)

  static Morphism identity(const Signature& s) { return Morphism(Diagram::identity(s)); }
  static Morphism parse(std::string_view text) { return Morphism(Diagram::parse(text)); }

  const Signature& domain() const noexcept { return domain_; }
  const Signature& codomain() const noexcept { return codomain_; }
  const std::map<Diagram, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Diagram& d, const Rational& c);
  Morphism operator+(const Morphism& other) const;
  Morphism operator-(const Morphism& other) const;
  Morphism operator*(const Rational& scalar) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

  /// `2 [sig:UU; x1] - [sig:UU]`; the zero morphism prints as `0`.
  std::string str() const;

 private:
  Signature domain_;
  Signature codomain_;
  std::map<Diagram, Rational> terms_;
};

/// f after g: g's slices first.  Throws SignatureMismatch unless
/// codomain(g) = domain(f).
Morphism compose(const Morphism& f, const Morphism& g);
/// f beside g, f on the left.
Morphism tensor(const Morphism& f, const Morphism& g);

Diagram compose(const Diagram& f, const Diagram& g);
Diagram tensor(const Diagram& f, const Diagram& g);

}  // namespace heiscat
