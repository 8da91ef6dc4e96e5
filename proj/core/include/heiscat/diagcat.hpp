#pragma once

// Rewriting in the graphical Heisenberg category, the symmetric-group image
// of braid-only diagrams, and the Grothendieck-level map to the Heisenberg
// algebra.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "heiscat/bimodel.hpp"
#include "heiscat/diagram.hpp"
#include "heiscat/heisenberg.hpp"
#include "heiscat/report.hpp"

namespace heiscat {

struct NotBraidOnly : Error {
  explicit NotBraidOnly(const std::string& what) : Error("NotBraidOnly", what) {}
};

/// (crossings, cups + caps); every reducing rewrite lowers it lexicographically.
std::pair<int, int> diagram_measure(const Diagram& d);

/// Diagrams reachable from `d` by moves that keep the measure: exchange of
/// distant slices, pitchfork slides of a crossing through a cup or cap, and
/// braid moves on three like-oriented strands.  At most `limit` diagrams.
std::vector<Diagram> isotopy_class(const Diagram& d, std::size_t limit = 20000);

/// Rewrites with the local relations until none applies:
///   two crossings of like strands, or of an up strand left of a down
///   strand, cancel; two crossings of a down strand left of an up strand
///   give identity minus cap-cup; a counterclockwise circle is 1; a left
///   curl on an up strand is 0; a zigzag straightens.
/// Each surviving diagram is replaced by the least member of its isotopy
/// class, so equal outputs are equivalent, but the converse can fail.
Morphism simplify(const Morphism& m);

/// Closed terms the relations cannot evaluate (clockwise circles, right
/// curls and anything built from them).
struct Irreducible {
  Morphism residue;
  std::string str() const;
};

using ClosedValue = std::variant<Rational, Irreducible>;

/// Scalar value of a diagram without endpoints.  Throws SignatureMismatch
/// when the boundary is not empty.
ClosedValue evaluate_closed(const Morphism& m);

/// Image in A_n of a crossing-only morphism on n up strands; the crossing
/// read last is multiplied on the left.
GroupAlgElem sym_image(const Morphism& m);

/// Crossing diagrams on up^n through a reduced word of each permutation.
Morphism braid_section(const GroupAlgElem& a);

enum class IdempotentKind { S_down, Lambda_up };

std::string idempotent_kind_name(IdempotentKind k);

/// (down^n, e(n)) or (up^n, e'(n)).
std::pair<Signature, GroupAlgElem> idempotent_object(IdempotentKind kind, int n);

/// Heisenberg element whose image is the class of the tensor product of the
/// listed objects, S_down^n -> h_n^* and Lambda_up^n -> e_n.
HeisNormal k0_class(const std::vector<std::pair<IdempotentKind, int>>& objects);

/// The three commutation relations among the classes, plus a dimension count
/// of both sides of S^n (x) Lambda^m = Lambda^m (x) S^n + Lambda^{m-1} (x) S^{n-1}
/// in the bimodule model at base ranks 0..3.
VerificationReport verify_k0_relations(int m, int n);

/// dim of the image of e(n) (x) e'(m) on the bimodule of down^n up^m (or the
/// reverse order when `lambda_first`) at base rank k; 0 if unrealizable.
Integer idempotent_image_dimension(int n, int m, bool lambda_first, int base_rank);

}  // namespace heiscat
