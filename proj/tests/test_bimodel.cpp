#include <gtest/gtest.h>

#include "heiscat/bimodel.hpp"
#include "oracles.hpp"

using namespace heiscat;

TEST(GroupAlgebra, Products) {
  const GroupAlgElem s1 = GroupAlgElem::group(Permutation::simple(1, 2));
  EXPECT_EQ(ga_product(s1, s1), GroupAlgElem::one(2));
  EXPECT_EQ(ga_product(symmetrizer(2), symmetrizer(2)), symmetrizer(2));
  EXPECT_TRUE(ga_product(symmetrizer(2), antisymmetrizer(2)).is_zero());
  EXPECT_THROW(ga_product(s1, GroupAlgElem::one(3)), RankMismatch);
}

TEST(GroupAlgebra, Idempotents) {
  for (int n = 2; n <= 5; ++n) {
    const GroupAlgElem e = symmetrizer(n);
    const GroupAlgElem a = antisymmetrizer(n);
    EXPECT_EQ(ga_product(e, e), e);
    EXPECT_EQ(ga_product(a, a), a);
    EXPECT_TRUE(ga_product(e, a).is_zero());
    EXPECT_EQ(right_multiplication_matrix(e).rank(), 1u);
    EXPECT_EQ(right_multiplication_matrix(a).rank(), 1u);
  }
}

TEST(TensorBasis, Sizes) {
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(tensor_basis_size({{n, n + 1}}), static_cast<std::size_t>(oracle::factorial(n + 1)));
    EXPECT_EQ(tensor_basis_size({{n, n + 1, n}}), static_cast<std::size_t>(oracle::factorial(n + 1)));
  }
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(tensor_basis_size({{k, k - 1, k}}), static_cast<std::size_t>(k * oracle::factorial(k)));
  EXPECT_THROW(TensorBasis(parse_signature("D"), 0), UnrealizableAtRank);
}

TEST(TensorBasis, IndexRoundTrip) {
  const TensorBasis b(parse_signature("UDU"), 2);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b.element(i)), i);
  EXPECT_EQ(BimodulePath::from_signature(parse_signature("UDU"), 2).signature(), parse_signature("UDU"));
}

TEST(DiagramToMap, Examples) {
  for (int n = 0; n <= 3; ++n) {
    const TensorBasis up(parse_signature("U"), n);
    EXPECT_EQ(diagram_to_map(Morphism::parse("sig:U"), n), LinearMapRep::identity(up));
    EXPECT_EQ(diagram_to_map(Morphism::parse("sig:; cup+1; cap+1"), n), LinearMapRep::identity(TensorBasis({}, n)));
    EXPECT_TRUE(diagram_to_map(Morphism::parse("sig:U; cup+1; x2; cap+1"), n).is_zero());
  }
  EXPECT_THROW(diagram_to_map(Morphism::parse("sig:D"), 0), UnrealizableAtRank);
}

TEST(DiagramToMap, CompositionIsMatrixProduct) {
  const Morphism f = Morphism::parse("sig:UU; x1");
  const Morphism g = Morphism::parse("sig:UU; x1; cup+2; cap+2");
  for (int n = 0; n <= 2; ++n)
    EXPECT_EQ(diagram_to_map(compose(f, g), n), diagram_to_map(f, n) * diagram_to_map(g, n));
}

TEST(DiagramToMap, ClockwiseCircleIsRank) {
  for (int n = 0; n <= 3; ++n) {
    // At n = 0 the circle passes through an unrealizable signature.
    const LinearMapRep cw = realized_map(Morphism::parse("sig:; cup-1; cap-1"), n);
    EXPECT_EQ(cw, LinearMapRep::identity(TensorBasis({}, n)) * Rational(n));
  }
}

TEST(LocalRelations, AllFamilies) {
  for (LocalRelation r : all_local_relations()) {
    EXPECT_EQ(relation_from_name(relation_name(r)), r);
    for (int n = 0; n <= 3; ++n) {
      const VerificationReport rep = verify_local_relation(r, n);
      EXPECT_TRUE(rep.passed()) << relation_name(r) << " at " << n << ": " << rep.str();
    }
  }
  EXPECT_THROW(relation_from_name("no-such-relation"), PreconditionError);
}

TEST(LocalRelations, DownUpIsIdentityMinusCapCup) {
  const auto [lhs, rhs] = relation_sides(LocalRelation::down_up_double_crossing);
  EXPECT_EQ(rhs.terms().size(), 2u);
  EXPECT_EQ(realized_map(lhs, 2), realized_map(rhs, 2));
}

TEST(Mackey, Ranks) {
  for (int k = 1; k <= 4; ++k) {
    const VerificationReport r = mackey_check(k);
    EXPECT_TRUE(r.passed()) << r.str();
  }
}

TEST(Mackey, InclusionImageCharacterisation) {
  // g lies in the image of A_3 exactly when it fixes 4.
  for (const Permutation& g : permutations_of(4)) {
    const bool fixes = g(4) == 4;
    EXPECT_EQ(fixes, coset_decompose(g).i == 4);
  }
}

TEST(Characters, Examples) {
  const auto chi = character({2, 1});
  EXPECT_EQ(chi.at(Partition({3})), -1);
  EXPECT_EQ(chi.at(Partition({2, 1})), 0);
  EXPECT_EQ(chi.at(Partition({1, 1, 1})), 2);
  for (const oracle::Parts& lambda : oracle::partitions_up_to(5))
    for (const auto& [rho, value] : character(Partition(lambda)))
      EXPECT_EQ(value, Rational(oracle::mn_character(lambda, rho.parts())));
}

TEST(Characters, InducedDecomposition) {
  const std::map<Partition, Integer> two{{Partition({2}), 1}, {Partition({1, 1}), 1}};
  EXPECT_EQ(induced_character_decomposition({1}, {1}), two);
  const std::map<Partition, Integer> unit{{Partition({3, 1}), 1}};
  EXPECT_EQ(induced_character_decomposition(Partition(), {3, 1}), unit);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      EXPECT_EQ(induced_character_decomposition(Partition::column(m), Partition::column(n)),
                lr_coefficients(Partition::column(m), Partition::column(n)));
  EXPECT_THROW(induced_character_decomposition({4}, {4}), BoundExceeded);
}
