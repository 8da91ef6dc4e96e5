#include <gtest/gtest.h>

#include "heiscat/heisenberg.hpp"
#include "oracles.hpp"

using namespace heiscat;

TEST(HeisNormalize, Examples) {
  EXPECT_EQ(heis_normalize({HeisLetter::E(2)}), HeisNormal::e(2));
  EXPECT_EQ(heis_normalize({HeisLetter::Hstar(1), HeisLetter::E(1)}).str(), "e[1] h*[1] + 1");
  EXPECT_EQ(heis_normalize({HeisLetter::Hstar(2), HeisLetter::E(1)}),
            HeisNormal::term({1}, {2}) + HeisNormal::term({}, {1}));
  EXPECT_EQ(heis_normalize(parse_heis_word("h2* e1")), heis_normalize({HeisLetter::Hstar(2), HeisLetter::E(1)}));
  EXPECT_EQ(heis_normalize({}), HeisNormal::one());
}

TEST(HeisProduct, Examples) {
  const HeisNormal a = HeisNormal::term({2, 1}, {1});
  EXPECT_EQ(heis_product(a, HeisNormal::one()), a);
  const HeisNormal comm = heis_product(HeisNormal::hstar(1), HeisNormal::e(1)) -
                          heis_product(HeisNormal::e(1), HeisNormal::hstar(1));
  EXPECT_EQ(comm, HeisNormal::one());
  // One application of the relation; no constant term survives, since
  // h_2^* e_2 kills the vacuum.
  const HeisNormal h2e2 = heis_product(HeisNormal::hstar(2), HeisNormal::e(2));
  EXPECT_EQ(h2e2, HeisNormal::term({2}, {2}) + HeisNormal::term({1}, {1}));
  EXPECT_TRUE(fock_apply(h2e2, SymFunc::one()).is_zero());
}

TEST(HeisProduct, Associative) {
  const HeisNormal a = HeisNormal::hstar(2) + HeisNormal::e(1);
  const HeisNormal b = HeisNormal::term({2}, {1});
  const HeisNormal c = HeisNormal::hstar(3) * Integer(2);
  EXPECT_EQ(heis_product(heis_product(a, b), c), heis_product(a, heis_product(b, c)));
}

TEST(FockApply, Examples) {
  const SymFunc s21 = s_basis({2, 1});
  EXPECT_EQ(fock_apply(HeisNormal::one(), s21), s21);
  EXPECT_EQ(fock_apply(HeisNormal::hstar(1), s_basis({1})), SymFunc::one());
  EXPECT_EQ(fock_apply(HeisNormal::e(1), SymFunc::one()), e_basis({1}));
}

TEST(FockApply, MatchesPieriOracle) {
  const HeisNormal op = heis_product(HeisNormal::hstar(2), HeisNormal::e(2));
  for (const oracle::Parts& lambda : oracle::partitions_up_to(6)) {
    const oracle::SchurVec expected = oracle::skew_h(2, oracle::pieri_e(2, {{lambda, 1}}));
    EXPECT_EQ(oracle::to_schur_vec(fock_apply(op, s_basis(Partition(lambda)))), expected);
  }
}

TEST(Relations, Heisenberg) {
  EXPECT_TRUE(verify_heis_relation(1, 1, 6).passed());
  EXPECT_TRUE(verify_heis_relation(3, 2, 8).passed());
  EXPECT_THROW(verify_heis_relation(1, 0, 6), PreconditionError);
}

TEST(Relations, Boson) {
  EXPECT_TRUE(verify_boson_relation(1, 1, 6).passed());
  EXPECT_TRUE(verify_boson_relation(2, 3, 6).passed());
  EXPECT_TRUE(verify_boson_relation(2, 2, 6).passed());
}

TEST(Specht, Classes) {
  EXPECT_EQ(specht_to_sym({1, 1, 1}), e_basis({3}));
  EXPECT_EQ(specht_to_sym({3}), h_basis({3}));
  EXPECT_EQ(specht_to_sym(Partition()), SymFunc::one());
}

TEST(Functors, InductionAndRestriction) {
  EXPECT_EQ(ind_class(s_basis({1}), s_basis({1})), s_basis({2}) + s_basis({1, 1}));
  EXPECT_EQ(res_class(s_basis({1}), s_basis({2})), s_basis({1}));
  EXPECT_TRUE(res_class(s_basis({3}), s_basis({2})).is_zero());
}

TEST(Functors, WeakFock) {
  EXPECT_TRUE(verify_weak_fock(1, 1, 6).passed());
  EXPECT_TRUE(verify_weak_fock(2, 3, 8).passed());
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      EXPECT_EQ(verify_weak_fock(m, n, 6).passed(), verify_heis_relation(m, n, 6).passed());
}

TEST(HeisLiterals, JsonShape) {
  EXPECT_EQ(HeisNormal::term({1}, {1}).to_json(), R"([{"e_partition":[1],"hstar_partition":[1],"coeff":"1"}])");
  EXPECT_THROW(parse_heis_word("e1 q2"), ParseError);
}
