#include <gtest/gtest.h>

#include "heiscat/diagcat.hpp"
#include "heiscat/suite.hpp"
#include "oracles.hpp"

using namespace heiscat;

namespace {
Rational scalar(const ClosedValue& v) {
  if (!std::holds_alternative<Rational>(v)) throw std::runtime_error("irreducible: " + std::get<Irreducible>(v).str());
  return std::get<Rational>(v);
}
}  // namespace

TEST(Parse, Examples) {
  const Diagram circle = Diagram::parse("sig:; cup+1; cap+1");
  EXPECT_TRUE(circle.domain().empty());
  EXPECT_TRUE(circle.codomain().empty());
  const Diagram cross = Diagram::parse("sig:UU; x1");
  EXPECT_EQ(cross.codomain(), parse_signature("UU"));
  const Diagram curl = Diagram::parse("sig:U; cup+1; x2; cap+1");
  EXPECT_EQ(curl.codomain(), parse_signature("U"));
  EXPECT_EQ(Diagram::parse(curl.str()), curl);
  EXPECT_THROW(Diagram::parse("sig:UD; cap+1"), IllFormedSlice);
  EXPECT_THROW(Diagram::parse("sig:U; cup+"), ParseError);
}

TEST(Compose, IdentityAndTensor) {
  const Morphism f = Morphism::parse("sig:UU; x1");
  EXPECT_EQ(compose(Morphism::identity(f.codomain()), f), f);
  EXPECT_EQ(compose(f, Morphism::identity(f.domain())), f);
  const Morphism a = Morphism::parse("sig:U");
  const Morphism b = Morphism::parse("sig:D; cup+2");
  const Morphism c = Morphism::parse("sig:UU; x1");
  EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
  EXPECT_THROW(compose(f, Morphism::parse("sig:D")), SignatureMismatch);
}

TEST(Compose, MatchesBimoduleComposition) {
  const Morphism f = Morphism::parse("sig:UD; x1");
  const Morphism g = Morphism::parse("sig:UD; cap-1; cup-1");
  for (int n = 1; n <= 2; ++n)
    EXPECT_EQ(diagram_to_map(compose(f, g), n), diagram_to_map(f, n) * diagram_to_map(g, n));
}

TEST(Simplify, Examples) {
  EXPECT_EQ(simplify(Morphism::parse("sig:; cup+1; cap+1")), Morphism::identity({}));
  EXPECT_TRUE(simplify(Morphism::parse("sig:U; cup+1; x2; cap+1")).is_zero());
  EXPECT_EQ(simplify(Morphism::parse("sig:UU; x1; x1")), Morphism::identity(parse_signature("UU")));
  EXPECT_EQ(simplify(Morphism::parse("sig:DU; x1; x1")),
            Morphism::identity(parse_signature("DU")) - Morphism::parse("sig:DU; cap+1; cup+1"));
}

TEST(Simplify, SoundInBimoduleModel) {
  for (const std::string& text : diagram_corpus()) {
    const Morphism m = Morphism::parse(text);
    const Morphism s = simplify(m);
    for (int n = 0; n <= 2; ++n) {
      if (!realizable(m.domain(), n) || !realizable(m.codomain(), n)) continue;
      EXPECT_EQ(realized_map(m, n), realized_map(s, n)) << text << " at " << n;
    }
  }
}

TEST(EvaluateClosed, Examples) {
  EXPECT_EQ(scalar(evaluate_closed(Morphism::parse("sig:; cup+1; cap+1"))), 1);
  EXPECT_EQ(scalar(evaluate_closed(Morphism::parse("sig:; cup+1; cup+2; cap+2; cap+1"))), 1);
  EXPECT_EQ(scalar(evaluate_closed(Morphism::parse("sig:; cup+1; cup+2; x3; cap+2; cap+1"))), 0);
  EXPECT_TRUE(std::holds_alternative<Irreducible>(evaluate_closed(Morphism::parse("sig:; cup-1; cap-1"))));
  EXPECT_THROW(evaluate_closed(Morphism::parse("sig:U")), SignatureMismatch);
}

TEST(SymImage, Examples) {
  EXPECT_EQ(sym_image(Morphism::identity(all_up(3))), GroupAlgElem::one(3));
  EXPECT_EQ(sym_image(Morphism::parse("sig:UU; x1")), GroupAlgElem::group(Permutation::simple(1, 2)));
  EXPECT_EQ(sym_image(Morphism::parse("sig:UUU; x1; x2; x1")), sym_image(Morphism::parse("sig:UUU; x2; x1; x2")));
  EXPECT_THROW(sym_image(Morphism::parse("sig:UD; x1")), NotBraidOnly);
}

TEST(SymImage, IsMultiplicative) {
  for (const Permutation& v : permutations_of(3))
    for (const Permutation& w : permutations_of(3)) {
      const Morphism a = braid_section(GroupAlgElem::group(v));
      const Morphism b = braid_section(GroupAlgElem::group(w));
      EXPECT_EQ(sym_image(compose(a, b)), ga_product(sym_image(a), sym_image(b)));
      EXPECT_EQ(sym_image(a), GroupAlgElem::group(v));
    }
}

TEST(Idempotents, Objects) {
  const auto [sig1, e1] = idempotent_object(IdempotentKind::S_down, 1);
  EXPECT_EQ(sig1, parse_signature("D"));
  EXPECT_EQ(e1, GroupAlgElem::one(1));
  const auto [sig2, a2] = idempotent_object(IdempotentKind::Lambda_up, 2);
  EXPECT_EQ(sig2, parse_signature("UU"));
  const GroupAlgElem expected = (GroupAlgElem::one(2) - GroupAlgElem::group(Permutation::simple(1, 2))) *
                                Rational(1, 2);
  EXPECT_EQ(a2, expected);
  for (int n = 1; n <= 5; ++n)
    for (IdempotentKind k : {IdempotentKind::S_down, IdempotentKind::Lambda_up}) {
      const GroupAlgElem e = idempotent_object(k, n).second;
      EXPECT_EQ(ga_product(e, e), e);
    }
}

TEST(K0, Classes) {
  EXPECT_EQ(k0_class({{IdempotentKind::Lambda_up, 2}}), HeisNormal::e(2));
  EXPECT_EQ(k0_class({{IdempotentKind::S_down, 1}, {IdempotentKind::Lambda_up, 1}}).str(), "e[1] h*[1] + 1");
  EXPECT_EQ(k0_class({}), HeisNormal::one());
}

TEST(K0, Relations) {
  EXPECT_TRUE(verify_k0_relations(1, 1).passed());
  EXPECT_TRUE(verify_k0_relations(2, 3).passed());
  // At k = 2, m = n = 1: (k+1)! = k k! + k!.
  EXPECT_EQ(idempotent_image_dimension(1, 1, false, 2), 6);
  EXPECT_EQ(idempotent_image_dimension(1, 1, true, 2), 4);
}
