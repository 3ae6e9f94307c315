#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wirtinger/abelianization.hpp"
#include "wirtinger/wirtinger_form.hpp"

namespace wirtinger {
namespace {

using testing::load_fixture;

TEST(RelationMatrix, Examples) {
  EXPECT_EQ(relation_matrix(load_fixture("trefoil.wpres")), (IntMatrix{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}));
  EXPECT_EQ(relation_matrix(load_fixture("unlink2.wpres")), (IntMatrix{{0, 0}}));
  const auto free = relation_matrix(parse_presentation("gens: a b c\n"));
  EXPECT_EQ(free.rows(), 0U);
  EXPECT_EQ(free.cols(), 3U);
}

TEST(Abelianize, Examples) {
  const auto t = abelianize(load_fixture("trefoil.wpres"));
  EXPECT_EQ(t.rank, 1U);
  EXPECT_TRUE(t.torsion.empty());
  EXPECT_TRUE(is_free_abelian(t));

  const auto b = abelianize(load_fixture("braid4_standard.wpres"));
  EXPECT_EQ(b.rank, 1U);
  EXPECT_TRUE(is_free_abelian(b));

  const auto c3 = abelianize(parse_presentation("gens: x\nrel: x^3\n"));
  EXPECT_EQ(c3.rank, 0U);
  EXPECT_EQ(c3.torsion, (std::vector<BigInt>{3}));
  EXPECT_FALSE(is_free_abelian(c3));

  EXPECT_TRUE(is_free_abelian(abelianize(parse_presentation("gens: x y\n"))));
  EXPECT_EQ(abelianize(parse_presentation("gens: x y\n")).rank, 2U);
}

TEST(Abelianize, TorsionAndProjection) {
  const auto q8 = abelianize(load_fixture("q8.wpres"));
  EXPECT_EQ(q8.rank, 0U);
  EXPECT_EQ(q8.torsion, (std::vector<BigInt>{2, 2}));

  const auto p = load_fixture("takase24.wpres");
  const auto a = abelianize(p);
  EXPECT_EQ(a.rank, 0U);
  EXPECT_EQ(a.torsion, (std::vector<BigInt>{3}));
  for (const auto& r : p.relators()) EXPECT_EQ(a.project(r), (AbelianCoordinates{{}, {0}}));
}

TEST(Abelianize, RelatorsProjectToZero) {
  for (const char* f : {"trefoil.wpres", "braid4_standard.wpres", "q8.wpres", "s3.wpres", "takase.wpres",
                        "unlink2.wpres"}) {
    const auto p = load_fixture(f);
    const auto a = abelianize(p);
    const AbelianCoordinates zero{IntVector(a.rank), IntVector(a.torsion.size())};
    for (const auto& r : p.relators()) EXPECT_EQ(a.project(r), zero) << f;
  }
}

TEST(Abelianize, WirtingerPresentationsAreTorsionFree) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::uint32_t> g(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Word> rels;
    for (int k = 0; k < 4; ++k) {
      WirtingerTriple t{GeneratorId(g(rng)), GeneratorId(g(rng)), GeneratorId(g(rng))};
      if (t.alpha == t.beta || t.beta == t.gamma) continue;
      rels.push_back(wirtinger_relator(t));
    }
    const Presentation p({"a", "b", "c", "d", "e"}, rels);
    ASSERT_TRUE(std::holds_alternative<WirtingerData>(validate_wirtinger(p)));
    EXPECT_TRUE(is_free_abelian(abelianize(p)));
  }
}

TEST(Independence, Examples) {
  const auto z2p = load_fixture("unlink2.wpres");
  const auto z2 = abelianize(z2p);
  const Word a = parse_word("a", z2p);
  const Word b = parse_word("b", z2p);
  EXPECT_TRUE(classes_linearly_independent(z2, {a, b}));
  EXPECT_FALSE(classes_linearly_independent(z2, {a, a}));
  EXPECT_TRUE(classes_linearly_independent(z2, {}));

  const auto tp = load_fixture("trefoil.wpres");
  const auto t = abelianize(tp);
  EXPECT_TRUE(classes_linearly_independent(t, {parse_word("x", tp)}));
  EXPECT_FALSE(classes_linearly_independent(t, {parse_word("x", tp), parse_word("y", tp)}));
  EXPECT_FALSE(classes_linearly_independent(t, {parse_word("x y^-1", tp)}));

  EXPECT_THROW(classes_linearly_independent(abelianize(parse_presentation("gens: x\nrel: x^3\n")), {}),
               std::logic_error);
}

TEST(Functionals, Examples) {
  const auto z2p = load_fixture("unlink2.wpres");
  const auto z2 = abelianize(z2p);
  const auto f = dual_functionals(z2, {parse_word("a", z2p), parse_word("b", z2p)});
  ASSERT_TRUE(f);
  EXPECT_EQ((*f)[0].coeffs, (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ((*f)[1].coeffs, (std::vector<std::int64_t>{0, 1}));

  const auto tp = load_fixture("trefoil.wpres");
  const auto tf = dual_functionals(abelianize(tp), {parse_word("x", tp)});
  ASSERT_TRUE(tf);
  EXPECT_EQ((*tf)[0].coeffs, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(eval_functional((*tf)[0], parse_word("x y^-1", tp)), 0);
  EXPECT_EQ(eval_functional((*tf)[0], parse_word("x^2", tp)), 2);
  EXPECT_EQ(eval_functional((*tf)[0], Word()), 0);

  const auto bp = load_fixture("braid4_standard.wpres");
  const auto bf = dual_functionals(abelianize(bp), {parse_word("s1", bp)});
  ASSERT_TRUE(bf);
  EXPECT_EQ((*bf)[0].coeffs, (std::vector<std::int64_t>{1, 1, 1}));

  EXPECT_THROW(dual_functionals(z2, {parse_word("a", z2p), parse_word("a", z2p)}), std::logic_error);
}

TEST(Functionals, NotADirectSummand) {
  const auto p = parse_presentation("gens: a\n");
  EXPECT_FALSE(dual_functionals(abelianize(p), {parse_word("a^2", p)}));
}

TEST(Functionals, DeltaTableAndRelators) {
  const auto p = parse_presentation("gens: a b c d\nrel: b^-1 a b c^-1\nrel: a b a^-1 b^-1\n");
  const auto a = abelianize(p);
  const std::vector<Word> B{parse_word("a", p), parse_word("b d", p)};
  const auto f = dual_functionals(a, B);
  ASSERT_TRUE(f);
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) EXPECT_EQ(eval_functional((*f)[i], B[j]), i == j ? 1 : 0);
    for (const auto& r : p.relators()) EXPECT_EQ(eval_functional((*f)[i], r), 0);
  }
}

TEST(FunctionalsProperty, ConjugationInvariantAndMatchesProjection) {
  std::mt19937_64 rng(22);
  for (const char* name : {"trefoil.wpres", "takase.wpres"}) {
    const auto p = load_fixture(name);
    const auto a = abelianize(p);
    ASSERT_EQ(a.rank, 1U);
    const Word g0 = Word::generator(GeneratorId(0));
    const auto f = dual_functionals(a, {g0});
    ASSERT_TRUE(f);
    const auto unit = a.project(g0).free.at(0);
    const auto n = static_cast<std::uint32_t>(p.num_generators());
    for (int trial = 0; trial < 300; ++trial) {
      const Word w = testing::random_word(rng, n, 12);
      const Word c = testing::random_word(rng, n, 12);
      EXPECT_EQ(eval_functional((*f)[0], conjugate(w, c)), eval_functional((*f)[0], w));
      EXPECT_EQ(BigInt(eval_functional((*f)[0], w)) * unit, a.project(w).free.at(0));
    }
  }
}

}  // namespace
}  // namespace wirtinger
