#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wirtinger/coset_enumeration.hpp"
#include "wirtinger/group_model.hpp"
#include "wirtinger/prove_equal.hpp"
#include "wirtinger/quotient.hpp"

namespace wirtinger {
namespace {

using testing::fixture_path;
using testing::load_fixture;

std::size_t index_of(const Presentation& p, std::vector<Word> subgroup = {}, std::size_t budget = 100000) {
  const auto r = todd_coxeter(p, subgroup, budget);
  if (!std::holds_alternative<CosetTable>(r)) return 0;
  const auto& t = std::get<CosetTable>(r);
  EXPECT_TRUE(t.complete);
  EXPECT_TRUE(coset_table_consistent(t, p));
  return t.num_cosets;
}

TEST(ToddCoxeter, Examples) {
  EXPECT_EQ(index_of(parse_presentation("gens: x\nrel: x^3\n"), {}, 100), 3U);

  EXPECT_EQ(index_of(load_fixture("s3.wpres")), 6U);
  // S3 generated by (1 2), (2 3)
  EXPECT_EQ(index_of(load_fixture("s3.wpres")), testing::brute_permutation_group_order({{1, 0, 2}, {0, 2, 1}}));

  const auto t = load_fixture("trefoil.wpres");
  EXPECT_EQ(index_of(t.with_relators({parse_word("x", t)})), 1U);
}

TEST(ToddCoxeter, MoreGroups) {
  EXPECT_EQ(index_of(load_fixture("q8.wpres")), 8U);
  EXPECT_EQ(index_of(load_fixture("takase24.wpres")), 24U);
  // (2,3,3) triangle group is A4
  EXPECT_EQ(index_of(parse_presentation("gens: x y\nrel: x^2\nrel: y^3\nrel: x y x y x y\n")), 12U);
  // A5 as a (2,3,5) triangle group
  EXPECT_EQ(index_of(parse_presentation("gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b a b a b a b\n")), 60U);
  EXPECT_EQ(index_of(parse_presentation("gens: a b\nrel: a\nrel: b\n")), 1U);
  EXPECT_EQ(index_of(parse_presentation("gens: a\nrel: 1\nrel: a^1\n")), 1U);
}

TEST(ToddCoxeter, Subgroups) {
  const auto s3 = load_fixture("s3.wpres");
  EXPECT_EQ(index_of(s3, {parse_word("x", s3)}), 3U);
  EXPECT_EQ(index_of(s3, {parse_word("x y", s3)}), 2U);
  const auto tref = load_fixture("trefoil.wpres");
  // the meridian normally generates: quotient by its normal closure is trivial
  EXPECT_EQ(index_of(tref.with_relators({parse_word("x", tref)}), {}, 4), 1U);
}

TEST(ToddCoxeter, Overflow) {
  const auto r = todd_coxeter(parse_presentation("gens: x y\n"), {}, 50);
  ASSERT_TRUE(std::holds_alternative<CosetOverflow>(r));
  EXPECT_EQ(std::get<CosetOverflow>(r).max_cosets, 50U);
  EXPECT_TRUE(std::holds_alternative<CosetOverflow>(todd_coxeter(load_fixture("takase.wpres"), {}, 1000)));
  EXPECT_THROW(todd_coxeter(load_fixture("s3.wpres"), {}, 0), std::invalid_argument);
}

TEST(ToddCoxeter, Deterministic) {
  const auto p = load_fixture("takase24.wpres");
  const auto a = std::get<CosetTable>(todd_coxeter(p, {}, 1000));
  const auto b = std::get<CosetTable>(todd_coxeter(p, {}, 1000));
  EXPECT_EQ(a.entries, b.entries);
}

TEST(Model, FromCosetTable) {
  const auto c3 = testing::enumerate_model(parse_presentation("gens: x\nrel: x^3\n"));
  EXPECT_EQ(c3.order(), 3U);
  EXPECT_TRUE(c3.is_abelian());
  EXPECT_EQ(c3.element_order(c3.gen_images()[0]), 3U);

  const auto q8 = testing::q8_model();
  EXPECT_EQ(q8.order(), 8U);
  EXPECT_FALSE(q8.is_abelian());
  std::size_t involutions = 0;
  for (ElementId g = 0; g < 8; ++g) involutions += q8.element_order(g) == 2;
  EXPECT_EQ(involutions, 1U);

  const auto s3 = testing::s3_model();
  EXPECT_EQ(s3.order(), 6U);
  EXPECT_FALSE(s3.is_abelian());
  involutions = 0;
  for (ElementId g = 0; g < 6; ++g) involutions += s3.element_order(g) == 2;
  EXPECT_EQ(involutions, 3U);
}

TEST(Model, RejectsUnsuitableTables) {
  const auto s3 = load_fixture("s3.wpres");
  const auto sub = std::get<CosetTable>(todd_coxeter(s3, {parse_word("x", s3)}, 100));
  EXPECT_THROW(model_from_coset_table(sub), std::invalid_argument);
  CosetTable incomplete = std::get<CosetTable>(todd_coxeter(s3, {}, 100));
  incomplete.complete = false;
  EXPECT_THROW(model_from_coset_table(incomplete), std::invalid_argument);
}

TEST(Model, AxiomsAndRelatorsOnEnumeratedModels) {
  for (const char* f : {"s3.wpres", "q8.wpres", "takase24.wpres"}) {
    const auto p = load_fixture(f);
    const auto m = testing::enumerate_model(p);
    EXPECT_TRUE(verify_group_axioms(m)) << f;
    EXPECT_TRUE(satisfies_relators(m, p)) << f;
    EXPECT_EQ(generated_subgroup(m, m.gen_images()).size(), m.order()) << f;
  }
}

TEST(Model, EvalWord) {
  const auto p = load_fixture("s3.wpres");
  const auto m = testing::s3_model();
  EXPECT_EQ(eval_word(m, Word()), m.identity());
  for (const auto& r : p.relators()) EXPECT_EQ(eval_word(m, r), m.identity());
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = testing::random_word(rng, 2, 10);
    EXPECT_EQ(eval_word(m, mul(w, inv(w))), m.identity());
    const Word v = testing::random_word(rng, 2, 10);
    EXPECT_EQ(eval_word(m, mul(w, v)), m.mul(eval_word(m, w), eval_word(m, v)));
  }
  const FiniteGroupModel bare(1, {0});
  EXPECT_THROW(eval_word(bare, Word()), std::logic_error);
}

TEST(Model, ConstructorValidates) {
  EXPECT_THROW(FiniteGroupModel(2, {0, 1, 1, 1}), std::invalid_argument);  // not Latin
  EXPECT_EQ(FiniteGroupModel(2, {1, 0, 0, 1}).identity(), 1U);
  EXPECT_THROW(FiniteGroupModel(2, {1, 1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(FiniteGroupModel(2, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(FiniteGroupModel(0, {}), std::invalid_argument);
}

TEST(Model, JsonRoundTrip) {
  const auto m = testing::q8_model();
  const auto j = model_to_json(m);
  const auto back = model_from_json(j);
  EXPECT_EQ(model_to_json(back), j);
  EXPECT_EQ(back.gen_names(), m.gen_names());
  auto bad = j;
  bad["mul"][0][1] = j["mul"][0][2];
  EXPECT_THROW(model_from_json(bad), std::invalid_argument);
}

TEST(Permutations, ModelsMatchBruteForce) {
  const auto a4 = testing::a4_model();
  EXPECT_EQ(a4.order(), testing::brute_permutation_group_order({{1, 2, 0, 3}, {1, 0, 3, 2}}));
  EXPECT_EQ(a4.order(), 12U);
  EXPECT_TRUE(verify_group_axioms(a4));
  EXPECT_THROW(model_from_permutations({"a", "b"}, {parse_cycles("(1 2 3 4 5)"), parse_cycles("(1 2)")}, 100),
               std::length_error);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)"), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(0 1)"), std::invalid_argument);
  EXPECT_EQ(parse_cycles("()", 3), (Permutation{0, 1, 2}));
}

TEST(Permutations, RightActionConvention) {
  // (1 2) then (2 3): 1 -> 2 -> 3
  const auto m = model_from_permutations({"a", "b"}, {parse_cycles("(1 2)"), parse_cycles("(2 3)")});
  const auto ab = m.mul(m.gen_images()[0], m.gen_images()[1]);
  EXPECT_EQ(m.element_order(ab), 3U);
  EXPECT_NE(ab, m.mul(m.gen_images()[1], m.gen_images()[0]));
}

TEST(Quotient, TrefoilOntoS3) {
  const auto q = load_quotient(fixture_path("trefoil_s3.quot"));
  EXPECT_EQ(q.model.order(), 6U);
  EXPECT_EQ(q.model.name(), "S3");
  EXPECT_TRUE(satisfies_relators(q.model, q.presentation));
  EXPECT_EQ(q.presentation, load_fixture("trefoil.wpres"));
}

TEST(Quotient, RejectsBadMaps) {
  const auto dir = std::filesystem::path(WIRTINGER_FIXTURE_DIR);
  EXPECT_THROW(parse_quotient("presentation: trefoil.wpres\nmap: x -> (1 2)\nmap: y -> (1 2 3)\nmap: z -> (1 3)\n", dir),
               std::invalid_argument);
  EXPECT_THROW(parse_quotient("presentation: trefoil.wpres\nmap: x -> (1 2)\n", dir), std::invalid_argument);
  EXPECT_THROW(parse_quotient("map: x -> (1 2)\n", dir), ParseError);
}

TEST(ProveEqual, Examples) {
  const auto b4 = load_fixture("braid4_standard.wpres");
  const Word u = parse_word("s1 s3", b4);
  EXPECT_EQ(std::get<Proven>(prove_equal(b4, u, u, 0)).depth, 0U);
  const auto v = prove_equal(b4, u, parse_word("s3 s1", b4), 1);
  ASSERT_TRUE(std::holds_alternative<Proven>(v));
  EXPECT_EQ(std::get<Proven>(v).depth, 1U);

  const auto q = load_quotient(fixture_path("trefoil_s3.quot"));
  const auto t = load_fixture("trefoil.wpres");
  const auto d = prove_equal(t, parse_word("x", t), parse_word("y", t), 4, {q.model});
  ASSERT_TRUE(std::holds_alternative<Disproven>(d));
  EXPECT_EQ(std::get<Disproven>(d).witness, "S3");
}

TEST(ProveEqual, BraidRelationNeedsDepth) {
  const auto b4 = load_fixture("braid4_standard.wpres");
  const Word u = parse_word("s1 s2 s1", b4);
  const Word v = parse_word("s2 s1 s2", b4);
  EXPECT_TRUE(std::holds_alternative<Proven>(prove_equal(b4, u, v, 1)));
  // s1 s3 s2 vs s3 s1 s2: one commutation
  EXPECT_TRUE(std::holds_alternative<Proven>(
      prove_equal(b4, parse_word("s1 s3 s2", b4), parse_word("s3 s1 s2", b4), 1)));
  EXPECT_TRUE(std::holds_alternative<Unknown>(prove_equal(b4, parse_word("s1", b4), parse_word("s2", b4), 0)));
  EXPECT_TRUE(std::holds_alternative<Unknown>(prove_equal(b4, parse_word("s1", b4), parse_word("s2", b4), 2)));
}

TEST(ProveEqual, SoundAgainstFiniteQuotient) {
  const auto p = load_fixture("s3.wpres");
  const auto m = testing::s3_model();
  std::mt19937_64 rng(41);
  std::size_t proven = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Word u = testing::random_word(rng, 2, 4);
    const Word v = testing::random_word(rng, 2, 4);
    const auto verdict = prove_equal(p, u, v, 2, {m});
    if (std::holds_alternative<Proven>(verdict)) {
      ++proven;
      EXPECT_EQ(eval_word(m, u), eval_word(m, v));
    } else if (std::holds_alternative<Disproven>(verdict)) {
      EXPECT_NE(eval_word(m, u), eval_word(m, v));
    }
  }
  EXPECT_GT(proven, 0U);
}

TEST(ProveEqual, QuotientWithWrongGeneratorsIgnored) {
  const auto t = load_fixture("trefoil.wpres");
  const auto bad = testing::cyclic_model(2);  // generator names do not match
  EXPECT_TRUE(std::holds_alternative<Unknown>(
      prove_equal(t, parse_word("x", t), parse_word("x^3", t), 0, {bad})));
}

}  // namespace
}  // namespace wirtinger
