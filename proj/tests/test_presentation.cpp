#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wirtinger/presentation.hpp"
#include "wirtinger/wirtinger_form.hpp"

namespace wirtinger {
namespace {

using testing::load_fixture;

const char* kTrefoil = "gens: x y z\nrel: z^-1 x z y^-1\nrel: x^-1 y x z^-1\nrel: y^-1 z y x^-1\n";

TEST(Parse, Trefoil) {
  const auto p = parse_presentation(kTrefoil);
  EXPECT_EQ(p.num_generators(), 3U);
  ASSERT_EQ(p.relators().size(), 3U);
  EXPECT_EQ(format_word(p.relators()[0], p), "z^-1 x z y^-1");
  EXPECT_EQ(p, load_fixture("trefoil.wpres"));
}

TEST(Parse, CommutingRelatorAndFreeGroup) {
  const auto z2 = parse_presentation("gens: a b\nrel: b^-1 a b a^-1");
  EXPECT_EQ(z2.num_generators(), 2U);
  EXPECT_EQ(z2.relators().size(), 1U);
  const auto f1 = parse_presentation("gens: x\n");
  EXPECT_EQ(f1.num_generators(), 1U);
  EXPECT_TRUE(f1.relators().empty());
}

TEST(Parse, WordSyntaxVariants) {
  const auto p = parse_presentation("gens: x y\n");
  EXPECT_EQ(parse_word("x' y^2 y^-3", p), parse_word("x^-1 y^-1", p));
  EXPECT_EQ(parse_word("x^3'", p), parse_word("x^-3", p));
  EXPECT_TRUE(parse_word("1", p).empty());
  EXPECT_TRUE(parse_word("x x^-1", p).empty());
  EXPECT_THROW(parse_word("x'", p, WordSyntax{false}), ParseError);
}

TEST(Parse, CommentsAndBlankLines) {
  const auto p = parse_presentation("# leading comment\n\n  gens: a   b # trailing\nrel: a b a^-1 b^-1\n\n");
  EXPECT_EQ(p.generator_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(p.relators().size(), 1U);
}

TEST(Parse, ErrorsCarryLocation) {
  try {
    parse_presentation("gens: x y\nrel: x w\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 8U);
    EXPECT_NE(std::string(e.what()).find("undeclared generator 'w'"), std::string::npos);
  }
  EXPECT_THROW(parse_presentation("gens: x x\n"), ParseError);
  EXPECT_THROW(parse_presentation("rel: x\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x\ngens: y\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x\nrel: x^\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x\nrelator: x\n"), ParseError);
  EXPECT_THROW(parse_presentation("# only a comment\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x\nrel: x*x\n"), ParseError);
}

TEST(Parse, ConstructorValidates) {
  EXPECT_THROW(Presentation({"a", "a"}, {}), std::invalid_argument);
  EXPECT_THROW(Presentation({"a"}, {Word::generator(GeneratorId(1))}), std::invalid_argument);
}

TEST(Parse, SerializeRoundTripRandomized) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> rels;
    for (int k = 0; k < 4; ++k) rels.push_back(testing::random_word(rng, 3, 10));
    const Presentation p({"x", "y1", "z_2"}, rels);
    EXPECT_EQ(parse_presentation(serialize_presentation(p)), p);
    EXPECT_EQ(presentation_from_json(presentation_to_json(p)), p);
  }
}

TEST(Parse, JsonMirrorShape) {
  const auto p = parse_presentation("gens: x y\nrel: x y^-1\n");
  EXPECT_EQ(presentation_to_json(p).dump(), R"({"generators":["x","y"],"relators":[[["x",1],["y",-1]]]})");
}

TEST(Wirtinger, TrefoilTriples) {
  const auto p = load_fixture("trefoil.wpres");
  const auto v = validate_wirtinger(p);
  ASSERT_TRUE(std::holds_alternative<WirtingerData>(v));
  const auto& triples = std::get<WirtingerData>(v).triples;
  const GeneratorId x{0}, y{1}, z{2};
  ASSERT_EQ(triples.size(), 3U);
  EXPECT_EQ(triples[0], (WirtingerTriple{x, z, y}));
  EXPECT_EQ(triples[1], (WirtingerTriple{y, x, z}));
  EXPECT_EQ(triples[2], (WirtingerTriple{z, y, x}));
}

TEST(Wirtinger, BraidRelatorRejected) {
  const auto v = validate_wirtinger(load_fixture("braid4_standard.wpres"));
  ASSERT_TRUE(std::holds_alternative<WirtingerRejection>(v));
  EXPECT_EQ(std::get<WirtingerRejection>(v).relator_index, 0U);
  EXPECT_NE(std::get<WirtingerRejection>(v).reason.find("length 6"), std::string::npos);
}

TEST(Wirtinger, AlphaEqualsGammaAllowed) {
  const auto v = validate_wirtinger(load_fixture("unlink2.wpres"));
  ASSERT_TRUE(std::holds_alternative<WirtingerData>(v));
  const GeneratorId a{0}, b{1};
  EXPECT_EQ(std::get<WirtingerData>(v).triples.at(0), (WirtingerTriple{a, b, a}));
}

// rotation, conjugated form, inverse form, and a relator wrapped in d
TEST(Wirtinger, MatchingVariants) {
  const auto p = parse_presentation(
      "gens: a b c d\n"
      "rel: a b c^-1 b^-1\n"
      "rel: b a b^-1 c^-1\n"
      "rel: b^-1 c^-1 b a\n"
      "rel: d^-1 b^-1 a b c^-1 d\n");
  const auto v = validate_wirtinger(p);
  ASSERT_TRUE(std::holds_alternative<WirtingerData>(v));
  const GeneratorId a{0}, b{1}, c{2};
  const auto& t = std::get<WirtingerData>(v).triples;
  EXPECT_EQ(t[0], (WirtingerTriple{a, b, c}));
  EXPECT_EQ(t[1], (WirtingerTriple{c, b, a}));
  EXPECT_EQ(t[3], (WirtingerTriple{a, b, c}));
}

TEST(Wirtinger, DegenerateRelatorsRejected) {
  for (const char* text : {"gens: a b\nrel: a b^-1\n", "gens: a\nrel: 1\n", "gens: a b\nrel: a^2 b^-2\n",
                           "gens: a b\nrel: b^-1 a b a\n"}) {
    EXPECT_TRUE(std::holds_alternative<WirtingerRejection>(validate_wirtinger(parse_presentation(text))))
        << text;
  }
}

TEST(Wirtinger, RepeatedRelatorsAndUnusedGeneratorsAccepted) {
  const auto p = parse_presentation("gens: a b c\nrel: b^-1 a b a^-1\nrel: b^-1 a b a^-1\n");
  ASSERT_TRUE(std::holds_alternative<WirtingerData>(validate_wirtinger(p)));
}

TEST(Wirtinger, AcceptedRelatorsReconstructAndSumToZero) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> g(0, 3);
  std::uniform_int_distribution<int> rot(0, 3);
  std::bernoulli_distribution flip(0.5);
  for (int trial = 0; trial < 500; ++trial) {
    const WirtingerTriple t{GeneratorId(g(rng)), GeneratorId(g(rng)), GeneratorId(g(rng))};
    Word r = wirtinger_relator(t);
    if (flip(rng)) r = inv(r);
    r = cyclic_rotations(cyclic_reduce(r).core).at(static_cast<std::size_t>(rot(rng)) %
                                                    std::max<std::size_t>(1, r.length()));
    const Presentation p({"a", "b", "c", "d"}, {r});
    const auto v = validate_wirtinger(p);
    const bool degenerate = t.alpha == t.beta || t.beta == t.gamma;
    if (degenerate) {
      EXPECT_TRUE(std::holds_alternative<WirtingerRejection>(v));
      continue;
    }
    ASSERT_TRUE(std::holds_alternative<WirtingerData>(v));
    const auto found = std::get<WirtingerData>(v).triples[0];
    const auto rebuilt = cyclic_reduce(wirtinger_relator(found)).core;
    const auto rots = cyclic_rotations(cyclic_reduce(r).core);
    const auto inv_rots = cyclic_rotations(cyclic_reduce(inv(r)).core);
    const bool is_rotation = std::find(rots.begin(), rots.end(), rebuilt) != rots.end() ||
                             std::find(inv_rots.begin(), inv_rots.end(), rebuilt) != inv_rots.end();
    EXPECT_TRUE(is_rotation);
    const auto e = exponent_vector(r, 4);
    std::vector<std::int64_t> expect(4, 0);
    expect[found.alpha.index] += 1;
    expect[found.gamma.index] -= 1;
    const bool same = e == expect;
    std::vector<std::int64_t> neg(4);
    for (int i = 0; i < 4; ++i) neg[i] = -expect[i];
    EXPECT_TRUE(same || e == neg);
    EXPECT_EQ(e[0] + e[1] + e[2] + e[3], 0);
  }
}

TEST(LogGraph, Examples) {
  const auto tref = load_fixture("trefoil.wpres");
  const auto g = log_graph(tref, std::get<WirtingerData>(validate_wirtinger(tref)));
  EXPECT_EQ(g.num_nodes, 3U);
  EXPECT_EQ(g.edges.size(), 3U);
  EXPECT_TRUE(is_irreducible(g));

  const auto z2 = load_fixture("unlink2.wpres");
  const auto h = log_graph(z2, std::get<WirtingerData>(validate_wirtinger(z2)));
  ASSERT_EQ(h.edges.size(), 1U);
  EXPECT_EQ(h.edges[0].from, h.edges[0].to);
  EXPECT_FALSE(is_irreducible(h));

  const auto free1 = parse_presentation("gens: x\n");
  const auto k = log_graph(free1, std::get<WirtingerData>(validate_wirtinger(free1)));
  EXPECT_TRUE(k.edges.empty());
  EXPECT_TRUE(is_irreducible(k));

  const auto free2 = parse_presentation("gens: x y\n");
  EXPECT_FALSE(is_irreducible(log_graph(free2, std::get<WirtingerData>(validate_wirtinger(free2)))));
}

TEST(LogGraph, TakaseIsIrreducible) {
  const auto p = load_fixture("takase.wpres");
  const auto v = validate_wirtinger(p);
  ASSERT_TRUE(std::holds_alternative<WirtingerData>(v));
  EXPECT_TRUE(is_irreducible(log_graph(p, std::get<WirtingerData>(v))));
}

}  // namespace
}  // namespace wirtinger
