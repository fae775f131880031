#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sublat/errors.hpp"
#include "sublat/module.hpp"
#include "sublat/submodule.hpp"

using namespace sublat;

TEST(Module, ParseExamples) {
  const auto z30 = parse_module("Z30");
  EXPECT_EQ(z30->order(), 30u);
  EXPECT_EQ(z30->ring().kind(), Ring::Kind::Integer);

  const auto klein = parse_module("Z2xZ2");
  EXPECT_EQ(klein->order(), 4u);
  EXPECT_EQ(klein->exponent(), 2);

  const auto prod = parse_module("Z4 | Z9", "Z4*Z9");
  EXPECT_EQ(prod->order(), 36u);
  EXPECT_EQ(prod->block_count(), 2u);
  EXPECT_EQ(parse_module("Z4|Z9")->ring().descriptor(), "Z4*Z9");
  EXPECT_EQ(parse_module("Z 2 x Z 4")->descriptor(), "Z4xZ2");
}

TEST(Module, ParseErrors) {
  EXPECT_THROW(parse_module("Z4", "Z6"), DomainError);
  EXPECT_THROW(parse_module("Z4|Z9", "Z36"), DomainError);
  EXPECT_THROW(parse_module("Y4"), UsageError);
  EXPECT_THROW(parse_module("Z0"), UsageError);
  EXPECT_THROW(parse_module("Z4x"), UsageError);
  EXPECT_THROW(parse_module("Z4096xZ2"), ResourceError);
  Limits tight;
  tight.order_cap = 10;
  EXPECT_THROW(parse_module("Z12", "", tight), ResourceError);
  EXPECT_NO_THROW(parse_module("Z4096"));
}

TEST(Module, ScalarAction) {
  const auto z12 = parse_module("Z12");
  EXPECT_EQ(scalar_action(*z12, {5}, Element{{3}}), Element{{3}});
  EXPECT_EQ(scalar_action(*z12, {0}, Element{{7}}), Element{{0}});
  const auto prod = parse_module("Z4|Z9", "Z4*Z9");
  EXPECT_EQ(scalar_action(*prod, {1, 0}, Element{{1, 1}}), (Element{{1, 0}}));
}

TEST(Module, EncodeDecodeAndGroupLaws) {
  oracle::ModuleGen gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = gen.next(64);
    const auto g = oracle::Group::of(*m);
    for (ElemId a = 0; a < m->order(); ++a) {
      EXPECT_EQ(m->encode(m->decode(a)), a);
      EXPECT_EQ(m->add(a, m->negate(a)), m->zero());
      for (ElemId b = 0; b < m->order(); b += 3)
        EXPECT_EQ(m->decode(m->add(a, b)).residues, g.add(m->decode(a).residues, m->decode(b).residues));
    }
  }
}

TEST(Module, ScalarsActModuloExponent) {
  // r and r + exponent act identically, which is what makes a finite scan of
  // scalars exhaustive.
  oracle::ModuleGen gen(12);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = gen.next(64);
    for (int k = 0; k < 20; ++k) {
      RingElement r;
      for (std::size_t b = 0; b < m->block_count(); ++b)
        r.push_back(static_cast<std::int64_t>(rng() % 1000) - 500);
      RingElement shifted = r;
      for (std::size_t b = 0; b < m->block_count(); ++b) shifted[b] += m->block_exponent(b);
      for (ElemId a = 0; a < m->order(); ++a) EXPECT_EQ(m->scale(r, a), m->scale(shifted, a));
    }
  }
}

TEST(Submodule, SpanExamples) {
  const auto z12 = parse_module("Z12");
  auto ids = [](const Submodule& s) {
    std::vector<std::int64_t> out;
    for (const auto& e : s.elements()) out.push_back(e.residues[0]);
    return out;
  };
  EXPECT_EQ(ids(span(z12, std::vector<Element>{{{4}}})), (std::vector<std::int64_t>{0, 4, 8}));
  EXPECT_EQ(ids(span(z12, std::vector<Element>{{{6}}, {{4}}})), (std::vector<std::int64_t>{0, 2, 4, 6, 8, 10}));
  const auto klein = parse_module("Z2xZ2");
  EXPECT_TRUE(span(klein, std::vector<Element>{{{1, 0}}, {{0, 1}}}).is_whole());
}

TEST(Submodule, CombineExamples) {
  const auto z12 = parse_module("Z12");
  const auto two = span(z12, std::vector<Element>{{{2}}});
  const auto three = span(z12, std::vector<Element>{{{3}}});
  EXPECT_EQ(sub_combine(two, three, SubOp::Intersect), span(z12, std::vector<Element>{{{6}}}));
  EXPECT_TRUE(sub_combine(two, three, SubOp::Sum).is_whole());
  const auto klein = parse_module("Z2xZ2");
  EXPECT_TRUE(sub_combine(span(klein, std::vector<Element>{{{1, 0}}}), span(klein, std::vector<Element>{{{1, 1}}}),
                          SubOp::Intersect)
                  .is_zero());
  EXPECT_THROW(sub_combine(two, zero_submodule(klein), SubOp::Sum), DomainError);
}

TEST(Submodule, SpanMatchesNaiveClosure) {
  oracle::ModuleGen gen(13);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = gen.next(64);
    const auto g = oracle::Group::of(*m);
    std::vector<Element> gens;
    std::vector<oracle::Tuple> tuples;
    for (int k = 0; k < 2; ++k) {
      const auto e = m->decode(static_cast<ElemId>(rng() % m->order()));
      gens.push_back(e);
      tuples.push_back(e.residues);
    }
    EXPECT_EQ(oracle::to_set(span(m, gens)), g.span(tuples)) << m->descriptor();
  }
}

TEST(Submodule, ColonAnnihilatorAndIdealAction) {
  const auto z12 = parse_module("Z12");
  const Ring z = Ring::integers();
  const auto two = span(z12, std::vector<Element>{{{2}}});
  EXPECT_EQ(colon_into(two), Ideal(z, {2}));
  EXPECT_TRUE(colon_into(whole_module(z12)).is_unit());
  EXPECT_EQ(colon_into(zero_submodule(parse_module("Z2xZ2"))), Ideal(z, {2}));

  EXPECT_EQ(annihilator(span(z12, std::vector<Element>{{{3}}})), Ideal(z, {4}));
  EXPECT_TRUE(annihilator(zero_submodule(z12)).is_unit());
  EXPECT_EQ(annihilator(whole_module(parse_module("Z6"))), Ideal(z, {6}));

  EXPECT_EQ(ideal_apply(Ideal(z, {2}), whole_module(z12), IdealAction::Product), two);
  EXPECT_EQ(ideal_apply(Ideal(z, {2}), zero_submodule(z12), IdealAction::Torsion),
            span(z12, std::vector<Element>{{{6}}}));
  EXPECT_EQ(ideal_apply(Ideal(z, {3}), span(z12, std::vector<Element>{{{6}}}), IdealAction::Product),
            span(z12, std::vector<Element>{{{6}}}));
}

TEST(Submodule, ColonMatchesScan) {
  oracle::ModuleGen gen(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = gen.next(48);
    if (m->ring().kind() != Ring::Kind::Integer) continue;
    const auto g = oracle::Group::of(*m);
    const oracle::Lattice lat(g);
    for (const auto& n : lat.subs) {
      std::vector<Element> gens;
      for (const auto& t : n) gens.push_back(Element{t});
      const auto sub = span(m, gens);
      std::int64_t least = 0;
      for (std::int64_t r = 1; r <= m->exponent() && least == 0; ++r)
        if (lat.colon_contains(n, {r})) least = r;
      EXPECT_EQ(colon_into(sub), Ideal(Ring::integers(), {least})) << m->descriptor();
    }
  }
}
