#include "generators.hpp"

#include "plog/jline.hpp"

#include <gtest/gtest.h>

#include <set>

namespace plog {
namespace {

Formula F(const char* s) { return parse_formula(s); }

TEST(Shape, ParseRenderAndDepth) {
  JLineShape s = parse_shape("[[..][.]]");
  EXPECT_EQ(s.depth(), 2u);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(render_shape(s), "[[..][.]]");
  EXPECT_EQ(render_shape(JLineShape::point(3)), "[[[.]]]");
  EXPECT_THROW(parse_shape("[[.].]"), std::invalid_argument);
  EXPECT_THROW(parse_shape("[."), std::invalid_argument);
  EXPECT_THROW(parse_shape("[]"), std::invalid_argument);
}

TEST(Shape, TuplesAndLevelWords) {
  JLineShape s = parse_shape("[[..][.]]");
  EXPECT_EQ(world_tuples(s), (std::vector<WorldTuple>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(level_word(s), (std::vector<unsigned>{1, 0}));
  EXPECT_EQ(tuple_name({0, 1}), "(0,1)");
}

TEST(Materialize, Examples) {
  FiniteFrame c = materialize(parse_shape("[...]"));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.edges(0).size(), 3u);

  FiniteFrame up = materialize(parse_shape("[[..]]"));
  EXPECT_EQ(up.size(), 2u);
  EXPECT_TRUE(up.edges(0).empty());
  EXPECT_EQ(up.edges(1), (std::vector<Edge>{{"(0,0)", "(0,1)"}}));

  FiniteFrame across = materialize(parse_shape("[[.][.]]"));
  EXPECT_EQ(across.edges(0), (std::vector<Edge>{{"(0,0)", "(1,0)"}}));
  EXPECT_TRUE(across.edges(1).empty());
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_jlines(1, 3).size(), 3u);
  for (std::size_t s = 1; s <= 6; ++s) {
    std::size_t exact = 0;
    for (const auto& sh : enumerate_jlines(2, s))
      if (sh.size() == s) ++exact;
    EXPECT_EQ(exact, std::size_t{1} << (s - 1)) << s;
  }
  // n modalities, s worlds: n^(s-1) level words.
  std::size_t three = 0;
  for_each_jline(3, 4, [&](const JLineShape& sh) {
    three += sh.size() == 4;
    return true;
  });
  EXPECT_EQ(three, 27u);
}

TEST(Enumerate, EveryShapeIsAnHlJFrameAndRecoverable) {
  std::set<std::string> seen;
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_jlines(n, 6)) {
      EXPECT_EQ(s.depth(), n);
      EXPECT_TRUE(seen.insert(render_shape(s)).second);
      FiniteFrame fr = materialize(s);
      ASSERT_TRUE(check_j_frame(fr).holds) << render_shape(s);
      EXPECT_TRUE(check_hl_direct(fr).holds);
      EXPECT_TRUE(check_hl_planes(fr).holds);
      EXPECT_EQ(shape_from_level_word(n, level_word(s)), s);
      auto m = shape_of_frame(fr);
      ASSERT_TRUE(m);
      EXPECT_EQ(m->shape, s);
      for (const auto& [w, t] : m->tuples) EXPECT_EQ(w, tuple_name(t));
    }
}

TEST(Enumerate, EarlyStop) {
  int calls = 0;
  for_each_jline(2, 5, [&](const JLineShape&) { return ++calls < 4; });
  EXPECT_EQ(calls, 4);
}

TEST(ShapeOfFrame, RenamedWorldsAndNonLines) {
  FiniteFrame fr(2, {"r", "s", "t"}, {{{"r", "t"}, {"s", "t"}}, {{"r", "s"}}});
  auto m = shape_of_frame(fr);
  ASSERT_TRUE(m);
  EXPECT_EQ(render_shape(m->shape), "[[..][.]]");
  EXPECT_EQ(m->tuples.at("s"), (WorldTuple{0, 1}));
  FiniteFrame fork(1, {"a", "b", "c"}, {{{"a", "b"}, {"a", "c"}}});
  EXPECT_FALSE(shape_of_frame(fork));
}

TEST(SizeBound, Examples) {
  EXPECT_EQ(jline_size_bound(F("[0]p & <1>q"), 2), 6u);
  EXPECT_EQ(jline_size_bound(F("p"), 3), 1u);
  EXPECT_EQ(jline_size_bound(F("[0][0][0]p"), 1), 4u);
  EXPECT_EQ(jline_size_bound(F("[0][0][0]p"), 3), 36u);
  EXPECT_EQ(jline_size_bound(F("<0><0><0><0><0><0><0><0><0><0>T"), 40), UINT64_MAX);
}

void expect_valid_countermodel(const Formula& f, const Verdict& v) {
  ASSERT_EQ(v.status, Status::Refuted);
  ASSERT_TRUE(v.countermodel);
  const auto& cm = *v.countermodel;
  unsigned n = std::max(1u, modal_signature(f));
  FiniteFrame fr = materialize(cm.shape);
  EXPECT_EQ(cm.world, tuple_name(world_tuples(cm.shape)[0]));
  EXPECT_TRUE(eval_at(fr, cm.valuation, cm.world, glp3_search_target(f, n)));
  EXPECT_FALSE(eval_at(fr, cm.valuation, cm.world, f));
  EXPECT_LE(cm.shape.size(), v.bound_used);
}

TEST(Glp3, Examples) {
  EXPECT_EQ(glp3_decide(F("[0]([0]p -> q) | [0]([0]q & q -> p)")).status, Status::Theorem);
  EXPECT_EQ(glp3_decide(F("[0]p -> [1]p")).status, Status::Theorem);

  Formula f = F("p -> [0]p");
  Verdict v = glp3_decide(f);
  expect_valid_countermodel(f, v);
  EXPECT_EQ(render_shape(v.countermodel->shape), "[..]");
  EXPECT_EQ(v.countermodel->valuation.at("p"), (std::set<World>{"(0)"}));

  Verdict d = glp3_decide(F("<0>T"));
  expect_valid_countermodel(F("<0>T"), d);
  EXPECT_EQ(d.countermodel->shape.size(), 1u);
}

TEST(Glp3, SearchTargetIsNegationWithGuards) {
  Formula f = F("[0]p");
  Formula neg = box_normalize(Formula::neg(f));
  EXPECT_EQ(glp3_search_target(f, 2), Formula::conj(neg, m_plus(neg, 2)));
}

TEST(Glp3, AxiomInstancesAreTheorems) {
  std::vector<Formula> sample{F("p"), F("q"), F("~p"), F("[0]p"), F("<1>q"), F("p & q"), F("T"), F("[1]F")};
  testing::Rng rng(41);
  for (int i = 0; i < 25; ++i) {
    const Formula& a = sample[testing::pick(rng, sample.size())];
    const Formula& b = sample[testing::pick(rng, sample.size())];
    for (const Formula& ax : testing::glp_axiom_instances(a, b, 2))
      EXPECT_EQ(glp3_decide(ax).status, Status::Theorem) << render_formula(ax);
    for (unsigned k = 0; k < 2; ++k) {
      Formula l = testing::dot3(a, b, k);
      EXPECT_EQ(glp3_decide(l).status, Status::Theorem) << render_formula(l);
    }
  }
}

TEST(Glp3, NonTheoremsGetCheckableCountermodels) {
  for (const char* s : {"[1]p -> [0]p", "<0>p -> <1>p", "[0]F", "p", "<1>T -> [0]<1>T", "[0]p | [0]~p",
                        "[1](p -> [0]p)"}) {
    Formula f = F(s);
    expect_valid_countermodel(f, glp3_decide(f));
  }
}

TEST(Glp3, ModusPonensCoherence) {
  testing::Rng rng(42);
  testing::FormulaSpec spec{{"p"}, 2, 2, 6};
  int chains = 0;
  for (int i = 0; i < 400 && chains < 30; ++i) {
    Formula f = testing::random_formula(rng, spec);
    Formula g = testing::random_formula(rng, spec);
    if (glp3_decide(f).status != Status::Theorem) continue;
    if (glp3_decide(Formula::imp(f, g)).status != Status::Theorem) continue;
    ++chains;
    EXPECT_EQ(glp3_decide(g).status, Status::Theorem) << render_formula(f) << " / " << render_formula(g);
  }
  EXPECT_GT(chains, 5);
}

TEST(Glp3, CapBelowBoundIsInconclusive) {
  Verdict v = glp3_decide(F("[0]p -> [1]p"), 1);
  // The symbolic search may still settle it by exhausting its state space.
  EXPECT_NE(v.status, Status::Refuted);
}

TEST(Jlin, Examples) {
  Formula sat = F("<0>p & <0>~p");
  Verdict v = jlin_satisfy(sat, 1);
  ASSERT_EQ(v.status, Status::Refuted);
  ASSERT_TRUE(v.countermodel);
  EXPECT_EQ(v.countermodel->shape.size(), 3u);
  EXPECT_TRUE(eval_at(materialize(v.countermodel->shape), v.countermodel->valuation, v.countermodel->world, sat));

  EXPECT_EQ(jlin_satisfy(F("[0]F & <0>T"), 1).status, Status::Theorem);
  Formula pl = testing::pseudo_linearity(F("p"), F("q"), 0, 2);
  EXPECT_EQ(jlin_satisfy(Formula::neg(pl), 2).status, Status::Theorem);
  EXPECT_THROW(jlin_satisfy(F("<1>T"), 1), std::invalid_argument);
}

TEST(Jlin, AxiomNegationsAreUnsatisfiable) {
  std::vector<Formula> sample{F("p"), F("q"), F("[0]p"), F("<1>q"), F("~p | q")};
  for (const auto& a : sample)
    for (const auto& b : sample) {
      for (const Formula& ax : testing::j_axiom_instances(a, b, 2))
        EXPECT_EQ(jlin_satisfy(Formula::neg(ax), 2).status, Status::Theorem) << render_formula(ax);
      for (unsigned m = 0; m < 2; ++m)
        EXPECT_EQ(jlin_satisfy(Formula::neg(testing::pseudo_linearity(a, b, m, 2)), 2).status, Status::Theorem);
    }
}

TEST(Jlin, NotAllGlpAxiomsHoldOnJLines) {
  // [0]p -> [1]p fails on a line where only relation 1 is present.
  Verdict v = jlin_satisfy(F("~([0]p -> [1]p)"), 2);
  ASSERT_EQ(v.status, Status::Refuted);
  EXPECT_EQ(render_shape(v.countermodel->shape), "[[..]]");
}

}  // namespace
}  // namespace plog
