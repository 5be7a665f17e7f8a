#include "generators.hpp"

#include "plog/ordinal.hpp"

#include <gtest/gtest.h>

#include <array>
#include <optional>

namespace plog {
namespace {

Ordinal O(const char* s) { return ord_parse(s); }
const Ordinal w = Ordinal::omega();

TEST(OrdinalParse, Examples) {
  Ordinal a = O("w^w + w*3 + 1");
  ASSERT_EQ(a.terms().size(), 3u);
  EXPECT_EQ(a.terms()[0], (OrdinalTerm{w, 1}));
  EXPECT_EQ(a.terms()[1], (OrdinalTerm{1, 3}));
  EXPECT_EQ(a.terms()[2], (OrdinalTerm{0, 1}));
  EXPECT_TRUE(O("0").terms().empty());
  EXPECT_EQ(O("w^(w+1)").terms(), (std::vector<OrdinalTerm>{{w + 1, 1}}));
}

TEST(OrdinalParse, NormalizesNonCanonicalSums) {
  EXPECT_EQ(O("1 + w"), w);
  EXPECT_EQ(O("w + w"), O("w*2"));
  EXPECT_EQ(O("3 + 4"), Ordinal(7));
  EXPECT_EQ(O("w^1"), w);
  EXPECT_EQ(O("w^0"), Ordinal(1));
  EXPECT_EQ(O("w*0 + 2"), Ordinal(2));
}

TEST(OrdinalParse, Errors) {
  for (const char* bad : {"", "x", "w^", "w*", "1 +", "(w)", "w^(w", "w^w^w"})
    EXPECT_THROW(ord_parse(bad), OrdinalSyntaxError) << bad;
}

TEST(OrdinalRender, CanonicalText) {
  EXPECT_EQ(ord_render(Ordinal()), "0");
  EXPECT_EQ(ord_render(O("w^w + w*3 + 1")), "w^w + w*3 + 1");
  EXPECT_EQ(ord_render(O("w^(w+1)")), "w^(w+1)");
  EXPECT_EQ(ord_render(O("w^2*2 + 5")), "w^2*2 + 5");
  EXPECT_EQ(ord_render(O("w^(w^w)")), "w^(w^w)");
}

TEST(OrdinalRender, RoundTripOnRandomOrdinals) {
  testing::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    Ordinal a = testing::random_ordinal(rng, 3, 2);
    EXPECT_EQ(ord_parse(ord_render(a)), a) << ord_render(a);
  }
}

TEST(OrdinalCmp, Examples) {
  EXPECT_EQ(ord_cmp(w, w + 1), std::strong_ordering::less);
  EXPECT_EQ(ord_cmp(O("w^w"), O("w*5")), std::strong_ordering::greater);
  EXPECT_EQ(ord_cmp(0, 0), std::strong_ordering::equal);
}

TEST(OrdinalAdd, Examples) {
  EXPECT_EQ(Ordinal(1) + w, w);
  EXPECT_EQ(ord_render(w + 1), "w + 1");
  EXPECT_EQ(O("w^2 + w") + O("w^2"), O("w^2*2"));
}

TEST(OrdinalPow, Examples) {
  EXPECT_EQ(ord_omega_pow(0), Ordinal(1));
  EXPECT_EQ(ord_omega_pow(1), w);
  EXPECT_EQ(ord_render(ord_omega_pow(w + 1)), "w^(w+1)");
}

TEST(OrdinalLog, Examples) {
  EXPECT_EQ(ord_log(O("w^w")), w);
  EXPECT_EQ(ord_log(O("w^2 + w*3")), Ordinal(1));
  EXPECT_EQ(ord_log(5), Ordinal(0));
  EXPECT_EQ(ord_log(0), Ordinal(0));
}

TEST(OrdinalClassify, Kinds) {
  EXPECT_TRUE(Ordinal().is_zero());
  EXPECT_TRUE(Ordinal(3).is_finite());
  EXPECT_TRUE((w + 1).is_successor());
  EXPECT_TRUE(w.is_limit());
  EXPECT_FALSE(Ordinal().is_limit());
  EXPECT_EQ(Ordinal(42).to_natural(), Natural(42));
  EXPECT_THROW(w.to_natural(), std::domain_error);
}

TEST(OrdinalSub, LeftSubtraction) {
  EXPECT_EQ(ord_sub_left(O("w*2 + 3"), w), O("w + 3"));
  EXPECT_EQ(ord_sub_left(w, 5), w);
  EXPECT_THROW(ord_sub_left(1, w), std::domain_error);
}

TEST(OrdinalProperties, AdditionAndLog) {
  testing::Rng rng(22);
  for (int i = 0; i < 400; ++i) {
    Ordinal a = testing::random_ordinal(rng, 3, 2);
    Ordinal b = testing::random_ordinal(rng, 3, 2);
    Ordinal c = testing::random_ordinal(rng, 3, 2);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + Ordinal(), a);
    EXPECT_EQ(Ordinal() + a, a);
    EXPECT_LE(a, a + b);
    if (b < c) EXPECT_LT(a + b, a + c);
    EXPECT_EQ(ord_log(ord_omega_pow(a)), a);
    if (!a.is_zero()) EXPECT_LE(ord_omega_pow(ord_log(a)), a);
    if (a <= b) EXPECT_EQ(a + ord_sub_left(b, a), b);
    EXPECT_EQ(ord_succ(a), a + 1);
  }
}

// Grid oracle over w^2*a + w*b + c with small coefficients.
using Triple = std::array<unsigned, 3>;

Ordinal from_triple(const Triple& t) {
  std::vector<OrdinalTerm> ts;
  for (unsigned e = 0; e < 3; ++e)
    if (t[e] != 0) ts.push_back({2 - e, t[e]});
  return Ordinal::from_terms(ts);
}

Triple add_triples(const Triple& x, const Triple& y) {
  if (y[0] != 0) return {x[0] + y[0], y[1], y[2]};
  if (y[1] != 0) return {x[0], x[1] + y[1], y[2]};
  return {x[0], x[1], x[2] + y[2]};
}

std::optional<unsigned> triple_log(const Triple& t) {
  for (unsigned e = 3; e-- > 0;)
    if (t[e] != 0) return 2 - e;
  return std::nullopt;  // zero
}

std::vector<Triple> grid(unsigned k) {
  std::vector<Triple> out;
  for (unsigned a = 0; a <= k; ++a)
    for (unsigned b = 0; b <= k; ++b)
      for (unsigned c = 0; c <= k; ++c) out.push_back({a, b, c});
  return out;  // ascending
}

TEST(OrdinalOracle, AddAndCompareOnGrid) {
  auto g = grid(3);
  for (const auto& x : g)
    for (const auto& y : g) {
      EXPECT_EQ(from_triple(x) + from_triple(y), from_triple(add_triples(x, y)));
      EXPECT_EQ(from_triple(x) <=> from_triple(y), x <=> y);
    }
}

TEST(OrdinalOracle, LeastWithLogByExhaustiveScan) {
  auto lows = grid(2);
  auto space = grid(3);
  for (const auto& lo : lows)
    for (unsigned nu = 0; nu <= 2; ++nu) {
      std::optional<Triple> at_least, equal;
      for (const auto& v : space) {
        if (v < lo) continue;
        auto lg = triple_log(v).value_or(0);
        if (!at_least && lg >= nu) at_least = v;
        if (!equal && lg == nu && (v != Triple{0, 0, 0} || nu == 0)) equal = v;
      }
      ASSERT_TRUE(at_least && equal);
      EXPECT_EQ(least_with_log_at_least(from_triple(lo), nu), from_triple(*at_least));
      EXPECT_EQ(least_with_log_equal(from_triple(lo), nu), from_triple(*equal));
    }
}

TEST(OrdinalLeastWithLog, BeyondTheGrid) {
  EXPECT_EQ(least_with_log_at_least(5, w), O("w^w"));
  EXPECT_EQ(least_with_log_at_least(O("w^w + 1"), w), O("w^w*2"));
  EXPECT_EQ(least_with_log_equal(O("w^w + 1"), 1), O("w^w + w"));
  EXPECT_EQ(least_with_log_at_least(O("w^(w+1)"), w), O("w^(w+1)"));
}

}  // namespace
}  // namespace plog
