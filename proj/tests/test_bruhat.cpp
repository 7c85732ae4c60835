#include <gtest/gtest.h>

#include <map>
#include <set>

#include "flagdeg/bruhat.hpp"

using namespace flagdeg;

namespace {

std::shared_ptr<const BruhatOrder> order_of(const char* t) {
  return std::make_shared<const BruhatOrder>(std::make_shared<const EnumeratedGroup>(WeylGroup(t)));
}

// Subword criterion, brute force over all 2^l subsets of a reduced word.
std::set<IntMatrix> subword_values(const WeylGroup& g, const Word& w) {
  std::set<IntMatrix> out;
  const std::size_t l = w.size();
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < l; ++k)
      if (mask >> k & 1u) sub.letters.push_back(w[k]);
    out.insert(g.from_word(sub).matrix());
  }
  return out;
}

}  // namespace

TEST(Bruhat, Examples) {
  const WeylGroup a2("A2");
  const auto s1 = a2.simple_reflection(1), s2 = a2.simple_reflection(2);
  EXPECT_TRUE(bruhat_leq(a2, a2.identity(), a2.longest_element()));
  EXPECT_TRUE(bruhat_leq(a2, s1, a2.multiply(s1, s2)));
  EXPECT_TRUE(bruhat_leq(a2, s1, a2.multiply(s2, s1)));
  EXPECT_FALSE(bruhat_leq(a2, s1, s2));
  const WeylGroup a3("A3");
  EXPECT_TRUE(bruhat_leq(a3, a3.from_one_line("1234"), a3.from_one_line("2143")));
}

TEST(Bruhat, CoversAndGraph) {
  auto o = order_of("A2");
  EXPECT_EQ(o->covering_pairs().size(), 8u);
  EXPECT_FALSE(o->covers(3, 3));
  const std::string dot = export_bruhat_graph(*o, {});
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 4 + 6 + 8);
  EXPECT_EQ(dot.find("highlight"), std::string::npos);

  auto o4 = order_of("A3");
  const auto& G = o4->group();
  const WeylGroup& g = G.group();
  EXPECT_TRUE(o4->covers(G.id_of(g.from_one_line("1234")), G.id_of(g.from_one_line("2134"))));
  const std::string dot4 = export_bruhat_graph(*o4, {{0, G.id_of(g.from_one_line("2134"))}});
  EXPECT_NE(dot4.find("label=\"4321\""), std::string::npos);
  EXPECT_EQ(std::count(dot4.begin(), dot4.end(), '\n'), 4 + 24 + static_cast<long>(o4->covering_pairs().size()));
  std::size_t flagged = 0;
  for (std::size_t p = dot4.find("highlight=true"); p != std::string::npos; p = dot4.find("highlight=true", p + 1))
    ++flagged;
  EXPECT_EQ(flagged, 1u);
  EXPECT_EQ(dot4, export_bruhat_graph(*o4, {{0, G.id_of(g.from_one_line("2134"))}}));
}

TEST(Bruhat, Intervals) {
  auto o = order_of("A2");
  EXPECT_EQ(o->interval(2, 2).elements, std::vector<int>{2});
  EXPECT_EQ(o->interval(0, 5).elements.size(), 6u);
  EXPECT_EQ(o->interval(0, 5).edges.size(), 8u);
  EXPECT_THROW(o->interval(1, 2), InvalidInput);
  auto o4 = order_of("A3");
  const WeylGroup& g = o4->group().group();
  const auto iv = o4->interval(o4->group().id_of(g.from_one_line("1234")), o4->group().id_of(g.from_one_line("2143")));
  EXPECT_EQ(iv.elements.size(), 4u);
}

TEST(Subwords, Examples) {
  const WeylGroup a2("A2");
  const Word w{{1, 2, 1}};
  const auto s1 = a2.simple_reflection(1);
  const auto two = subwords_with_value(a2, w, s1, true);
  EXPECT_EQ(two, (std::vector<SubwordPositions>{{{1, 2}}, {{2, 3}}}));
  EXPECT_EQ(subwords_with_value(a2, w, a2.longest_element(), true), std::vector<SubwordPositions>{{}});
  for (const auto& p : two) EXPECT_EQ(removal_product(a2, w, p), s1);
  // (1, -, 1) has value e but is not reduced.
  const auto reduced_e = subwords_with_value(a2, w, a2.identity(), true);
  const auto all_e = subwords_with_value(a2, w, a2.identity(), false);
  EXPECT_EQ(reduced_e, (std::vector<SubwordPositions>{{{1, 2, 3}}}));
  EXPECT_EQ(all_e, (std::vector<SubwordPositions>{{{1, 2, 3}}, {{2}}}));
  EXPECT_THROW(subwords_with_value(a2, Word{{1, 1}}, s1, true), InvalidInput);
  EXPECT_TRUE(subwords_with_value(a2, Word{{1}}, a2.simple_reflection(2), false).empty());
}

TEST(BruhatProperties, DescentRecursionMatchesSubwordCriterion) {
  for (const char* t : {"A2", "A3", "B2", "B3", "G2"}) {
    auto o = order_of(t);
    const EnumeratedGroup& G = o->group();
    const WeylGroup& g = G.group();
    for (int w = 0; w < G.size(); ++w) {
      const auto vals = subword_values(g, g.reduced_word(G.element(w)));
      for (int v = 0; v < G.size(); ++v) {
        const bool expected = vals.count(G.element(v).matrix()) > 0;
        ASSERT_EQ(o->leq(v, w), expected) << t << " " << v << " " << w;
        ASSERT_EQ(bruhat_leq(g, G.element(v), G.element(w)), expected);
        if (expected) {
          EXPECT_LE(G.length(v), G.length(w));
          if (G.length(v) == G.length(w)) {
            EXPECT_EQ(v, w);
          }
        }
      }
    }
  }
}

TEST(BruhatProperties, OrderIsReachabilityThroughCovers) {
  for (const char* t : {"A3", "B3"}) {
    auto o = order_of(t);
    const EnumeratedGroup& G = o->group();
    std::vector<std::vector<int>> up(G.size());
    for (const auto& [a, b] : o->covering_pairs()) up[a].push_back(b);
    for (int v = 0; v < G.size(); ++v) {
      std::vector<char> seen(G.size(), 0);
      std::vector<int> stack{v};
      seen[v] = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : up[x])
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
      for (int w = 0; w < G.size(); ++w) ASSERT_EQ(o->leq(v, w), seen[w] != 0);
    }
  }
}

TEST(BruhatProperties, SubwordsSatisfyRemovalProductIdentity) {
  for (const char* t : {"A3", "B3"}) {
    auto o = order_of(t);
    const EnumeratedGroup& G = o->group();
    const WeylGroup& g = G.group();
    for (int w = 0; w < G.size(); w += 3) {
      const Word rw = g.reduced_word(G.element(w));
      for (int v = 0; v < G.size(); ++v) {
        const auto subs = subwords_with_value(g, rw, G.element(v), true);
        EXPECT_EQ(!subs.empty(), o->leq(v, w));
        for (const auto& p : subs) {
          EXPECT_EQ(static_cast<int>(p.size()), G.length(w) - G.length(v));
          EXPECT_EQ(subword_value(g, rw, p), G.element(v));
          EXPECT_EQ(removal_product(g, rw, p), G.element(v));
        }
      }
    }
  }
}
