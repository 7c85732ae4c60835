#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "flagdeg/gcr.hpp"

using namespace flagdeg;

namespace {

Root R(std::initializer_list<int> c) { return Root{Coords(c)}; }

std::shared_ptr<const BruhatOrder> order_of(const char* t) {
  return std::make_shared<const BruhatOrder>(std::make_shared<const EnumeratedGroup>(WeylGroup(t)));
}

// Independent cond3 oracle: nullity over Q by rank of the rational matrix.
int nullity_oracle(const IntMatrix& m) {
  std::vector<RationalVector> rows(m.size(), RationalVector(m.size()));
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) rows[r][c] = m(r, c);
  return m.size() - rank(rows);
}

using OneLinePair = std::pair<std::string, std::string>;

// The eleven d = 2 pairs of S4, grouped by their orthogonal root pair.
const std::map<OneLinePair, std::set<Root>> kS4Tables = {
    {{"1234", "2143"}, {R({1, 0, 0}), R({0, 0, 1})}}, {{"1324", "2413"}, {R({1, 0, 0}), R({0, 0, 1})}},
    {{"1342", "2431"}, {R({1, 0, 0}), R({0, 0, 1})}}, {{"3124", "4213"}, {R({1, 0, 0}), R({0, 0, 1})}},
    {{"3142", "4231"}, {R({1, 0, 0}), R({0, 0, 1})}}, {{"3412", "4321"}, {R({1, 0, 0}), R({0, 0, 1})}},
    {{"1324", "3142"}, {R({1, 1, 0}), R({0, 1, 1})}}, {{"2413", "4231"}, {R({1, 1, 0}), R({0, 1, 1})}},
    {{"1423", "4132"}, {R({0, 1, 0}), R({1, 1, 1})}}, {{"2143", "3412"}, {R({0, 1, 0}), R({1, 1, 1})}},
    {{"2314", "3241"}, {R({0, 1, 0}), R({1, 1, 1})}},
};

}  // namespace

TEST(GcrConditions, Examples) {
  const WeylGroup a3("A3");
  const auto e = a3.from_one_line("1234"), w = a3.from_one_line("2143");
  EXPECT_TRUE(is_gcr_cond3(a3, w, w));
  EXPECT_TRUE(is_gcr_cond4(a3, w, w));
  EXPECT_TRUE(is_gcr_cond3(a3, e, w));
  const auto p = is_gcr_cond6(a3, e, w, Word{{1, 3}});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->positions, (std::vector<int>{1, 2}));
  EXPECT_EQ(p->witness_roots, (std::vector<Root>{R({1, 0, 0}), R({0, 0, 1})}));
  const auto diag = is_gcr_cond6(a3, w, w);
  ASSERT_TRUE(diag);
  EXPECT_TRUE(diag->positions.empty());

  const WeylGroup a2("A2");
  EXPECT_FALSE(is_gcr_cond3(a2, a2.identity(), a2.longest_element()));
  EXPECT_THROW(is_gcr_cond3(a2, a2.simple_reflection(1), a2.simple_reflection(2)), InvalidInput);
}

TEST(GcrConditions, CoveringPairsSatisfyCond4) {
  for (const char* t : {"A3", "B3", "G2"}) {
    auto o = order_of(t);
    const auto& G = o->group();
    for (const auto& [v, w] : o->covering_pairs()) EXPECT_TRUE(is_gcr_cond4(G.group(), G.element(v), G.element(w)));
  }
}

TEST(GcrConditions, CoxeterElementIsNotGcr) {
  // beta_1..beta_3 of (1,2,3) form a lattice basis but are not orthogonal.
  const WeylGroup a3("A3");
  const auto w = a3.from_word(Word{{1, 2, 3}});
  EXPECT_FALSE(is_gcr_cond3(a3, a3.identity(), w));
  const auto betas = a3.roots_of_word(Word{{1, 2, 3}});
  IntMatrix b(3);
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) b(r, c) = betas[c].coords[r];
  EXPECT_EQ(kernel_dim(b), 0);
  long det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) - b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
             b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
  EXPECT_EQ(std::abs(det), 1);
}

TEST(GcrEnumerate, S3) {
  const auto poset = enumerate_gcr(order_of("A2"));
  EXPECT_EQ(poset.size(), 14u);
  EXPECT_EQ(poset.count_by_d(), (std::vector<std::size_t>{6, 8}));
  const auto maxes = maximal_pairs(poset);
  EXPECT_EQ(maxes.size(), 8u);
  for (const auto& p : maxes) EXPECT_EQ(p.d, 1);
}

TEST(GcrEnumerate, S4MatchesTables) {
  const auto poset = enumerate_gcr(order_of("A3"));
  const WeylGroup& g = poset.order().group().group();
  std::map<OneLinePair, std::set<Root>> d2;
  for (const auto& p : poset.pairs()) {
    EXPECT_LE(p.d, 2);
    if (p.d == 2) d2[{g.one_line(p.v), g.one_line(p.w)}] = {p.witness_roots.begin(), p.witness_roots.end()};
  }
  EXPECT_EQ(d2, kS4Tables);
  const auto maxes = maximal_pairs(poset);
  std::map<int, int> by_d;
  for (const auto& p : maxes) ++by_d[p.d];
  EXPECT_EQ(by_d[1], 14);
  EXPECT_EQ(by_d[2], 11);
  EXPECT_EQ(maxes.size(), 25u);
}

TEST(GcrEnumerate, S4ComponentsMeetInAtMostAPoint) {
  auto o = order_of("A3");
  const auto poset = enumerate_gcr(o);
  const auto maxes = maximal_pairs(poset);
  const auto& G = o->group();
  for (std::size_t a = 0; a < maxes.size(); ++a)
    for (std::size_t b = a + 1; b < maxes.size(); ++b)
      for (const auto& [x, y] : shared_strata(G.group(), G, maxes[a], maxes[b])) EXPECT_EQ(x, y);
}

TEST(GcrEnumerate, DeterministicAcrossWorkerCounts) {
  auto o = order_of("B3");
  const auto one = enumerate_gcr(o, 1), four = enumerate_gcr(o, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    EXPECT_EQ(one.pairs()[k].v_id, four.pairs()[k].v_id);
    EXPECT_EQ(one.pairs()[k].w_id, four.pairs()[k].w_id);
    EXPECT_EQ(one.pairs()[k].positions, four.pairs()[k].positions);
  }
}

TEST(GcrSubPairs, Examples) {
  const WeylGroup a3("A3");
  const auto p = is_gcr_cond6(a3, a3.from_one_line("1234"), a3.from_one_line("2143"));
  ASSERT_TRUE(p);
  std::set<std::string> wk;
  for (std::uint32_t k = 0; k < 4; ++k) wk.insert(a3.one_line(w_of_subset(a3, *p, k)));
  EXPECT_EQ(wk, (std::set<std::string>{"2143", "1243", "2134", "1234"}));
  EXPECT_EQ(w_of_subset(a3, *p, 0), p->w);
  EXPECT_EQ(w_of_subset(a3, *p, 3), p->v);
  EXPECT_EQ(sub_pairs(a3, *p).size(), 9u);
}

TEST(GcrProperties, SweepEquivalenceAndStructure) {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA2"}) {
    auto o = order_of(t);
    const auto& G = o->group();
    const WeylGroup& g = G.group();
    const int bound = g.reflection_length(g.longest_element());
    const auto poset = enumerate_gcr(o);
    std::size_t count = 0;
    for (int w = 0; w < G.size(); ++w)
      for (int v = 0; v < G.size(); ++v) {
        if (!o->leq(v, w)) continue;
        const auto& ve = G.element(v);
        const auto& we = G.element(w);
        const int d = we.length() - ve.length();
        const bool c3 = nullity_oracle(quotient_matrix(g, ve, we) + IntMatrix::identity(g.rank())) == d;
        ASSERT_EQ(is_gcr_cond3(g, ve, we), c3);
        ASSERT_EQ(is_gcr_cond4(g, ve, we), c3) << t;
        ASSERT_EQ(is_gcr_cond6(g, ve, we).has_value(), c3) << t;
        ASSERT_EQ(poset.contains(v, w), c3);
        if (c3) {
          ++count;
          EXPECT_LE(d, bound);
        }
      }
    EXPECT_EQ(count, poset.size());
    for (int x = 0; x < G.size(); ++x) EXPECT_TRUE(poset.contains(x, x));
    for (const auto& [v, w] : o->covering_pairs()) EXPECT_TRUE(poset.contains(v, w));
  }
}

TEST(GcrProperties, WitnessesAreOrthogonalAndMultiplyOut) {
  for (const char* t : {"A3", "B3", "C3", "G2"}) {
    auto o = order_of(t);
    const auto& G = o->group();
    const WeylGroup& g = G.group();
    const RootSystem& rs = g.root_system();
    const auto poset = enumerate_gcr(o);
    for (const auto& p : poset.pairs()) {
      ASSERT_EQ(static_cast<int>(p.witness_roots.size()), p.d);
      IntMatrix prod = IntMatrix::identity(g.rank());
      for (int a = 0; a < p.d; ++a) {
        prod = prod * g.reflection(p.witness_roots[a]).matrix();
        for (int b = a + 1; b < p.d; ++b) EXPECT_TRUE(rs.orthogonal(p.witness_roots[a], p.witness_roots[b]));
      }
      EXPECT_EQ(prod * p.w.matrix(), p.v.matrix());
      EXPECT_EQ(kernel_dim(prod + IntMatrix::identity(g.rank())), p.d);
      EXPECT_EQ(p.host, g.reduced_word(p.w));
    }
  }
}

TEST(GcrProperties, NonOrthogonalTuplesLoseNullity) {
  std::mt19937 rng(11);
  for (const char* t : {"A3", "B3", "D4"}) {
    const WeylGroup g(t);
    const RootSystem& rs = g.root_system();
    std::uniform_int_distribution<int> pick(0, rs.num_positive_roots() - 1);
    for (int d = 2; d <= 3; ++d) {
      int tested = 0;
      while (tested < 30) {
        std::vector<Root> roots;
        for (int k = 0; k < d; ++k) roots.push_back(rs.positive_root(pick(rng)));
        bool orth = true;
        for (int a = 0; a < d; ++a)
          for (int b = a + 1; b < d; ++b) orth = orth && rs.orthogonal(roots[a], roots[b]);
        if (orth) continue;
        IntMatrix prod = IntMatrix::identity(g.rank());
        for (const auto& r : roots) prod = prod * g.reflection(r).matrix();
        EXPECT_LT(kernel_dim(prod + IntMatrix::identity(g.rank())), d) << t;
        ++tested;
      }
    }
  }
}

TEST(GcrProperties, WitnessExistsForEveryReducedWord) {
  auto o = order_of("A3");
  const auto& g = o->group().group();
  const auto poset = enumerate_gcr(o);
  for (const auto& p : poset.pairs())
    for (const auto& word : all_reduced_words(g, p.w)) EXPECT_TRUE(is_gcr_cond6(g, p.v, p.w, word));
}

TEST(GcrProperties, DownwardClosedAndPowersetIntervals) {
  for (const char* t : {"A3", "B3", "G2"}) {
    auto o = order_of(t);
    const auto& G = o->group();
    const auto poset = enumerate_gcr(o);
    for (const auto& p : poset.pairs()) {
      EXPECT_TRUE(verify_powerset_interval(*o, p)) << t;
      for (int v2 = 0; v2 < G.size(); ++v2) {
        if (!o->leq(p.v_id, v2) || !o->leq(v2, p.w_id)) continue;
        for (int w2 = 0; w2 < G.size(); ++w2)
          if (o->leq(v2, w2) && o->leq(w2, p.w_id)) {
            EXPECT_TRUE(poset.contains(v2, w2));
          }
      }
      // The pairs below p are exactly the (v_J, w_K).
      std::set<std::pair<int, int>> sub;
      for (const auto& sp : sub_pairs(G.group(), p)) sub.emplace(G.id_of(sp.vJ), G.id_of(sp.wK));
      std::set<std::pair<int, int>> below;
      for (const auto& q : poset.pairs())
        if (poset.leq(q, p)) below.emplace(q.v_id, q.w_id);
      EXPECT_EQ(sub, below);
    }
  }
}
