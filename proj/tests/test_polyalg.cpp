#include <gtest/gtest.h>

#include <random>

#include "flagdeg/polyalg.hpp"

using namespace flagdeg;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }
RingPtr sl3_ring() { return make_ring({"x21", "x31", "x32"}); }

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

Ideal sl3_ideal() { return Ideal::parse(sl3_ring(), {"x21*x31", "x21*x32 - 2*x31", "x31*x32"}); }

// Every S-polynomial of basis elements reduces to zero.
bool s_pairs_reduce(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      if (!normal_form(s_polynomial(gb.basis[i], gb.basis[j]), gb.basis).is_zero()) return false;
  return true;
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-3, 3);
  Polynomial p(r);
  for (int k = 0; k < terms; ++k) {
    Monomial m(r->size());
    for (auto& x : m) x = e(rng);
    p = p + Polynomial::monomial(r, m, Rational(c(rng)));
  }
  return p;
}

}  // namespace

TEST(Polynomial, ParseAndPrint) {
  const auto r = sl3_ring();
  EXPECT_EQ(P(r, "x21*x32 - 2*x31").str(), "x21*x32 - 2*x31");
  EXPECT_EQ(P(r, "(x21 + 1)^2").str(), "x21^2 + 2*x21 + 1");
  EXPECT_EQ(P(r, "3/2*x31 - 1/2").str(), "3/2*x31 - 1/2");
  EXPECT_EQ(P(r, "-x31 + x31").str(), "0");
  EXPECT_EQ(P(r, "2*x31*x21 - x21*x31*2"), Polynomial(r));
  EXPECT_THROW(P(r, "x99"), InvalidInput);
  EXPECT_THROW(P(r, "x21 +"), InvalidInput);
  EXPECT_THROW(P(r, "1/0"), InvalidInput);
  EXPECT_THROW(P(r, "x21 x31"), InvalidInput);
}

TEST(Polynomial, Orders) {
  // Later variables are larger: x < y.
  const auto g = make_ring({"x", "y"});
  EXPECT_GT(g->compare({0, 1}, {1, 0}), 0);
  EXPECT_GT(g->compare({2, 0}, {0, 1}), 0);  // degree first
  const auto l = make_ring({"x", "y"}, MonomialOrder::lex());
  EXPECT_LT(l->compare({2, 0}, {0, 1}), 0);
  const auto b = make_ring({"x", "y", "t"}, MonomialOrder::eliminate_last(1));
  EXPECT_GT(b->compare({0, 0, 1}, {5, 5, 0}), 0);
  // Grevlex: x*y^2 ... compare x^2*y vs x*y^2 in three variables x<y<z.
  const auto r3 = make_ring({"x", "y", "z"});
  EXPECT_GT(r3->compare({1, 1, 0}, {2, 0, 0}), 0);
  EXPECT_GT(r3->compare({2, 0, 0}, {0, 0, 1}), 0);
  EXPECT_THROW(make_ring({"x", "x"}), InvalidInput);
}

TEST(Polynomial, ArithmeticProperties) {
  const auto r = make_ring({"a", "b", "c"});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_poly(r, rng, 4, 2), g = random_poly(r, rng, 3, 2), h = random_poly(r, rng, 3, 1);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f - f).str(), "0");
    EXPECT_EQ(parse_polynomial(r, f.str()), f);
  }
  EXPECT_THROW(Polynomial::variable(r, "a") + Polynomial::variable(xy(), "x"), InvalidInput);
}

TEST(Groebner, Membership) {
  const auto r = xy();
  EXPECT_TRUE(membership(P(r, "x"), Ideal::parse(r, {"x"})));
  EXPECT_TRUE(membership(P(r, "x*y + x^3"), Ideal::parse(r, {"x"})));
  EXPECT_FALSE(membership(P(r, "y"), Ideal::parse(r, {"x"})));
  const Ideal I = sl3_ideal();
  EXPECT_TRUE(membership(P(I.ring, "x31^2"), I));
  EXPECT_FALSE(membership(P(I.ring, "x31"), I));
  EXPECT_TRUE(buchberger(Ideal::parse(r, {"x", "1 + x"})).is_unit());
  EXPECT_TRUE(buchberger(Ideal{r, {}}).basis.empty());
}

TEST(Groebner, KnownBases) {
  // Twisted cubic, lex with x > y > z declared as z, y, x. Monomials print
  // in declaration order.
  const auto r = make_ring({"z", "y", "x"}, MonomialOrder::lex());
  const auto gb = buchberger(Ideal::parse(r, {"x^2 - y", "x^3 - z"}));
  std::vector<std::string> got;
  for (const auto& g : gb.basis) got.push_back(g.str());
  EXPECT_EQ(got, (std::vector<std::string>{"x^2 - y", "y*x - z", "z*x - y^2", "y^3 - z^2"}));
}

TEST(Groebner, SPolynomialsReduceAndNormalFormIsIdempotent) {
  const auto r = make_ring({"a", "b", "c"});
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    Ideal I{r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)}};
    const auto gb = buchberger(I, Deadline::after(30));
    EXPECT_TRUE(s_pairs_reduce(gb));
    for (const auto& g : I.generators) EXPECT_TRUE(gb.contains(g));
    const auto f = random_poly(r, rng, 5, 3);
    const auto nf = normal_form(f, gb.basis);
    EXPECT_EQ(normal_form(nf, gb.basis), nf);
    EXPECT_TRUE(gb.contains(f - nf));
    // Determinism.
    EXPECT_EQ(buchberger(I).str(), gb.str());
  }
}

TEST(Groebner, RadicalMembership) {
  const auto r = xy();
  EXPECT_TRUE(radical_membership(P(r, "x"), Ideal::parse(r, {"x^2"})));
  EXPECT_FALSE(radical_membership(P(r, "1 + x"), Ideal::parse(r, {"x^2"})));
  EXPECT_FALSE(radical_membership(P(r, "y"), Ideal::parse(r, {"x^2"})));
  const Ideal I = sl3_ideal();
  EXPECT_TRUE(radical_membership(P(I.ring, "x31"), I));
  EXPECT_FALSE(radical_membership(P(I.ring, "x21"), I));
}

TEST(Groebner, IntersectionAndEquality) {
  const auto r = xy();
  const Ideal x = Ideal::parse(r, {"x"}), y = Ideal::parse(r, {"y"});
  EXPECT_TRUE(ideal_equal(intersect(x, y), Ideal::parse(r, {"x*y"})));
  const Ideal I = Ideal::parse(r, {"x^2", "x*y"});
  EXPECT_TRUE(ideal_equal(intersect(I, I), I));
  EXPECT_TRUE(ideal_equal(I, Ideal::parse(r, {"x*y", "x^2 + x*y"})));
  EXPECT_FALSE(ideal_equal(I, x));
  // Equivalence on a small corpus.
  const std::vector<Ideal> corpus{x, y, I, Ideal::parse(r, {"x", "x*y"}), Ideal::parse(r, {"x^2", "x*y", "x^3"})};
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      EXPECT_EQ(ideal_equal(a, b), ideal_equal(b, a));
      for (const auto& c : corpus)
        if (ideal_equal(a, b) && ideal_equal(b, c)) {
          EXPECT_TRUE(ideal_equal(a, c));
        }
    }

  const Ideal sl3 = sl3_ideal();
  const Ideal meet = intersect(std::vector<Ideal>{Ideal::parse(sl3.ring, {"x32", "x31"}),
                                                  Ideal::parse(sl3.ring, {"x31", "x21"}),
                                                  Ideal::parse(sl3.ring, {"x32^2", "x31*x32", "x21*x32 - 2*x31", "x21*x31", "x21^2"})});
  EXPECT_TRUE(ideal_equal(meet, sl3));
}

TEST(Groebner, DeadlineThrows) {
  const auto r = make_ring({"a", "b", "c", "d"});
  const Ideal I = Ideal::parse(r, {"a^3 - b*c*d + 1", "b^3 - a*c + d", "c^3 - a*b*d - 2", "d^3 + a*b - c"});
  EXPECT_THROW(buchberger(I, Deadline::after(1e-9)), Timeout);
}
