#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace novikov;
using test_support::P;
using test_support::ring;

namespace {

RingPtr qi(const std::string& gen, const std::string& minpoly) {
  return coefficient_ring({}, {{gen, parse_upoly(minpoly, gen)}});
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).denominator(), 2);
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(Rational::parse("12").str(), "12");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(-2, 3), Rational(-1, 3));
  EXPECT_EQ(Rational(-2, 9) + Rational(1), Rational(7, 9));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
}

TEST(Rational, Errors) {
  try {
    (void)(Rational(1) / Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::division_by_zero);
  }
  EXPECT_THROW(Rational::parse("0.5"), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
}

TEST(Poly, DifferenceOfSquares) {
  auto R = ring({"x"});
  EXPECT_EQ(P(R, "x + 1") * P(R, "x - 1"), P(R, "x^2 - 1"));
}

TEST(Poly, ExpandSquare) {
  auto R = ring({"alpha"});
  Polynomial p = P(R, "2 alpha + 1");
  // distributivity oracle: sum over term pairs
  Polynomial expect(R);
  for (const auto& a : p.terms())
    for (const auto& b : p.terms()) expect += Polynomial::monomial(R, a.mono * b.mono, a.coef * b.coef);
  EXPECT_EQ(p * p, expect);
  EXPECT_EQ((p * p).str(), "4 alpha^2 + 4 alpha + 1");
}

TEST(Poly, ParsePrintRoundTrip) {
  auto R = ring({"x", "y", "z"});
  for (const char* s : {"x^2 y - 1/2 z + 3", "-x + y", "0", "1/3", "x y z"}) {
    Polynomial p = P(R, s);
    EXPECT_EQ(P(R, p.str()), p) << s;
  }
  EXPECT_EQ(P(R, "(1/2) x").str(), "1/2 x");
  EXPECT_EQ(P(R, "(x + y)^2").str(), "x^2 + 2 x y + y^2");
}

TEST(Poly, ParseErrors) {
  auto R = ring({"x"});
  auto code = [&](const char* s) {
    try {
      parse_polynomial(s, R);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::precondition;
  };
  EXPECT_EQ(code("x +"), Errc::parse_error);
  EXPECT_EQ(code("y"), Errc::unknown_variable);
  EXPECT_EQ(code("x ^"), Errc::parse_error);
}

TEST(Poly, RingMismatch) {
  auto R = ring({"x"}), S = ring({"y"});
  try {
    (void)(P(R, "x") + P(S, "y"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ring_mismatch);
  }
}

TEST(MonomialOrder, LexIgnoresDegree) {
  auto R = ring({"D", "alpha"}, OrderStyle::lex);
  EXPECT_TRUE(R->order().greater(P(R, "D").leading_monomial(), P(R, "alpha^5").leading_monomial()));
}

TEST(MonomialOrder, LeadingTermOfExampleGenerator) {
  auto R = ring({"D", "x11", "x12", "x21", "x22", "alpha", "beta"}, OrderStyle::lex);
  Polynomial g = P(R, "1/2 D x12 x22 - 1/2 + D x12 x22 alpha");
  EXPECT_EQ(Polynomial::monomial(R, g.leading_monomial(), Rational(1)), P(R, "D x12 x22 alpha"));
  EXPECT_EQ(g.str(), "D x12 x22 alpha + 1/2 D x12 x22 - 1/2");
}

TEST(MonomialOrder, TextbookComparisons) {
  // x > y > z: x y^5 z^2 vs x^4 y z^3
  auto L = ring({"x", "y", "z"}, OrderStyle::lex);
  auto G = ring({"x", "y", "z"}, OrderStyle::grevlex);
  Monomial a{1, 5, 2}, b{4, 1, 3};
  EXPECT_TRUE(L->order().greater(b, a));
  EXPECT_TRUE(G->order().greater(a, b));
  EXPECT_EQ(G->order().compare(a, a), std::strong_ordering::equal);
}

TEST(MonomialOrder, BlockElimination) {
  MonomialOrder o = MonomialOrder::identity(OrderStyle::block_elimination, 3, 1);
  // first block {x} decides, then grevlex on {y, z}
  EXPECT_TRUE(o.greater(Monomial{1, 0, 0}, Monomial{0, 5, 5}));
  EXPECT_TRUE(o.greater(Monomial{0, 2, 0}, Monomial{0, 1, 0}));
}

TEST(MonomialOrder, ArityMismatch) {
  MonomialOrder o = MonomialOrder::identity(OrderStyle::lex, 2);
  EXPECT_THROW(o.compare(Monomial{1, 0}, Monomial{1, 0, 0}), Error);
}

TEST(MonomialOrder, TotalOrderProperties) {
  auto g = test_support::rng(11);
  std::uniform_int_distribution<unsigned> e(0, 3);
  for (auto style : {OrderStyle::lex, OrderStyle::grevlex}) {
    MonomialOrder o = MonomialOrder::identity(style, 3);
    for (int t = 0; t < 300; ++t) {
      Monomial a{e(g), e(g), e(g)}, b{e(g), e(g), e(g)}, c{e(g), e(g), e(g)};
      auto ab = o.compare(a, b), ba = o.compare(b, a);
      EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
      EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
      if (o.greater(a, b) && o.greater(b, c)) {
        EXPECT_TRUE(o.greater(a, c));
      }
      // multiplicative
      if (o.greater(a, b)) {
        EXPECT_TRUE(o.greater(a * c, b * c));
      }
    }
  }
  MonomialOrder lex = MonomialOrder::identity(OrderStyle::lex, 1), grev = MonomialOrder::identity(OrderStyle::grevlex, 1);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) EXPECT_EQ(lex.compare(Monomial{i}, Monomial{j}), grev.compare(Monomial{i}, Monomial{j}));
}

TEST(Poly, Substitute) {
  auto R = ring({"alpha", "beta"});
  Polynomial f = P(R, "alpha^2 + alpha + beta");
  EXPECT_EQ(f.substitute({{"alpha", Rational(-1, 2)}}), P(R, "beta - 1/4"));
  EXPECT_TRUE(f.substitute({{"alpha", Rational(0)}, {"beta", Rational(0)}}).is_zero());
  auto A = ring({"a"});
  EXPECT_EQ(P(A, "a + 1").substitute({{"a", Rational(-2, 9)}}).constant_value(), Rational(7, 9));
  EXPECT_THROW(f.substitute({{"gamma", Rational(1)}}), Error);
}

TEST(Poly, SubstitutePolynomials) {
  auto R = ring({"a", "b"});
  Polynomial f = P(R, "a^2 - b");
  EXPECT_EQ(f.substitute({{"a", P(R, "b + 1")}}), P(R, "b^2 + b + 1"));
}

TEST(Extension, ImaginaryUnit) {
  auto R = qi("i", "i^2 + 1");
  Polynomial i = Polynomial::variable(R, "i");
  EXPECT_EQ(i * i, P(R, "-1"));
  EXPECT_EQ(P(R, "1 + i") * P(R, "1 - i"), P(R, "2"));
}

TEST(Extension, SqrtMinusTwo) {
  auto R = qi("t", "t^2 + 2");
  Polynomial t = Polynomial::variable(R, "t");
  EXPECT_TRUE((t * t + P(R, "2")).is_zero());
  EXPECT_EQ(t.pow(3), P(R, "-2 t"));
  // (-2 - t)/9 squared
  Polynomial c = P(R, "-2/9 - 1/9 t");
  EXPECT_EQ(c * c, P(R, "2/81 + 4/81 t"));
}

TEST(Extension, InverseByEuclid) {
  auto R = qi("t", "t^2 + 2");
  Polynomial x = P(R, "1/2 - t");
  EXPECT_EQ(x * field_inverse(x), P(R, "1"));
}

TEST(Extension, DegreeBelowMinimalPolynomial) {
  auto R = qi("i", "i^2 + 1");
  auto g = test_support::rng(12);
  for (int t = 0; t < 200; ++t) {
    Polynomial a = test_support::random_poly(R, g, 3, 6), b = test_support::random_poly(R, g, 3, 6);
    EXPECT_LT((a * b).degree_in(0), 2u);
  }
}

TEST(Extension, RejectsReducibleMinimalPolynomial) {
  EXPECT_THROW(coefficient_ring({}, {{"t", parse_upoly("t^2 - 4", "t")}}), Error);
  EXPECT_THROW(coefficient_ring({}, {{"t", parse_upoly("t + 1", "t")}}), Error);
}

TEST(Poly, CanonicalIdempotence) {
  auto R = ring({"x", "y", "z"});
  auto g = test_support::rng(13);
  for (int t = 0; t < 200; ++t) {
    Polynomial p = test_support::random_poly(R, g);
    EXPECT_TRUE(p.is_canonical());
    EXPECT_EQ(p.normalized(), p);
  }
}

TEST(Poly, RingLawsRandomTriples) {
  auto R = ring({"v1", "v2", "v3", "v4", "v5"});
  auto g = test_support::rng(14);
  Polynomial zero(R);
  for (int t = 0; t < 1000; ++t) {
    Polynomial a = test_support::random_poly(R, g), b = test_support::random_poly(R, g),
               c = test_support::random_poly(R, g);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, zero);
    ASSERT_TRUE((a * b * c).is_canonical());
  }
}

TEST(UPoly, DivisionIdentity) {
  auto g = test_support::rng(15);
  std::uniform_int_distribution<int> d(-4, 4), deg(0, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> ac, bc;
    for (int k = deg(g); k >= 0; --k) ac.push_back(Rational(d(g)));
    for (int k = deg(g); k >= 0; --k) bc.push_back(Rational(d(g)));
    UPoly a(ac), b(bc);
    if (b.is_zero()) continue;
    auto [q, r] = UPoly::divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(UPoly, RationalRoots) {
  UPoly p = parse_upoly("6 x^3 - 7 x^2 + 1", "x");  // (x - 1)(2x - 1)(3x + 1)
  auto roots = rational_roots(p);
  std::sort(roots.begin(), roots.end());
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], Rational(-1, 3));
  EXPECT_EQ(roots[1], Rational(1, 2));
  EXPECT_EQ(roots[2], Rational(1));
}

TEST(Sturm, KnownCounts) {
  EXPECT_EQ(count_real_roots(parse_upoly("x^2 - 2", "x")), 2);
  EXPECT_EQ(count_real_roots(parse_upoly("x^2 + 1", "x")), 0);
  EXPECT_EQ(count_real_roots(parse_upoly("x^2 + 2 x + 3/2", "x")), 0);
  EXPECT_EQ(count_real_roots(parse_upoly("(x - 1)^2 (x + 2)", "x")), 2);
  EXPECT_EQ(count_real_roots(parse_upoly("x^5 - x", "x")), 3);
}


TEST(Sturm, AgreesWithBisectionOracle) {
  auto g = test_support::rng(16);
  std::uniform_int_distribution<int> d(-3, 3), nf(1, 4), kind(0, 2);
  for (int t = 0; t < 100; ++t) {
    UPoly p = UPoly::constant(Rational(d(g) == 0 ? 1 : 2));
    for (int f = nf(g); f > 0; --f) {
      // linear, quadratic or random cubic factors; repeated roots allowed
      int k = kind(g);
      std::vector<Rational> c;
      for (int j = 0; j <= k + 1; ++j) c.push_back(Rational(d(g), 1 + (j % 2)));
      if (c.back().is_zero()) c.back() = Rational(1);
      p = p * UPoly(c);
    }
    EXPECT_EQ(count_real_roots(p), test_support::bisection_count(p)) << p.str();
  }
}
