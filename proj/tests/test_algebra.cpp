#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "support.hpp"

using namespace novikov;

namespace {

StructureConstants entry(const std::string& id) { return catalog_entry(id).table; }

StructureConstants zero_algebra(std::size_t n) { return StructureConstants(n, coefficient_ring({})); }

StructureConstants table(std::size_t n, const std::string& products, const std::string& field = "C") {
  return parse_algebra("field " + field + "\ndim " + std::to_string(n) + "\n" + products);
}

Vec e(const StructureConstants& A, std::size_t i) { return basis_vec(A.ring(), A.dim(), i); }

// Brute force: the axioms on raw rational arrays, written without the library's multiply.
using Cube = std::vector<std::vector<std::vector<Rational>>>;

Cube raw(const StructureConstants& A) {
  std::size_t n = A.dim();
  Cube c(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = A.at(i, j, k).constant_value();
  return c;
}

// (e_a e_b) e_c, coordinate m
Rational left_assoc(const Cube& c, std::size_t a, std::size_t b, std::size_t cc, std::size_t m) {
  Rational s;
  for (std::size_t p = 0; p < c.size(); ++p) s += c[a][b][p] * c[p][cc][m];
  return s;
}
// e_a (e_b e_c), coordinate m
Rational right_assoc(const Cube& c, std::size_t a, std::size_t b, std::size_t cc, std::size_t m) {
  Rational s;
  for (std::size_t p = 0; p < c.size(); ++p) s += c[b][cc][p] * c[a][p][m];
  return s;
}

std::set<std::tuple<int, std::size_t, std::size_t, std::size_t>> oracle_violations(const StructureConstants& A) {
  Cube c = raw(A);
  std::size_t n = A.dim();
  std::set<std::tuple<int, std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Rational ls = right_assoc(c, i, j, k, m) - left_assoc(c, i, j, k, m) - right_assoc(c, j, i, k, m) +
                        left_assoc(c, j, i, k, m);
          if (!ls.is_zero()) out.insert({0, i, j, k});
          if (!(left_assoc(c, i, j, k, m) - left_assoc(c, i, k, j, m)).is_zero()) out.insert({1, i, j, k});
        }
  return out;
}

std::set<std::tuple<int, std::size_t, std::size_t, std::size_t>> reported(const NovikovReport& r) {
  std::set<std::tuple<int, std::size_t, std::size_t, std::size_t>> out;
  for (const auto& v : r.failing) out.insert({v.axiom == Violation::left_symmetry ? 0 : 1, v.i, v.j, v.k});
  return out;
}

std::vector<StructureConstants> sampled_catalog() {
  std::vector<StructureConstants> out;
  for (const auto& en : catalog()) {
    if (en.params.empty()) {
      out.push_back(en.table);
      continue;
    }
    for (const auto& s : sample_grid()) {
      std::map<std::string, Rational> at;
      bool ok = true;
      for (const auto& p : en.params) {
        auto allowed = allowed_samples(en, p);
        if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) ok = false;
        at[p] = s;
      }
      if (ok) {
        out.push_back(en.table.instantiate(at));
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST(Multiply, CatalogProducts) {
  StructureConstants g = entry("g3_N5");
  Vec v = multiply(g, e(g, 0), e(g, 1));
  EXPECT_EQ(v[2].constant_value(), Rational(1, 2));
  EXPECT_TRUE(v[0].is_zero() && v[1].is_zero());

  StructureConstants h = entry("h1_N1");
  Vec w = multiply(h, e(h, 1), e(h, 0));
  EXPECT_EQ(w[2], parse_polynomial("alpha", h.ring()));
}

TEST(Multiply, ZeroAndDimensionErrors) {
  StructureConstants g = entry("g3_N5");
  EXPECT_TRUE(is_zero_vec(multiply(g, zero_vec(g.ring(), 3), e(g, 1))));
  try {
    multiply(g, zero_vec(g.ring(), 2), e(g, 1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::dimension_mismatch);
  }
}

TEST(CheckNovikov, SymbolicFamilyAndZero) {
  auto r = check_novikov(entry("h1_N1"));
  EXPECT_TRUE(r.left_symmetric);
  EXPECT_TRUE(r.right_commutative);
  EXPECT_TRUE(r.failing.empty());
  EXPECT_TRUE(check_novikov(zero_algebra(3)).ok());
}

TEST(CheckNovikov, FailingTableMatchesBruteForce) {
  StructureConstants A = table(2, "e1*e1 = e2\ne2*e1 = e1\n");
  auto r = check_novikov(A);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(reported(r), oracle_violations(A));
}

TEST(CheckNovikov, RandomTablesMatchBruteForce) {
  auto g = test_support::rng(31);
  std::uniform_int_distribution<int> coin(0, 3), val(-2, 2);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 2;
    StructureConstants A(n, coefficient_ring({}));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (coin(g) == 0) A.set(i, j, k, Rational(val(g)));
    auto r = check_novikov(A);
    auto want = oracle_violations(A);
    EXPECT_EQ(reported(r), want) << write_algebra(A);
    EXPECT_EQ(r.ok(), want.empty());
  }
}

TEST(CheckNovikov, PrintedErratumFailsLeftSymmetry) {
  const CatalogEntry& en = catalog_entry("h1_N20");
  ASSERT_TRUE(en.printed.has_value());
  auto r = check_novikov(*en.printed);
  EXPECT_FALSE(r.left_symmetric);
  auto v = reported(r);
  EXPECT_TRUE(v.count({0, 0, 1, 1}));
  EXPECT_TRUE(check_novikov(en.table).ok());
}

TEST(AssociatedLie, Examples) {
  LieTable h = associated_lie(entry("h1_N1"));
  EXPECT_EQ(h.at(0, 1, 2).constant_value(), Rational(1));
  EXPECT_EQ(h.at(1, 0, 2).constant_value(), Rational(-1));
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) nonzero += !h.at(i, j, k).is_zero();
  EXPECT_EQ(nonzero, 2u);

  LieTable g1 = associated_lie(entry("g1_N1"));
  EXPECT_EQ(g1.at(0, 1, 1).constant_value(), Rational(1));
  EXPECT_EQ(g1.at(0, 2, 2).constant_value(), Rational(1));
  EXPECT_TRUE(g1.at(1, 2, 0).is_zero() && g1.at(1, 2, 1).is_zero() && g1.at(1, 2, 2).is_zero());

  LieTable ab = associated_lie(entry("A4_9"));
  EXPECT_TRUE(ab.table.is_zero());
}

TEST(AssociatedLie, JacobiViolationIsAnError) {
  // [e1,e2] = e3, [e1,e3] = e1, [e2,e3] = e2 has Jacobi sum 2 e3 on (e1,e2,e3)
  StructureConstants A = table(3, "e1*e2 = e3\ne1*e3 = e1\ne2*e3 = e2\n");
  try {
    associated_lie(A);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::jacobi_violation);
  }
  EXPECT_FALSE(check_novikov(A).left_symmetric);
}

TEST(MultMatrix, TwoDimFamily) {
  // e1 e2 = b22 e1, e2 e1 = (b22 - 1) e1, e2 e2 = b12 e1 + b22 e2
  StructureConstants A = parse_algebra(
      "field R\ndim 2\nparam b12\nparam b22\ne1*e2 = b22 e1\ne2*e1 = (b22 - 1) e1\ne2*e2 = b12 e1 + b22 e2\n");
  ASSERT_TRUE(check_novikov(A).ok());
  const RingPtr& R = A.ring();
  PolyMatrix L1 = mult_matrix(A, MultKind::L, 0), L2 = mult_matrix(A, MultKind::L, 1);
  auto p = [&](const char* s) { return parse_polynomial(s, R); };
  EXPECT_TRUE(L1(0, 0).is_zero());
  EXPECT_EQ(L1(0, 1), p("b22"));
  EXPECT_TRUE(L1(1, 0).is_zero() && L1(1, 1).is_zero());
  EXPECT_EQ(L2(0, 0), p("b22 - 1"));
  EXPECT_EQ(L2(0, 1), p("b12"));
  EXPECT_TRUE(L2(1, 0).is_zero());
  EXPECT_EQ(L2(1, 1), p("b22"));
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(mult_matrix(A, MultKind::ad, i), mult_matrix(A, MultKind::L, i) - mult_matrix(A, MultKind::R, i));
}

TEST(MultMatrix, ZeroAndRange) {
  StructureConstants Z = zero_algebra(3);
  EXPECT_TRUE(mult_matrix(Z, MultKind::L, 2).is_zero());
  EXPECT_THROW(mult_matrix(Z, MultKind::R, 3), Error);
}

TEST(MultMatrix, LeftMultiplicationTranscription) {
  const StructureConstants& A = entry("h1_N17");
  PolyMatrix L = mult_matrix(A, MultKind::L, 0);
  // column j is e1 e_j read off the table
  std::vector<Rational> diag;
  for (std::size_t j = 0; j < 4; ++j) diag.push_back(L(j, j).constant_value());
  EXPECT_EQ(diag, (std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(0)}));
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(L(k, j), A.at(0, j, k));
}

TEST(Completeness, Examples) {
  EXPECT_FALSE(is_complete(entry("h1_N17")));
  EXPECT_FALSE(is_complete_generic(entry("h1_N17")));
  EXPECT_TRUE(is_complete(zero_algebra(3)));
  EXPECT_TRUE(is_complete(entry("h1_N1")));
  EXPECT_TRUE(is_complete_generic(entry("h1_N1")));
  StructureConstants bad = table(2, "e1*e1 = e2\ne2*e1 = e1\n");
  EXPECT_THROW(is_complete(bad), Error);
}

TEST(Completeness, FastPathAgreesWithCharPoly) {
  std::size_t checked = 0;
  for (const auto& A : sampled_catalog()) {
    EXPECT_EQ(is_complete(A), is_complete_generic(A)) << write_algebra(A);
    ++checked;
  }
  EXPECT_EQ(checked, catalog().size());
}

TEST(CommutativeAssociative, Examples) {
  EXPECT_TRUE(is_commutative_associative(entry("A4_9")));
  EXPECT_FALSE(is_commutative_associative(entry("g3_N5")));
  EXPECT_FALSE(is_commutative(entry("g3_N5")));
  EXPECT_TRUE(is_commutative_associative(zero_algebra(3)));
}

TEST(Fingerprint, Examples) {
  EXPECT_EQ(algebra_invariants(zero_algebra(3)).str(), "(0, 0, 3, 3, 3, true, true, 0)");
  Fingerprint a33 = algebra_invariants(entry("A3_3"));
  EXPECT_EQ(a33.dim_a2, 2u);
  EXPECT_EQ(a33.dim_a3, 1u);
  Fingerprint u4 = algebra_invariants(entry("4uA0"));
  EXPECT_EQ(u4.dim_a2, 4u);
  EXPECT_EQ(u4.dim_annihilator, 0u);
  EXPECT_EQ(u4.trace_form_rank, 4u);
  EXPECT_THROW(algebra_invariants(entry("h1_N1")), Error);
}

TEST(Fingerprint, SpanOracle) {
  // dim A^2 from raw products by an independent rank computation
  for (const char* id : {"A3_3", "4uA0", "A4_9", "g3_N5", "h1_N17"}) {
    StructureConstants A = entry(id);
    std::size_t n = A.dim();
    RatMatrix M(0, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.append_row(detail::rational_vec(A.product(i, j)));
    EXPECT_EQ(algebra_invariants(A).dim_a2, bareiss_rref(M).pivots.size()) << id;
  }
}

TEST(Fingerprint, InvariantUnderChangeOfBasis) {
  auto g = test_support::rng(32);
  std::vector<std::string> ids = {"A3_3", "A3_5", "g1_N2", "g3_N5", "g4_N1", "A4_9", "4uA0", "h1_N17", "h1_N20", "h2_N1"};
  for (const auto& id : ids) {
    StructureConstants A = entry(id);
    if (!A.is_rational()) continue;
    Fingerprint f = algebra_invariants(A);
    for (int t = 0; t < 50; ++t) {
      RatMatrix P = test_support::random_invertible(A.dim(), g);
      RatMatrix Q = *inverse(P);
      StructureConstants B = apply_automorphism(A, PolyMatrix::from_rational(A.ring(), P),
                                                PolyMatrix::from_rational(A.ring(), Q));
      ASSERT_TRUE(check_novikov(B).ok());
      EXPECT_EQ(algebra_invariants(B), f) << id;
    }
  }
}

TEST(Properties, LeftMultiplicationIsLieHomomorphism) {
  for (const auto& en : catalog()) {
    const StructureConstants& A = en.table;
    LieTable g = associated_lie(A);
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) {
        PolyMatrix lhs = commutator(mult_matrix(A, MultKind::L, i), mult_matrix(A, MultKind::L, j));
        PolyMatrix rhs = mult_matrix(A, MultKind::L, g.table.product(i, j));
        EXPECT_EQ(lhs, rhs) << en.id << " " << i << " " << j;
      }
  }
}

TEST(Properties, RightMultiplicationsCommuteAsLinearConditions) {
  // L([x,y]) + ad([x,y]) - [L(x), ad(y)] - [ad(x), L(y)] = 0
  for (const auto& en : catalog()) {
    const StructureConstants& A = en.table;
    LieTable g = associated_lie(A);
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) {
        Vec br = g.table.product(i, j);
        PolyMatrix m = mult_matrix(A, MultKind::L, br) + mult_matrix(A, MultKind::ad, br) -
                       commutator(mult_matrix(A, MultKind::L, i), mult_matrix(A, MultKind::ad, j)) -
                       commutator(mult_matrix(A, MultKind::ad, i), mult_matrix(A, MultKind::L, j));
        EXPECT_TRUE(m.is_zero()) << en.id;
        EXPECT_TRUE(commutator(mult_matrix(A, MultKind::R, i), mult_matrix(A, MultKind::R, j)).is_zero()) << en.id;
      }
  }
}

TEST(AlgebraIo, RoundTrip) {
  for (const auto& en : catalog()) {
    std::string text = write_algebra(en.table);
    StructureConstants back = parse_algebra(text);
    EXPECT_EQ(back, en.table) << en.id;
    EXPECT_EQ(write_algebra(back), text);
  }
}

TEST(AlgebraIo, Errors) {
  auto code = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const Error& err) {
      return err.code();
    }
    return Errc::io_error;
  };
  EXPECT_EQ(code("field C\ne1*e1 = e1\n"), Errc::parse_error);
  EXPECT_EQ(code("field Q\ndim 2\n"), Errc::parse_error);
  EXPECT_EQ(code("dim 2\ne3*e1 = e1\n"), Errc::index_out_of_range);
  EXPECT_EQ(code("dim 2\ne1*e1 = e1\ne1*e1 = e2\n"), Errc::parse_error);
  EXPECT_EQ(code("dim 2\ne1 e1 = e1\n"), Errc::parse_error);
  EXPECT_EQ(code("dim 2\ne1*e1 = gamma e1\n"), Errc::unknown_variable);
}

TEST(Caa, UnitalExtensionAndDirectSum) {
  StructureConstants A1 = entry("A1");
  StructureConstants U = unital_extension(A1);
  ASSERT_EQ(U.dim(), A1.dim() + 1);
  auto id = identity_element(U);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ((*id)[0], Rational(1));
  EXPECT_TRUE(is_commutative_associative(U));
  try {
    unital_extension(U);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::identity_exists);
  }
  StructureConstants S = direct_sum({U, U});
  EXPECT_EQ(S.dim(), 2 * U.dim());
  EXPECT_TRUE(check_novikov(S).ok());
  EXPECT_TRUE(is_commutative_associative(complex_block()));
  EXPECT_TRUE(identity_element(complex_block()).has_value());
}

TEST(Linalg, InverseAndEmptyMatrix) {
  auto inv0 = inverse(RatMatrix(0, 0));
  ASSERT_TRUE(inv0.has_value());
  EXPECT_EQ(inv0->rows(), 0u);
  auto g = test_support::rng(33);
  for (std::size_t n = 1; n <= 4; ++n) {
    RatMatrix m = test_support::random_invertible(n, g);
    EXPECT_EQ(m * *inverse(m), RatMatrix::identity(n));
  }
  EXPECT_FALSE(inverse(RatMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}})).has_value());
}
