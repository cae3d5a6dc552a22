#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace novikov;

namespace {

LieTable lie_at(const std::string& id, std::size_t dim = 0, const Rational& alpha = Rational(2)) {
  LieTable g = lie_algebra(id, dim);
  if (g.table.has_parameters()) g = LieTable::make(g.table.instantiate({{"alpha", alpha}}));
  return g;
}

std::map<std::string, Rational> b_values(const TGFamily& f, const std::vector<Rational>& v) {
  std::map<std::string, Rational> m;
  for (std::size_t t = 0; t < f.free_count; ++t) m["b" + std::to_string(t + 1)] = v[t];
  return m;
}

bool on_residual(const TGFamily& f, const std::map<std::string, Rational>& b) {
  for (const auto& r : f.residual)
    if (!r.substitute(b).is_zero()) return false;
  return true;
}

// Points of the residual variety: random values with a random subset zeroed.
std::vector<std::map<std::string, Rational>> residual_points(const TGFamily& f, std::mt19937_64& g, std::size_t want) {
  std::uniform_int_distribution<int> coin(0, 1), val(-3, 3);
  std::set<std::string> seen;
  std::vector<std::map<std::string, Rational>> out;
  for (int tries = 0; out.size() < want && tries < 50000; ++tries) {
    std::vector<Rational> v;
    for (std::size_t t = 0; t < f.free_count; ++t) {
      if (f.residual.empty()) v.push_back(test_support::random_rational(g));
      else v.push_back(coin(g) ? Rational(val(g)) : Rational(0));
    }
    auto b = b_values(f, v);
    if (!on_residual(f, b)) continue;
    std::string key;
    for (const auto& x : v) key += x.str() + ",";
    if (seen.insert(key).second) out.push_back(b);
  }
  return out;
}

}  // namespace

TEST(TgFamily, TwoDimNonabelian) {
  TGFamily f = tg_family(lie_algebra("r2"));
  EXPECT_EQ(f.free_count, 2u);
  EXPECT_EQ(f.free_origin, (std::vector<std::string>{"c_2_2_1", "c_2_2_2"}));
  EXPECT_TRUE(f.residual.empty());
  // b1 plays b12 and b2 plays b22: L1 = [[0, b22], [0, 0]], L2 = [[b22 - 1, b12], [0, b22]]
  StructureConstants want =
      parse_algebra("field R\ndim 2\nparam b1\nparam b2\ne1*e2 = b2 e1\ne2*e1 = (b2 - 1) e1\ne2*e2 = b1 e1 + b2 e2\n");
  EXPECT_EQ(f.base.to_ring(want.ring()), want);
}

TEST(TgFamily, TwoDimLinearRelations) {
  // a_ij = L1(i,j), b_ij = L2(i,j): a21 = 0, a11 = b21, a22 = -b21, b22 = b11 + 1, a22 = b21, a12 = b11 + 1
  TGFamily f = tg_family(lie_algebra("r2"));
  auto g = test_support::rng(41);
  for (int t = 0; t < 20; ++t) {
    StructureConstants A = f.base.instantiate(b_values(f, {test_support::random_rational(g), test_support::random_rational(g)}));
    auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return A.at(i, j, k).constant_value(); };
    Rational a11 = c(0, 0, 0), a12 = c(0, 1, 0), a21 = c(0, 0, 1), a22 = c(0, 1, 1);
    Rational b11 = c(1, 0, 0), b21 = c(1, 0, 1), b22 = c(1, 1, 1);
    EXPECT_TRUE(a21.is_zero());
    EXPECT_EQ(a11, b21);
    EXPECT_EQ(a22, -b21);
    EXPECT_EQ(b22, b11 + Rational(1));
    EXPECT_EQ(a22, b21);
    EXPECT_EQ(a12, b11 + Rational(1));
  }
}

TEST(TgFamily, AbelianSmallCases) {
  TGFamily f1 = tg_family(lie_algebra("abelian", 1));
  EXPECT_EQ(f1.free_count, 1u);
  EXPECT_TRUE(f1.residual.empty());

  TGFamily f2 = tg_family(lie_algebra("abelian", 2));
  EXPECT_FALSE(f2.residual.empty());
  EXPECT_TRUE(on_residual(f2, b_values(f2, std::vector<Rational>(f2.free_count))));
  // commutativity is linear: the base is symmetric in i, j
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(f2.base.at(i, j, k), f2.base.at(j, i, k));
}

TEST(TgFamily, HeisenbergFamiliesOnSolvedSet) {
  TGFamily f = tg_family(lie_algebra("g3"));
  EXPECT_GE(f.free_count, 2u);
  StructureConstants n1 = read_algebra(std::string(NOVIKOV_SAMPLES_DIR) + "/n1_family.alg");
  StructureConstants n2 = read_algebra(std::string(NOVIKOV_SAMPLES_DIR) + "/n2_family.alg");
  for (const auto& s : sample_grid()) {
    EXPECT_TRUE(lies_on_family(f, n1.instantiate({{"alpha", s}}))) << s.str();
    EXPECT_TRUE(lies_on_family(f, n2.instantiate({{"beta", s}}))) << s.str();
  }
  TGFamily h = tg_family(lie_algebra("h1"));
  EXPECT_TRUE(lies_on_family(h, catalog_entry("h1_N1").table.instantiate({{"alpha", Rational(0)}})));
}

TEST(SolveLinear, TwoEliminationsAgree) {
  std::vector<LieTable> gs;
  for (const auto& id : lie_ids()) gs.push_back(lie_at(id));
  for (std::size_t n = 1; n <= 3; ++n) gs.push_back(lie_algebra("abelian", n));
  for (const auto& g : gs) {
    LinearSystem sys = tg_linear_system(g);
    LinearSolution a = solve_linear_system(sys), b = solve_linear_system_gauss(sys);
    EXPECT_EQ(a.pivots, b.pivots);
    EXPECT_EQ(a.free_vars, b.free_vars);
    RatMatrix M = detail::augmented_matrix(sys);
    EXPECT_EQ(rank(M), bareiss_rref(M).pivots.size());
    EXPECT_EQ(a.free_vars.size() + a.pivots.size(), sys.unknowns.size());
  }
}

TEST(SolveLinear, EquationsAreLinear) {
  LinearSystem sys = tg_linear_system(lie_algebra("h2"));
  EXPECT_EQ(sys.unknowns.size(), 64u);
  EXPECT_EQ(sys.unknowns.front(), "c_1_1_1");
  EXPECT_EQ(sys.unknowns[1], "c_1_1_2");
  for (const auto& e : sys.equations) EXPECT_LE(e.total_degree(), 1u);
}

TEST(TgFamily, SoundnessSampling) {
  auto g = test_support::rng(42);
  std::vector<LieTable> gs;
  for (const auto& id : lie_ids()) gs.push_back(lie_at(id));
  gs.push_back(lie_at("g2", 0, Rational(-1, 4)));
  gs.push_back(lie_algebra("abelian", 2));
  gs.push_back(lie_algebra("abelian", 3));
  for (const auto& lie : gs) {
    TGFamily f = tg_family(lie);
    auto pts = residual_points(f, g, 25);
    EXPECT_EQ(pts.size(), 25u);
    for (const auto& b : pts) {
      StructureConstants A = f.base.instantiate(b);
      ASSERT_TRUE(check_novikov(A).ok()) << write_algebra(A);
      EXPECT_EQ(associated_lie(A).table, lie.table.to_ring(A.ring()));
      EXPECT_TRUE(lies_on_family(f, A));
    }
  }
}

TEST(TgFamily, CatalogEntriesLieOnTheirFamily) {
  std::map<std::string, TGFamily> cache;
  std::size_t checked = 0;
  for (const auto& en : catalog()) {
    std::vector<std::map<std::string, Rational>> points;
    if (en.params.empty()) points.push_back({});
    for (const auto& s : sample_grid()) {
      if (en.params.empty() || points.size() >= 2) break;
      std::map<std::string, Rational> at;
      bool ok = true;
      for (const auto& p : en.params) {
        auto allowed = allowed_samples(en, p);
        ok = ok && std::find(allowed.begin(), allowed.end(), s) != allowed.end();
        at[p] = s;
      }
      if (ok) points.push_back(at);
    }
    ASSERT_FALSE(points.empty()) << en.id;
    for (const auto& at : points) {
      StructureConstants A = at.empty() ? en.table : en.table.instantiate(at);
      StructureConstants gt = declared_lie(en).table;
      LieTable g = LieTable::make(at.empty() ? gt : gt.instantiate(at));
      std::string key = write_algebra(g.table);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, tg_family(g)).first;
      EXPECT_TRUE(lies_on_family(it->second, A)) << en.id;
      ++checked;
    }
  }
  EXPECT_GE(checked, catalog().size());
}

TEST(TgFamily, Deterministic) {
  for (const char* id : {"g3", "h2"}) {
    TGFamily a = tg_family(lie_algebra(id)), b = tg_family(lie_algebra(id));
    EXPECT_EQ(family_report(a), family_report(b));
    EXPECT_EQ(a.free_origin, b.free_origin);
  }
}
