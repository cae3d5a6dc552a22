#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/linalg.hpp"

namespace novikov {

/// Linear equations in the unknowns c_i_j_k (1-based names, ordered by i,
/// then j, then k).
struct LinearSystem {
  std::size_t dim = 0;
  RingPtr ring;  // unknowns as parameters
  std::vector<std::string> unknowns;
  std::vector<Polynomial> equations;
};

inline std::string unknown_name(std::size_t i, std::size_t j, std::size_t k) {
  return "c_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(k + 1);
}

/// Solved linear part of T(g) plus the quadratic residual from left symmetry.
struct TGFamily {
  LieTable lie;
  StructureConstants base;  // entries affine in b1..bm
  std::size_t free_count = 0;
  std::vector<std::string> free_origin;  // free_origin[t] = unknown that b(t+1) stands for
  std::vector<Polynomial> residual;      // in base.ring()
  LinearSystem system;
};

/// Commutator equations for i < j, then the entries of
/// L([x,y]) + ad([x,y]) - [L(x), ad(y)] - [ad(x), L(y)] at (e_i, e_j), i < j,
/// with ad taken from the Lie table.
inline LinearSystem tg_linear_system(const LieTable& g) {
  if (!g.table.is_rational())
    throw Error(Errc::symbolic_parameters, "the linear system needs a Lie algebra with rational structure constants");
  std::size_t n = g.dim();
  LinearSystem sys;
  sys.dim = n;
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        sys.unknowns.push_back(unknown_name(i, j, k));
        vars.push_back({sys.unknowns.back(), VarKind::parameter});
      }
  sys.ring = Ring::make(vars, MonomialOrder::identity(OrderStyle::grevlex, vars.size()));
  const RingPtr& R = sys.ring;
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return Polynomial::variable(R, (i * n + j) * n + k); };
  auto gc = [&](std::size_t i, std::size_t j, std::size_t k) { return g.at(i, j, k).constant_value(); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial e = c(i, j, k) - c(j, i, k) - Polynomial::constant(R, gc(i, j, k));
        if (!e.is_zero()) sys.equations.push_back(std::move(e));
      }

  std::vector<PolyMatrix> L, ad;
  for (std::size_t m = 0; m < n; ++m) {
    PolyMatrix Lm(R, n), adm(R, n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) {
        Lm(row, col) = c(m, col, row);
        adm(row, col) = Polynomial::constant(R, gc(m, col, row));
      }
    L.push_back(std::move(Lm));
    ad.push_back(std::move(adm));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      PolyMatrix M(R, n);
      for (std::size_t m = 0; m < n; ++m) {
        Rational s = gc(i, j, m);
        if (s.is_zero()) continue;
        M = M + (L[m] + ad[m]) * s;
      }
      M = M - commutator(L[i], ad[j]) - commutator(ad[i], L[j]);
      for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col)
          if (!M(row, col).is_zero()) sys.equations.push_back(M(row, col));
    }
  return sys;
}

struct LinearSolution {
  std::vector<std::size_t> pivots;     // unknown indices solved for
  std::vector<std::size_t> free_vars;  // unknown indices left free, in order
  RatMatrix reduced;                   // reduced augmented matrix
};

namespace detail {

inline RatMatrix augmented_matrix(const LinearSystem& sys) {
  std::size_t u = sys.unknowns.size();
  RatMatrix m(0, u + 1);
  for (const auto& e : sys.equations) {
    std::vector<Rational> row(u + 1);
    for (const auto& t : e.terms()) {
      if (t.mono.degree() > 1) throw Error(Errc::precondition, "equation is not linear: " + e.str());
      if (t.mono.is_one()) {
        row[u] = -t.coef;
        continue;
      }
      for (std::size_t v = 0; v < u; ++v)
        if (t.mono[v]) row[v] = t.coef;
    }
    m.append_row(row);
  }
  return m;
}

inline LinearSolution solution_from(RrefResult rr, std::size_t u) {
  LinearSolution s;
  std::vector<bool> piv(u, false);
  for (std::size_t p : rr.pivots) {
    if (p == u) throw Error(Errc::inconsistent_system, "linear system for T(g) is inconsistent");
    piv[p] = true;
    s.pivots.push_back(p);
  }
  for (std::size_t v = 0; v < u; ++v)
    if (!piv[v]) s.free_vars.push_back(v);
  s.reduced = std::move(rr.reduced);
  return s;
}

}  // namespace detail

/// Fraction-free elimination; pivots at the first nonzero unknown of each
/// row, so the later unknowns stay free.
inline LinearSolution solve_linear_system(const LinearSystem& sys) {
  if (sys.equations.empty()) {
    LinearSolution s;
    for (std::size_t v = 0; v < sys.unknowns.size(); ++v) s.free_vars.push_back(v);
    s.reduced = RatMatrix(0, sys.unknowns.size() + 1);
    return s;
  }
  return detail::solution_from(bareiss_rref(detail::augmented_matrix(sys)), sys.unknowns.size());
}

/// Same solution by plain Gauss-Jordan; used as a cross-check.
inline LinearSolution solve_linear_system_gauss(const LinearSystem& sys) {
  if (sys.equations.empty()) return solve_linear_system(sys);
  return detail::solution_from(rref(detail::augmented_matrix(sys)), sys.unknowns.size());
}

/// Base table with the free unknowns renamed b1..bm, solved unknowns affine
/// in them.
inline TGFamily solve_linear(const LieTable& g, const LinearSystem& sys) {
  std::size_t n = sys.dim, u = sys.unknowns.size();
  LinearSolution sol = solve_linear_system(sys);
  TGFamily fam{g, {}, sol.free_vars.size(), {}, {}, sys};
  std::vector<std::string> names;
  for (std::size_t t = 0; t < sol.free_vars.size(); ++t) {
    names.push_back("b" + std::to_string(t + 1));
    fam.free_origin.push_back(sys.unknowns[sol.free_vars[t]]);
  }
  RingPtr R = coefficient_ring(names);
  fam.base = StructureConstants(n, R, g.table.field());
  std::vector<Polynomial> value(u, Polynomial(R));
  for (std::size_t t = 0; t < sol.free_vars.size(); ++t) value[sol.free_vars[t]] = Polynomial::variable(R, t);
  for (std::size_t r = 0; r < sol.pivots.size(); ++r) {
    Polynomial v = Polynomial::constant(R, sol.reduced(r, u));
    for (std::size_t t = 0; t < sol.free_vars.size(); ++t) {
      const Rational& a = sol.reduced(r, sol.free_vars[t]);
      if (!a.is_zero()) v -= Polynomial::variable(R, t) * a;
    }
    value[sol.pivots[r]] = std::move(v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) fam.base.set(i, j, k, value[(i * n + j) * n + k]);
  return fam;
}

/// Left-symmetry expanded on the solved base table, monic, deduplicated,
/// sorted by leading monomial.
inline std::vector<Polynomial> left_symmetry_residual(const StructureConstants& A) {
  std::size_t n = A.dim();
  const RingPtr& R = A.ring();
  std::vector<Polynomial> out;
  auto add = [&](Polynomial p) {
    if (p.is_zero()) return;
    p = p.monic();
    for (const auto& q : out)
      if (q == p) return;
    out.push_back(std::move(p));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = basis_vec(R, n, i), ej = basis_vec(R, n, j), ek = basis_vec(R, n, k);
        Vec a = multiply(A, ei, A.product(j, k));
        Vec b = multiply(A, A.product(i, j), ek);
        Vec c = multiply(A, ej, A.product(i, k));
        Vec d = multiply(A, A.product(j, i), ek);
        for (std::size_t m = 0; m < n; ++m) add(a[m] - b[m] - c[m] + d[m]);
      }
  const auto& ord = R->order();
  std::sort(out.begin(), out.end(), [&](const Polynomial& x, const Polynomial& y) {
    if (!(x.leading_monomial() == y.leading_monomial())) return ord.greater(x.leading_monomial(), y.leading_monomial());
    return x.str() < y.str();
  });
  return out;
}

inline TGFamily tg_family(const LieTable& g) {
  TGFamily fam = solve_linear(g, tg_linear_system(g));
  fam.residual = left_symmetry_residual(fam.base);
  return fam;
}

/// True if the rational table satisfies every linear equation and every
/// residual polynomial of the family (through its unknowns).
inline bool lies_on_family(const TGFamily& fam, const StructureConstants& A) {
  std::size_t n = fam.system.dim;
  if (A.dim() != n || !A.is_rational()) return false;
  std::map<std::string, Rational> vals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) vals[unknown_name(i, j, k)] = A.at(i, j, k).constant_value();
  for (const auto& e : fam.system.equations)
    if (!e.substitute(vals).is_zero()) return false;
  std::map<std::string, Rational> bvals;
  for (std::size_t t = 0; t < fam.free_count; ++t) bvals["b" + std::to_string(t + 1)] = vals[fam.free_origin[t]];
  for (const auto& r : fam.residual)
    if (!r.substitute(bvals).is_zero()) return false;
  // base table at these free values must reproduce A
  StructureConstants inst = fam.base.instantiate(bvals);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (inst.at(i, j, k).constant_value() != vals[unknown_name(i, j, k)]) return false;
  return true;
}

inline std::string family_report(const TGFamily& fam) {
  std::string s;
  std::size_t n = fam.base.dim();
  s += "free parameters: " + std::to_string(fam.free_count) + "\n";
  for (std::size_t t = 0; t < fam.free_count; ++t)
    s += "  b" + std::to_string(t + 1) + " = " + fam.free_origin[t] + "\n";
  s += "solved entries:\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        s += "  " + unknown_name(i, j, k) + " = " + fam.base.at(i, j, k).str() + "\n";
  s += "residual: " + std::to_string(fam.residual.size()) + "\n";
  for (const auto& r : fam.residual) s += "  " + r.str() + "\n";
  return s;
}

}  // namespace novikov
