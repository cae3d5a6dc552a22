#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "novikov/novikov.hpp"

namespace novikov::test_support {

inline std::uint64_t& seed() {
  static std::uint64_t s = 20240517;
  return s;
}

/// Generator for one test; `salt` keeps suites independent of run order.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9E3779B97F4A7C15ull)); }

/// Ring over the named variables, ranked in the given order.
inline RingPtr ring(const std::vector<std::string>& names, OrderStyle style = OrderStyle::grevlex) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, VarKind::parameter});
  return Ring::make(std::move(vars), MonomialOrder::identity(style, names.size()));
}

inline Polynomial P(const RingPtr& R, const std::string& text) { return parse_polynomial(text, R); }

inline Rational random_rational(std::mt19937_64& g, int span = 5, int den = 3) {
  std::uniform_int_distribution<int> num(-span, span), d(1, den);
  return Rational(num(g), d(g));
}

inline Polynomial random_poly(const RingPtr& R, std::mt19937_64& g, std::size_t max_terms = 4, unsigned max_deg = 4) {
  std::uniform_int_distribution<std::size_t> nt(0, max_terms);
  std::uniform_int_distribution<unsigned> ex(0, max_deg);
  Polynomial p(R);
  for (std::size_t t = nt(g); t > 0; --t) {
    Monomial m(R->arity());
    unsigned budget = max_deg;
    for (std::size_t v = 0; v < R->arity(); ++v) {
      unsigned e = std::min(ex(g), budget) / 2;
      m.set(v, e);
      budget -= e;
    }
    p += Polynomial::monomial(R, m, random_rational(g));
  }
  return p;
}

/// Random invertible rational matrix with small entries.
inline RatMatrix random_invertible(std::size_t n, std::mt19937_64& g) {
  std::uniform_int_distribution<int> d(-2, 2);
  while (true) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(g));
    if (!determinant(m).is_zero()) return m;
  }
}

/// Sparse invertible matrix: a scaled signed permutation times one transvection.
inline RatMatrix random_sparse_invertible(std::size_t n, std::mt19937_64& g) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), g);
  std::uniform_int_distribution<int> sc(0, 3), pick(0, static_cast<int>(n) - 1), off(-1, 1);
  const Rational scales[] = {Rational(1), Rational(-1), Rational(2), Rational(-1, 2)};
  RatMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = scales[sc(g)];
  RatMatrix t = RatMatrix::identity(n);
  std::size_t a = static_cast<std::size_t>(pick(g)), b = static_cast<std::size_t>(pick(g));
  if (a != b) t(a, b) = Rational(off(g));
  return p * t;
}

// Real-root count by Descartes' rule of signs and bisection, independent of
// the Sturm code.
inline int variations(const std::vector<Rational>& c) {
  int v = 0, last = 0;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    if (last != 0 && x.sign() != last) ++v;
    last = x.sign();
  }
  return v;
}

// Coefficients of (1 + y)^n p((lo + hi y) / (1 + y)); its positive roots are
// the roots of p in (lo, hi).
inline std::vector<Rational> mobius(const UPoly& p, const Rational& lo, const Rational& hi) {
  int n = p.degree();
  UPoly num(std::vector<Rational>{lo, hi}), den(std::vector<Rational>{Rational(1), Rational(1)});
  UPoly acc;
  for (int k = 0; k <= n; ++k) {
    UPoly term = UPoly::constant(p.coeff(static_cast<std::size_t>(k)));
    for (int j = 0; j < k; ++j) term = term * num;
    for (int j = k; j < n; ++j) term = term * den;
    acc = acc + term;
  }
  return acc.coeffs();
}

inline int isolate(const UPoly& p, const Rational& lo, const Rational& hi, int depth) {
  int v = variations(mobius(p, lo, hi));
  if (v <= 1) return v;
  if (depth > 200) return -1000;
  Rational mid = (lo + hi) / Rational(2);
  int at_mid = p.eval(mid).is_zero() ? 1 : 0;
  return isolate(p, lo, mid, depth + 1) + at_mid + isolate(p, mid, hi, depth + 1);
}

inline int bisection_count(const UPoly& p) {
  UPoly sf = p.squarefree_part();
  if (sf.degree() <= 0) return 0;
  Rational B = cauchy_bound(sf) + Rational(1);
  return isolate(sf, -B, B, 0);
}

}  // namespace novikov::test_support
