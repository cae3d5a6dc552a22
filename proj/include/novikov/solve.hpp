#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/groebner.hpp"

namespace novikov {

/// A common zero of an ideal, coordinates in Q or one quadratic extension.
struct Point {
  RingPtr field_ring;  // extension generators only, possibly no variables
  std::map<std::string, Polynomial> values;
};

struct PointOptions {
  Field field = Field::C;
  std::size_t budget = default_budget;  // per basis computation
  std::size_t max_nodes = 300;          // basis computations per search
  std::vector<std::string> prefer_one;  // first pin value 1 instead of 0
  std::vector<std::string> pin_last;    // pinned only when nothing else is free
  std::vector<std::string> pin_order;   // pinned first, in this order
  bool pin_pure = true;                 // pin_order may pin coordinates with a pure power leading term
  bool broaden = true;                  // first pass with two pin values per coordinate
  std::vector<Rational> pin_values{Rational(0), Rational(1), Rational(-1), Rational(2),
                                   Rational(-2), Rational(1, 2), Rational(3)};
  bool allow_extension = true;
};

struct PointSearch {
  std::optional<Point> point;
  bool exhausted = false;  // a budget or node limit stopped the search
  std::size_t nodes = 0;
  std::size_t steps = 0;
};

/// Squarefree integer d with sqrt(q) in Q(sqrt(d)), and s with q = s^2 d.
inline std::pair<mpz_class, Rational> squarefree_part(const Rational& q) {
  mpz_class n = q.numerator() * q.denominator();
  Rational s(mpz_class(1), q.denominator());
  int sign = n < 0 ? -1 : 1;
  if (n < 0) n = -n;
  mpz_class d = 1;
  mpz_class f = 2;
  while (f * f <= n && f < 1000000) {
    while (n % (f * f) == 0) {
      n /= f * f;
      s = s * Rational(f, mpz_class(1));
    }
    if (n % f == 0) {
      n /= f;
      d *= f;
    }
    ++f;
  }
  d *= n;
  return {d * sign, s};
}

inline std::string extension_name(const mpz_class& d) {
  if (d == -1) return "i";
  if (d < 0) return "sqrtm" + mpz_class(-d).get_str();
  return "sqrt" + d.get_str();
}

namespace detail {

class PointFinder {
 public:
  explicit PointFinder(PointOptions opt) : opt_(std::move(opt)) {}

  PointSearch run(const Ideal& I) {
    PointSearch out;
    // iterative broadening: few pin values per free coordinate first
    for (std::size_t w : {opt_.broaden ? std::size_t(2) : opt_.pin_values.size(), std::size_t(4), opt_.pin_values.size()}) {
      width_ = std::min(w, opt_.pin_values.size());
      narrowed_ = false;
      out.point = search(I.ring, I.generators);
      if (out.point || exhausted_ || !narrowed_) break;
    }
    out.exhausted = exhausted_;
    out.nodes = nodes_;
    out.steps = steps_;
    return out;
  }

 private:
  bool listed(const std::vector<std::string>& v, const std::string& s) const {
    return std::find(v.begin(), v.end(), s) != v.end();
  }

  static bool only_extension_vars(const Polynomial& p) {
    for (std::size_t v : p.variables_used())
      if (p.ring()->variable(v).kind != VarKind::extension_generator) return false;
    return true;
  }

  /// Ring holding only the extension generators of `ring`.
  static RingPtr field_ring_of(const RingPtr& ring) {
    std::vector<Variable> vars;
    std::vector<FieldExt> exts;
    for (const auto& e : ring->extensions()) {
      exts.push_back({vars.size(), e.minimal_polynomial});
      vars.push_back(ring->variable(e.generator));
    }
    return Ring::make_default(std::move(vars), std::move(exts));
  }

  std::optional<Point> search(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    if (++nodes_ > opt_.max_nodes) {
      exhausted_ = true;
      return std::nullopt;
    }
    GroebnerBasis gb = buchberger(Ideal::make(ring, gens), opt_.budget);
    steps_ += gb.steps_used;
    if (!gb.complete) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (is_trivial(gb)) return std::nullopt;
    if (opt_.field == Field::R && real_nonsolvability(gb, opt_.budget)) return std::nullopt;
    std::vector<Polynomial> basis;
    for (const auto& g : gb.basis) {
      Polynomial h = g.to_ring(ring);
      if (!h.is_zero()) basis.push_back(std::move(h));
    }
    // solved variables: v - c(t)
    std::map<std::size_t, Polynomial> solved;
    std::vector<bool> pure(ring->arity(), false);
    for (const auto& g : basis) {
      const Monomial& lm = g.leading_monomial();
      auto used = Polynomial::monomial(ring, lm, Rational(1)).variables_used();
      if (used.size() != 1) continue;
      std::size_t v = used[0];
      if (ring->variable(v).kind == VarKind::extension_generator) continue;
      pure[v] = true;
      if (lm[v] == 1) {
        Polynomial rest = g - Polynomial::monomial(ring, lm, g.leading_coefficient());
        if (only_extension_vars(rest)) solved.emplace(v, -rest);
      }
    }
    std::vector<std::size_t> unsolved;
    for (std::size_t r = ring->arity(); r-- > 0;) {  // smallest variable first
      std::size_t v = ring->order().ranking[r];
      if (ring->variable(v).kind == VarKind::extension_generator || solved.count(v)) continue;
      unsolved.push_back(v);
    }
    if (unsolved.empty()) {
      Point p;
      p.field_ring = field_ring_of(ring);
      for (const auto& [v, val] : solved) p.values.emplace(ring->variable(v).name, val.to_ring(p.field_ring));
      return p;
    }
    auto pick = [&](const std::vector<std::size_t>& cands) {
      for (std::size_t v : cands)
        if (!listed(opt_.pin_last, ring->variable(v).name)) return v;
      return cands.front();
    };
    std::vector<std::size_t> free_vars;
    for (std::size_t v : unsolved)
      if (!pure[v]) free_vars.push_back(v);
    if (!free_vars.empty()) {
      std::size_t v = pick(free_vars);
      for (const auto& name : opt_.pin_order) {
        auto idx = ring->index_of(name);
        const auto& pool = opt_.pin_pure ? unsolved : free_vars;
        if (idx && std::find(pool.begin(), pool.end(), *idx) != pool.end()) {
          v = *idx;
          break;
        }
      }
      std::vector<Rational> values = opt_.pin_values;
      if (listed(opt_.prefer_one, ring->variable(v).name)) {
        auto it = std::find(values.begin(), values.end(), Rational(1));
        if (it != values.end()) std::rotate(values.begin(), it, it + 1);
      }
      if (values.size() > width_) {
        values.resize(width_);
        narrowed_ = true;
      }
      for (const auto& val : values) {
        std::vector<Polynomial> next = basis;
        next.push_back(Polynomial::variable(ring, v) - Polynomial::constant(ring, val));
        if (auto p = search(ring, next)) return p;
        if (exhausted_) return std::nullopt;
      }
      return std::nullopt;
    }
    // zero-dimensional: minimal polynomial of one unsolved variable
    std::size_t v = pick(unsolved);
    std::vector<Polynomial> elim;
    try {
      elim = eliminate(Ideal::make(ring, basis), {ring->variable(v).name}, opt_.budget);
    } catch (const Error& e) {
      if (e.code() != Errc::budget_exhausted) throw;
      exhausted_ = true;
      return std::nullopt;
    }
    const Polynomial* uni = nullptr;
    for (const auto& g : elim)
      if (g.univariate_variable() == v && g.variables_used().size() == 1) uni = &g;
    if (!uni) return std::nullopt;  // minimal polynomial over an extension: not handled
    UPoly mp = uni->to_upoly(v);
    for (const auto& r : rational_roots(mp)) {
      std::vector<Polynomial> next = basis;
      next.push_back(Polynomial::variable(ring, v) - Polynomial::constant(ring, r));
      if (auto p = search(ring, next)) return p;
      if (exhausted_) return std::nullopt;
    }
    if (!opt_.allow_extension || ring->has_extensions()) return std::nullopt;
    // strip rational roots, look for a quadratic factor
    UPoly q = mp.squarefree_part();
    for (const auto& r : rational_roots(q))
      q = UPoly::divmod(q, UPoly(std::vector<Rational>{-r, Rational(1)})).first;
    if (q.degree() != 2) return std::nullopt;
    const Rational &a = q.coeff(2), &b = q.coeff(1), &c = q.coeff(0);
    Rational disc = b * b - Rational(4) * a * c;
    if (opt_.field == Field::R && disc.sign() < 0) return std::nullopt;
    auto [d, s] = squarefree_part(disc);
    std::string tname = extension_name(d);
    while (ring->index_of(tname)) tname += "_";
    std::vector<Variable> vars = ring->variables();
    std::vector<FieldExt> exts;
    std::size_t tidx = vars.size();
    exts.push_back({tidx, UPoly(std::vector<Rational>{Rational(-d, mpz_class(1)), Rational(0), Rational(1)})});
    vars.push_back({tname, VarKind::extension_generator});
    MonomialOrder ord = ring->order();
    ord.ranking.push_back(tidx);
    RingPtr ext_ring = Ring::make(std::move(vars), std::move(ord), std::move(exts));
    std::vector<Polynomial> next;
    for (const auto& g : basis) next.push_back(g.to_ring(ext_ring));
    // v = (-b + s t) / 2a
    Polynomial t = Polynomial::variable(ext_ring, tidx);
    Polynomial value = (Polynomial::constant(ext_ring, -b) + t * s) * (Rational(2) * a).inverse();
    next.push_back(Polynomial::variable(ext_ring, v) - value);
    return search(ext_ring, next);
  }

  PointOptions opt_;
  std::size_t nodes_ = 0;
  std::size_t steps_ = 0;
  std::size_t width_ = 0;
  bool narrowed_ = false;
  bool exhausted_ = false;
};

}  // namespace detail

/// Depth-first search for a common zero: reads solved coordinates from the
/// reduced basis, pins free coordinates to small rationals, and in the
/// zero-dimensional case takes rational roots of a minimal polynomial or
/// adjoins one square root.
inline PointSearch find_point(const Ideal& I, PointOptions opt = {}) {
  return detail::PointFinder(std::move(opt)).run(I);
}

}  // namespace novikov
