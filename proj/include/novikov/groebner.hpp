#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "novikov/polynomial.hpp"

namespace novikov {

inline constexpr std::size_t default_budget = 200000;

/// Ideal given by generators in a shared ring. Extension minimal polynomials
/// are adjoined when a basis is computed.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  static Ideal make(RingPtr ring, std::vector<Polynomial> gens) {
    for (const auto& g : gens)
      if (!same_ring(g.ring(), ring)) throw Error(Errc::ring_mismatch, "ideal generator from another ring");
    return Ideal{std::move(ring), std::move(gens)};
  }
  static Ideal make(std::vector<Polynomial> gens) {
    if (gens.empty()) throw Error(Errc::precondition, "ideal needs at least one generator");
    RingPtr r = gens.front().ring();
    return make(std::move(r), std::move(gens));
  }
};

/// Basis in the flattened working ring (extension generators are ordinary
/// variables there and their minimal polynomials are basis members).
struct GroebnerBasis {
  RingPtr ring;         // working ring, no extension semantics
  RingPtr source_ring;  // ring of the ideal
  std::vector<Polynomial> basis;
  std::size_t steps_used = 0;
  std::size_t budget = default_budget;
  bool complete = true;  // false: budget ran out, basis is partial and not reduced

  const MonomialOrder& order() const { return ring->order(); }
  bool exhausted() const { return !complete; }
};

/// Budget taken from NOVIKOV_BUDGET when set, else the default.
inline std::size_t budget_from_env() {
  if (const char* s = std::getenv("NOVIKOV_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return default_budget;
}

namespace detail {

inline std::vector<Polynomial> working_generators(const Ideal& I, const RingPtr& work) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) {
    Polynomial h = g.to_ring(work);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  for (const auto& e : I.ring->extensions())
    gens.push_back(Polynomial::from_upoly(work, e.generator, e.minimal_polynomial));
  return gens;
}

inline const Polynomial* find_divisor(const Monomial& m, const std::vector<const Polynomial*>& set) {
  for (const Polynomial* g : set)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

/// Full normal form of `p` modulo `set`; counts one step per elimination.
inline Polynomial normal_form(Polynomial p, const std::vector<const Polynomial*>& set, std::size_t& steps,
                              std::size_t limit) {
  Polynomial rem(p.ring());
  std::vector<Term> rem_terms;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* g = find_divisor(lt.mono, set);
    if (!g) {
      rem_terms.push_back(lt);
      p.pop_leading();
      continue;
    }
    if (++steps > limit) break;
    Rational f = lt.coef / g->leading_coefficient();
    Monomial q = lt.mono / g->leading_monomial();
    p = p - g->mul_term(q, f);
  }
  for (const auto& t : p.terms()) rem_terms.push_back(t);
  return Polynomial::from_terms(rem.ring(), std::move(rem_terms));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
         g.mul_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
}

inline void sort_basis(std::vector<Polynomial>& basis, const MonomialOrder& ord) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
}

}  // namespace detail

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// Multivariate division: p = sum q_i g_i + remainder, no term of the
/// remainder divisible by a leading monomial of `set`.
inline DivisionResult reduce(const Polynomial& p, const std::vector<Polynomial>& set) {
  for (const auto& g : set)
    if (!same_ring(g.ring(), p.ring())) throw Error(Errc::ring_mismatch, "divisor from another ring");
  DivisionResult out{Polynomial(p.ring()), {}};
  for (std::size_t i = 0; i < set.size(); ++i) out.quotients.emplace_back(p.ring());
  Polynomial r = p;
  std::vector<Term> rem;
  while (!r.is_zero()) {
    Term lt = r.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i].is_zero() || !set[i].leading_monomial().divides(lt.mono)) continue;
      Rational f = lt.coef / set[i].leading_coefficient();
      Monomial q = lt.mono / set[i].leading_monomial();
      out.quotients[i] += Polynomial::monomial(p.ring(), q, f);
      r = r - set[i].mul_term(q, f);
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      r.pop_leading();
    }
  }
  out.remainder = Polynomial::from_terms(p.ring(), std::move(rem));
  return out;
}

/// Normal form modulo a basis; `p` may live in the basis' source ring.
inline Polynomial reduce(const Polynomial& p, const GroebnerBasis& gb) {
  std::vector<const Polynomial*> set;
  for (const auto& g : gb.basis) set.push_back(&g);
  std::size_t steps = 0;
  return detail::normal_form(p.to_ring(gb.ring), set, steps, static_cast<std::size_t>(-1));
}

namespace detail {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

/// Buchberger with the normal selection strategy and the Gebauer-Moeller
/// update (product and chain criteria).
class Buchberger {
 public:
  Buchberger(RingPtr ring, std::size_t budget) : ring_(std::move(ring)), ord_(ring_->order()), budget_(budget) {}

  GroebnerBasis run(std::vector<Polynomial> gens) {
    GroebnerBasis out;
    out.ring = ring_;
    out.budget = budget_;
    std::vector<Polynomial> start;
    for (auto& g : gens)
      if (!g.is_zero()) start.push_back(g.monic());
    if (start.empty()) return out;
    // deterministic start: largest leading monomial first, then by full term list
    std::stable_sort(start.begin(), start.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord_.greater(a.leading_monomial(), b.leading_monomial());
    });
    for (auto& g : start) {
      if (g.is_constant()) return unit(out);
      add(std::move(g));
    }
    while (!pairs_.empty()) {
      Pair p = select();
      Polynomial s = s_polynomial(polys_[p.i], polys_[p.j]);
      Polynomial h = normal_form(std::move(s), active_set(), steps_, budget_);
      if (steps_ > budget_) {
        out.complete = false;
        break;
      }
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit(out);
      add(h.monic());
    }
    out.steps_used = steps_;
    if (!out.complete) {
      for (std::size_t k = 0; k < polys_.size(); ++k)
        if (active_[k]) out.basis.push_back(polys_[k]);
      sort_basis(out.basis, ord_);
      return out;
    }
    out.basis = reduce_basis();
    out.steps_used = steps_;
    if (out.basis.size() == 1 && out.basis[0].is_constant()) return unit(out);
    return out;
  }

 private:
  GroebnerBasis unit(GroebnerBasis out) {
    out.basis = {Polynomial::constant(ring_, Rational(1))};
    out.steps_used = steps_;
    out.complete = true;
    return out;
  }

  std::vector<const Polynomial*> active_set() const {
    std::vector<const Polynomial*> s;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) s.push_back(&polys_[k]);
    return s;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = ord_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Pair select() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k)
      if (pair_less(pairs_[k], pairs_[best])) best = k;
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  void add(Polynomial h) {
    std::size_t hi = polys_.size();
    const Monomial& lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& LH = polys_[hi].leading_monomial();
    (void)lh;

    // candidate pairs (g, h) for active g
    std::vector<Pair> C;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) C.push_back({g, hi, Monomial::lcm(polys_[g].leading_monomial(), LH)});
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool coprime = Monomial::coprime(polys_[p.i].leading_monomial(), LH);
      bool keep = coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : D)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (auto& p : D)
      if (!Monomial::coprime(polys_[p.i].leading_monomial(), LH)) E.push_back(std::move(p));

    std::vector<Pair> B;
    for (auto& p : pairs_) {
      bool drop = LH.divides(p.lcm) &&
                  !(Monomial::lcm(polys_[p.i].leading_monomial(), LH) == p.lcm) &&
                  !(Monomial::lcm(polys_[p.j].leading_monomial(), LH) == p.lcm);
      if (!drop) B.push_back(std::move(p));
    }
    for (auto& p : E) B.push_back(std::move(p));
    pairs_ = std::move(B);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && LH.divides(polys_[g].leading_monomial())) active_[g] = false;
  }

  std::vector<Polynomial> reduce_basis() {
    std::vector<Polynomial> G;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) G.push_back(polys_[k]);
    // minimal: drop elements whose leading monomial is divisible by another's
    std::vector<Polynomial> M;
    for (std::size_t a = 0; a < G.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
        if (a == b) continue;
        const auto& la = G[a].leading_monomial();
        const auto& lb = G[b].leading_monomial();
        if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
      }
      if (!redundant) M.push_back(G[a]);
    }
    sort_basis(M, ord_);
    std::vector<Polynomial> R;
    for (std::size_t a = 0; a < M.size(); ++a) {
      std::vector<const Polynomial*> others;
      for (std::size_t b = 0; b < M.size(); ++b)
        if (b != a) others.push_back(&M[b]);
      Polynomial lead = Polynomial::monomial(ring_, M[a].leading_monomial(), M[a].leading_coefficient());
      Polynomial tail = M[a] - lead;
      Polynomial t = normal_form(std::move(tail), others, steps_, static_cast<std::size_t>(-1));
      R.push_back((lead + t).monic());
    }
    sort_basis(R, ord_);
    return R;
  }

  RingPtr ring_;
  const MonomialOrder& ord_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced monic Groebner basis under the ring's order. When the step budget
/// runs out the partial basis is returned with `complete == false`.
inline GroebnerBasis buchberger(const Ideal& I, std::size_t budget = default_budget) {
  RingPtr work = I.ring->flattened();
  detail::Buchberger engine(work, budget);
  GroebnerBasis gb = engine.run(detail::working_generators(I, work));
  gb.source_ring = I.ring;
  return gb;
}

inline bool is_trivial(const GroebnerBasis& gb) {
  if (!gb.complete) throw Error(Errc::non_reduced, "basis is partial (budget exhausted)");
  return gb.basis.size() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero();
}

/// Checks the defining properties: monic, reduced, every S-polynomial
/// reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  std::vector<const Polynomial*> set;
  for (const auto& g : gb.basis) set.push_back(&g);
  std::size_t steps = 0;
  for (std::size_t a = 0; a < gb.basis.size(); ++a)
    for (std::size_t b = a + 1; b < gb.basis.size(); ++b)
      if (!detail::normal_form(detail::s_polynomial(gb.basis[a], gb.basis[b]), set, steps,
                               static_cast<std::size_t>(-1))
               .is_zero())
        return false;
  return true;
}

inline bool is_reduced_basis(const GroebnerBasis& gb) {
  for (std::size_t a = 0; a < gb.basis.size(); ++a) {
    const auto& g = gb.basis[a];
    if (g.is_zero() || !g.leading_coefficient().is_one()) return false;
    for (std::size_t b = 0; b < gb.basis.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : g.terms())
        if (gb.basis[b].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

/// Generators of I intersected with the subring on `keep`. Extension
/// generators are always kept (they are constants of the coefficient field).
inline std::vector<Polynomial> eliminate(const Ideal& I, const std::vector<std::string>& keep,
                                         std::size_t budget = default_budget) {
  const Ring& R = *I.ring;
  std::vector<bool> kept(R.arity(), false);
  for (const auto& name : keep) kept[R.require(name)] = true;
  for (const auto& e : R.extensions()) kept[e.generator] = true;
  MonomialOrder ord;
  ord.style = OrderStyle::block_elimination;
  for (std::size_t v : R.order().ranking)
    if (!kept[v]) ord.ranking.push_back(v);
  ord.split = ord.ranking.size();
  std::vector<std::size_t> tail_vars, ext_vars;
  for (std::size_t v : R.order().ranking)
    if (kept[v]) (R.variable(v).kind == VarKind::extension_generator ? ext_vars : tail_vars).push_back(v);
  for (std::size_t v : tail_vars) ord.ranking.push_back(v);
  for (std::size_t v : ext_vars) ord.ranking.push_back(v);

  RingPtr elim_ring = R.with_order(ord);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(g.to_ring(elim_ring));
  GroebnerBasis gb = buchberger(Ideal::make(elim_ring, std::move(gens)), budget);
  if (!gb.complete)
    throw Error(Errc::budget_exhausted, "elimination exceeded " + std::to_string(budget) + " steps");

  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    bool inside = true;
    for (std::size_t v : g.variables_used())
      if (!kept[v]) inside = false;
    if (!inside) continue;
    Polynomial h = g.to_ring(I.ring);  // re-applies extension reduction
    if (h.is_zero()) continue;
    out.push_back(h.monic());
  }
  detail::sort_basis(out, I.ring->order());
  return out;
}

/// Evidence that an ideal has no real zero.
struct RealRootCertificate {
  struct Forcing {
    Polynomial sum_of_squares;             // positive combination of even powers
    std::vector<std::string> forced_zero;  // variables it forces to vanish
  };
  std::vector<Forcing> forcing;  // applied in order before the witness
  Polynomial witness;            // univariate over Q, or a nonzero constant
  std::optional<std::string> variable;
  int real_root_count = 0;
};

inline std::string certificate_str(const RealRootCertificate& c) {
  std::string s;
  for (const auto& f : c.forcing) {
    s += "sum of squares " + f.sum_of_squares.str() + " forces";
    for (const auto& v : f.forced_zero) s += " " + v;
    s += " = 0; ";
  }
  if (c.variable)
    s += "univariate member " + c.witness.str() + " has " + std::to_string(c.real_root_count) + " real roots";
  else if (c.witness.is_constant())
    s += "basis becomes {" + c.witness.str() + "}";
  else
    s += "member " + c.witness.str() + " is positive on real points";
  return s;
}

namespace detail {

inline bool touches_extension(const Polynomial& p) {
  for (const auto& v : p.variables_used())
    if (p.ring()->variable(v).kind == VarKind::extension_generator) return true;
  return false;
}

/// Every term c * v^(2k) with c > 0, v a single variable, or a positive
/// constant. Returns the variables that must vanish on real points; sets
/// `positive_constant` if the polynomial is strictly positive.
inline std::optional<std::vector<std::size_t>> sos_pure_powers(const Polynomial& p, bool& positive_constant) {
  positive_constant = false;
  std::vector<std::size_t> vars;
  if (p.is_zero() || touches_extension(p)) return std::nullopt;
  for (const auto& t : p.terms()) {
    if (t.coef.sign() <= 0) return std::nullopt;
    if (t.mono.is_one()) {
      positive_constant = true;
      continue;
    }
    auto used = Polynomial::monomial(p.ring(), t.mono, Rational(1)).variables_used();
    if (used.size() != 1 || t.mono[used[0]] % 2 != 0) return std::nullopt;
    vars.push_back(used[0]);
  }
  return vars;
}

/// True if p has total degree <= 2 and p(x) > 0 for every real x:
/// completes squares on the homogenized form [[Q, b/2], [b/2, c]].
inline bool positive_quadratic(const Polynomial& p) {
  if (p.is_zero() || touches_extension(p) || p.total_degree() > 2) return false;
  std::vector<std::size_t> vars = p.variables_used();
  std::size_t m = vars.size();
  std::vector<std::vector<Rational>> M(m + 1, std::vector<Rational>(m + 1));
  auto slot = [&](std::size_t v) {
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
  };
  for (const auto& t : p.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t v : vars)
      for (unsigned e = 0; e < t.mono[v]; ++e) idx.push_back(slot(v));
    if (idx.empty()) M[m][m] += t.coef;
    else if (idx.size() == 1) M[idx[0]][m] += t.coef / Rational(2), M[m][idx[0]] += t.coef / Rational(2);
    else if (idx[0] == idx[1]) M[idx[0]][idx[0]] += t.coef;
    else M[idx[0]][idx[1]] += t.coef / Rational(2), M[idx[1]][idx[0]] += t.coef / Rational(2);
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (M[k][k].sign() < 0) return false;
    if (M[k][k].is_zero()) {
      for (std::size_t j = k + 1; j <= m; ++j)
        if (!M[k][j].is_zero()) return false;  // linear in a square-free direction
      continue;
    }
    for (std::size_t r = k + 1; r <= m; ++r) {
      if (M[r][k].is_zero()) continue;
      Rational f = M[r][k] / M[k][k];
      for (std::size_t c = k; c <= m; ++c) M[r][c] -= f * M[k][c];
    }
  }
  return M[m][m].sign() > 0;  // the minimum value
}

}  // namespace detail

/// Sound test for the absence of real zeros: looks for a univariate basis
/// member over Q without real roots (Sturm), or a quadratic member that is
/// positive everywhere. Ideal members (basis elements up
/// to sign, or pairwise combinations) that are sums of positive even pure
/// powers force their variables to zero; those zeros are
/// added and the basis recomputed. No certificate decides nothing.
inline std::optional<RealRootCertificate> real_nonsolvability(const GroebnerBasis& gb,
                                                              std::size_t budget = default_budget) {
  if (!gb.complete) throw Error(Errc::non_reduced, "basis is partial (budget exhausted)");
  RealRootCertificate cert;
  GroebnerBasis cur = gb;
  for (std::size_t round = 0; round <= gb.ring->arity(); ++round) {
    if (is_trivial(cur)) {
      if (cert.forcing.empty()) return std::nullopt;  // trivial input: not a real-specific certificate
      cert.witness = cur.basis[0];
      return cert;
    }
    for (const auto& g : cur.basis) {
      if (detail::touches_extension(g)) continue;
      auto v = g.univariate_variable();
      if (!v) continue;
      int n = count_real_roots(g.to_upoly(*v));
      if (n == 0) {
        cert.witness = g;
        cert.variable = g.ring()->variable(*v).name;
        cert.real_root_count = 0;
        return cert;
      }
    }
    // candidates: basis members up to sign, and pairwise combinations that
    // cancel a common monomial
    std::vector<Polynomial> cands;
    for (const auto& g : cur.basis) cands.push_back(g), cands.push_back(-g);
    for (std::size_t a = 0; a < cur.basis.size(); ++a)
      for (std::size_t b = a + 1; b < cur.basis.size(); ++b) {
        const Polynomial &f = cur.basis[a], &h = cur.basis[b];
        for (const auto& tf : f.terms())
          for (const auto& th : h.terms()) {
            if (!(tf.mono == th.mono) || tf.mono.is_one()) continue;
            Polynomial c = f * th.coef - h * tf.coef;
            if (c.is_zero()) continue;
            cands.push_back(c);
            cands.push_back(-c);
          }
      }
    std::optional<RealRootCertificate::Forcing> step;
    std::vector<std::size_t> zero_vars;
    for (const auto& g : cands) {
      if (detail::positive_quadratic(g)) {
        cert.witness = g;
        cert.real_root_count = 0;
        return cert;
      }
      bool positive = false;
      auto vars = detail::sos_pure_powers(g, positive);
      if (!vars) continue;
      if (positive) {
        cert.witness = g;
        cert.real_root_count = 0;
        return cert;
      }
      bool fresh = false;
      for (std::size_t v : *vars)
        if (!reduce(Polynomial::variable(cur.ring, v), cur).is_zero()) fresh = true;
      if (!fresh) continue;
      step = RealRootCertificate::Forcing{g, {}};
      zero_vars = *vars;
      break;
    }
    if (!step) return std::nullopt;
    std::vector<Polynomial> gens = cur.basis;
    for (std::size_t v : zero_vars) {
      gens.push_back(Polynomial::variable(cur.ring, v));
      step->forced_zero.push_back(cur.ring->variable(v).name);
    }
    cert.forcing.push_back(std::move(*step));
    cur = buchberger(Ideal::make(cur.ring, std::move(gens)), budget);
    if (!cur.complete) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace novikov
