#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/monomial.hpp"
#include "novikov/rational.hpp"
#include "novikov/ring.hpp"
#include "novikov/upoly.hpp"

namespace novikov {

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse polynomial over Q (or a declared extension) in a shared ring.
/// Terms are kept strictly descending in the ring's monomial order, without
/// zero coefficients, and reduced modulo every extension minimal polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->arity()), c});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t index, unsigned power = 1) {
    Monomial m = Monomial::variable(ring->arity(), index, power);
    return from_terms(std::move(ring), {{m, Rational(1)}});
  }
  static Polynomial variable(RingPtr ring, const std::string& name, unsigned power = 1) {
    std::size_t idx = ring->require(name);
    return variable(std::move(ring), idx, power);
  }
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c) {
    return from_terms(std::move(ring), {{std::move(m), c}});
  }

  /// Canonicalizes arbitrary terms: combines equal monomials, drops zeros,
  /// reduces extension generators, sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.mono.arity() != p.ring_->arity())
        throw Error(Errc::arity_mismatch, "term arity does not match the ring");
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef.is_one(); }

  Rational constant_value() const {
    if (!is_constant()) throw Error(Errc::precondition, "polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coef;
  }
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    return Rational(0);
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw Error(Errc::precondition, "leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coef; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
    return d;
  }
  bool uses(std::size_t var) const { return degree_in(var) > 0; }

  /// Indices of the variables that occur.
  std::vector<std::size_t> variables_used() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < ring_->arity(); ++v)
      if (uses(v)) out.push_back(v);
    return out;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, Rational(1)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, Rational(-1)); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    if (c.is_zero()) return Polynomial(a.ring_);
    Polynomial r = a;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coef * t.coef});
    Polynomial r(a.ring_);
    r.terms_ = std::move(out);
    r.canonicalize();
    return r;
  }

  /// Product with c * m, no extension reduction needed when the ring has none.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    if (ring_->has_extensions()) r.canonicalize();
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(ring_, Rational(1)), base = *this;
    while (k) {
      if (k & 1u) r = r * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!(a.ring_ == b.ring_ || *a.ring_ == *b.ring_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }

  /// Replaces variables by polynomials of `target` (which must contain every
  /// variable that is not replaced, matched by name).
  Polynomial substitute(const std::map<std::string, Polynomial>& assignment, RingPtr target = nullptr) const {
    if (!target) target = ring_;
    for (const auto& [name, val] : assignment) {
      if (!ring_->index_of(name)) throw Error(Errc::unknown_variable, "unknown variable '" + name + "'");
      if (!same_ring(val.ring(), target))
        throw Error(Errc::ring_mismatch, "substituted value for '" + name + "' lives in another ring");
    }
    std::vector<std::optional<Polynomial>> image(ring_->arity());
    for (std::size_t v = 0; v < ring_->arity(); ++v) {
      const std::string& name = ring_->variable(v).name;
      auto it = assignment.find(name);
      if (it != assignment.end()) image[v] = it->second;
      else if (uses(v)) image[v] = variable(target, target->require(name));
    }
    // cache powers of each image
    std::vector<std::vector<Polynomial>> powers(ring_->arity());
    auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(constant(target, Rational(1)));
      while (cache.size() <= e) cache.push_back(cache.back() * *image[v]);
      return cache[e];
    };
    Polynomial acc(target);
    for (const auto& t : terms_) {
      Polynomial term = constant(target, t.coef);
      for (std::size_t v = 0; v < ring_->arity(); ++v)
        if (t.mono[v] > 0) term = term * power_of(v, t.mono[v]);
      acc += term;
    }
    return acc;
  }

  Polynomial substitute(const std::map<std::string, Rational>& values) const {
    std::map<std::string, Polynomial> a;
    for (const auto& [k, v] : values) a.emplace(k, constant(ring_, v));
    return substitute(a);
  }

  /// Same polynomial viewed in another ring, variables matched by name.
  Polynomial to_ring(const RingPtr& target) const {
    if (same_ring(ring_, target)) return *this;
    std::vector<std::size_t> map(ring_->arity(), 0);
    for (std::size_t v = 0; v < ring_->arity(); ++v) {
      if (!uses(v)) continue;
      auto idx = target->index_of(ring_->variable(v).name);
      if (!idx)
        throw Error(Errc::unknown_variable,
                    "variable '" + ring_->variable(v).name + "' is not in the target ring");
      map[v] = *idx;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->arity());
      for (std::size_t v = 0; v < ring_->arity(); ++v)
        if (t.mono[v]) m.set(map[v], t.mono[v]);
      out.push_back({std::move(m), t.coef});
    }
    return from_terms(target, std::move(out));
  }

  /// Index of the single variable occurring, if any; nullopt for constants or
  /// multivariate polynomials.
  std::optional<std::size_t> univariate_variable() const {
    auto used = variables_used();
    if (used.size() != 1) return std::nullopt;
    return used[0];
  }

  UPoly to_upoly(std::size_t var) const {
    std::vector<Rational> c(degree_in(var) + 1);
    for (const auto& t : terms_) {
      if (t.mono.degree() != t.mono[var])
        throw Error(Errc::precondition, "polynomial is not univariate in the requested variable");
      c[t.mono[var]] += t.coef;
    }
    return UPoly(std::move(c));
  }

  static Polynomial from_upoly(RingPtr ring, std::size_t var, const UPoly& u) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i)
      if (!u.coeffs()[i].is_zero())
        out.push_back({Monomial::variable(ring->arity(), var, static_cast<unsigned>(i)), u.coeffs()[i]});
    return from_terms(std::move(ring), std::move(out));
  }

  /// Removes the leading term.
  void pop_leading() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
  }

  /// Re-sorts and re-reduces; the identity on canonical input.
  Polynomial normalized() const {
    Polynomial r = *this;
    r.canonicalize();
    return r;
  }

  bool is_canonical() const {
    const auto& ord = ring_->order();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coef.is_zero()) return false;
      if (i > 0 && !ord.greater(terms_[i - 1].mono, terms_[i].mono)) return false;
      for (const auto& e : ring_->extensions())
        if (terms_[i].mono[e.generator] >= static_cast<unsigned>(e.minimal_polynomial.degree())) return false;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      Rational c = t.coef;
      bool neg = c.sign() < 0;
      if (neg) c = -c;
      if (i == 0) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      std::string mono = monomial_str(t.mono);
      if (mono.empty()) out += c.str();
      else if (c.is_one()) out += mono;
      else out += c.str() + " " + mono;
    }
    return out;
  }

  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (std::size_t r = 0; r < ring_->arity(); ++r) {
      std::size_t v = ring_->order().ranking[r];
      if (m[v] == 0) continue;
      if (!s.empty()) s += " ";
      s += ring_->variable(v).name;
      if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_ || !same_ring(a.ring_, b.ring_))
      throw Error(Errc::ring_mismatch, "polynomials from different rings");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, const Rational& sb) {
    check_same(a, b);
    const auto& ord = a.ring_->order();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      auto c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) r.terms_.push_back(a.terms_[i++]);
      else if (c < 0) r.terms_.push_back({b.terms_[j].mono, b.terms_[j].coef * sb}), ++j;
      else {
        Rational s = a.terms_[i].coef + b.terms_[j].coef * sb;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back({b.terms_[j].mono, b.terms_[j].coef * sb});
    return r;
  }

  struct RawLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return raw_less(a, b); }
  };

  void canonicalize() {
    std::map<Monomial, Rational, RawLess> acc;
    std::vector<Term> work = std::move(terms_);
    terms_.clear();
    while (!work.empty()) {
      Term t = std::move(work.back());
      work.pop_back();
      if (t.coef.is_zero()) continue;
      bool rewritten = false;
      for (const auto& e : ring_->extensions()) {
        unsigned d = static_cast<unsigned>(e.minimal_polynomial.degree());
        unsigned k = t.mono[e.generator];
        if (k < d) continue;
        // t^k = t^(k-d) * t^d and t^d = -(m_0 + m_1 t + ... + m_{d-1} t^(d-1))
        for (unsigned i = 0; i < d; ++i) {
          const Rational& mi = e.minimal_polynomial.coeffs()[i];
          if (mi.is_zero()) continue;
          Monomial m = t.mono;
          m.set(e.generator, k - d + i);
          work.push_back({std::move(m), -(mi * t.coef)});
        }
        rewritten = true;
        break;
      }
      if (rewritten) continue;
      auto it = acc.find(t.mono);
      if (it == acc.end()) acc.emplace(std::move(t.mono), std::move(t.coef));
      else it->second += t.coef;
    }
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms_.push_back({m, c});
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace novikov
