#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
/// The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
  static UPoly x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    Rational inv = leading().inverse();
    for (auto& v : r.c_) v *= inv;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(Errc::division_by_zero, "univariate division by zero");
    std::vector<Rational> rem = a.c_;
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    Rational inv = b.leading().inverse();
    for (std::size_t k = quo.size(); k-- > 0;) {
      Rational f = rem[k + b.c_.size() - 1] * inv;
      quo[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Product of the distinct irreducible factors, monic.
  UPoly squarefree_part() const {
    if (degree() <= 0) return monic();
    UPoly g = gcd(*this, derivative());
    return divmod(*this, g).first.monic();
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      Rational a = c_[i];
      bool neg = a.sign() < 0;
      if (neg) a = -a;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      bool unit = a.is_one() && i > 0;
      if (!unit) out += a.str();
      if (i > 0) {
        if (!unit) out += " ";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

namespace detail {

inline int sign_at(const UPoly& p, const Rational& x) { return p.eval(x).sign(); }

inline int sign_at_infinity(const UPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = p.leading().sign();
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Signed remainder sequence p, p', -rem(p, p'), ...
inline std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = -UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

/// Number of distinct real roots (Sturm). The zero polynomial is rejected.
inline int count_real_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(Errc::precondition, "real root count of the zero polynomial");
  auto seq = sturm_sequence(p);
  std::vector<int> neg, pos;
  for (const auto& q : seq) {
    neg.push_back(detail::sign_at_infinity(q, false));
    pos.push_back(detail::sign_at_infinity(q, true));
  }
  return detail::sign_changes(neg) - detail::sign_changes(pos);
}

/// Distinct real roots in the half-open interval (lo, hi].
inline int count_real_roots_in(const std::vector<UPoly>& seq, const Rational& lo, const Rational& hi) {
  std::vector<int> a, b;
  for (const auto& q : seq) {
    a.push_back(detail::sign_at(q, lo));
    b.push_back(detail::sign_at(q, hi));
  }
  return detail::sign_changes(a) - detail::sign_changes(b);
}

/// Rational with the smallest denominator in the closed interval [lo, hi].
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  mpz_class fl = lo.floor();
  Rational flr{mpq_class(fl)};
  if (flr == lo) return lo;
  if (Rational(mpq_class(fl + 1)) <= hi) return Rational(mpq_class(fl + 1));
  Rational inner = simplest_between((hi - flr).inverse(), (lo - flr).inverse());
  return flr + inner.inverse();
}

/// Bound B with every real root in (-B, B).
inline Rational cauchy_bound(const UPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational v = (p.coeff(static_cast<std::size_t>(i)) / p.leading()).abs();
    if (v > m) m = v;
  }
  return m + Rational(1);
}

/// All rational roots, ascending. Exact: isolates each real root by Sturm
/// bisection and tests the simplest rational of the isolating interval once
/// its width drops below 1/lc^2, which pins any rational root with
/// denominator dividing the leading coefficient of the primitive form.
inline std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  UPoly f = p.squarefree_part();
  // integer leading coefficient bound
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) lcm_den = lcm(lcm_den, c.denominator());
  mpz_class lead = (f.leading() * Rational(mpq_class(lcm_den))).numerator();
  if (lead < 0) lead = -lead;
  // the content of the integer form can only shrink the denominator bound
  Rational min_width(mpz_class(1), lead * lead * 2);

  auto seq = sturm_sequence(f);
  Rational bound = cauchy_bound(f);
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int n = count_real_roots_in(seq, lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      // refine until the simplest rational is forced
      while (true) {
        Rational s = simplest_between(lo, hi);
        if (s != lo && f.eval(s).is_zero()) {
          roots.push_back(s);
          break;
        }
        if (hi - lo < min_width) break;
        Rational mid = (lo + hi) / Rational(2);
        if (f.eval(mid).is_zero()) {
          roots.push_back(mid);
          break;
        }
        if (count_real_roots_in(seq, lo, mid) == 1) hi = mid;
        else lo = mid;
      }
      continue;
    }
    Rational mid = (lo + hi) / Rational(2);
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Irreducibility over Q for degree <= 4 (rational-root test plus a search for
/// a factorization into two monic integer quadratics). Higher degrees are
/// reported irreducible unchecked when they have no rational root.
inline bool is_irreducible_small(const UPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (!rational_roots(p).empty()) return false;
  if (p.degree() <= 3) return true;
  if (p.degree() > 4) return true;
  // make monic with integer coefficients: q(x) = L^4 p(x/L) / lc
  UPoly m = p.monic();
  mpz_class L = 1;
  for (const auto& c : m.coeffs()) L = lcm(L, c.denominator());
  std::vector<mpz_class> a(5);
  mpz_class pw = 1;
  for (int i = 4; i >= 0; --i) {
    Rational v = m.coeff(static_cast<std::size_t>(i)) * Rational(mpq_class(pw));
    a[static_cast<std::size_t>(i)] = v.numerator();
    pw *= L;
  }
  // x^4 + a3 x^3 + a2 x^2 + a1 x + a0 = (x^2 + b x + c)(x^2 + d x + e)
  mpz_class a0 = a[0];
  mpz_class abs0 = a0 < 0 ? mpz_class(-a0) : a0;
  if (abs0 > mpz_class("1000000000000")) return true;  // search range guard
  for (mpz_class c = 1; c * c <= abs0; ++c) {
    if (abs0 % c != 0) continue;
    for (int sc = -1; sc <= 1; sc += 2) {
      mpz_class cc = c * sc;
      mpz_class e = a0 / cc;
      // b + d = a3, c d + e b = a1, c + e + b d = a2
      for (int swap = 0; swap < 2; ++swap) {
        mpz_class C = swap ? e : cc, E = swap ? cc : e;
        if (C == E) {
          // b + d = a3, C (b + d) = a1, b d = a2 - 2C
          if (C * a[3] != a[1]) continue;
          mpz_class prod = a[2] - 2 * C;
          mpz_class disc = a[3] * a[3] - 4 * prod;
          if (disc < 0) continue;
          mpz_class r = sqrt(disc);
          if (r * r == disc && (a[3] + r) % 2 == 0) return false;
        } else {
          // C d + E b = a1 with d = a3 - b  => b (E - C) = a1 - C a3
          mpz_class num = a[1] - C * a[3], den = E - C;
          if (num % den != 0) continue;
          mpz_class b = num / den, d = a[3] - b;
          if (C + E + b * d == a[2]) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace novikov
