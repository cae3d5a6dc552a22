#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

#include "novikov/error.hpp"

namespace novikov {

using Exponent = std::uint16_t;

/// Exponent vector over a fixed number of ring variables.
///
/// Keeps the total degree and a 64-bit support mask alongside the exponents so
/// that divisibility tests can reject most candidates without touching the
/// vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  Monomial(std::initializer_list<unsigned> exps) {
    exps_.reserve(exps.size());
    for (unsigned e : exps) exps_.push_back(checked(e));
    refresh();
  }

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  std::uint64_t support_mask() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    exps_[i] = checked(e);
    refresh();
  }

  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1) {
    Monomial m(arity);
    m.set(index, power);
    return m;
  }

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    same_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.exps_[i] = checked(unsigned(a.exps_[i]) + b.exps_[i]);
    r.refresh();
    return r;
  }

  /// Exact quotient; `b` must divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    same_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.exps_[i] = Exponent(a.exps_[i] - b.exps_[i]);
    r.refresh();
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    same_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.refresh();
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    if ((a.mask_ & b.mask_) == 0 && a.arity() <= 64) return true;
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.mask_ == b.mask_ && a.exps_ == b.exps_;
  }

  /// Plain lexicographic comparison of raw exponent vectors (index order);
  /// only for use as a container key, not a monomial order.
  friend bool raw_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                        b.exps_.end());
  }

 private:
  static Exponent checked(unsigned e) {
    if (e > std::numeric_limits<Exponent>::max())
      throw Error(Errc::arity_mismatch, "exponent overflow");
    return Exponent(e);
  }
  static void same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw Error(Errc::arity_mismatch, "monomials of different arity");
  }
  void refresh() {
    degree_ = 0;
    mask_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      degree_ += exps_[i];
      if (exps_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
    }
  }

  boost::container::small_vector<Exponent, 24> exps_;
  std::uint32_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

enum class OrderStyle { lex, grevlex, block_elimination };

/// Monomial order over ring variables. `ranking[0]` is the largest variable.
/// Block elimination compares the first `split` ranked variables
/// lexicographically and breaks ties with grevlex on the rest.
struct MonomialOrder {
  OrderStyle style = OrderStyle::grevlex;
  std::vector<std::size_t> ranking;
  std::size_t split = 0;

  static MonomialOrder identity(OrderStyle style, std::size_t arity, std::size_t split = 0) {
    MonomialOrder o;
    o.style = style;
    o.split = split;
    o.ranking.resize(arity);
    for (std::size_t i = 0; i < arity; ++i) o.ranking[i] = i;
    return o;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != ranking.size() || b.arity() != ranking.size())
      throw Error(Errc::arity_mismatch, "monomial arity does not match the order");
    switch (style) {
      case OrderStyle::lex:
        return lex_range(a, b, 0, ranking.size());
      case OrderStyle::grevlex:
        return grevlex_range(a, b, 0, ranking.size(), a.degree(), b.degree());
      case OrderStyle::block_elimination: {
        auto c = lex_range(a, b, 0, split);
        if (c != 0) return c;
        std::uint32_t da = 0, db = 0;
        for (std::size_t r = split; r < ranking.size(); ++r) {
          da += a[ranking[r]];
          db += b[ranking[r]];
        }
        return grevlex_range(a, b, split, ranking.size(), da, db);
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t from,
                                 std::size_t to) const {
    for (std::size_t r = from; r < to; ++r) {
      std::size_t v = ranking[r];
      if (a[v] != b[v]) return a[v] > b[v] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t from,
                                     std::size_t to, std::uint32_t da, std::uint32_t db) const {
    if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
    for (std::size_t r = to; r-- > from;) {
      std::size_t v = ranking[r];
      if (a[v] != b[v]) return a[v] < b[v] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
};

/// Free-function form used by tests and the CLI.
inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                              const MonomialOrder& order) {
  return order.compare(a, b);
}

}  // namespace novikov
