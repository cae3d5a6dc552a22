#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/polynomial.hpp"

namespace novikov {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw Error(Errc::dimension_mismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error(Errc::dimension_mismatch, "row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols_ != y.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
    RatMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      s += r ? ", [" : "[";
      for (std::size_t c = 0; c < cols_; ++c) s += (c ? ", " : "") + (*this)(r, c).str();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination over Q; pivots are
/// the first nonzero column of each row.
inline RrefResult rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Fraction-free (Bareiss) elimination on the integer-scaled rows, then
/// normalization to the reduced echelon form. Independent of `rref`.
inline RrefResult bareiss_rref(const RatMatrix& in) {
  std::size_t R = in.rows(), C = in.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < C; ++c) l = lcm(l, in(r, c).denominator());
    for (std::size_t c = 0; c < C; ++c) {
      mpq_class v = in(r, c).value() * l;
      a[r][c] = v.get_num();
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && a[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = row + 1; r < R; ++r) {
      for (std::size_t c = col + 1; c < C; ++c) {
        a[r][c] = a[row][col] * a[r][c] - a[r][col] * a[row][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    pivots.push_back(col);
    ++row;
  }
  // back substitution on the echelon form
  RatMatrix m(R, C);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < C; ++c) m(r, c) = Rational(a[r][c], mpz_class(1));
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t pc = pivots[k];
    Rational inv = m(k, pc).inverse();
    for (std::size_t c = 0; c < C; ++c) m(k, c) *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (m(r, pc).is_zero()) continue;
      Rational f = m(r, pc);
      for (std::size_t c = 0; c < C; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column, in column order.
inline std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = Rational(1);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::dimension_mismatch, "determinant of a non-square matrix");
  Rational det(1);
  std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Rational inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::dimension_mismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return RatMatrix(0, 0);
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Rational(1);
  }
  RrefResult rr = rref(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

/// Square matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t n) : ring_(std::move(ring)), n_(n), a_(n * n, Polynomial(ring_)) {}

  static PolyMatrix identity(RingPtr ring, std::size_t n) {
    PolyMatrix m(ring, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, Rational(1));
    return m;
  }
  static PolyMatrix from_rational(RingPtr ring, const RatMatrix& r) {
    if (r.rows() != r.cols()) throw Error(Errc::dimension_mismatch, "polynomial matrices are square");
    PolyMatrix m(ring, r.rows());
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) m(i, j) = Polynomial::constant(ring, r(i, j));
    return m;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return n_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    check(x, y);
    PolyMatrix r(x.ring_, x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t j = 0; j < x.n_; ++j) {
        Polynomial s(x.ring_);
        for (std::size_t k = 0; k < x.n_; ++k)
          if (!x(i, k).is_zero() && !y(k, j).is_zero()) s += x(i, k) * y(k, j);
        r(i, j) = std::move(s);
      }
    return r;
  }
  friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
    check(x, y);
    PolyMatrix r(x.ring_, x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    check(x, y);
    PolyMatrix r(x.ring_, x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend PolyMatrix operator*(const PolyMatrix& x, const Rational& c) {
    PolyMatrix r = x;
    for (auto& e : r.a_) e = e * c;
    return r;
  }
  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  PolyMatrix to_ring(const RingPtr& target) const {
    PolyMatrix r(target, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].to_ring(target);
    return r;
  }

  Polynomial trace() const {
    Polynomial s(ring_);
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  /// Laplace expansion along the first row (sizes here are at most 4).
  Polynomial determinant() const { return det_rec(*this); }

  PolyMatrix adjugate() const {
    PolyMatrix adj(ring_, n_);
    if (n_ == 1) {
      adj(0, 0) = Polynomial::constant(ring_, Rational(1));
      return adj;
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Polynomial minor = det_rec(without(*this, j, i));
        adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
      }
    return adj;
  }

 private:
  static void check(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.n_ != y.n_) throw Error(Errc::dimension_mismatch, "matrix sizes differ");
    if (!same_ring(x.ring_, y.ring_)) throw Error(Errc::ring_mismatch, "matrices over different rings");
  }
  static PolyMatrix without(const PolyMatrix& m, std::size_t row, std::size_t col) {
    PolyMatrix r(m.ring_, m.n_ - 1);
    for (std::size_t i = 0, ri = 0; i < m.n_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, rj = 0; j < m.n_; ++j) {
        if (j == col) continue;
        r(ri, rj++) = m(i, j);
      }
      ++ri;
    }
    return r;
  }
  static Polynomial det_rec(const PolyMatrix& m) {
    if (m.n_ == 0) return Polynomial::constant(m.ring_, Rational(1));
    if (m.n_ == 1) return m(0, 0);
    Polynomial s(m.ring_);
    for (std::size_t j = 0; j < m.n_; ++j) {
      if (m(0, j).is_zero()) continue;
      Polynomial t = m(0, j) * det_rec(without(m, 0, j));
      s = (j % 2 == 0) ? s + t : s - t;
    }
    return s;
  }

  RingPtr ring_;
  std::size_t n_ = 0;
  std::vector<Polynomial> a_;
};

}  // namespace novikov
