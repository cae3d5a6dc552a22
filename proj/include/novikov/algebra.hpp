#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/linalg.hpp"
#include "novikov/polynomial.hpp"

namespace novikov {

enum class Field { R, C };

inline const char* field_name(Field f) { return f == Field::R ? "R" : "C"; }

inline Field parse_field(const std::string& s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  throw Error(Errc::parse_error, "field must be R or C, got '" + s + "'");
}

/// Coefficient ring holding parameters and extension generators, grevlex.
inline RingPtr coefficient_ring(const std::vector<std::string>& params,
                                const std::vector<std::pair<std::string, UPoly>>& exts = {}) {
  std::vector<Variable> vars;
  for (const auto& p : params) vars.push_back({p, VarKind::parameter});
  std::vector<FieldExt> fe;
  for (const auto& [name, mp] : exts) {
    fe.push_back({vars.size(), mp});
    vars.push_back({name, VarKind::extension_generator});
  }
  return Ring::make_default(std::move(vars), std::move(fe));
}

/// Multiplication table e_i e_j = sum_k c_ij^k e_k, entries polynomials in the
/// coefficient ring (parameters and extension generators). Indices are 0-based.
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(std::size_t dim, RingPtr ring, Field field = Field::C)
      : n_(dim), ring_(std::move(ring)), field_(field), c_(dim * dim * dim, Polynomial(ring_)) {}

  std::size_t dim() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  Field field() const { return field_; }
  void set_field(Field f) { field_ = f; }

  const Polynomial& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[idx(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, Polynomial p) {
    if (!same_ring(p.ring(), ring_)) p = p.to_ring(ring_);
    c_[idx(i, j, k)] = std::move(p);
  }
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& r) {
    c_[idx(i, j, k)] = Polynomial::constant(ring_, r);
  }

  /// Coordinates of e_i e_j.
  std::vector<Polynomial> product(std::size_t i, std::size_t j) const {
    std::vector<Polynomial> v;
    for (std::size_t k = 0; k < n_; ++k) v.push_back(at(i, j, k));
    return v;
  }

  std::vector<std::string> parameters() const {
    std::vector<std::string> out;
    for (const auto& v : ring_->variables())
      if (v.kind == VarKind::parameter) out.push_back(v.name);
    return out;
  }

  /// True if some entry involves a parameter.
  bool has_parameters() const {
    for (const auto& p : c_)
      for (std::size_t v : p.variables_used())
        if (ring_->variable(v).kind == VarKind::parameter) return true;
    return false;
  }
  /// True if every entry is a rational constant.
  bool is_rational() const {
    for (const auto& p : c_)
      if (!p.is_constant()) return false;
    return true;
  }

  StructureConstants to_ring(const RingPtr& target) const {
    StructureConstants r(n_, target, field_);
    for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = c_[t].to_ring(target);
    return r;
  }

  /// Substitutes parameter values; the substituted parameters leave the ring.
  StructureConstants instantiate(const std::map<std::string, Rational>& values) const {
    std::vector<Variable> keep;
    std::vector<FieldExt> exts;
    for (std::size_t v = 0; v < ring_->arity(); ++v) {
      const auto& var = ring_->variable(v);
      if (values.count(var.name)) continue;
      if (const FieldExt* e = ring_->extension_for(v)) exts.push_back({keep.size(), e->minimal_polynomial});
      keep.push_back(var);
    }
    for (const auto& [name, _] : values)
      if (!ring_->index_of(name)) throw Error(Errc::unknown_variable, "unknown parameter '" + name + "'");
    RingPtr target = Ring::make_default(std::move(keep), std::move(exts));
    std::map<std::string, Polynomial> assign;
    for (const auto& [name, val] : values) assign.emplace(name, Polynomial::constant(target, val));
    StructureConstants r(n_, target, field_);
    for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = c_[t].substitute(assign, target);
    return r;
  }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t t = 0; t < a.c_.size(); ++t) {
      const auto& x = a.c_[t];
      const auto& y = b.c_[t];
      if (same_ring(x.ring(), y.ring())) {
        if (!(x == y)) return false;
      } else if (x.str() != y.str()) {
        return false;
      }
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& p : c_)
      if (!p.is_zero()) return false;
    return true;
  }

 private:
  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n_ || j >= n_ || k >= n_) throw Error(Errc::index_out_of_range, "structure constant index out of range");
    return (i * n_ + j) * n_ + k;
  }

  std::size_t n_ = 0;
  RingPtr ring_;
  Field field_ = Field::C;
  std::vector<Polynomial> c_;
};

using Vec = std::vector<Polynomial>;

inline Vec zero_vec(const RingPtr& ring, std::size_t n) { return Vec(n, Polynomial(ring)); }

inline Vec basis_vec(const RingPtr& ring, std::size_t n, std::size_t i) {
  Vec v = zero_vec(ring, n);
  v.at(i) = Polynomial::constant(ring, Rational(1));
  return v;
}

/// Bilinear product of coordinate vectors.
inline Vec multiply(const StructureConstants& A, const Vec& x, const Vec& y) {
  std::size_t n = A.dim();
  if (x.size() != n || y.size() != n) throw Error(Errc::dimension_mismatch, "vector length differs from dim");
  Vec out = zero_vec(A.ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Polynomial xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!A.at(i, j, k).is_zero()) out[k] += xy * A.at(i, j, k);
    }
  }
  return out;
}

/// Text of sum_k c[k] <prefix>(k+1), e.g. "(a + 1) e3 - 1/2 e1"; "0" if empty.
inline std::string combination_str(const Vec& c, const std::string& prefix) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    std::string b = prefix + std::to_string(k + 1);
    std::string coef = c[k].str();
    bool neg = false;
    std::string term;
    if (c[k].size() == 1) {
      if (coef[0] == '-') neg = true, coef = coef.substr(1);
      term = coef == "1" ? b : coef + " " + b;
    } else {
      term = "(" + coef + ") " + b;
    }
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

struct Violation {
  enum Axiom { left_symmetry, right_commutativity } axiom;
  std::size_t i, j, k;
};

struct NovikovReport {
  bool left_symmetric = true;
  bool right_commutative = true;
  std::vector<Violation> failing;
  bool ok() const { return left_symmetric && right_commutative; }
};

/// Both axioms on all basis triples, symbolically in the parameters.
inline NovikovReport check_novikov(const StructureConstants& A) {
  std::size_t n = A.dim();
  const RingPtr& R = A.ring();
  // products[i][j] = e_i e_j
  std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i][j] = A.product(i, j);
  auto left = [&](std::size_t i, const Vec& v) { return multiply(A, basis_vec(R, n, i), v); };
  auto right = [&](const Vec& v, std::size_t k) { return multiply(A, v, basis_vec(R, n, k)); };
  NovikovReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // x(yz) - (xy)z - y(xz) + (yx)z
        Vec ls = vec_sub(vec_sub(left(i, prod[j][k]), right(prod[i][j], k)),
                         vec_sub(left(j, prod[i][k]), right(prod[j][i], k)));
        if (!is_zero_vec(ls)) {
          rep.left_symmetric = false;
          rep.failing.push_back({Violation::left_symmetry, i, j, k});
        }
        // (xy)z - (xz)y
        Vec rc = vec_sub(right(prod[i][j], k), right(prod[i][k], j));
        if (!is_zero_vec(rc)) {
          rep.right_commutative = false;
          rep.failing.push_back({Violation::right_commutativity, i, j, k});
        }
      }
  return rep;
}

/// Antisymmetric table satisfying the Jacobi identity.
struct LieTable {
  StructureConstants table;

  std::size_t dim() const { return table.dim(); }
  const Polynomial& at(std::size_t i, std::size_t j, std::size_t k) const { return table.at(i, j, k); }

  /// Validates antisymmetry and Jacobi.
  static LieTable make(StructureConstants t) {
    std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!(t.at(i, j, k) + t.at(j, i, k)).is_zero())
            throw Error(Errc::not_antisymmetric, "bracket is not antisymmetric at (" + std::to_string(i + 1) +
                                                     "," + std::to_string(j + 1) + ")");
    const RingPtr& R = t.ring();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          auto br = [&](std::size_t a, const Vec& v) { return multiply(t, basis_vec(R, n, a), v); };
          Vec s = br(i, t.product(j, k));
          Vec s2 = br(j, t.product(k, i));
          Vec s3 = br(k, t.product(i, j));
          for (std::size_t m = 0; m < n; ++m) s[m] += s2[m] + s3[m];
          if (!is_zero_vec(s))
            throw Error(Errc::jacobi_violation, "Jacobi identity fails on (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
    return LieTable{std::move(t)};
  }

  friend bool operator==(const LieTable& a, const LieTable& b) { return a.table == b.table; }
};

/// Commutator algebra [x, y] = xy - yx; throws jacobi-violation when the
/// input is not Lie-admissible.
inline LieTable associated_lie(const StructureConstants& A) {
  std::size_t n = A.dim();
  StructureConstants L(n, A.ring(), A.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) L.set(i, j, k, A.at(i, j, k) - A.at(j, i, k));
  return LieTable::make(std::move(L));
}

enum class MultKind { L, R, ad };

/// Matrices in the column convention: L_i(k, j) = c_ij^k, R_i(k, j) = c_ji^k,
/// ad = L - R.
inline PolyMatrix mult_matrix(const StructureConstants& A, MultKind which, std::size_t i) {
  std::size_t n = A.dim();
  if (i >= n) throw Error(Errc::index_out_of_range, "basis index out of range");
  PolyMatrix M(A.ring(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      switch (which) {
        case MultKind::L: M(k, j) = A.at(i, j, k); break;
        case MultKind::R: M(k, j) = A.at(j, i, k); break;
        case MultKind::ad: M(k, j) = A.at(i, j, k) - A.at(j, i, k); break;
      }
    }
  return M;
}

/// Matrix of a linear combination sum_i x_i M(e_i).
inline PolyMatrix mult_matrix(const StructureConstants& A, MultKind which, const Vec& x) {
  PolyMatrix M(A.ring(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (x[i].is_zero()) continue;
    PolyMatrix Mi = mult_matrix(A, which, i);
    for (std::size_t r = 0; r < A.dim(); ++r)
      for (std::size_t c = 0; c < A.dim(); ++c) M(r, c) += Mi(r, c) * x[i];
  }
  return M;
}

inline PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

inline PolyMatrix matrix_power(const PolyMatrix& m, std::size_t k) {
  PolyMatrix r = PolyMatrix::identity(m.ring(), m.size());
  for (std::size_t t = 0; t < k; ++t) r = r * m;
  return r;
}

/// R(x) nilpotent for every x. For Novikov algebras the R(e_i) commute, so
/// nilpotency of each R(e_i) suffices.
inline bool is_complete(const StructureConstants& A) {
  if (!check_novikov(A).ok()) throw Error(Errc::precondition, "completeness is defined for Novikov algebras");
  std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!matrix_power(mult_matrix(A, MultKind::R, i), n).is_zero()) return false;
  return true;
}

/// Characteristic polynomial coefficients of an n x n matrix by
/// Faddeev-LeVerrier: det(lambda I - M) = lambda^n + c[1] lambda^(n-1) + ... + c[n].
inline std::vector<Polynomial> char_poly(const PolyMatrix& M) {
  std::size_t n = M.size();
  std::vector<Polynomial> c(n + 1, Polynomial(M.ring()));
  c[0] = Polynomial::constant(M.ring(), Rational(1));
  PolyMatrix Mk(M.ring(), n);  // M_0 = 0
  PolyMatrix I = PolyMatrix::identity(M.ring(), n);
  for (std::size_t k = 1; k <= n; ++k) {
    PolyMatrix prev = Mk;
    for (std::size_t d = 0; d < n; ++d) prev(d, d) += c[k - 1];
    Mk = M * prev;
    c[k] = Mk.trace() * Rational(-1, static_cast<long>(k));
  }
  return c;
}

/// Completeness decided by the characteristic polynomial of R(sum t_i e_i)
/// with fresh symbols t_i: complete iff it equals lambda^n.
inline bool is_complete_generic(const StructureConstants& A) {
  std::size_t n = A.dim();
  std::vector<Variable> vars = A.ring()->variables();
  std::vector<FieldExt> exts = A.ring()->extensions();
  std::vector<std::string> ts;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "t" + std::to_string(i + 1);
    while (A.ring()->index_of(name)) name += "_";
    ts.push_back(name);
    vars.push_back({name, VarKind::map_entry});
  }
  RingPtr R = Ring::make_default(std::move(vars), std::move(exts));
  StructureConstants B = A.to_ring(R);
  Vec x;
  for (const auto& t : ts) x.push_back(Polynomial::variable(R, t));
  auto c = char_poly(mult_matrix(B, MultKind::R, x));
  for (std::size_t k = 1; k < c.size(); ++k)
    if (!c[k].is_zero()) return false;
  return true;
}

inline bool is_commutative(const StructureConstants& A) {
  std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(A.at(i, j, k) == A.at(j, i, k))) return false;
  return true;
}

inline bool is_associative(const StructureConstants& A) {
  std::size_t n = A.dim();
  const RingPtr& R = A.ring();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec a = multiply(A, A.product(i, j), basis_vec(R, n, k));
        Vec b = multiply(A, basis_vec(R, n, i), A.product(j, k));
        if (!is_zero_vec(vec_sub(a, b))) return false;
      }
  return true;
}

inline bool is_commutative_associative(const StructureConstants& A) {
  return is_commutative(A) && is_associative(A);
}

/// Basis-independent data used to separate non-isomorphic algebras.
struct Fingerprint {
  std::size_t dim_a2 = 0;
  std::size_t dim_a3 = 0;
  std::size_t dim_annihilator = 0;
  std::size_t dim_left_annihilator = 0;   // {x : xA = 0}
  std::size_t dim_right_annihilator = 0;  // {x : Ax = 0}
  bool commutative = false;
  bool associative = false;
  std::size_t trace_form_rank = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  /// Name of the first differing coordinate, empty if equal.
  std::string first_difference(const Fingerprint& o) const {
    if (dim_a2 != o.dim_a2) return "dim A^2";
    if (dim_a3 != o.dim_a3) return "dim A^3";
    if (dim_annihilator != o.dim_annihilator) return "dim Ann(A)";
    if (dim_left_annihilator != o.dim_left_annihilator) return "dim {x : xA = 0}";
    if (dim_right_annihilator != o.dim_right_annihilator) return "dim {x : Ax = 0}";
    if (commutative != o.commutative) return "commutative";
    if (associative != o.associative) return "associative";
    if (trace_form_rank != o.trace_form_rank) return "rank tr(L(x)L(y))";
    return "";
  }

  std::string str() const {
    auto b = [](bool v) { return v ? "true" : "false"; };
    return "(" + std::to_string(dim_a2) + ", " + std::to_string(dim_a3) + ", " + std::to_string(dim_annihilator) +
           ", " + std::to_string(dim_left_annihilator) + ", " + std::to_string(dim_right_annihilator) + ", " +
           b(commutative) + ", " + b(associative) + ", " + std::to_string(trace_form_rank) + ")";
  }
};

namespace detail {

inline std::vector<Rational> rational_vec(const Vec& v) {
  std::vector<Rational> out;
  for (const auto& p : v) out.push_back(p.constant_value());
  return out;
}

inline std::size_t span_dim(const std::vector<Vec>& vs, std::size_t n) {
  RatMatrix m(0, n);
  for (const auto& v : vs) m.append_row(rational_vec(v));
  return m.rows() == 0 ? 0 : rank(m);
}

}  // namespace detail

inline Fingerprint algebra_invariants(const StructureConstants& A) {
  if (!A.is_rational()) throw Error(Errc::symbolic_parameters, "fingerprint needs rational structure constants");
  std::size_t n = A.dim();
  const RingPtr& R = A.ring();
  Fingerprint f;
  std::vector<Vec> a2, a3;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a2.push_back(A.product(i, j));
  f.dim_a2 = detail::span_dim(a2, n);
  for (const auto& v : a2)
    for (std::size_t k = 0; k < n; ++k) {
      a3.push_back(multiply(A, v, basis_vec(R, n, k)));
      a3.push_back(multiply(A, basis_vec(R, n, k), v));
    }
  f.dim_a3 = detail::span_dim(a3, n);

  // x e_j = sum_m x_m c_mj^k ; e_j x = sum_m x_m c_jm^k
  RatMatrix left(0, n), right(0, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> rl(n), rr(n);
      for (std::size_t m = 0; m < n; ++m) {
        rl[m] = A.at(m, j, k).constant_value();
        rr[m] = A.at(j, m, k).constant_value();
      }
      left.append_row(rl);
      right.append_row(rr);
    }
  std::size_t rl = n == 0 ? 0 : rank(left), rr = n == 0 ? 0 : rank(right);
  f.dim_left_annihilator = n - rl;
  f.dim_right_annihilator = n - rr;
  RatMatrix both(0, n);
  for (std::size_t r = 0; r < left.rows(); ++r) {
    std::vector<Rational> a(n), b(n);
    for (std::size_t c = 0; c < n; ++c) a[c] = left(r, c), b[c] = right(r, c);
    both.append_row(a);
    both.append_row(b);
  }
  f.dim_annihilator = n - (n == 0 ? 0 : rank(both));
  f.commutative = is_commutative(A);
  f.associative = is_associative(A);

  std::vector<PolyMatrix> Ls;
  for (std::size_t i = 0; i < n; ++i) Ls.push_back(mult_matrix(A, MultKind::L, i));
  RatMatrix T(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) T(i, j) = (Ls[i] * Ls[j]).trace().constant_value();
  f.trace_form_rank = n == 0 ? 0 : rank(T);
  return f;
}

}  // namespace novikov
