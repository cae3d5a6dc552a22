#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/groebner.hpp"
#include "novikov/solve.hpp"

namespace novikov {

inline std::string map_var_name(std::size_t row, std::size_t col) {
  return "x" + std::to_string(row + 1) + std::to_string(col + 1);
}

/// Ring D > x11 > x12 > ... > xnn > parameters > extension generators.
inline RingPtr iso_ring(std::size_t n, const Ring& coeffs, OrderStyle style = OrderStyle::grevlex) {
  std::vector<Variable> vars{{"D", VarKind::det_inverse}};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) vars.push_back({map_var_name(r, c), VarKind::map_entry});
  std::size_t base = vars.size();
  std::vector<FieldExt> exts;
  std::vector<std::size_t> params, gens;
  for (std::size_t v = 0; v < coeffs.arity(); ++v) {
    const Variable& var = coeffs.variable(v);
    for (std::size_t w = 0; w < base; ++w)
      if (vars[w].name == var.name)
        throw Error(Errc::invalid_ring, "parameter name '" + var.name + "' collides with a map variable");
    if (const FieldExt* e = coeffs.extension_for(v)) exts.push_back({vars.size(), e->minimal_polynomial});
    (var.kind == VarKind::extension_generator ? gens : params).push_back(vars.size());
    vars.push_back(var);
  }
  MonomialOrder ord = MonomialOrder::identity(style, 0);
  for (std::size_t v = 0; v < base; ++v) ord.ranking.push_back(v);
  for (std::size_t v : params) ord.ranking.push_back(v);
  for (std::size_t v : gens) ord.ranking.push_back(v);
  return Ring::make(std::move(vars), std::move(ord), std::move(exts));
}

struct GenericMap {
  PolyMatrix entries;  // entries(l, i) = x_li, column i is the image of e_i
  Polynomial det_inverse;
  Polynomial constraint;  // D det - 1
};

struct IsoSystem {
  StructureConstants source, target;
  GenericMap map;
  Ideal ideal;
  std::vector<std::string> param_vars;
};

/// Equations of a homomorphism phi: A -> B, phi(x .A y) = phi(x) .B phi(y),
/// on basis pairs, together with D det(phi) - 1 and the extension minimal
/// polynomials (adjoined by the basis computation).
inline IsoSystem build_iso_system(const StructureConstants& A, const StructureConstants& B,
                                  OrderStyle style = OrderStyle::grevlex) {
  if (A.dim() != B.dim()) throw Error(Errc::dimension_mismatch, "algebras of different dimension");
  std::size_t n = A.dim();
  RingPtr coeffs = merge_rings(*A.ring(), *B.ring());
  RingPtr R = iso_ring(n, *coeffs, style);
  StructureConstants a = A.to_ring(R), b = B.to_ring(R);
  GenericMap map{PolyMatrix(R, n), Polynomial::variable(R, "D"), Polynomial(R)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) map.entries(r, c) = Polynomial::variable(R, map_var_name(r, c));
  map.constraint = map.det_inverse * map.entries.determinant() - Polynomial::constant(R, Rational(1));

  std::vector<Polynomial> gens;
  auto add = [&](Polynomial p) {
    if (p.is_zero()) return;
    for (const auto& q : gens)
      if (q == p || q == -p) return;
    gens.push_back(std::move(p));
  };
  const PolyMatrix& X = map.entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Polynomial e(R);
        for (std::size_t k = 0; k < n; ++k)
          if (!a.at(i, j, k).is_zero()) e += a.at(i, j, k) * X(l, k);
        for (std::size_t p = 0; p < n; ++p) {
          if (X(p, i).is_zero()) continue;
          for (std::size_t q = 0; q < n; ++q)
            if (!b.at(p, q, l).is_zero()) e -= X(p, i) * X(q, j) * b.at(p, q, l);
        }
        add(std::move(e));
      }
  add(map.constraint);
  IsoSystem sys{a, b, std::move(map), Ideal::make(R, std::move(gens)), {}};
  for (const auto& v : coeffs->variables())
    if (v.kind == VarKind::parameter) sys.param_vars.push_back(v.name);
  return sys;
}

/// Structure constants of phi theta, phi theta(x, y) = phi^-1(theta(phi x, phi y)),
/// entries reduced modulo `relations` (e.g. D det - 1). The product
/// phi phi_inv must reduce to the identity.
inline StructureConstants apply_automorphism(const StructureConstants& theta, const PolyMatrix& phi,
                                             const PolyMatrix& phi_inv,
                                             const std::vector<Polynomial>& relations = {}) {
  std::size_t n = theta.dim();
  if (phi.size() != n || phi_inv.size() != n) throw Error(Errc::dimension_mismatch, "map size differs from dim");
  RingPtr R = phi.ring();
  bool contains = true;
  for (const auto& v : theta.ring()->variables())
    if (!R->index_of(v.name)) contains = false;
  if (!contains) R = merge_rings(*R, *theta.ring());
  PolyMatrix P = phi.to_ring(R), Q = phi_inv.to_ring(R);
  StructureConstants t = theta.to_ring(R);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(r.to_ring(R));
  std::optional<GroebnerBasis> gb;
  if (!rels.empty()) {
    gb = buchberger(Ideal::make(R, rels));
    if (!gb->complete) throw Error(Errc::budget_exhausted, "relations basis exceeded the budget");
  }
  auto nf = [&](const Polynomial& p) { return gb ? reduce(p, *gb).to_ring(R) : p; };
  PolyMatrix PQ = P * Q;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Polynomial e = nf(PQ(r, c));
      Polynomial want = Polynomial::constant(R, Rational(r == c ? 1 : 0));
      if (!(e == want)) throw Error(Errc::inverse_check_failed, "phi * phi_inv is not the identity");
    }
  StructureConstants out(n, R, theta.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // theta(phi e_i, phi e_j)
      Vec pi, pj;
      for (std::size_t r = 0; r < n; ++r) pi.push_back(P(r, i)), pj.push_back(P(r, j));
      Vec v = multiply(t, pi, pj);
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial s(R);
        for (std::size_t m = 0; m < n; ++m)
          if (!v[m].is_zero() && !Q(k, m).is_zero()) s += Q(k, m) * v[m];
        out.set(i, j, k, nf(s));
      }
    }
  return out;
}

/// Generators of phi theta1 = theta2 for a symbolic phi: nonzero,
/// deduplicated entry differences followed by the relations.
inline std::vector<Polynomial> action_system(const StructureConstants& theta1, const StructureConstants& theta2,
                                             const PolyMatrix& phi, const PolyMatrix& phi_inv,
                                             const std::vector<Polynomial>& relations) {
  StructureConstants moved = apply_automorphism(theta1, phi, phi_inv, relations);
  const RingPtr& R = moved.ring();
  StructureConstants t2 = theta2.to_ring(R);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < moved.dim(); ++i)
    for (std::size_t j = 0; j < moved.dim(); ++j)
      for (std::size_t k = 0; k < moved.dim(); ++k) {
        Polynomial d = moved.at(i, j, k) - t2.at(i, j, k);
        if (d.is_zero()) continue;
        bool dup = false;
        for (const auto& q : out) dup = dup || q == d;
        if (!dup) out.push_back(std::move(d));
      }
  for (const auto& r : relations) out.push_back(r.to_ring(R));
  return out;
}

/// Linear map given by its matrix in the column convention (column i holds
/// the image of e_i), entries in Q or a declared extension.
struct ExplicitMap {
  PolyMatrix matrix;

  std::string str(const std::string& src = "e", const std::string& dst = "y") const {
    std::string s;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      Vec col;
      for (std::size_t l = 0; l < matrix.size(); ++l) col.push_back(matrix(l, i));
      s += src + std::to_string(i + 1) + " -> " + combination_str(col, dst) + "\n";
    }
    return s;
  }
};

/// Inverse of an element of Q(t) given as a polynomial in the generator
/// (extended Euclid against the minimal polynomial).
inline Polynomial field_inverse(const Polynomial& x) {
  const RingPtr& R = x.ring();
  if (x.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  if (x.is_constant()) return Polynomial::constant(R, x.constant_value().inverse());
  auto used = x.variables_used();
  if (used.size() != 1 || !R->extension_for(used[0]))
    throw Error(Errc::precondition, "field inverse needs a constant of a simple extension");
  std::size_t t = used[0];
  UPoly m = R->extension_for(t)->minimal_polynomial;
  // s a + u m = gcd = 1
  UPoly r0 = m, r1 = x.to_upoly(t), s0, s1 = UPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = UPoly::divmod(r0, r1);
    UPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw Error(Errc::precondition, "element is a zero divisor");
  return Polynomial::from_upoly(R, t, s0) * r0.leading().inverse();
}

/// Inverse map over the coefficient field (adjugate / determinant).
inline ExplicitMap invert_map(const ExplicitMap& m) {
  Polynomial det = m.matrix.determinant();
  Polynomial inv = field_inverse(det);
  PolyMatrix adj = m.matrix.adjugate();
  PolyMatrix r(m.matrix.ring(), m.matrix.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r(i, j) = adj(i, j) * inv;
  return {r};
}

/// det(m) != 0 and m(x .A y) = m(x) .B m(y) on all basis pairs, exactly.
inline bool verify_witness(const StructureConstants& A, const StructureConstants& B, const ExplicitMap& m) {
  std::size_t n = A.dim();
  if (B.dim() != n || m.matrix.size() != n) return false;
  RingPtr R = merge_rings(*merge_rings(*A.ring(), *B.ring()), *m.matrix.ring());
  StructureConstants a = A.to_ring(R), b = B.to_ring(R);
  PolyMatrix M = m.matrix.to_ring(R);
  if (M.determinant().is_zero()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec mi, mj;
      for (std::size_t r = 0; r < n; ++r) mi.push_back(M(r, i)), mj.push_back(M(r, j));
      Vec rhs = multiply(b, mi, mj);
      for (std::size_t l = 0; l < n; ++l) {
        Polynomial lhs(R);
        for (std::size_t k = 0; k < n; ++k)
          if (!a.at(i, j, k).is_zero()) lhs += a.at(i, j, k) * M(l, k);
        if (!(lhs == rhs[l])) return false;
      }
    }
  return true;
}

struct Isomorphic {
  ExplicitMap map;  // source -> target
};

struct NotIsomorphic {
  enum Kind { gb_trivial, real_certificate, invariant_mismatch } kind;
  std::string evidence;
  std::optional<GroebnerBasis> basis;
  std::optional<RealRootCertificate> certificate;
  std::optional<std::pair<Fingerprint, Fingerprint>> fingerprints;
};

struct Undecided {
  std::string reason;
  std::vector<Polynomial> basis;  // partial or complete basis reached
  std::size_t steps_used = 0;
  std::size_t budget = 0;
  std::optional<ExplicitMap> complex_witness;  // real mode: a witness found over C
};

using IsoVerdict = std::variant<Isomorphic, NotIsomorphic, Undecided>;

inline const char* kind_name(NotIsomorphic::Kind k) {
  switch (k) {
    case NotIsomorphic::gb_trivial: return "gb-trivial";
    case NotIsomorphic::real_certificate: return "real-certificate";
    case NotIsomorphic::invariant_mismatch: return "invariant-mismatch";
  }
  return "unknown";
}

struct IsoOptions {
  std::size_t budget = default_budget;
  std::size_t max_nodes = 1000;
};

namespace detail {

inline std::optional<ExplicitMap> witness_from(const IsoSystem& sys, const GroebnerBasis& gb, Field field,
                                               const IsoOptions& opt, bool& exhausted) {
  std::size_t n = sys.source.dim();
  PointOptions po;
  po.field = field;
  po.budget = opt.budget;
  po.max_nodes = opt.max_nodes;
  po.pin_last = {"D"};
  for (std::size_t i = 0; i < n; ++i) po.prefer_one.push_back(map_var_name(i, i));
  // columns of basis vectors outside A^2 first: they generate the source
  if (sys.source.is_rational()) {
    RatMatrix sq(0, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sq.append_row(rational_vec(sys.source.product(i, j)));
    std::size_t r0 = sq.rows() ? rank(sq) : 0;
    std::vector<std::size_t> cols, rest;
    for (std::size_t c = 0; c < n; ++c) {
      RatMatrix ext = sq;
      std::vector<Rational> e(n);
      e[c] = Rational(1);
      ext.append_row(e);
      (rank(ext) > r0 ? cols : rest).push_back(c);
    }
    cols.insert(cols.end(), rest.begin(), rest.end());
    for (std::size_t c : cols)
      for (std::size_t r = 0; r < n; ++r) po.pin_order.push_back(map_var_name(r, c));
  }
  const RingPtr& R = sys.ideal.ring;
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis) {
    Polynomial h = g.to_ring(R);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  Ideal I = Ideal::make(R, std::move(gens));
  std::optional<Point> found;
  exhausted = false;
  // pin strategies tried in turn; each gets its own node limit
  for (auto [pure, broaden] : {std::pair{true, false}, std::pair{true, true}, std::pair{false, false}}) {
    po.pin_pure = pure;
    po.broaden = broaden;
    PointSearch ps = find_point(I, po);
    exhausted = exhausted || ps.exhausted;
    if (ps.point) {
      found = std::move(ps.point);
      break;
    }
  }
  if (!found) return std::nullopt;
  const Point& pt = *found;
  ExplicitMap m{PolyMatrix(pt.field_ring, n)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      auto it = pt.values.find(map_var_name(r, c));
      if (it == pt.values.end()) return std::nullopt;
      m.matrix(r, c) = it->second;
    }
  return m;
}

}  // namespace detail

/// Decides A ~ B over the given field. Pipeline: invariant prefilter,
/// identical tables, basis of the isomorphism ideal ({1} means no solution
/// over any extension), real certificate (real mode), witness extraction
/// with exact verification; everything else is Undecided.
inline IsoVerdict decide_iso(const StructureConstants& A, const StructureConstants& B, Field field,
                             IsoOptions opt = {}) {
  if (A.has_parameters() || B.has_parameters())
    throw Error(Errc::symbolic_parameters, "instantiate parameters before deciding isomorphism");
  if (A.dim() != B.dim()) throw Error(Errc::dimension_mismatch, "algebras of different dimension");
  if (A.is_rational() && B.is_rational()) {
    Fingerprint fa = algebra_invariants(A), fb = algebra_invariants(B);
    if (!(fa == fb)) {
      NotIsomorphic v{NotIsomorphic::invariant_mismatch, fa.first_difference(fb) + ": " + fa.str() + " vs " + fb.str(),
                      std::nullopt, std::nullopt, std::make_pair(fa, fb)};
      return v;
    }
  }
  if (A == B) {
    RingPtr R = merge_rings(*A.ring(), *B.ring());
    return Isomorphic{ExplicitMap{PolyMatrix::identity(R, A.dim())}};
  }
  IsoSystem sys = build_iso_system(A, B);
  GroebnerBasis gb = buchberger(sys.ideal, opt.budget);
  if (!gb.complete)
    return Undecided{"budget exhausted computing the isomorphism basis", gb.basis, gb.steps_used, gb.budget, {}};
  if (is_trivial(gb))
    return NotIsomorphic{NotIsomorphic::gb_trivial, "reduced Groebner basis is {1}", gb, std::nullopt, std::nullopt};
  if (field == Field::R) {
    if (auto cert = real_nonsolvability(gb, opt.budget))
      return NotIsomorphic{NotIsomorphic::real_certificate, certificate_str(*cert), gb, cert, std::nullopt};
  }
  bool exhausted = false;
  auto w = detail::witness_from(sys, gb, field, opt, exhausted);
  if (w && verify_witness(A, B, *w)) return Isomorphic{*w};
  Undecided u{w ? "extracted witness failed verification"
                : (exhausted ? "witness search exhausted its budget" : "no witness found"),
              gb.basis, gb.steps_used, gb.budget, {}};
  if (field == Field::R) {
    // lex basis gives the univariate scan another chance
    IsoSystem lex = build_iso_system(A, B, OrderStyle::lex);
    GroebnerBasis lgb = buchberger(lex.ideal, opt.budget);
    if (lgb.complete && !is_trivial(lgb))
      if (auto cert = real_nonsolvability(lgb, opt.budget))
        return NotIsomorphic{NotIsomorphic::real_certificate, certificate_str(*cert), lgb, cert, std::nullopt};
    bool ex2 = false;
    auto cw = detail::witness_from(sys, gb, Field::C, opt, ex2);
    if (cw && verify_witness(A, B, *cw)) {
      u.complex_witness = cw;
      u.reason = "isomorphic over C; no real witness or real certificate found";
    }
  }
  return u;
}

/// Necessary conditions on the parameters for A ~ B: the elimination ideal
/// of the isomorphism system onto the parameters. Empty means no constraint
/// was found.
inline std::vector<Polynomial> relate_families(const StructureConstants& A, const StructureConstants& B,
                                               std::size_t budget = default_budget) {
  std::set<std::string> pa;
  for (const auto& p : A.parameters()) pa.insert(p);
  for (const auto& p : B.parameters())
    if (pa.count(p)) throw Error(Errc::precondition, "families share the parameter name '" + p + "'");
  IsoSystem sys = build_iso_system(A, B);
  return eliminate(sys.ideal, sys.param_vars, budget);
}

inline std::string verdict_name(const IsoVerdict& v) {
  if (std::holds_alternative<Isomorphic>(v)) return "isomorphic";
  if (std::holds_alternative<NotIsomorphic>(v)) return "not-isomorphic";
  return "undecided";
}

}  // namespace novikov
