#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "novikov/monomial.hpp"
#include "novikov/upoly.hpp"

namespace novikov {

enum class VarKind { map_entry, det_inverse, parameter, extension_generator };

inline int kind_rank(VarKind k) {
  switch (k) {
    case VarKind::map_entry: return 0;
    case VarKind::det_inverse: return 1;
    case VarKind::parameter: return 2;
    case VarKind::extension_generator: return 3;
  }
  return 4;
}

struct Variable {
  std::string name;
  VarKind kind = VarKind::parameter;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Simple algebraic extension Q(t), t a root of `minimal_polynomial`.
struct FieldExt {
  std::size_t generator = 0;  // ring variable index
  UPoly minimal_polynomial;   // monic, degree >= 2, irreducible
  friend bool operator==(const FieldExt&, const FieldExt&) = default;
};

inline bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variables, a monomial order on them, and optional field extensions whose
/// generators are reduced modulo their minimal polynomials.
class Ring {
 public:
  static RingPtr make(std::vector<Variable> vars, MonomialOrder order, std::vector<FieldExt> exts = {}) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->vars_ = std::move(vars);
    r->order_ = std::move(order);
    r->exts_ = std::move(exts);
    r->validate();
    for (std::size_t i = 0; i < r->vars_.size(); ++i) r->index_[r->vars_[i].name] = i;
    return r;
  }

  /// Ranking: map entries, det inverse, parameters, extension generators,
  /// declaration order inside each kind.
  static MonomialOrder default_order(const std::vector<Variable>& vars, OrderStyle style = OrderStyle::grevlex) {
    MonomialOrder o = MonomialOrder::identity(style, vars.size());
    std::stable_sort(o.ranking.begin(), o.ranking.end(), [&](std::size_t a, std::size_t b) {
      return kind_rank(vars[a].kind) < kind_rank(vars[b].kind);
    });
    return o;
  }

  static RingPtr make_default(std::vector<Variable> vars, std::vector<FieldExt> exts = {},
                              OrderStyle style = OrderStyle::grevlex) {
    MonomialOrder o = default_order(vars, style);
    return make(std::move(vars), std::move(o), std::move(exts));
  }

  std::size_t arity() const { return vars_.size(); }
  const std::vector<Variable>& variables() const { return vars_; }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<FieldExt>& extensions() const { return exts_; }
  bool has_extensions() const { return !exts_.empty(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw Error(Errc::unknown_variable, "unknown variable '" + name + "'");
    return *i;
  }

  const FieldExt* extension_for(std::size_t var) const {
    for (const auto& e : exts_)
      if (e.generator == var) return &e;
    return nullptr;
  }

  RingPtr with_order(MonomialOrder order) const { return make(vars_, std::move(order), exts_); }

  /// Same variables and order, extension semantics dropped.
  RingPtr flattened() const { return make(vars_, order_, {}); }

  /// Variables ranked by this ring's order, largest first.
  std::vector<std::string> ranked_names() const {
    std::vector<std::string> out;
    for (std::size_t v : order_.ranking) out.push_back(vars_[v].name);
    return out;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.exts_ == b.exts_;
  }

 private:
  Ring() = default;

  void validate() const {
    std::vector<std::string> names;
    for (const auto& v : vars_) {
      if (!valid_identifier(v.name))
        throw Error(Errc::invalid_ring, "invalid variable name '" + v.name + "'");
      names.push_back(v.name);
    }
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw Error(Errc::invalid_ring, "duplicate variable names");
    std::vector<std::size_t> perm = order_.ranking;
    std::sort(perm.begin(), perm.end());
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i || perm.size() != vars_.size())
        throw Error(Errc::invalid_ring, "ranking is not a permutation of the ring variables");
    if (perm.size() != vars_.size())
      throw Error(Errc::invalid_ring, "ranking is not a permutation of the ring variables");
    if (order_.style == OrderStyle::block_elimination && order_.split > vars_.size())
      throw Error(Errc::invalid_ring, "block split exceeds the number of variables");
    for (const auto& e : exts_) {
      if (e.generator >= vars_.size() || vars_[e.generator].kind != VarKind::extension_generator)
        throw Error(Errc::invalid_ring, "extension generator must be an extension-generator variable");
      const auto& m = e.minimal_polynomial;
      if (m.degree() < 2 || !m.leading().is_one())
        throw Error(Errc::invalid_ring, "minimal polynomial must be monic of degree >= 2");
      if (!is_irreducible_small(m))
        throw Error(Errc::invalid_ring, "minimal polynomial " + m.str(vars_[e.generator].name) +
                                            " is reducible over Q");
    }
  }

  std::vector<Variable> vars_;
  MonomialOrder order_;
  std::vector<FieldExt> exts_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

/// Ring over the union of the variables of `a` and `b` (first `a`'s, then
/// new ones of `b`), default ranking by kind, extensions merged by name.
inline RingPtr merge_rings(const Ring& a, const Ring& b, OrderStyle style = OrderStyle::grevlex) {
  std::vector<Variable> vars = a.variables();
  for (const auto& v : b.variables()) {
    auto it = std::find_if(vars.begin(), vars.end(), [&](const Variable& w) { return w.name == v.name; });
    if (it == vars.end()) vars.push_back(v);
    else if (it->kind != v.kind)
      throw Error(Errc::ring_mismatch, "variable '" + v.name + "' declared with two kinds");
  }
  std::vector<FieldExt> exts;
  auto add_ext = [&](const Ring& r, const FieldExt& e) {
    const std::string& name = r.variable(e.generator).name;
    std::size_t idx = 0;
    while (vars[idx].name != name) ++idx;
    for (const auto& x : exts)
      if (x.generator == idx) {
        if (!(x.minimal_polynomial == e.minimal_polynomial))
          throw Error(Errc::ring_mismatch, "extension '" + name + "' with two minimal polynomials");
        return;
      }
    exts.push_back(FieldExt{idx, e.minimal_polynomial});
  };
  for (const auto& e : a.extensions()) add_ext(a, e);
  for (const auto& e : b.extensions()) add_ext(b, e);
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].kind == VarKind::extension_generator &&
        std::none_of(exts.begin(), exts.end(), [&](const FieldExt& e) { return e.generator == i; }))
      throw Error(Errc::invalid_ring, "extension generator '" + vars[i].name + "' without minimal polynomial");
  return Ring::make_default(std::move(vars), std::move(exts), style);
}

}  // namespace novikov
