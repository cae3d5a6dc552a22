#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/catalog_data.hpp"
#include "novikov/io.hpp"
#include "novikov/iso.hpp"

namespace novikov {

inline constexpr int catalog_version = 1;

struct CatalogEntry {
  std::string id;
  std::string name;
  std::string table_label;
  std::string lie;  // Lie algebra id or "abelian"
  std::map<std::string, std::string> lie_args;
  Field field = Field::R;
  std::vector<std::string> params;
  std::vector<std::map<std::string, Rational>> excluded;
  std::string note;
  StructureConstants table;
  std::optional<StructureConstants> printed;  // the table as printed, when an erratum applies
};

namespace detail {

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
  return out;
}

inline std::map<std::string, std::string> parse_assignments(const std::string& s) {
  std::map<std::string, std::string> out;
  for (const auto& part : split_on(s, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error(Errc::parse_error, "expected 'name = value' in '" + part + "'");
    out[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
  }
  return out;
}

/// Algebra-file text for a row; symmetric rows get mirrored products.
inline std::string row_text(const std::string& field, int dim, const std::string& params, bool symmetric,
                            const std::string& products) {
  std::string s = "field " + field + "\ndim " + std::to_string(dim) + "\n";
  if (!trim(params).empty()) s += "param " + params + "\n";
  for (const auto& p : split_on(products, ';')) {
    s += p + "\n";
    if (!symmetric) continue;
    auto eq = p.find('=');
    std::string lhs = trim(p.substr(0, eq));
    auto star = lhs.find('*');
    std::string a = trim(lhs.substr(0, star)), b = trim(lhs.substr(star + 1));
    if (a != b) s += b + "*" + a + " = " + trim(p.substr(eq + 1)) + "\n";
  }
  return s;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& r : data::entry_rows) {
    CatalogEntry e;
    e.id = r.id;
    e.name = r.name;
    e.table_label = r.table;
    e.lie = r.lie;
    e.lie_args = parse_assignments(r.lie_args);
    e.field = parse_field(r.field);
    e.params = split_ws(r.params);
    for (const auto& ex : split_on(r.excluded, ';')) {
      auto a = parse_assignments(ex);
      std::map<std::string, Rational> v;
      for (const auto& [k, val] : a) v[k] = Rational::parse(val);
      e.excluded.push_back(std::move(v));
    }
    e.note = r.note;
    e.table = parse_algebra(row_text(r.field, r.dim, r.params, r.symmetric, r.products));
    if (*r.printed) e.printed = parse_algebra(row_text(r.field, r.dim, r.params, r.symmetric, r.printed));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id || e.name == id) return e;
  throw Error(Errc::unknown_variable, "no catalog entry '" + id + "'");
}

inline std::vector<std::string> lie_ids() {
  std::vector<std::string> out;
  for (const auto& r : data::lie_rows) out.push_back(r.id);
  return out;
}

/// Lie algebra by id; "abelian" needs the dimension.
inline LieTable lie_algebra(const std::string& id, std::size_t dim = 0) {
  if (id == "abelian") return LieTable::make(StructureConstants(dim, coefficient_ring({})));
  for (const auto& r : data::lie_rows) {
    if (id != r.id) continue;
    StructureConstants t = parse_algebra(detail::row_text("C", r.dim, r.params, false, r.brackets));
    StructureConstants full = t;
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        for (std::size_t k = 0; k < t.dim(); ++k) full.set(i, j, k, -t.at(j, i, k));
    return LieTable::make(std::move(full));
  }
  throw Error(Errc::unknown_variable, "no Lie algebra '" + id + "'");
}

/// Replaces parameters by polynomial text. The result lives over the
/// remaining parameters, `new_params`, and `exts` (plus the table's own
/// extensions).
inline StructureConstants specialize(const StructureConstants& A, const std::map<std::string, std::string>& values,
                                     const std::vector<std::pair<std::string, UPoly>>& exts = {},
                                     const std::vector<std::string>& new_params = {}) {
  const Ring& src = *A.ring();
  std::vector<std::string> params;
  std::vector<std::pair<std::string, UPoly>> all_exts;
  for (std::size_t v = 0; v < src.arity(); ++v) {
    const auto& var = src.variable(v);
    if (const FieldExt* e = src.extension_for(v)) all_exts.emplace_back(var.name, e->minimal_polynomial);
    else if (!values.count(var.name)) params.push_back(var.name);
  }
  for (const auto& p : new_params)
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  for (const auto& e : exts)
    if (std::none_of(all_exts.begin(), all_exts.end(), [&](const auto& x) { return x.first == e.first; }))
      all_exts.push_back(e);
  RingPtr target = coefficient_ring(params, all_exts);
  std::map<std::string, Polynomial> assign;
  for (const auto& [name, text] : values) {
    if (!src.index_of(name)) throw Error(Errc::unknown_variable, "table has no parameter '" + name + "'");
    assign.emplace(name, parse_polynomial(text, target));
  }
  StructureConstants out(A.dim(), target, A.field());
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (std::size_t k = 0; k < A.dim(); ++k) out.set(i, j, k, A.at(i, j, k).substitute(assign, target));
  return out;
}

inline StructureConstants specialize(const StructureConstants& A, const std::map<std::string, Rational>& values) {
  std::map<std::string, std::string> text;
  for (const auto& [k, v] : values) text[k] = v.str();
  return specialize(A, text);
}

/// The declared Lie algebra of an entry, in the entry's coefficient ring.
inline LieTable declared_lie(const CatalogEntry& e) {
  LieTable g = lie_algebra(e.lie, e.table.dim());
  const RingPtr& R = e.table.ring();
  std::map<std::string, Polynomial> assign;
  for (const auto& [name, text] : e.lie_args) assign.emplace(name, parse_polynomial(text, R));
  StructureConstants t(g.dim(), R, e.field);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) t.set(i, j, k, g.at(i, j, k).substitute(assign, R));
  return LieTable{std::move(t)};
}

/// Reference to a catalog table at parameter values given as text in the
/// sample symbol `s` and the claim's extension generators. Ids starting
/// with "lie:" name Lie algebras.
struct AlgebraRef {
  std::string entry;
  std::map<std::string, std::string> args;
};

struct IsoClaim {
  enum class Kind { witness, iso, non_iso, relation, same_table };
  std::string id;
  Kind kind = Kind::iso;
  std::string description;
  std::string scope;  // dim3, dim4-nilpotent-lie or caa
  AlgebraRef a, b;
  Field field = Field::C;
  std::vector<std::pair<std::string, std::string>> exts;  // generator, minimal polynomial
  std::string map;                                        // witness, map-file text
  std::vector<Rational> samples;                          // values of s
  std::string relation;                                   // expected generators, ';' separated
};

inline const char* claim_kind_name(IsoClaim::Kind k) {
  switch (k) {
    case IsoClaim::Kind::witness: return "iso-with-witness";
    case IsoClaim::Kind::iso: return "iso";
    case IsoClaim::Kind::non_iso: return "non-iso";
    case IsoClaim::Kind::relation: return "family-relation";
    case IsoClaim::Kind::same_table: return "same-table";
  }
  return "unknown";
}

inline std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

inline const std::vector<IsoClaim>& iso_claims() {
  using K = IsoClaim::Kind;
  static const std::vector<IsoClaim> claims = [] {
    std::vector<IsoClaim> c;
    c.push_back({"caa3_A34_A35_C", K::iso, "A3_4 and A3_5 are isomorphic over C", "caa", {"A3_4", {}},
                 {"A3_5", {}}, Field::C, {}, "", {}, ""});
    c.push_back({"caa3_A34_A35_R", K::non_iso, "A3_4 and A3_5 are not isomorphic over R", "caa", {"A3_4", {}},
                 {"A3_5", {}}, Field::R, {}, "", {}, ""});
    c.push_back({"lie_g4_g5_C", K::iso, "g4 and g5 are isomorphic over C", "dim3", {"lie:g4", {}}, {"lie:g5", {}},
                 Field::C, {}, "", {}, ""});
    c.push_back({"lie_g4_g5_R", K::non_iso, "g4 and g5 are not isomorphic over R", "dim3", {"lie:g4", {}},
                 {"lie:g5", {}}, Field::R, {}, "", {}, ""});
    c.push_back({"t4_sqrtm2_witness", K::witness, "N^g2(-2/9)_5(-2/9) -> N^g2(-2/9)_7 over Q(sqrt(-2))", "dim3",
                 {"g2m_N5", {{"a", "-2/9"}}}, {"g2m_N7", {}}, Field::C, {{"sqrtm2", "sqrtm2^2 + 2"}},
                 "ext sqrtm2 : sqrtm2^2 + 2\n"
                 "e1 -> y1 + (-2/9 - 1/9 sqrtm2) y2\n"
                 "e2 -> (1/2 - sqrtm2) y2 + (-3/2 + 3/2 sqrtm2) y3\n"
                 "e3 -> (1/3 - 1/3 sqrtm2) y2 + (-1 + 1/2 sqrtm2) y3\n",
                 {}, ""});
    c.push_back({"t4_real", K::non_iso, "N^g2(-2/9)_5(-2/9) and N^g2(-2/9)_7 are not isomorphic over R", "dim3",
                 {"g2m_N5", {{"a", "-2/9"}}}, {"g2m_N7", {}}, Field::R, {}, "", {}, ""});
    c.push_back({"t4_two_extra", K::non_iso, "N^g2(a^2+a)_2(-1/3) and N^g2(a^2+a)_2(-2/3) are not isomorphic",
                 "dim3", {"g2_N2", {{"a", "-1/3"}}}, {"g2_N2", {{"a", "-2/3"}}}, Field::R, {}, "", {}, ""});
    c.push_back({"t5_n8_zero", K::same_table, "N^g2(0)_8(0) is N^g2(0)_1(0)", "dim3", {"g20_N8", {{"a", "0"}}},
                 {"g2_N1", {{"alpha", "0"}, {"a", "0"}}}, Field::R, {}, "", {}, ""});
    c.push_back({"t7_g4_sign", K::witness, "N^g4_1(a) -> N^g4_1(-a)", "dim3", {"g4_N1", {{"a", "s"}}},
                 {"g4_N1", {{"a", "-s"}}}, Field::R, {}, "e1 -> -y1\ne2 -> y2\ne3 -> -y3\n",
                 rationals({"1", "2"}), ""});
    c.push_back({"t7_g4_relation", K::relation, "N^g4_1(a) ~ N^g4_1(b) forces a^2 = b^2", "dim3",
                 {"g4_N1", {}}, {"g4_N1", {{"a", "b"}}}, Field::C, {}, "", {}, "a^2 - b^2"});
    c.push_back({"t8_g5_g4", K::witness, "N^g4_1(ia) -> N^g5_1(a), x1 = i e1, x2 = e2, x3 = i e3", "dim3",
                 {"g4_N1", {{"a", "i s"}}}, {"g5_N1", {{"a", "s"}}}, Field::C, {{"i", "i^2 + 1"}},
                 "ext i : i^2 + 1\ne1 -> i y1\ne2 -> y2\ne3 -> i y3\n", rationals({"1", "2"}), ""});
    c.push_back({"t8_g5_sign", K::iso, "N^g5_1(a) ~ N^g5_1(-a)", "dim3", {"g5_N1", {{"a", "s"}}},
                 {"g5_N1", {{"a", "-s"}}}, Field::R, {}, "", rationals({"1", "2"}), ""});
    c.push_back({"t8_g5_relation", K::relation, "N^g5_1(a) ~ N^g5_1(b) forces a^2 = b^2", "dim3",
                 {"g5_N1", {}}, {"g5_N1", {{"a", "b"}}}, Field::C, {}, "", {}, "a^2 - b^2"});
    for (const char* n : {"h1_N1", "h1_N10"}) {
      std::string id = n;
      c.push_back({id + "_swap", K::witness, id + "(alpha) -> " + id + "(-alpha-1)", "dim4-nilpotent-lie", {id, {{"alpha", "s"}}},
                   {id, {{"alpha", "-s-1"}}}, Field::C, {}, "e1 -> -y2\ne2 -> y1\ne3 -> y3\ne4 -> y4\n",
                   rationals({"0", "1", "2", "1/2"}), ""});
      c.push_back({id + "_relation", K::relation, id + "(alpha) ~ " + id + "(beta) forces (alpha-beta)(alpha+beta+1) = 0",
                   "dim4-nilpotent-lie", {id, {}}, {id, {{"alpha", "beta"}}}, Field::C, {}, "", {},
                   "alpha^2 + alpha - beta^2 - beta"});
    }
    c.push_back({"h1_N10_spot", K::non_iso, "N^h1_10(0) and N^h1_10(1) are not isomorphic", "dim4-nilpotent-lie",
                 {"h1_N10", {{"alpha", "0"}}}, {"h1_N10", {{"alpha", "1"}}}, Field::C, {}, "", {}, ""});
    return c;
  }();
  return claims;
}

/// Parametrized families without a remark: distinct parameter values are
/// claimed to give non-isomorphic algebras.
struct ConventionFamily {
  std::string entry;
  std::string param;
  std::map<std::string, std::string> fixed;
};

inline const std::vector<ConventionFamily>& convention_families() {
  static const std::vector<ConventionFamily> f = {
      {"g1_N1", "a", {}},         {"g2_N1", "a", {{"alpha", "1"}}}, {"g2_N2", "a", {}},
      {"g2m_N5", "a", {}},        {"g20_N8", "a", {}},              {"g20_N10", "a", {}},
      {"g3_N1", "a", {}},         {"g3_N2", "a", {}},
  };
  return f;
}

inline std::vector<Rational> sample_grid() { return rationals({"-2", "-1", "-1/2", "0", "1/2", "1", "2"}); }

/// Grid values allowed for an entry's parameter (excluded values removed).
inline std::vector<Rational> allowed_samples(const CatalogEntry& e, const std::string& param) {
  std::vector<Rational> out;
  for (const auto& v : sample_grid()) {
    bool bad = false;
    for (const auto& ex : e.excluded) {
      auto it = ex.find(param);
      if (it != ex.end() && it->second == v && ex.size() == 1) bad = true;
    }
    if (!bad) out.push_back(v);
  }
  return out;
}

/// Instantiates a reference at sample value s (if given).
inline StructureConstants resolve_ref(const AlgebraRef& ref, const std::vector<std::pair<std::string, UPoly>>& exts,
                                      std::optional<Rational> s, Field field) {
  StructureConstants base;
  if (ref.entry.rfind("lie:", 0) == 0) base = lie_algebra(ref.entry.substr(4)).table;
  else base = catalog_entry(ref.entry).table;
  base.set_field(field);
  std::map<std::string, std::string> args = ref.args;
  if (s) {
    RingPtr sr = coefficient_ring({"s"}, exts);
    RingPtr plain = coefficient_ring({}, exts);
    for (auto& [k, text] : args) {
      Polynomial p = parse_polynomial(text, sr).substitute(std::map<std::string, Rational>{{"s", *s}});
      text = "(" + p.to_ring(plain).str() + ")";
    }
  }
  std::vector<std::string> fresh;
  for (const auto& [k, text] : args)
    for (const auto& id : identifiers_in(text)) {
      bool is_ext = std::any_of(exts.begin(), exts.end(), [&](const auto& e) { return e.first == id; });
      if (!is_ext && !base.ring()->index_of(id)) fresh.push_back(id);
    }
  return specialize(base, args, exts, fresh);
}

inline std::vector<std::pair<std::string, UPoly>> claim_exts(const IsoClaim& c) {
  std::vector<std::pair<std::string, UPoly>> out;
  for (const auto& [g, m] : c.exts) out.emplace_back(g, parse_upoly(m, g));
  return out;
}

/// Manifest text: one block per entry and per claim.
inline std::string catalog_manifest() {
  std::string s = "# novikov catalog manifest\nversion " + std::to_string(catalog_version) + "\n\n";
  for (const auto& e : catalog()) {
    s += "entry " + e.id + "\n";
    s += "  name " + e.name + "\n";
    s += "  file " + e.id + ".alg\n";
    s += "  table " + e.table_label + "\n";
    s += "  lie " + e.lie;
    for (const auto& [k, v] : e.lie_args) s += " " + k + "=" + v;
    s += "\n  field " + std::string(field_name(e.field)) + "\n";
    if (!e.params.empty()) {
      s += "  params";
      for (const auto& p : e.params) s += " " + p;
      s += "\n";
    }
    for (const auto& ex : e.excluded) {
      s += "  exclude";
      for (const auto& [k, v] : ex) s += " " + k + "=" + v.str();
      s += "\n";
    }
    if (!e.note.empty()) s += "  note " + e.note + "\n";
    s += "\n";
  }
  auto ref_str = [](const AlgebraRef& r) {
    std::string t = r.entry;
    if (!r.args.empty()) {
      t += "(";
      bool first = true;
      for (const auto& [k, v] : r.args) {
        t += (first ? "" : ", ") + k + "=" + v;
        first = false;
      }
      t += ")";
    }
    return t;
  };
  for (const auto& c : iso_claims()) {
    s += "claim " + c.id + "\n";
    s += "  kind " + std::string(claim_kind_name(c.kind)) + "\n";
    s += "  says " + c.description + "\n";
    s += "  source " + ref_str(c.a) + "\n  target " + ref_str(c.b) + "\n";
    s += "  field " + std::string(field_name(c.field)) + "\n";
    for (const auto& [g, m] : c.exts) s += "  ext " + g + " : " + m + "\n";
    if (!c.samples.empty()) {
      s += "  samples s =";
      for (const auto& v : c.samples) s += " " + v.str();
      s += "\n";
    }
    if (!c.map.empty()) {
      std::string m = c.map;
      std::size_t pos = 0;
      while (pos < m.size()) {
        auto nl = m.find('\n', pos);
        std::string line = m.substr(pos, nl - pos);
        if (line.find("->") != std::string::npos) s += "  map " + line + "\n";
        if (nl == std::string::npos) break;
        pos = nl + 1;
      }
    }
    if (!c.relation.empty()) s += "  relation " + c.relation + "\n";
    s += "\n";
  }
  return s;
}

}  // namespace novikov
