#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "novikov/caa.hpp"
#include "novikov/catalog.hpp"
#include "novikov/iso.hpp"

namespace novikov {

enum class CheckStatus { pass, fail, undecided };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::undecided: return "UNDECIDED";
  }
  return "?";
}

struct CheckResult {
  std::string scope;
  std::string group;  // axioms, claim, convention, caa
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

inline const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> s = {"dim3", "dim4-nilpotent-lie", "caa"};
  return s;
}

struct VerifyOptions {
  std::set<std::string> scopes;  // empty: all
  std::optional<Field> field;    // restricts claims, conventions and CAA lists
  std::size_t budget = default_budget;
  std::size_t convention_pairs = 4;  // per family
};

struct VerifyReport {
  std::vector<CheckResult> results;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.status == s; }));
  }
  bool all_passed() const { return count(CheckStatus::pass) == results.size(); }

  std::string str() const {
    std::string s;
    for (const auto& r : results) {
      s += std::string(status_name(r.status)) + " " + r.scope + " " + r.group + " " + r.id;
      if (!r.detail.empty()) s += ": " + r.detail;
      s += "\n";
    }
    s += "summary: " + std::to_string(count(CheckStatus::pass)) + " pass, " + std::to_string(count(CheckStatus::fail)) +
         " fail, " + std::to_string(count(CheckStatus::undecided)) + " undecided\n";
    return s;
  }
};

inline std::string entry_scope(const CatalogEntry& e) {
  if (e.lie == "abelian") return "caa";
  return e.table.dim() == 4 ? "dim4-nilpotent-lie" : "dim3";
}

namespace detail {

inline std::string violation_str(const Violation& v) {
  return std::string(v.axiom == Violation::left_symmetry ? "left symmetry" : "right commutativity") + " at (e" +
         std::to_string(v.i + 1) + ",e" + std::to_string(v.j + 1) + ",e" + std::to_string(v.k + 1) + ")";
}

inline std::string verdict_detail(const IsoVerdict& v) {
  if (const auto* n = std::get_if<NotIsomorphic>(&v)) return std::string(kind_name(n->kind)) + ", " + n->evidence;
  if (const auto* u = std::get_if<Undecided>(&v)) return u->reason;
  return "witness verified";
}

inline std::string sample_tag(const std::optional<Rational>& s) { return s ? "[s=" + s->str() + "]" : ""; }

}  // namespace detail

/// Axioms and the declared Lie algebra, symbolically in the parameters.
inline CheckResult verify_entry(const CatalogEntry& e) {
  CheckResult r{entry_scope(e), "axioms", e.id, CheckStatus::pass, ""};
  NovikovReport rep = check_novikov(e.table);
  if (!rep.ok()) {
    r.status = CheckStatus::fail;
    r.detail = "fails " + detail::violation_str(rep.failing.front());
    return r;
  }
  LieTable got = associated_lie(e.table);
  LieTable want = declared_lie(e);
  if (!(got.table.to_ring(e.table.ring()) == want.table)) {
    r.status = CheckStatus::fail;
    r.detail = "commutator table differs from " + e.lie;
    return r;
  }
  r.detail = "Novikov, Lie algebra " + e.lie;
  if (e.printed) {
    NovikovReport p = check_novikov(*e.printed);
    r.detail += "; erratum: printed table " +
                (p.ok() ? std::string("also passes") : "fails " + detail::violation_str(p.failing.front()));
  }
  return r;
}

/// One result per sample value (or one for claims without samples).
inline std::vector<CheckResult> verify_claim(const IsoClaim& c, std::size_t budget = default_budget) {
  using K = IsoClaim::Kind;
  std::vector<CheckResult> out;
  auto exts = claim_exts(c);
  std::vector<std::optional<Rational>> samples;
  for (const auto& v : c.samples) samples.emplace_back(v);
  if (samples.empty()) samples.emplace_back(std::nullopt);
  for (const auto& s : samples) {
    CheckResult r{c.scope, "claim", c.id + detail::sample_tag(s), CheckStatus::pass, ""};
    try {
      StructureConstants A = resolve_ref(c.a, exts, s, c.field);
      StructureConstants B = resolve_ref(c.b, exts, s, c.field);
      switch (c.kind) {
        case K::witness: {
          ExplicitMap m = parse_map(c.map, A.dim());
          if (!verify_witness(A, B, m)) {
            r.status = CheckStatus::fail;
            r.detail = "map is not a homomorphism";
          } else if (!verify_witness(B, A, invert_map(m))) {
            r.status = CheckStatus::fail;
            r.detail = "inverse map is not a homomorphism";
          } else {
            r.detail = "map and inverse verified";
          }
          break;
        }
        case K::iso:
        case K::non_iso: {
          IsoVerdict v = decide_iso(A, B, c.field, IsoOptions{budget});
          bool want_iso = c.kind == K::iso;
          if (std::holds_alternative<Undecided>(v)) r.status = CheckStatus::undecided;
          else if (std::holds_alternative<Isomorphic>(v) != want_iso) r.status = CheckStatus::fail;
          r.detail = verdict_name(v) + " (" + detail::verdict_detail(v) + ")";
          break;
        }
        case K::relation: {
          std::vector<Polynomial> got = relate_families(A, B, budget);
          std::vector<std::string> got_s, want_s;
          for (const auto& g : got) got_s.push_back(g.monic().str());
          if (!got.empty()) {
            for (const auto& w : detail::split_on(c.relation, ';'))
              want_s.push_back(parse_polynomial(w, got.front().ring()).monic().str());
          }
          std::sort(got_s.begin(), got_s.end());
          std::sort(want_s.begin(), want_s.end());
          std::string shown;
          for (const auto& g : got_s) shown += (shown.empty() ? "" : "; ") + g;
          r.detail = "{" + shown + "}";
          if (got.empty() || got_s != want_s) {
            r.status = CheckStatus::fail;
            r.detail += ", expected {" + c.relation + "}";
          }
          break;
        }
        case K::same_table: {
          RingPtr R = merge_rings(*A.ring(), *B.ring());
          if (!(A.to_ring(R) == B.to_ring(R))) {
            r.status = CheckStatus::fail;
            r.detail = "tables differ";
          } else {
            r.detail = "tables equal";
          }
          break;
        }
      }
    } catch (const Error& e) {
      r.status = e.code() == Errc::budget_exhausted ? CheckStatus::undecided : CheckStatus::fail;
      r.detail = std::string(errc_name(e.code())) + ": " + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Distinct grid values of an unremarked family must give non-isomorphic
/// algebras; consecutive allowed grid values are paired.
inline std::vector<CheckResult> verify_convention(const ConventionFamily& f, std::size_t pairs,
                                                  std::size_t budget = default_budget) {
  const CatalogEntry& e = catalog_entry(f.entry);
  std::vector<Rational> grid = allowed_samples(e, f.param);
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i + 1 < grid.size() && out.size() < pairs; ++i) {
    std::map<std::string, Rational> va, vb;
    for (const auto& [k, v] : f.fixed) va[k] = vb[k] = Rational::parse(v);
    va[f.param] = grid[i];
    vb[f.param] = grid[i + 1];
    std::string id = f.entry + "[" + f.param + "=" + grid[i].str() + " vs " + grid[i + 1].str() + "]";
    CheckResult r{entry_scope(e), "convention", id, CheckStatus::pass, ""};
    StructureConstants A = specialize(e.table, va), B = specialize(e.table, vb);
    A.set_field(e.field);
    B.set_field(e.field);
    IsoVerdict v = decide_iso(A, B, e.field, IsoOptions{budget});
    if (std::holds_alternative<Isomorphic>(v)) r.status = CheckStatus::fail;
    else if (std::holds_alternative<Undecided>(v)) r.status = CheckStatus::undecided;
    r.detail = verdict_name(v) + " (" + detail::verdict_detail(v) + ")";
    out.push_back(std::move(r));
  }
  return out;
}

inline std::size_t expected_caa_count(std::size_t n, Field f) {
  if (n == 3) return f == Field::C ? 12 : 15;
  if (n == 4 && f == Field::C) return 30;
  throw Error(Errc::unsupported_dim, "no reference count for this dimension and field");
}

/// Pairwise distinctness of a CAA list. Fingerprint separations are
/// summarized in one line; every other pair gets its own line.
inline std::vector<CheckResult> verify_caa_distinct(const std::vector<CAASpec>& list, Field field,
                                                    const std::string& tag, std::size_t budget = default_budget) {
  std::vector<CheckResult> out;
  std::size_t by_fp = 0, total = 0;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      ++total;
      IsoVerdict v = decide_iso(list[i].table, list[j].table, field, IsoOptions{budget});
      const auto* n = std::get_if<NotIsomorphic>(&v);
      if (n && n->kind == NotIsomorphic::invariant_mismatch) {
        ++by_fp;
        continue;
      }
      CheckResult r{"caa", "caa", tag + " " + list[i].name + " vs " + list[j].name, CheckStatus::pass, ""};
      if (std::holds_alternative<Isomorphic>(v)) r.status = CheckStatus::fail;
      else if (std::holds_alternative<Undecided>(v)) r.status = CheckStatus::undecided;
      r.detail = verdict_name(v) + " (" + (n ? std::string(kind_name(n->kind)) : detail::verdict_detail(v)) + ")";
      out.push_back(std::move(r));
    }
  out.insert(out.begin(), CheckResult{"caa", "caa", tag + " pairs", CheckStatus::pass,
                                      std::to_string(total) + " pairs, " + std::to_string(by_fp) +
                                          " separated by fingerprint, " + std::to_string(total - by_fp) +
                                          " by Groebner basis or certificate"});
  return out;
}

/// Matches the dimension-4 list against the Table 9 rows by decide_iso.
inline std::vector<CheckResult> verify_caa_table9(const std::vector<CAASpec>& list, std::size_t budget = default_budget) {
  std::vector<CheckResult> out;
  std::vector<const CatalogEntry*> rows;
  for (const auto& e : catalog())
    if (e.table_label == "Table 9") rows.push_back(&e);
  std::map<std::string, std::size_t> hits;
  for (const auto& spec : list) {
    CheckResult r{"caa", "caa", "caa4-C match " + spec.name, CheckStatus::pass, ""};
    std::vector<std::string> found;
    bool undecided = false;
    for (const auto* row : rows) {
      StructureConstants t = row->table;
      t.set_field(Field::C);
      IsoVerdict v = decide_iso(spec.table, t, Field::C, IsoOptions{budget});
      if (std::holds_alternative<Isomorphic>(v)) found.push_back(row->name);
      if (std::holds_alternative<Undecided>(v)) undecided = true;
    }
    for (const auto& f : found) ++hits[f];
    if (found.size() != 1) {
      r.status = undecided && found.empty() ? CheckStatus::undecided : CheckStatus::fail;
      r.detail = std::to_string(found.size()) + " isomorphic rows";
    } else {
      r.detail = "row " + found.front();
      if (found.front() != spec.name) r.detail += " (row label differs)";
    }
    out.push_back(std::move(r));
  }
  CheckResult b{"caa", "caa", "caa4-C bijection", CheckStatus::pass, ""};
  std::size_t covered = 0;
  for (const auto* row : rows)
    if (hits[row->name] == 1) ++covered;
  b.detail = std::to_string(covered) + " of " + std::to_string(rows.size()) + " rows hit exactly once";
  if (covered != rows.size() || list.size() != rows.size()) b.status = CheckStatus::fail;
  out.push_back(std::move(b));
  return out;
}

inline std::vector<CheckResult> verify_caa(std::size_t n, Field field, std::size_t budget = default_budget) {
  std::vector<CheckResult> out;
  std::string tag = "caa" + std::to_string(n) + "-" + field_name(field);
  std::vector<CAASpec> list = build_caa_list(n, field);
  std::size_t want = expected_caa_count(n, field);
  out.push_back({"caa", "caa", tag + " count", list.size() == want ? CheckStatus::pass : CheckStatus::fail,
                 std::to_string(list.size()) + " classes, expected " + std::to_string(want)});
  std::size_t bad = 0;
  for (const auto& s : list)
    if (!is_commutative_associative(s.table)) ++bad;
  out.push_back({"caa", "caa", tag + " commutative-associative", bad ? CheckStatus::fail : CheckStatus::pass,
                 std::to_string(list.size() - bad) + " of " + std::to_string(list.size())});
  auto d = verify_caa_distinct(list, field, tag, budget);
  out.insert(out.end(), d.begin(), d.end());
  if (n == 4) {
    auto m = verify_caa_table9(list, budget);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

inline VerifyReport verify_catalog(const VerifyOptions& opt = {}) {
  for (const auto& s : opt.scopes)
    if (std::find(verify_scopes().begin(), verify_scopes().end(), s) == verify_scopes().end())
      throw Error(Errc::precondition, "unknown scope '" + s + "'");
  auto in_scope = [&](const std::string& s) { return opt.scopes.empty() || opt.scopes.count(s) > 0; };
  auto in_field = [&](Field f) { return !opt.field || *opt.field == f; };
  VerifyReport rep;
  for (const auto& e : catalog())
    if (in_scope(entry_scope(e))) rep.results.push_back(verify_entry(e));
  for (const auto& c : iso_claims()) {
    if (!in_scope(c.scope) || !in_field(c.field)) continue;
    auto rs = verify_claim(c, opt.budget);
    rep.results.insert(rep.results.end(), rs.begin(), rs.end());
  }
  for (const auto& f : convention_families()) {
    const CatalogEntry& e = catalog_entry(f.entry);
    if (!in_scope(entry_scope(e)) || !in_field(e.field)) continue;
    auto rs = verify_convention(f, opt.convention_pairs, opt.budget);
    rep.results.insert(rep.results.end(), rs.begin(), rs.end());
  }
  if (in_scope("caa")) {
    for (auto [n, f] : {std::pair<std::size_t, Field>{3, Field::C}, {3, Field::R}, {4, Field::C}}) {
      if (!in_field(f)) continue;
      auto rs = verify_caa(n, f, opt.budget);
      rep.results.insert(rep.results.end(), rs.begin(), rs.end());
    }
  }
  return rep;
}

}  // namespace novikov
