#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes reports to `out`, diagnostics to `err`.
//
// Exit codes: 0 success or affirmative, 1 negative result, 2 undecided or
// budget exhausted, 3 input error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "novikov/novikov.hpp"

namespace novikov::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_undecided = 2;
inline constexpr int exit_input = 3;

namespace detail {

inline std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" + std::to_string(k + 1) + ")";
}

inline std::string bracket_table(const LieTable& g) {
  std::string s;
  std::size_t n = g.dim();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = g.table.product(i, j);
      if (is_zero_vec(v)) continue;
      any = true;
      s += "  [e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] = " + combination_str(v, "e") + "\n";
    }
  if (!any) s += "  (abelian)\n";
  return s;
}

inline std::string params_str(const StructureConstants& A) {
  std::string s;
  for (const auto& p : A.parameters()) s += (s.empty() ? "" : " ") + p;
  return s.empty() ? "none" : s;
}

/// Algebra file path, or a catalog id/name when no such file exists.
inline StructureConstants load_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_algebra(arg);
  for (const auto& e : catalog())
    if (e.id == arg || e.name == arg) return e.table;
  throw Error(Errc::io_error, "no file or catalog entry '" + arg + "'");
}

/// Lie table from a file or a catalog Lie id (r2, g1, ..., h2).
inline LieTable load_lie(const std::string& arg) {
  if (std::filesystem::exists(arg)) return LieTable::make(read_algebra(arg));
  auto ids = lie_ids();
  if (std::find(ids.begin(), ids.end(), arg) != ids.end()) return lie_algebra(arg);
  throw Error(Errc::io_error, "no file or Lie algebra id '" + arg + "'");
}

inline int verdict_exit(const IsoVerdict& v) {
  if (std::holds_alternative<Isomorphic>(v)) return exit_ok;
  if (std::holds_alternative<NotIsomorphic>(v)) return exit_negative;
  return exit_undecided;
}

inline std::string indent(const std::string& text, const std::string& pad = "  ") {
  std::string s;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    s += pad + text.substr(pos, nl - pos) + "\n";
    pos = nl + 1;
  }
  return s;
}

inline std::string map_block(const ExplicitMap& m) {
  std::string s;
  for (const auto& e : m.matrix.ring()->extensions())
    s += "  ext " + m.matrix.ring()->variable(e.generator).name + " : " + e.minimal_polynomial.str(
             m.matrix.ring()->variable(e.generator).name) + "\n";
  return s + indent(m.str());
}

inline std::string verdict_report(const IsoVerdict& v) {
  std::string s = "verdict: " + verdict_name(v) + "\n";
  if (const auto* iso = std::get_if<Isomorphic>(&v)) {
    s += "map (verified):\n" + map_block(iso->map);
  } else if (const auto* n = std::get_if<NotIsomorphic>(&v)) {
    s += "certificate: " + std::string(kind_name(n->kind)) + "\n";
    s += "evidence: " + n->evidence + "\n";
  } else {
    const auto& u = std::get<Undecided>(v);
    s += "reason: " + u.reason + "\n";
    s += "steps: " + std::to_string(u.steps_used) + " of " + std::to_string(u.budget) + "\n";
    if (u.complex_witness) s += "complex witness (verified):\n" + map_block(*u.complex_witness);
  }
  return s;
}

struct MapPair {
  PolyMatrix phi, phi_inv;
  std::vector<Polynomial> relations;
};

/// A map and its inverse; symbolic maps get a fresh D with D det - 1 as relation.
inline MapPair inverse_with_relations(const ExplicitMap& m) {
  Polynomial det = m.matrix.determinant();
  bool field_element = true;
  for (std::size_t v : det.variables_used())
    if (!det.ring()->extension_for(v)) field_element = false;
  if (field_element) return {m.matrix, invert_map(m).matrix, {}};
  const Ring& R = *m.matrix.ring();
  std::string d = "D";
  while (R.index_of(d)) d += "_";
  std::vector<std::string> params;
  std::vector<std::pair<std::string, UPoly>> exts;
  for (std::size_t v = 0; v < R.arity(); ++v) {
    if (const FieldExt* e = R.extension_for(v)) exts.emplace_back(R.variable(v).name, e->minimal_polynomial);
    else params.push_back(R.variable(v).name);
  }
  params.push_back(d);
  RingPtr S = coefficient_ring(params, exts);
  PolyMatrix P = m.matrix.to_ring(S);
  Polynomial D = Polynomial::variable(S, d);
  PolyMatrix inv = P.adjugate();
  for (std::size_t r = 0; r < inv.size(); ++r)
    for (std::size_t c = 0; c < inv.size(); ++c) inv(r, c) = inv(r, c) * D;
  return {P, inv, {D * det.to_ring(S) - Polynomial::constant(S, Rational(1))}};
}

// verbs

inline int cmd_check(const std::string& path, std::ostream& out) {
  StructureConstants A = load_algebra(path);
  out << "dim: " << A.dim() << "\nfield: " << field_name(A.field()) << "\nparameters: " << params_str(A) << "\n";
  NovikovReport rep = check_novikov(A);
  out << "left symmetry: " << (rep.left_symmetric ? "holds" : "fails") << "\n";
  out << "right commutativity: " << (rep.right_commutative ? "holds" : "fails") << "\n";
  for (const auto& v : rep.failing)
    out << "  " << (v.axiom == Violation::left_symmetry ? "left symmetry" : "right commutativity") << " fails at "
        << triple(v.i, v.j, v.k) << "\n";
  if (!rep.ok()) {
    out << "novikov: no\n";
    return exit_negative;
  }
  out << "novikov: yes\n";
  out << "associated lie:\n" << bracket_table(associated_lie(A));
  out << "complete: " << (is_complete(A) ? "true" : "false") << "\n";
  if (A.is_rational()) out << "fingerprint: " << algebra_invariants(A).str() << "\n";
  else out << "fingerprint: needs numeric parameters\n";
  return exit_ok;
}

inline int cmd_lie(const std::string& path, bool identify, const std::string& field_opt, std::size_t budget,
                   std::ostream& out) {
  StructureConstants A = load_algebra(path);
  LieTable g = associated_lie(A);
  out << "commutator table:\n" << bracket_table(g);
  if (!identify) return exit_ok;
  Field field = field_opt.empty() ? A.field() : parse_field(field_opt);
  if (A.has_parameters()) throw Error(Errc::symbolic_parameters, "--identify needs numeric parameters");
  std::vector<std::string> candidates = {"abelian"};
  for (const auto& id : lie_ids()) candidates.push_back(id);
  std::vector<std::string> found;
  bool undecided = false;
  out << "identify over " << field_name(field) << ":\n";
  for (const auto& id : candidates) {
    if (id != "abelian" && lie_algebra(id).dim() != g.dim()) continue;
    LieTable h = lie_algebra(id, g.dim());
    StructureConstants src = g.table, dst = h.table;
    src.set_field(field);
    dst.set_field(field);
    if (dst.has_parameters()) {
      std::vector<Polynomial> rel = relate_families(src, dst, budget);
      std::string shown;
      for (const auto& r : rel) shown += (shown.empty() ? "" : "; ") + r.str();
      bool none = rel.size() == 1 && rel.front().is_constant();
      out << "  " << id << ": " << (none ? "no" : "parameter relation {" + shown + "}") << "\n";
      if (!none) found.push_back(id);
      continue;
    }
    IsoVerdict v = decide_iso(src, dst, field, IsoOptions{budget});
    out << "  " << id << ": " << verdict_name(v) << "\n";
    if (std::holds_alternative<Isomorphic>(v)) found.push_back(id);
    if (std::holds_alternative<Undecided>(v)) undecided = true;
  }
  if (!found.empty()) {
    out << "identified:";
    for (const auto& f : found) out << " " << f;
    out << "\n";
    return exit_ok;
  }
  out << "identified: none\n";
  return undecided ? exit_undecided : exit_negative;
}

inline int cmd_tg(const std::string& arg, std::ostream& out) {
  LieTable g = load_lie(arg);
  out << family_report(tg_family(g));
  return exit_ok;
}

inline int cmd_act(const std::string& alg, const std::string& map_path, std::ostream& out) {
  StructureConstants A = load_algebra(alg);
  ExplicitMap m = read_map(map_path, A.dim());
  MapPair p = inverse_with_relations(m);
  StructureConstants moved = apply_automorphism(A, p.phi, p.phi_inv, p.relations);
  if (!p.relations.empty()) out << "# relation: " << p.relations.front().str() << " = 0\n";
  out << write_algebra(moved);
  return exit_ok;
}

inline int cmd_iso(const std::string& a, const std::string& b, const std::string& field_opt, std::size_t budget,
                   std::ostream& out) {
  StructureConstants A = load_algebra(a), B = load_algebra(b);
  Field field = !field_opt.empty() ? parse_field(field_opt) : (A.field() == B.field() ? A.field() : Field::C);
  out << "field: " << field_name(field) << "\n";
  IsoVerdict v = decide_iso(A, B, field, IsoOptions{budget});
  out << verdict_report(v);
  return verdict_exit(v);
}

inline int cmd_relate(const std::string& a, const std::string& b, std::size_t budget, std::ostream& out) {
  StructureConstants A = load_algebra(a), B = load_algebra(b);
  std::vector<Polynomial> rel = relate_families(A, B, budget);
  if (rel.empty()) {
    out << "no relation: the elimination ideal is zero\n";
    return exit_ok;
  }
  for (const auto& r : rel) out << r.str() << "\n";
  return rel.size() == 1 && rel.front().is_constant() ? exit_negative : exit_ok;
}

inline int cmd_gb(const std::string& path, std::size_t budget, std::ostream& out) {
  Ideal I = read_ideal(path);
  GroebnerBasis gb = buchberger(I, budget);
  out << (gb.complete ? "reduced basis" : "partial basis (budget exhausted)") << ", " << gb.basis.size()
      << " elements, " << gb.steps_used << " steps:\n";
  for (const auto& g : gb.basis) out << "  " << g.str() << "\n";
  return gb.complete ? exit_ok : exit_undecided;
}

inline int cmd_catalog_list(std::ostream& out) {
  for (const auto& e : catalog()) {
    out << e.id << "  " << e.name << "  " << e.table_label << "  lie " << e.lie << "  field "
        << field_name(e.field);
    if (!e.params.empty()) {
      out << "  params";
      for (const auto& p : e.params) out << " " << p;
    }
    out << "\n";
  }
  return exit_ok;
}

inline int cmd_catalog_show(const std::string& id, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(id);
  out << "# " << e.name << " (" << e.table_label << ")\n";
  if (!e.note.empty()) out << "# " << e.note << "\n";
  out << write_algebra(e.table);
  return exit_ok;
}

inline int cmd_catalog_verify(const std::vector<std::string>& scopes, const std::string& field, std::size_t budget,
                              std::ostream& out) {
  VerifyOptions opt;
  opt.scopes.insert(scopes.begin(), scopes.end());
  if (!field.empty()) opt.field = parse_field(field);
  opt.budget = budget;
  VerifyReport rep = verify_catalog(opt);
  out << rep.str();
  if (rep.count(CheckStatus::fail)) return exit_negative;
  return rep.count(CheckStatus::undecided) ? exit_undecided : exit_ok;
}

inline int cmd_catalog_export(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const auto& e : catalog()) write_file(dir + "/" + e.id + ".alg", write_algebra(e.table));
  write_file(dir + "/MANIFEST", catalog_manifest());
  out << "wrote " << catalog().size() << " tables and MANIFEST to " << dir << "\n";
  return exit_ok;
}

inline int cmd_caa(std::size_t dim, const std::string& field, bool tables, std::ostream& out) {
  std::vector<CAASpec> list = build_caa_list(dim, parse_field(field));
  out << list.size() << " classes, dim " << dim << ", field " << field << "\n";
  for (const auto& s : list) {
    out << s.name << "\n";
    if (tables) {
      std::string body = write_algebra(s.table);
      std::string products;
      std::size_t pos = 0;
      while (pos < body.size()) {
        auto nl = body.find('\n', pos);
        std::string line = body.substr(pos, nl - pos);
        if (line.find('=') != std::string::npos) products += "  " + line + "\n";
        if (nl == std::string::npos) break;
        pos = nl + 1;
      }
      out << products;
    }
  }
  return exit_ok;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Novikov algebra toolkit"};
  app.name("novikov");
  app.require_subcommand(1);
  std::size_t budget = budget_from_env();
  app.add_option("--budget", budget, "Groebner step budget (env NOVIKOV_BUDGET)")->check(CLI::PositiveNumber);

  std::string a, b, field;
  bool identify = false, tables = false;
  std::vector<std::string> scopes;
  std::size_t dim = 0;

  auto* check = app.add_subcommand("check", "axioms, Lie algebra, completeness, fingerprint");
  check->add_option("algebra", a, "algebra file or catalog id")->required();

  auto* lie = app.add_subcommand("lie", "commutator table");
  lie->add_option("algebra", a)->required();
  lie->add_flag("--identify", identify, "match against the catalog Lie algebras");
  lie->add_option("--field", field)->check(CLI::IsMember({"R", "C"}));

  auto* tg = app.add_subcommand("tg", "family of Novikov structures on a Lie algebra");
  tg->add_option("lie", a, "Lie table file or id")->required();

  auto* act = app.add_subcommand("act", "apply a change of basis to a table");
  act->add_option("algebra", a)->required();
  act->add_option("map", b)->required();

  auto* iso = app.add_subcommand("iso", "decide isomorphism");
  iso->add_option("a", a)->required();
  iso->add_option("b", b)->required();
  iso->add_option("--field", field)->check(CLI::IsMember({"R", "C"}));

  auto* relate = app.add_subcommand("relate", "parameter relation between two families");
  relate->add_option("a", a)->required();
  relate->add_option("b", b)->required();

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  gb->add_option("ideal", a)->required();

  auto* cat = app.add_subcommand("catalog", "classification tables");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entries");
  auto* cat_show = cat->add_subcommand("show", "print one table");
  cat_show->add_option("id", a)->required();
  auto* cat_verify = cat->add_subcommand("verify", "run the verification harness");
  cat_verify->add_option("--scope", scopes)->check(CLI::IsMember(verify_scopes()));
  cat_verify->add_option("--field", field)->check(CLI::IsMember({"R", "C"}));
  auto* cat_export = cat->add_subcommand("export", "write tables and manifest");
  cat_export->add_option("dir", a)->required();

  auto* caa = app.add_subcommand("caa", "commutative associative algebras");
  caa->require_subcommand(1);
  auto* caa_build = caa->add_subcommand("build", "list the classes");
  caa_build->add_option("--dim", dim)->required();
  caa_build->add_option("--field", field)->required()->check(CLI::IsMember({"R", "C"}));
  caa_build->add_flag("--tables", tables, "print multiplication tables");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }

  try {
    if (*check) return detail::cmd_check(a, out);
    if (*lie) return detail::cmd_lie(a, identify, field, budget, out);
    if (*tg) return detail::cmd_tg(a, out);
    if (*act) return detail::cmd_act(a, b, out);
    if (*iso) return detail::cmd_iso(a, b, field, budget, out);
    if (*relate) return detail::cmd_relate(a, b, budget, out);
    if (*gb) return detail::cmd_gb(a, budget, out);
    if (*cat_list) return detail::cmd_catalog_list(out);
    if (*cat_show) return detail::cmd_catalog_show(a, out);
    if (*cat_verify) return detail::cmd_catalog_verify(scopes, field, budget, out);
    if (*cat_export) return detail::cmd_catalog_export(a, out);
    if (*caa_build) return detail::cmd_caa(dim, field, tables, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::budget_exhausted ? exit_undecided : exit_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

}  // namespace novikov::cli
