#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/groebner.hpp"
#include "novikov/iso.hpp"
#include "novikov/parse.hpp"

namespace novikov {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write '" + path + "'");
  out << text;
}

namespace detail {

struct Header {
  Field field = Field::C;
  bool has_field = false;
  std::size_t dim = 0;
  bool has_dim = false;
  std::vector<std::string> params;
  std::vector<std::pair<std::string, UPoly>> exts;
};

inline std::string line_error(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

/// Consumes `field`, `dim`, `param`, `ext` lines; false for anything else.
inline bool header_line(const std::string& line, std::size_t no, Header& h) {
  auto words = split_ws(line);
  const std::string& kw = words[0];
  if (kw == "field") {
    if (words.size() != 2) throw Error(Errc::parse_error, line_error(no, "expected 'field R|C'"));
    h.field = parse_field(words[1]);
    h.has_field = true;
    return true;
  }
  if (kw == "dim") {
    if (words.size() != 2 || words[1].find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::parse_error, line_error(no, "expected 'dim n'"));
    h.dim = std::stoul(words[1]);
    h.has_dim = true;
    return true;
  }
  if (kw == "param") {
    if (words.size() < 2) throw Error(Errc::parse_error, line_error(no, "expected 'param name'"));
    for (std::size_t i = 1; i < words.size(); ++i) {
      if (!valid_identifier(words[i])) throw Error(Errc::parse_error, line_error(no, "bad parameter name"));
      h.params.push_back(words[i]);
    }
    return true;
  }
  if (kw == "ext") {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(Errc::parse_error, line_error(no, "expected 'ext g : minpoly'"));
    std::string g = trim(std::string_view(line).substr(3, colon - 3));
    if (!valid_identifier(g)) throw Error(Errc::parse_error, line_error(no, "bad extension generator name"));
    UPoly m = parse_upoly(line.substr(colon + 1), g);
    if (!m.leading().is_one()) m = m.monic();
    h.exts.emplace_back(g, std::move(m));
    return true;
  }
  return false;
}

inline bool is_basis_name(const std::string& s, char prefix, std::size_t& idx) {
  if (s.size() < 2 || s[0] != prefix || s.find_first_not_of("0123456789", 1) != std::string::npos) return false;
  idx = std::stoul(s.substr(1));
  return idx >= 1;
}

/// Parses `rhs` as sum of coefficient * <prefix>k; returns coordinates in `coeffs`.
inline Vec parse_combination(const std::string& rhs, const RingPtr& coeffs, std::size_t n, char prefix,
                             std::size_t no) {
  std::vector<Variable> vars = coeffs->variables();
  std::vector<FieldExt> exts = coeffs->extensions();
  std::size_t base = vars.size();
  for (std::size_t k = 0; k < n; ++k) vars.push_back({std::string(1, prefix) + std::to_string(k + 1), VarKind::map_entry});
  RingPtr R = Ring::make_default(std::move(vars), std::move(exts));
  Polynomial p = parse_polynomial(rhs, R);
  Vec out = zero_vec(coeffs, n);
  for (const auto& t : p.terms()) {
    std::size_t hit = n, deg = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (t.mono[base + k]) hit = k, deg += t.mono[base + k];
    if (hit == n || deg != 1)
      throw Error(Errc::parse_error, line_error(no, "right side must be linear in the basis: '" + rhs + "'"));
    Monomial m = t.mono;
    m.set(base + hit, 0);
    Polynomial c = Polynomial::monomial(R, m, t.coef);
    out[hit] += c.to_ring(coeffs);
  }
  return out;
}

}  // namespace detail

/// Algebra file: `field R|C`, `dim n`, optional `ext g : minpoly` and
/// `param a` lines, then `ei*ej = <coef> ek + ...`; omitted products are zero.
inline StructureConstants parse_algebra(const std::string& text) {
  detail::Header h;
  std::vector<std::pair<std::size_t, std::string>> products;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (line.find('=') != std::string::npos) {
      products.emplace_back(no, line);
      continue;
    }
    if (!detail::header_line(line, no, h))
      throw Error(Errc::parse_error, detail::line_error(no, "unrecognized line '" + line + "'"));
  }
  if (!h.has_dim) throw Error(Errc::parse_error, "missing 'dim' line");
  RingPtr R = coefficient_ring(h.params, h.exts);
  std::size_t n = h.dim;
  StructureConstants A(n, R, h.field);
  std::vector<bool> seen(n * n, false);
  for (const auto& [lno, line] : products) {
    auto eq = line.find('=');
    std::string lhs = trim(std::string_view(line).substr(0, eq));
    std::string rhs = trim(std::string_view(line).substr(eq + 1));
    auto star = lhs.find('*');
    if (star == std::string::npos)
      throw Error(Errc::parse_error, detail::line_error(lno, "expected 'ei*ej' on the left"));
    std::size_t i = 0, j = 0;
    if (!detail::is_basis_name(trim(lhs.substr(0, star)), 'e', i) ||
        !detail::is_basis_name(trim(lhs.substr(star + 1)), 'e', j))
      throw Error(Errc::parse_error, detail::line_error(lno, "bad basis element in '" + lhs + "'"));
    if (i > n || j > n) throw Error(Errc::index_out_of_range, detail::line_error(lno, "basis index exceeds dim"));
    if (seen[(i - 1) * n + (j - 1)])
      throw Error(Errc::parse_error, detail::line_error(lno, "product " + lhs + " given twice"));
    seen[(i - 1) * n + (j - 1)] = true;
    Vec v = detail::parse_combination(rhs, R, n, 'e', lno);
    for (std::size_t k = 0; k < n; ++k) A.set(i - 1, j - 1, k, v[k]);
  }
  return A;
}

inline StructureConstants read_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

namespace detail {

inline std::string header_str(const Ring& R) {
  std::string s;
  for (const auto& e : R.extensions()) {
    const std::string& g = R.variable(e.generator).name;
    s += "ext " + g + " : " + e.minimal_polynomial.str(g) + "\n";
  }
  for (const auto& v : R.variables())
    if (v.kind == VarKind::parameter) s += "param " + v.name + "\n";
  return s;
}

}  // namespace detail

inline std::string write_algebra(const StructureConstants& A) {
  std::string s = "field " + std::string(field_name(A.field())) + "\n";
  s += "dim " + std::to_string(A.dim()) + "\n";
  s += detail::header_str(*A.ring());
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec v = A.product(i, j);
      if (is_zero_vec(v)) continue;
      s += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " + combination_str(v, "e") + "\n";
    }
  return s;
}

/// Map file: optional `field`, `dim`, `ext`, `param` lines, optional `map`
/// line, then `ei -> <coef> yj + ...`. Column i of the matrix is the image
/// of e_i. Missing images are zero.
inline ExplicitMap parse_map(const std::string& text, std::size_t dim = 0) {
  detail::Header h;
  std::vector<std::pair<std::size_t, std::string>> images;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string line = strip_comment(raw);
    if (line.empty() || line == "map") continue;
    if (line.find("->") != std::string::npos) {
      images.emplace_back(no, line);
      continue;
    }
    if (!detail::header_line(line, no, h))
      throw Error(Errc::parse_error, detail::line_error(no, "unrecognized line '" + line + "'"));
  }
  std::size_t n = h.has_dim ? h.dim : (dim ? dim : images.size());
  if (dim && n != dim) throw Error(Errc::dimension_mismatch, "map dimension differs from the algebra");
  RingPtr R = coefficient_ring(h.params, h.exts);
  ExplicitMap m{PolyMatrix(R, n)};
  std::vector<bool> seen(n, false);
  for (const auto& [lno, line] : images) {
    auto arrow = line.find("->");
    std::size_t i = 0;
    if (!detail::is_basis_name(trim(std::string_view(line).substr(0, arrow)), 'e', i))
      throw Error(Errc::parse_error, detail::line_error(lno, "expected 'ei -> ...'"));
    if (i > n) throw Error(Errc::index_out_of_range, detail::line_error(lno, "basis index exceeds dim"));
    if (seen[i - 1]) throw Error(Errc::parse_error, detail::line_error(lno, "image given twice"));
    seen[i - 1] = true;
    Vec v = detail::parse_combination(line.substr(arrow + 2), R, n, 'y', lno);
    for (std::size_t l = 0; l < n; ++l) m.matrix(l, i - 1) = v[l];
  }
  return m;
}

inline ExplicitMap read_map(const std::string& path, std::size_t dim = 0) { return parse_map(read_file(path), dim); }

inline std::string write_map(const ExplicitMap& m) {
  return detail::header_str(*m.matrix.ring()) + "map\n" + m.str();
}

/// Ideal file: `vars v1 > v2 > ...`, optional `ext g : minpoly`,
/// `order lex|grevlex|elim k`, then one polynomial per line.
inline Ideal parse_ideal(const std::string& text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, UPoly>> exts;
  MonomialOrder ord;
  bool has_order = false;
  std::vector<std::pair<std::size_t, std::string>> polys;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    auto words = split_ws(line);
    if (words[0] == "vars") {
      std::string rest = line.substr(4);
      for (char& c : rest)
        if (c == '>' || c == ',') c = ' ';
      names = split_ws(rest);
      if (names.empty()) throw Error(Errc::parse_error, detail::line_error(no, "empty 'vars' line"));
    } else if (words[0] == "ext") {
      detail::Header h;
      detail::header_line(line, no, h);
      exts.push_back(h.exts.front());
    } else if (words[0] == "order") {
      has_order = true;
      if (words.size() == 2 && words[1] == "lex") ord.style = OrderStyle::lex;
      else if (words.size() == 2 && words[1] == "grevlex") ord.style = OrderStyle::grevlex;
      else if (words.size() == 3 && words[1] == "elim" &&
               words[2].find_first_not_of("0123456789") == std::string::npos) {
        ord.style = OrderStyle::block_elimination;
        ord.split = std::stoul(words[2]);
      } else {
        throw Error(Errc::parse_error, detail::line_error(no, "expected 'order lex|grevlex|elim k'"));
      }
    } else {
      polys.emplace_back(no, line);
    }
  }
  if (names.empty()) throw Error(Errc::parse_error, "missing 'vars' line");
  if (!has_order) ord.style = OrderStyle::grevlex;
  std::vector<Variable> vars;
  for (const auto& nm : names) vars.push_back({nm, VarKind::parameter});
  std::vector<FieldExt> fe;
  for (const auto& [g, m] : exts) {
    std::size_t idx = 0;
    while (idx < vars.size() && vars[idx].name != g) ++idx;
    if (idx == vars.size()) vars.push_back({g, VarKind::extension_generator});
    vars[idx].kind = VarKind::extension_generator;
    fe.push_back({idx, m});
  }
  ord.ranking.clear();
  for (std::size_t v = 0; v < vars.size(); ++v) ord.ranking.push_back(v);
  RingPtr R = Ring::make(std::move(vars), ord, std::move(fe));
  std::vector<Polynomial> gens;
  for (const auto& [lno, line] : polys) {
    try {
      gens.push_back(parse_polynomial(line, R));
    } catch (const Error& e) {
      throw Error(e.code(), detail::line_error(lno, e.what()));
    }
  }
  return Ideal::make(R, std::move(gens));
}

inline Ideal read_ideal(const std::string& path) { return parse_ideal(read_file(path)); }

inline std::string write_ideal(const Ideal& I) {
  const Ring& R = *I.ring;
  std::string s = "vars";
  bool first = true;
  for (const auto& nm : R.ranked_names()) {
    s += (first ? " " : " > ") + nm;
    first = false;
  }
  s += "\n";
  for (const auto& e : R.extensions()) {
    const std::string& g = R.variable(e.generator).name;
    s += "ext " + g + " : " + e.minimal_polynomial.str(g) + "\n";
  }
  switch (R.order().style) {
    case OrderStyle::lex: s += "order lex\n"; break;
    case OrderStyle::grevlex: s += "order grevlex\n"; break;
    case OrderStyle::block_elimination: s += "order elim " + std::to_string(R.order().split) + "\n"; break;
  }
  for (const auto& g : I.generators) s += g.str() + "\n";
  return s;
}

}  // namespace novikov
