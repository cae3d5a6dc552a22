#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/catalog.hpp"
#include "novikov/linalg.hpp"

namespace novikov {

/// Coordinates of a two-sided identity element of a rational table, if any.
inline std::optional<std::vector<Rational>> identity_element(const StructureConstants& A) {
  if (!A.is_rational()) throw Error(Errc::symbolic_parameters, "identity search needs rational entries");
  std::size_t n = A.dim();
  if (n == 0) return std::nullopt;
  // unknowns x_m; equations x e_i = e_i and e_i x = e_i
  RatMatrix M(0, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> left(n + 1), right(n + 1);
      for (std::size_t m = 0; m < n; ++m) {
        left[m] = A.at(m, i, k).constant_value();
        right[m] = A.at(i, m, k).constant_value();
      }
      left[n] = right[n] = Rational(i == k ? 1 : 0);
      M.append_row(left);
      M.append_row(right);
    }
  RrefResult r = rref(M);
  std::vector<Rational> x(n);
  for (std::size_t row = 0; row < r.pivots.size(); ++row) {
    if (r.pivots[row] == n) return std::nullopt;
    x[r.pivots[row]] = r.reduced(row, n);
  }
  return x;
}

/// A + <u> with u u = u and u x = x u = x; u becomes e1, e_i becomes e_(i+1).
inline StructureConstants unital_extension(const StructureConstants& A) {
  if (identity_element(A)) throw Error(Errc::identity_exists, "algebra already has an identity element");
  std::size_t n = A.dim();
  StructureConstants B(n + 1, A.ring(), A.field());
  B.set(0, 0, 0, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    B.set(0, i + 1, i + 1, Rational(1));
    B.set(i + 1, 0, i + 1, Rational(1));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) B.set(i + 1, j + 1, k + 1, A.at(i, j, k));
  }
  return B;
}

/// Block-diagonal table on the concatenated bases.
inline StructureConstants direct_sum(const std::vector<StructureConstants>& parts) {
  if (parts.empty()) throw Error(Errc::precondition, "direct sum needs at least one part");
  RingPtr R = parts.front().ring();
  std::size_t n = 0;
  for (const auto& p : parts) {
    R = merge_rings(*R, *p.ring());
    n += p.dim();
  }
  StructureConstants S(n, R, parts.front().field());
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j)
        for (std::size_t k = 0; k < p.dim(); ++k) S.set(off + i, off + j, off + k, p.at(i, j, k).to_ring(R));
    off += p.dim();
  }
  return S;
}

/// C as a real algebra: e1 e1 = e1, e1 e2 = e2 e1 = e2, e2 e2 = -e1.
inline StructureConstants complex_block() {
  StructureConstants C(2, coefficient_ring({}), Field::R);
  C.set(0, 0, 0, Rational(1));
  C.set(0, 1, 1, Rational(1));
  C.set(1, 0, 1, Rational(1));
  C.set(1, 1, 0, Rational(-1));
  return C;
}

struct CAASpec {
  std::string name;
  std::vector<std::string> summands;  // in basis order
  StructureConstants table;
};

namespace detail {

struct Block {
  std::string name;  // "C", "~A2_1", ...
  std::size_t dim;
  StructureConstants table;
  int rank;  // 0 = C, 1 = unital, 2 = nilpotent
};

inline std::vector<Block> nilpotent_blocks(std::size_t max_dim, Field field) {
  std::vector<Block> out;
  for (const auto& e : catalog()) {
    if (e.lie != "abelian") continue;
    std::size_t d = e.table.dim();
    if (d > max_dim) continue;
    if (d <= 3 && e.table_label != "Table 1") continue;
    if (d == 4 && e.id.rfind("A4_", 0) != 0) continue;
    if (field == Field::C && e.id == "A3_5") continue;  // A3_4 over C
    out.push_back({e.id, d, e.table, 2});
  }
  return out;
}

inline std::string join_names(const std::vector<const Block*>& blocks) {
  std::string s;
  std::size_t i = 0;
  while (i < blocks.size()) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j]->name == blocks[i]->name) ++j;
    if (!s.empty()) s += "+";
    if (j - i > 1) s += std::to_string(j - i);
    s += blocks[i]->name;
    i = j;
  }
  return s;
}

}  // namespace detail

/// Commutative associative algebras of dimension n: a nilpotent part plus a
/// multiset of unital blocks ~B (B nilpotent) and, over R, copies of C.
inline std::vector<CAASpec> build_caa_list(std::size_t n, Field field) {
  if (n > 4 || (field == Field::R && n > 3))
    throw Error(Errc::unsupported_dim, "CAA list available for dim <= 4 over C and dim <= 3 over R");
  std::vector<detail::Block> nil = detail::nilpotent_blocks(n, field);
  std::vector<detail::Block> blocks;  // indecomposable blocks with a unit part
  if (field == Field::R) blocks.push_back({"C", 2, complex_block(), 0});
  for (const auto& b : nil)
    if (b.dim + 1 <= n) blocks.push_back({"~" + b.name, b.dim + 1, unital_extension(b.table), 1});
  std::vector<CAASpec> out;
  std::vector<const detail::Block*> chosen;
  // multisets of blocks in list order, then a nilpotent part filling the rest
  auto rec = [&](auto&& self, std::size_t start, std::size_t used) -> void {
    for (const auto& nb : nil) {
      if (nb.dim != n - used) continue;
      std::vector<const detail::Block*> parts = chosen;
      std::string name = detail::join_names(parts);
      // a zero-dimensional nilpotent part is dropped unless it is everything
      if (nb.dim > 0 || parts.empty()) name += (name.empty() ? "" : "+") + nb.name;
      std::vector<StructureConstants> tables;
      std::vector<std::string> summands;
      for (const auto* p : parts) tables.push_back(p->table), summands.push_back(p->name);
      if (nb.dim > 0 || parts.empty()) tables.push_back(nb.table), summands.push_back(nb.name);
      StructureConstants t = direct_sum(tables);
      t.set_field(field);
      out.push_back({name, summands, std::move(t)});
    }
    for (std::size_t b = start; b < blocks.size(); ++b) {
      if (used + blocks[b].dim > n) continue;
      chosen.push_back(&blocks[b]);
      self(self, b, used + blocks[b].dim);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const CAASpec& a, const CAASpec& b) { return a.name < b.name; });
  return out;
}

}  // namespace novikov
