#pragma once

// 2-cells over a backend.  A backend supplies the map representation:
//   Map                         payload type
//   identity(n)                 identity on an n-element carrier
//   vcomp(b, a, tgt, src)       b after a
//   pair(a, b, prov, lookup, n) horizontal/tensor combination
//   from_relation(rel, nsrc)    structural map from a tgt -> src relation
//   equal(a, b), invert(cell)   exact equality, inverse or witness

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "duo/cell1.hpp"
#include "duo/rational.hpp"

namespace duo {

template <class B>
struct Cell2 {
  OneCell src;
  OneCell tgt;
  typename B::Map map;
};

// Evidence that a 2-cell is not invertible.  Element indices refer to the
// carriers of the cell's src/tgt; `vector` is a kernel vector on src or a
// cokernel vector on tgt.
struct Witness {
  std::string kind;  // "no-preimage", "multiple-preimages", "kernel", "cokernel", "shape"
  std::string side;  // "src" or "tgt"
  std::vector<std::size_t> elements;
  std::vector<Rational> vector;
  std::string note;
};

template <class B>
using Inverted = std::variant<Cell2<B>, Witness>;

namespace detail {

inline std::uint64_t pack(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

struct PairLookup {
  std::unordered_map<std::uint64_t, std::size_t> m;
  explicit PairLookup(const std::vector<std::pair<std::size_t, std::size_t>>& prov) {
    m.reserve(prov.size() * 2);
    for (std::size_t i = 0; i < prov.size(); ++i) m.emplace(pack(prov[i].first, prov[i].second), i);
  }
  std::size_t operator()(std::size_t a, std::size_t b) const {
    auto it = m.find(pack(a, b));
    if (it == m.end()) throw InternalError("2-cell combination left the grade");
    return it->second;
  }
};

}  // namespace detail

template <class B>
Cell2<B> id2(const OneCell& f) {
  return {f, f, B::identity(f->size())};
}

template <class B>
Cell2<B> vcomp(const Cell2<B>& b, const Cell2<B>& a) {
  if (!same(a.tgt, b.src)) {
    throw CompositionError("vertical composite: target " + a.tgt->describe() + " is not source " +
                           b.src->describe());
  }
  return {a.src, b.tgt, B::vcomp(b.map, a.map, b.tgt->size(), a.src->size())};
}

// Vertical composite of a chain, the rightmost applied first.
template <class B, class... Rest>
Cell2<B> V(const Cell2<B>& a, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return a;
  } else {
    return vcomp(a, V<B>(rest...));
  }
}

// Horizontal composite beta.alpha : g.f => g'.f' for alpha: f => f', beta: g => g'.
template <class B>
Cell2<B> hdot(const Cell2<B>& beta, const Cell2<B>& alpha) {
  auto src = compose_detail(beta.src, alpha.src);
  auto tgt = compose_detail(beta.tgt, alpha.tgt);
  detail::PairLookup look(src.prov);
  return {src.cell, tgt.cell, B::pair(alpha.map, beta.map, tgt.prov, look, src.cell->size())};
}

template <class B>
Cell2<B> tens2(const Cell2<B>& alpha, const Cell2<B>& beta) {
  auto src = tensor_detail(alpha.src, beta.src);
  auto tgt = tensor_detail(alpha.tgt, beta.tgt);
  detail::PairLookup look(src.prov);
  return {src.cell, tgt.cell, B::pair(alpha.map, beta.map, tgt.prov, look, src.cell->size())};
}

template <class B>
inline Cell2<B> as_cell(const Cell2<B>& c) {
  return c;
}
template <class B>
inline Cell2<B> as_cell(const OneCell& f) {
  return id2<B>(f);
}

// H(a, b, c) = a.b.c horizontally; arguments are 2-cells or 1-cells (identities).
template <class B, class A, class... Rest>
Cell2<B> H(const A& a, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return as_cell<B>(a);
  } else {
    return hdot<B>(as_cell<B>(a), H<B>(rest...));
  }
}

// T(a, b, c) = a tensor b tensor c; arguments are 2-cells or 1-cells.
template <class B, class A, class... Rest>
Cell2<B> T(const A& a, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return as_cell<B>(a);
  } else {
    return tens2<B>(as_cell<B>(a), T<B>(rest...));
  }
}

template <class B>
bool equal(const Cell2<B>& a, const Cell2<B>& b) {
  return same(a.src, b.src) && same(a.tgt, b.tgt) && B::equal(a.map, b.map);
}

template <class B>
bool is_identity(const Cell2<B>& a) {
  return same(a.src, a.tgt) && B::equal(a.map, B::identity(a.src->size()));
}

template <class B>
Inverted<B> invert(const Cell2<B>& a) {
  return B::invert(a);
}

template <class B>
bool replays(const Cell2<B>& a, const Witness& w) {
  return B::replay(a, w);
}

template <class B>
Cell2<B> inverse(const Cell2<B>& a) {
  auto r = B::invert(a);
  if (auto* w = std::get_if<Witness>(&r)) {
    throw InternalError("expected an invertible 2-cell " + a.src->describe() + " => " +
                        a.tgt->describe() + " (" + w->kind + ")");
  }
  return std::get<Cell2<B>>(r);
}

// Structural 2-cell src => tgt relating elements with equal boundary values.
template <class B>
Cell2<B> by_grade(const OneCell& src, const OneCell& tgt) {
  if (src->p != tgt->p || src->q != tgt->q) {
    throw CompositionError("structural cell between non-parallel 1-cells " + src->describe() +
                           " and " + tgt->describe());
  }
  std::unordered_map<std::vector<int>, std::vector<std::size_t>, detail::VecHash<std::vector<int>>> g;
  for (std::size_t e = 0; e < src->size(); ++e) g[src->grade(e)].push_back(e);
  std::vector<std::vector<std::size_t>> rel(tgt->size());
  for (std::size_t e = 0; e < tgt->size(); ++e) {
    auto it = g.find(tgt->grade(e));
    if (it != g.end()) rel[e] = it->second;
  }
  return {src, tgt, B::from_relation(rel, src->size(), src->describe() + " => " + tgt->describe())};
}

}  // namespace duo
