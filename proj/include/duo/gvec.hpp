#pragma once

// Graded rational vector space backend: a 2-cell f => g is a grade-preserving
// linear map Q^f -> Q^g, stored as sparse rows indexed by elements of g.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "duo/cell2.hpp"
#include "duo/linalg.hpp"

namespace duo {

struct LinMap {
  using Entry = std::pair<std::uint32_t, Rational>;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> rows;

  std::size_t nrows() const { return rows.size(); }
  bool operator==(const LinMap& o) const { return cols == o.cols && rows == o.rows; }

  Rational get(std::size_t i, std::size_t j) const {
    for (const auto& e : rows[i])
      if (e.first == j) return e.second;
    return 0;
  }
};

inline void normalize_row(std::vector<LinMap::Entry>& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LinMap::Entry> out;
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      out.push_back(std::move(e));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
  row = std::move(out);
}

struct GVecBackend {
  using Map = LinMap;
  static constexpr const char* name = "gvec";
  static constexpr bool linear = true;

  static Map identity(std::size_t n) {
    Map m;
    m.cols = n;
    m.rows.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.rows[i].push_back({static_cast<std::uint32_t>(i), Rational(1)});
    return m;
  }

  static bool replay(const Cell2<GVecBackend>& c, const Witness& w);

  static Map vcomp(const Map& b, const Map& a, std::size_t, std::size_t nsrc) {
    Map r;
    r.cols = nsrc;
    r.rows.resize(b.rows.size());
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      std::vector<LinMap::Entry> row;
      for (const auto& [k, v] : b.rows[i])
        for (const auto& [j, w] : a.rows[k]) row.push_back({j, v * w});
      normalize_row(row);
      r.rows[i] = std::move(row);
    }
    return r;
  }

  static Map pair(const Map& a, const Map& b, const std::vector<std::pair<std::size_t, std::size_t>>& tprov,
                  const detail::PairLookup& look, std::size_t nsrc) {
    Map r;
    r.cols = nsrc;
    r.rows.resize(tprov.size());
    for (std::size_t k = 0; k < tprov.size(); ++k) {
      std::vector<LinMap::Entry> row;
      for (const auto& [i, v] : a.rows[tprov[k].first])
        for (const auto& [j, w] : b.rows[tprov[k].second])
          row.push_back({static_cast<std::uint32_t>(look(i, j)), v * w});
      normalize_row(row);
      r.rows[k] = std::move(row);
    }
    return r;
  }

  static Map from_relation(const std::vector<std::vector<std::size_t>>& rel, std::size_t nsrc,
                           const std::string&) {
    Map r;
    r.cols = nsrc;
    r.rows.resize(rel.size());
    for (std::size_t i = 0; i < rel.size(); ++i) {
      for (auto j : rel[i]) r.rows[i].push_back({static_cast<std::uint32_t>(j), Rational(1)});
      normalize_row(r.rows[i]);
    }
    return r;
  }

  static bool equal(const Map& a, const Map& b) { return a == b; }

  static std::optional<std::size_t> first_difference(const Map& a, const Map& b) {
    for (std::size_t t = 0; t < a.rows.size() && t < b.rows.size(); ++t)
      if (a.rows[t] != b.rows[t]) return t;
    if (a.rows.size() != b.rows.size()) return std::min(a.rows.size(), b.rows.size());
    return std::nullopt;
  }

  static Inverted<GVecBackend> invert(const Cell2<GVecBackend>& c);
};

using GVecCell2 = Cell2<GVecBackend>;

// Linear combinations of parallel 2-cells.
inline GVecCell2 add(const GVecCell2& a, const GVecCell2& b) {
  if (!same(a.src, b.src) || !same(a.tgt, b.tgt)) throw CompositionError("sum of non-parallel 2-cells");
  GVecCell2 r = a;
  for (std::size_t i = 0; i < r.map.rows.size(); ++i) {
    auto& row = r.map.rows[i];
    row.insert(row.end(), b.map.rows[i].begin(), b.map.rows[i].end());
    normalize_row(row);
  }
  return r;
}

inline GVecCell2 scale(const Rational& s, const GVecCell2& a) {
  GVecCell2 r = a;
  for (auto& row : r.map.rows) {
    for (auto& e : row) e.second *= s;
    normalize_row(row);
  }
  return r;
}

inline GVecCell2 zero2(const OneCell& src, const OneCell& tgt) {
  GVecCell2 r{src, tgt, {}};
  r.map.cols = src->size();
  r.map.rows.resize(tgt->size());
  return r;
}

// The linear map of a span 2-cell: row t has a single 1 in column fn(t).
template <class SpanCell>
GVecCell2 linearize(const SpanCell& c) {
  GVecCell2 r{c.src, c.tgt, {}};
  r.map.cols = c.src->size();
  r.map.rows.resize(c.tgt->size());
  for (std::size_t t = 0; t < c.map.size(); ++t) r.map.rows[t].push_back({c.map[t], Rational(1)});
  return r;
}

namespace detail {

using GradeKey = std::vector<int>;

inline std::map<GradeKey, std::vector<std::size_t>> grade_blocks(const OneCell& c) {
  std::map<GradeKey, std::vector<std::size_t>> out;
  for (std::size_t e = 0; e < c->size(); ++e) out[c->grade(e)].push_back(e);
  return out;
}

}  // namespace detail

inline Inverted<GVecBackend> GVecBackend::invert(const Cell2<GVecBackend>& c) {
  // Grade-preserving, so invert block by block.
  auto sb = detail::grade_blocks(c.src);
  auto tb = detail::grade_blocks(c.tgt);
  Map inv;
  inv.cols = c.tgt->size();
  inv.rows.resize(c.src->size());
  std::vector<detail::GradeKey> keys;
  for (const auto& [k, v] : sb) keys.push_back(k);
  for (const auto& [k, v] : tb)
    if (!sb.count(k)) keys.push_back(k);
  for (const auto& k : keys) {
    static const std::vector<std::size_t> empty;
    const auto& S = sb.count(k) ? sb.at(k) : empty;
    const auto& Tg = tb.count(k) ? tb.at(k) : empty;
    std::unordered_map<std::size_t, std::size_t> scol;
    for (std::size_t j = 0; j < S.size(); ++j) scol[S[j]] = j;
    linalg::Dense d(Tg.size(), S.size());
    for (std::size_t i = 0; i < Tg.size(); ++i)
      for (const auto& [j, v] : c.map.rows[Tg[i]]) d.at(i, scol.at(j)) = v;
    auto kern = linalg::kernel(d);
    if (!kern.empty()) {
      Witness w{"kernel", "src", {}, std::vector<Rational>(c.src->size(), Rational(0)),
                "nonzero source vector mapped to zero"};
      for (std::size_t j = 0; j < S.size(); ++j) w.vector[S[j]] = kern[0][j];
      for (std::size_t j = 0; j < S.size(); ++j)
        if (kern[0][j] != 0) w.elements.push_back(S[j]);
      return w;
    }
    auto cok = linalg::kernel(linalg::transpose(d));
    if (!cok.empty()) {
      Witness w{"cokernel", "tgt", {}, std::vector<Rational>(c.tgt->size(), Rational(0)),
                "nonzero functional on the target vanishing on the image"};
      for (std::size_t i = 0; i < Tg.size(); ++i) w.vector[Tg[i]] = cok[0][i];
      for (std::size_t i = 0; i < Tg.size(); ++i)
        if (cok[0][i] != 0) w.elements.push_back(Tg[i]);
      return w;
    }
    auto di = linalg::inverse(d);
    for (std::size_t j = 0; j < S.size(); ++j)
      for (std::size_t i = 0; i < Tg.size(); ++i)
        if (di->at(j, i) != 0) inv.rows[S[j]].push_back({static_cast<std::uint32_t>(Tg[i]), di->at(j, i)});
  }
  for (auto& row : inv.rows) normalize_row(row);
  return Cell2<GVecBackend>{c.tgt, c.src, inv};
}

// A kernel witness is a nonzero v with M v = 0; a cokernel witness a nonzero w with w M = 0.
inline bool GVecBackend::replay(const Cell2<GVecBackend>& c, const Witness& w) {
  auto nonzero = [](const std::vector<Rational>& v) {
    return std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  };
  if (w.kind == "kernel") {
    if (w.vector.size() != c.src->size() || !nonzero(w.vector)) return false;
    for (const auto& row : c.map.rows) {
      Rational acc = 0;
      for (const auto& [j, v] : row) acc += v * w.vector[j];
      if (acc != 0) return false;
    }
    return true;
  }
  if (w.kind == "cokernel") {
    if (w.vector.size() != c.tgt->size() || !nonzero(w.vector)) return false;
    std::vector<Rational> acc(c.src->size(), Rational(0));
    for (std::size_t i = 0; i < c.map.rows.size(); ++i)
      for (const auto& [j, v] : c.map.rows[i]) acc[j] += w.vector[i] * v;
    return !nonzero(acc);
  }
  return false;
}

}  // namespace duo
