#pragma once

// Span^co backend: a 2-cell f => g is a function from the carrier of g to the
// carrier of f commuting with the legs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "duo/cell2.hpp"

namespace duo {

struct SpanBackend {
  using Map = std::vector<std::uint32_t>;  // tgt element -> src element
  static constexpr const char* name = "span";
  static constexpr bool linear = false;

  static Map identity(std::size_t n) {
    Map m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint32_t>(i);
    return m;
  }

  static Map vcomp(const Map& b, const Map& a, std::size_t, std::size_t) {
    Map r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
  }

  static Map pair(const Map& a, const Map& b, const std::vector<std::pair<std::size_t, std::size_t>>& tprov,
                  const detail::PairLookup& look, std::size_t) {
    Map r(tprov.size());
    for (std::size_t k = 0; k < tprov.size(); ++k) {
      r[k] = static_cast<std::uint32_t>(look(a[tprov[k].first], b[tprov[k].second]));
    }
    return r;
  }

  static Map from_relation(const std::vector<std::vector<std::size_t>>& rel, std::size_t,
                           const std::string& what) {
    Map r(rel.size());
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (rel[i].size() != 1) {
        throw CompositionError("structural span cell " + what + " is not a function (target element " +
                               std::to_string(i) + " has " + std::to_string(rel[i].size()) +
                               " partners)");
      }
      r[i] = static_cast<std::uint32_t>(rel[i][0]);
    }
    return r;
  }

  static bool equal(const Map& a, const Map& b) { return a == b; }

  static std::optional<std::size_t> first_difference(const Map& a, const Map& b) {
    for (std::size_t t = 0; t < a.size() && t < b.size(); ++t)
      if (a[t] != b[t]) return t;
    if (a.size() != b.size()) return std::min(a.size(), b.size());
    return std::nullopt;
  }

  static Inverted<SpanBackend> invert(const Cell2<SpanBackend>& c) {
    const std::size_t ns = c.src->size(), nt = c.tgt->size();
    std::vector<long> pre(ns, -1);
    for (std::size_t t = 0; t < nt; ++t) {
      auto s = c.map[t];
      if (pre[s] >= 0) {
        return Witness{"multiple-preimages", "src", {s, static_cast<std::size_t>(pre[s]), t},
                       {}, "source element has two preimages in the target carrier"};
      }
      pre[s] = static_cast<long>(t);
    }
    for (std::size_t s = 0; s < ns; ++s) {
      if (pre[s] < 0) return Witness{"no-preimage", "src", {s}, {}, "source element is not hit"};
    }
    Map inv(ns);
    for (std::size_t s = 0; s < ns; ++s) inv[s] = static_cast<std::uint32_t>(pre[s]);
    return Cell2<SpanBackend>{c.tgt, c.src, inv};
  }

  // Recheck a witness against the cell's function.
  static bool replay(const Cell2<SpanBackend>& c, const Witness& w) {
    const std::size_t ns = c.src->size();
    if (w.kind == "multiple-preimages") {
      if (w.elements.size() != 3 || w.elements[1] == w.elements[2]) return false;
      auto s = w.elements[0], t1 = w.elements[1], t2 = w.elements[2];
      return s < ns && t1 < c.map.size() && t2 < c.map.size() && c.map[t1] == s && c.map[t2] == s;
    }
    if (w.kind == "no-preimage") {
      if (w.elements.size() != 1 || w.elements[0] >= ns) return false;
      for (auto s : c.map)
        if (s == w.elements[0]) return false;
      return true;
    }
    return false;
  }
};

using SpanCell2 = Cell2<SpanBackend>;

}  // namespace duo
