#pragma once

// 1-cells M^p -> M^q of a "matrix" monoidal bicategory over a finite base.
//
// A 1-cell is kept as a string diagram: occurrences of generating atoms joined
// by wires.  Every wire carries a base point in [0, base); an element of the
// carrier is a consistent choice of one atom element per occurrence.  The
// diagram is stored in a canonical order obtained from a depth-first walk
// starting at the boundary, so composites that differ only by associativity,
// unit laws or interchange are literally equal.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "duo/error.hpp"

namespace duo {

struct AtomElem {
  std::vector<int> cod;
  std::vector<int> dom;
  bool operator==(const AtomElem&) const = default;
};

struct Atom {
  std::string name;
  int base = 0;
  int p = 0;  // domain arity
  int q = 0;  // codomain arity
  std::vector<AtomElem> elems;
  std::string key;
};
using AtomPtr = std::shared_ptr<const Atom>;

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <class V>
struct VecHash {
  std::size_t operator()(const V& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace detail

inline AtomPtr make_atom(std::string name, int base, int p, int q, std::vector<AtomElem> elems) {
  std::ostringstream os;
  os << base << '|' << p << '|' << q << '|';
  for (const auto& e : elems) {
    if (static_cast<int>(e.cod.size()) != q || static_cast<int>(e.dom.size()) != p) {
      throw ValidationError("atom '" + name + "': element arity does not match " +
                            std::to_string(p) + "->" + std::to_string(q));
    }
    for (int c : e.cod) {
      if (c < 0 || c >= base) throw ValidationError("atom '" + name + "': base point out of range");
      os << c << ',';
    }
    os << ';';
    for (int d : e.dom) {
      if (d < 0 || d >= base) throw ValidationError("atom '" + name + "': base point out of range");
      os << d << ',';
    }
    os << '/';
  }
  auto a = std::make_shared<Atom>();
  a->name = std::move(name);
  a->base = base;
  a->p = p;
  a->q = q;
  a->elems = std::move(elems);
  std::ostringstream k;
  k << a->name << '#' << std::hex << detail::fnv1a(os.str());
  a->key = k.str();
  return a;
}

// The transpose atom: same elements with domain and codomain exchanged.
inline AtomPtr transpose_atom(const AtomPtr& a, const std::string& name) {
  std::vector<AtomElem> es;
  es.reserve(a->elems.size());
  for (const auto& e : a->elems) es.push_back({e.dom, e.cod});
  return make_atom(name, a->base, a->q, a->p, std::move(es));
}

struct Occurrence {
  AtomPtr atom;
  std::vector<int> in;   // wire ids, one per domain port
  std::vector<int> out;  // wire ids, one per codomain port
};

class OneCellData;
using OneCell = std::shared_ptr<const OneCellData>;

class OneCellData {
 public:
  int base = 0;
  int p = 0;
  int q = 0;
  int nwires = 0;
  std::vector<int> dom;  // wire id at each domain port
  std::vector<int> cod;  // wire id at each codomain port
  std::vector<Occurrence> occ;
  // Flattened carrier: element e has wire values vals[e*nwires ...] and
  // atom element indices seqs[e*occ.size() ...].
  std::vector<int> vals;
  std::vector<int> seqs;
  std::size_t nelems = 0;
  std::string sig;

  std::size_t size() const { return nelems; }
  const int* val(std::size_t e) const { return vals.data() + e * nwires; }
  const int* seq(std::size_t e) const { return seqs.data() + e * occ.size(); }
  int cod_val(std::size_t e, int k) const { return val(e)[cod[k]]; }
  int dom_val(std::size_t e, int k) const { return val(e)[dom[k]]; }

  std::vector<int> cod_tuple(std::size_t e) const {
    std::vector<int> t(q);
    for (int k = 0; k < q; ++k) t[k] = cod_val(e, k);
    return t;
  }
  std::vector<int> dom_tuple(std::size_t e) const {
    std::vector<int> t(p);
    for (int k = 0; k < p; ++k) t[k] = dom_val(e, k);
    return t;
  }
  // Boundary values (cod then dom); the grade of an element.
  std::vector<int> grade(std::size_t e) const {
    std::vector<int> t;
    t.reserve(p + q);
    for (int k = 0; k < q; ++k) t.push_back(cod_val(e, k));
    for (int k = 0; k < p; ++k) t.push_back(dom_val(e, k));
    return t;
  }
  bool same_grade(std::size_t e, const OneCellData& o, std::size_t f) const {
    for (int k = 0; k < q; ++k)
      if (cod_val(e, k) != o.cod_val(f, k)) return false;
    for (int k = 0; k < p; ++k)
      if (dom_val(e, k) != o.dom_val(f, k)) return false;
    return true;
  }

  // Human-readable formula, for diagnostics only.
  std::string describe() const;
  std::string describe_element(std::size_t e) const;
};

inline bool same(const OneCell& a, const OneCell& b) {
  return a == b || (a->base == b->base && a->sig == b->sig);
}

namespace detail {

// A string diagram before canonical ordering.
struct Graph {
  int base = 0;
  int p = 0, q = 0, nwires = 0;
  std::vector<int> dom, cod;
  std::vector<Occurrence> occ;
};

struct Canon {
  std::vector<int> occ_order;  // new position -> old occurrence index
  std::vector<int> wire_new;   // old wire id -> new wire id
  std::string sig;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g) {
    src_.assign(g.nwires, {-2, -1});
    tgt_.assign(g.nwires, {-2, -1});
    for (int k = 0; k < g.p; ++k) src_[g.dom[k]] = {-1, k};
    for (int k = 0; k < g.q; ++k) tgt_[g.cod[k]] = {-1, k};
    for (int o = 0; o < static_cast<int>(g.occ.size()); ++o) {
      for (int k = 0; k < static_cast<int>(g.occ[o].in.size()); ++k) tgt_[g.occ[o].in[k]] = {o, k};
      for (int k = 0; k < static_cast<int>(g.occ[o].out.size()); ++k) src_[g.occ[o].out[k]] = {o, k};
    }
  }

  Canon run() {
    const int n = static_cast<int>(g_.occ.size());
    seen_.assign(n, 0);
    wnum_.assign(g_.nwires, -1);
    order_.clear();
    next_ = 0;
    for (int k = 0; k < g_.p; ++k) {
      int w = g_.dom[k];
      touch(w);
      if (tgt_[w].first >= 0) visit(tgt_[w].first);
    }
    for (int k = 0; k < g_.q; ++k) {
      int w = g_.cod[k];
      touch(w);
      if (src_[w].first >= 0) visit(src_[w].first);
    }
    // Components not reachable from the boundary are ordered by their own
    // canonical serialization.  Identical ones keep their vertical order: the
    // input lists occurrences bottom to top, so the last occurrence of a
    // component gives its height.
    struct Floating {
      std::string ser;
      int height;
      int start;
    };
    std::vector<Floating> floating;
    std::vector<char> claimed(seen_);
    for (int o = 0; o < n; ++o) {
      if (claimed[o]) continue;
      std::vector<int> comp = component(o);
      std::string best;
      int best_start = -1, height = -1;
      for (int s : comp) {
        claimed[s] = 1;
        height = std::max(height, s);
        std::string ser = serialize_from(s);
        if (best_start < 0 || ser < best) {
          best = ser;
          best_start = s;
        }
      }
      floating.push_back({best, height, best_start});
    }
    std::sort(floating.begin(), floating.end(), [](const Floating& a, const Floating& b) {
      return std::tie(a.ser, a.height) < std::tie(b.ser, b.height);
    });
    for (const auto& f : floating) visit(f.start);
    for (int w = 0; w < g_.nwires; ++w) touch(w);

    Canon c;
    c.occ_order = order_;
    c.wire_new = wnum_;
    std::ostringstream os;
    os << g_.p << ':' << g_.q << '|';
    for (int o : order_) {
      const auto& oc = g_.occ[o];
      os << oc.atom->key << '(';
      for (int w : oc.in) os << wnum_[w] << ',';
      os << ")(";
      for (int w : oc.out) os << wnum_[w] << ',';
      os << ')';
    }
    os << "|d";
    for (int w : g_.dom) os << wnum_[w] << ',';
    os << "|c";
    for (int w : g_.cod) os << wnum_[w] << ',';
    c.sig = os.str();
    return c;
  }

 private:
  void touch(int w) {
    if (wnum_[w] < 0) wnum_[w] = next_++;
  }

  void visit(int o) {
    if (seen_[o]) return;
    seen_[o] = 1;
    order_.push_back(o);
    const auto& oc = g_.occ[o];
    for (int w : oc.in) {
      touch(w);
      if (src_[w].first >= 0) visit(src_[w].first);
    }
    for (int w : oc.out) {
      touch(w);
      if (tgt_[w].first >= 0) visit(tgt_[w].first);
    }
  }

  std::vector<int> component(int start) const {
    std::vector<int> comp{start};
    std::vector<char> in(g_.occ.size(), 0);
    in[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto& oc = g_.occ[comp[i]];
      auto add = [&](int o) {
        if (o >= 0 && !in[o]) {
          in[o] = 1;
          comp.push_back(o);
        }
      };
      for (int w : oc.in) add(src_[w].first);
      for (int w : oc.out) add(tgt_[w].first);
    }
    return comp;
  }

  std::string serialize_from(int start) const {
    std::vector<int> wn(g_.nwires, -1);
    std::vector<char> seen(g_.occ.size(), 0);
    int next = 0;
    std::ostringstream os;
    auto rec = [&](auto&& self, int o) -> void {
      if (seen[o]) return;
      seen[o] = 1;
      const auto& oc = g_.occ[o];
      os << oc.atom->key << '(';
      for (int w : oc.in) {
        if (wn[w] < 0) wn[w] = next++;
        os << wn[w] << ',';
      }
      os << ")(";
      for (int w : oc.out) {
        if (wn[w] < 0) wn[w] = next++;
        os << wn[w] << ',';
      }
      os << ')';
      for (int w : oc.in)
        if (src_[w].first >= 0) self(self, src_[w].first);
      for (int w : oc.out)
        if (tgt_[w].first >= 0) self(self, tgt_[w].first);
    };
    rec(rec, start);
    return os.str();
  }

  const Graph& g_;
  std::vector<std::pair<int, int>> src_, tgt_;
  std::vector<char> seen_;
  std::vector<int> wnum_;
  std::vector<int> order_;
  int next_ = 0;
};

// Raw carrier before canonical reordering: per element, values over the
// graph's wires and atom element per graph occurrence.
struct RawElems {
  std::vector<int> vals;
  std::vector<int> seqs;
  std::size_t n = 0;
};

struct Built {
  OneCell cell;
  std::vector<std::size_t> perm;  // canonical element index -> raw element index
};

inline Built finalize(const Graph& g, const RawElems& raw) {
  Canon c = Canonicalizer(g).run();
  auto d = std::make_shared<OneCellData>();
  d->base = g.base;
  d->p = g.p;
  d->q = g.q;
  d->nwires = g.nwires;
  const int K = static_cast<int>(g.occ.size());
  d->occ.resize(K);
  for (int i = 0; i < K; ++i) {
    const auto& o = g.occ[c.occ_order[i]];
    Occurrence no;
    no.atom = o.atom;
    for (int w : o.in) no.in.push_back(c.wire_new[w]);
    for (int w : o.out) no.out.push_back(c.wire_new[w]);
    d->occ[i] = std::move(no);
  }
  for (int w : g.dom) d->dom.push_back(c.wire_new[w]);
  for (int w : g.cod) d->cod.push_back(c.wire_new[w]);
  d->sig = std::move(c.sig);

  const int W = g.nwires;
  std::vector<int> vals(raw.n * W), seqs(raw.n * K);
  for (std::size_t e = 0; e < raw.n; ++e) {
    for (int w = 0; w < W; ++w) vals[e * W + c.wire_new[w]] = raw.vals[e * W + w];
    for (int i = 0; i < K; ++i) seqs[e * K + i] = raw.seqs[e * K + c.occ_order[i]];
  }
  std::vector<std::size_t> idx(raw.n);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    for (int k = 0; k < g.q; ++k) {
      int x = vals[a * W + d->cod[k]], y = vals[b * W + d->cod[k]];
      if (x != y) return x < y;
    }
    for (int k = 0; k < g.p; ++k) {
      int x = vals[a * W + d->dom[k]], y = vals[b * W + d->dom[k]];
      if (x != y) return x < y;
    }
    for (int i = 0; i < K; ++i) {
      int x = seqs[a * K + i], y = seqs[b * K + i];
      if (x != y) return x < y;
    }
    for (int w = 0; w < W; ++w) {
      int x = vals[a * W + w], y = vals[b * W + w];
      if (x != y) return x < y;
    }
    return false;
  };
  std::sort(idx.begin(), idx.end(), less);
  d->nelems = raw.n;
  d->vals.resize(raw.n * W);
  d->seqs.resize(raw.n * K);
  for (std::size_t e = 0; e < raw.n; ++e) {
    std::copy_n(vals.begin() + idx[e] * W, W, d->vals.begin() + e * W);
    std::copy_n(seqs.begin() + idx[e] * K, K, d->seqs.begin() + e * K);
  }
  return {d, idx};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Result of a composite together with, for every element, the pair of
// element indices it was formed from.
struct Detailed {
  OneCell cell;
  std::vector<std::pair<std::size_t, std::size_t>> prov;
};

inline OneCell atom_cell(const AtomPtr& a) {
  detail::Graph g;
  g.base = a->base;
  g.p = a->p;
  g.q = a->q;
  g.nwires = a->p + a->q;
  Occurrence o;
  o.atom = a;
  for (int k = 0; k < a->p; ++k) {
    g.dom.push_back(k);
    o.in.push_back(k);
  }
  for (int k = 0; k < a->q; ++k) {
    g.cod.push_back(a->p + k);
    o.out.push_back(a->p + k);
  }
  g.occ.push_back(o);
  detail::RawElems raw;
  raw.n = a->elems.size();
  for (std::size_t i = 0; i < raw.n; ++i) {
    const auto& e = a->elems[i];
    for (int x : e.dom) raw.vals.push_back(x);
    for (int x : e.cod) raw.vals.push_back(x);
    raw.seqs.push_back(static_cast<int>(i));
  }
  return detail::finalize(g, raw).cell;
}

// Identity 1-cell on M^p.
inline OneCell identity(int base, int p) {
  detail::Graph g;
  g.base = base;
  g.p = g.q = p;
  g.nwires = p;
  for (int k = 0; k < p; ++k) {
    g.dom.push_back(k);
    g.cod.push_back(k);
  }
  detail::RawElems raw;
  std::size_t n = 1;
  for (int k = 0; k < p; ++k) n *= static_cast<std::size_t>(base);
  raw.n = n;
  raw.vals.resize(n * p);
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t r = e;
    for (int k = p - 1; k >= 0; --k) {
      raw.vals[e * p + k] = static_cast<int>(r % base);
      r /= base;
    }
  }
  return detail::finalize(g, raw).cell;
}

// g.f : f first, then g.
inline Detailed compose_detail(const OneCell& g, const OneCell& f) {
  if (f->q != g->p || f->base != g->base) {
    throw CompositionError("cannot compose " + g->describe() + " after " + f->describe() +
                           ": codomain arity " + std::to_string(f->q) + " vs domain arity " +
                           std::to_string(g->p));
  }
  const int Wf = f->nwires, Wg = g->nwires;
  detail::UnionFind uf(Wf + Wg);
  for (int k = 0; k < f->q; ++k) uf.unite(Wf + g->dom[k], f->cod[k]);
  std::vector<int> rep(Wf + Wg, -1);
  int W = 0;
  for (int w = 0; w < Wf + Wg; ++w) {
    int r = uf.find(w);
    if (rep[r] < 0) rep[r] = W++;
  }
  auto wid = [&](int w) { return rep[uf.find(w)]; };
  detail::Graph gr;
  gr.base = f->base;
  gr.p = f->p;
  gr.q = g->q;
  gr.nwires = W;
  for (int w : f->dom) gr.dom.push_back(wid(w));
  for (int w : g->cod) gr.cod.push_back(wid(Wf + w));
  for (const auto& o : f->occ) {
    Occurrence n{o.atom, {}, {}};
    for (int w : o.in) n.in.push_back(wid(w));
    for (int w : o.out) n.out.push_back(wid(w));
    gr.occ.push_back(std::move(n));
  }
  for (const auto& o : g->occ) {
    Occurrence n{o.atom, {}, {}};
    for (int w : o.in) n.in.push_back(wid(Wf + w));
    for (int w : o.out) n.out.push_back(wid(Wf + w));
    gr.occ.push_back(std::move(n));
  }
  // Hash join on the middle boundary.
  std::unordered_map<std::vector<int>, std::vector<std::size_t>, detail::VecHash<std::vector<int>>> by_dom;
  for (std::size_t e = 0; e < g->size(); ++e) by_dom[g->dom_tuple(e)].push_back(e);
  const int Kf = static_cast<int>(f->occ.size()), Kg = static_cast<int>(g->occ.size());
  detail::RawElems raw;
  std::vector<std::pair<std::size_t, std::size_t>> rprov;
  for (std::size_t a = 0; a < f->size(); ++a) {
    auto it = by_dom.find(f->cod_tuple(a));
    if (it == by_dom.end()) continue;
    for (std::size_t b : it->second) {
      std::size_t base = raw.vals.size();
      raw.vals.resize(base + W);
      const int* fv = f->val(a);
      const int* gv = g->val(b);
      for (int w = 0; w < Wf; ++w) raw.vals[base + wid(w)] = fv[w];
      for (int w = 0; w < Wg; ++w) raw.vals[base + wid(Wf + w)] = gv[w];
      const int* fs = f->seq(a);
      const int* gs = g->seq(b);
      raw.seqs.insert(raw.seqs.end(), fs, fs + Kf);
      raw.seqs.insert(raw.seqs.end(), gs, gs + Kg);
      rprov.emplace_back(a, b);
      ++raw.n;
    }
  }
  auto built = detail::finalize(gr, raw);
  Detailed out{built.cell, {}};
  out.prov.reserve(raw.n);
  for (std::size_t e = 0; e < raw.n; ++e) out.prov.push_back(rprov[built.perm[e]]);
  return out;
}

inline Detailed tensor_detail(const OneCell& f, const OneCell& g) {
  if (f->base != g->base) throw CompositionError("tensor of cells over different bases");
  const int Wf = f->nwires, Wg = g->nwires, W = Wf + Wg;
  detail::Graph gr;
  gr.base = f->base;
  gr.p = f->p + g->p;
  gr.q = f->q + g->q;
  gr.nwires = W;
  for (int w : f->dom) gr.dom.push_back(w);
  for (int w : g->dom) gr.dom.push_back(Wf + w);
  for (int w : f->cod) gr.cod.push_back(w);
  for (int w : g->cod) gr.cod.push_back(Wf + w);
  for (const auto& o : f->occ) gr.occ.push_back(o);
  for (const auto& o : g->occ) {
    Occurrence n{o.atom, {}, {}};
    for (int w : o.in) n.in.push_back(Wf + w);
    for (int w : o.out) n.out.push_back(Wf + w);
    gr.occ.push_back(std::move(n));
  }
  const int Kf = static_cast<int>(f->occ.size()), Kg = static_cast<int>(g->occ.size());
  detail::RawElems raw;
  std::vector<std::pair<std::size_t, std::size_t>> rprov;
  raw.vals.reserve(f->size() * g->size() * W);
  for (std::size_t a = 0; a < f->size(); ++a) {
    for (std::size_t b = 0; b < g->size(); ++b) {
      raw.vals.insert(raw.vals.end(), f->val(a), f->val(a) + Wf);
      raw.vals.insert(raw.vals.end(), g->val(b), g->val(b) + Wg);
      raw.seqs.insert(raw.seqs.end(), f->seq(a), f->seq(a) + Kf);
      raw.seqs.insert(raw.seqs.end(), g->seq(b), g->seq(b) + Kg);
      rprov.emplace_back(a, b);
      ++raw.n;
    }
  }
  auto built = detail::finalize(gr, raw);
  Detailed out{built.cell, {}};
  out.prov.reserve(raw.n);
  for (std::size_t e = 0; e < raw.n; ++e) out.prov.push_back(rprov[built.perm[e]]);
  return out;
}

inline OneCell compose(const OneCell& g, const OneCell& f) { return compose_detail(g, f).cell; }
inline OneCell tensor(const OneCell& f, const OneCell& g) { return tensor_detail(f, g).cell; }

// dot(a, b, c) = a.b.c, the rightmost applied first.
template <class... Rest>
OneCell dot(const OneCell& a, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return a;
  } else {
    return compose(a, dot(rest...));
  }
}

template <class... Rest>
OneCell tens(const OneCell& a, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return a;
  } else {
    return tensor(a, tens(rest...));
  }
}

inline std::string OneCellData::describe() const {
  std::ostringstream os;
  os << "[M^" << p << "->M^" << q << ":";
  if (occ.empty()) os << " id";
  for (const auto& o : occ) os << ' ' << o.atom->name;
  os << " |" << nelems << "|]";
  return os.str();
}

inline std::string OneCellData::describe_element(std::size_t e) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t o = 0; o < occ.size(); ++o) os << (o ? " " : "") << occ[o].atom->name << '#' << seq(e)[o];
  os << " @";
  for (int v : grade(e)) os << ' ' << v;
  os << ')';
  return os.str();
}

// Index of an element by (seq, wire values) lookup; used to locate the image
// of an element under re-indexing.
class ElemIndex {
 public:
  explicit ElemIndex(const OneCell& c) : c_(c) {
    const std::size_t K = c->occ.size();
    const int W = c->nwires;
    for (std::size_t e = 0; e < c->size(); ++e) {
      std::vector<int> key(c->seq(e), c->seq(e) + K);
      key.insert(key.end(), c->val(e), c->val(e) + W);
      map_.emplace(std::move(key), e);
    }
  }
  long find(const std::vector<int>& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? -1 : static_cast<long>(it->second);
  }

 private:
  OneCell c_;
  std::unordered_map<std::vector<int>, std::size_t, detail::VecHash<std::vector<int>>> map_;
};

}  // namespace duo
