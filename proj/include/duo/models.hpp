#pragma once

// Bimonoid constructors: trivial bialgebras, finite categories, bialgebras
// from structure constants, linearized categories and seeded random corpora.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "duo/gvec.hpp"
#include "duo/hopf.hpp"
#include "duo/span.hpp"

namespace duo {

// A 1-cell with, for every element, the element indices of its "slot" atoms.
struct Tracked {
  OneCell cell;
  std::vector<std::vector<std::size_t>> slots;
};

inline Tracked track_plain(const OneCell& c) { return {c, std::vector<std::vector<std::size_t>>(c->size())}; }

// A single-atom cell whose slot is the atom element index.
inline Tracked track_slot(const OneCell& c) {
  Tracked t{c, {}};
  for (std::size_t e = 0; e < c->size(); ++e) t.slots.push_back({static_cast<std::size_t>(c->seq(e)[0])});
  return t;
}

// Carrier index of each atom element of a single-atom cell.
inline std::vector<std::size_t> carrier_of(const OneCell& c) {
  std::vector<std::size_t> r(c->size());
  for (std::size_t e = 0; e < c->size(); ++e) r[static_cast<std::size_t>(c->seq(e)[0])] = e;
  return r;
}

// g.f with f's slots first.
inline Tracked track_compose(const Tracked& g, const Tracked& f) {
  auto d = compose_detail(g.cell, f.cell);
  Tracked t{d.cell, {}};
  for (auto [fi, gi] : d.prov) {
    auto s = f.slots[fi];
    s.insert(s.end(), g.slots[gi].begin(), g.slots[gi].end());
    t.slots.push_back(std::move(s));
  }
  return t;
}

inline Tracked track_tensor(const Tracked& f, const Tracked& g) {
  auto d = tensor_detail(f.cell, g.cell);
  Tracked t{d.cell, {}};
  for (auto [fi, gi] : d.prov) {
    auto s = f.slots[fi];
    s.insert(s.end(), g.slots[gi].begin(), g.slots[gi].end());
    t.slots.push_back(std::move(s));
  }
  return t;
}

template <class B>
Tracked track_bullet(const FrobMonoidale<B>& F, const Tracked& f, const Tracked& g) {
  return track_compose(track_plain(F.m), track_compose(track_tensor(f, g), track_plain(F.ms)));
}

// ---- trivial bialgebras ----

template <class B>
Bimonoid<B> trivial_i(const Duoidal<B>& D) {
  const auto& F = D.M();
  return {"i", D.i(), F.eps_m, F.eps_u, id2<B>(D.i()), id2<B>(D.i())};
}

template <class B>
Bimonoid<B> trivial_j(const Duoidal<B>& D) {
  const auto& F = D.M();
  OneCell j = D.j();
  return {"j", j, D.lunit_b(j), id2<B>(j), D.xi0(), F.eps_u};
}

// ---- finite categories (span backend) ----

struct FiniteCategory {
  int objects = 0;
  std::vector<int> src, tgt;             // per morphism
  std::vector<int> ident;                // per object
  std::vector<std::vector<int>> comp;    // comp[g][f] = g after f, or -1
  std::string name;

  int size() const { return static_cast<int>(src.size()); }
};

// Empty when the table is a category; otherwise a description of the failure.
inline std::string category_error(const FiniteCategory& C) {
  const int n = C.size();
  if (static_cast<int>(C.tgt.size()) != n) return "source/target lists differ in length";
  if (static_cast<int>(C.ident.size()) != C.objects) return "identity list length differs from object count";
  if (static_cast<int>(C.comp.size()) != n) return "composition table has the wrong number of rows";
  for (int f = 0; f < n; ++f) {
    if (C.src[f] < 0 || C.src[f] >= C.objects || C.tgt[f] < 0 || C.tgt[f] >= C.objects)
      return "morphism " + std::to_string(f) + " has an endpoint out of range";
    if (static_cast<int>(C.comp[f].size()) != n) return "composition row " + std::to_string(f) + " has wrong length";
  }
  for (int x = 0; x < C.objects; ++x) {
    int e = C.ident[x];
    if (e < 0 || e >= n || C.src[e] != x || C.tgt[e] != x) return "identity of object " + std::to_string(x) + " is not an endomorphism";
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      int h = C.comp[g][f];
      bool composable = C.tgt[f] == C.src[g];
      if (composable != (h >= 0)) return "composability of (" + std::to_string(g) + "," + std::to_string(f) + ") is wrong";
      if (h >= n) return "composite out of range";
      if (h >= 0 && (C.src[h] != C.src[f] || C.tgt[h] != C.tgt[g]))
        return "composite (" + std::to_string(g) + "," + std::to_string(f) + ") has wrong endpoints";
    }
  for (int f = 0; f < n; ++f) {
    if (C.comp[f][C.ident[C.src[f]]] != f || C.comp[C.ident[C.tgt[f]]][f] != f)
      return "identity law fails at morphism " + std::to_string(f);
  }
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (C.comp[h][g] < 0) continue;
      for (int f = 0; f < n; ++f) {
        if (C.comp[g][f] < 0) continue;
        if (C.comp[C.comp[h][g]][f] != C.comp[h][C.comp[g][f]])
          return "associativity fails at (" + std::to_string(h) + "," + std::to_string(g) + "," + std::to_string(f) + ")";
      }
    }
  return {};
}

inline bool groupoid_oracle(const FiniteCategory& C) {
  for (int f = 0; f < C.size(); ++f) {
    bool found = false;
    for (int g = 0; g < C.size() && !found; ++g) {
      if (C.comp[g][f] == C.ident[C.src[f]] && C.comp[f][g] == C.ident[C.tgt[f]]) found = true;
    }
    if (!found) return false;
  }
  return true;
}

// The arrow 1-cell: element f has domain point src(f) and codomain point tgt(f).
inline OneCell arrow_cell(const FiniteCategory& C, int base, const std::string& name = "a") {
  std::vector<AtomElem> es;
  for (int f = 0; f < C.size(); ++f) es.push_back({{C.tgt[f]}, {C.src[f]}});
  return atom_cell(make_atom(name, base, 1, 1, es));
}

namespace detail {

// The element index of a tracked cell with the given slot tuple.
inline std::map<std::vector<std::size_t>, std::size_t> slot_index(const Tracked& t) {
  std::map<std::vector<std::size_t>, std::size_t> m;
  for (std::size_t e = 0; e < t.slots.size(); ++e) m.emplace(t.slots[e], e);
  return m;
}

}  // namespace detail

inline Bimonoid<SpanBackend> category_bimonoid(const Duoidal<SpanBackend>& D, const FiniteCategory& C) {
  if (auto err = category_error(C); !err.empty()) throw ValidationError("category '" + C.name + "': " + err);
  if (C.objects != D.base()) throw ValidationError("category object count differs from the backend base");
  const auto& F = D.M();
  OneCell a = arrow_cell(C, D.base());
  Tracked ta = track_slot(a);
  Tracked aa = track_compose(ta, ta);           // a o a, first-applied slot first
  Tracked ab = track_bullet(F, ta, ta);         // a * a
  auto ab_idx = detail::slot_index(ab);
  const auto at = carrier_of(a);
  Bimonoid<SpanBackend> bm;
  bm.name = C.name;
  bm.a = a;
  // delta: (f, g) |-> g after f
  SpanBackend::Map dm(aa.cell->size());
  for (std::size_t e = 0; e < aa.slots.size(); ++e) {
    int f = static_cast<int>(aa.slots[e][0]), g = static_cast<int>(aa.slots[e][1]);
    dm[e] = static_cast<std::uint32_t>(at[C.comp[g][f]]);
  }
  bm.delta = {a, aa.cell, dm};
  // eps: object x |-> identity of x
  OneCell i = D.i();
  SpanBackend::Map em(i->size());
  for (std::size_t e = 0; e < i->size(); ++e) em[e] = static_cast<std::uint32_t>(at[C.ident[i->val(e)[0]]]);
  bm.eps = {a, i, em};
  // mu: f |-> (f, f)
  SpanBackend::Map mm(a->size());
  for (std::size_t f = 0; f < a->size(); ++f) mm[at[f]] = static_cast<std::uint32_t>(ab_idx.at({f, f}));
  bm.mu = {ab.cell, a, mm};
  bm.eta = by_grade<SpanBackend>(D.j(), a);
  return bm;
}

// ---- bialgebras from structure constants (gvec backend) ----

struct Term {
  std::vector<std::size_t> idx;  // basis indices
  Rational coeff;
};

// Structure constants over a graded basis.  Grades give the (codomain, domain)
// base points of each basis vector.
struct BialgebraData {
  std::string name;
  std::vector<std::pair<int, int>> grades;        // (cod, dom) per basis vector
  std::vector<std::vector<Term>> mult;            // mult[x*k + y] = x y as terms {z}
  std::vector<Term> unit;                         // image of the unit of j at each grade: terms {z}
  std::vector<std::vector<Term>> comult;          // comult[z] = terms {x, y}, x applied first
  std::vector<Rational> counit;                   // per basis vector (only for endo grades)
};

inline Bimonoid<GVecBackend> bialgebra_bimonoid(const Duoidal<GVecBackend>& D, const BialgebraData& d) {
  const auto& F = D.M();
  const std::size_t k = d.grades.size();
  std::vector<AtomElem> es;
  for (auto [c, s] : d.grades) es.push_back({{c}, {s}});
  OneCell a = atom_cell(make_atom("a", D.base(), 1, 1, es));
  Tracked ta = track_slot(a);
  Tracked aa = track_compose(ta, ta);
  Tracked ab = track_bullet(F, ta, ta);
  auto aa_idx = detail::slot_index(aa);
  auto ab_idx = detail::slot_index(ab);
  const auto at = carrier_of(a);
  Bimonoid<GVecBackend> bm;
  bm.name = d.name;
  bm.a = a;
  auto missing = [&](const std::string& what) { return ValidationError(d.name + ": " + what + " leaves the grading"); };

  bm.mu = zero2(ab.cell, a);
  for (std::size_t e = 0; e < ab.slots.size(); ++e) {
    std::size_t x = ab.slots[e][0], y = ab.slots[e][1];
    for (const auto& t : d.mult.at(x * k + y)) {
      if (!a->same_grade(at[t.idx[0]], *ab.cell, e)) throw missing("multiplication");
      bm.mu.map.rows[at[t.idx[0]]].push_back({static_cast<std::uint32_t>(e), t.coeff});
    }
  }
  OneCell j = D.j();
  bm.eta = zero2(j, a);
  for (const auto& t : d.unit) {
    std::size_t z = at[t.idx[0]];
    long col = -1;
    for (std::size_t e = 0; e < j->size(); ++e)
      if (a->same_grade(z, *j, e)) col = static_cast<long>(e);
    if (col < 0) throw missing("unit");
    bm.eta.map.rows[z].push_back({static_cast<std::uint32_t>(col), t.coeff});
  }
  bm.delta = zero2(a, aa.cell);
  for (std::size_t z = 0; z < k; ++z) {
    for (const auto& t : d.comult.at(z)) {
      auto it = aa_idx.find({t.idx[0], t.idx[1]});
      if (it == aa_idx.end() || !aa.cell->same_grade(it->second, *a, at[z])) throw missing("comultiplication");
      bm.delta.map.rows[it->second].push_back({static_cast<std::uint32_t>(at[z]), t.coeff});
    }
  }
  OneCell i = D.i();
  bm.eps = zero2(a, i);
  for (std::size_t z = 0; z < k; ++z) {
    if (d.counit.at(z) == 0) continue;
    long row = -1;
    for (std::size_t e = 0; e < i->size(); ++e)
      if (a->same_grade(at[z], *i, e)) row = static_cast<long>(e);
    if (row < 0) throw missing("counit");
    bm.eps.map.rows[row].push_back({static_cast<std::uint32_t>(at[z]), d.counit[z]});
  }
  for (auto* c : {&bm.mu, &bm.eta, &bm.delta, &bm.eps})
    for (auto& r : c->map.rows) normalize_row(r);
  return bm;
}

// Group or monoid algebra over Q with grouplike basis.
inline BialgebraData monoid_algebra_data(const std::vector<std::vector<int>>& table, int unit, const std::string& name) {
  const std::size_t k = table.size();
  for (const auto& row : table) {
    if (row.size() != k) throw ValidationError(name + ": multiplication table is not square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= k) throw ValidationError(name + ": table entry out of range");
  }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw ValidationError(name + ": associativity fails at (" + std::to_string(x) + "," + std::to_string(y) +
                                "," + std::to_string(z) + ")");
  if (unit < 0 || static_cast<std::size_t>(unit) >= k) throw ValidationError(name + ": unit out of range");
  for (std::size_t x = 0; x < k; ++x)
    if (table[unit][x] != static_cast<int>(x) || table[x][unit] != static_cast<int>(x))
      throw ValidationError(name + ": unit law fails at " + std::to_string(x));
  BialgebraData d;
  d.name = name;
  d.grades.assign(k, {0, 0});
  d.mult.resize(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) d.mult[x * k + y] = {{{static_cast<std::size_t>(table[x][y])}, 1}};
  d.unit = {{{static_cast<std::size_t>(unit)}, 1}};
  d.comult.resize(k);
  for (std::size_t z = 0; z < k; ++z) d.comult[z] = {{{z, z}, 1}};
  d.counit.assign(k, 1);
  return d;
}

inline std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return t;
}

// S3 as permutations of {0,1,2} in lexicographic order; composition x after y.
inline std::vector<std::vector<int>> s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      std::vector<int> c(3);
      for (int s = 0; s < 3; ++s) c[s] = perms[x][perms[y][s]];
      t[x][y] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

inline Bimonoid<GVecBackend> group_algebra(const Duoidal<GVecBackend>& D, const std::vector<std::vector<int>>& table,
                                           int unit, const std::string& name) {
  return bialgebra_bimonoid(D, monoid_algebra_data(table, unit, name));
}

// Sweedler's 4-dimensional Hopf algebra, basis 1, g, x, gx.
inline BialgebraData sweedler_data() {
  BialgebraData d;
  d.name = "sweedler";
  d.grades.assign(4, {0, 0});
  auto code = [](int gp, int xp) { return static_cast<std::size_t>(gp + 2 * xp); };  // 1, g, x, gx
  d.mult.resize(16);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          std::size_t lhs = code(a1, b1), rhs = code(a2, b2);
          if (b1 == 1 && b2 == 1) continue;
          Rational sign = (b1 == 1 && a2 == 1) ? -1 : 1;
          d.mult[lhs * 4 + rhs] = {{{code((a1 + a2) % 2, b1 + b2)}, sign}};
        }
  d.unit = {{{0}, 1}};
  d.comult.resize(4);
  d.comult[0] = {{{0, 0}, 1}};
  d.comult[1] = {{{1, 1}, 1}};
  d.comult[2] = {{{2, 0}, 1}, {{1, 2}, 1}};   // x (x) 1 + g (x) x
  d.comult[3] = {{{3, 1}, 1}, {{0, 3}, 1}};   // gx (x) g + 1 (x) gx
  d.counit = {1, 1, 0, 0};
  return d;
}

// The linearized category: mu(f, g) = [f = g] f, eta = sum of arrows in a grade,
// delta(h) = sum over factorizations, eps(f) = [f is an identity].
inline BialgebraData linearized_category_data(const FiniteCategory& C) {
  if (auto err = category_error(C); !err.empty()) throw ValidationError("category '" + C.name + "': " + err);
  const std::size_t k = static_cast<std::size_t>(C.size());
  BialgebraData d;
  d.name = C.name + "-linearized";
  for (std::size_t f = 0; f < k; ++f) d.grades.push_back({C.tgt[f], C.src[f]});
  d.mult.resize(k * k);
  for (std::size_t f = 0; f < k; ++f) d.mult[f * k + f] = {{{f}, 1}};
  for (std::size_t f = 0; f < k; ++f) d.unit.push_back({{f}, 1});
  d.comult.resize(k);
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t g = 0; g < k; ++g) {
      int h = C.comp[g][f];
      if (h >= 0) d.comult[static_cast<std::size_t>(h)].push_back({{f, g}, 1});
    }
  d.counit.assign(k, 0);
  for (int x = 0; x < C.objects; ++x) d.counit[static_cast<std::size_t>(C.ident[x])] = 1;
  return d;
}

// ---- named small categories ----

inline FiniteCategory discrete_category(int n) {
  FiniteCategory C;
  C.name = "discrete" + std::to_string(n);
  C.objects = n;
  for (int x = 0; x < n; ++x) {
    C.src.push_back(x);
    C.tgt.push_back(x);
    C.ident.push_back(x);
  }
  C.comp.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) C.comp[x][x] = x;
  return C;
}

inline FiniteCategory walking_arrow() {
  FiniteCategory C;
  C.name = "walking-arrow";
  C.objects = 2;
  C.src = {0, 1, 0};
  C.tgt = {0, 1, 1};
  C.ident = {0, 1};
  C.comp = {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}};
  return C;
}

// A group as a one-object category.
inline FiniteCategory group_category(const std::vector<std::vector<int>>& table, int unit, const std::string& name) {
  FiniteCategory C;
  C.name = name;
  C.objects = 1;
  const int k = static_cast<int>(table.size());
  C.src.assign(k, 0);
  C.tgt.assign(k, 0);
  C.ident = {unit};
  C.comp = table;
  return C;
}

// ---- random finite categories ----

// A concrete category: objects are small finite sets, morphisms are the
// closure under composition of random generating functions.  With `groupoid`
// the generators are bijections together with their inverses.
inline std::optional<FiniteCategory> random_concrete_category(std::mt19937_64& rng, int max_objects, int max_morphisms,
                                                              bool groupoid) {
  std::uniform_int_distribution<int> nobj(1, max_objects);
  const int n = nobj(rng);
  std::vector<int> size(n);
  for (auto& s : size) s = std::uniform_int_distribution<int>(1, 3)(rng);
  using Fn = std::vector<int>;
  struct Mor {
    int s, t;
    Fn f;
    bool operator<(const Mor& o) const { return std::tie(s, t, f) < std::tie(o.s, o.t, o.f); }
  };
  std::set<Mor> mors;
  for (int x = 0; x < n; ++x) {
    Fn id(size[x]);
    for (int v = 0; v < size[x]; ++v) id[v] = v;
    mors.insert({x, x, id});
  }
  const int ngen = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<Mor> gens;
  for (int k = 0; k < ngen; ++k) {
    int s = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int t = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (groupoid) {
      if (size[s] != size[t]) continue;
      Fn f(size[s]);
      for (int v = 0; v < size[s]; ++v) f[v] = v;
      std::shuffle(f.begin(), f.end(), rng);
      Fn inv(size[s]);
      for (int v = 0; v < size[s]; ++v) inv[f[v]] = v;
      gens.push_back({s, t, f});
      gens.push_back({t, s, inv});
    } else {
      Fn f(size[s]);
      for (auto& v : f) v = std::uniform_int_distribution<int>(0, size[t] - 1)(rng);
      gens.push_back({s, t, f});
    }
  }
  for (const auto& g : gens) mors.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mor> cur(mors.begin(), mors.end());
    for (const auto& f : cur)
      for (const auto& g : cur) {
        if (f.t != g.s) continue;
        Fn h(f.f.size());
        for (std::size_t v = 0; v < h.size(); ++v) h[v] = g.f[f.f[v]];
        if (mors.insert({f.s, g.t, h}).second) grew = true;
        if (static_cast<int>(mors.size()) > max_morphisms) return std::nullopt;
      }
  }
  std::vector<Mor> list(mors.begin(), mors.end());
  FiniteCategory C;
  C.objects = n;
  const int k = static_cast<int>(list.size());
  std::map<Mor, int> index;
  for (int q = 0; q < k; ++q) {
    index[list[q]] = q;
    C.src.push_back(list[q].s);
    C.tgt.push_back(list[q].t);
  }
  C.ident.resize(n);
  for (int x = 0; x < n; ++x) {
    Fn id(size[x]);
    for (int v = 0; v < size[x]; ++v) id[v] = v;
    C.ident[x] = index.at({x, x, id});
  }
  C.comp.assign(k, std::vector<int>(k, -1));
  for (int g = 0; g < k; ++g)
    for (int f = 0; f < k; ++f) {
      if (list[f].t != list[g].s) continue;
      Fn h(list[f].f.size());
      for (std::size_t v = 0; v < h.size(); ++v) h[v] = list[g].f[list[f].f[v]];
      C.comp[g][f] = index.at({list[f].s, list[g].t, h});
    }
  return C;
}

// Deterministic corpus of finite categories with at most 4 objects and 12 morphisms.
inline std::vector<FiniteCategory> category_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteCategory> out;
  out.push_back(discrete_category(2));
  out.push_back(walking_arrow());
  out.push_back(group_category(cyclic_table(2), 0, "Z2"));
  while (out.size() < count) {
    bool groupoid = (out.size() % 2) == 0;
    auto c = random_concrete_category(rng, 4, 12, groupoid);
    if (!c) continue;
    c->name = "random" + std::to_string(out.size());
    out.push_back(std::move(*c));
  }
  return out;
}

// ---- random 1-cells ----

// A random atom M^p -> M^q with 1..max_elems elements.
inline OneCell random_atom(std::mt19937_64& rng, int base, int p, int q, int max_elems, const std::string& name) {
  const int k = std::uniform_int_distribution<int>(1, max_elems)(rng);
  std::uniform_int_distribution<int> pt(0, base - 1);
  std::vector<AtomElem> es;
  for (int e = 0; e < k; ++e) {
    AtomElem a;
    for (int c = 0; c < q; ++c) a.cod.push_back(pt(rng));
    for (int d = 0; d < p; ++d) a.dom.push_back(pt(rng));
    es.push_back(std::move(a));
  }
  return atom_cell(make_atom(name, base, p, q, es));
}

inline OneCell random_endo(std::mt19937_64& rng, int base, int max_elems, const std::string& name) {
  return random_atom(rng, base, 1, 1, max_elems, name);
}

// A random 2-cell f => g out of an atom f.  In the span backend g is a random
// multiset of elements of f; in gvec g has grades drawn from those of f and
// the entries lie in -2..2.
template <class B>
Cell2<B> random_2cell(std::mt19937_64& rng, const OneCell& f, int max_elems, const std::string& name) {
  if (f->occ.size() != 1) throw ValidationError("random_2cell: source must be a single atom");
  const auto& fe = f->occ[0].atom->elems;
  const auto fat = carrier_of(f);
  const int k = std::uniform_int_distribution<int>(1, max_elems)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, fe.size() - 1);
  std::vector<std::size_t> picks;
  std::vector<AtomElem> es;
  for (int e = 0; e < k; ++e) {
    picks.push_back(pick(rng));
    es.push_back(fe[picks.back()]);
  }
  OneCell g = atom_cell(make_atom(name, f->base, f->p, f->q, es));
  if constexpr (B::linear) {
    Cell2<B> c = zero2(f, g);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (std::size_t t = 0; t < g->size(); ++t) {
      for (std::size_t s = 0; s < f->size(); ++s)
        if (g->same_grade(t, *f, s))
          if (int v = coeff(rng)) c.map.rows[t].push_back({static_cast<std::uint32_t>(s), Rational(v)});
      normalize_row(c.map.rows[t]);
    }
    return c;
  } else {
    Cell2<B> c{f, g, typename B::Map(g->size())};
    for (std::size_t t = 0; t < g->size(); ++t)
      c.map[t] = static_cast<std::uint32_t>(fat[picks[static_cast<std::size_t>(g->seq(t)[0])]]);
    return c;
  }
}

// A random grade-preserving 2-cell src => tgt, if one exists.
template <class B>
std::optional<Cell2<B>> random_parallel(std::mt19937_64& rng, const OneCell& src, const OneCell& tgt) {
  if constexpr (B::linear) {
    Cell2<B> c = zero2(src, tgt);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (std::size_t t = 0; t < tgt->size(); ++t) {
      for (std::size_t s = 0; s < src->size(); ++s)
        if (tgt->same_grade(t, *src, s))
          if (int v = coeff(rng)) c.map.rows[t].push_back({static_cast<std::uint32_t>(s), Rational(v)});
      normalize_row(c.map.rows[t]);
    }
    return c;
  } else {
    Cell2<B> c{src, tgt, typename B::Map(tgt->size())};
    for (std::size_t t = 0; t < tgt->size(); ++t) {
      std::vector<std::uint32_t> options;
      for (std::size_t s = 0; s < src->size(); ++s)
        if (tgt->same_grade(t, *src, s)) options.push_back(static_cast<std::uint32_t>(s));
      if (options.empty()) return std::nullopt;
      c.map[t] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    }
    return c;
  }
}

}  // namespace duo
