#pragma once

// Diagnostics for the Hopf-like conditions (a)-(i), the direct-solve antipode
// oracle, and the antipode as a matrix on the basis of a.

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "duo/galois.hpp"
#include "duo/gvec.hpp"
#include "duo/linalg.hpp"
#include "duo/models.hpp"
#include "duo/span.hpp"

namespace duo {

template <class B>
struct Verdict {
  std::string status = "not-checked";  // holds | fails | sampled-holds | not-checked
  std::size_t samples = 0;
  std::optional<Witness> witness;
  std::optional<Cell2<B>> witness_cell;  // the non-invertible cell the witness refers to
  std::string where;                     // which map / sample failed
  std::string note;

  bool ok() const { return status == "holds" || status == "sampled-holds"; }
};

template <class B>
struct DiagnosticsReport {
  std::string bimonoid;
  std::string backend;
  std::array<Verdict<B>, 9> verdicts;  // (a) .. (i)
  std::optional<Cell2<B>> antipode;
  std::optional<int> antipode_order;  // smallest k with S^k = 1 on the basis of a
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  bool all_hold() const {
    for (const auto& v : verdicts)
      if (!v.ok()) return false;
    return true;
  }
  std::vector<Witness> witnesses() const {
    std::vector<Witness> out;
    for (const auto& v : verdicts)
      if (v.witness) out.push_back(*v.witness);
    return out;
  }
};

inline const char* condition_label(std::size_t k) {
  static const char* labels[9] = {"antipode",       "hopf-map",          "cohopf-map",
                                  "galois",         "galois-j",          "cogalois",
                                  "cogalois-i",     "hopf-modules",      "dual-hopf-modules"};
  return labels[k];
}

// A 2-cell as a linear map.
template <class B>
LinMap as_linear(const Cell2<B>& c) {
  if constexpr (std::is_same_v<B, SpanBackend>)
    return linearize(c).map;
  else
    return c.map;
}

// The antipode a => a- as a matrix on the atom basis of a: entry (z, y) is the
// coefficient of z in the image of y.  Empty when a is not a single atom or
// the elements of a- do not correspond one-to-one to those of a.
template <class B>
std::optional<linalg::Dense> antipode_matrix(const Bimonoid<B>& b, const Cell2<B>& s) {
  const OneCell& a = b.a;
  if (a->occ.size() != 1) return std::nullopt;
  const AtomPtr atom = a->occ[0].atom;
  const std::size_t k = atom->elems.size();
  if (a->size() != k) return std::nullopt;
  long occ = -1;
  for (std::size_t o = 0; o < s.tgt->occ.size(); ++o) {
    if (s.tgt->occ[o].atom == atom) {
      if (occ >= 0) return std::nullopt;
      occ = static_cast<long>(o);
    }
  }
  if (occ < 0 || s.tgt->size() != k) return std::nullopt;
  std::vector<std::size_t> row_of(k, k), col_of(k);
  for (std::size_t e = 0; e < s.tgt->size(); ++e) {
    auto z = static_cast<std::size_t>(s.tgt->seq(e)[occ]);
    if (row_of[z] != k) return std::nullopt;
    row_of[z] = e;
  }
  for (std::size_t e = 0; e < a->size(); ++e) col_of[static_cast<std::size_t>(a->seq(e)[0])] = e;
  LinMap m = as_linear(s);
  linalg::Dense S(k, k);
  for (std::size_t z = 0; z < k; ++z)
    for (std::size_t y = 0; y < k; ++y) S.at(z, y) = m.get(row_of[z], col_of[y]);
  return S;
}

inline std::optional<int> matrix_order(const linalg::Dense& S, int max_order = 12) {
  const auto I = linalg::Dense::identity(S.rows);
  linalg::Dense P = S;
  for (int k = 1; k <= max_order; ++k) {
    if (P == I) return k;
    P = linalg::mul(P, S);
  }
  return std::nullopt;
}

// Solutions of both antipode diagrams, as a linear system in the entries of
// sigma : a => a-.
struct AntipodeSystem {
  bool solvable = false;
  bool unique = false;
  std::optional<GVecCell2> solution;  // the particular solution
};

inline AntipodeSystem solve_antipode_system(const HopfEngine<GVecBackend>& E, const Bimonoid<GVecBackend>& b) {
  const auto& D = E.D;
  const OneCell a = b.a, am = E.Z.minus(a), i = D.i(), j = D.j();
  struct Unknown {
    std::uint32_t row, col;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t r = 0; r < am->size(); ++r)
    for (std::size_t c = 0; c < a->size(); ++c)
      if (am->same_grade(r, *a, c)) unknowns.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)});

  // Both composites are P . (sigma o 1) . delta with P fixed.
  const GVecCell2 PY = V<GVecBackend>(D.bullet2(D.circ2(b.mu, j), i), E.Z.phi(a, a));
  const GVecCell2 PX = V<GVecBackend>(D.bullet2(i, D.circ2(j, b.mu)), E.Z.psi(a, a));
  const GVecCell2 targets[2] = {E.identity_Y(b), E.identity_X(b)};
  std::map<std::tuple<int, std::size_t, std::uint32_t>, std::size_t> eq_index;
  auto eq = [&](int d, std::size_t r, std::uint32_t c) {
    auto key = std::make_tuple(d, r, c);
    auto it = eq_index.find(key);
    if (it != eq_index.end()) return it->second;
    std::size_t n = eq_index.size();
    eq_index.emplace(key, n);
    return n;
  };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    GVecCell2 Eu = zero2(a, am);
    Eu.map.rows[unknowns[u].row].push_back({unknowns[u].col, Rational(1)});
    GVecCell2 ly = V<GVecBackend>(PY, D.circ2(a, Eu), b.delta);
    GVecCell2 lx = V<GVecBackend>(PX, D.circ2(Eu, a), b.delta);
    const GVecCell2* ls[2] = {&ly, &lx};
    for (int d = 0; d < 2; ++d)
      for (std::size_t r = 0; r < ls[d]->map.rows.size(); ++r)
        for (const auto& [c, v] : ls[d]->map.rows[r]) cols[u].push_back({eq(d, r, c), v});
  }
  std::vector<std::pair<std::size_t, Rational>> rhs;
  for (int d = 0; d < 2; ++d)
    for (std::size_t r = 0; r < targets[d].map.rows.size(); ++r)
      for (const auto& [c, v] : targets[d].map.rows[r]) rhs.push_back({eq(d, r, c), v});

  linalg::Dense M(eq_index.size(), unknowns.size());
  linalg::Vec bvec(eq_index.size(), Rational(0));
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [e, v] : cols[u]) M.at(e, u) += v;
  for (const auto& [e, v] : rhs) bvec[e] += v;
  AntipodeSystem out;
  auto sol = linalg::solve(M, bvec);
  if (!sol) return out;
  out.solvable = true;
  out.unique = sol->kernel.empty();
  GVecCell2 s = zero2(a, am);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (sol->particular[u] != 0) s.map.rows[unknowns[u].row].push_back({unknowns[u].col, sol->particular[u]});
  for (auto& row : s.map.rows) normalize_row(row);
  out.solution = s;
  return out;
}

inline Bimonoid<GVecBackend> linearize_bimonoid(const Bimonoid<SpanBackend>& b) {
  return {b.name, b.a, linearize(b.mu), linearize(b.eta), linearize(b.delta), linearize(b.eps)};
}

// The direct-solve oracle: empty when it agrees with the transform-path result.
template <class B>
std::optional<std::string> antipode_oracle_disagreement(const HopfEngine<B>& E, const Bimonoid<B>& b,
                                                        const std::optional<Cell2<B>>& sigma) {
  auto compare = [&](const AntipodeSystem& sys, const std::optional<GVecCell2>& lin) -> std::optional<std::string> {
    if (!lin) {
      if (sys.solvable) return "direct solve found an antipode the transform path missed";
      return std::nullopt;
    }
    if (!sys.solvable) return "direct solve has no solution but the transform path found one";
    if (!sys.unique) return "direct solve has more than one solution";
    if (!(sys.solution->map == lin->map)) return "direct solve and transform path differ";
    return std::nullopt;
  };
  if constexpr (std::is_same_v<B, GVecBackend>) {
    return compare(solve_antipode_system(E, b), sigma);
  } else {
    if (E.F.preset != Preset::SpanDiagonal) return std::nullopt;
    Duoidal<GVecBackend> LD(Preset::Commutative, E.F.n);
    Dualizer<GVecBackend> LZ(LD);
    HopfEngine<GVecBackend> LE(LZ);
    std::optional<GVecCell2> lin;
    if (sigma) lin = linearize(*sigma);
    return compare(solve_antipode_system(LE, linearize_bimonoid(b)), lin);
  }
}

template <class B>
class Diagnoser {
 public:
  using Cell = Cell2<B>;
  using BM = Bimonoid<B>;
  const Duoidal<B>& D;
  const Dualizer<B>& Z;
  const HopfEngine<B>& E;
  GaloisEngine<B> G;
  bool check_oracle = true;

  explicit Diagnoser(const HopfEngine<B>& e) : D(e.D), Z(e.Z), E(e), G(e.D) {}

  // The 1-cells used as x and as (co)free generators.
  std::vector<std::pair<std::string, OneCell>> sample_cells(std::size_t samples, std::uint64_t seed) const {
    const auto& F = D.M();
    const OneCell I1 = F.id(1);
    std::vector<std::pair<std::string, OneCell>> xs = {{"i", D.i()}, {"j", D.j()}};
    xs.push_back({"v.u*", dot(F.v, F.us)});
    const OneCell w = dot(F.us, F.m, tensor(F.v, I1));
    xs.push_back({"(w1).m*.u.u*", dot(tensor(w, I1), F.ms, F.u, F.us)});
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      std::string name = "x" + std::to_string(s);
      xs.push_back({name, random_endo(rng, D.base(), 3, name)});
    }
    return xs;
  }

  DiagnosticsReport<B> diagnose(const BM& b, std::size_t samples, std::uint64_t seed) const {
    if (auto err = E.validate(b)) throw ValidationError("bimonoid '" + b.name + "': " + *err);
    if (D.M().well_pointed_witness.empty())
      throw ValidationError("no well-pointedness witness is registered for this backend; refusing to diagnose");
    if (!D.M().idempotents_split) throw ValidationError("backend does not split idempotents; refusing to diagnose");
    DiagnosticsReport<B> r;
    r.bimonoid = b.name;
    r.backend = preset_name(D.M().preset);
    r.samples = samples;
    r.seed = seed;
    auto& V_ = r.verdicts;

    exact(V_[1], E.hopf_map(b), "hopf map");
    exact(V_[2], E.cohopf_map(b), "co-Hopf map");
    auto anti = E.antipode_solve(b);
    if (anti.antipode) {
      V_[0].status = "holds";
      r.antipode = anti.antipode;
      if (auto S = antipode_matrix(b, *anti.antipode)) r.antipode_order = matrix_order(*S);
    } else {
      V_[0].status = "fails";
      V_[0].witness = anti.witness;
      V_[0].witness_cell = E.hopf_map(b);
      V_[0].where = "hopf map";
      V_[0].note = "no antipode: the Hopf map is not invertible";
    }
    if (V_[0].ok() != V_[1].ok() || V_[1].ok() != V_[2].ok())
      throw InternalError("exact verdicts disagree for '" + b.name + "'");
    if (check_oracle) {
      if (auto d = antipode_oracle_disagreement(E, b, r.antipode)) throw InternalError("antipode oracle: " + *d);
    }

    const auto xs = sample_cells(samples, seed);
    std::vector<AModule<B>> modules;
    std::vector<AComodule<B>> comodules;
    for (const auto& [name, x] : xs) {
      auto q = G.free_module(b, x);
      q.label = name + " * a";
      modules.push_back(q);
      auto p = G.cofree_comodule(b, x);
      p.label = name + " o a";
      comodules.push_back(p);
    }
    modules.push_back(G.trivial_module(b));
    modules.push_back(G.module_product(b, modules[4 % modules.size()], G.trivial_module(b)));
    comodules.push_back(G.trivial_comodule(b));
    comodules.push_back(G.comodule_product(b, comodules[4 % comodules.size()], G.trivial_comodule(b)));
    for (const auto& q : modules)
      if (auto e = G.validate(b, q)) throw InternalError("sample module " + q.label + ": " + *e);
    for (const auto& p : comodules)
      if (auto e = G.validate(b, p)) throw InternalError("sample comodule " + p.label + ": " + *e);

    // (d): Galois maps at varying x, and the right can-map against cofree left comodules.
    Sampler d(V_[3]);
    for (std::size_t k = 0; k < modules.size() && d.open(); ++k) {
      const auto& [xn, x] = xs[(k + 1) % xs.size()];
      d.check(G.galois_map(b, modules[k], x), "galois(" + modules[k].label + ", " + xn + ")");
    }
    for (std::size_t k = 0; k < xs.size() && d.open(); ++k) {
      const auto& [yn, y] = xs[k];
      const auto& [xn, x] = xs[(k + 2) % xs.size()];
      auto p = G.cofree_left_comodule(b, y);
      d.check(G.can_right(b, modules[k], p, x), "can_right(" + modules[k].label + ", a o " + yn + ", " + xn + ")");
    }
    // (e): Galois maps at x = j.
    Sampler e(V_[4]);
    for (std::size_t k = 0; k < modules.size() && e.open(); ++k)
      e.check(G.galois_map(b, modules[k], D.j()), "galois(" + modules[k].label + ", j)");
    // (f): co-Galois maps at varying x, and the left can-map against free left modules.
    Sampler f(V_[5]);
    for (std::size_t k = 0; k < comodules.size() && f.open(); ++k) {
      const auto& [xn, x] = xs[(k + 1) % xs.size()];
      f.check(G.cogalois_map(b, comodules[k], x), "cogalois(" + comodules[k].label + ", " + xn + ")");
    }
    for (std::size_t k = 0; k < xs.size() && f.open(); ++k) {
      const auto& [zn, z] = xs[k];
      const auto& [xn, x] = xs[(k + 2) % xs.size()];
      auto q = G.free_left_module(b, z);
      f.check(G.can_left(b, q, comodules[k], x), "can_left(a * " + zn + ", " + comodules[k].label + ", " + xn + ")");
    }
    // (g): co-Galois maps at x = i.
    Sampler g(V_[6]);
    for (std::size_t k = 0; k < comodules.size() && g.open(); ++k)
      g.check(G.cogalois_map(b, comodules[k], D.i()), "cogalois(" + comodules[k].label + ", i)");

    // (h), (i): the criteria of the fundamental theorems, with K and K' checked.
    TrivialEquivalence<B> T(D);
    for (const auto& [name, x] : xs) {
      if (auto err = G.validate(b, G.comparison_K(b, T.cofree_j(x))))
        throw InternalError("K(" + name + " o j) is not a Hopf module: " + *err);
      if (auto err = G.validate(b, G.comparison_Kprime(b, T.free_i(x))))
        throw InternalError("K'(" + name + " * i) is not a Hopf module: " + *err);
    }
    V_[7] = V_[4];
    V_[7].note = "via the Galois criterion; K checked on " + std::to_string(xs.size()) + " comodules";
    V_[8] = V_[6];
    V_[8].note = "via the co-Galois criterion; K' checked on " + std::to_string(xs.size()) + " modules";
    return r;
  }

 private:
  static void exact(Verdict<B>& v, const Cell& c, const std::string& what) {
    auto inv = invert(c);
    if (auto* w = std::get_if<Witness>(&inv)) {
      v.status = "fails";
      v.witness = *w;
      v.witness_cell = c;
      v.where = what;
    } else {
      v.status = "holds";
    }
  }

  struct Sampler {
    Verdict<B>& v;
    explicit Sampler(Verdict<B>& vv) : v(vv) { v.status = "sampled-holds"; }
    bool open() const { return v.status != "fails"; }
    void check(const Cell& c, const std::string& where) {
      ++v.samples;
      auto inv = invert(c);
      if (auto* w = std::get_if<Witness>(&inv)) {
        v.status = "fails";
        v.witness = *w;
        v.witness_cell = c;
        v.where = where;
      }
    }
  };
};

}  // namespace duo
