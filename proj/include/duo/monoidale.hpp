#pragma once

// Naturally Frobenius map-monoidales (M, m, u) with m -| m*, u -| u*.

#include <string>
#include <vector>

#include "duo/cell2.hpp"

namespace duo {

// An adjunction f -| fs with unit 1 => fs.f and counit f.fs => 1.
template <class B>
struct Adj {
  OneCell f, fs;
  Cell2<B> unit, counit;
};

template <class B>
Adj<B> adj_identity(const OneCell& x) {
  return {x, x, id2<B>(x), id2<B>(x)};
}

// Adjunction for f2.f1 from adjunctions for f1 and f2.
template <class B>
Adj<B> adj_compose(const Adj<B>& a2, const Adj<B>& a1) {
  Adj<B> r;
  r.f = dot(a2.f, a1.f);
  r.fs = dot(a1.fs, a2.fs);
  r.unit = vcomp(H<B>(a1.fs, a2.unit, a1.f), a1.unit);
  r.counit = vcomp(a2.counit, H<B>(a2.f, a1.counit, a2.fs));
  return r;
}

template <class B>
Adj<B> adj_tensor(const Adj<B>& a, const Adj<B>& b) {
  return {tensor(a.f, b.f), tensor(a.fs, b.fs), tens2(a.unit, b.unit), tens2(a.counit, b.counit)};
}

// Mate of gamma: f => g, a 2-cell g* => f*.
template <class B>
Cell2<B> mate(const Adj<B>& af, const Adj<B>& ag, const Cell2<B>& gamma) {
  auto step1 = H<B>(af.unit, ag.fs);                // g* => f*.f.g*
  auto step2 = H<B>(af.fs, gamma, ag.fs);           // => f*.g.g*
  auto step3 = H<B>(af.fs, ag.counit);              // => f*
  return V<B>(step3, step2, step1);
}

enum class Preset { SpanDiagonal, Commutative, Weak };

inline const char* preset_name(Preset p) {
  switch (p) {
    case Preset::SpanDiagonal: return "span";
    case Preset::Commutative: return "gvec-commutative";
    case Preset::Weak: return "gvec-weak";
  }
  return "?";
}

template <class B>
class FrobMonoidale {
 public:
  Preset preset;
  int n = 0;     // user-facing size parameter (|X| or n)
  int base = 0;  // number of base points
  OneCell m, u, ms, us;
  Cell2<B> eta_m, eps_m, eta_u, eps_u;
  Cell2<B> alpha, lambda, rho;          // m.(m1) => m.(1m), m.(u1) => 1, m.(1u) => 1
  Cell2<B> alpha_s, lambda_s, rho_s;    // (m*1).m* => (1m*).m*, (u*1).m* => 1, (1u*).m* => 1
  Cell2<B> pi, pi_prime;                // (m1).(1m*) => m*.m, (1m).(m*1) => m*.m
  Adj<B> adj_m, adj_u;
  // Well-pointedness witness v : I -> M and idempotent splitting; both hold by
  // construction in the finite backends.
  std::string well_pointed_witness = "v = u";
  bool idempotents_split = true;
  OneCell v;  // I -> M

  OneCell id(int k) const { return identity(base, k); }

  FrobMonoidale(Preset pr, int size) : preset(pr), n(size) {
    if (size <= 0) throw ValidationError("monoidale size must be positive");
    std::vector<AtomElem> me, ue;
    if (pr == Preset::Weak) {
      base = n * n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) me.push_back({{i * n + l}, {i * n + j, j * n + l}});
      for (int i = 0; i < n; ++i) ue.push_back({{i * n + i}, {}});
    } else {
      base = n;
      for (int c = 0; c < n; ++c) me.push_back({{c}, {c, c}});
      for (int c = 0; c < n; ++c) ue.push_back({{c}, {}});
    }
    auto am = make_atom("m", base, 2, 1, me);
    auto au = make_atom("u", base, 0, 1, ue);
    m = atom_cell(am);
    u = atom_cell(au);
    ms = atom_cell(transpose_atom(am, "m*"));
    us = atom_cell(transpose_atom(au, "u*"));
    if (pr == Preset::Weak) {
      std::vector<AtomElem> ve;
      for (int c = 0; c < base; ++c) ve.push_back({{c}, {}});
      v = atom_cell(make_atom("v", base, 0, 1, ve));
      well_pointed_witness = "v = unit ring map I -> R^op R";
    } else {
      v = u;
    }
    const OneCell M1 = id(1), M2 = id(2), I = id(0);

    eta_m = by_grade<B>(M2, dot(ms, m));
    eps_m = by_grade<B>(dot(m, ms), M1);
    eta_u = by_grade<B>(I, dot(us, u));
    eps_u = by_grade<B>(dot(u, us), M1);
    adj_m = {m, ms, eta_m, eps_m};
    adj_u = {u, us, eta_u, eps_u};

    alpha = by_grade<B>(dot(m, tensor(m, M1)), dot(m, tensor(M1, m)));
    lambda = by_grade<B>(dot(m, tensor(u, M1)), M1);
    rho = by_grade<B>(dot(m, tensor(M1, u)), M1);

    auto a_m1 = adj_tensor(adj_m, adj_identity<B>(M1));
    auto a_1m = adj_tensor(adj_identity<B>(M1), adj_m);
    auto a_left = adj_compose(adj_m, a_m1);   // m.(m1)
    auto a_right = adj_compose(adj_m, a_1m);  // m.(1m)
    alpha_s = mate(a_right, a_left, inverse(alpha));
    auto a_mu1 = adj_compose(adj_m, adj_tensor(adj_u, adj_identity<B>(M1)));
    auto a_m1u = adj_compose(adj_m, adj_tensor(adj_identity<B>(M1), adj_u));
    lambda_s = mate(adj_identity<B>(M1), a_mu1, inverse(lambda));
    rho_s = mate(adj_identity<B>(M1), a_m1u, inverse(rho));

    pi = V<B>(H<B>(ms, m, tensor2_id_left(eps_m)),
              H<B>(ms, alpha, tensor(M1, ms)),
              H<B>(eta_m, dot(tensor(m, M1), tensor(M1, ms))));
    pi_prime = V<B>(H<B>(ms, m, tens2(eps_m, id2<B>(M1))),
                    H<B>(ms, inverse(alpha), tensor(ms, M1)),
                    H<B>(eta_m, dot(tensor(M1, m), tensor(ms, M1))));
  }

 private:
  Cell2<B> tensor2_id_left(const Cell2<B>& c) const { return tens2(id2<B>(id(1)), c); }
};

}  // namespace duo
