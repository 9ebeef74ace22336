#pragma once

// Bimonoids in M(M, M), their Hopf maps, the mixed (T, G)-algebras, the
// transform category and antipodes.

#include <optional>
#include <string>
#include <variant>

#include "duo/dualizer.hpp"

namespace duo {

template <class B>
struct Bimonoid {
  std::string name;
  OneCell a;
  Cell2<B> mu;     // a * a => a
  Cell2<B> eta;    // j => a
  Cell2<B> delta;  // a => a o a
  Cell2<B> eps;    // a => i
};

enum class Obj { X, Y };

inline const char* hom_name(Obj w, Obj z) {
  if (w == Obj::X) return z == Obj::X ? "XX" : "XY";
  return z == Obj::X ? "YX" : "YY";
}

template <class B>
struct TransformMorphism {
  Obj from = Obj::X, to = Obj::Y;
  Cell2<B> cell;
};

template <class B>
class HopfEngine {
 public:
  using Cell = Cell2<B>;
  using BM = Bimonoid<B>;
  const Duoidal<B>& D;
  const Dualizer<B>& Z;
  const FrobMonoidale<B>& F;

  explicit HopfEngine(const Dualizer<B>& z) : D(z.D), Z(z), F(z.F) {}

  OneCell I1() const { return F.id(1); }

  // ---- bimonoid axioms ----

  std::optional<std::string> validate(const BM& b) const {
    const OneCell a = b.a, i = D.i(), j = D.j();
    auto check_type = [&](const Cell& c, const OneCell& s, const OneCell& t, const char* what)
        -> std::optional<std::string> {
      if (!same(c.src, s) || !same(c.tgt, t)) return std::string(what) + " has the wrong source or target";
      return std::nullopt;
    };
    if (auto e = check_type(b.mu, D.bullet(a, a), a, "mu")) return e;
    if (auto e = check_type(b.eta, j, a, "eta")) return e;
    if (auto e = check_type(b.delta, a, D.circ(a, a), "delta")) return e;
    if (auto e = check_type(b.eps, a, i, "eps")) return e;
    // Names the first target element where the two sides differ.
    auto differ = [](const Cell& x, const Cell& y, const char* what) -> std::optional<std::string> {
      if (equal(x, y)) return std::nullopt;
      std::string msg = what;
      if (same(x.tgt, y.tgt))
        if (auto t = B::first_difference(x.map, y.map); t && *t < x.tgt->size())
          msg += " at " + x.tgt->describe_element(*t);
      return msg;
    };
    const Cell ida = id2<B>(a);
    if (auto e = differ(V<B>(b.mu, D.bullet2(b.mu, a)), V<B>(b.mu, D.bullet2(a, b.mu), D.assoc_b(a, a, a)),
                        "mu is not associative"))
      return e;
    if (auto e = differ(V<B>(b.mu, D.bullet2(b.eta, a)), D.lunit_b(a), "eta is not a left unit for mu")) return e;
    if (auto e = differ(V<B>(b.mu, D.bullet2(a, b.eta)), D.runit_b(a), "eta is not a right unit for mu")) return e;
    if (auto e = differ(V<B>(H<B>(a, b.delta), b.delta), V<B>(H<B>(b.delta, a), b.delta), "delta is not coassociative"))
      return e;
    if (auto e = differ(V<B>(H<B>(a, b.eps), b.delta), ida, "eps is not a left counit for delta")) return e;
    if (auto e = differ(V<B>(H<B>(b.eps, a), b.delta), ida, "eps is not a right counit for delta")) return e;
    if (auto e = differ(V<B>(b.delta, b.mu), V<B>(D.circ2(b.mu, b.mu), D.xi(a, a, a, a), D.bullet2(b.delta, b.delta)),
                        "delta is not compatible with mu"))
      return e;
    if (auto e = differ(V<B>(b.eps, b.mu), V<B>(D.xi_0(), D.bullet2(b.eps, b.eps)), "eps is not compatible with mu"))
      return e;
    if (auto e = differ(V<B>(b.delta, b.eta), V<B>(D.circ2(b.eta, b.eta), D.xi0()), "delta is not compatible with eta"))
      return e;
    if (auto e = differ(V<B>(b.eps, b.eta), D.xi00(), "eps is not compatible with eta")) return e;
    return std::nullopt;
  }

  // ---- Hopf maps ----

  // a_2 : m.aa => a.m
  Cell a_lower2(const BM& b) const {
    return V<B>(H<B>(b.mu, F.m), H<B>(F.m, tensor(b.a, b.a), F.eta_m));
  }
  // a^2 : aa.m* => m*.a
  Cell a_upper2(const BM& b) const {
    return V<B>(H<B>(F.ms, b.mu), H<B>(F.eta_m, tensor(b.a, b.a), F.ms));
  }
  // m.aa => a.m.(a1)
  Cell hopf_map(const BM& b) const {
    return V<B>(H<B>(a_lower2(b), tensor(b.a, I1())), H<B>(F.m, T<B>(b.delta, b.a)));
  }
  // aa.m* => (1a).m*.a
  Cell cohopf_map(const BM& b) const {
    return V<B>(H<B>(tensor(I1(), b.a), a_upper2(b)), H<B>(T<B>(b.a, b.delta), F.ms));
  }

  // The bimonoid a- with the transported structure.
  BM dual(const BM& b) const {
    BM d;
    d.name = b.name + "-";
    d.a = Z.minus(b.a);
    d.mu = V<B>(Z.minus2(b.mu), Z.Upsilon(b.a, b.a));
    d.eta = V<B>(Z.minus2(b.eta), Z.Upsilon0);
    d.delta = V<B>(inverse(Z.Xi(b.a, b.a)), Z.minus2(b.delta));
    d.eps = V<B>(inverse(Z.Xi0), Z.minus2(b.eps));
    return d;
  }

  // ---- mixed (T, G)-algebras on B = M(M^2, M) ----

  OneCell obj(Obj o) const {
    return o == Obj::X ? tensor(I1(), F.us) : dot(F.u, F.us, F.m);
  }
  OneCell Tap(const BM& b, const OneCell& x) const {
    return dot(F.m, tensor(I1(), b.a), tensor(x, I1()), tensor(I1(), F.ms));
  }
  OneCell Gap(const BM& b, const OneCell& x) const { return dot(x, tensor(b.a, I1())); }
  Cell T2(const BM& b, const Cell& t) const {
    return H<B>(F.m, tensor(I1(), b.a), T<B>(t, I1()), tensor(I1(), F.ms));
  }
  Cell G2(const BM& b, const Cell& t) const { return H<B>(t, tensor(b.a, I1())); }

  // T T x => T x
  Cell muT(const BM& b, const OneCell& x) const {
    const OneCell I = I1(), a = b.a;
    return V<B>(H<B>(F.m, T<B>(I, b.mu), T<B>(x, I), T<B>(I, F.ms)),
                H<B>(F.m, T<B>(I, F.m), tens(I, a, a), tens(x, I, I), T<B>(I, F.alpha_s)),
                H<B>(F.alpha, tens(I, a, a), tens(x, I, I), tens(I, F.ms, I), tensor(I, F.ms)));
  }
  // x => T x
  Cell etaT(const BM& b, const OneCell& x) const {
    const OneCell I = I1();
    return V<B>(H<B>(F.m, T<B>(I, b.eta), tensor(x, I), tensor(I, F.ms)),
                H<B>(F.m, tensor(I, F.u), x, T<B>(I, inverse(F.rho_s))),
                H<B>(inverse(F.rho), x));
  }
  // G y => G G y
  Cell deltaG(const BM& b, const OneCell& y) const { return H<B>(y, T<B>(b.delta, I1())); }
  // G y => y
  Cell epsG(const BM& b, const OneCell& y) const { return H<B>(y, T<B>(b.eps, I1())); }

  OneCell GT(const BM& b, Obj o) const { return Gap(b, Tap(b, obj(o))); }

  // Compatibility of f : GTw => GTz with the free algebra and cofree coalgebra structures.
  bool is_mixed_morphism(const BM& b, const Cell& f, Obj w, Obj z) const {
    const OneCell ow = obj(w), oz = obj(z);
    if (!same(f.src, GT(b, w)) || !same(f.tgt, GT(b, z))) return false;
    bool alg = equal(V<B>(f, G2(b, muT(b, ow))), V<B>(G2(b, muT(b, oz)), T2(b, f)));
    bool coalg = equal(V<B>(deltaG(b, Tap(b, oz)), f), V<B>(G2(b, f), deltaG(b, Tap(b, ow))));
    return alg && coalg;
  }

  // T x => m.(1a) and T y => a.m
  Cell kappa(const BM& b, Obj o) const {
    const OneCell I = I1(), a = b.a;
    if (o == Obj::X) return H<B>(F.m, tensor(I, a), T<B>(I, F.lambda_s));
    return V<B>(H<B>(F.lambda, a, F.m),
                H<B>(F.m, tensor(I, a), tensor(F.u, I), F.lambda_s, F.m),
                H<B>(F.m, tensor(I, a), tensor(F.u, I), tensor(F.us, I), F.pi));
  }
  OneCell kappa_tgt(const BM& b, Obj o) const {
    return o == Obj::X ? dot(F.m, tensor(I1(), b.a)) : dot(b.a, F.m);
  }

  // The Hopf map seen as a morphism GTx => GTy.
  Cell hopf_mixed(const BM& b) const {
    Cell iota_x = H<B>(F.m, tensor(b.a, b.a), T<B>(I1(), F.lambda_s));
    Cell iota_y = H<B>(kappa(b, Obj::Y), tensor(b.a, I1()));
    return V<B>(inverse(iota_y), hopf_map(b), iota_x);
  }

  OneCell transform_target(const BM& b, Obj w, Obj z) const {
    const OneCell a = b.a, i = D.i(), j = D.j();
    if (w == Obj::X && z == Obj::X) return D.bullet(i, D.circ(j, a));
    if (w == Obj::X && z == Obj::Y) return a;
    if (w == Obj::Y && z == Obj::X) return Z.minus(a);
    return D.bullet(D.circ(a, j), i);
  }

  TransformMorphism<B> transform(const BM& b, const Cell& f, Obj w, Obj z) const {
    const OneCell I = I1(), a = b.a;
    Cell g = V<B>(kappa(b, z), epsG(b, Tap(b, obj(z))), f, etaT(b, Gap(b, obj(w))));
    const OneCell K = kappa_tgt(b, z);
    TransformMorphism<B> out{w, z, {}};
    if (w == Obj::X) {
      Cell h = V<B>(H<B>(g, tensor(I, F.u)), H<B>(a, T<B>(I, F.eta_u)));  // a => K.(1u)
      if (z == Obj::X)
        out.cell = V<B>(H<B>(F.m, tensor(I, a), tensor(I, F.u), inverse(F.rho_s)), h);
      else
        out.cell = V<B>(H<B>(a, F.rho), h);
    } else {
      Cell h = V<B>(H<B>(F.us, g), H<B>(F.eta_u, dot(F.us, F.m, tensor(a, I))));  // u*.m.(a1) => u*.K
      Cell lift = H<B>(inverse(Z.snakeL), a);                                  // a => ZL.a
      if (z == Obj::X) {
        out.cell = V<B>(H<B>(T<B>(h, I), tensor(I, F.ms), tensor(I, F.u)), lift);
      } else {
        Cell s = V<B>(H<B>(T<B>(h, I), tensor(I, F.ms), tensor(I, F.u)), lift);
        // (u*1).(a1).(m1).(1m*).(1u) => (u*1).(a1).m*.m.(1u) => (u*1).(a1).m* => (a o j) * i
        s = V<B>(H<B>(tensor(F.us, I), tensor(a, I), F.pi, tensor(I, F.u)), s);
        s = V<B>(H<B>(tensor(F.us, I), tensor(a, I), F.ms, F.rho), s);
        s = V<B>(H<B>(inverse(F.lambda), tensor(F.us, I), tensor(a, I), F.ms), s);
        out.cell = s;
      }
    }
    if (!same(out.cell.tgt, transform_target(b, w, z)) || !same(out.cell.src, a))
      throw InternalError("transform produced an ill-typed cell");
    return out;
  }

  Cell untransform(const BM& b, const TransformMorphism<B>& t) const {
    const OneCell I = I1(), a = b.a;
    const Obj w = t.from, z = t.to;
    const OneCell K = kappa_tgt(b, z);
    Cell g1;  // G w => K
    if (w == Obj::X) {
      Cell h;  // a => K.(1u)
      if (z == Obj::X)
        h = V<B>(H<B>(F.m, tensor(I, a), tensor(I, F.u), F.rho_s), t.cell);
      else
        h = V<B>(H<B>(a, inverse(F.rho)), t.cell);
      g1 = V<B>(H<B>(K, T<B>(I, F.eps_u)), H<B>(h, tensor(I, F.us)));
    } else {
      Cell h;  // u*.m.(a1) => u*.K
      if (z == Obj::X) {
        h = V<B>(H<B>(Z.e, tensor(I, a), T<B>(I, Z.snakeR)), H<B>(Z.e, T<B>(t.cell, I)));
      } else {
        // undo the unit and pi steps of transform, then collapse the zigzag
        Cell s0 = V<B>(inverse(H<B>(tensor(F.us, I), tensor(a, I), F.pi, tensor(I, F.u))),
                       inverse(H<B>(tensor(F.us, I), tensor(a, I), F.ms, F.rho)),
                       H<B>(F.lambda, tensor(F.us, I), tensor(a, I), F.ms), t.cell);
        h = V<B>(H<B>(dot(F.us, K), T<B>(I, Z.snakeR)), H<B>(Z.e, T<B>(s0, I)));
      }
      g1 = V<B>(H<B>(F.eps_u, K), H<B>(F.u, h));
    }
    Cell g = V<B>(inverse(kappa(b, z)), g1);  // G w => T z
    return V<B>(G2(b, V<B>(muT(b, obj(z)), T2(b, g))), deltaG(b, Tap(b, obj(w))));
  }

  // ---- the transform category ----

  Cell identity_X(const BM& b) const {
    const OneCell i = D.i(), j = D.j();
    return V<B>(D.bullet2(i, D.circ2(j, b.eta)), D.bullet2(i, D.xi0()), inverse(D.runit_b(i)), b.eps);
  }
  Cell identity_Y(const BM& b) const {
    const OneCell i = D.i(), j = D.j();
    return V<B>(D.bullet2(D.circ2(b.eta, j), i), D.bullet2(D.xi0(), i), inverse(D.lunit_b(i)), b.eps);
  }
  // Y -> X -> Y composite of tau : Y -> X and sigma : X -> Y.
  Cell compose_YY(const BM& b, const Cell& sigma, const Cell& tau) const {
    const OneCell i = D.i(), j = D.j();
    return V<B>(D.bullet2(D.circ2(b.mu, j), i), Z.phi(b.a, b.a), D.circ2(sigma, tau), b.delta);
  }
  // X -> Y -> X composite of sigma : X -> Y and tau : Y -> X.
  Cell compose_XX(const BM& b, const Cell& sigma, const Cell& tau) const {
    const OneCell i = D.i(), j = D.j();
    return V<B>(D.bullet2(i, D.circ2(j, b.mu)), Z.psi(b.a, b.a), D.circ2(tau, sigma), b.delta);
  }

  // The two antipode diagrams.
  bool antipode_left(const BM& b, const Cell& sigma) const {
    return equal(compose_YY(b, id2<B>(b.a), sigma), identity_Y(b));
  }
  bool antipode_right(const BM& b, const Cell& sigma) const {
    return equal(compose_XX(b, id2<B>(b.a), sigma), identity_X(b));
  }

  // ---- antipodes ----

  struct AntipodeResult {
    std::optional<Cell> antipode;
    std::optional<Witness> witness;  // on the Hopf map
  };

  AntipodeResult antipode_solve(const BM& b) const {
    Cell beta = hopf_map(b);
    auto inv = invert(beta);
    AntipodeResult r;
    if (auto* w = std::get_if<Witness>(&inv)) {
      r.witness = *w;
      return r;
    }
    Cell fm = hopf_mixed(b);
    Cell fm_inv = inverse(fm);
    auto t = transform(b, fm_inv, Obj::Y, Obj::X);
    if (!antipode_left(b, t.cell) || !antipode_right(b, t.cell))
      throw InternalError("transformed inverse Hopf map fails the antipode diagrams");
    r.antipode = t.cell;
    return r;
  }

  // The four anti-homomorphism equalities; empty when all hold.
  std::optional<std::string> antipode_morphism_check(const BM& b, const Cell& s) const {
    const OneCell a = b.a;
    if (!equal(V<B>(s, b.eta), V<B>(Z.minus2(b.eta), Z.Upsilon0))) return "antipode-unit";
    if (!equal(V<B>(Z.minus2(b.eps), s), V<B>(Z.Xi0, b.eps))) return "antipode-counit";
    if (!equal(V<B>(s, b.mu), V<B>(Z.minus2(b.mu), Z.Upsilon(a, a), D.bullet2(s, s))))
      return "antipode-multiplication";
    if (!equal(V<B>(Z.minus2(b.delta), s), V<B>(Z.Xi(a, a), D.circ2(s, s), b.delta)))
      return "antipode-comultiplication";
    return std::nullopt;
  }

  // ---- pasting identities for an antipode s ----

  // Convolution product of the inverse pairs (1, s) and (1, s) in T^{a*a}_a.
  struct Fig1Result {
    bool upper_is_identity = false;
    bool lower_is_identity = false;
  };

  Fig1Result figure1_bullet(const BM& b, const Cell& s) const {
    const OneCell a = b.a, i = D.i(), j = D.j(), aa = D.bullet(a, a);
    Cell cd_delta = V<B>(D.xi(a, a, a, a), D.bullet2(b.delta, b.delta));
    Cell cd_eps = V<B>(D.xi_0(), D.bullet2(b.eps, b.eps));
    Cell sig = b.mu;
    Cell sig_p = V<B>(Z.minus2(b.mu), Z.Upsilon(a, a), D.bullet2(s, s));
    Cell upper = V<B>(D.bullet2(D.circ2(b.mu, j), i), Z.phi(a, a), D.circ2(sig, sig_p), cd_delta);
    Cell lower = V<B>(D.bullet2(D.circ(a, j), D.xi_0()), D.assoc_b(D.circ(a, j), i, i),
                      D.bullet2(D.bullet2(D.circ2(b.mu, j), i), i), D.bullet2(Z.phi(a, a), i),
                      D.bullet2(D.circ2(id2<B>(a), s), i), D.bullet2(b.delta, b.eps));
    Cell ident = V<B>(D.bullet2(D.circ2(b.eta, j), i), D.bullet2(D.xi0(), i), inverse(D.lunit_b(i)), cd_eps);
    (void)aa;
    return {equal(upper, ident), equal(lower, ident)};
  }

  // Composition product of the inverse pairs (1, s) and (1, s) in T^a_{a o a}.
  Fig1Result figure1_circ(const BM& b, const Cell& s) const {
    const OneCell a = b.a, i = D.i(), j = D.j(), ab = D.circ(a, a);
    Cell mu_ab = V<B>(D.circ2(b.mu, b.mu), D.xi(a, a, a, a));
    Cell eta_ab = V<B>(D.circ2(b.eta, b.eta), D.xi0());
    Cell sig = b.delta;
    Cell sig_p = V<B>(Z.Xi(a, a), D.circ2(s, s), b.delta);
    Cell upper = V<B>(D.bullet2(D.circ2(mu_ab, j), i), Z.phi(ab, ab), D.circ2(sig, sig_p), b.delta);
    Cell lower = V<B>(D.bullet2(H<B>(j, b.eta, a), i), D.bullet2(H<B>(D.xi0(), a), i),
                      D.bullet2(D.circ2(b.mu, j), i), Z.phi(a, a), D.circ2(id2<B>(a), s), b.delta);
    Cell ident = V<B>(D.bullet2(D.circ2(eta_ab, j), i), D.bullet2(D.xi0(), i), inverse(D.lunit_b(i)), b.eps);
    return {equal(upper, ident), equal(lower, ident)};
  }

  // The Hopf map of a- against the dualized co-Hopf map of a.
  bool beta_zeta_duality(const BM& b) const {
    const OneCell a = b.a, am = Z.minus(a), I = I1();
    BM d = dual(b);
    Cell top = V<B>(Z.minus2(cohopf_map(b)), Z.gen_xi(F.ms, tensor(a, a)),
                    H<B>(inverse(Z.chi), tensor(am, am)));
    Cell bottom_head = H<B>(am, inverse(Z.chi), T<B>(am, Z.Xi0));
    Cell bottom_tail = V<B>(Z.gen_xi(a, dot(tensor(I, a), F.ms)), H<B>(am, Z.gen_xi(F.ms, tensor(I, a))));
    if (!same(bottom_head.tgt, bottom_tail.src)) {
      bottom_head = H<B>(am, inverse(Z.chi), T<B>(am, inverse(Z.snakeR)));
      if (!same(bottom_head.tgt, bottom_tail.src)) throw InternalError("beta-zeta: unmatched unit leg");
    }
    Cell bottom = V<B>(bottom_tail, bottom_head, hopf_map(d));
    return equal(top, bottom);
  }
};

}  // namespace duo
