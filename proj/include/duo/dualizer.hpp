#pragma once

// Self-duality of a naturally Frobenius map-monoidale: the mates f- and f+,
// the structure cells of the duality functor, and the cells phi, psi, theta.

#include <vector>

#include "duo/duoidal.hpp"

namespace duo {

template <class B>
class Dualizer {
 public:
  using Cell = Cell2<B>;
  const Duoidal<B>& D;
  const FrobMonoidale<B>& F;

  OneCell e, n;            // u*.m : M^2 -> I and m*.u : I -> M^2
  OneCell ZL, ZR;          // 1- and 1+
  Cell snakeL, snakeR;     // ZL => 1, ZR => 1
  Cell Xi0, Upsilon0, chi; // i => i-, j => j-, m*- => m

  explicit Dualizer(const Duoidal<B>& d) : D(d), F(d.M()) {
    const OneCell I1 = F.id(1);
    e = dot(F.us, F.m);
    n = dot(F.ms, F.u);
    ZL = minus(I1);
    ZR = plus(I1);
    snakeL = V<B>(H<B>(F.lambda_s, F.rho), H<B>(tensor(F.us, I1), F.pi, tensor(I1, F.u)));
    snakeR = V<B>(H<B>(F.rho_s, F.lambda), H<B>(tensor(I1, F.us), F.pi_prime, tensor(F.u, I1)));
    Xi0 = inverse(snakeL);
    Upsilon0 = inverse(H<B>(tensor(F.us, I1), T<B>(F.rho, I1), T<B>(I1, F.lambda_s), tensor(I1, F.u)));
    chi = make_chi();
  }

  OneCell id(int k) const { return F.id(k); }

  OneCell e_k(int k) const {
    OneCell r = id(0);
    for (int s = 1; s <= k; ++s) r = dot(r, tens(id(s - 1), e, id(s - 1)));
    return r;
  }
  OneCell n_k(int k) const {
    OneCell r = id(0);
    for (int s = 1; s <= k; ++s) r = dot(tens(id(s - 1), n, id(s - 1)), r);
    return r;
  }

  // g : M^a -> M^b gives g- : M^b -> M^a.
  OneCell minus(const OneCell& g) const {
    const int a = g->p, b = g->q;
    return dot(tensor(e_k(b), id(a)), tens(id(b), g, id(a)), tensor(id(b), n_k(a)));
  }
  OneCell plus(const OneCell& g) const {
    const int a = g->p, b = g->q;
    return dot(tensor(id(a), e_k(b)), tens(id(a), g, id(b)), tensor(n_k(a), id(b)));
  }
  Cell minus2(const Cell& al) const {
    const int a = al.src->p, b = al.src->q;
    return H<B>(tensor(e_k(b), id(a)), T<B>(id(b), al, id(a)), tensor(id(b), n_k(a)));
  }
  Cell plus2(const Cell& al) const {
    const int a = al.src->p, b = al.src->q;
    return H<B>(tensor(id(a), e_k(b)), T<B>(id(a), al, id(b)), tensor(n_k(a), id(b)));
  }

  // (f-)+ => f and (f+)- => f.
  Cell roundtrip_minus(const OneCell& f) const { return unzip(plus(minus(f)), f); }
  Cell roundtrip_plus(const OneCell& f) const { return unzip(minus(plus(f)), f); }

  // g- . h- => (h.g)- for g : M^a -> M^b, h : M^b -> M^c.
  Cell gen_xi(const OneCell& g, const OneCell& h) const {
    const int a = g->p, b = g->q, c = h->q;
    if (h->p != b) throw CompositionError("gen_xi: arity mismatch");
    const OneCell src = dot(minus(g), minus(h));
    for (unsigned mask = 0; mask < (1u << b); ++mask) {
      OneCell z = id(0);
      Cell zc = id2<B>(id(0));
      for (int k = 0; k < b; ++k) {
        bool left = (mask >> k) & 1u;
        z = tensor(z, left ? ZL : ZR);
        zc = tens2(zc, left ? snakeL : snakeR);
      }
      OneCell cand = dot(tensor(e_k(c), id(a)), tens(id(c), h, id(a)), tens(id(c), z, id(a)),
                         tens(id(c), g, id(a)), tensor(id(c), n_k(a)));
      if (same(cand, src)) {
        return H<B>(tensor(e_k(c), id(a)), tens(id(c), h, id(a)), T<B>(id(c), zc, id(a)), tens(id(c), g, id(a)),
                    tensor(id(c), n_k(a)));
      }
    }
    throw InternalError("gen_xi: no zigzag decomposition for " + src->describe());
  }

  // g- o f- = f-.g- => (f o g)- = (g.f)-
  Cell Xi(const OneCell& f, const OneCell& g) const { return gen_xi(f, g); }

  // g- * f- => (f * g)-
  Cell Upsilon(const OneCell& f, const OneCell& g) const {
    const OneCell I1 = id(1);
    const auto &m = F.m, &ms = F.ms, &u = F.u, &us = F.us;
    OneCell P = dot(tensor(us, I1), tensor(m, I1), tens(I1, g, I1), tens(I1, I1, m), tens(I1, ms, I1),
                    tens(I1, u, I1), tens(I1, us, I1), tens(I1, m, I1), tens(ms, I1, I1), tens(I1, f, I1),
                    tensor(I1, ms), tensor(I1, u));
    if (!same(P, D.bullet(minus(g), minus(f)))) throw InternalError("Upsilon: unexpected source shape");
    Cell s1 = id2<B>(P);
    Cell s2 = H<B>(dot(tensor(us, I1), tensor(m, I1), tens(I1, g, I1), tens(I1, I1, m), tens(I1, ms, I1),
                       tens(I1, u, I1), tens(I1, us, I1)),
                   T<B>(F.pi_prime, I1), dot(tens(I1, f, I1), tensor(I1, ms), tensor(I1, u)));
    Cell s3 = H<B>(dot(tensor(us, I1), tensor(m, I1), tens(I1, g, I1), tens(I1, I1, m), tens(I1, ms, I1),
                       tens(I1, u, I1)),
                   T<B>(F.rho_s, I1), dot(tensor(m, I1), tens(I1, f, I1), tensor(I1, ms), tensor(I1, u)));
    Cell s4 = H<B>(dot(tensor(us, I1), tensor(m, I1), tens(I1, g, I1)), T<B>(I1, F.pi_prime),
                   dot(tens(I1, u, I1), tensor(m, I1), tens(I1, f, I1), tensor(I1, ms), tensor(I1, u)));
    Cell s5 = H<B>(dot(tensor(us, I1), tensor(m, I1), tens(I1, g, I1), tensor(I1, ms)), T<B>(I1, F.lambda),
                   dot(tensor(m, I1), tens(I1, f, I1), tensor(I1, ms), tensor(I1, u)));
    Cell s6 = H<B>(tensor(us, I1), T<B>(F.alpha, I1), tens(I1, I1, g, I1), tens(I1, f, I1, I1),
                   T<B>(I1, inverse(F.alpha_s)), tensor(I1, u));
    return V<B>(s6, s5, s4, s3, s2, s1);
  }

  // f o g- => ((f * g) o j) * i
  Cell phi(const OneCell& f, const OneCell& g) const {
    const OneCell I1 = id(1);
    const auto &m = F.m, &ms = F.ms, &u = F.u, &us = F.us;
    OneCell X1 = dot(tensor(us, I1), tensor(m, I1), tens(I1, g, I1), tens(f, I1, I1), tensor(I1, ms));
    OneCell X0 = dot(tensor(us, I1), tensor(m, I1), tens(I1, g, I1), tens(f, I1, I1));
    return V<B>(H<B>(inverse(F.lambda), tensor(us, I1), tensor(D.bullet(f, g), I1), ms),
                H<B>(X0, inverse(F.alpha_s)),
                H<B>(X1, ms, F.rho),
                H<B>(X1, F.eta_m, tensor(I1, u)));
  }

  // f- o g => i * (j o (f * g))
  Cell psi(const OneCell& f, const OneCell& g) const {
    const OneCell I1 = id(1);
    const auto &m = F.m, &ms = F.ms, &u = F.u, &us = F.us;
    OneCell Y1 = dot(tens(I1, I1, g), tens(I1, f, I1), tensor(I1, ms), tensor(I1, u));
    OneCell X1 = dot(tensor(m, I1), Y1);
    return V<B>(H<B>(dot(m, tensor(I1, D.bullet(f, g)), tensor(I1, u)), inverse(F.rho_s)),
                H<B>(F.alpha, Y1),
                H<B>(F.lambda_s, m, X1),
                H<B>(tensor(us, I1), F.eta_m, X1));
  }

  // f o ((g o j) * i) o h- => ((f * h) o g o j) * i
  Cell theta(const OneCell& f, const OneCell& g, const OneCell& h) const {
    const OneCell I1 = id(1), I2 = id(2);
    const auto &m = F.m, &ms = F.ms, &u = F.u, &us = F.us;
    const OneCell hm = minus(h);
    const OneCell g1 = tensor(g, I1), us1 = tensor(us, I1), u1 = tensor(u, I1);
    // [f, m*, g1, u*1, u1, m, h-] => [f, m*, g1, u*1, h-]
    Cell s1 = H<B>(hm, F.lambda, dot(us1, g1, ms, f));
    // => [m*, 1u*, f, m*, g1, u*1, h-, u1, m]
    Cell s2 = H<B>(inverse(F.lambda), dot(hm, us1, g1, ms, f));
    Cell s3 = H<B>(dot(m, u1, hm, us1, g1, ms, f), inverse(F.rho_s));
    // expand h- and cancel the u u* pair: => [m*, 1m*, f11, m*11, 11h1, 1m1, 1u*1, g1, u*1, u1, m]
    OneCell rest = dot(m, u1, us1, g1, tens(I1, us, I1), tens(I1, m, I1), tens(I1, I1, h, I1), tens(ms, I1, I1),
                       tens(f, I1, I1), tensor(I1, ms));
    Cell s4 = H<B>(rest, T<B>(I1, F.eps_u), ms);
    // (1m*).m* => (m*1).m*
    OneCell rest2 = dot(m, u1, us1, g1, tens(I1, us, I1), tens(I1, m, I1), tens(I1, I1, h, I1), tens(ms, I1, I1),
                        tens(f, I1, I1));
    Cell s5 = H<B>(rest2, inverse(F.alpha_s));
    // pi' on (1m1).(m*11), after sliding h below the split
    Cell s6 = H<B>(dot(m, u1, us1, g1, tens(I1, us, I1)), T<B>(F.pi_prime, I1),
                   dot(tens(f, h, I1), tensor(ms, I1), ms));
    Cell s7 = H<B>(dot(m, u1, us1, g1), T<B>(F.rho_s, I1), dot(tensor(m, I1), tens(f, h, I1), tensor(ms, I1), ms));
    (void)I2;
    return V<B>(s7, s6, s5, s4, s3, s2, s1);
  }

  OneCell j() const { return D.j(); }

 private:
  // Find Za, Zb in {ZL, ZR} with x = Za.f.Zb and return snakeA.f.snakeB.
  Cell unzip(const OneCell& x, const OneCell& f) const {
    const OneCell zs[2] = {ZL, ZR};
    const Cell cs[2] = {snakeL, snakeR};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        if (same(dot(zs[a], f, zs[b]), x)) return H<B>(cs[a], f, cs[b]);
    throw InternalError("roundtrip: no zigzag decomposition for " + x->describe());
  }

  Cell make_chi() const {
    const OneCell I1 = id(1);
    const auto &m = F.m, &ms = F.ms, &us = F.us;
    // (e1).(1m*) => m
    Cell c1 = V<B>(H<B>(F.lambda_s, m), H<B>(tensor(us, I1), F.pi));
    Cell x = V<B>(H<B>(snakeL, m),
                  H<B>(tensor(us, I1), T<B>(inverse(F.alpha), I1), tens(I1, I1, n)),
                  H<B>(tensor(e, I1), T<B>(I1, c1, I1), tens(I1, I1, n)));
    if (!same(x.src, minus(ms))) throw InternalError("chi: unexpected source shape");
    return x;
  }
};

}  // namespace duo
