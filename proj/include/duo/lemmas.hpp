#pragma once

// Exact checks of the phi/psi/theta identities on concrete 1-cells.

#include "duo/dualizer.hpp"

namespace duo {

template <class B>
struct LemmaChecks {
  using Cell = Cell2<B>;
  const Duoidal<B>& D;
  const Dualizer<B>& Z;

  // (f- o g) * (h- o k): both routes to i * (j o ((h*f)*(g*k))).
  bool phi_psi_first(const OneCell& f, const OneCell& g, const OneCell& h, const OneCell& k) const {
    const OneCell i = D.i(), j = D.j();
    const OneCell fg = D.bullet(f, g), fgk = D.bullet(fg, k);
    const OneCell left_cell = D.circ(Z.minus(f), g), right_cell = D.circ(Z.minus(h), k);
    Cell left = V<B>(Z.psi(D.bullet(h, f), D.bullet(g, k)),
                     D.circ2(Z.Upsilon(h, f), D.bullet(g, k)),
                     D.xi(Z.minus(f), g, Z.minus(h), k));
    Cell right = V<B>(
        D.bullet2(D.xi_0(), D.circ(j, D.bullet(h, fgk))),
        D.assoc_b_inv(i, i, D.circ(j, D.bullet(h, fgk))),
        D.bullet2(i, Z.psi(h, fgk)),
        D.bullet2(i, D.circ2(D.lunit_b(Z.minus(h)), D.bullet(fg, k))),
        D.bullet2(i, D.xi(j, fg, Z.minus(h), k)),
        D.assoc_b(i, D.circ(j, fg), right_cell),
        D.bullet2(Z.psi(f, g), right_cell));
    (void)left_cell;
    // h * ((f * g) * k) => (h * f) * (g * k)
    Cell re = V<B>(D.assoc_b_inv(h, f, D.bullet(g, k)), D.bullet2(h, D.assoc_b(f, g, k)));
    Cell right2 = V<B>(D.bullet2(i, D.circ2(j, re)), right);
    return equal(left, right2);
  }

  // (f o g-) * (h o k-): both routes to ((f*h)*(k*g)) o j) * i.
  bool phi_psi_second(const OneCell& f, const OneCell& g, const OneCell& h, const OneCell& k) const {
    const OneCell i = D.i(), j = D.j();
    const OneCell hk = D.bullet(h, k), fhk = D.bullet(f, hk), fhkg = D.bullet(fhk, g);
    const OneCell left_cell = D.circ(f, Z.minus(g));
    Cell left = V<B>(Z.phi(D.bullet(f, h), D.bullet(k, g)),
                     D.circ2(D.bullet(f, h), Z.Upsilon(k, g)),
                     D.xi(f, Z.minus(g), h, Z.minus(k)));
    Cell right = V<B>(
        D.bullet2(D.circ(fhkg, j), D.xi_0()),
        D.assoc_b(D.circ(fhkg, j), i, i),
        D.bullet2(Z.phi(fhk, g), i),
        D.bullet2(D.circ2(fhk, D.runit_b(Z.minus(g))), i),
        D.bullet2(D.xi(f, Z.minus(g), hk, j), i),
        D.assoc_b_inv(left_cell, D.circ(hk, j), i),
        D.bullet2(left_cell, Z.phi(h, k)));
    // (f * (h * k)) * g => (f * h) * (k * g)
    Cell re = V<B>(D.assoc_b(D.bullet(f, h), k, g), D.bullet2(D.assoc_b_inv(f, h, k), g));
    Cell right2 = V<B>(D.bullet2(D.circ2(re, j), i), right);
    return equal(left, right2);
  }

  // theta_{f,i,h} = phi_{f,h} modulo j * i = i.
  bool theta_unit(const OneCell& f, const OneCell& h) const {
    Cell t = V<B>(Z.theta(f, D.i(), h), H<B>(Z.minus(h), inverse(D.lunit_b(D.i())), f));
    return equal(t, Z.phi(f, h));
  }

  bool theta_phi(const OneCell& f, const OneCell& g, const OneCell& h, const OneCell& k) const {
    const OneCell j = D.j(), i = D.i();
    const OneCell fg = D.circ(f, g), kh = D.circ(k, h);
    Cell top = V<B>(Z.theta(f, D.bullet(g, h), k), H<B>(Z.minus(k), Z.phi(g, h), f));
    Cell bottom = V<B>(D.bullet2(D.circ2(D.xi(f, g, k, h), j), i),
                       Z.phi(fg, kh),
                       H<B>(Z.Xi(k, h), g, f));
    return equal(top, bottom);
  }

  bool theta_xi0(const OneCell& f, const OneCell& g, const OneCell& h) const {
    const OneCell i = D.i(), j = D.j();
    Cell a = V<B>(D.bullet2(H<B>(D.xi0(), g, D.bullet(f, h)), i), Z.theta(f, g, h));
    Cell b = V<B>(Z.theta(f, D.circ(g, j), h), H<B>(Z.minus(h), D.bullet2(H<B>(D.xi0(), g), i), f));
    return equal(a, b);
  }
};

}  // namespace duo
