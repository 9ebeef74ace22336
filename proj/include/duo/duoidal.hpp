#pragma once

// The duoidal hom-category M(M, M) of a naturally Frobenius map-monoidale.
//   f o g = g.f   with unit i = 1
//   f * g = m.(fg).m*   with unit j = u.u*

#include <memory>

#include "duo/monoidale.hpp"

namespace duo {

template <class B>
class Duoidal {
 public:
  using Cell = Cell2<B>;
  std::shared_ptr<const FrobMonoidale<B>> F;

  explicit Duoidal(std::shared_ptr<const FrobMonoidale<B>> f) : F(std::move(f)) {}
  Duoidal(Preset p, int n) : F(std::make_shared<FrobMonoidale<B>>(p, n)) {}

  const FrobMonoidale<B>& M() const { return *F; }
  int base() const { return F->base; }

  OneCell one(int k = 1) const { return F->id(k); }
  OneCell i() const { return F->id(1); }
  OneCell j() const { return dot(F->u, F->us); }

  OneCell circ(const OneCell& f, const OneCell& g) const { return dot(g, f); }
  OneCell bullet(const OneCell& f, const OneCell& g) const { return dot(F->m, tensor(f, g), F->ms); }

  Cell circ2(const Cell& a, const Cell& b) const { return H<B>(b, a); }
  Cell bullet2(const Cell& a, const Cell& b) const { return H<B>(F->m, tens2(a, b), F->ms); }
  Cell circ2(const OneCell& a, const Cell& b) const { return H<B>(b, a); }
  Cell circ2(const Cell& a, const OneCell& b) const { return H<B>(b, a); }
  Cell bullet2(const OneCell& a, const Cell& b) const { return bullet2(id2<B>(a), b); }
  Cell bullet2(const Cell& a, const OneCell& b) const { return bullet2(a, id2<B>(b)); }

  // (w o x) * (y o z) => (w * y) o (x * z)
  Cell xi(const OneCell& w, const OneCell& x, const OneCell& y, const OneCell& z) const {
    return H<B>(F->m, tensor(x, z), F->eta_m, tensor(w, y), F->ms);
  }
  Cell xi0() const { return H<B>(F->u, F->eta_u, F->us); }  // j => j o j
  Cell xi_0() const { return F->eps_m; }                     // i * i => i
  Cell xi00() const { return F->eps_u; }                     // j => i

  // (f * g) * h => f * (g * h)
  Cell assoc_b(const OneCell& f, const OneCell& g, const OneCell& h) const {
    return H<B>(F->alpha, tens(f, g, h), F->alpha_s);
  }
  Cell assoc_b_inv(const OneCell& f, const OneCell& g, const OneCell& h) const {
    return inverse(assoc_b(f, g, h));
  }
  Cell lunit_b(const OneCell& f) const { return H<B>(F->lambda, f, F->lambda_s); }  // j * f => f
  Cell runit_b(const OneCell& f) const { return H<B>(F->rho, f, F->rho_s); }       // f * j => f
};

}  // namespace duo
