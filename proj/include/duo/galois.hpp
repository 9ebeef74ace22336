#pragma once

// Modules and comodules over a bimonoid, Galois and co-Galois maps, the
// can-maps, Hopf modules with the comparison functors K and K', and the
// trivial-cotrivial equivalence.

#include <optional>
#include <string>

#include "duo/hopf.hpp"

namespace duo {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Right: gamma : q * a => q.  Left: gamma : a * q => q.
template <class B>
struct AModule {
  OneCell carrier;
  Cell2<B> action;
  Side side = Side::Right;
  std::string label;
};

// Right: rho : p => p o a.  Left: rho : p => a o p.
template <class B>
struct AComodule {
  OneCell carrier;
  Cell2<B> coaction;
  Side side = Side::Right;
  std::string label;
};

template <class B>
struct HopfModule {
  OneCell carrier;
  Cell2<B> action;    // h * a => h
  Cell2<B> coaction;  // h => h o a
};

template <class B>
class GaloisEngine {
 public:
  using Cell = Cell2<B>;
  using BM = Bimonoid<B>;
  const Duoidal<B>& D;

  explicit GaloisEngine(const Duoidal<B>& d) : D(d) {}

  // ---- validation ----

  std::optional<std::string> validate(const BM& b, const AModule<B>& q) const {
    const OneCell a = b.a, c = q.carrier;
    if (q.side == Side::Right) {
      if (!same(q.action.src, D.bullet(c, a)) || !same(q.action.tgt, c)) return "action has the wrong type";
      if (!equal(V<B>(q.action, D.bullet2(q.action, a)),
                 V<B>(q.action, D.bullet2(c, b.mu), D.assoc_b(c, a, a))))
        return "action is not associative";
      if (!equal(V<B>(q.action, D.bullet2(c, b.eta)), D.runit_b(c))) return "action is not unital";
    } else {
      if (!same(q.action.src, D.bullet(a, c)) || !same(q.action.tgt, c)) return "action has the wrong type";
      if (!equal(V<B>(q.action, D.bullet2(a, q.action), D.assoc_b(a, a, c)),
                 V<B>(q.action, D.bullet2(b.mu, c))))
        return "action is not associative";
      if (!equal(V<B>(q.action, D.bullet2(b.eta, c)), D.lunit_b(c))) return "action is not unital";
    }
    return std::nullopt;
  }

  std::optional<std::string> validate(const BM& b, const AComodule<B>& p) const {
    const OneCell a = b.a, c = p.carrier;
    const Cell& r = p.coaction;
    if (p.side == Side::Right) {
      if (!same(r.src, c) || !same(r.tgt, D.circ(c, a))) return "coaction has the wrong type";
      if (!equal(V<B>(D.circ2(r, a), r), V<B>(D.circ2(c, b.delta), r))) return "coaction is not coassociative";
      if (!is_identity(V<B>(D.circ2(c, b.eps), r))) return "coaction is not counital";
    } else {
      if (!same(r.src, c) || !same(r.tgt, D.circ(a, c))) return "coaction has the wrong type";
      if (!equal(V<B>(D.circ2(a, r), r), V<B>(D.circ2(b.delta, c), r))) return "coaction is not coassociative";
      if (!is_identity(V<B>(D.circ2(b.eps, c), r))) return "coaction is not counital";
    }
    return std::nullopt;
  }

  // ---- standard (co)modules ----

  AModule<B> free_module(const BM& b, const OneCell& x) const {
    return {D.bullet(x, b.a), V<B>(D.bullet2(x, b.mu), D.assoc_b(x, b.a, b.a)), Side::Right, "free"};
  }
  AModule<B> free_left_module(const BM& b, const OneCell& z) const {
    return {D.bullet(b.a, z), V<B>(D.bullet2(b.mu, z), D.assoc_b_inv(b.a, b.a, z)), Side::Left, "free-left"};
  }
  AComodule<B> cofree_comodule(const BM& b, const OneCell& y) const {
    return {D.circ(y, b.a), D.circ2(y, b.delta), Side::Right, "cofree"};
  }
  AComodule<B> cofree_left_comodule(const BM& b, const OneCell& y) const {
    return {D.circ(b.a, y), D.circ2(b.delta, y), Side::Left, "cofree-left"};
  }
  // i with the action through eps.
  AModule<B> trivial_module(const BM& b) const {
    const OneCell i = D.i();
    return {i, V<B>(D.xi_0(), D.bullet2(i, b.eps)), Side::Right, "trivial"};
  }
  // j with the coaction through eta.
  AComodule<B> trivial_comodule(const BM& b) const {
    const OneCell j = D.j();
    return {j, V<B>(D.circ2(j, b.eta), D.xi0()), Side::Right, "trivial"};
  }

  // Monoidal products of right modules (over o) and right comodules (over *).
  AModule<B> module_product(const BM& b, const AModule<B>& q, const AModule<B>& r) const {
    const OneCell a = b.a;
    Cell act = V<B>(D.circ2(q.action, r.action), D.xi(q.carrier, r.carrier, a, a),
                    D.bullet2(D.circ(q.carrier, r.carrier), b.delta));
    return {D.circ(q.carrier, r.carrier), act, Side::Right, "(" + q.label + " o " + r.label + ")"};
  }
  AComodule<B> comodule_product(const BM& b, const AComodule<B>& p, const AComodule<B>& r) const {
    const OneCell a = b.a;
    Cell co = V<B>(D.circ2(D.bullet(p.carrier, r.carrier), b.mu), D.xi(p.carrier, a, r.carrier, a),
                   D.bullet2(p.coaction, r.coaction));
    return {D.bullet(p.carrier, r.carrier), co, Side::Right, "(" + p.label + " * " + r.label + ")"};
  }

  // ---- Galois maps ----

  // (q o x) * a => q o (x * a)
  Cell galois_map(const BM& b, const AModule<B>& q, const OneCell& x) const {
    require(q.side == Side::Right, "galois_map needs a right module");
    const OneCell a = b.a;
    return V<B>(D.circ2(q.action, D.bullet(x, a)), D.xi(q.carrier, x, a, a),
                D.bullet2(D.circ(q.carrier, x), b.delta));
  }

  // p * (x o a) => (p * x) o a
  Cell cogalois_map(const BM& b, const AComodule<B>& p, const OneCell& x) const {
    require(p.side == Side::Right, "cogalois_map needs a right comodule");
    const OneCell a = b.a;
    return V<B>(D.circ2(D.bullet(p.carrier, x), b.mu), D.xi(p.carrier, a, x, a),
                D.bullet2(p.coaction, D.circ(x, a)));
  }

  // p * (x o q) => (p * x) o q
  Cell can_left(const BM& b, const AModule<B>& q, const AComodule<B>& p, const OneCell& x) const {
    require(q.side == Side::Left && p.side == Side::Right, "can_left needs a left module and a right comodule");
    return V<B>(D.circ2(D.bullet(p.carrier, x), q.action), D.xi(p.carrier, b.a, x, q.carrier),
                D.bullet2(p.coaction, D.circ(x, q.carrier)));
  }

  // (q o x) * p => q o (x * p)
  Cell can_right(const BM& b, const AModule<B>& q, const AComodule<B>& p, const OneCell& x) const {
    require(q.side == Side::Right && p.side == Side::Left, "can_right needs a right module and a left comodule");
    return V<B>(D.circ2(q.action, D.bullet(x, p.carrier)), D.xi(q.carrier, x, b.a, p.carrier),
                D.bullet2(D.circ(q.carrier, x), p.coaction));
  }

  // ---- Hopf modules ----

  std::optional<std::string> validate(const BM& b, const HopfModule<B>& h) const {
    if (auto e = validate(b, AModule<B>{h.carrier, h.action, Side::Right, ""})) return e;
    if (auto e = validate(b, AComodule<B>{h.carrier, h.coaction, Side::Right, ""})) return e;
    const OneCell a = b.a;
    Cell lhs = V<B>(h.coaction, h.action);
    Cell rhs = V<B>(D.circ2(h.action, b.mu), D.xi(h.carrier, a, a, a), D.bullet2(h.coaction, b.delta));
    if (!equal(lhs, rhs)) return "coaction is not a module morphism";
    return std::nullopt;
  }

  // K(p) = p * a for a j-comodule p.
  HopfModule<B> comparison_K(const BM& b, const Cell& rho) const {
    const OneCell a = b.a, p = rho.src, j = D.j();
    require(same(rho.tgt, D.circ(p, j)), "comparison_K needs a j-comodule");
    HopfModule<B> h;
    h.carrier = D.bullet(p, a);
    h.action = V<B>(D.bullet2(p, b.mu), D.assoc_b(p, a, a));
    h.coaction = V<B>(D.circ2(h.carrier, D.lunit_b(a)), D.xi(p, j, a, a), D.bullet2(rho, b.delta));
    return h;
  }

  // K'(q) = q o a for an i-module q.
  HopfModule<B> comparison_Kprime(const BM& b, const Cell& gamma) const {
    const OneCell a = b.a, q = gamma.tgt, i = D.i();
    require(same(gamma.src, D.bullet(q, i)), "comparison_Kprime needs an i-module");
    HopfModule<B> h;
    h.carrier = D.circ(q, a);
    h.action = V<B>(D.circ2(gamma, b.mu), D.xi(q, a, i, a));
    h.coaction = D.circ2(q, b.delta);
    return h;
  }

 private:
  static void require(bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
  }
};

// The adjunction FV -| GU between j-comodules and i-modules.
template <class B>
class TrivialEquivalence {
 public:
  using Cell = Cell2<B>;
  const Duoidal<B>& D;

  explicit TrivialEquivalence(const Duoidal<B>& d) : D(d) {}

  // Cofree j-comodule x o j and free i-module x * i.
  Cell cofree_j(const OneCell& x) const { return D.circ2(x, D.xi0()); }
  Cell free_i(const OneCell& x) const {
    const OneCell i = D.i();
    return V<B>(D.bullet2(x, D.xi_0()), D.assoc_b(x, i, i));
  }

  // Unit component at x o j : x o j => ((x o j) * i) o j.
  Cell unit_at_cofree(const OneCell& x) const {
    const OneCell j = D.j(), xj = D.circ(x, j);
    return V<B>(D.circ2(D.bullet2(xj, D.xi00()), j), D.circ2(inverse(D.runit_b(xj)), j), D.circ2(x, D.xi0()));
  }

  // Counit component at x * i : ((x * i) o j) * i => x * i.
  Cell counit_at_free(const OneCell& x) const {
    const OneCell i = D.i(), xi = D.bullet(x, i);
    return V<B>(D.bullet2(x, D.xi_0()), D.assoc_b(x, i, i), D.bullet2(D.circ2(xi, D.xi00()), i));
  }

  // Coaction of p * p' for j-comodules.
  Cell comodule_product(const Cell& rho, const Cell& rho2) const {
    const OneCell j = D.j(), p = rho.src, p2 = rho2.src;
    return V<B>(D.circ2(D.bullet(p, p2), D.lunit_b(j)), D.xi(p, j, p2, j), D.bullet2(rho, rho2));
  }

  // (p * p') * i => (p * i) o (p' * i)
  Cell binary(const Cell& rho, const OneCell& p2) const {
    const OneCell i = D.i(), j = D.j(), p = rho.src, p2i = D.bullet(p2, i);
    return V<B>(D.circ2(D.bullet(p, i), D.lunit_b(p2i)), D.xi(p, j, i, p2i), D.bullet2(rho, p2i),
                D.assoc_b(p, p2, i));
  }

  // Both routes ((p * p') * p'') * i => (p * i) o (p' * i) o (p'' * i).
  bool binary_associative(const Cell& r1, const Cell& r2, const Cell& r3) const {
    const OneCell i = D.i(), p1 = r1.src, p2 = r2.src, p3 = r3.src;
    Cell left = V<B>(D.circ2(binary(r1, p2), D.bullet(p3, i)), binary(comodule_product(r1, r2), p3));
    Cell right = V<B>(D.circ2(D.bullet(p1, i), binary(r2, p3)), binary(r1, D.bullet(p2, p3)),
                      D.bullet2(D.assoc_b(p1, p2, p3), i));
    return equal(left, right);
  }
};

}  // namespace duo
