#pragma once

// Self-test suites: exact identity checks on seeded random cells and on the
// seeded bimonoid corpora.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "duo/corpus.hpp"
#include "duo/lemmas.hpp"

namespace duo {

struct SuiteResult {
  std::string suite;
  std::string backend;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty() && instances > 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"coherence", "lemma45", "lemma46", "figure1", "transform"};
  return names;
}

namespace detail {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.failures.size() < 25) r_.failures.push_back(what);
  }
  // Runs fn, recording an exception as a failure.
  void guard(const std::string& what, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      ++r_.checks;
      if (r_.failures.size() < 25) r_.failures.push_back(what + ": " + e.what());
    }
  }

 private:
  SuiteResult& r_;
};

inline std::vector<int> sizes_for(Preset p) {
  if (p == Preset::Weak) return {1, 2};
  return {1, 2, 3};
}

inline int max_elems_for(Preset p) { return p == Preset::SpanDiagonal ? 8 : 6; }

template <class B>
bool invertible(const Cell2<B>& c) {
  return std::holds_alternative<Cell2<B>>(invert(c));
}

template <class B>
bool frobenius_triangles(const FrobMonoidale<B>& F) {
  return is_identity(V<B>(H<B>(F.eps_m, F.m), H<B>(F.m, F.eta_m))) &&
         is_identity(V<B>(H<B>(F.ms, F.eps_m), H<B>(F.eta_m, F.ms))) &&
         is_identity(V<B>(H<B>(F.eps_u, F.u), H<B>(F.u, F.eta_u))) &&
         is_identity(V<B>(H<B>(F.us, F.eps_u), H<B>(F.eta_u, F.us)));
}

}  // namespace detail

// Frobenius triangles, invertibility of pi and pi', the duoidal axioms for xi,
// interchange, and the mate roundtrips with their naturality.
template <class B>
SuiteResult coherence_suite(Preset p, std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"coherence", preset_name(p), 0, 0, {}};
  detail::Recorder rec(r);
  EngineCache<B> cache;
  std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(p));
  const auto sizes = detail::sizes_for(p);
  const int big = detail::max_elems_for(p);
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = sizes[std::uniform_int_distribution<std::size_t>(0, sizes.size() - 1)(rng)];
    auto eng = cache.get(p, n);
    const auto& D = eng->D;
    const auto& Z = eng->Z;
    const auto& F = D.M();
    const int base = D.base();
    const std::string tag = "sample " + std::to_string(s) + " (n=" + std::to_string(n) + ")";
    ++r.instances;
    rec.guard(tag, [&] {
      rec.check(detail::frobenius_triangles(F), tag + ": adjunction triangles");
      rec.check(detail::invertible(F.pi) && detail::invertible(F.pi_prime), tag + ": pi, pi' invertible");
      rec.check(detail::invertible(F.alpha) && detail::invertible(F.lambda) && detail::invertible(F.rho),
                tag + ": alpha, lambda, rho invertible");

      // mates
      OneCell f = random_endo(rng, base, big, "f");
      Cell2<B> al = random_2cell<B>(rng, f, big, "f'");
      const OneCell g = al.tgt;
      rec.check(detail::invertible(Z.roundtrip_minus(f)) && detail::invertible(Z.roundtrip_plus(f)),
                tag + ": roundtrips invertible");
      rec.check(equal(V<B>(al, Z.roundtrip_minus(f)), V<B>(Z.roundtrip_minus(g), Z.plus2(Z.minus2(al)))),
                tag + ": (f-)+ roundtrip natural");
      rec.check(equal(V<B>(al, Z.roundtrip_plus(f)), V<B>(Z.roundtrip_plus(g), Z.minus2(Z.plus2(al)))),
                tag + ": (f+)- roundtrip natural");
      Cell2<B> al2 = random_2cell<B>(rng, g, big, "f''");
      rec.check(equal(Z.minus2(V<B>(al2, al)), V<B>(Z.minus2(al2), Z.minus2(al))), tag + ": minus is a functor");

      // duoidal axioms on small cells
      std::vector<OneCell> c;
      for (int k = 0; k < 6; ++k) c.push_back(random_endo(rng, base, 2, std::string(1, static_cast<char>('a' + k))));
      const auto &a = c[0], &b = c[1], &cc = c[2], &d = c[3], &e = c[4], &ff = c[5];
      Cell2<B> lhs = V<B>(D.circ2(D.assoc_b(a, cc, e), D.assoc_b(b, d, ff)), D.xi(D.bullet(a, cc), D.bullet(b, d), e, ff),
                          D.bullet2(D.xi(a, b, cc, d), D.circ(e, ff)));
      Cell2<B> rhs = V<B>(D.xi(a, b, D.bullet(cc, e), D.bullet(d, ff)), D.bullet2(D.circ(a, b), D.xi(cc, d, e, ff)),
                          D.assoc_b(D.circ(a, b), D.circ(cc, d), D.circ(e, ff)));
      rec.check(equal(lhs, rhs), tag + ": xi compatible with bullet associativity");
      lhs = V<B>(D.circ2(D.xi(a, b, d, e), D.bullet(cc, ff)), D.xi(D.circ(a, b), cc, D.circ(d, e), ff));
      rhs = V<B>(D.circ2(D.bullet(a, d), D.xi(b, cc, e, ff)), D.xi(a, D.circ(b, cc), d, D.circ(e, ff)));
      rec.check(equal(lhs, rhs), tag + ": xi compatible with circ associativity");
      const OneCell i = D.i(), j = D.j();
      lhs = V<B>(D.circ2(D.lunit_b(a), D.lunit_b(b)), D.xi(j, j, a, b), D.bullet2(D.xi0(), D.circ(a, b)));
      rec.check(equal(lhs, D.lunit_b(D.circ(a, b))), tag + ": xi left unit");
      lhs = V<B>(D.circ2(D.runit_b(a), D.runit_b(b)), D.xi(a, b, j, j), D.bullet2(D.circ(a, b), D.xi0()));
      rec.check(equal(lhs, D.runit_b(D.circ(a, b))), tag + ": xi right unit");
      rec.check(is_identity(V<B>(D.circ2(D.xi_0(), D.bullet(a, b)), D.xi(i, a, i, b))), tag + ": xi_0 left unit");
      rec.check(is_identity(V<B>(D.circ2(D.bullet(a, b), D.xi_0()), D.xi(a, i, b, i))), tag + ": xi_0 right unit");

      // naturality of xi and interchange on random 2-cells
      Cell2<B> w1 = random_2cell<B>(rng, a, 2, "a'");
      lhs = V<B>(D.xi(w1.tgt, b, cc, d), D.bullet2(D.circ2(w1, b), D.circ(cc, d)));
      rhs = V<B>(D.circ2(D.bullet2(w1, cc), D.bullet(b, d)), D.xi(a, b, cc, d));
      rec.check(equal(lhs, rhs), tag + ": xi natural");
      Cell2<B> w2 = random_2cell<B>(rng, w1.tgt, 2, "a''");
      Cell2<B> v1 = random_2cell<B>(rng, b, 2, "b'");
      Cell2<B> v2 = random_2cell<B>(rng, v1.tgt, 2, "b''");
      rec.check(equal(H<B>(V<B>(w2, w1), V<B>(v2, v1)), V<B>(H<B>(w2, v2), H<B>(w1, v1))), tag + ": interchange");
    });
  }
  return r;
}

namespace detail {

template <class B, class Fn>
SuiteResult random_tuples(const std::string& name, Preset p, std::size_t samples, std::uint64_t seed, Fn&& body) {
  SuiteResult r{name, preset_name(p), 0, 0, {}};
  Recorder rec(r);
  EngineCache<B> cache;
  std::mt19937_64 rng(seed * 7919u + static_cast<std::uint64_t>(p) + name.size());
  const auto sizes = sizes_for(p);
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = sizes[std::uniform_int_distribution<std::size_t>(0, sizes.size() - 1)(rng)];
    auto eng = cache.get(p, n);
    std::vector<OneCell> c;
    for (int k = 0; k < 4; ++k) c.push_back(random_endo(rng, eng->D.base(), 3, std::string(1, "fghk"[k])));
    const std::string tag = "sample " + std::to_string(s) + " (n=" + std::to_string(n) + ")";
    ++r.instances;
    rec.guard(tag, [&] { body(rec, rng, *eng, c, tag); });
  }
  return r;
}

}  // namespace detail

// Both phi/psi diagrams, and naturality of phi and psi.
template <class B>
SuiteResult lemma45_suite(Preset p, std::size_t samples, std::uint64_t seed) {
  return detail::random_tuples<B>("lemma45", p, samples, seed,
                                  [](detail::Recorder& rec, std::mt19937_64& rng, const Engine<B>& eng,
                                     const std::vector<OneCell>& c, const std::string& tag) {
    const auto& D = eng.D;
    const auto& Z = eng.Z;
    LemmaChecks<B> L{D, Z};
    const auto &f = c[0], &g = c[1], &h = c[2], &k = c[3];
    const OneCell i = D.i(), j = D.j();
    rec.check(L.phi_psi_first(f, g, h, k), tag + ": first diagram");
    rec.check(L.phi_psi_second(f, g, h, k), tag + ": second diagram");
    Cell2<B> al = random_2cell<B>(rng, f, 3, "f'");
    Cell2<B> be = random_2cell<B>(rng, g, 3, "g'");
    rec.check(equal(V<B>(Z.phi(al.tgt, g), D.circ2(al, Z.minus(g))),
                    V<B>(D.bullet2(D.circ2(D.bullet2(al, g), j), i), Z.phi(f, g))),
              tag + ": phi natural in f");
    rec.check(equal(V<B>(Z.phi(f, be.tgt), D.circ2(f, Z.minus2(be))),
                    V<B>(D.bullet2(D.circ2(D.bullet2(f, be), j), i), Z.phi(f, g))),
              tag + ": phi natural in g");
    rec.check(equal(V<B>(Z.psi(al.tgt, g), D.circ2(Z.minus2(al), g)),
                    V<B>(D.bullet2(i, D.circ2(j, D.bullet2(al, g))), Z.psi(f, g))),
              tag + ": psi natural in f");
    rec.check(equal(V<B>(Z.psi(f, be.tgt), D.circ2(Z.minus(f), be)),
                    V<B>(D.bullet2(i, D.circ2(j, D.bullet2(f, be))), Z.psi(f, g))),
              tag + ": psi natural in g");
  });
}

// The theta identities and naturality of theta in its outer arguments.
template <class B>
SuiteResult lemma46_suite(Preset p, std::size_t samples, std::uint64_t seed) {
  return detail::random_tuples<B>("lemma46", p, samples, seed,
                                  [](detail::Recorder& rec, std::mt19937_64& rng, const Engine<B>& eng,
                                     const std::vector<OneCell>& c, const std::string& tag) {
    const auto& D = eng.D;
    const auto& Z = eng.Z;
    LemmaChecks<B> L{D, Z};
    const auto &f = c[0], &g = c[1], &h = c[2], &k = c[3];
    const OneCell i = D.i(), j = D.j();
    rec.check(L.theta_unit(f, h), tag + ": theta at i is phi");
    rec.check(L.theta_phi(f, g, h, k), tag + ": theta against phi");
    rec.check(L.theta_xi0(f, g, h), tag + ": theta against xi0");
    Cell2<B> al = random_2cell<B>(rng, f, 3, "f'");
    const OneCell mid = D.bullet(D.circ(g, j), i);
    rec.check(equal(V<B>(Z.theta(al.tgt, g, h), D.circ2(D.circ2(al, mid), Z.minus(h))),
                    V<B>(D.bullet2(D.circ2(D.circ2(D.bullet2(al, h), g), j), i), Z.theta(f, g, h))),
              tag + ": theta natural in f");
  });
}

namespace detail {

template <class B>
std::vector<Instance<B>> corpus_for(Preset p, std::size_t count, std::uint64_t seed) {
  if constexpr (B::linear) {
    if (p == Preset::Weak) return weak_corpus();
    return gvec_corpus(count, seed);
  } else {
    (void)p;
    return span_corpus(count, seed);
  }
}

}  // namespace detail

// The bullet and circ antipode diagrams and the anti-homomorphism equalities on corpus
// bimonoids with an antipode; `samples` of them are required.
template <class B>
SuiteResult figure1_suite(Preset p, std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"figure1", preset_name(p), 0, 0, {}};
  detail::Recorder rec(r);
  const auto corpus = detail::corpus_for<B>(p, 2 * samples + 8, seed);
  for (const auto& inst : corpus) {
    if (r.instances >= samples) break;
    const auto& E = inst.engine->E;
    rec.guard(inst.b.name, [&] {
      auto res = E.antipode_solve(inst.b);
      if (!res.antipode) return;
      ++r.instances;
      const auto& s = *res.antipode;
      auto fb = E.figure1_bullet(inst.b, s);
      auto fc = E.figure1_circ(inst.b, s);
      rec.check(fb.upper_is_identity && fb.lower_is_identity, inst.b.name + ": bullet diagram");
      rec.check(fc.upper_is_identity && fc.lower_is_identity, inst.b.name + ": circ diagram");
      auto m = E.antipode_morphism_check(inst.b, s);
      rec.check(!m, inst.b.name + ": " + m.value_or(""));
    });
  }
  if (p != Preset::Weak && r.instances < samples)
    r.failures.push_back("only " + std::to_string(r.instances) + " corpus bimonoids have an antipode");
  return r;
}

// transform(beta-hat) = 1, mixed-morphism and roundtrip checks, random
// transform morphisms of all four hom-types, the dual bimonoid and the
// beta-zeta duality.
template <class B>
SuiteResult transform_suite(Preset p, std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"transform", preset_name(p), 0, 0, {}};
  detail::Recorder rec(r);
  const auto corpus = detail::corpus_for<B>(p, samples, seed);
  std::mt19937_64 rng(seed + 17);
  for (const auto& inst : corpus) {
    const auto& E = inst.engine->E;
    const auto& b = inst.b;
    ++r.instances;
    rec.guard(b.name, [&] {
      const auto fm = E.hopf_mixed(b);
      rec.check(E.is_mixed_morphism(b, fm, Obj::X, Obj::Y), b.name + ": Hopf map is a mixed morphism");
      const auto t = E.transform(b, fm, Obj::X, Obj::Y);
      rec.check(is_identity(t.cell), b.name + ": transform of the Hopf map is the identity");
      rec.check(equal(E.untransform(b, t), fm), b.name + ": untransform . transform");
      rec.check(equal(E.transform(b, id2<B>(E.GT(b, Obj::X)), Obj::X, Obj::X).cell, E.identity_X(b)),
                b.name + ": identity on X is transported");
      rec.check(equal(E.transform(b, id2<B>(E.GT(b, Obj::Y)), Obj::Y, Obj::Y).cell, E.identity_Y(b)),
                b.name + ": identity on Y is transported");
      for (Obj w : {Obj::X, Obj::Y})
        for (Obj z : {Obj::X, Obj::Y}) {
          auto c = random_parallel<B>(rng, b.a, E.transform_target(b, w, z));
          if (!c) continue;
          TransformMorphism<B> tm{w, z, *c};
          const auto f = E.untransform(b, tm);
          rec.check(E.is_mixed_morphism(b, f, w, z), b.name + ": untransformed random morphism is mixed");
          rec.check(equal(E.transform(b, f, w, z).cell, *c), b.name + ": transform . untransform");
        }
      rec.check(!E.validate(E.dual(b)), b.name + ": dual bimonoid validates");
      rec.check(E.beta_zeta_duality(b), b.name + ": beta-zeta duality");
    });
  }
  return r;
}

template <class B>
SuiteResult run_suite(const std::string& suite, Preset p, std::size_t samples, std::uint64_t seed) {
  if (suite == "coherence") return coherence_suite<B>(p, samples, seed);
  if (suite == "lemma45") return lemma45_suite<B>(p, samples, seed);
  if (suite == "lemma46") return lemma46_suite<B>(p, samples, seed);
  if (suite == "figure1") return figure1_suite<B>(p, samples, seed);
  if (suite == "transform") return transform_suite<B>(p, samples, seed);
  throw ValidationError("unknown suite '" + suite + "'");
}

}  // namespace duo
