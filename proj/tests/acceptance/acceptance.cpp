// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "duo/corpus.hpp"
#include "duo/diagnose.hpp"
#include "duo/galois.hpp"
#include "duo/suites.hpp"
#include "oracles.hpp"

using namespace duo;

namespace {

using Span = SpanBackend;
using GVec = GVecBackend;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

template <class B>
DiagnosticsReport<B> diagnose(const Instance<B>& inst, std::size_t samples, std::uint64_t seed) {
  Diagnoser<B> dg(inst.engine->E);
  return dg.diagnose(inst.b, samples, seed);
}

template <class B>
struct Exact {
  bool antipode, beta, zeta;
};

template <class B>
Exact<B> exact_verdicts(const Instance<B>& inst) {
  const auto& E = inst.engine->E;
  return {E.antipode_solve(inst.b).antipode.has_value(), std::holds_alternative<Cell2<B>>(invert(E.hopf_map(inst.b))),
          std::holds_alternative<Cell2<B>>(invert(E.cohopf_map(inst.b)))};
}

// 1. (a), (b), (c) hold exactly on the groupoids of the category corpus.
void groupoid_characterization(Outcome& out) {
  const auto cats = category_corpus(220, 2024);
  EngineCache<Span> cache;
  int groupoids = 0;
  for (const auto& C : cats) {
    out.require(C.objects <= 4 && C.size() <= 12, C.name + ": exceeds the size bounds");
    const bool oracle = groupoid_oracle(C);
    groupoids += oracle;
    auto r = diagnose(category_instance(cache, C), 1, 0);
    for (std::size_t k = 0; k < 3; ++k)
      out.require(r.verdicts[k].ok() == oracle, C.name + ": " + condition_label(k) + " disagrees with the oracle");
  }
  out.require(groupoids > 0 && groupoids < static_cast<int>(cats.size()), "corpus lacks one of the two classes");
  out.detail << cats.size() << " categories, " << groupoids << " groupoids";
}

template <class B>
void exact_consistency(Outcome& out, const std::vector<Instance<B>>& corpus, const std::string& backend) {
  for (const auto& inst : corpus) {
    auto v = exact_verdicts(inst);
    out.require(v.antipode == v.beta && v.beta == v.zeta, backend + " " + inst.b.name + ": exact verdicts differ");
    out.require(v.antipode == inst.expect_hopf, backend + " " + inst.b.name + ": unexpected verdict");
  }
  out.detail << backend << " " << corpus.size() << " ";
}

// 2. Antipode existence, beta-hat and zeta-hat invertibility agree.
void hopf_consistency(Outcome& out) {
  exact_consistency(out, span_corpus(60, 11), "span");
  exact_consistency(out, gvec_corpus(60, 11), "gvec");
}

template <class B>
void transform_identity_on(Outcome& out, const std::vector<Instance<B>>& corpus, const std::string& backend) {
  for (const auto& inst : corpus) {
    const auto& E = inst.engine->E;
    auto t = E.transform(inst.b, E.hopf_mixed(inst.b), Obj::X, Obj::Y);
    out.require(is_identity(t.cell) && equal(t.cell, id2<B>(inst.b.a)), backend + " " + inst.b.name);
  }
  out.detail << backend << " " << corpus.size() << " ";
}

// 3. transform(beta-hat) = 1_a.
void transform_identity(Outcome& out) {
  transform_identity_on(out, span_corpus(60, 12), "span");
  transform_identity_on(out, gvec_corpus(60, 12), "gvec");
}

// 4. Antipodes against the convolution-inverse solve and the inversion map.
void antipode_oracle(Outcome& out) {
  Engine<GVec> eng(Preset::Commutative, 1);
  auto solve = [&](const Bimonoid<GVec>& b) -> std::optional<linalg::Dense> {
    auto r = eng.E.antipode_solve(b);
    if (!r.antipode) return std::nullopt;
    return antipode_matrix(b, *r.antipode);
  };
  const std::vector<std::pair<std::vector<std::vector<int>>, std::string>> groups = {
      {cyclic_table(2), "QZ2"}, {cyclic_table(3), "QZ3"}, {s3_table(), "QS3"}};
  for (const auto& [table, name] : groups) {
    auto data = monoid_algebra_data(table, 0, name);
    auto S = solve(bialgebra_bimonoid(eng.D, data));
    auto conv = oracle::convolution_inverse(data);
    out.require(S && conv && *S == *conv, name + ": differs from the convolution inverse");
    out.require(S && *S == oracle::inversion_matrix(table, 0), name + ": differs from the inversion map");
  }
  auto sw = sweedler_data();
  auto S = solve(bialgebra_bimonoid(eng.D, sw));
  auto conv = oracle::convolution_inverse(sw);
  out.require(S && conv && *S == *conv, "Sweedler: differs from the convolution inverse");
  if (S) {
    auto S2 = linalg::mul(*S, *S);
    out.require(S2 != linalg::Dense::identity(4), "Sweedler: sigma^2 = 1");
    out.require(linalg::mul(S2, S2) == linalg::Dense::identity(4), "Sweedler: sigma^4 != 1");
  }
  out.detail << "QZ2 QZ3 QS3 Sweedler";
}

template <class B>
void expect_negative(Outcome& out, const Instance<B>& inst, const std::string& name) {
  auto r = diagnose(inst, 3, 5);
  for (std::size_t k = 0; k < 7; ++k) {
    const auto& v = r.verdicts[k];
    const std::string tag = name + " " + condition_label(k);
    out.require(v.status == "fails", tag + ": status " + v.status);
    out.require(v.witness && v.witness_cell && replays(*v.witness_cell, *v.witness), tag + ": witness does not replay");
  }
}

// 5. Q{1,e} and the walking arrow fail (a)-(g) with replaying witnesses.
void negative_instances(Outcome& out) {
  EngineCache<GVec> gc;
  auto eng = gc.get(Preset::Commutative, 1);
  auto idem = bialgebra_bimonoid(eng->D, monoid_algebra_data({{0, 1}, {1, 1}}, 0, "Q{1,e}"));
  expect_negative(out, Instance<GVec>{eng, idem, false, {}}, "Q{1,e}");
  EngineCache<Span> sc;
  expect_negative(out, category_instance(sc, walking_arrow()), "walking-arrow/span");
  expect_negative(out, linearized_instance(gc, walking_arrow()), "walking-arrow/gvec");
  out.detail << "3 instances x 7 conditions";
}

template <class B>
void trivial_on(Outcome& out, Preset p, int n) {
  Engine<B> eng(p, n);
  auto ri = eng.E.antipode_solve(trivial_i(eng.D));
  auto rj = eng.E.antipode_solve(trivial_j(eng.D));
  const std::string tag = std::string(preset_name(p)) + " n=" + std::to_string(n);
  out.require(ri.antipode && equal(*ri.antipode, eng.Z.Xi0), tag + ": antipode of i");
  out.require(rj.antipode && equal(*rj.antipode, eng.Z.Upsilon0), tag + ": antipode of j");
}

// 6. The trivial bialgebras have the unit comparisons as antipodes.
void trivial_antipodes(Outcome& out) {
  for (int n : {1, 2, 3}) {
    trivial_on<Span>(out, Preset::SpanDiagonal, n);
    trivial_on<GVec>(out, Preset::Commutative, n);
  }
  out.detail << "n = 1, 2, 3 in both backends";
}

template <class B>
void anti_homomorphism_on(Outcome& out, const std::vector<Instance<B>>& corpus, const std::string& backend) {
  int count = 0;
  for (const auto& inst : corpus) {
    const auto& E = inst.engine->E;
    auto r = E.antipode_solve(inst.b);
    if (!r.antipode) continue;
    ++count;
    auto err = E.antipode_morphism_check(inst.b, *r.antipode);
    out.require(!err, backend + " " + inst.b.name + ": " + err.value_or(""));
  }
  out.require(count > 0, backend + ": no antipodes in the corpus");
  out.detail << backend << " " << count << " ";
}

// 7. The antipode is a monoid and comonoid morphism into the dual.
void anti_homomorphism(Outcome& out) {
  anti_homomorphism_on(out, span_corpus(60, 13), "span");
  anti_homomorphism_on(out, gvec_corpus(60, 13), "gvec");
}

template <class B>
void suite_on(Outcome& out, const std::string& suite, Preset p, std::size_t samples, std::uint64_t seed) {
  auto r = run_suite<B>(suite, p, samples, seed);
  out.require(r.instances >= samples, suite + "/" + r.backend + ": only " + std::to_string(r.instances) + " instances");
  for (const auto& f : r.failures) out.require(false, suite + "/" + r.backend + ": " + f);
  out.detail << suite << "/" << r.backend << " " << r.instances << " ";
}

// 8. The phi/psi and theta diagrams, beta-zeta duality and the antipode pasting diagrams.
void diagram_suites(Outcome& out) {
  for (const char* s : {"lemma45", "lemma46", "transform", "figure1"}) {
    suite_on<Span>(out, s, Preset::SpanDiagonal, 20, 8);
    suite_on<GVec>(out, s, Preset::Commutative, 20, 8);
  }
}

// 9. Trivial-cotrivial equivalence at n = 2.
void trivial_equivalence(Outcome& out) {
  Duoidal<GVec> D(Preset::Commutative, 2);
  TrivialEquivalence<GVec> T(D);
  std::mt19937_64 rng(909);
  auto invertible = [](const Cell2<GVec>& c) { return std::holds_alternative<Cell2<GVec>>(invert(c)); };
  std::vector<Cell2<GVec>> comodules;
  for (int k = 0; k < 10; ++k) {
    OneCell x = random_endo(rng, 2, 3, "x" + std::to_string(k));
    out.require(invertible(T.unit_at_cofree(x)), "unit at cofree comodule " + std::to_string(k));
    comodules.push_back(T.cofree_j(x));
  }
  for (int k = 0; k < 10; ++k) {
    OneCell y = random_endo(rng, 2, 3, "y" + std::to_string(k));
    out.require(invertible(T.counit_at_free(y)), "counit at free module " + std::to_string(k));
  }
  std::uniform_int_distribution<int> pick(0, 9);
  for (int k = 0; k < 10; ++k) {
    const auto &r1 = comodules[pick(rng)], &r2 = comodules[pick(rng)], &r3 = comodules[pick(rng)];
    out.require(invertible(T.binary(r1, r2.src)), "binary cell on triple " + std::to_string(k));
    out.require(T.binary_associative(r1, r2, r3), "associativity on triple " + std::to_string(k));
  }
  out.detail << "10 units, 10 counits, 10 triples";
}

// 10. Span verdicts equal linearized gvec verdicts.
void cross_backend(Outcome& out) {
  EngineCache<Span> sc;
  EngineCache<GVec> gc;
  const auto cats = category_corpus(25, 77);
  for (const auto& C : cats) {
    auto rs = diagnose(category_instance(sc, C), 2, 4);
    auto rg = diagnose(linearized_instance(gc, C), 2, 4);
    for (std::size_t k = 0; k < 9; ++k)
      out.require(rs.verdicts[k].status == rg.verdicts[k].status && rs.verdicts[k].samples == rg.verdicts[k].samples,
                  C.name + " " + condition_label(k) + ": " + rs.verdicts[k].status + " vs " + rg.verdicts[k].status);
  }
  out.detail << cats.size() << " categories x 9 conditions";
}

// 11. Frobenius triangles, pi/pi', xi coherence and dualization roundtrips.
void foundation(Outcome& out) {
  suite_on<Span>(out, "coherence", Preset::SpanDiagonal, 50, 3);
  suite_on<GVec>(out, "coherence", Preset::Commutative, 50, 3);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"groupoid characterization", groupoid_characterization},
      {"exact verdict consistency", hopf_consistency},
      {"transform of the Hopf map is the identity", transform_identity},
      {"antipode oracles", antipode_oracle},
      {"negative instances with witnesses", negative_instances},
      {"trivial bialgebra antipodes", trivial_antipodes},
      {"anti-homomorphism", anti_homomorphism},
      {"diagram suites", diagram_suites},
      {"trivial-cotrivial equivalence", trivial_equivalence},
      {"cross-backend verdicts", cross_backend},
      {"foundation suite", foundation},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[c].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < 60.0, "took longer than 60 s");
    std::printf("[%s] %2zu %-44s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(), secs,
                out.detail.str().c_str());
    for (const auto& p : out.problems) std::printf("         %s\n", p.c_str());
    failed += !out.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  std::fflush(stdout);
  return failed ? 1 : 0;
}
