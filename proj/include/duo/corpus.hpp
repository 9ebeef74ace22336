#pragma once

// Engine bundles and the seeded bimonoid corpora used by the self-test suites
// and the acceptance run.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "duo/models.hpp"

namespace duo {

// Duoidal layer, dualizer and Hopf engine over one monoidale.  The members
// reference each other, so the bundle is held by pointer.
template <class B>
struct Engine {
  Duoidal<B> D;
  Dualizer<B> Z;
  HopfEngine<B> E;

  Engine(Preset p, int n) : D(p, n), Z(D), E(Z) {}
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;
};

template <class B>
using EnginePtr = std::shared_ptr<const Engine<B>>;

template <class B>
EnginePtr<B> make_engine(Preset p, int n) {
  return std::make_shared<const Engine<B>>(p, n);
}

template <class B>
struct Instance {
  EnginePtr<B> engine;
  Bimonoid<B> b;
  bool expect_hopf = true;
  std::vector<std::string> basis;  // names of the elements of a, in atom order
};

template <class B>
class EngineCache {
 public:
  EnginePtr<B> get(Preset p, int n) {
    auto key = std::make_pair(p, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto e = make_engine<B>(p, n);
    cache_.emplace(key, e);
    return e;
  }

 private:
  std::map<std::pair<Preset, int>, EnginePtr<B>> cache_;
};

inline std::vector<std::string> morphism_names(const FiniteCategory& C) {
  std::vector<std::string> out;
  for (int f = 0; f < C.size(); ++f) {
    bool is_id = false;
    for (int x = 0; x < C.objects; ++x)
      if (C.ident[x] == f) is_id = true;
    out.push_back((is_id ? "id" : "f") + std::to_string(f) + ":" + std::to_string(C.src[f]) + "->" +
                  std::to_string(C.tgt[f]));
  }
  return out;
}

inline std::vector<std::string> numbered(const std::string& stem, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t z = 0; z < k; ++z) out.push_back(stem + std::to_string(z));
  return out;
}

inline Instance<SpanBackend> category_instance(EngineCache<SpanBackend>& cache, const FiniteCategory& C) {
  auto eng = cache.get(Preset::SpanDiagonal, C.objects);
  return {eng, category_bimonoid(eng->D, C), groupoid_oracle(C), morphism_names(C)};
}

inline Instance<GVecBackend> linearized_instance(EngineCache<GVecBackend>& cache, const FiniteCategory& C) {
  auto eng = cache.get(Preset::Commutative, C.objects);
  return {eng, bialgebra_bimonoid(eng->D, linearized_category_data(C)), groupoid_oracle(C), morphism_names(C)};
}

// Trivial bialgebras at |X| = 1, 2, then categories from the seeded corpus.
inline std::vector<Instance<SpanBackend>> span_corpus(std::size_t count, std::uint64_t seed) {
  EngineCache<SpanBackend> cache;
  std::vector<Instance<SpanBackend>> out;
  for (int n : {1, 2}) {
    auto eng = cache.get(Preset::SpanDiagonal, n);
    out.push_back({eng, trivial_i(eng->D), true, {}});
    out.push_back({eng, trivial_j(eng->D), true, {}});
  }
  if (count > out.size())
    for (const auto& C : category_corpus(count - out.size(), seed)) out.push_back(category_instance(cache, C));
  out.resize(std::min(out.size(), std::max<std::size_t>(count, 1)));
  return out;
}

// Trivial bialgebras, the named group and monoid algebras, Sweedler's algebra
// and linearized categories from the seeded corpus.
inline std::vector<Instance<GVecBackend>> gvec_corpus(std::size_t count, std::uint64_t seed) {
  EngineCache<GVecBackend> cache;
  std::vector<Instance<GVecBackend>> out;
  for (int n : {1, 2}) {
    auto eng = cache.get(Preset::Commutative, n);
    out.push_back({eng, trivial_i(eng->D), true, {}});
    out.push_back({eng, trivial_j(eng->D), true, {}});
  }
  auto e1 = cache.get(Preset::Commutative, 1);
  out.push_back({e1, group_algebra(e1->D, cyclic_table(2), 0, "QZ2"), true, {"1", "g"}});
  out.push_back({e1, group_algebra(e1->D, cyclic_table(3), 0, "QZ3"), true, {"1", "g", "g2"}});
  out.push_back({e1, group_algebra(e1->D, s3_table(), 0, "QS3"), true, numbered("s", 6)});
  out.push_back({e1, bialgebra_bimonoid(e1->D, sweedler_data()), true, {"1", "g", "x", "gx"}});
  out.push_back({e1, bialgebra_bimonoid(e1->D, monoid_algebra_data({{0, 1}, {1, 1}}, 0, "Q{1,e}")), false, {"1", "e"}});
  if (count > out.size())
    for (const auto& C : category_corpus(count - out.size(), seed)) out.push_back(linearized_instance(cache, C));
  out.resize(std::min(out.size(), std::max<std::size_t>(count, 1)));
  return out;
}

// The trivial bialgebras over the weak preset.
inline std::vector<Instance<GVecBackend>> weak_corpus(int n = 2) {
  auto eng = make_engine<GVecBackend>(Preset::Weak, n);
  return {{eng, trivial_i(eng->D), true, {}}, {eng, trivial_j(eng->D), true, {}}};
}

}  // namespace duo
