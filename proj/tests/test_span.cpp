#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "duo/corpus.hpp"

using namespace duo;

namespace {

using Span = SpanBackend;
using Grade = std::pair<std::vector<int>, std::vector<int>>;

std::vector<Grade> grades(const OneCell& c) {
  std::vector<Grade> out;
  for (std::size_t e = 0; e < c->size(); ++e) out.push_back({c->cod_tuple(e), c->dom_tuple(e)});
  std::sort(out.begin(), out.end());
  return out;
}

OneCell endo(std::mt19937_64& rng, int base, const std::string& name) { return random_endo(rng, base, 4, name); }

}  // namespace

TEST(SpanCarrier, IdentityComposesToIdentity) {
  OneCell one = identity(2, 1);
  OneCell c = compose(one, one);
  EXPECT_EQ(c->size(), 2u);
  EXPECT_TRUE(same(c, one));
}

TEST(SpanCarrier, UnitJHasFourElementsOverTwoPoints) {
  Duoidal<Span> D(Preset::SpanDiagonal, 2);
  EXPECT_EQ(D.j()->size(), 4u);
  std::vector<Grade> expect;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) expect.push_back({{x}, {y}});
  EXPECT_EQ(grades(D.j()), expect);
}

TEST(SpanCarrier, PiIsABijectionOfDiagonalTriples) {
  FrobMonoidale<Span> F(Preset::SpanDiagonal, 2);
  EXPECT_EQ(F.pi.src->size(), 2u);
  EXPECT_EQ(F.pi.tgt->size(), 2u);
  auto inv = invert(F.pi);
  ASSERT_TRUE(std::holds_alternative<Cell2<Span>>(inv));
  for (std::size_t e = 0; e < 2; ++e) {
    auto g = F.pi.tgt->grade(e);
    EXPECT_TRUE(std::all_of(g.begin(), g.end(), [&](int v) { return v == g[0]; }));
  }
}

// Composite carriers against a brute-force pullback of element lists.
TEST(SpanCarrier, CompositionMatchesBruteForcePullback) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int base = 1 + trial % 3;
    OneCell f = endo(rng, base, "f"), g = endo(rng, base, "g");
    std::vector<Grade> expect;
    for (const auto& ef : f->occ[0].atom->elems)
      for (const auto& eg : g->occ[0].atom->elems)
        if (ef.cod == eg.dom) expect.push_back({eg.cod, ef.dom});
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(grades(compose(g, f)), expect) << "trial " << trial;
  }
}

TEST(SpanCarrier, TensorCarrierIsTheProduct) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    OneCell f = endo(rng, 2, "f"), g = endo(rng, 2, "g");
    OneCell t = tensor(f, g);
    EXPECT_EQ(t->size(), f->size() * g->size());
    EXPECT_EQ(t->p, 2);
    EXPECT_EQ(t->q, 2);
  }
}

TEST(SpanCarrier, MinusOfAnArrowSpanSwapsItsLegs) {
  Duoidal<Span> D(Preset::SpanDiagonal, 3);
  Dualizer<Span> Z(D);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    OneCell f = endo(rng, 3, "f");
    std::vector<Grade> swapped;
    for (const auto& [c, d] : grades(f)) swapped.push_back({d, c});
    std::sort(swapped.begin(), swapped.end());
    EXPECT_EQ(grades(Z.minus(f)), swapped);
  }
}

TEST(SpanCells, InterchangeLaw) {
  std::mt19937_64 rng(14);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    OneCell f = endo(rng, 2, "f"), h = endo(rng, 2, "h");
    auto alpha = random_2cell<Span>(rng, f, 4, "g");
    auto gamma = random_2cell<Span>(rng, h, 4, "k");
    auto beta = random_parallel<Span>(rng, alpha.tgt, alpha.tgt);
    auto delta = random_parallel<Span>(rng, gamma.tgt, gamma.tgt);
    if (!beta || !delta) continue;
    ++checked;
    EXPECT_TRUE(equal(H<Span>(V<Span>(*beta, alpha), V<Span>(*delta, gamma)),
                      V<Span>(H<Span>(*beta, *delta), H<Span>(alpha, gamma))));
    EXPECT_TRUE(equal(tens2(V<Span>(*beta, alpha), V<Span>(*delta, gamma)),
                      V<Span>(tens2(*beta, *delta), tens2(alpha, gamma))));
  }
  EXPECT_GE(checked, 10);
}

TEST(SpanCells, InverseWitnessesReplay) {
  std::mt19937_64 rng(15);
  int failures = 0;
  for (int trial = 0; trial < 40; ++trial) {
    OneCell f = endo(rng, 2, "f");
    auto c = random_2cell<Span>(rng, f, 5, "g");
    auto inv = invert(c);
    if (auto* w = std::get_if<Witness>(&inv)) {
      ++failures;
      EXPECT_TRUE(replays(c, *w));
      Witness bogus = *w;
      bogus.kind = bogus.kind == "no-preimage" ? "multiple-preimages" : "no-preimage";
      EXPECT_FALSE(replays(c, bogus));
    } else {
      const auto& ci = std::get<Cell2<Span>>(inv);
      EXPECT_TRUE(is_identity(V<Span>(ci, c)));
      EXPECT_TRUE(is_identity(V<Span>(c, ci)));
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Categories, GroupoidOracle) {
  EXPECT_TRUE(groupoid_oracle(discrete_category(2)));
  EXPECT_FALSE(groupoid_oracle(walking_arrow()));
  EXPECT_TRUE(groupoid_oracle(group_category(cyclic_table(2), 0, "Z2")));
  EXPECT_TRUE(groupoid_oracle(group_category(s3_table(), 0, "S3")));
  EXPECT_FALSE(groupoid_oracle(group_category({{0, 1}, {1, 1}}, 0, "{1,e}")));
}

TEST(Categories, MalformedTablesAreRejected) {
  FiniteCategory C = walking_arrow();
  C.comp[2][0] = 1;
  EXPECT_FALSE(category_error(C).empty());
  FiniteCategory M = group_category({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, 0, "bad");
  EXPECT_NE(category_error(M).find("associa"), std::string::npos) << category_error(M);
  Duoidal<Span> D(Preset::SpanDiagonal, 1);
  EXPECT_THROW(category_bimonoid(D, M), ValidationError);
}

TEST(Categories, CorpusIsDeterministicAndBounded) {
  auto a = category_corpus(40, 3), b = category_corpus(40, 3), c = category_corpus(40, 4);
  ASSERT_EQ(a.size(), 40u);
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].comp, b[k].comp);
    EXPECT_EQ(a[k].src, b[k].src);
    EXPECT_LE(a[k].objects, 4);
    EXPECT_LE(a[k].size(), 12);
    EXPECT_EQ(category_error(a[k]), "");
    differs = differs || a[k].comp != c[k].comp;
  }
  EXPECT_TRUE(differs);
}

TEST(Categories, BimonoidsValidate) {
  EngineCache<Span> cache;
  for (const auto& C : category_corpus(20, 9)) {
    auto inst = category_instance(cache, C);
    EXPECT_EQ(inst.engine->E.validate(inst.b), std::nullopt) << C.name;
    EXPECT_EQ(inst.b.a->size(), static_cast<std::size_t>(C.size()));
  }
}
