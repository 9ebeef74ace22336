#include <gtest/gtest.h>

#include "duo/corpus.hpp"
#include "duo/diagnose.hpp"
#include "oracles.hpp"

using namespace duo;
using oracle::convolution_inverse;
using oracle::inversion_matrix;

namespace {

using GVec = GVecBackend;
using Span = SpanBackend;

linalg::Dense dense(const LinMap& m) {
  linalg::Dense d(m.nrows(), m.cols);
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (const auto& [j, v] : m.rows[i]) d.at(i, j) = v;
  return d;
}

struct Fixture {
  Duoidal<GVec> D{Preset::Commutative, 1};
  Dualizer<GVec> Z{D};
  HopfEngine<GVec> E{Z};
};

linalg::Dense engine_antipode(const Fixture& fx, const Bimonoid<GVec>& b) {
  auto r = fx.E.antipode_solve(b);
  EXPECT_TRUE(r.antipode);
  auto S = antipode_matrix(b, *r.antipode);
  EXPECT_TRUE(S);
  return *S;
}

}  // namespace

TEST(Antipode, MatchesConvolutionInverse) {
  Fixture fx;
  const std::vector<BialgebraData> cases = {monoid_algebra_data(cyclic_table(2), 0, "QZ2"),
                                            monoid_algebra_data(cyclic_table(3), 0, "QZ3"),
                                            monoid_algebra_data(s3_table(), 0, "QS3"), sweedler_data()};
  for (const auto& d : cases) {
    auto oracle = convolution_inverse(d);
    ASSERT_TRUE(oracle) << d.name;
    EXPECT_EQ(engine_antipode(fx, bialgebra_bimonoid(fx.D, d)), *oracle) << d.name;
  }
}

TEST(Antipode, GroupAlgebrasInvertElements) {
  Fixture fx;
  for (const auto& [table, name] : {std::pair{cyclic_table(2), "QZ2"}, std::pair{cyclic_table(3), "QZ3"},
                                    std::pair{cyclic_table(5), "QZ5"}, std::pair{s3_table(), "QS3"}}) {
    EXPECT_EQ(engine_antipode(fx, group_algebra(fx.D, table, 0, name)), inversion_matrix(table, 0)) << name;
  }
}

TEST(Antipode, SweedlerHasOrderFour) {
  Fixture fx;
  auto S = engine_antipode(fx, bialgebra_bimonoid(fx.D, sweedler_data()));
  auto S2 = linalg::mul(S, S);
  EXPECT_NE(S2, linalg::Dense::identity(4));
  EXPECT_EQ(linalg::mul(S2, S2), linalg::Dense::identity(4));
  EXPECT_EQ(matrix_order(S), 4);
}

TEST(Antipode, CategoryAntipodeIsInversion) {
  EngineCache<Span> cache;
  auto inst = category_instance(cache, group_category(cyclic_table(3), 0, "Z3"));
  auto r = inst.engine->E.antipode_solve(inst.b);
  ASSERT_TRUE(r.antipode);
  EXPECT_EQ(*antipode_matrix(inst.b, *r.antipode), inversion_matrix(cyclic_table(3), 0));
}

template <class B>
void check_trivial(Preset p, int n) {
  Engine<B> eng(p, n);
  auto ri = eng.E.antipode_solve(trivial_i(eng.D));
  auto rj = eng.E.antipode_solve(trivial_j(eng.D));
  ASSERT_TRUE(ri.antipode && rj.antipode);
  EXPECT_TRUE(equal(*ri.antipode, eng.Z.Xi0));
  EXPECT_TRUE(equal(*rj.antipode, eng.Z.Upsilon0));
}

TEST(Antipode, TrivialBialgebrasGiveTheUnitComparisons) {
  check_trivial<Span>(Preset::SpanDiagonal, 1);
  check_trivial<Span>(Preset::SpanDiagonal, 2);
  check_trivial<GVec>(Preset::Commutative, 1);
  check_trivial<GVec>(Preset::Commutative, 2);
  check_trivial<GVec>(Preset::Weak, 2);
}

template <class B>
void check_anti_homomorphism(const std::vector<Instance<B>>& corpus) {
  int with_antipode = 0;
  for (const auto& inst : corpus) {
    const auto& E = inst.engine->E;
    auto r = E.antipode_solve(inst.b);
    EXPECT_EQ(r.antipode.has_value(), inst.expect_hopf) << inst.b.name;
    if (!r.antipode) continue;
    ++with_antipode;
    EXPECT_EQ(E.antipode_morphism_check(inst.b, *r.antipode), std::nullopt) << inst.b.name;
  }
  EXPECT_GT(with_antipode, 0);
}

TEST(Antipode, AntiHomomorphismSpan) { check_anti_homomorphism(span_corpus(14, 5)); }
TEST(Antipode, AntiHomomorphismGVec) { check_anti_homomorphism(gvec_corpus(14, 5)); }

TEST(Antipode, ScaledAntipodeIsRejected) {
  Fixture fx;
  auto b = bialgebra_bimonoid(fx.D, sweedler_data());
  auto s = *fx.E.antipode_solve(b).antipode;
  auto wrong = s;
  for (auto& row : wrong.map.rows)
    for (auto& e : row) e.second *= 2;
  EXPECT_FALSE(fx.E.antipode_left(b, wrong));
  EXPECT_FALSE(fx.E.antipode_right(b, wrong));
  EXPECT_TRUE(fx.E.antipode_morphism_check(b, wrong).has_value());
  EXPECT_TRUE(fx.E.antipode_left(b, s));
}

TEST(Antipode, PermutedSpanAntipodeIsRejected) {
  EngineCache<Span> cache;
  auto inst = category_instance(cache, group_category(cyclic_table(3), 0, "Z3"));
  const auto& E = inst.engine->E;
  auto s = *E.antipode_solve(inst.b).antipode;
  ASSERT_GE(s.map.size(), 2u);
  auto wrong = s;
  std::swap(wrong.map[0], wrong.map[1]);
  EXPECT_FALSE(E.antipode_left(inst.b, wrong) && E.antipode_right(inst.b, wrong));
}

TEST(HopfMap, WalkingArrowWitnessReplays) {
  EngineCache<Span> cache;
  auto inst = category_instance(cache, walking_arrow());
  const auto& E = inst.engine->E;
  auto r = E.antipode_solve(inst.b);
  ASSERT_FALSE(r.antipode);
  ASSERT_TRUE(r.witness);
  auto beta = E.hopf_map(inst.b);
  EXPECT_TRUE(replays(beta, *r.witness));
  EXPECT_EQ(r.witness->kind, "no-preimage");
  // Every other source element is hit.
  for (std::size_t s = 0; s < beta.src->size(); ++s) {
    Witness w{"no-preimage", "src", {s}, {}, ""};
    EXPECT_EQ(replays(beta, w), s == r.witness->elements[0]) << s;
  }
}

// Q{1,e}: the Galois map x (x) y -> x y (x) y has rank 3 on a 4-dimensional space.
TEST(HopfMap, IdempotentMonoidAlgebraHasRankDeficientHopfMap) {
  Fixture fx;
  auto b = bialgebra_bimonoid(fx.D, monoid_algebra_data({{0, 1}, {1, 1}}, 0, "Q{1,e}"));
  linalg::Dense can(4, 4);
  const int mult[2][2] = {{0, 1}, {1, 1}};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) can.at(mult[x][y] * 2 + y, x * 2 + y) += 1;
  EXPECT_EQ(linalg::rank(can), 3u);
  EXPECT_EQ(linalg::rank(dense(fx.E.hopf_map(b).map)), 3u);
  EXPECT_EQ(linalg::rank(dense(fx.E.cohopf_map(b).map)), 3u);
}

template <class B>
void check_exact_consistency(const std::vector<Instance<B>>& corpus) {
  for (const auto& inst : corpus) {
    const auto& E = inst.engine->E;
    const bool a = E.antipode_solve(inst.b).antipode.has_value();
    const bool beta = std::holds_alternative<Cell2<B>>(invert(E.hopf_map(inst.b)));
    const bool zeta = std::holds_alternative<Cell2<B>>(invert(E.cohopf_map(inst.b)));
    EXPECT_EQ(a, beta) << inst.b.name;
    EXPECT_EQ(beta, zeta) << inst.b.name;
    EXPECT_TRUE(is_identity(E.transform(inst.b, E.hopf_mixed(inst.b), Obj::X, Obj::Y).cell)) << inst.b.name;
  }
}

TEST(HopfMap, ExactVerdictsAgreeSpan) { check_exact_consistency(span_corpus(20, 8)); }
TEST(HopfMap, ExactVerdictsAgreeGVec) { check_exact_consistency(gvec_corpus(20, 8)); }
TEST(HopfMap, ExactVerdictsAgreeWeak) { check_exact_consistency(weak_corpus()); }
