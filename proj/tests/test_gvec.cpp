#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "duo/corpus.hpp"

using namespace duo;

namespace {

using GVec = GVecBackend;

std::map<std::string, int> atom_indices(const OneCellData& c, std::size_t e) {
  std::map<std::string, int> out;
  for (std::size_t o = 0; o < c.occ.size(); ++o) out[c.occ[o].atom->name] = c.seq(e)[o];
  return out;
}

}  // namespace

TEST(Rationals, LowestTermsRoundTrip) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-2)), "-2/1");
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(LinearAlgebra, InverseRankAndKernel) {
  linalg::Dense m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  auto inv = linalg::inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(linalg::mul(m, *inv), linalg::Dense::identity(2));
  linalg::Dense s(2, 2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  EXPECT_EQ(linalg::rank(s), 1u);
  EXPECT_FALSE(linalg::inverse(s));
  auto ker = linalg::kernel(s);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0][0] + 2 * ker[0][1], 0);
}

// With one base point both tensors are the plain tensor product and xi
// exchanges the two middle factors.
TEST(GVecPresets, XiIsTheSymmetryAtRankOne) {
  Duoidal<GVec> D(Preset::Commutative, 1);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    OneCell w = random_endo(rng, 1, 2, "w"), x = random_endo(rng, 1, 2, "x");
    OneCell y = random_endo(rng, 1, 2, "y"), z = random_endo(rng, 1, 2, "z");
    auto xi = D.xi(w, x, y, z);
    ASSERT_EQ(xi.src->size(), xi.tgt->size());
    EXPECT_EQ(xi.src->size(), w->size() * x->size() * y->size() * z->size());
    std::set<std::uint32_t> cols;
    for (std::size_t t = 0; t < xi.tgt->size(); ++t) {
      ASSERT_EQ(xi.map.rows[t].size(), 1u);
      const auto& [s, v] = xi.map.rows[t][0];
      EXPECT_EQ(v, 1);
      cols.insert(s);
      auto at = atom_indices(*xi.tgt, t), as = atom_indices(*xi.src, s);
      for (const char* n : {"w", "x", "y", "z"}) EXPECT_EQ(at[n], as[n]);
    }
    EXPECT_EQ(cols.size(), xi.src->size());
  }
}

TEST(GVecPresets, WeakMultiplicationContractsTheMiddleIndex) {
  const int n = 2;
  FrobMonoidale<GVec> F(Preset::Weak, n);
  std::set<std::vector<int>> expect, got;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) expect.insert({i * n + l, i * n + j, k * n + l});
  for (std::size_t e = 0; e < F.m->size(); ++e) got.insert(F.m->grade(e));
  EXPECT_EQ(got, expect);
  std::set<std::vector<int>> units;
  for (std::size_t e = 0; e < F.u->size(); ++e) units.insert(F.u->grade(e));
  EXPECT_EQ(units, (std::set<std::vector<int>>{{0}, {3}}));
}

TEST(GVecPresets, PiPrimeIsInvertibleAtRankTwo) {
  FrobMonoidale<GVec> F(Preset::Commutative, 2);
  EXPECT_EQ(F.pi_prime.src->size(), F.pi_prime.tgt->size());
  auto inv = invert(F.pi_prime);
  ASSERT_TRUE(std::holds_alternative<Cell2<GVec>>(inv));
  EXPECT_TRUE(is_identity(V<GVec>(std::get<Cell2<GVec>>(inv), F.pi_prime)));
}

TEST(GVecCells, InterchangeLaw) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    OneCell f = random_endo(rng, 2, 3, "f"), h = random_endo(rng, 2, 3, "h");
    auto alpha = random_2cell<GVec>(rng, f, 3, "g");
    auto gamma = random_2cell<GVec>(rng, h, 3, "k");
    auto beta = *random_parallel<GVec>(rng, alpha.tgt, alpha.tgt);
    auto delta = *random_parallel<GVec>(rng, gamma.tgt, gamma.tgt);
    EXPECT_TRUE(equal(H<GVec>(V<GVec>(beta, alpha), V<GVec>(delta, gamma)),
                      V<GVec>(H<GVec>(beta, delta), H<GVec>(alpha, gamma))));
    EXPECT_TRUE(equal(tens2(V<GVec>(beta, alpha), V<GVec>(delta, gamma)),
                      V<GVec>(tens2(beta, delta), tens2(alpha, gamma))));
  }
}

TEST(GVecCells, KernelAndCokernelWitnessesReplay) {
  std::mt19937_64 rng(23);
  int failures = 0;
  for (int trial = 0; trial < 30; ++trial) {
    OneCell f = random_endo(rng, 2, 3, "f");
    auto c = random_2cell<GVec>(rng, f, 3, "g");
    auto inv = invert(c);
    if (auto* w = std::get_if<Witness>(&inv)) {
      ++failures;
      EXPECT_TRUE(replays(c, *w));
      Witness zero = *w;
      for (auto& v : zero.vector) v = 0;
      EXPECT_FALSE(replays(c, zero));
    } else {
      EXPECT_TRUE(is_identity(V<GVec>(std::get<Cell2<GVec>>(inv), c)));
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Bialgebras, NamedExamplesValidate) {
  Duoidal<GVec> D(Preset::Commutative, 1);
  Dualizer<GVec> Z(D);
  HopfEngine<GVec> E(Z);
  EXPECT_EQ(E.validate(group_algebra(D, cyclic_table(2), 0, "QZ2")), std::nullopt);
  EXPECT_EQ(E.validate(bialgebra_bimonoid(D, sweedler_data())), std::nullopt);
  EXPECT_EQ(E.validate(bialgebra_bimonoid(D, monoid_algebra_data({{0, 1}, {1, 1}}, 0, "Q{1,e}"))), std::nullopt);
}

TEST(Bialgebras, NonCoassociativeComultiplicationIsRejected) {
  Duoidal<GVec> D(Preset::Commutative, 1);
  Dualizer<GVec> Z(D);
  HopfEngine<GVec> E(Z);
  // Adding x (x) x to Delta(x) in Sweedler's algebra keeps it counital.
  BialgebraData d = sweedler_data();
  d.comult[2].push_back({{2, 2}, 1});
  auto err = E.validate(bialgebra_bimonoid(D, d));
  ASSERT_TRUE(err);
  EXPECT_NE(err->find("delta"), std::string::npos) << *err;
}

TEST(Bialgebras, LinearizedCategoryMatchesItsDefinition) {
  FiniteCategory C = walking_arrow();
  auto d = linearized_category_data(C);
  ASSERT_EQ(d.grades.size(), 3u);
  for (int f = 0; f < 3; ++f) {
    EXPECT_EQ(d.counit[f], (f == 0 || f == 1) ? 1 : 0);
    for (int g = 0; g < 3; ++g) {
      const auto& t = d.mult[f * 3 + g];
      if (f == g) {
        ASSERT_EQ(t.size(), 1u);
        EXPECT_EQ(t[0].idx[0], static_cast<std::size_t>(f));
      } else {
        EXPECT_TRUE(t.empty());
      }
    }
  }
  // Delta(f) = id1 (x) f + f (x) id0 in one of the two orders.
  EXPECT_EQ(d.comult[2].size(), 2u);
}
