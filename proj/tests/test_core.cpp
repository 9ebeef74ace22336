#include <gtest/gtest.h>

#include "duo/gvec.hpp"
#include "duo/monoidale.hpp"
#include "duo/span.hpp"

using namespace duo;

template <class B>
void check_frobenius(Preset p, int n) {
  FrobMonoidale<B> F(p, n);
  auto M1 = F.id(1);
  // m -| m*
  auto t1 = V<B>(H<B>(F.eps_m, F.m), H<B>(F.m, F.eta_m));
  EXPECT_TRUE(is_identity(t1));
  auto t2 = V<B>(H<B>(F.ms, F.eps_m), H<B>(F.eta_m, F.ms));
  EXPECT_TRUE(is_identity(t2));
  auto t3 = V<B>(H<B>(F.eps_u, F.u), H<B>(F.u, F.eta_u));
  EXPECT_TRUE(is_identity(t3));
  auto t4 = V<B>(H<B>(F.us, F.eps_u), H<B>(F.eta_u, F.us));
  EXPECT_TRUE(is_identity(t4));
  EXPECT_TRUE(std::holds_alternative<Cell2<B>>(invert(F.pi)));
  EXPECT_TRUE(std::holds_alternative<Cell2<B>>(invert(F.pi_prime)));
  EXPECT_TRUE(equal(F.pi, by_grade<B>(F.pi.src, F.pi.tgt)) || B::linear);
}

TEST(Frobenius, SpanTriangles) { check_frobenius<SpanBackend>(Preset::SpanDiagonal, 3); }
TEST(Frobenius, CommutativeTriangles) { check_frobenius<GVecBackend>(Preset::Commutative, 2); }
TEST(Frobenius, WeakTriangles) { check_frobenius<GVecBackend>(Preset::Weak, 2); }
