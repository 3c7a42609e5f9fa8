#include <gtest/gtest.h>

#include "taft/taft_hopf.hpp"

using namespace taft;

TEST(Taft, AxiomsHoldForSmallOrders) {
  for (int m = 2; m <= 6; ++m) {
    const AxiomReport r = hopf_verify_axioms(TaftAlgebra::create(m));
    EXPECT_TRUE(r.all_passed()) << m;
    for (const char* name : {"coassociativity", "counit", "antipode", "bialgebra"}) {
      ASSERT_NE(r.find(name), nullptr) << name;
      EXPECT_TRUE(r.find(name)->passed) << name;
    }
  }
}

TEST(Taft, CorruptedCoproductIsRejected) {
  const int m = 3;
  // Delta(v) = v (x) v breaks the counit and the multiplicativity of Delta
  TensorCoords dc{{{3, 3}, CycNum::one(m)}};  // c (x) c, with c = index 1*m + 0
  TensorCoords dv{{{1, 1}, CycNum::one(m)}};
  const AxiomReport r = hopf_verify_axioms(TaftAlgebra::with_coproduct(m, dc, dv));
  EXPECT_FALSE(r.all_passed());
  EXPECT_FALSE(r.find("counit")->passed);
  EXPECT_FALSE(r.find("counit")->witness.empty());
}

TEST(Taft, GeneratorRelations) {
  for (int m = 2; m <= 6; ++m) {
    auto H = TaftAlgebra::create(m);
    const HopfElement c = HopfElement::c(H), v = HopfElement::v(H), one = HopfElement::unit(H);
    HopfElement cm = one, vm = one;
    for (int i = 0; i < m; ++i) {
      cm = cm * c;
      vm = vm * v;
    }
    EXPECT_EQ(cm, one);
    EXPECT_EQ(vm, HopfElement::zero(H));
    EXPECT_EQ(v * c, H->zeta() * (c * v));
    EXPECT_TRUE(hopf_counit(v).is_zero());
    EXPECT_TRUE(hopf_counit(c).is_one());
  }
}

TEST(Taft, AntipodeSquareIsConjugationByC) {
  // S^2(h) = c^-1 h c, i.e. S^2(c^i v^k) = zeta^k c^i v^k
  for (int m = 2; m <= 6; ++m) {
    auto H = TaftAlgebra::create(m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        const HopfElement h = HopfElement::basis(H, i, k);
        EXPECT_EQ(hopf_antipode(hopf_antipode(h)), CycNum::zeta_power(m, k) * h) << m << " " << i << " " << k;
      }
    }
  }
}

TEST(Taft, AntipodeExamples) {
  auto H = TaftAlgebra::create(3);
  const CycNum z = H->zeta();
  EXPECT_EQ(hopf_antipode(HopfElement::c(H)), HopfElement::basis(H, 2, 0));
  EXPECT_EQ(hopf_antipode(HopfElement::v(H)), CycNum::rational(3, -1) * HopfElement::basis(H, 2, 1));
  EXPECT_EQ(hopf_antipode(HopfElement::basis(H, 1, 1)), -z.inverse() * HopfElement::basis(H, 1, 1));
}
