#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "twistbrack/error.hpp"

namespace twistbrack {
namespace {

using testing::Builder;

Matrix transvection_matrix(const PrimeField& f) { return Matrix::from_rows(f, {{1, 1}, {0, 1}}); }

TEST(PrimeField, RejectsComposites) {
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(65521));
  for (std::int64_t n : {0, 1, 4, 9, 65535}) {
    try {
      PrimeField f(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NonPrimeModulus);
    }
  }
}

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f(3) * f(5), f(1));
  EXPECT_EQ(f(3).inverse(), f(5));
  EXPECT_EQ(f(-1).balanced(), -1);
  EXPECT_EQ(f.sign(3), f(-1));
  EXPECT_EQ(f(2).pow(6), f(1));
}

TEST(FiniteMatrixGroup, TransvectionHasOrderP) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    PrimeField f(p);
    auto g = FiniteMatrixGroup::generate(f, 2, {transvection_matrix(f)});
    EXPECT_EQ(g.size(), static_cast<std::size_t>(p));
    EXPECT_EQ(g.power(g.generator(0), p), g.identity());
  }
}

TEST(FiniteMatrixGroup, IdentityGeneratorGivesTrivialGroup) {
  PrimeField f(5);
  auto g = FiniteMatrixGroup::generate(f, 2, {Matrix::identity(f, 2)});
  EXPECT_EQ(g.size(), 1u);
}

TEST(FiniteMatrixGroup, SwapHasOrderTwo) {
  PrimeField f(2);
  auto g = FiniteMatrixGroup::generate(f, 2, {Matrix::from_rows(f, {{0, 1}, {1, 0}})});
  EXPECT_EQ(g.size(), 2u);
}

TEST(FiniteMatrixGroup, ClosedUnderProductAndInverse) {
  PrimeField f(3);
  auto g = FiniteMatrixGroup::generate(f, 2, {transvection_matrix(f), Matrix::from_rows(f, {{0, -1}, {1, 0}})});
  EXPECT_EQ(g.size(), 24u);  // SL_2(F_3)
  for (GroupIndex a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
    for (GroupIndex b = 0; b < g.size(); ++b) {
      EXPECT_TRUE(g.find(g.matrix(a) * g.matrix(b)).has_value());
      EXPECT_EQ(g.matrix(g.multiply(a, b)), g.matrix(a) * g.matrix(b));
    }
    EXPECT_EQ(g.evaluate_word(g.word(a)), a);
  }
}

TEST(FiniteMatrixGroup, Errors) {
  PrimeField f(3);
  try {
    FiniteMatrixGroup::generate(f, 2, {Matrix::from_rows(f, {{1, 0}, {0, 0}})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonInvertibleGenerator);
  }
  try {
    FiniteMatrixGroup::generate(f, 2, {transvection_matrix(f), Matrix::from_rows(f, {{0, -1}, {1, 0}})}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
  }
}

class TransvectionAlgebra : public ::testing::Test {
 protected:
  TransvectionExample ex = make_transvection_example(3);
  Builder b{*ex.context};
};

TEST_F(TransvectionAlgebra, ActionOnVariables) {
  EXPECT_EQ(b.a().act(b.g(), b.x(1)), b.x(0) + b.x(1));  // g w = v + w
  EXPECT_EQ(b.a().act(b.g(), b.x(0)), b.x(0));           // g v = v
  EXPECT_EQ(b.a().act(b.g(), b.one()), b.one());
  EXPECT_EQ(b.a().act(b.g(2), b.x(1)), b.x(0, 2) + b.x(1));
}

TEST_F(TransvectionAlgebra, ActionOnWedges) {
  const auto vw = Wedge::of({0, 1});
  EXPECT_EQ(b.a().act(b.g(), vw), LinearCombination<Wedge>(vw, b.k(1)));
  EXPECT_EQ(b.a().act(b.e(), Wedge::of({1})), LinearCombination<Wedge>(Wedge::of({1}), b.k(1)));
  LinearCombination<Wedge> v_plus_w(Wedge::of({0}), b.k(1));
  v_plus_w.add(Wedge::of({1}), b.k(1));
  EXPECT_EQ(b.a().act(b.g(), Wedge::of({1})), v_plus_w);
}

TEST_F(TransvectionAlgebra, Multiplication) {
  EXPECT_EQ(b.a().multiply(b.group_elem(b.g()), b.elem(b.x(1), b.e())), b.elem(b.x(0) + b.x(1), b.g()));
  EXPECT_EQ(b.a().multiply(b.elem(b.x(0), b.e()), b.elem(b.x(1), b.e())), b.elem(b.poly({1, 1}), b.e()));
  EXPECT_EQ(b.a().multiply(b.group_elem(b.g()), b.group_elem(b.g(2))), b.a().one());
}

TEST_F(TransvectionAlgebra, ActionIsMultiplicativeAndDegreePreserving) {
  std::mt19937_64 rng(7);
  const auto random_poly = [&] {
    Poly s;
    for (int d = 0; d <= 3; ++d) {
      for (const auto& m : monomials_of_degree(2, d)) s.add(m, b.k(static_cast<std::int64_t>(rng() % 3)));
    }
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Poly s = random_poly(), t = random_poly();
    for (GroupIndex g = 0; g < 3; ++g) {
      EXPECT_EQ(b.a().act(g, s * t), b.a().act(g, s) * b.a().act(g, t));
      for (GroupIndex h = 0; h < 3; ++h) {
        EXPECT_EQ(b.a().act(b.a().group().multiply(g, h), s), b.a().act(g, b.a().act(h, s)));
      }
      for (const auto& [m, c] : b.a().act(g, monomial_poly(Monomial::from_exponents({2, 1}), b.k(1)))) {
        EXPECT_EQ(m.degree(), 3);
      }
    }
  }
}

TEST_F(TransvectionAlgebra, MultiplicationIsAssociativeWithUnit) {
  std::mt19937_64 rng(11);
  const auto random_elem = [&] {
    SkewElement a;
    for (GroupIndex g = 0; g < 3; ++g) {
      for (int d = 0; d <= 2; ++d) {
        for (const auto& m : monomials_of_degree(2, d)) {
          a.add(g, monomial_poly(m, b.k(static_cast<std::int64_t>(rng() % 3))));
        }
      }
    }
    return a;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_elem(), y = random_elem(), z = random_elem();
    EXPECT_EQ(b.a().multiply(b.a().multiply(x, y), z), b.a().multiply(x, b.a().multiply(y, z)));
    EXPECT_EQ(b.a().multiply(b.a().one(), x), x);
    EXPECT_EQ(b.a().multiply(x, b.a().one()), x);
  }
}

}  // namespace
}  // namespace twistbrack
