#include <gtest/gtest.h>

#include "support.hpp"
#include "twistbrack/checks.hpp"
#include "twistbrack/error.hpp"

namespace twistbrack {
namespace {

using testing::Builder;

class TwistedProduct : public ::testing::TestWithParam<std::int64_t> {
 protected:
  TransvectionExample ex = make_transvection_example(GetParam());
  const Context& ctx = *ex.context;
  Builder b{ctx};
  const TwistedProductResolution& x = ctx.resolution();

  // Common factors: U = (1 (x) 1) (x) (1 (x) 1), V = (1 (x) 1) (x) (1 (x) v (x) 1), ...
  XTensor U() const { return b.xgen({}, {}); }
  XTensor V() const { return b.xgen({}, {0}); }
  XTensor W() const { return b.xgen({}, {1}); }
  XTensor VW() const { return b.xgen({}, {0, 1}); }

  ChainX chain(std::initializer_list<std::pair<XTensor, std::int64_t>> terms) const {
    ChainX out;
    for (const auto& [t, k] : terms) out.add(t, b.k(k));
    return out;
  }
  XPair pair(std::int64_t c, XTensor l, XTensor r) const { return XPair{b.k(c), std::move(l), std::move(r)}; }
  XTriple triple(std::int64_t c, XTensor f, XTensor s, XTensor t) const {
    return XTriple{b.k(c), std::move(f), std::move(s), std::move(t)};
  }
};

TEST_P(TwistedProduct, Differential) {
  const GroupIndex g = b.g(), e = b.e();
  const Monomial v = Monomial::variable(0), one;
  EXPECT_EQ(x.differential(V()), chain({{b.xt(b.bar({e, e}), {v, {}, one}), 1}, {b.xt(b.bar({e, e}), {one, {}, v}), -1}}));
  EXPECT_EQ(x.differential(b.xgen({g}, {})), chain({{b.xt(b.bar({g, e}), {}), 1}, {b.xt(b.bar({e, g}), {}), -1}}));
  EXPECT_EQ(x.differential(b.xgen({g}, {0})), chain({{b.xt(b.bar({g, e}), b.kos({0})), 1},
                                                    {b.xt(b.bar({e, g}), b.kos({0})), -1},
                                                    {b.xt(b.bar({e, g, e}), {v, {}, one}), -1},
                                                    {b.xt(b.bar({e, g, e}), {one, {}, v}), 1}}));
  EXPECT_THROW(x.differential(U()), Error);
}

TEST_P(TwistedProduct, BimoduleAction) {
  const GroupIndex g = b.g(), e = b.e();
  const Monomial v = Monomial::variable(0), w = Monomial::variable(1), one;
  EXPECT_EQ(x.act(b.elem(b.x(1), e), U(), b.a().one()), chain({{b.xt(b.bar({e, e}), {w, {}, one}), 1}}));
  EXPECT_EQ(x.act(b.group_elem(g), U(), b.a().one()), chain({{b.xt(b.bar({g, e}), {}), 1}}));
  const GroupIndex ginv = b.a().group().inverse(g);
  EXPECT_EQ(x.act(b.elem(b.x(0), e), b.xgen({g}, {}), b.group_elem(ginv)),
            chain({{b.xt(b.bar({e, g, ginv}), {v, {}, one}), 1}}));
}

TEST_P(TwistedProduct, Decompose) {
  const GroupIndex g = b.g(), e = b.e();
  const Monomial v = Monomial::variable(0), w = Monomial::variable(1), one;

  auto self = x.decompose(b.xgen({g}, {0, 1}));
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].generator, b.gen({g}, {0, 1}));
  EXPECT_EQ(self[0].left, b.a().one());
  EXPECT_EQ(self[0].right, b.a().one());
  EXPECT_EQ(self[0].coeff, b.k(1));

  auto moved = x.decompose(b.xt(b.bar({g, e}), {}));
  ASSERT_EQ(moved.size(), 1u);
  EXPECT_EQ(moved[0].left, b.group_elem(g));
  EXPECT_EQ(moved[0].generator, b.gen({}, {}));
  EXPECT_EQ(moved[0].right, b.a().one());

  auto absorbed = x.decompose(b.xt(b.bar({e, e}), {one, Wedge::of({1}), v}));
  ASSERT_EQ(absorbed.size(), 1u);
  EXPECT_EQ(absorbed[0].left, b.a().one());
  EXPECT_EQ(absorbed[0].generator, b.gen({}, {1}));
  EXPECT_EQ(absorbed[0].right, b.elem(b.x(0), e));
  (void)w;
}

TEST_P(TwistedProduct, Tau) {
  const GroupIndex e = b.e();
  const auto p = static_cast<std::int64_t>(GetParam());
  for (std::int64_t i = 1; i < p; ++i) {
    ChainD expected;
    expected.add(b.kos({0}), b.k(-i));
    expected.add(b.kos({1}), b.k(-1));
    EXPECT_EQ(x.tau(b.bar_gen({b.g(i)}), b.kos({1})), expected) << "i=" << i;
  }
  EXPECT_EQ(x.tau(b.bar({e, e}), b.kos({1}, Monomial::variable(0))), ChainD(b.kos({1}, Monomial::variable(0)), b.k(1)));
  EXPECT_EQ(x.tau(b.bar_gen({b.g()}), b.kos({0, 1})), ChainD(b.kos({0, 1}), b.k(1)));
}

TEST_P(TwistedProduct, TauInverse) {
  const GroupIndex e = b.e(), g = b.g();
  auto plain = x.tau_inverse(V(), W());
  ASSERT_EQ(plain.size(), 1u);
  EXPECT_EQ(plain[0].coeff, b.k(1));
  EXPECT_EQ(plain[0].c, b.bar({e, e}));
  EXPECT_EQ(plain[0].c2, b.bar({e, e}));
  EXPECT_EQ(plain[0].d, b.kos({0}));
  EXPECT_EQ(plain[0].d2, b.kos({1}));

  // -(1 (x) 1, 1 (x) g (x) 1, 1 (x) g^{-1}w (x) 1, 1 (x) 1) with g^{-1} w = w - v
  auto twisted = x.tau_inverse(W(), b.xgen({g}, {}));
  LinearCombination<KoszulTensor> d;
  for (const auto& pre : twisted) {
    EXPECT_EQ(pre.c, b.bar({e, e}));
    EXPECT_EQ(pre.c2, b.bar_gen({g}));
    EXPECT_EQ(pre.d2, b.kos({}));
    d.add(pre.d, pre.coeff);
  }
  LinearCombination<KoszulTensor> expected;
  expected.add(b.kos({1}), b.k(-1));
  expected.add(b.kos({0}), b.k(1));
  EXPECT_EQ(d, expected);

  auto unit = x.tau_inverse(U(), b.xgen({g}, {0}));
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0].coeff, b.k(1));
  EXPECT_EQ(unit[0].c2, b.bar_gen({g}));
  EXPECT_EQ(unit[0].d2, b.kos({0}));
}

TEST_P(TwistedProduct, DiagonalOfUnit) {
  auto terms = x.diagonal(U());
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].left, U());
  EXPECT_EQ(terms[0].right, U());
  auto triples = x.diagonal2(U());
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0].first, U());
  EXPECT_EQ(triples[0].third, U());
}

TEST_P(TwistedProduct, NineTermTripleDiagonal) {
  const std::vector<XTriple> expected = {
      triple(1, U(), U(), VW()), triple(1, U(), V(), W()),  triple(1, V(), U(), W()),
      triple(-1, U(), W(), V()), triple(-1, W(), U(), V()), triple(1, U(), VW(), U()),
      triple(1, V(), W(), U()),  triple(-1, W(), V(), U()), triple(1, VW(), U(), U()),
  };
  const auto actual = x.diagonal2(VW());
  EXPECT_EQ(x.normal_form(actual), x.normal_form(expected));
  EXPECT_EQ(x.normal_form(x.diagonal2_right(VW())), x.normal_form(expected));
}

TEST_P(TwistedProduct, EightTermDiagonal) {
  const auto p = static_cast<std::int64_t>(GetParam());
  for (std::int64_t i = 1; i < p; ++i) {
    const auto gi = [&](std::initializer_list<int> wedge) { return b.xgen({b.g(i)}, wedge); };
    const std::vector<XPair> expected = {
        pair(1, U(), gi({0, 1})),
        pair(-1, V(), gi({1})),
        pair(i, V(), gi({0})),  // (i v + w) expands into two pure tensors
        pair(1, W(), gi({0})),
        pair(1, VW(), gi({})),
        pair(1, gi({}), VW()),
        pair(1, gi({0}), W()),
        pair(-1, gi({1}), V()),
        pair(1, gi({0, 1}), U()),
    };
    EXPECT_EQ(x.normal_form(x.diagonal(gi({0, 1}))), x.normal_form(expected)) << "i=" << i;
  }
}

TEST_P(TwistedProduct, TripleDiagonalOfDegreeThreeGenerator) {
  // (Delta (x) 1) applied to the eight summands of Delta_X, with 1 (x) (iv+w) (x) 1
  // kept as one tensor: each left factor c (x) d splits into |Delta_C c| * |Delta_D d| terms.
  const XTensor t = b.xgen({b.g()}, {0, 1});
  const std::vector<XTensor> left_factors = {U(), V(), W(), VW(), b.xgen({b.g()}, {}), b.xgen({b.g()}, {0}),
                                             b.xgen({b.g()}, {1}), t};
  std::size_t summands = 0;
  for (const auto& f : left_factors) summands += ctx.bar().diagonal(f.c).size() * ctx.koszul().diagonal(f.d).size();
  EXPECT_EQ(summands, 27u);
  EXPECT_EQ(x.normal_form(x.diagonal2(t)), x.normal_form(x.diagonal2_right(t)));
}

TEST_P(TwistedProduct, Augmentation) {
  const GroupIndex g = b.g(), e = b.e();
  const Monomial v = Monomial::variable(0), w = Monomial::variable(1);
  EXPECT_EQ(x.augmentation(U()), b.a().one());
  EXPECT_EQ(x.augmentation(b.xt(b.bar({g, e}), {})), b.group_elem(g));
  EXPECT_EQ(x.augmentation(b.xt(b.bar({e, e}), {v, {}, w})), b.elem(b.poly({1, 1}), e));
  try {
    x.augmentation(V());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::WrongDegree);
  }
}

TEST_P(TwistedProduct, Homotopy) {
  EXPECT_TRUE(x.homotopy(pair(1, U(), U())).is_zero());
  const Monomial v = Monomial::variable(0), one;
  const XTensor left = b.xt(b.bar({b.e(), b.e()}), {one, {}, v});
  ChainX expected;
  for (const auto& [d, c] : ctx.koszul().homotopy(KoszulTensor{one, {}, v}, b.kos({1}))) {
    expected.add(b.xt(b.bar({b.e(), b.e()}), d), c);
  }
  EXPECT_EQ(x.homotopy(pair(1, left, W())), expected);
}

TEST_P(TwistedProduct, HomotopyIdentityOnSample) {
  const XPair sample = pair(1, b.xgen({b.g()}, {}), V());
  std::vector<XPair> boundary = x.pair_boundary(sample);
  ChainX lhs = x.boundary(x.homotopy(sample));
  lhs += x.homotopy(boundary);
  ChainX rhs = x.augment_left(sample);
  rhs -= x.augment_right(sample);
  EXPECT_EQ(x.normal_form(lhs), x.normal_form(rhs));
}

TEST_P(TwistedProduct, InvariantSuites) {
  const checks::Bounds bounds{2, 2};
  for (const auto& r : {checks::x_differential_squared(ctx, {3, 3}), checks::x_action_associativity(ctx, 20, 3),
                        checks::x_decompose_round_trip(ctx, bounds), checks::x_differential_bimodule(ctx, 20, 3),
                        checks::x_diagonal_counit(ctx, bounds), checks::x_diagonal_coassociativity(ctx, bounds),
                        checks::x_diagonal_chain_map(ctx, bounds), checks::x_homotopy_identity(ctx, bounds),
                        checks::x_augmentation_interpolation(ctx, bounds), checks::x_exactness(ctx, bounds)}) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_GT(r.cases, 0u) << r.name;
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, TwistedProduct, ::testing::Values(2, 3, 5));

}  // namespace
}  // namespace twistbrack
