#include "twistbrack/transvection.hpp"

namespace twistbrack {

SkewGroupAlgebra transvection_algebra(std::int64_t p) {
  PrimeField field(p);
  auto group = FiniteMatrixGroup::generate(field, 2, {Matrix::from_rows(field, {{1, 1}, {0, 1}})});
  return SkewGroupAlgebra(field, 2, std::move(group), {"v", "w"});
}

TransvectionExample transvection_cochains(std::unique_ptr<Context> context) {
  TransvectionExample ex;
  const PrimeField& field = context->field();
  const FiniteMatrixGroup& group = context->algebra().group();
  const GroupIndex g = group.generator(0);
  const Wedge v = Wedge::of({0});
  const Wedge w = Wedge::of({1});
  const Poly one = constant_poly(field.one());

  for (std::int64_t i = 1; i < static_cast<std::int64_t>(group.size()); ++i) {
    ex.lambda.set(Generator{{group.power(g, i)}, w}, SkewElement(group.power(g, i - 1), one.scaled(field(i))));
  }
  ex.kappa.set(Generator{{}, v.with(1)}, SkewElement(g, one));
  ex.delta.set(Generator{{}, v}, SkewElement(group.identity(), variable_poly(0, field.one())));
  ex.context = std::move(context);
  return ex;
}

TransvectionExample make_transvection_example(std::int64_t p, std::vector<int> contraction_order) {
  return transvection_cochains(std::make_unique<Context>(transvection_algebra(p), std::move(contraction_order)));
}

}  // namespace twistbrack
