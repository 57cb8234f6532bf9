#include "twistbrack/context.hpp"

namespace twistbrack {

Context::Context(SkewGroupAlgebra algebra, std::vector<int> contraction_order)
    : algebra_(std::move(algebra)),
      bar_(algebra_),
      koszul_(algebra_, std::move(contraction_order)),
      x_(algebra_, bar_, koszul_),
      engine_(x_) {}

std::unique_ptr<Context> Context::with_contraction_order(std::vector<int> order) const {
  SkewGroupAlgebra copy(algebra_.field(), algebra_.num_variables(), algebra_.group(), algebra_.variable_names());
  return std::make_unique<Context>(std::move(copy), std::move(order));
}

}  // namespace twistbrack
