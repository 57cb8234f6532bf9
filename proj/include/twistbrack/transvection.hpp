#pragma once

#include <memory>

#include "twistbrack/cochain.hpp"
#include "twistbrack/context.hpp"

namespace twistbrack {

/// G = <g> of order p acting on V = span(v, w) by the transvection
/// g v = v, g w = v + w, with the cochains
///   lambda(g^i, w) = i g^{i-1}, lambda(g^i, v) = 0   (degree 2, on C_1 (x) D_1)
///   kappa(v ^ w) = g                                  (degree 2, on C_0 (x) D_2)
///   delta(v) = v, delta(w) = 0                        (degree 1, on C_0 (x) D_1)
struct TransvectionExample {
  std::unique_ptr<Context> context;
  Cochain lambda{2};
  Cochain kappa{2};
  Cochain delta{1};
};

SkewGroupAlgebra transvection_algebra(std::int64_t p);
TransvectionExample make_transvection_example(std::int64_t p, std::vector<int> contraction_order = {});
/// Builds the three cochains on an existing context over the transvection algebra.
TransvectionExample transvection_cochains(std::unique_ptr<Context> context);

}  // namespace twistbrack
