#pragma once

#include <memory>
#include <vector>

#include "twistbrack/bar_resolution.hpp"
#include "twistbrack/bracket_engine.hpp"
#include "twistbrack/koszul_resolution.hpp"
#include "twistbrack/skew_algebra.hpp"
#include "twistbrack/twisted_product.hpp"

namespace twistbrack {

/// Owns A = S(V) x| G together with C, D, X and a bracket engine on X.
/// Components refer to each other, so a Context is pinned in memory.
class Context {
 public:
  explicit Context(SkewGroupAlgebra algebra, std::vector<int> contraction_order = {});
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const SkewGroupAlgebra& algebra() const noexcept { return algebra_; }
  const PrimeField& field() const noexcept { return algebra_.field(); }
  const BarResolution& bar() const noexcept { return bar_; }
  const KoszulResolution& koszul() const noexcept { return koszul_; }
  const TwistedProductResolution& resolution() const noexcept { return x_; }
  const BracketEngine& engine() const noexcept { return engine_; }

  /// Same algebra, with the Koszul contraction run in another variable order.
  std::unique_ptr<Context> with_contraction_order(std::vector<int> order) const;

 private:
  SkewGroupAlgebra algebra_;
  BarResolution bar_;
  KoszulResolution koszul_;
  TwistedProductResolution x_;
  BracketEngine engine_;
};

}  // namespace twistbrack
