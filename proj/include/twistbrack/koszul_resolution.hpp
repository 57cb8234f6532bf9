#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "twistbrack/bar_resolution.hpp"
#include "twistbrack/linear_combination.hpp"
#include "twistbrack/skew_algebra.hpp"

namespace twistbrack {

/// x^a (x) x_I (x) x^b in the Koszul resolution of S(V).
struct KoszulTensor {
  Monomial left;
  Wedge wedge;
  Monomial right;

  int degree() const noexcept { return wedge.size(); }
  int internal_degree() const { return left.degree() + wedge.size() + right.degree(); }

  auto operator<=>(const KoszulTensor&) const = default;
};

using ChainD = LinearCombination<KoszulTensor>;

/// Koszul resolution D of S(V) with its diagonal, diagonal G-action, the
/// tensor-product contraction h and a homotopy phi_D built by lifting through h.
class KoszulResolution {
 public:
  /// `contraction_order` lists variable indices in the order h processes them;
  /// empty means 0, 1, ..., n-1.
  explicit KoszulResolution(const SkewGroupAlgebra& algebra, std::vector<int> contraction_order = {});
  ~KoszulResolution();
  KoszulResolution(const KoszulResolution&) = delete;
  KoszulResolution& operator=(const KoszulResolution&) = delete;

  static std::vector<int> natural_order(int num_variables);
  static std::vector<int> reversed_order(int num_variables);

  const SkewGroupAlgebra& algebra() const noexcept { return *algebra_; }
  const PrimeField& field() const noexcept { return algebra_->field(); }
  int num_variables() const noexcept { return algebra_->num_variables(); }
  const std::vector<int>& contraction_order() const noexcept { return order_; }

  /// 1 (x) x_I (x) 1
  KoszulTensor generator(Wedge wedge) const { return {Monomial(), wedge, Monomial()}; }

  /// Koszul differential; throws DegreeTooLow in degree 0.
  ChainD differential(const KoszulTensor& t) const;
  ChainD differential(const ChainD& d) const;
  /// Differential that is zero on degree 0 (the unaugmented complex).
  ChainD boundary(const KoszulTensor& t) const;
  ChainD boundary(const ChainD& d) const;

  /// x^a (x) x^b -> x^{a+b}; throws WrongDegree off degree 0.
  Poly augmentation(const ChainD& d) const;
  Monomial augmentation(const KoszulTensor& t) const;

  /// sum_{S subset I} sgn(S, I\S) (x^a (x) x_S (x) 1) (x)_S (1 (x) x_{I\S} (x) x^b)
  std::vector<SignedPair<KoszulTensor>> diagonal(const KoszulTensor& t) const;

  /// Diagonal action of g on all three tensor factors.
  ChainD act(GroupIndex g, const KoszulTensor& t) const;
  ChainD act(GroupIndex g, const ChainD& d) const;

  /// left * d * right for polynomials acting on the outer factors.
  ChainD multiply(const Poly& left, const ChainD& d, const Poly& right) const;
  ChainD multiply(const Monomial& left, const KoszulTensor& t, const Monomial& right) const;

  /// k-linear contracting homotopy of the augmented complex:
  /// dh + hd = id - unit * aug.
  ChainD contraction(const KoszulTensor& t) const;
  ChainD contraction(const ChainD& d) const;
  /// h_{-1}(s) = 1 (x) s
  ChainD contraction(const Poly& s) const;

  /// phi_D on left (x)_S right, of degree +1, satisfying
  /// d phi + phi d = mu (x) 1 - 1 (x) mu.
  ChainD homotopy(const KoszulTensor& left, const KoszulTensor& right) const;

 private:
  struct PairGenerator {
    Wedge left;
    Monomial middle;
    Wedge right;
    auto operator<=>(const PairGenerator&) const = default;
  };

  const ChainD& homotopy_on_generator(const PairGenerator& e) const;

  const SkewGroupAlgebra* algebra_;
  std::vector<int> order_;
  mutable std::recursive_mutex memo_mutex_;
  mutable std::map<PairGenerator, std::unique_ptr<ChainD>> memo_;
};

}  // namespace twistbrack
