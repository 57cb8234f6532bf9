#pragma once

#include <compare>
#include <span>
#include <vector>

#include "twistbrack/linear_combination.hpp"
#include "twistbrack/skew_algebra.hpp"

namespace twistbrack {

/// g_0 (x) g_1 (x) ... (x) g_i (x) g_{i+1} in the reduced bar resolution of kG.
/// Any tensor with the identity in a middle slot is zero.
struct BarTensor {
  std::vector<GroupIndex> entries;

  int degree() const noexcept { return static_cast<int>(entries.size()) - 2; }
  std::span<const GroupIndex> middle() const { return std::span(entries).subspan(1, entries.size() - 2); }

  auto operator<=>(const BarTensor&) const = default;
};

using ChainC = LinearCombination<BarTensor>;

/// One summand of a diagonal, left (x) right, with a sign.
template <class T>
struct SignedPair {
  int sign;
  T left;
  T right;
};

/// Reduced bar resolution C of kG with its G-grading, diagonal and the
/// standard contracting homotopy.
class BarResolution {
 public:
  explicit BarResolution(const SkewGroupAlgebra& algebra) : algebra_(&algebra) {}

  const FiniteMatrixGroup& group() const noexcept { return algebra_->group(); }
  const PrimeField& field() const noexcept { return algebra_->field(); }

  /// 1 (x) g_1 (x) ... (x) g_i (x) 1
  BarTensor generator(std::span<const GroupIndex> middle) const;
  /// True when a middle slot holds the identity (the tensor is zero).
  bool vanishes(const BarTensor& t) const;

  /// Product of all entries; the G-degree of t.
  GroupIndex grade(const BarTensor& t) const;
  /// left * t * right, multiplying into the outer slots.
  BarTensor translate(GroupIndex left, const BarTensor& t, GroupIndex right) const;

  /// Bar differential; throws DegreeTooLow in degree 0.
  ChainC differential(const BarTensor& t) const;
  ChainC differential(const ChainC& c) const;
  /// Differential that is zero on degree 0 (the unaugmented complex).
  ChainC boundary(const BarTensor& t) const;

  /// g_0 (x) g_1 -> g_0 g_1; throws WrongDegree off degree 0.
  SkewElement augmentation(const ChainC& c) const;
  GroupIndex augmentation(const BarTensor& t) const;

  /// sum_j (g_0 ... g_j (x) 1) (x)_kG (1 (x) g_{j+1} ... g_{i+1})
  std::vector<SignedPair<BarTensor>> diagonal(const BarTensor& t) const;

  /// (a_0..a_p) (x) (a'_p a_{p+1} .. a_{n+1}) ->
  /// (-1)^{p-1} a_0 .. a_{p-1} (a_p a'_p) a_{p+1} .. a_{n+1}
  ChainC homotopy(const BarTensor& left, const BarTensor& right) const;

 private:
  const SkewGroupAlgebra* algebra_;
};

}  // namespace twistbrack
