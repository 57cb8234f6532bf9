#pragma once

#include <compare>
#include <span>
#include <vector>

#include "twistbrack/bar_resolution.hpp"
#include "twistbrack/koszul_resolution.hpp"

namespace twistbrack {

/// c (x) d in X = C (x)^G D.
struct XTensor {
  BarTensor c;
  KoszulTensor d;

  int degree() const noexcept { return c.degree() + d.degree(); }
  int internal_degree() const { return d.internal_degree(); }

  auto operator<=>(const XTensor&) const = default;
};

using ChainX = LinearCombination<XTensor>;

/// Free A-bimodule generator e = (1 (x) g_1..g_i (x) 1) (x) (1 (x) x_J (x) 1).
struct Generator {
  std::vector<GroupIndex> bar;
  Wedge wedge;

  int degree() const noexcept { return static_cast<int>(bar.size()) + wedge.size(); }

  auto operator<=>(const Generator&) const = default;
};

/// coeff * left * e * right
struct GeneratorTerm {
  SkewElement left;
  Generator generator;
  SkewElement right;
  Fp coeff;
};

/// coeff * left (x)_A right
struct XPair {
  Fp coeff;
  XTensor left;
  XTensor right;
};

/// coeff * first (x)_A second (x)_A third
struct XTriple {
  Fp coeff;
  XTensor first;
  XTensor second;
  XTensor third;
};

/// coeff * c (x) c' (x) d (x) d' in C (x)_kG C (x) D (x)_S D.
struct PreImage {
  Fp coeff;
  BarTensor c;
  BarTensor c2;
  KoszulTensor d;
  KoszulTensor d2;
};

/// Basis element s*g of A, s a monomial.
struct AlgebraBasis {
  GroupIndex group;
  Monomial monomial;
  auto operator<=>(const AlgebraBasis&) const = default;
};

/// Unique normal form a_0 e_1 a_1 ... e_r a_r of a pure tensor in
/// X (x)_A ... (x)_A X, with a_k basis elements of A.
struct NormalKey {
  std::vector<AlgebraBasis> coefficients;
  std::vector<Generator> generators;
  auto operator<=>(const NormalKey&) const = default;
};

using NormalForm = LinearCombination<NormalKey>;

/// The twisted product resolution of A = S(V) x| G.
class TwistedProductResolution {
 public:
  TwistedProductResolution(const SkewGroupAlgebra& algebra, const BarResolution& bar,
                           const KoszulResolution& koszul);

  const SkewGroupAlgebra& algebra() const noexcept { return *algebra_; }
  const BarResolution& bar() const noexcept { return *bar_; }
  const KoszulResolution& koszul() const noexcept { return *koszul_; }
  const PrimeField& field() const noexcept { return algebra_->field(); }

  XTensor tensor_of(const Generator& e) const;
  ChainX chain_of(const Generator& e) const;
  /// All free generators of X_n, sorted.
  std::vector<Generator> generators(int degree) const;
  bool vanishes(const XTensor& t) const { return bar_->vanishes(t.c); }

  /// Total differential d_C (x) 1 + (-1)^i 1 (x) d_D; throws DegreeTooLow in degree 0.
  ChainX differential(const XTensor& t) const;
  ChainX differential(const ChainX& x) const;
  /// Differential that is zero on degree 0.
  ChainX boundary(const XTensor& t) const;
  ChainX boundary(const ChainX& x) const;

  /// left * t * right for the twisted bimodule structure.
  ChainX act(const SkewElement& left, const XTensor& t, const SkewElement& right) const;
  ChainX act(const SkewElement& left, const ChainX& x, const SkewElement& right) const;

  /// Writes t as a combination of left * e * right over free generators e.
  std::vector<GeneratorTerm> decompose(const XTensor& t) const;

  /// Augmentation of X; throws WrongDegree off degree 0.
  SkewElement augmentation(const ChainX& x) const;
  SkewElement augmentation(const XTensor& t) const;

  /// tau(c (x) d) = (-1)^{ij} (grade(c) . d) (x) c; returns the D-part with sign folded in.
  ChainD tau(const BarTensor& c, const KoszulTensor& d) const;
  /// Pre-images of u (x)_A w under 1 (x) tau (x) 1.
  std::vector<PreImage> tau_inverse(const XTensor& u, const XTensor& w) const;
  /// (1 (x) tau (x) 1) applied to a pre-image tensor.
  std::vector<XPair> twist(const PreImage& pre) const;

  std::vector<XPair> diagonal(const XTensor& t) const;
  /// (Delta (x) 1) Delta
  std::vector<XTriple> diagonal2(const XTensor& t) const;
  /// (1 (x) Delta) Delta
  std::vector<XTriple> diagonal2_right(const XTensor& t) const;

  /// phi_X on u (x)_A w.
  ChainX homotopy(const XPair& pair) const;
  ChainX homotopy(std::span<const XPair> pairs) const;

  /// d(u (x) w) = du (x) w + (-1)^{|u|} u (x) dw
  std::vector<XPair> pair_boundary(const XPair& pair) const;
  /// (mu (x) 1) and (1 (x) mu) on u (x)_A w.
  ChainX augment_left(const XPair& pair) const;
  ChainX augment_right(const XPair& pair) const;
  /// (mu_C (x) 1 (x) mu_D (x) 1 - 1 (x) mu_C (x) 1 (x) mu_D) on a pre-image tensor.
  ChainX interpolated_augmentation(const PreImage& pre) const;

  NormalForm normal_form(std::span<const XTensor> factors, Fp coeff) const;
  NormalForm normal_form(std::span<const XPair> pairs) const;
  NormalForm normal_form(std::span<const XTriple> triples) const;
  NormalForm normal_form(const ChainX& x) const;

 private:
  ChainX combine(const ChainC& c, const ChainD& d) const;

  const SkewGroupAlgebra* algebra_;
  const BarResolution* bar_;
  const KoszulResolution* koszul_;
};

}  // namespace twistbrack
