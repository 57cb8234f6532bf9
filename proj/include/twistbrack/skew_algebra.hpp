#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twistbrack/field.hpp"
#include "twistbrack/group.hpp"
#include "twistbrack/poly.hpp"

namespace twistbrack {

/// Element sum_g s_g g of A = S(V) x| G, stored as group index -> nonzero poly.
class SkewElement {
 public:
  using container = std::map<GroupIndex, Poly>;

  SkewElement() = default;
  SkewElement(GroupIndex g, Poly s) { add(g, s); }

  void add(GroupIndex g, const Poly& s);
  void add(const SkewElement& other, Fp scale);
  SkewElement& operator+=(const SkewElement& other);
  SkewElement& operator-=(const SkewElement& other);
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  SkewElement scaled(Fp c) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  const Poly* component(GroupIndex g) const;
  container::const_iterator begin() const noexcept { return terms_.begin(); }
  container::const_iterator end() const noexcept { return terms_.end(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const SkewElement&, const SkewElement&) = default;

 private:
  container terms_;
};

/// The skew group algebra A = S(V) x| G over F_p, with G acting on V by
/// column-vector matrices: g sends x_i to sum_j M_ji x_j.
class SkewGroupAlgebra {
 public:
  SkewGroupAlgebra(PrimeField field, int num_variables, FiniteMatrixGroup group,
                   std::vector<std::string> variable_names = {});
  ~SkewGroupAlgebra();
  SkewGroupAlgebra(SkewGroupAlgebra&&) noexcept;
  SkewGroupAlgebra& operator=(SkewGroupAlgebra&&) noexcept;

  const PrimeField& field() const noexcept { return field_; }
  int num_variables() const noexcept { return num_variables_; }
  const FiniteMatrixGroup& group() const noexcept { return group_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  Fp scalar(std::int64_t v) const { return field_(v); }

  /// g acting on a polynomial (degree-preserving algebra automorphism).
  Poly act(GroupIndex g, const Poly& s) const;
  Poly act(GroupIndex g, const Monomial& m) const;
  /// Exterior power Lambda^j(g) applied to a basis wedge.
  LinearCombination<Wedge> act(GroupIndex g, Wedge w) const;

  SkewElement multiply(const SkewElement& a, const SkewElement& b) const;
  SkewElement one() const { return SkewElement(group_.identity(), constant_poly(field_.one())); }
  SkewElement element(const Poly& s, GroupIndex g) const { return SkewElement(g, s); }
  SkewElement group_element(GroupIndex g) const { return SkewElement(g, constant_poly(field_.one())); }

  std::string to_string(const Poly& s) const { return twistbrack::to_string(s, names_); }
  std::string to_string(const SkewElement& a) const;
  std::string group_word_string(GroupIndex g) const;

 private:
  struct Cache;

  PrimeField field_;
  int num_variables_;
  FiniteMatrixGroup group_;
  std::vector<std::string> names_;
  std::vector<std::vector<Poly>> variable_images_;  // [g][i] = image of x_i
  std::unique_ptr<Cache> cache_;
};

}  // namespace twistbrack
