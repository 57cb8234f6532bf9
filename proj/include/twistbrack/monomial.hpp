#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace twistbrack {

inline constexpr int kMaxVariables = 8;

/// Exponent vector x^a in at most kMaxVariables variables.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int index);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial from_exponents(std::initializer_list<int> exponents) {
    return from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
  }

  int exponent(int index) const { return exps_[static_cast<std::size_t>(index)]; }
  void set_exponent(int index, int value);
  int degree() const;
  bool is_one() const { return degree() == 0; }
  std::vector<int> exponents(int num_variables) const;

  Monomial operator*(const Monomial& rhs) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
};

/// Basis wedge x_{i_1} ^ ... ^ x_{i_j} with i_1 < ... < i_j, stored as a bitmask.
class Wedge {
 public:
  Wedge() = default;
  static Wedge from_bits(std::uint32_t bits) { return Wedge(bits); }
  static Wedge of(std::initializer_list<int> indices);
  static Wedge of(std::span<const int> indices);

  std::uint32_t bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int index) const noexcept { return (bits_ >> index) & 1u; }
  /// Number of members strictly below `index`.
  int count_below(int index) const noexcept { return std::popcount(bits_ & ((1u << index) - 1u)); }
  Wedge with(int index) const { return Wedge(bits_ | (1u << index)); }
  Wedge without(int index) const { return Wedge(bits_ & ~(1u << index)); }
  std::vector<int> indices() const;

  auto operator<=>(const Wedge&) const = default;

 private:
  explicit Wedge(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// Sign of the shuffle taking (left, right) to increasing order, i.e.
/// x_left ^ x_right = shuffle_sign(left, right) * x_{left u right}.
/// Zero when the sets intersect.
int shuffle_sign(Wedge left, Wedge right);

/// All wedges of the given size over num_variables variables, in increasing
/// lexicographic order of their index lists.
std::vector<Wedge> wedges_of_size(int num_variables, int size);

/// All monomials of the given total degree, sorted.
std::vector<Monomial> monomials_of_degree(int num_variables, int degree);

}  // namespace twistbrack
