#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "twistbrack/field.hpp"

namespace twistbrack {

using GroupIndex = std::uint32_t;

/// Square matrix over F_p, row-major.
class Matrix {
 public:
  Matrix(const PrimeField& field, int dimension, std::vector<std::int64_t> row_major);
  static Matrix identity(const PrimeField& field, int dimension);
  static Matrix from_rows(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& rows);

  int dimension() const noexcept { return dim_; }
  std::uint32_t modulus() const noexcept { return p_; }
  Fp at(int row, int col) const { return Fp(p_, entries_[static_cast<std::size_t>(row * dim_ + col)]); }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
  std::vector<std::vector<std::int64_t>> rows() const;

  Matrix operator*(const Matrix& rhs) const;
  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<Matrix> inverse() const;
  bool is_invertible() const { return inverse().has_value(); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Matrix(int dim, std::uint32_t p, std::vector<std::uint32_t> entries)
      : dim_(dim), p_(p), entries_(std::move(entries)) {}

  int dim_;
  std::uint32_t p_;
  std::vector<std::uint32_t> entries_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

/// A finite subgroup of GL_n(F_p), listed breadth-first from the identity.
/// Element 0 is always the identity. Immutable once generated.
class FiniteMatrixGroup {
 public:
  static constexpr std::size_t kDefaultCap = 100000;
  static constexpr std::size_t kTableLimit = 2048;

  static FiniteMatrixGroup generate(const PrimeField& field, int dimension, const std::vector<Matrix>& generators,
                                    std::size_t cap = kDefaultCap);

  std::size_t size() const noexcept { return elements_.size(); }
  int dimension() const noexcept { return dim_; }
  GroupIndex identity() const noexcept { return 0; }
  const Matrix& matrix(GroupIndex g) const { return elements_[g]; }

  GroupIndex multiply(GroupIndex a, GroupIndex b) const;
  GroupIndex inverse(GroupIndex a) const { return inverses_[a]; }
  GroupIndex power(GroupIndex a, std::int64_t k) const;
  std::optional<GroupIndex> find(const Matrix& m) const;

  std::size_t generator_count() const noexcept { return generator_indices_.size(); }
  GroupIndex generator(std::size_t i) const { return generator_indices_.at(i); }
  /// A shortest word in the generators (breadth-first discovery word).
  const std::vector<int>& word(GroupIndex g) const { return words_[g]; }
  GroupIndex evaluate_word(std::span<const int> word) const;

 private:
  FiniteMatrixGroup() = default;

  int dim_ = 0;
  std::vector<Matrix> elements_;
  std::unordered_map<Matrix, GroupIndex, MatrixHash> index_;
  std::vector<GroupIndex> inverses_;
  std::vector<GroupIndex> table_;  // empty when size() > kTableLimit
  std::vector<GroupIndex> generator_indices_;
  std::vector<std::vector<int>> words_;
};

}  // namespace twistbrack
