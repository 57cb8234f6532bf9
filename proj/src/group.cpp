#include "twistbrack/group.hpp"

#include <deque>
#include <string>

#include "twistbrack/error.hpp"

namespace twistbrack {

Matrix::Matrix(const PrimeField& field, int dimension, std::vector<std::int64_t> row_major)
    : dim_(dimension), p_(field.characteristic()) {
  if (dimension < 0 || row_major.size() != static_cast<std::size_t>(dimension * dimension)) {
    throw Error(ErrorCode::ValidationError, "matrix entry count does not match dimension");
  }
  entries_.reserve(row_major.size());
  for (auto v : row_major) entries_.push_back(field(v).value());
}

Matrix Matrix::identity(const PrimeField& field, int dimension) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(dimension * dimension), 0);
  for (int i = 0; i < dimension; ++i) e[static_cast<std::size_t>(i * dimension + i)] = 1;
  return Matrix(field, dimension, std::move(e));
}

Matrix Matrix::from_rows(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<std::int64_t> e;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::ValidationError, "matrix is not square");
    e.insert(e.end(), row.begin(), row.end());
  }
  return Matrix(field, n, std::move(e));
}

std::vector<std::vector<std::int64_t>> Matrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(dim_));
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out[static_cast<std::size_t>(r)].push_back(at(r, c).value());
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  std::vector<std::uint32_t> e(entries_.size(), 0);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      std::uint64_t acc = 0;
      for (int k = 0; k < dim_; ++k) {
        acc = (acc + std::uint64_t{entries_[static_cast<std::size_t>(r * dim_ + k)]} *
                         rhs.entries_[static_cast<std::size_t>(k * dim_ + c)]) %
              p_;
      }
      e[static_cast<std::size_t>(r * dim_ + c)] = static_cast<std::uint32_t>(acc);
    }
  }
  return Matrix(dim_, p_, std::move(e));
}

std::optional<Matrix> Matrix::inverse() const {
  const std::size_t n = static_cast<std::size_t>(dim_);
  std::vector<Fp> a;
  std::vector<Fp> inv;
  for (std::size_t i = 0; i < n * n; ++i) {
    a.emplace_back(p_, entries_[i]);
    inv.emplace_back(p_, (i / n == i % n) ? 1 : 0);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[pivot * n + k], a[col * n + k]);
        std::swap(inv[pivot * n + k], inv[col * n + k]);
      }
    }
    Fp scale = a[col * n + col].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      a[col * n + k] *= scale;
      inv[col * n + k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].is_zero()) continue;
      Fp factor = a[r * n + col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] -= factor * a[col * n + k];
        inv[r * n + k] -= factor * inv[col * n + k];
      }
    }
  }
  std::vector<std::uint32_t> e;
  e.reserve(n * n);
  for (const auto& x : inv) e.push_back(x.value());
  return Matrix(dim_, p_, std::move(e));
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.entries()) h = (h ^ v) * 1099511628211ull;
  return h;
}

FiniteMatrixGroup FiniteMatrixGroup::generate(const PrimeField& field, int dimension,
                                              const std::vector<Matrix>& generators, std::size_t cap) {
  FiniteMatrixGroup group;
  group.dim_ = dimension;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.dimension() != dimension || g.modulus() != field.characteristic()) {
      throw Error(ErrorCode::ValidationError, "generator " + std::to_string(i) + " has the wrong shape or field");
    }
    if (!g.is_invertible()) {
      throw Error(ErrorCode::NonInvertibleGenerator, "generator " + std::to_string(i) + " is singular mod " +
                                                         std::to_string(field.characteristic()));
    }
  }

  auto insert = [&](Matrix m, std::vector<int> word) {
    auto idx = static_cast<GroupIndex>(group.elements_.size());
    group.index_.emplace(m, idx);
    group.elements_.push_back(std::move(m));
    group.words_.push_back(std::move(word));
    if (group.elements_.size() > cap) {
      throw Error(ErrorCode::GroupTooLarge, "group closure exceeds cap " + std::to_string(cap));
    }
    return idx;
  };

  insert(Matrix::identity(field, dimension), {});
  std::deque<GroupIndex> queue{0};
  while (!queue.empty()) {
    GroupIndex current = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Matrix next = group.elements_[current] * generators[i];
      if (group.index_.contains(next)) continue;
      std::vector<int> word = group.words_[current];
      word.push_back(static_cast<int>(i));
      queue.push_back(insert(std::move(next), std::move(word)));
    }
  }
  for (const auto& g : generators) group.generator_indices_.push_back(group.index_.at(g));

  const std::size_t n = group.elements_.size();
  if (n <= kTableLimit) {
    group.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        group.table_[a * n + b] = group.index_.at(group.elements_[a] * group.elements_[b]);
      }
    }
  }
  group.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) group.inverses_[a] = group.index_.at(*group.elements_[a].inverse());
  return group;
}

GroupIndex FiniteMatrixGroup::multiply(GroupIndex a, GroupIndex b) const {
  if (!table_.empty()) return table_[std::size_t{a} * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

GroupIndex FiniteMatrixGroup::power(GroupIndex a, std::int64_t k) const {
  GroupIndex base = k < 0 ? inverse(a) : a;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  GroupIndex result = identity();
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<GroupIndex> FiniteMatrixGroup::find(const Matrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupIndex FiniteMatrixGroup::evaluate_word(std::span<const int> word) const {
  GroupIndex g = identity();
  for (int letter : word) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= generator_indices_.size()) {
      throw Error(ErrorCode::ValidationError, "group word refers to unknown generator " + std::to_string(letter));
    }
    g = multiply(g, generator_indices_[static_cast<std::size_t>(letter)]);
  }
  return g;
}

}  // namespace twistbrack
