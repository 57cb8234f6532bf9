#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "twistbrack/field.hpp"

namespace twistbrack {

/// Finite F_p-linear combination of basis keys. Zero coefficients are never
/// stored, so the zero element is the empty map and equality is structural.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using container = std::map<Key, Fp>;
  using const_iterator = typename container::const_iterator;

  LinearCombination() = default;
  LinearCombination(const Key& key, Fp coefficient) { add(key, coefficient); }

  void add(const Key& key, Fp coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, Fp scale) {
    if (scale.is_zero()) return;
    for (const auto& [key, c] : other.terms_) add(key, c * scale);
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, c] : other.terms_) add(key, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, c] : other.terms_) add(key, -c);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }

  LinearCombination scaled(Fp scale) const {
    LinearCombination out;
    if (scale.is_zero()) return out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * scale);
    return out;
  }

  std::optional<Fp> coefficient(const Key& key) const {
    auto it = terms_.find(key);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const container& terms() const noexcept { return terms_; }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  container terms_;
};

}  // namespace twistbrack
