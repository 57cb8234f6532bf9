#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "twistbrack/linear_combination.hpp"

namespace twistbrack {

/// Incremental echelon basis of a span of sparse vectors over F_p, indexed by
/// ordered keys. Each basis vector is tagged with the combination of inserted
/// columns producing it, so membership queries return explicit solutions.
/// Pivots are the smallest key of each basis vector, which fixes all choices.
template <class Key>
class SparseEchelon {
 public:
  using Vector = LinearCombination<Key>;
  using Combination = LinearCombination<std::size_t>;

  explicit SparseEchelon(bool track_combinations = true) : track_(track_combinations) {}

  /// Adds column `index`; returns true if it enlarged the span.
  bool insert(Vector v, std::size_t index) {
    if (v.is_zero()) return false;
    Combination combo;
    if (track_) combo.add(index, one_of(v));
    reduce_leading(v, combo);
    if (v.is_zero()) return false;
    const Key pivot = v.begin()->first;
    const Fp scale = v.begin()->second.inverse();
    basis_.emplace(pivot, Entry{v.scaled(scale), combo.scaled(scale)});
    return true;
  }

  std::size_t rank() const noexcept { return basis_.size(); }

  struct Reduction {
    Vector residual;
    /// target - sum_k combination[k] * column_k = residual
    Combination combination;
  };

  /// Reduces target against the span, eliminating every pivot key.
  Reduction reduce(const Vector& target) const {
    Reduction r{target, {}};
    // A basis vector only has keys >= its pivot, so one increasing pass clears
    // every pivot key.
    for (const auto& [pivot, entry] : basis_) {
      auto c = r.residual.coefficient(pivot);
      if (!c) continue;
      r.residual.add(entry.vector, -*c);
      if (track_) r.combination.add(entry.combination, *c);
    }
    return r;
  }

  /// For a reduced nonzero residual, a functional y (over keys) that vanishes
  /// on every inserted column but not on the residual.
  Vector separating_functional(const Vector& residual) const {
    Vector y;
    if (residual.is_zero()) return y;
    const Key q = residual.begin()->first;
    y.add(q, one_of(residual));
    for (const auto& [pivot, v] : reduced_basis()) {
      if (auto c = v.coefficient(q)) y.add(pivot, -*c);
    }
    return y;
  }

 private:
  struct Entry {
    Vector vector;
    Combination combination;
  };

  static Fp one_of(const Vector& v) { return v.begin()->second / v.begin()->second; }

  void reduce_leading(Vector& v, Combination& combo) const {
    while (!v.is_zero()) {
      auto it = basis_.find(v.begin()->first);
      if (it == basis_.end()) return;
      const Fp c = v.begin()->second;
      v.add(it->second.vector, -c);
      if (track_) combo.add(it->second.combination, -c);
    }
  }

  /// Basis with every pivot key cleared from all other basis vectors.
  std::map<Key, Vector> reduced_basis() const {
    std::map<Key, Vector> out;
    for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) {
      Vector v = it->second.vector;
      for (const auto& [pivot, w] : out) {
        if (auto c = v.coefficient(pivot)) v.add(w, -*c);
      }
      out.emplace(it->first, std::move(v));
    }
    return out;
  }

  bool track_;
  std::map<Key, Entry> basis_;
};

}  // namespace twistbrack
