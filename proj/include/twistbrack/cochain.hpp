#pragma once

#include <map>
#include <optional>
#include <set>

#include "twistbrack/twisted_product.hpp"

namespace twistbrack {

/// A-bimodule map X_n -> A, stored by its values on free generators.
class Cochain {
 public:
  using container = std::map<Generator, SkewElement>;

  explicit Cochain(int degree = 0) : degree_(degree) {}

  int degree() const noexcept { return degree_; }

  /// Replaces the value on e; throws WrongDegree if e lies in another degree.
  void set(const Generator& e, SkewElement value);
  void add(const Generator& e, const SkewElement& value, Fp scale);
  SkewElement value(const Generator& e) const;

  bool is_zero() const noexcept { return values_.empty(); }
  std::size_t size() const noexcept { return values_.size(); }
  container::const_iterator begin() const noexcept { return values_.begin(); }
  container::const_iterator end() const noexcept { return values_.end(); }

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  Cochain scaled(Fp c) const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  void check_degree(const Generator& e) const;

  int degree_;
  container values_;
};

/// Internal degrees occurring in f: a term s*g on a generator with |wedge| = j
/// has internal degree deg(s) - j.
std::set<int> internal_degrees(const Cochain& f);
/// The internal degree of f if it is nonzero and homogeneous.
std::optional<int> internal_degree(const Cochain& f);
Cochain homogeneous_component(const Cochain& f, int internal_degree);

}  // namespace twistbrack
