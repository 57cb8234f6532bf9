#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "twistbrack/cochain.hpp"
#include "twistbrack/twisted_product.hpp"

namespace twistbrack {

/// Coordinate of a cochain: the coefficient of monomial * group on a generator.
struct CochainCoordinate {
  Generator generator;
  GroupIndex group;
  Monomial monomial;
  auto operator<=>(const CochainCoordinate&) const = default;
};

using CoordinateVector = LinearCombination<CochainCoordinate>;

/// Outcome of solving d*eta = target in one internal degree.
struct CoboundarySolution {
  int degree = 0;
  int internal_degree = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  bool solved = false;
  /// d*witness = target (re-substituted and checked) when solved.
  std::optional<Cochain> witness;
  /// Otherwise a functional vanishing on every coboundary but not on target.
  CoordinateVector certificate;
  bool verified = false;
};

struct ClassComparison {
  bool equal = false;
  /// d*witness = first - second when equal.
  Cochain witness;
  std::vector<CoboundarySolution> components;
};

/// Necessary conditions for a PBW deformation with parameters lambda, kappa.
struct PbwReport {
  bool lambda_is_cocycle = false;
  bool kappa_is_cocycle = false;
  Cochain lambda_lambda;
  Cochain lambda_kappa;
  /// [lambda, lambda] - 2 d*kappa
  Cochain lambda_lambda_minus_2_dkappa;
  ClassComparison lambda_lambda_class;
  ClassComparison lambda_kappa_class;
  ClassComparison lambda_lambda_minus_2_dkappa_class;

  bool necessary_conditions_hold() const {
    return lambda_is_cocycle && kappa_is_cocycle && lambda_lambda_class.equal && lambda_kappa_class.equal;
  }
};

/// Hochschild cochains on X: evaluation, coboundary, circle products,
/// Gerstenhaber brackets, cup products and coboundary solving.
class BracketEngine {
 public:
  explicit BracketEngine(const TwistedProductResolution& resolution);
  ~BracketEngine();
  BracketEngine(const BracketEngine&) = delete;
  BracketEngine& operator=(const BracketEngine&) = delete;

  const TwistedProductResolution& resolution() const noexcept { return *x_; }
  const SkewGroupAlgebra& algebra() const noexcept { return x_->algebra(); }

  /// f extended A-bimodule-linearly; zero off degree f.degree().
  SkewElement evaluate(const Cochain& f, const XTensor& t) const;
  SkewElement evaluate(const Cochain& f, const ChainX& x) const;

  /// (d* f)(e) = f(d e)
  Cochain coboundary(const Cochain& f) const;
  bool is_cocycle(const Cochain& f) const { return coboundary(f).is_zero(); }

  /// f o f2 = f phi (1 (x) f2 (x) 1) Delta^(2)
  Cochain circle(const Cochain& f, const Cochain& f2) const;
  /// [f, f2] = f o f2 - (-1)^{(n-1)(m-1)} f2 o f
  Cochain bracket(const Cochain& f, const Cochain& f2) const;
  /// (f cup f2)(e) = sum (-1)^{nm} f(u) f2(w) over Delta(e) = sum u (x) w
  Cochain cup(const Cochain& f, const Cochain& f2) const;

  /// Coordinates of the cochain space of the given degree and internal degree.
  std::vector<CochainCoordinate> cochain_basis(int degree, int internal_degree) const;
  std::size_t cochain_space_dimension(int degree, int internal_degree) const {
    return cochain_basis(degree, internal_degree).size();
  }
  Cochain cochain_of(const CochainCoordinate& coordinate) const;
  CoordinateVector coordinates(const Cochain& f) const;

  /// Solves d* eta = target with eta of internal degree `internal_degree`;
  /// throws InhomogeneousInput if target has other internal degrees.
  CoboundarySolution solve_coboundary(const Cochain& target, int internal_degree) const;
  /// Checks a failed solution's certificate against target from scratch.
  bool verify_certificate(const CoboundarySolution& solution, const Cochain& target) const;
  /// Class comparison of cochains of equal degree, component by component.
  ClassComparison class_equal(const Cochain& a, const Cochain& b) const;

  PbwReport pbw_check(const Cochain& lambda, const Cochain& kappa) const;

  /// Uniformly random homogeneous cochain.
  Cochain random_cochain(int degree, int internal_degree, std::mt19937_64& rng) const;

 private:
  struct Cache;
  const std::vector<XTriple>& diagonal2_of(const Generator& e) const;

  const TwistedProductResolution* x_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace twistbrack
