#include "twistbrack/bracket_engine.hpp"

#include "twistbrack/error.hpp"
#include "twistbrack/gfp_linear.hpp"

namespace twistbrack {

namespace {

Fp dot(const CoordinateVector& y, const CoordinateVector& v, Fp zero) {
  Fp total = zero;
  for (const auto& [key, c] : y) {
    if (auto d = v.coefficient(key)) total += c * *d;
  }
  return total;
}

}  // namespace

struct BracketEngine::Cache {
  std::mutex mutex;
  std::map<Generator, std::unique_ptr<std::vector<XTriple>>> diagonal2;
};

BracketEngine::BracketEngine(const TwistedProductResolution& resolution)
    : x_(&resolution), cache_(std::make_unique<Cache>()) {}

BracketEngine::~BracketEngine() = default;

const std::vector<XTriple>& BracketEngine::diagonal2_of(const Generator& e) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->diagonal2[e];
  if (!slot) slot = std::make_unique<std::vector<XTriple>>(x_->diagonal2(x_->tensor_of(e)));
  return *slot;
}

SkewElement BracketEngine::evaluate(const Cochain& f, const XTensor& t) const {
  SkewElement out;
  if (t.degree() != f.degree()) return out;
  const SkewGroupAlgebra& a = algebra();
  for (const GeneratorTerm& term : x_->decompose(t)) {
    const SkewElement value = f.value(term.generator);
    if (value.is_zero()) continue;
    out.add(a.multiply(a.multiply(term.left, value), term.right), term.coeff);
  }
  return out;
}

SkewElement BracketEngine::evaluate(const Cochain& f, const ChainX& x) const {
  SkewElement out;
  for (const auto& [t, c] : x) out.add(evaluate(f, t), c);
  return out;
}

Cochain BracketEngine::coboundary(const Cochain& f) const {
  Cochain out(f.degree() + 1);
  for (const Generator& e : x_->generators(f.degree() + 1)) {
    out.set(e, evaluate(f, x_->boundary(x_->tensor_of(e))));
  }
  return out;
}

Cochain BracketEngine::circle(const Cochain& f, const Cochain& f2) const {
  const int n = f.degree();
  const int m = f2.degree();
  if (n + m < 1) throw Error(ErrorCode::DegreeTooLow, "circle product needs n + m >= 1");
  Cochain out(n + m - 1);
  if (f.is_zero() || f2.is_zero()) return out;
  const PrimeField& field = x_->field();
  const SkewElement one = algebra().one();
  for (const Generator& e : x_->generators(n + m - 1)) {
    std::vector<XPair> pairs;
    for (const XTriple& triple : diagonal2_of(e)) {
      if (triple.second.degree() != m) continue;
      const SkewElement value = evaluate(f2, triple.second);
      if (value.is_zero()) continue;
      const Fp coeff = triple.coeff * field.sign(triple.first.degree() * m);
      for (const auto& [t, k] : x_->act(value, triple.third, one)) pairs.push_back({coeff * k, triple.first, t});
    }
    if (pairs.empty()) continue;
    out.set(e, evaluate(f, x_->homotopy(pairs)));
  }
  return out;
}

Cochain BracketEngine::bracket(const Cochain& f, const Cochain& f2) const {
  const int n = f.degree();
  const int m = f2.degree();
  return circle(f, f2) - circle(f2, f).scaled(x_->field().sign((n - 1) * (m - 1)));
}

Cochain BracketEngine::cup(const Cochain& f, const Cochain& f2) const {
  const int n = f.degree();
  const int m = f2.degree();
  Cochain out(n + m);
  const SkewGroupAlgebra& a = algebra();
  const Fp sign = x_->field().sign(n * m);
  for (const Generator& e : x_->generators(n + m)) {
    SkewElement value;
    for (const XPair& pair : x_->diagonal(x_->tensor_of(e))) {
      if (pair.left.degree() != n) continue;
      const SkewElement left = evaluate(f, pair.left);
      if (left.is_zero()) continue;
      value.add(a.multiply(left, evaluate(f2, pair.right)), pair.coeff * sign);
    }
    out.set(e, std::move(value));
  }
  return out;
}

std::vector<CochainCoordinate> BracketEngine::cochain_basis(int degree, int internal_degree) const {
  std::vector<CochainCoordinate> out;
  if (degree < 0) return out;
  const int n = algebra().num_variables();
  const auto group_size = static_cast<GroupIndex>(algebra().group().size());
  for (const Generator& e : x_->generators(degree)) {
    const int poly_degree = e.wedge.size() + internal_degree;
    if (poly_degree < 0) continue;
    const auto monomials = monomials_of_degree(n, poly_degree);
    for (GroupIndex g = 0; g < group_size; ++g)
      for (const Monomial& m : monomials) out.push_back({e, g, m});
  }
  return out;
}

Cochain BracketEngine::cochain_of(const CochainCoordinate& coordinate) const {
  Cochain out(coordinate.generator.degree());
  out.set(coordinate.generator,
          SkewElement(coordinate.group, monomial_poly(coordinate.monomial, x_->field().one())));
  return out;
}

CoordinateVector BracketEngine::coordinates(const Cochain& f) const {
  CoordinateVector out;
  for (const auto& [e, v] : f)
    for (const auto& [g, s] : v)
      for (const auto& [m, c] : s) out.add({e, g, m}, c);
  return out;
}

CoboundarySolution BracketEngine::solve_coboundary(const Cochain& target, int internal_degree) const {
  for (int d : internal_degrees(target)) {
    if (d != internal_degree) {
      throw Error(ErrorCode::InhomogeneousInput,
                  "cochain has a component of internal degree " + std::to_string(d));
    }
  }
  const int n = target.degree();
  CoboundarySolution solution;
  solution.degree = n;
  solution.internal_degree = internal_degree;
  const auto basis = cochain_basis(n - 1, internal_degree);
  solution.unknowns = basis.size();

  // Terms of d(e) for generators e of degree n, grouped by the generator they involve.
  struct Occurrence {
    Generator target;
    GeneratorTerm term;
  };
  std::map<Generator, std::vector<Occurrence>> occurrences;
  if (n >= 1) {
    for (const Generator& e : x_->generators(n)) {
      for (const auto& [t, c] : x_->boundary(x_->tensor_of(e))) {
        for (GeneratorTerm term : x_->decompose(t)) {
          term.coeff = term.coeff * c;
          occurrences[term.generator].push_back({e, std::move(term)});
        }
      }
    }
  }

  const SkewGroupAlgebra& a = algebra();
  SparseEchelon<CochainCoordinate> echelon;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const CochainCoordinate& u = basis[k];
    const SkewElement value(u.group, monomial_poly(u.monomial, x_->field().one()));
    CoordinateVector column;
    if (auto it = occurrences.find(u.generator); it != occurrences.end()) {
      for (const Occurrence& occ : it->second) {
        const SkewElement image = a.multiply(a.multiply(occ.term.left, value), occ.term.right);
        for (const auto& [g, s] : image)
          for (const auto& [m, c] : s) column.add({occ.target, g, m}, c * occ.term.coeff);
      }
    }
    echelon.insert(std::move(column), k);
  }
  solution.rank = echelon.rank();

  const auto reduction = echelon.reduce(coordinates(target));
  if (reduction.residual.is_zero()) {
    Cochain witness(n - 1);
    for (const auto& [k, c] : reduction.combination) witness += cochain_of(basis[k]).scaled(c);
    solution.solved = true;
    solution.verified = coboundary(witness) == target;
    solution.witness = std::move(witness);
  } else {
    solution.certificate = echelon.separating_functional(reduction.residual);
    solution.verified = verify_certificate(solution, target);
  }
  return solution;
}

bool BracketEngine::verify_certificate(const CoboundarySolution& solution, const Cochain& target) const {
  if (solution.solved || solution.certificate.is_zero()) return false;
  const Fp zero = x_->field().zero();
  if (dot(solution.certificate, coordinates(target), zero).is_zero()) return false;
  for (const auto& u : cochain_basis(solution.degree - 1, solution.internal_degree)) {
    if (!dot(solution.certificate, coordinates(coboundary(cochain_of(u))), zero).is_zero()) return false;
  }
  return true;
}

ClassComparison BracketEngine::class_equal(const Cochain& a, const Cochain& b) const {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot compare cochains of degrees " + std::to_string(a.degree()) +
                                               " and " + std::to_string(b.degree()));
  }
  const Cochain difference = a - b;
  ClassComparison out;
  out.equal = true;
  out.witness = Cochain(a.degree() - 1);
  for (int d : internal_degrees(difference)) {
    CoboundarySolution solution = solve_coboundary(homogeneous_component(difference, d), d);
    if (solution.solved && solution.verified) {
      out.witness += *solution.witness;
    } else {
      out.equal = false;
    }
    out.components.push_back(std::move(solution));
  }
  if (!out.equal) out.witness = Cochain(a.degree() - 1);
  return out;
}

PbwReport BracketEngine::pbw_check(const Cochain& lambda, const Cochain& kappa) const {
  PbwReport report;
  report.lambda_is_cocycle = is_cocycle(lambda);
  report.kappa_is_cocycle = is_cocycle(kappa);
  report.lambda_lambda = bracket(lambda, lambda);
  report.lambda_kappa = bracket(lambda, kappa);
  report.lambda_lambda_minus_2_dkappa =
      report.lambda_lambda - coboundary(kappa).scaled(x_->field()(2));
  const Cochain zero3(report.lambda_lambda.degree());
  report.lambda_lambda_class = class_equal(report.lambda_lambda, zero3);
  report.lambda_kappa_class = class_equal(report.lambda_kappa, Cochain(report.lambda_kappa.degree()));
  report.lambda_lambda_minus_2_dkappa_class = class_equal(report.lambda_lambda_minus_2_dkappa, zero3);
  return report;
}

Cochain BracketEngine::random_cochain(int degree, int internal_degree, std::mt19937_64& rng) const {
  Cochain out(degree);
  const std::int64_t p = x_->field().characteristic();
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (const auto& u : cochain_basis(degree, internal_degree)) {
    const Fp c = x_->field()(dist(rng));
    if (!c.is_zero()) out += cochain_of(u).scaled(c);
  }
  return out;
}

}  // namespace twistbrack
