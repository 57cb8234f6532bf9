#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistbrack/linear_combination.hpp"
#include "twistbrack/monomial.hpp"

namespace twistbrack {

/// Sparse polynomial in S(V) = F_p[x_1, ..., x_n].
using Poly = LinearCombination<Monomial>;

Poly constant_poly(Fp c);
Poly monomial_poly(const Monomial& m, Fp c);
Poly variable_poly(int index, Fp c);

Poly operator*(const Poly& a, const Poly& b);
Poly multiply(const Poly& a, const Monomial& m);

/// Total degree if every term has the same degree; nullopt for zero or mixed.
std::optional<int> homogeneous_degree(const Poly& s);
bool is_homogeneous_of_degree(const Poly& s, int degree);

/// e.g. "2*v^2*w + w". Coefficients printed in balanced form.
std::string to_string(const Poly& s, const std::vector<std::string>& variable_names);

}  // namespace twistbrack
