#include "twistbrack/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twistbrack {

Monomial Monomial::variable(int index) {
  Monomial m;
  m.set_exponent(index, 1);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw std::invalid_argument("too many variables in exponent vector");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set_exponent(static_cast<int>(i), exponents[i]);
  return m;
}

void Monomial::set_exponent(int index, int value) {
  if (index < 0 || index >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (value < 0 || value > 255) throw std::overflow_error("exponent out of range [0, 255]");
  exps_[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(value);
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

std::vector<int> Monomial::exponents(int num_variables) const {
  std::vector<int> out(static_cast<std::size_t>(num_variables));
  for (int i = 0; i < num_variables; ++i) out[static_cast<std::size_t>(i)] = exponent(i);
  return out;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  for (int i = 0; i < kMaxVariables; ++i) out.set_exponent(i, exponent(i) + rhs.exponent(i));
  return out;
}

Wedge Wedge::of(std::initializer_list<int> indices) {
  return of(std::span<const int>(indices.begin(), indices.size()));
}

Wedge Wedge::of(std::span<const int> indices) {
  std::uint32_t bits = 0;
  int previous = -1;
  for (int i : indices) {
    if (i <= previous || i >= kMaxVariables) throw std::invalid_argument("wedge indices must be strictly increasing");
    bits |= 1u << i;
    previous = i;
  }
  return Wedge(bits);
}

std::vector<int> Wedge::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

int shuffle_sign(Wedge left, Wedge right) {
  if ((left.bits() & right.bits()) != 0) return 0;
  int inversions = 0;
  for (int i : left.indices()) inversions += right.count_below(i);
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Wedge> wedges_of_size(int num_variables, int size) {
  std::vector<Wedge> out;
  if (size < 0 || size > num_variables) return out;
  for (std::uint32_t bits = 0; bits < (1u << num_variables); ++bits) {
    if (std::popcount(bits) == size) out.push_back(Wedge::from_bits(bits));
  }
  std::sort(out.begin(), out.end(), [](Wedge a, Wedge b) { return a.indices() < b.indices(); });
  return out;
}

namespace {
void fill_monomials(int num_variables, int index, int remaining, std::vector<int>& exps,
                    std::vector<Monomial>& out) {
  if (index == num_variables - 1) {
    exps[static_cast<std::size_t>(index)] = remaining;
    out.push_back(Monomial::from_exponents(exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(index)] = e;
    fill_monomials(num_variables, index + 1, remaining - e, exps, out);
  }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int num_variables, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (num_variables == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> exps(static_cast<std::size_t>(num_variables), 0);
  fill_monomials(num_variables, 0, degree, exps, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twistbrack
