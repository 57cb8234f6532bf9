#include "twistbrack/poly.hpp"

#include <sstream>

namespace twistbrack {

Poly constant_poly(Fp c) { return Poly(Monomial{}, c); }

Poly monomial_poly(const Monomial& m, Fp c) { return Poly(m, c); }

Poly variable_poly(int index, Fp c) { return Poly(Monomial::variable(index), c); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) out.add(ma * mb, ca * cb);
  }
  return out;
}

Poly multiply(const Poly& a, const Monomial& m) {
  Poly out;
  for (const auto& [ma, ca] : a) out.add(ma * m, ca);
  return out;
}

std::optional<int> homogeneous_degree(const Poly& s) {
  std::optional<int> degree;
  for (const auto& [m, c] : s) {
    if (!degree) {
      degree = m.degree();
    } else if (*degree != m.degree()) {
      return std::nullopt;
    }
  }
  return degree;
}

bool is_homogeneous_of_degree(const Poly& s, int degree) {
  for (const auto& [m, c] : s) {
    if (m.degree() != degree) return false;
  }
  return true;
}

namespace {
std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = m.exponent(static_cast<int>(i));
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}
}  // namespace

std::string to_string(const Poly& s, const std::vector<std::string>& variable_names) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::int64_t b = c.balanced();
    std::string mono = monomial_text(m, variable_names);
    if (first) {
      if (b < 0) os << "-";
    } else {
      os << (b < 0 ? " - " : " + ");
    }
    std::int64_t mag = b < 0 ? -b : b;
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace twistbrack
