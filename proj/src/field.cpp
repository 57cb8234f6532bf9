#include "twistbrack/field.hpp"

#include <string>

#include "twistbrack/error.hpp"

namespace twistbrack {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::NonInvertibleGenerator: return "NonInvertibleGenerator";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Error";
}

Fp Fp::pow(std::uint64_t exponent) const {
  Fp result(modulus_, 1);
  Fp base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Fp Fp::inverse() const {
  assert(!is_zero());
  return pow(modulus_ - 2);
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) {
  if (p < 2 || p >= static_cast<std::int64_t>(kMaxPrime) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::NonPrimeModulus, "modulus " + std::to_string(p) + " is not a supported prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

}  // namespace twistbrack
