#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>

namespace twistbrack {

/// Residue class modulo a prime. Carries its modulus so values from different
/// fields never mix silently.
class Fp {
 public:
  Fp(std::uint32_t modulus, std::int64_t value) : value_(reduce(value, modulus)), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Fp operator+(Fp rhs) const {
    assert(modulus_ == rhs.modulus_);
    std::uint64_t s = std::uint64_t{value_} + rhs.value_;
    return raw(static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s), modulus_);
  }
  Fp operator-(Fp rhs) const {
    assert(modulus_ == rhs.modulus_);
    return raw(value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + (modulus_ - rhs.value_), modulus_);
  }
  Fp operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Fp operator*(Fp rhs) const {
    assert(modulus_ == rhs.modulus_);
    return raw(static_cast<std::uint32_t>(std::uint64_t{value_} * rhs.value_ % modulus_), modulus_);
  }
  Fp& operator+=(Fp rhs) { return *this = *this + rhs; }
  Fp& operator-=(Fp rhs) { return *this = *this - rhs; }
  Fp& operator*=(Fp rhs) { return *this = *this * rhs; }

  Fp pow(std::uint64_t exponent) const;
  /// Fermat inverse; undefined on zero.
  Fp inverse() const;
  Fp operator/(Fp rhs) const { return *this * rhs.inverse(); }

  /// Representative in (-p/2, p/2], used for readable output.
  std::int64_t balanced() const noexcept {
    return value_ > modulus_ / 2 ? std::int64_t{value_} - modulus_ : std::int64_t{value_};
  }

  friend bool operator==(Fp, Fp) = default;

 private:
  static Fp raw(std::uint32_t value, std::uint32_t modulus) {
    Fp out(modulus, 0);
    out.value_ = value;
    return out;
  }
  static std::uint32_t reduce(std::int64_t value, std::uint32_t modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    return static_cast<std::uint32_t>(r < 0 ? r + modulus : r);
  }

  std::uint32_t value_;
  std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, Fp x);

bool is_prime(std::uint64_t n);

/// The prime field F_p. Construction validates primality.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 31;

  explicit PrimeField(std::int64_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  Fp operator()(std::int64_t value) const { return Fp(p_, value); }
  Fp zero() const { return Fp(p_, 0); }
  Fp one() const { return Fp(p_, 1); }
  /// (-1)^k
  Fp sign(std::int64_t k) const { return Fp(p_, (k % 2 == 0) ? 1 : -1); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace twistbrack
