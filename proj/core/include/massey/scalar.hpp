#pragma once

#include <cstdint>
#include <iosfwd>

namespace massey {

/// Canonical residue in [0, p).
using Residue = std::uint32_t;

bool is_prime(std::int64_t n) noexcept;

/// Z/p for a prime p > 3. Validated once at construction; the arithmetic
/// helpers assume their arguments are already canonical residues.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t modulus);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a + b * c
  Residue fma(Residue a, Residue b, Residue c) const noexcept {
    return static_cast<Residue>(
        (a + static_cast<std::uint64_t>(b) * c) % p_);
  }
  Residue pow(Residue a, std::uint64_t k) const noexcept;
  /// Throws Error(ZeroInverse) for a == 0.
  Residue inv(Residue a) const;

  /// Representative in (-p/2, p/2], for human-readable output.
  std::int64_t centered(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A single element of Z/p that remembers its modulus. Mixing moduli throws
/// Error(ModulusMismatch).
class ModScalar {
 public:
  ModScalar(std::int64_t value, const PrimeField& field)
      : value_(field.reduce(value)), modulus_(field.modulus()) {}

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  PrimeField field() const { return PrimeField(modulus_); }
  bool is_zero() const noexcept { return value_ == 0; }

  ModScalar operator-() const noexcept;
  ModScalar& operator+=(const ModScalar& other);
  ModScalar& operator-=(const ModScalar& other);
  ModScalar& operator*=(const ModScalar& other);

  friend ModScalar operator+(ModScalar a, const ModScalar& b) { return a += b; }
  friend ModScalar operator-(ModScalar a, const ModScalar& b) { return a -= b; }
  friend ModScalar operator*(ModScalar a, const ModScalar& b) { return a *= b; }
  friend bool operator==(const ModScalar&, const ModScalar&) = default;

 private:
  ModScalar(Residue value, std::uint32_t modulus, int)
      : value_(value), modulus_(modulus) {}
  void check_same(const ModScalar& other) const;

  Residue value_;
  std::uint32_t modulus_;

  friend ModScalar mod_inverse(const ModScalar& a);
};

ModScalar mod_inverse(const ModScalar& a);

std::ostream& operator<<(std::ostream& os, const ModScalar& a);

}  // namespace massey
