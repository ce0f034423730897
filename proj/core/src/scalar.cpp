#include "massey/scalar.hpp"

#include <ostream>
#include <string>

#include "massey/error.hpp"

namespace massey {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t modulus) : p_(0) {
  if (modulus <= 3 || modulus > 0x7fffffff || !is_prime(modulus))
    throw Error(ErrorCode::BadPrime,
                "modulus must be a prime > 3, got " + std::to_string(modulus));
  p_ = static_cast<std::uint32_t>(modulus);
}

Residue PrimeField::pow(Residue a, std::uint64_t k) const noexcept {
  Residue result = 1 % p_;
  while (k) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  // Fermat; p is prime.
  return pow(a, p_ - 2);
}

void ModScalar::check_same(const ModScalar& other) const {
  if (modulus_ != other.modulus_)
    throw Error(ErrorCode::ModulusMismatch,
                "Z/" + std::to_string(modulus_) + " vs Z/" +
                    std::to_string(other.modulus_));
}

ModScalar ModScalar::operator-() const noexcept {
  return ModScalar(value_ == 0 ? 0 : modulus_ - value_, modulus_, 0);
}

ModScalar& ModScalar::operator+=(const ModScalar& other) {
  check_same(other);
  value_ = static_cast<Residue>((static_cast<std::uint64_t>(value_) +
                                 other.value_) % modulus_);
  return *this;
}

ModScalar& ModScalar::operator-=(const ModScalar& other) {
  check_same(other);
  value_ = static_cast<Residue>((static_cast<std::uint64_t>(value_) +
                                 modulus_ - other.value_) % modulus_);
  return *this;
}

ModScalar& ModScalar::operator*=(const ModScalar& other) {
  check_same(other);
  value_ = static_cast<Residue>(static_cast<std::uint64_t>(value_) *
                                other.value_ % modulus_);
  return *this;
}

ModScalar mod_inverse(const ModScalar& a) {
  return ModScalar(PrimeField(a.modulus_).inv(a.value_), a.modulus_, 0);
}

std::ostream& operator<<(std::ostream& os, const ModScalar& a) {
  return os << a.value() << " (mod " << a.modulus() << ")";
}

}  // namespace massey
