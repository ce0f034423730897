#pragma once

#include <cstdint>
#include <iosfwd>

#include "massey/scalar.hpp"

namespace massey {

/// Upper unitriangular 4x4 matrix over Z/p in coordinate form
///
///     | 1 a1 u  v  |
///     | 0 1  a2 w  |
///     | 0 0  1  a3 |
///     | 0 0  0  1  |
///
/// Binary operations throw Error(ModulusMismatch) when the moduli differ.
struct U4Element {
  ModScalar a1, a2, a3, u, v, w;

  static U4Element identity(const PrimeField& field);
  static U4Element make(const PrimeField& field, std::int64_t a1,
                        std::int64_t a2, std::int64_t a3, std::int64_t u,
                        std::int64_t v, std::int64_t w);

  std::uint32_t modulus() const noexcept { return a1.modulus(); }
  bool is_identity() const noexcept;
  /// Member of the derived subgroup: a1 = a2 = a3 = 0.
  bool in_derived_subgroup() const noexcept;
  /// Member of the center: everything but v vanishes.
  bool in_center() const noexcept;

  friend bool operator==(const U4Element&, const U4Element&) = default;
};

U4Element u4_multiply(const U4Element& m, const U4Element& n);
U4Element u4_inverse(const U4Element& m);
/// [M, N] = M N M^-1 N^-1 from the closed-form entries; the derived-subgroup
/// coordinates are a1~a2 - a2~a1 at (1,3), a2~a3 - a3~a2 at (2,4) and
/// (a1~w - w~a1) - (a3~u - ~a3 u) - (a1~a2 - a2~a1)(a3 + ~a3) at (1,4).
U4Element u4_commutator(const U4Element& m, const U4Element& n);
/// M^k for any integer k (negative k inverts first).
U4Element u4_power(const U4Element& m, std::int64_t k);

inline U4Element operator*(const U4Element& m, const U4Element& n) {
  return u4_multiply(m, n);
}

std::ostream& operator<<(std::ostream& os, const U4Element& m);

/// Coset of U4 modulo its center; v is discarded.
struct U4ModCenterElement {
  ModScalar a1, a2, a3, u, w;

  static U4ModCenterElement identity(const PrimeField& field);
  bool is_identity() const noexcept;
  friend bool operator==(const U4ModCenterElement&,
                         const U4ModCenterElement&) = default;
};

U4ModCenterElement u4_project_mod_center(const U4Element& m);
U4ModCenterElement u4mz_multiply(const U4ModCenterElement& m,
                                 const U4ModCenterElement& n);
U4ModCenterElement u4mz_inverse(const U4ModCenterElement& m);
U4ModCenterElement u4mz_commutator(const U4ModCenterElement& m,
                                   const U4ModCenterElement& n);

/// Upper unitriangular 3x3 matrix with superdiagonal (a, b) and corner c.
struct U3Element {
  ModScalar a, b, c;

  static U3Element identity(const PrimeField& field);
  static U3Element make(const PrimeField& field, std::int64_t a,
                        std::int64_t b, std::int64_t c);
  bool is_identity() const noexcept;
  friend bool operator==(const U3Element&, const U3Element&) = default;
};

U3Element u3_multiply(const U3Element& m, const U3Element& n);
U3Element u3_inverse(const U3Element& m);
/// Corner entry a~b - b~a, superdiagonal zero.
U3Element u3_commutator(const U3Element& m, const U3Element& n);
U3Element u3_power(const U3Element& m, std::int64_t k);

}  // namespace massey
