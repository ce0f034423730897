#include "massey/unitriangular.hpp"

#include <ostream>

#include "massey/error.hpp"

namespace massey {
namespace {

void check_moduli(std::uint32_t a, std::uint32_t b) {
  if (a != b)
    throw Error(ErrorCode::ModulusMismatch,
                "unitriangular operands over different fields");
}

template <typename T, typename Mul, typename Inv>
T generic_power(T base, std::int64_t k, T result, Mul mul, Inv inv) {
  if (k < 0) {
    base = inv(base);
    k = -k;
  }
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace

U4Element U4Element::identity(const PrimeField& field) {
  const ModScalar z(0, field);
  return {z, z, z, z, z, z};
}

U4Element U4Element::make(const PrimeField& f, std::int64_t a1,
                          std::int64_t a2, std::int64_t a3, std::int64_t u,
                          std::int64_t v, std::int64_t w) {
  return {ModScalar(a1, f), ModScalar(a2, f), ModScalar(a3, f),
          ModScalar(u, f),  ModScalar(v, f),  ModScalar(w, f)};
}

bool U4Element::is_identity() const noexcept {
  return in_center() && v.is_zero();
}

bool U4Element::in_derived_subgroup() const noexcept {
  return a1.is_zero() && a2.is_zero() && a3.is_zero();
}

bool U4Element::in_center() const noexcept {
  return in_derived_subgroup() && u.is_zero() && w.is_zero();
}

U4Element u4_multiply(const U4Element& m, const U4Element& n) {
  check_moduli(m.modulus(), n.modulus());
  return {m.a1 + n.a1,
          m.a2 + n.a2,
          m.a3 + n.a3,
          m.u + n.u + m.a1 * n.a2,
          m.v + n.v + m.a1 * n.w + m.u * n.a3,
          m.w + n.w + m.a2 * n.a3};
}

U4Element u4_inverse(const U4Element& m) {
  return {-m.a1,
          -m.a2,
          -m.a3,
          m.a1 * m.a2 - m.u,
          m.a1 * m.w + m.u * m.a3 - m.a1 * m.a2 * m.a3 - m.v,
          m.a2 * m.a3 - m.w};
}

U4Element u4_commutator(const U4Element& m, const U4Element& n) {
  check_moduli(m.modulus(), n.modulus());
  const ModScalar d12 = m.a1 * n.a2 - m.a2 * n.a1;
  const ModScalar d23 = m.a2 * n.a3 - m.a3 * n.a2;
  const ModScalar corner = (m.a1 * n.w - m.w * n.a1) -
                           (m.a3 * n.u - n.a3 * m.u) - d12 * (m.a3 + n.a3);
  const ModScalar z = m.a1 - m.a1;
  return {z, z, z, d12, corner, d23};
}

U4Element u4_power(const U4Element& m, std::int64_t k) {
  return generic_power(m, k, U4Element::identity(m.a1.field()), u4_multiply,
                       u4_inverse);
}

std::ostream& operator<<(std::ostream& os, const U4Element& m) {
  return os << "M(" << m.a1.value() << "," << m.a2.value() << ","
            << m.a3.value() << "," << m.u.value() << "," << m.v.value() << ","
            << m.w.value() << ")";
}

U4ModCenterElement U4ModCenterElement::identity(const PrimeField& field) {
  const ModScalar z(0, field);
  return {z, z, z, z, z};
}

bool U4ModCenterElement::is_identity() const noexcept {
  return a1.is_zero() && a2.is_zero() && a3.is_zero() && u.is_zero() &&
         w.is_zero();
}

U4ModCenterElement u4_project_mod_center(const U4Element& m) {
  return {m.a1, m.a2, m.a3, m.u, m.w};
}

U4ModCenterElement u4mz_multiply(const U4ModCenterElement& m,
                                 const U4ModCenterElement& n) {
  check_moduli(m.a1.modulus(), n.a1.modulus());
  return {m.a1 + n.a1, m.a2 + n.a2, m.a3 + n.a3, m.u + n.u + m.a1 * n.a2,
          m.w + n.w + m.a2 * n.a3};
}

U4ModCenterElement u4mz_inverse(const U4ModCenterElement& m) {
  return {-m.a1, -m.a2, -m.a3, m.a1 * m.a2 - m.u, m.a2 * m.a3 - m.w};
}

U4ModCenterElement u4mz_commutator(const U4ModCenterElement& m,
                                   const U4ModCenterElement& n) {
  check_moduli(m.a1.modulus(), n.a1.modulus());
  const ModScalar z = m.a1 - m.a1;
  return {z, z, z, m.a1 * n.a2 - m.a2 * n.a1, m.a2 * n.a3 - m.a3 * n.a2};
}

U3Element U3Element::identity(const PrimeField& field) {
  const ModScalar z(0, field);
  return {z, z, z};
}

U3Element U3Element::make(const PrimeField& f, std::int64_t a, std::int64_t b,
                          std::int64_t c) {
  return {ModScalar(a, f), ModScalar(b, f), ModScalar(c, f)};
}

bool U3Element::is_identity() const noexcept {
  return a.is_zero() && b.is_zero() && c.is_zero();
}

U3Element u3_multiply(const U3Element& m, const U3Element& n) {
  check_moduli(m.a.modulus(), n.a.modulus());
  return {m.a + n.a, m.b + n.b, m.c + n.c + m.a * n.b};
}

U3Element u3_inverse(const U3Element& m) {
  return {-m.a, -m.b, m.a * m.b - m.c};
}

U3Element u3_commutator(const U3Element& m, const U3Element& n) {
  check_moduli(m.a.modulus(), n.a.modulus());
  const ModScalar z = m.a - m.a;
  return {z, z, m.a * n.b - m.b * n.a};
}

U3Element u3_power(const U3Element& m, std::int64_t k) {
  return generic_power(m, k, U3Element::identity(m.a.field()), u3_multiply,
                       u3_inverse);
}

}  // namespace massey
