#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "massey/lie.hpp"
#include "massey/linalg.hpp"
#include "massey/word.hpp"

namespace massey {

enum class Flavor { Free, Surface };

std::string_view to_string(Flavor flavor) noexcept;
/// "free" or "surface"; throws Error(PreconditionFailed) otherwise.
Flavor parse_flavor(std::string_view text);

/// Element of a class-3 exponent-p quotient, stored as coordinates of its
/// Lie logarithm in the quotient Hall coordinates of degrees 1, 2 and 3.
/// Only a NilGroupContext creates these.
class GroupElement {
 public:
  const ModVector& v1() const noexcept { return v1_; }
  const ModVector& v2() const noexcept { return v2_; }
  const ModVector& v3() const noexcept { return v3_; }
  const ModVector& layer(int degree) const;
  std::uint64_t context_id() const noexcept { return context_id_; }
  bool is_identity() const noexcept;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  friend class NilGroupContext;
  GroupElement(std::uint64_t id, ModVector v1, ModVector v2, ModVector v3)
      : context_id_(id),
        v1_(std::move(v1)),
        v2_(std::move(v2)),
        v3_(std::move(v3)) {}

  std::uint64_t context_id_;
  ModVector v1_, v2_, v3_;
};

/// One factor of the collected normal form: atom^exponent, where degree-2
/// and degree-3 atoms stand for the group commutators [e_i,e_j] and
/// [[e_i,e_j],e_k] of generators.
struct NormalFormFactor {
  HallAtom atom;
  std::size_t quotient_position;
  Residue exponent;

  friend bool operator==(const NormalFormFactor&,
                         const NormalFormFactor&) = default;
};

/// The finite group Gamma/Gamma_{4,p} (free flavor) or Omega/Omega_{4,p}
/// (surface flavor) modelled through the Lazard correspondence: a class-3 Lie
/// ring over Z/p with truncated Baker-Campbell-Hausdorff multiplication.
///
/// For the surface flavor the Lie ring is the free one modulo the ideal
/// generated by the logarithm of [x1,y1][x2,y2]...[xg,yg], kept in reduced
/// echelon form; quotient coordinates are the non-pivot Hall positions, so
/// the relation word evaluates to the identity exactly.
///
/// Immutable after construction. Binary operations throw
/// Error(ContextMismatch) for elements of another context.
class NilGroupContext {
 public:
  /// Surface flavor needs genus >= 2; free flavor has rank 2 * genus.
  /// Throws BadPrime / BadGenus.
  static std::shared_ptr<const NilGroupContext> build(std::int64_t prime,
                                                      int genus, Flavor flavor);
  /// Free group of arbitrary rank >= 2; generators are named x1, y1, x2, ...
  static std::shared_ptr<const NilGroupContext> build_free(std::int64_t prime,
                                                           std::size_t rank);

  std::uint64_t id() const noexcept { return id_; }
  const PrimeField& field() const noexcept { return lie_.field(); }
  Flavor flavor() const noexcept { return flavor_; }
  /// 0 for free contexts of odd rank.
  int genus() const noexcept { return genus_; }
  std::size_t rank() const noexcept { return lie_.basis().generators(); }
  const FreeLieRing& lie() const noexcept { return lie_; }

  /// Dimensions of the graded quotients (degree 1, 2, 3).
  std::array<std::size_t, 3> dims() const noexcept;
  /// log_p of the group order.
  std::size_t order_exponent() const noexcept;
  /// Free Hall positions that survive as quotient coordinates.
  const std::vector<std::size_t>& quotient_atoms(int degree) const;
  /// Echelon basis of the relation ideal in flat free coordinates, or null
  /// for the free flavor.
  const RowEchelon* relation_ideal() const noexcept {
    return ideal_ ? &*ideal_ : nullptr;
  }
  /// Logarithm of the relation word in the free Lie ring (surface only).
  const std::optional<LieVector>& relation_log() const noexcept {
    return relation_log_;
  }
  /// [x1,y1] [x2,y2] ... [xg,yg]
  GroupWord relation_word() const;

  /// Throws DimensionMismatch.
  GroupElement element(ModVector v1, ModVector v2, ModVector v3) const;
  GroupElement identity() const;
  GroupElement generator(std::size_t position) const;
  /// Throws UnknownGenerator.
  GroupElement generator(const GeneratorSymbol& symbol) const;
  /// Reduces a free Lie element into quotient coordinates.
  GroupElement from_lie(const LieVector& x) const;
  LieVector to_lie(const GroupElement& a) const;

  /// Truncated BCH: A + B + [A,B]/2 + [A,[A,B]]/12 - [B,[A,B]]/12.
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  /// a^k = exp(k log a) for any integer k.
  GroupElement power(const GroupElement& a, std::int64_t k) const;
  /// a b a^-1 b^-1, computed as a chain of products.
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;

  /// Membership in the i-th term of the lower central p-series, i in 1..4:
  /// all coordinates of degree < i vanish.
  bool lcs_member(const GroupElement& a, int i) const;

  /// Greedy collection: generators in canonical order, then degree-2 atoms,
  /// then degree-3 atoms. Multiplying the factors back in order gives a.
  std::vector<NormalFormFactor> normal_form(const GroupElement& a) const;
  /// The group element a normal-form atom stands for.
  const GroupElement& atom_element(int degree, std::size_t quotient_position) const;
  GroupElement from_normal_form(const std::vector<NormalFormFactor>& f) const;
  /// Normal form written as a word (exponents in (-p/2, p/2]).
  GroupWord to_word(const GroupElement& a) const;

  /// Throws UnknownGenerator.
  GroupElement evaluate(const GroupWord& word) const;
  GroupElement evaluate(std::string_view text) const;

  void check(const GroupElement& a) const;

 private:
  NilGroupContext(const PrimeField& field, std::size_t rank, int genus,
                  Flavor flavor);
  void build_relation_ideal();
  void build_atoms();
  LieVector bch(const LieVector& a, const LieVector& b) const;

  std::uint64_t id_;
  FreeLieRing lie_;
  int genus_;
  Flavor flavor_;
  std::optional<LieVector> relation_log_;
  std::optional<RowEchelon> ideal_;
  std::array<std::vector<std::size_t>, 3> quotient_atoms_;
  std::array<std::vector<GroupElement>, 3> atom_elements_;
  Residue half_, twelfth_;
};

using ContextPtr = std::shared_ptr<const NilGroupContext>;

inline ContextPtr build_context(std::int64_t prime, int genus, Flavor flavor) {
  return NilGroupContext::build(prime, genus, flavor);
}

}  // namespace massey
