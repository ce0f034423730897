#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "massey/homomorphism.hpp"
#include "massey/linalg.hpp"
#include "massey/nilgroup.hpp"
#include "massey/unitriangular.hpp"

namespace massey {

/// Homomorphism Omega-bar -> Z/p, stored by its values on generators.
struct Character {
  ModVector values;

  static Character zero(const NilGroupContext& ctx);
  /// The dual functional e* (1 on e, 0 on every other generator).
  static Character dual(const NilGroupContext& ctx, const GeneratorSymbol& e);
  /// Reduces mod p; throws DimensionMismatch unless there is one value per
  /// generator.
  static Character from_values(const NilGroupContext& ctx,
                               const std::vector<std::int64_t>& values);

  bool is_zero() const noexcept;
  /// Dot product with v1.
  Residue operator()(const NilGroupContext& ctx, const GroupElement& a) const;

  friend bool operator==(const Character&, const Character&) = default;
};

struct CharacterTriple {
  Character chi1, chi2, chi3;
  const Character& operator[](int i) const;
};

/// kappa12 and kappa23 on generators. Together with the characters these
/// give the (1,3) and (2,4) entries of a homomorphism into U4/Z.
struct DefiningSystem {
  ModVector kappa12, kappa23;
};

/// One U4 matrix per generator.
struct U4Representation {
  std::vector<U4Element> images;

  /// rho(a) through the collected normal form of a. Assumes rho respects
  /// the relation (see relation_image).
  U4Element evaluate(const NilGroupContext& ctx, const GroupElement& a) const;
  /// rho of the relation word, multiplied out letter by letter.
  U4Element relation_image(const NilGroupContext& ctx) const;
};

/// Affine form c + sum_i coeffs[i] * t_i over Z/p.
struct AffineForm {
  Residue constant = 0;
  ModVector coeffs;

  static AffineForm constant_form(std::size_t unknowns, Residue c);
  static AffineForm unknown(std::size_t unknowns, std::size_t i);
};

/// U4 matrix whose superdiagonal is known and whose u, v, w entries are
/// affine in a fixed set of unknowns. Products and inverses stay affine
/// because the nonlinear terms of the group law only multiply superdiagonal
/// entries into the others.
struct AffineU4 {
  Residue a1 = 0, a2 = 0, a3 = 0;
  AffineForm u, v, w;
};

struct AffineU4Target {
  using Element = AffineU4;
  PrimeField field;
  std::size_t unknowns;

  Element identity() const;
  Element multiply(const Element& m, const Element& n) const;
  Element inverse(const Element& m) const;
  Element power(const Element& m, std::int64_t k) const;
  Element constant(const U4Element& m) const;
  /// Value of m at a point.
  U4Element evaluate(const Element& m, std::span<const Residue> point) const;
};

/// Sum over i of chi_a(x_i) chi_b(y_i) - chi_a(y_i) chi_b(x_i) vanishes, i.e.
/// (chi_a, chi_b) extends to a homomorphism into U3. Free contexts have no
/// relation, so there every pair passes.
bool cup_vanishes(const NilGroupContext& ctx, const Character& a,
                  const Character& b);

/// Solves for kappa12, kappa23 such that the relation lands in the center of
/// U4; the answer is checked against U4/Z before it is returned.
std::optional<DefiningSystem> massey_nonempty(const NilGroupContext& ctx,
                                              const CharacterTriple& chi);

/// All lifts rho with the given superdiagonal, parametrised affinely by
/// kappa12, kappa23 and v on generators.
class LiftFamily {
 public:
  LiftFamily(const NilGroupContext& ctx, CharacterTriple chi,
             SolutionSet solutions);

  std::size_t dimension() const noexcept { return solutions_.kernel().size(); }
  const SolutionSet& solutions() const noexcept { return solutions_; }
  /// particular + sum coeffs[i] * kernel[i].
  U4Representation at(std::span<const Residue> coeffs) const;
  U4Representation particular() const;

 private:
  const NilGroupContext* ctx_;
  CharacterTriple chi_;
  SolutionSet solutions_;
};

std::optional<LiftFamily> lift_family(const NilGroupContext& ctx,
                                      const CharacterTriple& chi);

/// A lift rho: Omega-bar -> U4 with superdiagonal chi, or none when the
/// Massey product does not contain zero. The returned witness is verified
/// on the relation.
std::optional<U4Representation> contains_zero(const NilGroupContext& ctx,
                                              const CharacterTriple& chi);

/// (1,4) entry of rho(omega) for a verified lift rho. Throws
/// NotInThirdLayer unless omega has zero degree-1 and degree-2 coordinates.
ModScalar h_ell(const NilGroupContext& ctx, const U4Representation& rho,
                const GroupElement& omega);
/// Same, computing a lift first. Throws PreconditionFailed when there is
/// none.
ModScalar h_ell(const NilGroupContext& ctx, const CharacterTriple& chi,
                const GroupElement& omega);

/// det | -chi1(g)     0       chi3(g) |
///     |  chi1(s)  chi2(s)    chi3(s) |
///     |  chi1(t)  chi2(t)    chi3(t) |
ModScalar c_det(const NilGroupContext& ctx, const CharacterTriple& chi,
                const GroupElement& sigma, const GroupElement& tau,
                const GroupElement& gamma);

/// det of the 2x2 matrices (chi_i(s) chi_j(s) ; chi_i(t) chi_j(t)) for
/// (i,j) = (1,2) and (2,3).
std::pair<Residue, Residue> minors(const NilGroupContext& ctx,
                                   const CharacterTriple& chi,
                                   const GroupElement& sigma,
                                   const GroupElement& tau);

/// Condition (ii): no character vanishes and {chi1, chi2} or {chi2, chi3} is
/// linearly independent.
bool nondegenerate(const NilGroupContext& ctx, const CharacterTriple& chi);

struct SurjectivityWitness {
  enum class Case { Independent, BothMinors, D23Only, D12Only };
  Case which;
  GroupElement sigma, tau, gamma;
  Residue d12 = 0, d23 = 0;
  ModScalar c;
};

/// sigma, tau, gamma with c_det != 0. Throws PreconditionFailed when
/// condition (ii) fails or the product does not contain zero.
SurjectivityWitness surjectivity_witness(const NilGroupContext& ctx,
                                         const CharacterTriple& chi);

/// Omega-bar extended by a cyclic group <Phi> acting through an
/// automorphism of order dividing p.
class SemidirectContext {
 public:
  /// Throws BadOrder when Phi^p is not the identity on generators and
  /// InvalidHom when phi belongs to another context.
  SemidirectContext(ContextPtr ctx, GroupHomomorphismSpec phi);

  const NilGroupContext& group() const noexcept { return *ctx_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  const GroupHomomorphismSpec& phi() const noexcept { return phi_; }
  /// Degree-3 parts of (Phi.e_j) e_j^-1, one column per generator, when Phi
  /// acts trivially modulo degree 3.
  const std::optional<ModMatrix>& tau() const noexcept { return tau_; }

 private:
  ContextPtr ctx_;
  GroupHomomorphismSpec phi_;
  std::optional<ModMatrix> tau_;
};

/// Characters of Omega-bar x| <Phi>: chi_j(omega Phi^k) = chi_j(omega) +
/// k * phi_values[j]. Without phi_values the searches below range over
/// every extension at once.
struct ExtendedTriple {
  CharacterTriple base;
  std::optional<std::array<Residue, 3>> phi_values;
};

/// Throws NotInvariant when some chi_j is not Phi-invariant.
ExtendedTriple extend_characters(
    const SemidirectContext& sctx, const CharacterTriple& chi,
    std::optional<std::array<Residue, 3>> phi_values =
        std::array<Residue, 3>{0, 0, 0});

struct SemidirectWitness {
  U4Representation rho;
  /// rho(Phi). For a defining system only its class mod the center counts.
  U4Element phi_matrix;
  std::size_t stratum = 0;
};

struct SearchOptions {
  unsigned jobs = 1;
};

/// Sweeps (a1, a2, a3, u, w) of M = rho(Phi) in lexicographic order
/// (restricted to the extension values when those are set) and solves the
/// remaining affine system in kappa12, kappa23, v on generators and v of M.
/// Returns the first stratum that admits a lift to U4.
std::optional<SemidirectWitness> contains_zero_semidirect(
    const SemidirectContext& sctx, const ExtendedTriple& chi,
    SearchOptions options = {});

/// Same sweep aimed at U4/Z: all v and (1,4) constraints are dropped.
std::optional<SemidirectWitness> defining_system_semidirect(
    const SemidirectContext& sctx, const ExtendedTriple& chi,
    SearchOptions options = {});
bool massey_nonempty_semidirect(const SemidirectContext& sctx,
                                const ExtendedTriple& chi,
                                SearchOptions options = {});

}  // namespace massey
