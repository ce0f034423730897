#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "massey/homomorphism.hpp"
#include "massey/linalg.hpp"
#include "massey/massey.hpp"
#include "massey/nilgroup.hpp"

namespace massey {

/// y1 -> [[x1,x2],x2]^-8 y1, y2 -> [[x1,x2],x1]^8 y2, every other generator
/// fixed. Checked to be an automorphism of order p acting trivially modulo
/// degree 3. Throws BadGenus for genus < 2.
GroupHomomorphismSpec build_phi_lambda(ContextPtr ctx);

/// Linear map from degree-1 coordinates to degree-3 quotient coordinates.
struct Tau3Map {
  ModMatrix matrix;  // dims[2] x rank

  /// The degree-3 element matrix * v1(omega).
  GroupElement apply(const NilGroupContext& ctx,
                     const GroupElement& omega) const;
};

/// omega -> (Phi.omega) omega^-1, read off on generators. Throws NotInG3
/// when Phi moves some generator by more than a degree-3 element.
Tau3Map tau_3_ell(const GroupHomomorphismSpec& phi);
Tau3Map tau_3_ell(const SemidirectContext& sctx);

struct PropositionReport {
  bool condition_i = false;
  std::optional<U4Representation> lift;

  bool condition_ii = false;
  bool characters_nonzero = false;
  bool pair12_independent = false;
  bool pair23_independent = false;

  bool condition_iii = false;
  bool phi_in_g3 = false;
  bool omega0_in_kernel = false;
  std::optional<GroupElement> tau_value;
  std::optional<ModScalar> h_value;

  /// Why the first failing condition failed; empty when all hold.
  std::string note;

  bool verdict() const noexcept {
    return condition_i && condition_ii && condition_iii;
  }
};

/// Evaluates the three conditions; failures are recorded, not thrown.
PropositionReport check_proposition(const SemidirectContext& sctx,
                                    const CharacterTriple& chi,
                                    const GroupElement& omega0);

/// H with basis x1, y1, ..., its exterior and tensor powers, and the
/// quotient of wedge^2 H (x) H by the image of wedge^3 H.
///
/// Layouts: wedge^2 H by pairs i < j in lexicographic order;
/// wedge^2 H (x) H at pair * n + k; (wedge^2 H (x) H) (x) H at
/// (pair * n + k) * n + t; wedge^2 H (x) wedge^2 H at p * m + q.
class TensorSpaceContext {
 public:
  TensorSpaceContext(const PrimeField& field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t h_dim() const noexcept { return n_; }
  std::size_t wedge2_dim() const noexcept { return m_; }
  std::size_t wedge2_h_dim() const noexcept { return m_ * n_; }
  std::size_t wedge3_dim() const noexcept { return wedge3_.rank(); }
  std::size_t quotient_dim() const noexcept {
    return wedge2_h_dim() - wedge3_dim();
  }
  std::size_t wedge2_square_dim() const noexcept { return m_ * m_; }

  /// Index of e_i ^ e_j, i < j.
  std::size_t pair(std::size_t i, std::size_t j) const;
  /// <e_t, e_s>: +1 for (x_i, y_i), -1 for (y_i, x_i), 0 otherwise.
  Residue pairing(std::size_t t, std::size_t s) const;

  ModVector basis_vector(std::size_t i) const;
  ModVector wedge(const ModVector& a, const ModVector& b) const;
  /// Kronecker product p (x) q.
  ModVector tensor(const ModVector& p, const ModVector& q) const;
  /// (a^b)(x)c + (b^c)(x)a + (c^a)(x)b in wedge^2 H (x) H.
  ModVector embed_wedge3(const ModVector& a, const ModVector& b,
                         const ModVector& c) const;
  /// Canonical representative modulo the embedded wedge^3 H.
  ModVector reduce(const ModVector& t) const;

 private:
  PrimeField field_;
  std::size_t n_, m_;
  std::vector<std::size_t> pair_index_;
  RowEchelon wedge3_;
};

/// (a ^ (b + sign * 2 s)) (x) (a ^ (b + sign * 2 s)), expanded bilinearly.
ModVector wedge_square_expand(const TensorSpaceContext& tctx,
                              const ModVector& a, const ModVector& b,
                              const ModVector& s, int sign);

/// (h1^h2) (x) (h3^h4) -> (h1^h2) (x) h3 (x) h4 - (h1^h2) (x) h4 (x) h3,
/// with each trailing slice reduced modulo wedge^3 H.
ModVector project_w(const TensorSpaceContext& tctx, const ModVector& t);

/// Reads slice (x) h_t as the map e -> <h_t, e> * slice, with
/// (a^b)(x)c standing for [[a,b],c]. Returns a dims[2] x rank matrix in the
/// quotient coordinates of ctx.
Tau3Map tensor_to_hom(const TensorSpaceContext& tctx,
                      const NilGroupContext& ctx, const ModVector& t);

}  // namespace massey
