#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "massey/error.hpp"
#include "massey/nilgroup.hpp"
#include "massey/unitriangular.hpp"

namespace massey {

/// What push_forward needs from a target group.
template <class G>
concept TargetGroup = requires(const G& g, const typename G::Element& a,
                               std::int64_t k) {
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::Element>;
  { g.inverse(a) } -> std::convertible_to<typename G::Element>;
  { g.power(a, k) } -> std::convertible_to<typename G::Element>;
};

template <TargetGroup G>
typename G::Element target_commutator(const G& g, const typename G::Element& a,
                                      const typename G::Element& b) {
  return g.multiply(g.multiply(g.multiply(a, b), g.inverse(a)), g.inverse(b));
}

/// Evaluates a word letter by letter from generator images. Unlike
/// PushForward this does not assume the images define a homomorphism, so it
/// is the right tool for checking relations.
template <TargetGroup G>
typename G::Element evaluate_in(const G& g,
                                const std::vector<typename G::Element>& images,
                                const GroupWord& word) {
  auto out = g.identity();
  for (const WordTerm& t : word.terms) {
    auto base = g.identity();
    switch (t.atom.kind) {
      case WordAtom::Kind::Generator: {
        const std::size_t p = t.atom.generator.position();
        if (p >= images.size())
          throw Error(ErrorCode::UnknownGenerator,
                      t.atom.generator.name() + " has no image");
        base = images[p];
        break;
      }
      case WordAtom::Kind::Bracket:
        base = target_commutator(g, evaluate_in(g, images, t.atom.children[0]),
                                 evaluate_in(g, images, t.atom.children[1]));
        break;
      case WordAtom::Kind::Group:
        base = evaluate_in(g, images, t.atom.children[0]);
        break;
    }
    out = g.multiply(out, g.power(base, t.exponent));
  }
  return out;
}

/// The map Omega-bar -> G determined by generator images, evaluated through
/// the collected normal form. Meaningful only when the images respect the
/// relations of the source; callers validate that first.
template <TargetGroup G>
class PushForward {
 public:
  using Element = typename G::Element;

  PushForward(const NilGroupContext& source, G target,
              std::vector<Element> images)
      : source_(&source), target_(std::move(target)) {
    if (images.size() != source.rank())
      throw Error(ErrorCode::DimensionMismatch,
                  "need one image per generator");
    const HallBasis& basis = source.lie().basis();
    atoms_[0] = std::move(images);
    for (std::size_t p : source.quotient_atoms(2)) {
      const auto& i = basis.atom(2, p).index;
      atoms_[1].push_back(
          target_commutator(target_, atoms_[0][i[0]], atoms_[0][i[1]]));
    }
    for (std::size_t p : source.quotient_atoms(3)) {
      const auto& i = basis.atom(3, p).index;
      atoms_[2].push_back(target_commutator(
          target_,
          target_commutator(target_, atoms_[0][i[0]], atoms_[0][i[1]]),
          atoms_[0][i[2]]));
    }
  }

  const G& target() const noexcept { return target_; }
  const std::vector<Element>& images() const noexcept { return atoms_[0]; }
  const Element& atom_image(int degree, std::size_t q) const {
    return atoms_.at(degree - 1).at(q);
  }

  Element operator()(const GroupElement& a) const {
    auto out = target_.identity();
    for (const NormalFormFactor& f : source_->normal_form(a))
      out = target_.multiply(
          out, target_.power(atom_image(f.atom.degree, f.quotient_position),
                             f.exponent));
    return out;
  }

 private:
  const NilGroupContext* source_;
  G target_;
  std::array<std::vector<Element>, 3> atoms_;
};

/// NilGroupContext seen as a target group.
struct NilTarget {
  using Element = GroupElement;
  const NilGroupContext* ctx;

  Element identity() const { return ctx->identity(); }
  Element multiply(const Element& a, const Element& b) const {
    return ctx->multiply(a, b);
  }
  Element inverse(const Element& a) const { return ctx->inverse(a); }
  Element power(const Element& a, std::int64_t k) const {
    return ctx->power(a, k);
  }
};

struct U4Target {
  using Element = U4Element;
  PrimeField field;

  Element identity() const { return U4Element::identity(field); }
  Element multiply(const Element& a, const Element& b) const {
    return u4_multiply(a, b);
  }
  Element inverse(const Element& a) const { return u4_inverse(a); }
  Element power(const Element& a, std::int64_t k) const {
    return u4_power(a, k);
  }
};

/// Endomorphism of Omega-bar given by generator images, checked to respect
/// the surface relation on construction.
class GroupHomomorphismSpec {
 public:
  /// Throws InvalidHom when an image belongs to another context or the
  /// relation is not preserved, and, with check_automorphism, when the
  /// induced matrix on the degree-1 layer is singular.
  GroupHomomorphismSpec(ContextPtr ctx, std::vector<GroupElement> images,
                        bool check_automorphism = false);

  static GroupHomomorphismSpec identity(ContextPtr ctx);
  /// omega -> g omega g^-1
  static GroupHomomorphismSpec inner(ContextPtr ctx, const GroupElement& g);
  /// Generators missing from the list map to themselves.
  static GroupHomomorphismSpec from_words(
      ContextPtr ctx,
      const std::vector<std::pair<GeneratorSymbol, GroupWord>>& images,
      bool check_automorphism = false);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<GroupElement>& images() const noexcept {
    return push_.images();
  }
  const GroupElement& image(std::size_t position) const {
    return push_.images().at(position);
  }
  bool automorphism_checked() const noexcept { return automorphism_; }

  GroupElement apply(const GroupElement& a) const;
  /// (*this) after other.
  GroupHomomorphismSpec compose(const GroupHomomorphismSpec& other) const;
  /// k-fold composite, k >= 0.
  GroupHomomorphismSpec power(std::uint64_t k) const;
  bool is_identity() const;
  /// Column j holds v1 of the image of generator j.
  ModMatrix degree_one_matrix() const;

 private:
  ContextPtr ctx_;
  PushForward<NilTarget> push_;
  bool automorphism_;
};

/// Column j holds the degree-3 coordinates of (Phi.e_j) e_j^-1; none when
/// some such element has a nonzero coordinate of degree 1 or 2.
std::optional<ModMatrix> third_layer_columns(const GroupHomomorphismSpec& phi);

/// Throws ContextMismatch.
GroupElement apply_hom(const NilGroupContext& ctx,
                       const GroupHomomorphismSpec& spec, const GroupElement& a);

}  // namespace massey
