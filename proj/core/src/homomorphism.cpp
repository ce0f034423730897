#include "massey/homomorphism.hpp"

namespace massey {
namespace {

std::vector<GroupElement> checked_images(const ContextPtr& ctx,
                                         std::vector<GroupElement> images) {
  if (!ctx) throw Error(ErrorCode::InvalidHom, "null context");
  if (images.size() != ctx->rank())
    throw Error(ErrorCode::InvalidHom,
                "expected " + std::to_string(ctx->rank()) + " images, got " +
                    std::to_string(images.size()));
  for (std::size_t j = 0; j < images.size(); ++j)
    if (images[j].context_id() != ctx->id())
      throw Error(ErrorCode::InvalidHom,
                  "image of " + GeneratorSymbol::from_position(j).name() +
                      " lives in another context");
  if (ctx->flavor() == Flavor::Surface) {
    const GroupElement r =
        evaluate_in(NilTarget{ctx.get()}, images, ctx->relation_word());
    if (!r.is_identity())
      throw Error(ErrorCode::InvalidHom,
                  "images do not satisfy the surface relation");
  }
  return images;
}

}  // namespace

GroupHomomorphismSpec::GroupHomomorphismSpec(ContextPtr ctx,
                                             std::vector<GroupElement> images,
                                             bool check_automorphism)
    : ctx_(std::move(ctx)),
      push_(*ctx_, NilTarget{ctx_.get()},
            checked_images(ctx_, std::move(images))),
      automorphism_(check_automorphism) {
  if (check_automorphism && rank(degree_one_matrix()) != ctx_->rank())
    throw Error(ErrorCode::InvalidHom,
                "not an automorphism: degree-1 matrix is singular");
}

GroupHomomorphismSpec GroupHomomorphismSpec::identity(ContextPtr ctx) {
  std::vector<GroupElement> images;
  for (std::size_t j = 0; j < ctx->rank(); ++j)
    images.push_back(ctx->generator(j));
  return GroupHomomorphismSpec(std::move(ctx), std::move(images), true);
}

GroupHomomorphismSpec GroupHomomorphismSpec::inner(ContextPtr ctx,
                                                   const GroupElement& g) {
  ctx->check(g);
  const GroupElement g_inv = ctx->inverse(g);
  std::vector<GroupElement> images;
  for (std::size_t j = 0; j < ctx->rank(); ++j)
    images.push_back(
        ctx->multiply(ctx->multiply(g, ctx->generator(j)), g_inv));
  return GroupHomomorphismSpec(std::move(ctx), std::move(images), true);
}

GroupHomomorphismSpec GroupHomomorphismSpec::from_words(
    ContextPtr ctx,
    const std::vector<std::pair<GeneratorSymbol, GroupWord>>& images,
    bool check_automorphism) {
  std::vector<GroupElement> out;
  for (std::size_t j = 0; j < ctx->rank(); ++j)
    out.push_back(ctx->generator(j));
  for (const auto& [symbol, word] : images) {
    if (symbol.position() >= ctx->rank())
      throw Error(ErrorCode::UnknownGenerator,
                  symbol.name() + " is not a generator of this group");
    out[symbol.position()] = ctx->evaluate(word);
  }
  return GroupHomomorphismSpec(std::move(ctx), std::move(out),
                               check_automorphism);
}

GroupElement GroupHomomorphismSpec::apply(const GroupElement& a) const {
  ctx_->check(a);
  return push_(a);
}

GroupHomomorphismSpec GroupHomomorphismSpec::compose(
    const GroupHomomorphismSpec& other) const {
  if (other.ctx_->id() != ctx_->id())
    throw Error(ErrorCode::ContextMismatch, "composing across contexts");
  std::vector<GroupElement> images;
  for (const GroupElement& e : other.images()) images.push_back(apply(e));
  return GroupHomomorphismSpec(ctx_, std::move(images),
                               automorphism_ && other.automorphism_);
}

GroupHomomorphismSpec GroupHomomorphismSpec::power(std::uint64_t k) const {
  GroupHomomorphismSpec out = identity(ctx_);
  for (std::uint64_t i = 0; i < k; ++i) out = compose(out);
  return out;
}

bool GroupHomomorphismSpec::is_identity() const {
  for (std::size_t j = 0; j < ctx_->rank(); ++j)
    if (!(images()[j] == ctx_->generator(j))) return false;
  return true;
}

ModMatrix GroupHomomorphismSpec::degree_one_matrix() const {
  const std::size_t n = ctx_->rank();
  ModMatrix m(ctx_->field(), n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = images()[j].v1()[i];
  return m;
}

std::optional<ModMatrix> third_layer_columns(
    const GroupHomomorphismSpec& phi) {
  const NilGroupContext& ctx = *phi.context();
  ModMatrix out(ctx.field(), ctx.dims()[2], ctx.rank());
  for (std::size_t j = 0; j < ctx.rank(); ++j) {
    const GroupElement d =
        ctx.multiply(phi.image(j), ctx.inverse(ctx.generator(j)));
    if (!ctx.lcs_member(d, 3)) return std::nullopt;
    for (std::size_t q = 0; q < d.v3().size(); ++q) out(q, j) = d.v3()[q];
  }
  return out;
}

GroupElement apply_hom(const NilGroupContext& ctx,
                       const GroupHomomorphismSpec& spec,
                       const GroupElement& a) {
  if (spec.context()->id() != ctx.id())
    throw Error(ErrorCode::ContextMismatch,
                "homomorphism belongs to another context");
  return spec.apply(a);
}

}  // namespace massey
