#include <gtest/gtest.h>

#include "massey/error.hpp"
#include "massey/homomorphism.hpp"
#include "massey/johnson.hpp"
#include "verify/oracles.hpp"

using namespace massey;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::PreconditionFailed;
}

GeneratorSymbol sym(const char* name) {
  return {name[0] == 'x' ? GeneratorSymbol::Kind::X : GeneratorSymbol::Kind::Y,
          name[1] - '0'};
}

}  // namespace

TEST(ApplyHom, IdentitySpec) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const auto id = GroupHomomorphismSpec::identity(ctx);
  oracle::Sampler s(1);
  for (int i = 0; i < 100; ++i) {
    const GroupElement a = s.element(*ctx);
    EXPECT_EQ(apply_hom(*ctx, id, a), a);
  }
  EXPECT_TRUE(id.is_identity());
}

TEST(ApplyHom, CentralShiftOfGenerator) {
  const ContextPtr ctx = build_context(7, 2, Flavor::Surface);
  const GroupElement c = ctx->evaluate("[[y1,x2],y2]^3");
  const auto spec = GroupHomomorphismSpec::from_words(
      ctx, {{sym("x1"), parse_word("x1 [[y1,x2],y2]^3")}});
  EXPECT_EQ(spec.apply(ctx->evaluate("x1")), ctx->multiply(ctx->evaluate("x1"), c));
  EXPECT_EQ(spec.apply(ctx->evaluate("y2")), ctx->evaluate("y2"));
}

TEST(ApplyHom, PhiLambdaOnY2) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const auto phi = build_phi_lambda(ctx);
  EXPECT_EQ(phi.apply(ctx->evaluate("y2")), ctx->evaluate("y2 [[x1,x2],x1]^8"));
  EXPECT_EQ(phi.apply(ctx->evaluate("x1")), ctx->evaluate("x1"));
}

TEST(ApplyHom, IsHomomorphism) {
  const ContextPtr ctx = build_context(7, 2, Flavor::Surface);
  oracle::Sampler s(2);
  const std::vector<GroupHomomorphismSpec> specs{
      build_phi_lambda(ctx),
      GroupHomomorphismSpec::inner(ctx, s.element(*ctx)),
      // Dehn twist about x1.
      GroupHomomorphismSpec::from_words(ctx, {{sym("y1"), parse_word("y1 x1")}}),
      // Swap the two handles.
      GroupHomomorphismSpec::from_words(ctx, {{sym("x1"), parse_word("x2")},
                                              {sym("y1"), parse_word("y2")},
                                              {sym("x2"), parse_word("x1")},
                                              {sym("y2"), parse_word("y1")}})};
  for (const auto& spec : specs)
    for (int i = 0; i < 1000; ++i) {
      const GroupElement a = s.element(*ctx), b = s.element(*ctx);
      ASSERT_EQ(spec.apply(ctx->multiply(a, b)),
                ctx->multiply(spec.apply(a), spec.apply(b)));
    }
}

TEST(ApplyHom, InnerIsConjugation) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  oracle::Sampler s(3);
  const GroupElement g = s.element(*ctx);
  const auto inner = GroupHomomorphismSpec::inner(ctx, g);
  for (int i = 0; i < 100; ++i) {
    const GroupElement a = s.element(*ctx);
    EXPECT_EQ(inner.apply(a), ctx->multiply(ctx->multiply(g, a), ctx->inverse(g)));
  }
}

TEST(ApplyHom, RejectsRelationBreakingImages) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  EXPECT_EQ(code_of([&] {
              GroupHomomorphismSpec::from_words(ctx, {{sym("x1"), parse_word("x1^2")}});
            }),
            ErrorCode::InvalidHom);
  // Trivial map preserves the relation but is no automorphism.
  EXPECT_EQ(code_of([&] {
              GroupHomomorphismSpec::from_words(ctx,
                                                {{sym("x1"), parse_word("1")},
                                                 {sym("y1"), parse_word("1")},
                                                 {sym("x2"), parse_word("1")},
                                                 {sym("y2"), parse_word("1")}},
                                                true);
            }),
            ErrorCode::InvalidHom);
  const ContextPtr other = build_context(5, 2, Flavor::Surface);
  EXPECT_EQ(code_of([&] {
              apply_hom(*other, GroupHomomorphismSpec::identity(ctx), other->identity());
            }),
            ErrorCode::ContextMismatch);
}

TEST(ApplyHom, ComposeAndPower) {
  const ContextPtr ctx = build_context(7, 2, Flavor::Surface);
  const auto twist =
      GroupHomomorphismSpec::from_words(ctx, {{sym("y1"), parse_word("y1 x1")}});
  oracle::Sampler s(4);
  const GroupElement a = s.element(*ctx);
  EXPECT_EQ(twist.compose(twist).apply(a), twist.apply(twist.apply(a)));
  EXPECT_EQ(twist.power(3).apply(a), twist.apply(twist.apply(twist.apply(a))));
  EXPECT_TRUE(twist.power(7).is_identity());
  EXPECT_FALSE(twist.power(3).is_identity());
  EXPECT_TRUE(twist.power(0).is_identity());
}

TEST(ThirdLayerColumns, Detection) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  EXPECT_TRUE(third_layer_columns(build_phi_lambda(ctx)).has_value());
  EXPECT_TRUE(third_layer_columns(
                  GroupHomomorphismSpec::inner(ctx, ctx->evaluate("[x1,x2]")))
                  .has_value());
  EXPECT_FALSE(third_layer_columns(GroupHomomorphismSpec::inner(ctx, ctx->evaluate("x1")))
                   .has_value());
}

TEST(PushForward, U4ImagesMatchLetterByLetter) {
  // For images that respect the relation, the collected evaluation agrees
  // with evaluating words letter by letter.
  const ContextPtr ctx = build_context(7, 2, Flavor::Surface);
  const PrimeField& f = ctx->field();
  const std::vector<U4Element> images{
      U4Element::make(f, 1, 0, 1, 0, 0, 0), U4Element::make(f, 0, 0, 0, 0, 0, 0),
      U4Element::make(f, 0, 1, 0, 0, 0, 0), U4Element::make(f, 0, 0, 0, 0, 0, 0)};
  ASSERT_TRUE(evaluate_in(U4Target{f}, images, ctx->relation_word()).is_identity());
  const PushForward<U4Target> push(*ctx, U4Target{f}, images);
  for (const char* w : {"x1 x2", "[[x1,x2],x1]^3 y1", "(x1 x2^2)^-1 [x2,x1]"})
    EXPECT_EQ(push(ctx->evaluate(w)), evaluate_in(U4Target{f}, images, parse_word(w)))
        << w;
}
