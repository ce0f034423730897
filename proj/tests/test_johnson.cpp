#include <gtest/gtest.h>

#include "massey/error.hpp"
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

CharacterTriple triple(const NilGroupContext& ctx, const char* a, const char* b,
                       const char* c) {
  auto d = [&](const char* n) {
    return Character::dual(
        ctx, {n[0] == 'x' ? GeneratorSymbol::Kind::X : GeneratorSymbol::Kind::Y,
              n[1] - '0'});
  };
  return {d(a), d(b), d(c)};
}

ModVector add(const PrimeField& f, ModVector a, const ModVector& b, Residue c = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.fma(a[i], c, b[i]);
  return a;
}

}  // namespace

TEST(PhiLambda, Examples) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const auto phi = build_phi_lambda(ctx);
  EXPECT_EQ(phi.apply(ctx->evaluate("x1")), ctx->evaluate("x1"));
  EXPECT_EQ(phi.apply(ctx->evaluate("x2")), ctx->evaluate("x2"));
  EXPECT_EQ(phi.apply(ctx->evaluate("y1")), ctx->evaluate("[[x1,x2],x2]^-8 y1"));
  EXPECT_EQ(phi.apply(ctx->evaluate("y2")), ctx->evaluate("[[x1,x2],x1]^8 y2"));
  EXPECT_TRUE(phi.apply(ctx->evaluate(ctx->relation_word())).is_identity());
  EXPECT_TRUE(phi.automorphism_checked());
  EXPECT_TRUE(phi.power(5).is_identity());
  EXPECT_FALSE(phi.is_identity());
  EXPECT_EQ(code_of([] { build_phi_lambda(build_context(5, 1, Flavor::Free)); }),
            ErrorCode::BadGenus);
}

TEST(PhiLambda, Genus3FixesThirdHandle) {
  const ContextPtr ctx = build_context(7, 3, Flavor::Surface);
  const auto phi = build_phi_lambda(ctx);
  EXPECT_EQ(phi.apply(ctx->evaluate("x3")), ctx->evaluate("x3"));
  EXPECT_EQ(phi.apply(ctx->evaluate("y3")), ctx->evaluate("y3"));
}

TEST(Tau3, Examples) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const Tau3Map zero = tau_3_ell(GroupHomomorphismSpec::identity(ctx));
  EXPECT_EQ(zero.matrix, ModMatrix(ctx->field(), 16, 4));

  const Tau3Map lam = tau_3_ell(build_phi_lambda(ctx));
  ModMatrix want(ctx->field(), 16, 4);
  const ModVector y1 = ctx->evaluate("[[x1,x2],x2]^-8").v3();
  const ModVector y2 = ctx->evaluate("[[x1,x2],x1]^8").v3();
  for (std::size_t q = 0; q < 16; ++q) {
    want(q, 1) = y1[q];
    want(q, 3) = y2[q];
  }
  EXPECT_EQ(lam.matrix, want);
}

TEST(Tau3, InnerByCommutatorIsBracket) {
  const ContextPtr ctx = build_context(7, 2, Flavor::Surface);
  const GroupElement g = ctx->evaluate("[x1,x2]");
  const Tau3Map tau = tau_3_ell(GroupHomomorphismSpec::inner(ctx, g));
  oracle::Sampler s(1);
  for (int i = 0; i < 100; ++i) {
    const GroupElement w = s.element(*ctx);
    EXPECT_EQ(tau.apply(*ctx, w), ctx->commutator(g, w));
  }
}

TEST(Tau3, NotInG3) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  // Conjugation by a generator moves others by degree-2 elements.
  EXPECT_EQ(code_of([&] {
              tau_3_ell(GroupHomomorphismSpec::inner(ctx, ctx->evaluate("x1")));
            }),
            ErrorCode::NotInG3);
  EXPECT_EQ(code_of([&] {
              tau_3_ell(GroupHomomorphismSpec::from_words(
                  ctx, {{{GeneratorSymbol::Kind::Y, 1}, parse_word("y1 x1")}}));
            }),
            ErrorCode::NotInG3);
}

TEST(Tau3, Multiplicative) {
  const ContextPtr ctx = build_context(11, 2, Flavor::Surface);
  const auto phi = build_phi_lambda(ctx);
  const Tau3Map tau = tau_3_ell(phi);
  oracle::Sampler s(2);
  for (int i = 0; i < 1000; ++i) {
    const GroupElement a = s.element(*ctx), b = s.element(*ctx);
    const GroupElement ab = ctx->multiply(a, b);
    EXPECT_EQ(tau.apply(*ctx, ab),
              ctx->multiply(tau.apply(*ctx, a), tau.apply(*ctx, b)));
    EXPECT_EQ(tau.apply(*ctx, ab), ctx->multiply(phi.apply(ab), ctx->inverse(ab)));
  }
}

TEST(Proposition, Examples) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const GroupElement y2 = ctx->evaluate("y2");
  const SemidirectContext lam(ctx, build_phi_lambda(ctx));
  const auto r = check_proposition(lam, triple(*ctx, "x1", "x2", "x1"), y2);
  EXPECT_TRUE(r.condition_i);
  EXPECT_TRUE(r.condition_ii);
  EXPECT_TRUE(r.condition_iii);
  EXPECT_TRUE(r.verdict());
  ASSERT_TRUE(r.h_value.has_value());
  EXPECT_EQ(r.h_value->value(), 1u);
  EXPECT_TRUE(r.note.empty());

  const SemidirectContext id(ctx, GroupHomomorphismSpec::identity(ctx));
  const auto r2 = check_proposition(id, triple(*ctx, "x1", "x2", "x1"), y2);
  EXPECT_FALSE(r2.condition_iii);
  EXPECT_FALSE(r2.verdict());

  const auto r3 = check_proposition(lam, triple(*ctx, "x1", "x1", "x1"), y2);
  EXPECT_FALSE(r3.condition_ii);
  EXPECT_FALSE(r3.note.empty());
}

TEST(Proposition, VerdictAcrossPrimesAndGenera) {
  for (std::int64_t p : {5, 7, 11, 13})
    for (int g : {2, 3}) {
      const ContextPtr ctx = build_context(p, g, Flavor::Surface);
      const SemidirectContext lam(ctx, build_phi_lambda(ctx));
      const auto r = check_proposition(lam, triple(*ctx, "x1", "x2", "x1"),
                                       ctx->evaluate("y2"));
      EXPECT_TRUE(r.verdict()) << p << " " << g << " " << r.note;
      ASSERT_TRUE(r.h_value.has_value());
      EXPECT_EQ(r.h_value->value(), 16 % p);
    }
}

TEST(TensorSpace, Dimensions) {
  const PrimeField f(5);
  for (std::size_t n : {2u, 4u, 6u}) {
    const TensorSpaceContext t(f, n);
    EXPECT_EQ(t.wedge2_dim(), n * (n - 1) / 2);
    EXPECT_EQ(t.quotient_dim(), (n * n * n - n) / 3);
    EXPECT_EQ(t.quotient_dim(), HallBasis(n).dimension(3));
  }
  EXPECT_EQ(TensorSpaceContext(f, 4).quotient_dim(), 20u);
  EXPECT_EQ(TensorSpaceContext(f, 6).quotient_dim(), 70u);
}

TEST(TensorSpace, Pairing) {
  const TensorSpaceContext t(PrimeField(7), 4);
  EXPECT_EQ(t.pairing(0, 1), 1u);
  EXPECT_EQ(t.pairing(1, 0), 6u);
  EXPECT_EQ(t.pairing(0, 0), 0u);
  EXPECT_EQ(t.pairing(0, 3), 0u);
  EXPECT_EQ(t.pairing(2, 3), 1u);
}

TEST(TensorSpace, ExpansionExamples) {
  const PrimeField f(7);
  const TensorSpaceContext t(f, 4);
  const ModVector x1 = t.basis_vector(0), y1 = t.basis_vector(1), x2 = t.basis_vector(2);
  const ModVector a = t.wedge(x1, y1), b = t.wedge(x1, x2);
  for (int sign : {1, -1}) {
    ModVector want = add(f, t.tensor(a, a), t.tensor(b, b), 4);
    want = add(f, want, t.tensor(a, b), f.reduce(2 * sign));
    want = add(f, want, t.tensor(b, a), f.reduce(2 * sign));
    EXPECT_EQ(wedge_square_expand(t, x1, y1, x2, sign), want);
  }
  EXPECT_EQ(wedge_square_expand(t, x1, y1, ModVector(4, 0), 1), t.tensor(a, a));
  EXPECT_EQ(wedge_square_expand(t, x1, x1, x2, 1),
            add(f, ModVector(t.wedge2_square_dim(), 0), t.tensor(b, b), 4));
}

TEST(TensorSpace, ProjectW) {
  const PrimeField f(5);
  const TensorSpaceContext t(f, 4);
  const ModVector x1 = t.basis_vector(0), x2 = t.basis_vector(2);
  const ModVector b = t.wedge(x1, x2);
  // Each trailing H slice is reduced modulo the embedded wedge^3 H.
  const ModVector got = project_w(t, t.tensor(b, b));
  ModVector want = add(f, t.tensor(t.reduce(t.tensor(b, x1)), x2),
                       t.tensor(t.reduce(t.tensor(b, x2)), x1), f.neg(1));
  EXPECT_EQ(got, want);
  EXPECT_EQ(project_w(t, ModVector(t.wedge2_square_dim(), 0)),
            ModVector(t.wedge2_h_dim() * 4, 0));
}

TEST(TensorSpace, JacobiLiesInWedge3) {
  const PrimeField f(11);
  const TensorSpaceContext t(f, 4);
  oracle::Sampler s(3);
  for (int i = 0; i < 100; ++i) {
    ModVector a(4), b(4), c(4);
    for (auto* v : {&a, &b, &c})
      for (auto& x : *v) x = s.residue(f);
    EXPECT_EQ(t.reduce(t.embed_wedge3(a, b, c)), ModVector(t.wedge2_h_dim(), 0));
  }
}

TEST(TensorSpace, ZeroMapsToZero) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const TensorSpaceContext t(ctx->field(), 4);
  EXPECT_EQ(tensor_to_hom(t, *ctx, ModVector(t.wedge2_h_dim() * 4, 0)).matrix,
            ModMatrix(ctx->field(), 16, 4));
}

TEST(TensorSpace, MoritaChain) {
  for (std::int64_t p : {5, 13})
    for (int g : {2, 3}) {
      const ContextPtr ctx = build_context(p, g, Flavor::Surface);
      const PrimeField& f = ctx->field();
      const TensorSpaceContext t(f, ctx->rank());
      const ModVector b = t.wedge(t.basis_vector(0), t.basis_vector(2));
      ModVector eight = t.tensor(b, b);
      for (auto& x : eight) x = f.mul(x, 8);
      const Tau3Map lambda1 = tensor_to_hom(t, *ctx, project_w(t, eight));
      EXPECT_EQ(lambda1.matrix, tau_3_ell(build_phi_lambda(ctx)).matrix);
    }
}
