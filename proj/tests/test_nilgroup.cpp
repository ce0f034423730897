#include <gtest/gtest.h>

#include "massey/error.hpp"
#include "massey/nilgroup.hpp"
#include "tensor_algebra.hpp"
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

std::array<std::size_t, 3> dims(std::size_t a, std::size_t b, std::size_t c) {
  return {a, b, c};
}

}  // namespace

TEST(HallBasis, CountsMatchEnumeration) {
  for (std::size_t n : {2u, 3u, 4u, 5u, 6u}) {
    const HallBasis b(n);
    for (int d = 1; d <= 3; ++d) {
      EXPECT_EQ(b.dimension(d), oracle::hall_count(n, d));
      EXPECT_EQ(b.dimension(d), oracle::witt_dimension(n, d));
    }
  }
  EXPECT_EQ(HallBasis(4).dimension(3), 20u);
  EXPECT_EQ(HallBasis(6).dimension(2), 15u);
  EXPECT_EQ(HallBasis(6).dimension(3), 70u);
}

TEST(FreeLieRing, AntisymmetryAndJacobi) {
  const PrimeField f(7);
  const FreeLieRing lie(f, 4);
  oracle::Sampler s(1);
  auto random_lie = [&](bool degree1_only) {
    LieVector v = lie.zero();
    for (auto& x : v.d1) x = s.residue(f);
    if (!degree1_only)
      for (auto& x : v.d2) x = s.residue(f);
    return v;
  };
  for (int i = 0; i < 200; ++i) {
    const LieVector a = random_lie(false), b = random_lie(false), c = random_lie(true);
    EXPECT_EQ(lie.bracket(a, b), lie.scale(lie.bracket(b, a), f.neg(1)));
    EXPECT_TRUE(lie.bracket(a, a).is_zero());
    const LieVector j = lie.add(
        lie.add(lie.bracket(lie.bracket(a, b), c), lie.bracket(lie.bracket(b, c), a)),
        lie.bracket(lie.bracket(c, a), b));
    EXPECT_TRUE(j.is_zero());
  }
}

TEST(FreeLieRing, TripleBracketMatchesTensorAlgebra) {
  const PrimeField f(11);
  const std::size_t n = 4;
  const FreeLieRing lie(f, n);
  const test_support::TensorAlgebra T(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto want =
            T.bracket(T.bracket(T.letter(i), T.letter(j)), T.letter(k));
        EXPECT_EQ(T.embed(lie.basis(), lie.triple_bracket(i, j, k)), want);
      }
}

TEST(BuildContext, Examples) {
  EXPECT_EQ(build_context(5, 2, Flavor::Surface)->dims(), dims(4, 5, 16));
  EXPECT_EQ(build_context(5, 2, Flavor::Surface)->order_exponent(), 25u);
  EXPECT_EQ(build_context(5, 3, Flavor::Surface)->dims(), dims(6, 14, 64));
  EXPECT_EQ(NilGroupContext::build_free(5, 2)->dims(), dims(2, 1, 2));
  EXPECT_EQ(build_context(5, 2, Flavor::Free)->dims(), dims(4, 6, 20));
  EXPECT_EQ(build_context(7, 1, Flavor::Free)->dims(), dims(2, 1, 2));
  EXPECT_EQ(code_of([] { build_context(4, 2, Flavor::Surface); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { build_context(3, 2, Flavor::Surface); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { build_context(5, 1, Flavor::Surface); }), ErrorCode::BadGenus);
  EXPECT_EQ(code_of([] { build_context(5, 0, Flavor::Free); }), ErrorCode::BadGenus);
  EXPECT_EQ(code_of([] { parse_flavor("torus"); }), ErrorCode::PreconditionFailed);
}

TEST(BuildContext, RelationIdealRanks) {
  for (int g : {2, 3}) {
    const ContextPtr ctx = build_context(7, g, Flavor::Surface);
    const std::size_t n = 2 * g;
    ASSERT_NE(ctx->relation_ideal(), nullptr);
    EXPECT_EQ(ctx->relation_ideal()->rank(), 1 + n);
  }
}

class BchOracle : public ::testing::TestWithParam<std::pair<int, std::size_t>> {};

TEST_P(BchOracle, ProductIsLogOfExpProduct) {
  const auto [p, n] = GetParam();
  const ContextPtr ctx = NilGroupContext::build_free(p, n);
  const test_support::TensorAlgebra T(ctx->field(), n);
  const HallBasis& basis = ctx->lie().basis();
  oracle::Sampler s(p * 100 + n);
  for (int i = 0; i < 300; ++i) {
    const GroupElement a = s.element(*ctx), b = s.element(*ctx);
    const auto want = T.log(T.mul(T.exp(T.embed(basis, ctx->to_lie(a))),
                                  T.exp(T.embed(basis, ctx->to_lie(b)))));
    EXPECT_EQ(T.embed(basis, ctx->to_lie(ctx->multiply(a, b))), want);
    const auto k = s.integer(-9, 9);
    EXPECT_EQ(T.embed(basis, ctx->to_lie(ctx->power(a, k))),
              T.scale(T.embed(basis, ctx->to_lie(a)), ctx->field().reduce(k)));
  }
}

INSTANTIATE_TEST_SUITE_P(Free, BchOracle,
                         ::testing::Values(std::pair{5, std::size_t{2}},
                                           std::pair{7, std::size_t{3}},
                                           std::pair{11, std::size_t{4}}));

TEST(Surface, ProductIsReductionOfFreeProduct) {
  const ContextPtr surf = build_context(7, 2, Flavor::Surface);
  const ContextPtr free = build_context(7, 2, Flavor::Free);
  oracle::Sampler s(3);
  for (int i = 0; i < 300; ++i) {
    const GroupElement a = s.element(*surf), b = s.element(*surf);
    const GroupElement fa = free->from_lie(surf->to_lie(a));
    const GroupElement fb = free->from_lie(surf->to_lie(b));
    EXPECT_EQ(surf->multiply(a, b), surf->from_lie(free->to_lie(free->multiply(fa, fb))));
  }
}

TEST(GroupLaw, Examples) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const GroupElement x1 = ctx->evaluate("x1"), y1 = ctx->evaluate("y1"),
                     x2 = ctx->evaluate("x2");
  oracle::Sampler s(4);
  const GroupElement a = s.element(*ctx);
  EXPECT_TRUE(ctx->multiply(a, ctx->inverse(a)).is_identity());
  const GroupElement sq = ctx->multiply(x1, x1);
  EXPECT_EQ(sq.v1(), ModVector({2, 0, 0, 0}));
  EXPECT_EQ(sq.v2(), ModVector(5, 0));
  EXPECT_EQ(sq.v3(), ModVector(16, 0));
  EXPECT_EQ(ctx->multiply(ctx->multiply(x1, y1), x2),
            ctx->multiply(x1, ctx->multiply(y1, x2)));
}

TEST(GroupLaw, AxiomsOnRandomTriples) {
  for (int g : {2, 3}) {
    const ContextPtr ctx = build_context(5, g, Flavor::Surface);
    oracle::Sampler s(5 + g);
    const GroupElement id = ctx->identity();
    for (int i = 0; i < 2000; ++i) {
      const GroupElement a = s.element(*ctx), b = s.element(*ctx), c = s.element(*ctx);
      ASSERT_EQ(ctx->multiply(ctx->multiply(a, b), c),
                ctx->multiply(a, ctx->multiply(b, c)));
      ASSERT_EQ(ctx->multiply(a, id), a);
      ASSERT_EQ(ctx->multiply(ctx->inverse(a), a), id);
    }
    for (int i = 0; i < 200; ++i)
      EXPECT_TRUE(ctx->power(s.element(*ctx), 5).is_identity());
  }
}

TEST(Commutator, Examples) {
  const ContextPtr free2 = NilGroupContext::build_free(5, 2);
  const GroupElement x1 = free2->generator(0), y1 = free2->generator(1);
  EXPECT_TRUE(free2->commutator(x1, x1).is_identity());
  const GroupElement c = free2->commutator(x1, y1);
  EXPECT_EQ(c.v1(), ModVector({0, 0}));
  // The single degree-2 atom is [y1, x1].
  EXPECT_EQ(c.v2(), ModVector({4}));

  for (int g : {2, 3}) {
    const ContextPtr ctx = build_context(7, g, Flavor::Surface);
    EXPECT_TRUE(ctx->evaluate(ctx->relation_word()).is_identity());
    EXPECT_TRUE(ctx->evaluate("[x1,y1] [x2,y2]" + std::string(g == 3 ? " [x3,y3]" : ""))
                    .is_identity());
  }
}

TEST(Commutator, DegreeTwoPartIsLieBracket) {
  const ContextPtr ctx = build_context(11, 2, Flavor::Free);
  const FreeLieRing& lie = ctx->lie();
  oracle::Sampler s(6);
  for (int i = 0; i < 200; ++i) {
    const GroupElement a = s.element(*ctx), b = s.element(*ctx);
    EXPECT_EQ(ctx->to_lie(ctx->commutator(a, b)).d2,
              lie.bracket(ctx->to_lie(a), ctx->to_lie(b)).d2);
  }
}

TEST(Evaluate, Examples) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  EXPECT_TRUE(ctx->evaluate("1").is_identity());
  const GroupElement t = ctx->evaluate("[[x1,x2],x1]");
  EXPECT_FALSE(t.is_identity());
  EXPECT_TRUE(ctx->lcs_member(t, 3));
  EXPECT_EQ(code_of([&] { ctx->evaluate("x3"); }), ErrorCode::UnknownGenerator);
  // Homomorphic in concatenation.
  EXPECT_EQ(ctx->evaluate("x1 [y1,x2]^3 y2^-2"),
            ctx->multiply(ctx->evaluate("x1"),
                          ctx->multiply(ctx->evaluate("[y1,x2]^3"),
                                        ctx->evaluate("y2^-2"))));
  EXPECT_EQ(ctx->evaluate("(x1 y1)^2"), ctx->evaluate("x1 y1 x1 y1"));
}

TEST(Evaluate, RelationBracketsVanishInSurface) {
  const ContextPtr ctx = build_context(7, 2, Flavor::Surface);
  for (const char* w : {"[[x1,y1] [x2,y2],x1]", "[[x1,y1] [x2,y2],y1]",
                        "[[x1,y1] [x2,y2],x2]", "[[x1,y1] [x2,y2],y2]"})
    EXPECT_TRUE(ctx->evaluate(w).is_identity()) << w;
}

TEST(Lcs, Examples) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const GroupElement c = ctx->evaluate("[x1,y1]");
  EXPECT_TRUE(ctx->lcs_member(c, 2));
  EXPECT_FALSE(ctx->lcs_member(c, 3));
  const GroupElement p = ctx->evaluate("x1^5");
  for (int i = 1; i <= 4; ++i) EXPECT_TRUE(ctx->lcs_member(p, i));
  EXPECT_TRUE(ctx->lcs_member(ctx->evaluate("[[x1,x2],x1]"), 3));
  EXPECT_FALSE(ctx->lcs_member(ctx->evaluate("x1"), 2));
  EXPECT_TRUE(ctx->lcs_member(ctx->evaluate("x1"), 1));
}

TEST(Lcs, CommutatorsSpanTheLayers) {
  for (int g : {2, 3}) {
    const ContextPtr ctx = build_context(7, g, Flavor::Surface);
    const std::size_t n = ctx->rank();
    ModMatrix d2(ctx->field(), 0, ctx->dims()[1]);
    ModMatrix d3(ctx->field(), 0, ctx->dims()[2]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const GroupElement c = ctx->commutator(ctx->generator(i), ctx->generator(j));
        EXPECT_TRUE(ctx->lcs_member(c, 2));
        d2.append_row(c.v2());
        for (std::size_t k = 0; k < n; ++k) {
          const GroupElement t = ctx->commutator(c, ctx->generator(k));
          EXPECT_TRUE(ctx->lcs_member(t, 3));
          d3.append_row(t.v3());
        }
      }
    EXPECT_EQ(rank(d2), ctx->dims()[1]);
    EXPECT_EQ(rank(d3), ctx->dims()[2]);
  }
}

TEST(NormalForm, Examples) {
  const ContextPtr ctx = build_context(7, 2, Flavor::Surface);
  EXPECT_TRUE(ctx->normal_form(ctx->identity()).empty());
  const GroupElement xy = ctx->multiply(ctx->evaluate("x1"), ctx->evaluate("y1"));
  const auto nf = ctx->normal_form(xy);
  ASSERT_GE(nf.size(), 2u);
  EXPECT_EQ(nf[0].atom.degree, 1);
  EXPECT_EQ(nf[0].exponent, 1u);
  EXPECT_EQ(nf[1].atom.degree, 1);
  EXPECT_EQ(ctx->from_normal_form(nf), xy);

  const GroupElement t = ctx->evaluate("[[x1,x2],x1]^3 [[y1,y2],x1]");
  for (const auto& factor : ctx->normal_form(t)) {
    EXPECT_EQ(factor.atom.degree, 3);
    EXPECT_EQ(factor.exponent, t.v3()[factor.quotient_position]);
  }
}

TEST(NormalForm, RoundTrips) {
  for (int g : {2, 3}) {
    const ContextPtr ctx = build_context(11, g, Flavor::Surface);
    oracle::Sampler s(7 + g);
    for (int i = 0; i < 300; ++i) {
      const GroupElement a = s.element(*ctx);
      EXPECT_EQ(ctx->from_normal_form(ctx->normal_form(a)), a);
      EXPECT_EQ(ctx->evaluate(ctx->to_word(a)), a);
    }
  }
}

TEST(Context, MismatchIsRejected) {
  const ContextPtr a = build_context(5, 2, Flavor::Surface);
  const ContextPtr b = build_context(5, 2, Flavor::Surface);
  EXPECT_EQ(code_of([&] { a->multiply(a->generator(0), b->generator(0)); }),
            ErrorCode::ContextMismatch);
  EXPECT_EQ(code_of([&] { a->element({1, 2}, {}, {}); }), ErrorCode::DimensionMismatch);
}
