#include <gtest/gtest.h>

#include "massey/error.hpp"
#include "massey/massey.hpp"
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

Character dual(const NilGroupContext& ctx, const char* name) {
  return Character::dual(
      ctx, {name[0] == 'x' ? GeneratorSymbol::Kind::X : GeneratorSymbol::Kind::Y,
            name[1] - '0'});
}

CharacterTriple triple(const NilGroupContext& ctx, const char* a, const char* b,
                       const char* c) {
  return {dual(ctx, a), dual(ctx, b), dual(ctx, c)};
}

class MasseyTest : public ::testing::Test {
 protected:
  ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const NilGroupContext& c = *ctx;
};

}  // namespace

TEST_F(MasseyTest, CupExamples) {
  EXPECT_TRUE(cup_vanishes(c, dual(c, "x1"), dual(c, "x2")));
  EXPECT_FALSE(cup_vanishes(c, dual(c, "x1"), dual(c, "y1")));
  oracle::Sampler s(1);
  for (int i = 0; i < 20; ++i)
    EXPECT_TRUE(cup_vanishes(c, Character::zero(c), s.character(c)));
  EXPECT_TRUE(oracle::u3_extension_exists(c, dual(c, "x1"), dual(c, "x2")));
  EXPECT_FALSE(oracle::u3_extension_exists(c, dual(c, "x1"), dual(c, "y1")));
}

TEST_F(MasseyTest, CupMatchesBruteForce) {
  oracle::Sampler s(2);
  int agree_true = 0;
  for (int i = 0; i < 60; ++i) {
    Character a = s.character(c), b = s.character(c);
    if (i % 2) s.make_cup_orthogonal(c, a, b);
    const bool cup = cup_vanishes(c, a, b);
    agree_true += cup;
    EXPECT_EQ(cup, oracle::u3_extension_exists(c, a, b));
  }
  EXPECT_GT(agree_true, 0);
  EXPECT_LT(agree_true, 60);
  const ContextPtr free = build_context(5, 2, Flavor::Free);
  EXPECT_TRUE(cup_vanishes(*free, dual(*free, "x1"), dual(*free, "y1")));
}

TEST_F(MasseyTest, NonemptyExamples) {
  const auto sys = massey_nonempty(c, triple(c, "x1", "x2", "x1"));
  ASSERT_TRUE(sys.has_value());
  EXPECT_FALSE(massey_nonempty(c, triple(c, "x1", "y1", "x1")).has_value());
  const CharacterTriple zero{Character::zero(c), Character::zero(c), Character::zero(c)};
  const auto z = massey_nonempty(c, zero);
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->kappa12, ModVector(4, 0));
  EXPECT_EQ(z->kappa23, ModVector(4, 0));
}

TEST_F(MasseyTest, ContainsZeroExamples) {
  const CharacterTriple chi = triple(c, "x1", "x2", "x1");
  const auto rho = contains_zero(c, chi);
  ASSERT_TRUE(rho.has_value());
  EXPECT_TRUE(rho->relation_image(c).is_identity());
  for (std::size_t j = 0; j < c.rank(); ++j) {
    EXPECT_EQ(rho->images[j].a1.value(), chi.chi1.values[j]);
    EXPECT_EQ(rho->images[j].a2.value(), chi.chi2.values[j]);
    EXPECT_EQ(rho->images[j].a3.value(), chi.chi3.values[j]);
  }
  // rho(x1) has superdiagonal (1, 0, 1), rho(x2) has (0, 1, 0).
  EXPECT_EQ(rho->images[0].a1.value(), 1u);
  EXPECT_EQ(rho->images[0].a3.value(), 1u);
  EXPECT_EQ(rho->images[2].a2.value(), 1u);

  const CharacterTriple zero{Character::zero(c), Character::zero(c), Character::zero(c)};
  const auto z = contains_zero(c, zero);
  ASSERT_TRUE(z.has_value());
  for (const U4Element& m : z->images) EXPECT_TRUE(m.is_identity());

  EXPECT_FALSE(contains_zero(c, triple(c, "x1", "y1", "x1")).has_value());
}

TEST_F(MasseyTest, WitnessesAreValidAndMonotone) {
  oracle::Sampler s(3);
  int lifts = 0;
  for (int i = 0; i < 200; ++i) {
    CharacterTriple chi{s.character(c), s.character(c), s.character(c)};
    s.make_cup_orthogonal(c, chi.chi1, chi.chi2);
    if (i % 2) s.make_cup_orthogonal(c, chi.chi3, chi.chi2);
    const auto rho = contains_zero(c, chi);
    if (!rho) continue;
    ++lifts;
    EXPECT_TRUE(rho->relation_image(c).is_identity());
    EXPECT_TRUE(massey_nonempty(c, chi).has_value());
  }
  EXPECT_GT(lifts, 0);
}

TEST_F(MasseyTest, LiftFamilyPointsAreLifts) {
  oracle::Sampler s(4);
  const auto family = lift_family(c, s.good_triple(c));
  ASSERT_TRUE(family.has_value());
  EXPECT_GT(family->dimension(), 0u);
  for (int i = 0; i < 50; ++i) {
    ModVector coeffs(family->dimension());
    for (auto& x : coeffs) x = s.residue(c.field());
    EXPECT_TRUE(family->at(coeffs).relation_image(c).is_identity());
  }
}

TEST_F(MasseyTest, HExamples) {
  const CharacterTriple chi = triple(c, "x1", "x2", "x1");
  EXPECT_EQ(h_ell(c, chi, c.evaluate("[[x1,x2],x1]")).value(), 2u);
  EXPECT_EQ(h_ell(c, chi, c.evaluate("[[x2,x1],x1]")).value(), 3u);
  EXPECT_EQ(h_ell(c, chi, c.evaluate("[[y1,y2],y1]")).value(), 0u);
  EXPECT_EQ(h_ell(c, chi, c.evaluate("[[x1,x2],x1]^8")).value(), 1u);  // 16 mod 5
  EXPECT_EQ(code_of([&] { h_ell(c, chi, c.evaluate("x1")); }), ErrorCode::NotInThirdLayer);
  EXPECT_EQ(code_of([&] { h_ell(c, chi, c.evaluate("[x1,x2]")); }),
            ErrorCode::NotInThirdLayer);
  EXPECT_EQ(code_of([&] {
              h_ell(c, triple(c, "x1", "y1", "x1"), c.evaluate("[[x1,x2],x1]"));
            }),
            ErrorCode::PreconditionFailed);
}

TEST_F(MasseyTest, HIsAdditiveOnThirdLayer) {
  oracle::Sampler s(5);
  const CharacterTriple chi = s.good_triple(c);
  const auto rho = contains_zero(c, chi);
  ASSERT_TRUE(rho.has_value());
  const PrimeField& f = c.field();
  for (int i = 0; i < 100; ++i) {
    ModVector a(16), b(16);
    for (auto& x : a) x = s.residue(f);
    for (auto& x : b) x = s.residue(f);
    const GroupElement ea = c.element(ModVector(4, 0), ModVector(5, 0), a);
    const GroupElement eb = c.element(ModVector(4, 0), ModVector(5, 0), b);
    EXPECT_EQ(h_ell(c, *rho, c.multiply(ea, eb)),
              h_ell(c, *rho, ea) + h_ell(c, *rho, eb));
  }
}

TEST_F(MasseyTest, CDetExamples) {
  const CharacterTriple chi = triple(c, "x1", "x2", "x1");
  const GroupElement x1 = c.evaluate("x1"), x2 = c.evaluate("x2"), y2 = c.evaluate("y2");
  EXPECT_EQ(c_det(c, chi, x1, x2, x1).value(), 2u);
  EXPECT_TRUE(c_det(c, chi, x2, x2, x1).is_zero());
  EXPECT_TRUE(c_det(c, chi, x1, x2, y2).is_zero());
  const auto [d12, d23] = minors(c, chi, x1, x2);
  EXPECT_EQ(d12, 1u);
  EXPECT_EQ(d23, 4u);
}

TEST_F(MasseyTest, HEqualsCDetOnGeneratorAtoms) {
  oracle::Sampler s(6);
  for (int t = 0; t < 5; ++t) {
    const CharacterTriple chi = s.good_triple(c, t % 4);
    const auto rho = contains_zero(c, chi);
    ASSERT_TRUE(rho.has_value());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
          const GroupElement a = c.generator(i), b = c.generator(j), g = c.generator(k);
          EXPECT_EQ(h_ell(c, *rho, c.commutator(c.commutator(a, b), g)),
                    c_det(c, chi, a, b, g));
        }
  }
}

TEST_F(MasseyTest, NondegenerateExamples) {
  EXPECT_TRUE(nondegenerate(c, triple(c, "x1", "x2", "x1")));
  EXPECT_FALSE(nondegenerate(c, triple(c, "x1", "x1", "x1")));
  CharacterTriple chi = triple(c, "x1", "x2", "x1");
  chi.chi3 = Character::zero(c);
  EXPECT_FALSE(nondegenerate(c, chi));
}

TEST_F(MasseyTest, SurjectivityWitnessExamples) {
  const auto w = surjectivity_witness(c, triple(c, "x1", "x2", "x1"));
  EXPECT_EQ(w.which, SurjectivityWitness::Case::BothMinors);
  EXPECT_EQ(w.sigma, c.evaluate("x1"));
  EXPECT_EQ(w.tau, c.evaluate("x2"));
  EXPECT_EQ(w.gamma, c.evaluate("x1"));
  EXPECT_EQ(w.d12, 1u);
  EXPECT_EQ(w.d23, 4u);
  EXPECT_EQ(w.c.value(), 2u);

  const auto ind = surjectivity_witness(c, triple(c, "x1", "x2", "y1"));
  EXPECT_EQ(ind.which, SurjectivityWitness::Case::Independent);
  EXPECT_EQ(ind.c.value(), 1u);

  EXPECT_EQ(code_of([&] { surjectivity_witness(c, triple(c, "x1", "x1", "x1")); }),
            ErrorCode::PreconditionFailed);
}

TEST_F(MasseyTest, SurjectivityWitnessOnRandomTriples) {
  oracle::Sampler s(7);
  std::array<int, 4> seen{};
  for (int i = 0; i < 200; ++i) {
    const CharacterTriple chi = s.good_triple(c, i % 4);
    const auto w = surjectivity_witness(c, chi);
    ++seen[static_cast<int>(w.which)];
    EXPECT_FALSE(w.c.is_zero());
    EXPECT_EQ(w.c, c_det(c, chi, w.sigma, w.tau, w.gamma));
    EXPECT_EQ(w.c, h_ell(c, chi, c.commutator(c.commutator(w.sigma, w.tau), w.gamma)));
  }
  for (int n : seen) EXPECT_GT(n, 0);
}

TEST(MasseyGenus3, FlagshipTripleValues) {
  for (std::int64_t p : {7, 11, 13}) {
    const ContextPtr ctx = build_context(p, 3, Flavor::Surface);
    const CharacterTriple chi = triple(*ctx, "x1", "x2", "x1");
    EXPECT_EQ(h_ell(*ctx, chi, ctx->evaluate("[[x1,x2],x1]")).value(), 2u);
    EXPECT_EQ(h_ell(*ctx, chi, ctx->evaluate("[[x1,x2],x1]^8")).value(), 16 % p);
  }
}
