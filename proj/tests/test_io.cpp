#include <gtest/gtest.h>

#include <json.hpp>

#include "massey/error.hpp"
#include "massey/io.hpp"
#include "massey/johnson.hpp"

using namespace massey;

namespace {

template <class F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no exception";
  return Error(ErrorCode::PreconditionFailed, "none");
}

}  // namespace

TEST(ContextDescriptor, Parse) {
  const auto d = parse_context_descriptor(R"({"l": 7, "g": 3, "flavor": "free"})");
  EXPECT_EQ(d.l, 7);
  EXPECT_EQ(d.g, 3);
  EXPECT_EQ(d.flavor, Flavor::Free);
  const auto def = parse_context_descriptor("{}");
  EXPECT_EQ(def.l, 5);
  EXPECT_EQ(def.flavor, Flavor::Surface);
  EXPECT_EQ(parse_context_descriptor(to_json(d)).g, 3);

  EXPECT_EQ(error_of([] { parse_context_descriptor(R"({"l": 5, "h": 1})"); }).code(),
            ErrorCode::SyntaxError);
  EXPECT_EQ(error_of([] { parse_context_descriptor(R"({"l": "5"})"); }).code(),
            ErrorCode::SyntaxError);
  try {
    parse_context_descriptor(R"({"l": 5,, })");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 8u);
  }
}

TEST(Characters, ParseAndPrint) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const auto chi = parse_characters(
      *ctx, R"({"chi1": {"x1": 1}, "chi2": {"x2": 1, "y2": -1}, "chi3": {"x1": 6}})");
  EXPECT_EQ(chi.chi1.values, ModVector({1, 0, 0, 0}));
  EXPECT_EQ(chi.chi2.values, ModVector({0, 0, 1, 4}));
  EXPECT_EQ(chi.chi3.values, ModVector({1, 0, 0, 0}));
  const auto back = parse_characters(*ctx, to_json(*ctx, chi));
  EXPECT_EQ(back.chi2, chi.chi2);

  const auto partial = parse_characters(*ctx, R"({"chi2": {"y1": 2}})");
  EXPECT_TRUE(partial.chi1.is_zero());

  EXPECT_EQ(error_of([&] { parse_characters(*ctx, R"({"chi1": {"x3": 1}})"); }).code(),
            ErrorCode::UnknownGenerator);
  EXPECT_EQ(error_of([&] { parse_characters(*ctx, R"({"chi4": {}})"); }).code(),
            ErrorCode::SyntaxError);
}

TEST(Automorphism, PhiLambdaFile) {
  const ContextPtr ctx = build_context(7, 2, Flavor::Surface);
  const auto images = parse_automorphism(
      R"({"x1": "x1", "y1": "[[x1,x2],x2]^-8 y1", "y2": "[[x1,x2],x1]^8 y2"})");
  const auto spec = GroupHomomorphismSpec::from_words(ctx, images);
  const auto phi = build_phi_lambda(ctx);
  for (std::size_t j = 0; j < ctx->rank(); ++j)
    EXPECT_EQ(spec.image(j), phi.image(j));
}

TEST(Automorphism, WordErrorsNameTheGenerator) {
  try {
    parse_automorphism(R"({"y1": "[[x1,x2],x2]^"})");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 13u);
    EXPECT_NE(std::string(e.what()).find("image of y1"), std::string::npos);
  }
  EXPECT_EQ(error_of([] { parse_automorphism(R"({"z1": "x1"})"); }).code(),
            ErrorCode::SyntaxError);
}

TEST(Witness, Json) {
  const ContextPtr ctx = build_context(5, 2, Flavor::Surface);
  const auto chi = parse_characters(*ctx, R"({"chi1": {"x1": 1}, "chi2": {"x2": 1}, "chi3": {"x1": 1}})");
  const auto rho = contains_zero(*ctx, chi);
  ASSERT_TRUE(rho.has_value());
  const auto j = nlohmann::json::parse(witness_json(*ctx, *rho, U4Element::identity(ctx->field())));
  EXPECT_EQ(j.size(), 5u);
  EXPECT_EQ(j["x1"].size(), 6u);
  EXPECT_EQ(j["x1"][0], 1);
  EXPECT_EQ(j["phi_matrix"], nlohmann::json({0, 0, 0, 0, 0, 0}));
}
