#include "verify/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>

#include <fmt/format.h>

#include "massey/error.hpp"
#include "massey/homomorphism.hpp"
#include "massey/johnson.hpp"
#include "massey/massey.hpp"
#include "massey/nilgroup.hpp"
#include "massey/unitriangular.hpp"
#include "massey/word.hpp"
#include "verify/oracles.hpp"

namespace massey::verify {
namespace {

using nlohmann::json;
using oracle::Dense;
using oracle::Sampler;

constexpr std::array<double, 9> kBudgetSeconds{5, 5, 30, 10, 60, 5, 5, 60, 1};
constexpr std::array<const char*, 9> kNames{
    "c1_u4_commutator_closed_form", "c2_u4_structure",
    "c3_nonempty_matches_cup",      "c4_golden_values",
    "c5_flagship_nonvanishing",     "c6_morita_chain",
    "c7_dimension_ledger",          "c8_well_definedness",
    "c9_parser_round_trip"};

// Collects failures; the first few are kept as the detail line.
struct Tally {
  std::size_t failures = 0;
  std::vector<std::string> first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (first.size() < 3) first.push_back(what);
  }
  bool ok() const { return failures == 0; }
  std::string detail(const std::string& success) const {
    if (ok()) return success;
    std::string s = fmt::format("{} failure(s): ", failures);
    for (std::size_t i = 0; i < first.size(); ++i)
      s += (i ? "; " : "") + first[i];
    return s;
  }
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return seed ^ (a * 0x9E3779B97F4A7C15ull) ^ (b * 0xC2B2AE3D27D4EB4Full);
}

CharacterTriple flagship_triple(const NilGroupContext& ctx) {
  const GeneratorSymbol x1{GeneratorSymbol::Kind::X, 1};
  const GeneratorSymbol x2{GeneratorSymbol::Kind::X, 2};
  return {Character::dual(ctx, x1), Character::dual(ctx, x2),
          Character::dual(ctx, x1)};
}

// ---------------------------------------------------------------- 1

CheckResult u4_commutator_fidelity(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  for (std::int64_t p : o.primes) {
    const PrimeField f(p);
    Sampler s(mix(o.seed, 1, p));
    std::size_t random_pairs = 0, sweep_pairs = 0;
    for (int i = 0; i < 100000; ++i, ++random_pairs) {
      const U4Element m = s.u4(f), n = s.u4(f);
      t.expect(oracle::dense_from(u4_commutator(m, n)) ==
                   oracle::dense_commutator(f, oracle::dense_from(m),
                                            oracle::dense_from(n)),
               fmt::format("l={} random pair {}", p, i));
    }
    const std::array<std::int64_t, 3> vals{0, 1, p - 1};
    std::vector<U4Element> mats;
    std::vector<Dense> dense, inverse;
    for (int code = 0; code < 729; ++code) {
      std::array<std::int64_t, 6> e{};
      for (int k = 0, c = code; k < 6; ++k, c /= 3) e[k] = vals[c % 3];
      mats.push_back(U4Element::make(f, e[0], e[1], e[2], e[3], e[4], e[5]));
      dense.push_back(oracle::dense_from(mats.back()));
      inverse.push_back(oracle::dense_inverse(f, dense.back()));
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
      for (std::size_t j = 0; j < mats.size(); ++j, ++sweep_pairs) {
        const Dense composed = oracle::dense_mul(
            f,
            oracle::dense_mul(f, oracle::dense_mul(f, dense[i], dense[j]),
                              inverse[i]),
            inverse[j]);
        if (oracle::dense_from(u4_commutator(mats[i], mats[j])) != composed)
          t.expect(false, fmt::format("l={} sweep pair ({}, {})", p, i, j));
      }
    }
    r.data["primes"].push_back(
        {{"l", p}, {"random_pairs", random_pairs}, {"sweep_pairs", sweep_pairs}});
  }
  r.passed = t.ok();
  r.detail = t.detail(fmt::format(
      "closed form equals M N M^-1 N^-1 on every pair for {} prime(s)",
      o.primes.size()));
  return r;
}

// ---------------------------------------------------------------- 2

CheckResult u4_structure(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  for (std::int64_t p : o.primes) {
    const PrimeField f(p);
    Sampler s(mix(o.seed, 2, p));
    const Dense id = oracle::dense_identity(4);
    const std::array<Dense, 3> elementary{
        oracle::dense_from(U4Element::make(f, 1, 0, 0, 0, 0, 0)),
        oracle::dense_from(U4Element::make(f, 0, 1, 0, 0, 0, 0)),
        oracle::dense_from(U4Element::make(f, 0, 0, 1, 0, 0, 0))};
    constexpr int kCases = 10000;
    std::size_t central_hits = 0, nontrivial_gamma3 = 0;

    for (int i = 0; i < kCases; ++i) {
      const U4Element m = s.u4(f);
      t.expect(u4_power(m, p).is_identity() &&
                   oracle::dense_power(f, oracle::dense_from(m), p) == id,
               fmt::format("l={} exponent case {}", p, i));
    }
    for (int i = 0; i < kCases; ++i) {
      const U4Element a = u4_commutator(s.u4(f), s.u4(f));
      const U4Element b = u4_commutator(s.u4(f), s.u4(f));
      t.expect(a.in_derived_subgroup() && b.in_derived_subgroup() &&
                   a * b == b * a,
               fmt::format("l={} derived case {}", p, i));
    }
    for (int i = 0; i < kCases; ++i) {
      U4Element m = s.u4(f);
      const ModScalar zero(0, f);
      for (ModScalar* e : {&m.a1, &m.a2, &m.a3, &m.u, &m.w})
        if (s.integer(0, 3) != 0) *e = zero;
      const Dense d = oracle::dense_from(m);
      bool commutes = true;
      for (const Dense& e : elementary)
        commutes = commutes && oracle::dense_mul(f, d, e) ==
                                   oracle::dense_mul(f, e, d);
      central_hits += commutes;
      t.expect(commutes == m.in_center(),
               fmt::format("l={} center case {}", p, i));
      if (m.in_center()) {
        const U4Element n = s.u4(f);
        t.expect(m * n == n * m, fmt::format("l={} central element {}", p, i));
      }
    }
    for (int i = 0; i < kCases; ++i) {
      const U4Element g2 = u4_commutator(s.u4(f), s.u4(f));
      const U4Element g3 = u4_commutator(g2, s.u4(f));
      const U4Element g4 = u4_commutator(g3, s.u4(f));
      nontrivial_gamma3 += !g3.is_identity();
      t.expect(g2.in_derived_subgroup() && g3.in_center() && g4.is_identity(),
               fmt::format("l={} lower central case {}", p, i));
    }
    // Guard against a vacuous suite.
    t.expect(central_hits > 0 && central_hits < kCases,
             fmt::format("l={} center sample degenerate", p));
    t.expect(nontrivial_gamma3 > 0, fmt::format("l={} gamma3 always trivial", p));
    r.data["primes"].push_back({{"l", p},
                                {"cases_per_property", kCases},
                                {"central_samples", central_hits},
                                {"nontrivial_gamma3", nontrivial_gamma3}});
  }
  r.passed = t.ok();
  r.detail = t.detail(
      "exponent, derived subgroup, center and lower central chain hold");
  return r;
}

// ---------------------------------------------------------------- 3

CheckResult nonempty_matches_cup(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  std::size_t oracle_configs = 0;
  for (std::int64_t p : o.primes)
    for (int g : o.genera) {
      const ContextPtr ctx = build_context(p, g, Flavor::Surface);
      Sampler s(mix(o.seed, 3, p * 64 + g));
      std::size_t nonempty = 0, empty = 0;
      std::vector<CharacterTriple> triples;
      for (int i = 0; i < 500; ++i) {
        CharacterTriple chi{s.character(*ctx), s.character(*ctx),
                            s.character(*ctx)};
        // Bias towards the boundary so both outcomes are common.
        if (i % 3 != 0) s.make_cup_orthogonal(*ctx, chi.chi1, chi.chi2);
        if (i % 3 != 0 && s.coin()) s.make_cup_orthogonal(*ctx, chi.chi3, chi.chi2);
        const bool cup = cup_vanishes(*ctx, chi.chi1, chi.chi2) &&
                         cup_vanishes(*ctx, chi.chi2, chi.chi3);
        const bool solver = massey_nonempty(*ctx, chi).has_value();
        (solver ? nonempty : empty)++;
        t.expect(cup == solver,
                 fmt::format("l={} g={} triple {}: solver {} cup {}", p, g, i,
                             solver, cup));
        triples.push_back(std::move(chi));
      }
      t.expect(nonempty > 0 && empty > 0,
               fmt::format("l={} g={} only one outcome sampled", p, g));

      // The brute-force oracle enumerates p^rank assignments.
      double space = 1;
      for (std::size_t k = 0; k < ctx->rank(); ++k) space *= double(p);
      const bool run_oracle = space <= 20000;
      std::size_t oracle_pairs = 0;
      if (run_oracle) {
        ++oracle_configs;
        for (int i = 0; i < 100; ++i) {
          const CharacterTriple& chi = triples[i];
          for (auto [a, b] : {std::pair{&chi.chi1, &chi.chi2},
                              std::pair{&chi.chi2, &chi.chi3}}) {
            ++oracle_pairs;
            t.expect(cup_vanishes(*ctx, *a, *b) ==
                         oracle::u3_extension_exists(*ctx, *a, *b),
                     fmt::format("l={} g={} oracle triple {}", p, g, i));
          }
        }
      }
      r.data["configs"].push_back({{"l", p},
                                   {"g", g},
                                   {"triples", 500},
                                   {"nonempty", nonempty},
                                   {"empty", empty},
                                   {"oracle_pairs", oracle_pairs}});
    }
  t.expect(oracle_configs > 0, "no configuration small enough for the oracle");
  r.passed = t.ok();
  r.detail = t.detail(
      "defining-system solver agrees with the cup criterion; cup criterion "
      "agrees with U3 brute force");
  return r;
}

// ---------------------------------------------------------------- 4

CheckResult golden_values(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  for (std::int64_t p : o.primes)
    for (int g : o.genera) {
      const ContextPtr ctx = build_context(p, g, Flavor::Surface);
      const PrimeField& f = ctx->field();
      const CharacterTriple chi = flagship_triple(*ctx);
      const auto lift = contains_zero(*ctx, chi);
      t.expect(lift.has_value(), fmt::format("l={} g={} no lift", p, g));
      if (!lift) continue;
      auto h = [&](std::string_view w) {
        return h_ell(*ctx, *lift, ctx->evaluate(w)).value();
      };
      const Residue h1 = h("[[x1,x2],x1]"), h2 = h("[[x2,x1],x1]"),
                    h3 = h("[[y1,y2],y1]"), h8 = h("[[x1,x2],x1]^8");
      const Residue sixteen = f.reduce(16);
      t.expect(h1 == 2, fmt::format("l={} g={} h([[x1,x2],x1]) = {}", p, g, h1));
      t.expect(h2 == f.reduce(-2),
               fmt::format("l={} g={} h([[x2,x1],x1]) = {}", p, g, h2));
      t.expect(h3 == 0, fmt::format("l={} g={} h([[y1,y2],y1]) = {}", p, g, h3));
      t.expect(h8 == sixteen, fmt::format("l={} g={} h(^8) = {}", p, g, h8));

      const SemidirectContext sctx(ctx, build_phi_lambda(ctx));
      const Tau3Map tau = tau_3_ell(sctx);
      const GroupElement y2 = ctx->evaluate("y2");
      const Residue ht = h_ell(*ctx, *lift, tau.apply(*ctx, y2)).value();
      t.expect(ht == sixteen && ht != 0,
               fmt::format("l={} g={} h(tau(y2)) = {}", p, g, ht));
      const PropositionReport rep = check_proposition(sctx, chi, y2);
      t.expect(rep.verdict(),
               fmt::format("l={} g={} proposition: {}", p, g, rep.note));
      r.data["configs"].push_back({{"l", p},
                                   {"g", g},
                                   {"h_x1x2x1", h1},
                                   {"h_x2x1x1", h2},
                                   {"h_y1y2y1", h3},
                                   {"h_x1x2x1_pow8", h8},
                                   {"h_tau_y2", ht},
                                   {"proposition", rep.verdict()}});
    }
  r.passed = t.ok();
  r.detail = t.detail("h values 2, -2, 0 and 16 mod l in every configuration");
  return r;
}

// ---------------------------------------------------------------- 5

CheckResult flagship(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  for (std::int64_t p : o.primes)
    for (int g : o.genera) {
      const ContextPtr ctx = build_context(p, g, Flavor::Surface);
      const CharacterTriple chi = flagship_triple(*ctx);
      const SemidirectContext sctx(ctx, build_phi_lambda(ctx));
      const SearchOptions search{o.jobs};

      const ExtendedTriple any = extend_characters(sctx, chi, std::nullopt);
      const ExtendedTriple trivial = extend_characters(sctx, chi);
      const bool nonempty = massey_nonempty_semidirect(sctx, any, search);
      const bool zero_any =
          contains_zero_semidirect(sctx, any, search).has_value();
      const bool zero_trivial =
          contains_zero_semidirect(sctx, trivial, search).has_value();
      const bool restricted = contains_zero(*ctx, chi).has_value();

      // Control: the same sweep over a direct product finds a lift.
      const SemidirectContext direct(ctx, GroupHomomorphismSpec::identity(ctx));
      const bool control =
          contains_zero_semidirect(direct, extend_characters(direct, chi), search)
              .has_value();

      t.expect(nonempty, fmt::format("l={} g={} semidirect product empty", p, g));
      t.expect(!zero_any, fmt::format("l={} g={} some extension lifts", p, g));
      t.expect(!zero_trivial, fmt::format("l={} g={} trivial extension lifts", p, g));
      t.expect(restricted, fmt::format("l={} g={} restriction has no lift", p, g));
      t.expect(control, fmt::format("l={} g={} direct product has no lift", p, g));
      std::uint64_t strata = 1;
      for (int i = 0; i < 5; ++i) strata *= static_cast<std::uint64_t>(p);
      r.data["configs"].push_back({{"l", p},
                                   {"g", g},
                                   {"strata", strata},
                                   {"nonempty_semidirect", nonempty},
                                   {"contains_zero_semidirect", zero_any},
                                   {"contains_zero_trivial_extension", zero_trivial},
                                   {"contains_zero_restricted", restricted},
                                   {"direct_product_control", control}});
    }
  r.passed = t.ok();
  r.detail = t.detail(
      "extended triple is nonempty and avoids 0 on every stratum; the "
      "restriction contains 0");
  return r;
}

// ---------------------------------------------------------------- 6

CheckResult morita_chain(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  for (std::int64_t p : o.primes)
    for (int g : o.genera) {
      const ContextPtr ctx = build_context(p, g, Flavor::Surface);
      const PrimeField& f = ctx->field();
      const TensorSpaceContext ts(f, ctx->rank());
      auto lin = [&](std::initializer_list<std::pair<std::int64_t, ModVector>> terms) {
        ModVector out(terms.begin()->second.size(), 0);
        for (const auto& [c, v] : terms)
          for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = f.fma(out[i], f.reduce(c), v[i]);
        return out;
      };
      const ModVector x1 = ts.basis_vector(0), y1 = ts.basis_vector(1),
                      x2 = ts.basis_vector(2);
      const ModVector zero(ts.h_dim(), 0);
      const ModVector a = ts.wedge(x1, y1), b = ts.wedge(x1, x2);
      for (int sign : {1, -1}) {
        const ModVector rhs = lin({{1, ts.tensor(a, a)},
                                   {4, ts.tensor(b, b)},
                                   {2 * sign, ts.tensor(a, b)},
                                   {2 * sign, ts.tensor(b, a)}});
        t.expect(wedge_square_expand(ts, x1, y1, x2, sign) == rhs,
                 fmt::format("l={} g={} expansion sign {}", p, g, sign));
      }
      t.expect(wedge_square_expand(ts, x1, y1, zero, 1) == ts.tensor(a, a),
               fmt::format("l={} g={} expansion with s = 0", p, g));
      t.expect(wedge_square_expand(ts, x1, x1, x2, 1) ==
                   lin({{4, ts.tensor(b, b)}}),
               fmt::format("l={} g={} expansion with a = b", p, g));

      const Tau3Map lambda1 =
          tensor_to_hom(ts, *ctx, project_w(ts, lin({{8, ts.tensor(b, b)}})));
      // Expected columns from group words, independent of the tensor side.
      ModMatrix expected(f, ctx->dims()[2], ctx->rank());
      const ModVector col_y1 = ctx->evaluate("[[x1,x2],x2]^-8").v3();
      const ModVector col_y2 = ctx->evaluate("[[x1,x2],x1]^8").v3();
      for (std::size_t q = 0; q < expected.rows(); ++q) {
        expected(q, 1) = col_y1[q];
        expected(q, 3) = col_y2[q];
      }
      t.expect(lambda1.matrix == expected,
               fmt::format("l={} g={} w(8 (x1^x2)^2) differs from lambda1", p, g));
      const Tau3Map tau = tau_3_ell(build_phi_lambda(ctx));
      t.expect(tau.matrix == expected,
               fmt::format("l={} g={} tau(Phi_lambda) differs from lambda1", p, g));
      r.data["configs"].push_back(
          {{"l", p},
           {"g", g},
           {"quotient_dim", ts.quotient_dim()},
           {"lambda1_matches", lambda1.matrix == expected},
           {"tau_matches", tau.matrix == expected}});
    }
  r.passed = t.ok();
  r.detail = t.detail(
      "expansion identities hold; w(8 (x1^x2)^2) and tau(Phi_lambda) both "
      "equal lambda1");
  return r;
}

// ---------------------------------------------------------------- 7

CheckResult dimension_ledger(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  const std::int64_t p0 = o.primes.empty() ? 5 : o.primes.front();
  for (std::size_t n : {2u, 4u, 6u}) {
    const HallBasis hall(n);
    const std::array<std::uint64_t, 3> formula{n, n * (n - 1) / 2,
                                               (n * n * n - n) / 3};
    for (int d = 1; d <= 3; ++d) {
      const std::uint64_t want = formula[d - 1];
      t.expect(hall.dimension(d) == want && oracle::witt_dimension(n, d) == want &&
                   oracle::hall_count(n, d) == want,
               fmt::format("n={} degree {}", n, d));
    }
    const ContextPtr free = NilGroupContext::build_free(p0, n);
    t.expect(free->dims() == std::array<std::size_t, 3>{formula[0], formula[1],
                                                         formula[2]},
             fmt::format("free context n={} dims", n));
    const TensorSpaceContext ts(PrimeField(p0), n);
    t.expect(ts.wedge2_dim() == formula[1] && ts.quotient_dim() == formula[2],
             fmt::format("tensor space n={} dims", n));
    r.data["free"].push_back({{"n", n},
                              {"dims", formula},
                              {"tensor_quotient_dim", ts.quotient_dim()}});
  }
  for (std::int64_t p : o.primes)
    for (int g : {2, 3}) {
      const ContextPtr ctx = build_context(p, g, Flavor::Surface);
      const std::array<std::size_t, 3> want =
          g == 2 ? std::array<std::size_t, 3>{4, 5, 16}
                 : std::array<std::size_t, 3>{6, 14, 64};
      t.expect(ctx->dims() == want, fmt::format("l={} g={} dims", p, g));
      t.expect(ctx->order_exponent() == want[0] + want[1] + want[2],
               fmt::format("l={} g={} order", p, g));
      // Degree-3 part of the ideal: brackets of the relation with generators.
      const FreeLieRing& lie = ctx->lie();
      LieVector r2 = lie.zero();
      r2.d2 = ctx->relation_log()->d2;
      ModMatrix span(ctx->field(), 0, lie.basis().dimension(3));
      for (std::size_t j = 0; j < ctx->rank(); ++j)
        span.append_row(lie.bracket(r2, lie.generator(j)).d3);
      const std::size_t rank3 = rank(span);
      t.expect(rank3 == ctx->rank(), fmt::format("l={} g={} ideal rank {}", p, g, rank3));
      r.data["surface"].push_back(
          {{"l", p}, {"g", g}, {"dims", ctx->dims()}, {"ideal_degree3_rank", rank3}});
    }
  r.passed = t.ok();
  r.detail = t.detail(
      "Hall, Witt and enumeration counts agree; surface dims 4/5/16 and "
      "6/14/64; tensor quotient matches degree 3");
  return r;
}

// ---------------------------------------------------------------- 8

CheckResult well_definedness(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  for (std::int64_t p : o.primes)
    for (int g : o.genera) {
      const ContextPtr ctx = build_context(p, g, Flavor::Surface);
      const NilGroupContext& c = *ctx;
      const PrimeField& f = c.field();
      Sampler s(mix(o.seed, 8, p * 64 + g));
      json cfg{{"l", p}, {"g", g}};

      const GroupElement id = c.identity();
      for (int i = 0; i < 10000; ++i) {
        const GroupElement a = s.element(c), b = s.element(c), d = s.element(c);
        t.expect(c.multiply(c.multiply(a, b), d) == c.multiply(a, c.multiply(b, d)),
                 fmt::format("l={} g={} associativity {}", p, g, i));
        t.expect(c.multiply(a, c.inverse(a)) == id && c.multiply(c.inverse(a), a) == id,
                 fmt::format("l={} g={} inverse {}", p, g, i));
        t.expect(c.multiply(a, id) == a && c.multiply(id, a) == a,
                 fmt::format("l={} g={} identity {}", p, g, i));
      }
      for (int i = 0; i < 1000; ++i) {
        const GroupElement a = s.element(c);
        GroupElement acc = id;
        for (std::int64_t k = 0; k < p; ++k) acc = c.multiply(acc, a);
        t.expect(acc == id, fmt::format("l={} g={} exponent {}", p, g, i));
      }

      // h independent of the lift; vanishing on [R, e_j] in the free group.
      const ContextPtr free = NilGroupContext::build_free(p, c.rank());
      const GroupElement relation = free->evaluate(c.relation_word());
      std::vector<CharacterTriple> triples{flagship_triple(c)};
      for (int shape = 0; shape < 4; ++shape) triples.push_back(s.good_triple(c, shape));
      std::size_t lifts_checked = 0;
      for (std::size_t ti = 0; ti < triples.size(); ++ti) {
        const auto family = lift_family(c, triples[ti]);
        t.expect(family.has_value(), fmt::format("l={} g={} triple {} no lift", p, g, ti));
        if (!family) continue;
        auto h_on_atoms = [&](const U4Representation& rho) {
          const PushForward<U4Target> push(c, U4Target{f}, rho.images);
          ModVector out;
          for (std::size_t q = 0; q < c.dims()[2]; ++q)
            out.push_back(push.atom_image(3, q).v.value());
          return out;
        };
        const ModVector reference = h_on_atoms(family->particular());
        std::set<ModVector> seen;
        while (seen.size() < 100) {
          ModVector coeffs(family->dimension());
          for (Residue& x : coeffs) x = s.residue(f);
          if (!seen.insert(coeffs).second) continue;
          const U4Representation rho = family->at(coeffs);
          t.expect(rho.relation_image(c).is_identity(),
                   fmt::format("l={} g={} family point is not a lift", p, g));
          t.expect(h_on_atoms(rho) == reference,
                   fmt::format("l={} g={} triple {} h depends on the lift", p, g, ti));
          ++lifts_checked;
        }
        const PushForward<U4Target> push(*free, U4Target{f}, family->particular().images);
        for (std::size_t j = 0; j < free->rank(); ++j) {
          const GroupElement w = free->commutator(relation, free->generator(j));
          t.expect(free->lcs_member(w, 3) && push(w).is_identity(),
                   fmt::format("l={} g={} h on [R, e{}] nonzero", p, g, j));
        }
      }
      cfg["lifts_checked"] = lifts_checked;

      const GroupHomomorphismSpec phi = build_phi_lambda(ctx);
      const Tau3Map tau = tau_3_ell(phi);
      auto moved = [&](const GroupElement& w) {
        return c.multiply(phi.apply(w), c.inverse(w));
      };
      for (int i = 0; i < 1000; ++i) {
        const GroupElement a = s.element(c), b = s.element(c);
        const GroupElement ab = c.multiply(a, b);
        t.expect(moved(ab) == c.multiply(moved(a), moved(b)) &&
                     moved(ab) == tau.apply(c, ab) && c.lcs_member(moved(ab), 3),
                 fmt::format("l={} g={} tau pair {}", p, g, i));
      }

      std::array<std::size_t, 4> cases{};
      std::size_t identity_checked = 0;
      for (int i = 0; i < 200; ++i) {
        const CharacterTriple chi = s.good_triple(c, i % 4);
        const SurjectivityWitness w = surjectivity_witness(c, chi);
        const auto lift = contains_zero(c, chi);
        ++cases[static_cast<std::size_t>(w.which)];
        const GroupElement omega =
            c.commutator(c.commutator(w.sigma, w.tau), w.gamma);
        t.expect(!w.c.is_zero(), fmt::format("l={} g={} witness {} has c = 0", p, g, i));
        t.expect(w.c == c_det(c, chi, w.sigma, w.tau, w.gamma) &&
                     lift && w.c == h_ell(c, *lift, omega),
                 fmt::format("l={} g={} witness {} c != h", p, g, i));
        if (w.d12 != 0 && w.d23 != 0) {
          ++identity_checked;
          const Residue want = f.mul(f.neg(2), f.mul(w.d12, w.d23));
          t.expect(w.c.value() == want,
                   fmt::format("l={} g={} witness {} c != -2 D12 D23", p, g, i));
        }
      }
      t.expect(identity_checked > 0,
               fmt::format("l={} g={} -2 D12 D23 never exercised", p, g));
      cfg["witness_cases"] = {{"independent", cases[0]},
                              {"both_minors", cases[1]},
                              {"d23_only", cases[2]},
                              {"d12_only", cases[3]}};
      cfg["minor_identity_checked"] = identity_checked;
      r.data["configs"].push_back(std::move(cfg));
    }
  r.passed = t.ok();
  r.detail = t.detail(
      "group axioms, exponent, lift independence, ideal vanishing, tau "
      "multiplicativity and surjectivity witnesses hold");
  return r;
}

// ---------------------------------------------------------------- 9

std::string random_word(Sampler& s, int depth) {
  GroupWord w;
  const int terms = static_cast<int>(s.integer(1, 3));
  for (int i = 0; i < terms; ++i) {
    WordTerm term;
    const std::int64_t pick = depth >= 2 ? 0 : s.integer(0, 9);
    if (pick < 7) {
      term.atom = WordAtom::gen({s.coin() ? GeneratorSymbol::Kind::X
                                          : GeneratorSymbol::Kind::Y,
                                 static_cast<int>(s.integer(1, 3))});
    } else if (pick < 9) {
      term.atom = WordAtom::bracket(parse_word(random_word(s, depth + 1)),
                                    parse_word(random_word(s, depth + 1)));
    } else {
      term.atom = WordAtom::group(parse_word(random_word(s, depth + 1)));
    }
    term.exponent = s.integer(0, 2) == 0 ? s.integer(-12, 12) : 1;
    w.terms.push_back(std::move(term));
  }
  if (s.integer(0, 30) == 0) w.terms.clear();
  return print_word(w);
}

CheckResult parser_round_trip(const SuiteOptions& o) {
  CheckResult r;
  Tally t;
  const std::vector<std::string> corpus = parser_corpus(o.seed);
  for (const std::string& text : corpus) {
    try {
      const GroupWord w = parse_word(text);
      t.expect(print_word(w) == text, fmt::format("print(parse(\"{}\"))", text));
      t.expect(parse_word(print_word(w)) == w, fmt::format("parse(print) of \"{}\"", text));
    } catch (const Error& e) {
      t.expect(false, fmt::format("\"{}\": {}", text, e.what()));
    }
  }
  // Non-canonical spellings parse to the same tree.
  t.expect(parse_word("x1^1 [ x1 , x2 ]") == parse_word("x1 [x1,x2]"),
           "lenient whitespace");
  try {
    parse_word("x1^");
    t.expect(false, "\"x1^\" parsed");
  } catch (const SyntaxError& e) {
    t.expect(e.offset() == 3, fmt::format("\"x1^\" offset {}", e.offset()));
  }
  r.data["corpus_size"] = corpus.size();
  r.passed = t.ok() && corpus.size() == 200;
  r.detail = t.detail(fmt::format("{} words round-trip", corpus.size()));
  return r;
}

using Runner = CheckResult (*)(const SuiteOptions&);
constexpr std::array<Runner, 9> kRunners{
    u4_commutator_fidelity, u4_structure, nonempty_matches_cup,
    golden_values,          flagship,     morita_chain,
    dimension_ledger,       well_definedness, parser_round_trip};

}  // namespace

SuiteOptions pinned_options(int criterion) {
  SuiteOptions o;
  switch (criterion) {
    case 1:
    case 2:
    case 7: o.primes = {5, 7, 11, 13}; o.genera = {2, 3}; break;
    case 3: o.primes = {5}; o.genera = {2}; break;
    case 4:
    case 6: o.primes = {5, 7, 11, 13}; o.genera = {2, 3}; break;
    case 5: o.primes = {5, 7}; o.genera = {2}; break;
    case 8: o.primes = {5, 7}; o.genera = {2, 3}; break;
    default: break;
  }
  return o;
}

CheckResult run_criterion(int criterion, const SuiteOptions& options) {
  if (criterion < 1 || criterion > 9)
    throw Error(ErrorCode::PreconditionFailed, "criterion must be 1..9");
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = kRunners[criterion - 1](options);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.name = kNames[criterion - 1];
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                  .count();
  r.budget_seconds = kBudgetSeconds[criterion - 1];
  if (r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail += fmt::format(" (took {:.2f} s, budget {:.0f} s)", r.seconds,
                            r.budget_seconds);
  }
  return r;
}

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  std::vector<CheckResult> out;
  for (int c = 1; c <= 9; ++c) out.push_back(run_criterion(c, options));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

nlohmann::json report_json(const SuiteOptions& options,
                           const std::vector<CheckResult>& checks,
                           bool with_timings) {
  json j;
  j["seed"] = options.seed;
  j["primes"] = options.primes;
  j["genera"] = options.genera;
  bool all = true;
  json list = json::array();
  for (const CheckResult& c : checks) {
    all = all && c.passed;
    json e{{"name", c.name},
           {"passed", c.passed},
           {"detail", c.detail},
           {"data", c.data}};
    if (with_timings) {
      e["seconds"] = c.seconds;
      e["budget_seconds"] = c.budget_seconds;
    }
    list.push_back(std::move(e));
  }
  j["passed"] = all;
  j["checks"] = std::move(list);
  return j;
}

std::vector<std::string> parser_corpus(std::uint64_t seed) {
  std::vector<std::string> out{
      "[[x1,x2],x2]^-8 y1", "[[x1,x2],x1]^8 y2", "[[x1,x2],x1]^8",
      "[[x1,x2],x2]^-8",    "[[x1,x2],x2]",      "[[x1,x2],x1]",
      "[[x2,x1],x1]",       "[[y1,y2],y1]",      "[x1,y1] [x2,y2]",
      "[x1,y1] [x2,y2] [x3,y3]", "[x1,y1]",      "[x1,x1]",
      "x1 y1^-1",           "x1 y1",             "x1 x1",
      "x1^5",               "x1^7",              "x1^11",
      "x1^13",              "x1",                "y2",
      "1"};
  std::set<std::string> seen(out.begin(), out.end());
  Sampler s(mix(seed, 9));
  while (out.size() < 200) {
    std::string w = random_word(s, 0);
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace massey::verify
