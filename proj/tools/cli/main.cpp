// massey: command-line front end.
//
//   massey build --l 5 --g 2
//   massey massey --chars chars.json [--phi phi.json] [--phi-values 0,0,0]
//   massey proposition --chars chars.json --phi phi.json [--omega0 y2]
//   massey verify-paper --l 5,7,11,13 --g 2,3 [--out report.json]
//
// Exit status: 0 on success (verify-paper: every check passed), 1 when a
// verification fails, 2 on bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "massey/error.hpp"
#include "massey/io.hpp"
#include "massey/johnson.hpp"
#include "massey/massey.hpp"
#include "massey/nilgroup.hpp"
#include "verify/suite.hpp"

namespace {

using nlohmann::json;
using namespace massey;

struct RunConfig {
  std::int64_t l = 5;
  int g = 2;
  std::string flavor = "surface";
  std::string context_file;
  std::string chars_file;
  std::string phi_file;
  std::string phi_values;
  std::string omega0 = "y2";
  std::string out;
  std::vector<std::int64_t> primes{5, 7};
  std::vector<int> genera{2};
  std::uint64_t seed = 20240611;
  unsigned jobs = 1;
  bool timings = false;
};

// Errors raised while reading a file are reported with the file name.
struct FileError {
  std::string path;
  Error error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FileError{path, Error(ErrorCode::PreconditionFailed, "cannot open file")};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class F>
auto from_file(const std::string& path, F&& parse) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw FileError{path, e};
  }
}

ContextPtr make_context(const RunConfig& c) {
  if (!c.context_file.empty()) {
    const ContextDescriptor d =
        from_file(c.context_file, [](const std::string& t) {
          return parse_context_descriptor(t);
        });
    return build_context(d.l, d.g, d.flavor);
  }
  return build_context(c.l, c.g, parse_flavor(c.flavor));
}

void emit(const RunConfig& c, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (c.out.empty()) return;
  std::ofstream out(c.out, std::ios::binary);
  if (!out)
    throw FileError{c.out, Error(ErrorCode::PreconditionFailed, "cannot write")};
  out << text;
}

json context_json(const NilGroupContext& ctx) {
  const auto d = ctx.dims();
  return {{"l", ctx.field().modulus()},
          {"g", ctx.genus()},
          {"flavor", std::string(to_string(ctx.flavor()))},
          {"dims", {d[0], d[1], d[2]}},
          {"order_exponent", ctx.order_exponent()}};
}

int cmd_build(const RunConfig& c) {
  const ContextPtr ctx = make_context(c);
  const auto d = ctx->dims();
  fmt::print("{} genus {} mod {}: dims {}/{}/{}, |group| = {}^{}\n",
             to_string(ctx->flavor()), ctx->genus(), ctx->field().modulus(),
             d[0], d[1], d[2], ctx->field().modulus(), ctx->order_exponent());
  emit(c, context_json(*ctx));
  return 0;
}

std::optional<GroupHomomorphismSpec> load_phi(const RunConfig& c,
                                              const ContextPtr& ctx) {
  if (c.phi_file.empty()) return std::nullopt;
  return from_file(c.phi_file, [&](const std::string& t) {
    return GroupHomomorphismSpec::from_words(ctx, parse_automorphism(t));
  });
}

CharacterTriple load_chars(const RunConfig& c, const NilGroupContext& ctx) {
  if (c.chars_file.empty())
    throw Error(ErrorCode::PreconditionFailed, "--chars is required");
  return from_file(c.chars_file, [&](const std::string& t) {
    return parse_characters(ctx, t);
  });
}

std::optional<std::array<Residue, 3>> parse_phi_values(const RunConfig& c,
                                                       const PrimeField& f) {
  if (c.phi_values.empty() || c.phi_values == "any") return std::nullopt;
  std::array<Residue, 3> v{};
  std::istringstream in(c.phi_values);
  std::string item;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(in, item, ','))
      throw Error(ErrorCode::PreconditionFailed,
                  "--phi-values wants three comma-separated integers or \"any\"");
    v[i] = f.reduce(std::stoll(item));
  }
  return v;
}

int cmd_massey(const RunConfig& c) {
  const ContextPtr ctx = make_context(c);
  const CharacterTriple chi = load_chars(c, *ctx);
  auto phi = load_phi(c, ctx);
  json report{{"context", context_json(*ctx)},
              {"characters", json::parse(to_json(*ctx, chi))}};

  const auto system = massey_nonempty(*ctx, chi);
  report["nonempty"] = system.has_value();
  report["defining_system"] =
      system ? json{{"kappa12", system->kappa12}, {"kappa23", system->kappa23}}
             : json(nullptr);
  const auto lift = contains_zero(*ctx, chi);
  report["contains_zero"] = lift.has_value();
  report["witness"] = lift ? json::parse(witness_json(*ctx, *lift)) : json(nullptr);
  fmt::print("nonempty       {}\ncontains zero  {}\n", system.has_value(),
             lift.has_value());

  if (phi) {
    const SemidirectContext sctx(ctx, std::move(*phi));
    const ExtendedTriple ext =
        extend_characters(sctx, chi, parse_phi_values(c, ctx->field()));
    const SearchOptions opts{c.jobs};
    const bool nonempty = massey_nonempty_semidirect(sctx, ext, opts);
    const auto w = contains_zero_semidirect(sctx, ext, opts);
    json semi{{"extension", ext.phi_values ? json(*ext.phi_values) : json("any")},
              {"nonempty", nonempty},
              {"contains_zero", w.has_value()},
              {"witness", w ? json::parse(witness_json(*ctx, w->rho, w->phi_matrix))
                            : json(nullptr)}};
    if (w) semi["stratum"] = w->stratum;
    report["semidirect"] = std::move(semi);
    fmt::print("semidirect ({} extension)\n  nonempty       {}\n  contains zero  {}\n",
               ext.phi_values ? "fixed" : "any", nonempty, w.has_value());
  }
  emit(c, report);
  return 0;
}

int cmd_proposition(const RunConfig& c) {
  const ContextPtr ctx = make_context(c);
  const CharacterTriple chi = load_chars(c, *ctx);
  auto phi = load_phi(c, ctx);
  if (!phi) throw Error(ErrorCode::PreconditionFailed, "--phi is required");
  const SemidirectContext sctx(ctx, std::move(*phi));
  const GroupElement omega0 = ctx->evaluate(c.omega0);
  const PropositionReport r = check_proposition(sctx, chi, omega0);

  json report{{"context", context_json(*ctx)},
              {"omega0", c.omega0},
              {"condition_i", r.condition_i},
              {"condition_ii", r.condition_ii},
              {"characters_nonzero", r.characters_nonzero},
              {"pair12_independent", r.pair12_independent},
              {"pair23_independent", r.pair23_independent},
              {"condition_iii", r.condition_iii},
              {"phi_in_g3", r.phi_in_g3},
              {"omega0_in_kernel", r.omega0_in_kernel},
              {"h_value", r.h_value ? json(r.h_value->value()) : json(nullptr)},
              {"verdict", r.verdict()},
              {"note", r.note}};
  fmt::print("(i)   {}\n(ii)  {}\n(iii) {}\n", r.condition_i, r.condition_ii,
             r.condition_iii);
  if (r.h_value) fmt::print("h(tau(omega0)) = {}\n", r.h_value->value());
  fmt::print("verdict: {}{}\n", r.verdict() ? "does not contain 0" : "inconclusive",
             r.note.empty() ? "" : " (" + r.note + ")");
  emit(c, report);
  return r.verdict() ? 0 : 1;
}

int cmd_verify(const RunConfig& c) {
  verify::SuiteOptions o;
  o.primes = c.primes;
  o.genera = c.genera;
  o.seed = c.seed;
  o.jobs = c.jobs;
  for (std::int64_t p : o.primes) PrimeField check(p);
  for (int g : o.genera)
    if (g < 2) throw Error(ErrorCode::BadGenus, "genus must be at least 2");
  const auto checks = verify::run_suite(o);
  bool all = true;
  for (const auto& r : checks) {
    all = all && r.passed;
    fmt::print("{:<30} {}  {:7.2f}s  {}\n", r.name, r.passed ? "PASS" : "FAIL",
               r.seconds, r.detail);
  }
  fmt::print("overall: {}\n", all ? "PASS" : "FAIL");
  emit(c, verify::report_json(o, checks, c.timings));
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Massey products over finite quotients of surface groups"};
  app.require_subcommand(1);
  RunConfig c;

  auto context_opts = [&](CLI::App* s) {
    s->add_option("-l,--l", c.l, "prime l > 3");
    s->add_option("-g,--g", c.g, "genus");
    s->add_option("--flavor", c.flavor, "surface or free");
    s->add_option("--context", c.context_file, "context descriptor JSON");
    s->add_option("--out", c.out, "write the JSON report here");
  };

  auto* build = app.add_subcommand("build", "build a context and print its size");
  context_opts(build);

  auto* massey = app.add_subcommand("massey", "decide nonempty / contains 0");
  context_opts(massey);
  massey->add_option("--chars", c.chars_file, "character file")->required();
  massey->add_option("--phi", c.phi_file, "automorphism file");
  massey->add_option("--phi-values", c.phi_values,
                     "chi_j(Phi) as a,b,c, or \"any\" (default)");
  massey->add_option("--jobs", c.jobs, "threads for the stratum sweep");

  auto* prop = app.add_subcommand("proposition",
                                  "check the sufficient conditions for 0 not in the product");
  context_opts(prop);
  prop->add_option("--chars", c.chars_file, "character file")->required();
  prop->add_option("--phi", c.phi_file, "automorphism file")->required();
  prop->add_option("--omega0", c.omega0, "word for omega0");

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify->add_option("-l,--l", c.primes, "primes, comma separated")->delimiter(',');
  verify->add_option("-g,--g", c.genera, "genera, comma separated")->delimiter(',');
  verify->add_option("--seed", c.seed, "seed for randomized suites");
  verify->add_option("--jobs", c.jobs, "threads for stratum sweeps");
  verify->add_option("--out", c.out, "write the JSON report here");
  verify->add_flag("--timings", c.timings, "include timings in the JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(c);
    if (*massey) return cmd_massey(c);
    if (*prop) return cmd_proposition(c);
    if (*verify) return cmd_verify(c);
  } catch (const FileError& e) {
    fmt::print(stderr, "error: {}: {}\n", e.path, e.error.what());
    return 2;
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
  return 2;
}
