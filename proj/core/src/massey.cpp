#include "massey/massey.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace massey {

// ---------------------------------------------------------------- characters

Character Character::zero(const NilGroupContext& ctx) {
  return {ModVector(ctx.rank(), 0)};
}

Character Character::dual(const NilGroupContext& ctx,
                          const GeneratorSymbol& e) {
  if (e.position() >= ctx.rank())
    throw Error(ErrorCode::UnknownGenerator,
                e.name() + " is not a generator of this group");
  Character c = zero(ctx);
  c.values[e.position()] = 1;
  return c;
}

Character Character::from_values(const NilGroupContext& ctx,
                                 const std::vector<std::int64_t>& values) {
  if (values.size() != ctx.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "character needs one value per generator");
  Character c;
  for (std::int64_t x : values) c.values.push_back(ctx.field().reduce(x));
  return c;
}

bool Character::is_zero() const noexcept {
  for (Residue x : values)
    if (x != 0) return false;
  return true;
}

Residue Character::operator()(const NilGroupContext& ctx,
                              const GroupElement& a) const {
  ctx.check(a);
  const PrimeField& f = ctx.field();
  Residue out = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    out = f.fma(out, values[i], a.v1()[i]);
  return out;
}

const Character& CharacterTriple::operator[](int i) const {
  switch (i) {
    case 1: return chi1;
    case 2: return chi2;
    case 3: return chi3;
    default: throw Error(ErrorCode::DimensionMismatch, "characters are 1..3");
  }
}

U4Element U4Representation::evaluate(const NilGroupContext& ctx,
                                     const GroupElement& a) const {
  const PushForward<U4Target> push(ctx, U4Target{ctx.field()}, images);
  return push(a);
}

U4Element U4Representation::relation_image(const NilGroupContext& ctx) const {
  if (ctx.flavor() == Flavor::Free) return U4Element::identity(ctx.field());
  return evaluate_in(U4Target{ctx.field()}, images, ctx.relation_word());
}

// ------------------------------------------------------------- affine forms

AffineForm AffineForm::constant_form(std::size_t unknowns, Residue c) {
  return {c, ModVector(unknowns, 0)};
}

AffineForm AffineForm::unknown(std::size_t unknowns, std::size_t i) {
  AffineForm f = constant_form(unknowns, 0);
  f.coeffs.at(i) = 1;
  return f;
}

namespace {

// x + c * y
AffineForm axpy(const PrimeField& f, AffineForm x, Residue c,
                const AffineForm& y) {
  if (c == 0) return x;
  x.constant = f.fma(x.constant, c, y.constant);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    x.coeffs[i] = f.fma(x.coeffs[i], c, y.coeffs[i]);
  return x;
}

AffineForm add_constant(const PrimeField& f, AffineForm x, Residue c) {
  x.constant = f.add(x.constant, c);
  return x;
}

AffineForm negate(const PrimeField& f, AffineForm x) {
  x.constant = f.neg(x.constant);
  for (Residue& c : x.coeffs) c = f.neg(c);
  return x;
}

Residue eval_form(const PrimeField& f, const AffineForm& x,
                  std::span<const Residue> point) {
  Residue out = x.constant;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    out = f.fma(out, x.coeffs[i], point[i]);
  return out;
}

}  // namespace

AffineU4 AffineU4Target::identity() const {
  const AffineForm z = AffineForm::constant_form(unknowns, 0);
  return {0, 0, 0, z, z, z};
}

AffineU4 AffineU4Target::multiply(const AffineU4& m, const AffineU4& n) const {
  const PrimeField& f = field;
  AffineU4 out;
  out.a1 = f.add(m.a1, n.a1);
  out.a2 = f.add(m.a2, n.a2);
  out.a3 = f.add(m.a3, n.a3);
  out.u = add_constant(f, axpy(f, m.u, 1, n.u), f.mul(m.a1, n.a2));
  out.w = add_constant(f, axpy(f, m.w, 1, n.w), f.mul(m.a2, n.a3));
  AffineForm v = axpy(f, m.v, 1, n.v);
  v = axpy(f, std::move(v), m.a1, n.w);
  out.v = axpy(f, std::move(v), n.a3, m.u);
  return out;
}

AffineU4 AffineU4Target::inverse(const AffineU4& m) const {
  const PrimeField& f = field;
  AffineU4 out;
  out.a1 = f.neg(m.a1);
  out.a2 = f.neg(m.a2);
  out.a3 = f.neg(m.a3);
  out.u = add_constant(f, negate(f, m.u), f.mul(m.a1, m.a2));
  out.w = add_constant(f, negate(f, m.w), f.mul(m.a2, m.a3));
  AffineForm v = negate(f, m.v);
  v = axpy(f, std::move(v), m.a1, m.w);
  v = axpy(f, std::move(v), m.a3, m.u);
  out.v = add_constant(f, std::move(v),
                       f.neg(f.mul(f.mul(m.a1, m.a2), m.a3)));
  return out;
}

AffineU4 AffineU4Target::power(const AffineU4& m, std::int64_t k) const {
  const std::int64_t p = field.modulus();
  std::int64_t e = ((k % p) + p) % p;  // exponent p
  AffineU4 base = m, out = identity();
  while (e > 0) {
    if (e & 1) out = multiply(out, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return out;
}

AffineU4 AffineU4Target::constant(const U4Element& m) const {
  return {m.a1.value(),
          m.a2.value(),
          m.a3.value(),
          AffineForm::constant_form(unknowns, m.u.value()),
          AffineForm::constant_form(unknowns, m.v.value()),
          AffineForm::constant_form(unknowns, m.w.value())};
}

U4Element AffineU4Target::evaluate(const AffineU4& m,
                                   std::span<const Residue> point) const {
  return U4Element::make(field, m.a1, m.a2, m.a3, eval_form(field, m.u, point),
                         eval_form(field, m.v, point),
                         eval_form(field, m.w, point));
}

// ------------------------------------------------------------ Omega-bar side

namespace {

// Unknown layout shared by every solver here: kappa12 on generators, then
// kappa23, then v, then (semidirect only) v of M.
struct Layout {
  std::size_t n;
  std::size_t kappa12(std::size_t j) const { return j; }
  std::size_t kappa23(std::size_t j) const { return n + j; }
  std::size_t v(std::size_t j) const { return 2 * n + j; }
  std::size_t v_phi() const { return 3 * n; }
};

std::vector<AffineU4> symbolic_generators(const NilGroupContext& ctx,
                                          const CharacterTriple& chi,
                                          std::size_t unknowns) {
  const Layout L{ctx.rank()};
  std::vector<AffineU4> out;
  for (std::size_t j = 0; j < ctx.rank(); ++j)
    out.push_back({chi.chi1.values.at(j), chi.chi2.values.at(j),
                   chi.chi3.values.at(j),
                   AffineForm::unknown(unknowns, L.kappa12(j)),
                   AffineForm::unknown(unknowns, L.v(j)),
                   AffineForm::unknown(unknowns, L.kappa23(j))});
  return out;
}

void check_triple(const NilGroupContext& ctx, const CharacterTriple& chi) {
  for (int i = 1; i <= 3; ++i)
    if (chi[i].values.size() != ctx.rank())
      throw Error(ErrorCode::DimensionMismatch,
                  "character needs one value per generator");
}

// Appends "form = 0" as a row of A x = b.
void add_equation(const PrimeField& f, ModMatrix& a, ModVector& b,
                  const AffineForm& form) {
  a.append_row(form.coeffs);
  b.push_back(f.neg(form.constant));
}

bool constant_nonzero(Residue x) { return x != 0; }

// Equations making the relation vanish in U4 (with_v) or in U4/Z.
bool relation_equations(const NilGroupContext& ctx, const AffineU4Target& t,
                        const std::vector<AffineU4>& gens, bool with_v,
                        ModMatrix& a, ModVector& b) {
  if (ctx.flavor() == Flavor::Free) return true;
  const AffineU4 r = evaluate_in(t, gens, ctx.relation_word());
  if (constant_nonzero(r.a1) || constant_nonzero(r.a2) ||
      constant_nonzero(r.a3))
    return false;
  add_equation(t.field, a, b, r.u);
  add_equation(t.field, a, b, r.w);
  if (with_v) add_equation(t.field, a, b, r.v);
  return true;
}

U4Element make_u4(const PrimeField& f, Residue a1, Residue a2, Residue a3,
                  Residue u, Residue v, Residue w) {
  return U4Element::make(f, a1, a2, a3, u, v, w);
}

U4Representation representation_at(const NilGroupContext& ctx,
                                    const CharacterTriple& chi,
                                    std::span<const Residue> point) {
  const Layout L{ctx.rank()};
  U4Representation rho;
  for (std::size_t j = 0; j < ctx.rank(); ++j)
    rho.images.push_back(make_u4(ctx.field(), chi.chi1.values[j],
                                 chi.chi2.values[j], chi.chi3.values[j],
                                 point[L.kappa12(j)], point[L.v(j)],
                                 point[L.kappa23(j)]));
  return rho;
}

struct U4ModCenterTarget {
  using Element = U4ModCenterElement;
  PrimeField field;
  Element identity() const { return U4ModCenterElement::identity(field); }
  Element multiply(const Element& a, const Element& b) const {
    return u4mz_multiply(a, b);
  }
  Element inverse(const Element& a) const { return u4mz_inverse(a); }
  Element power(const Element& a, std::int64_t k) const {
    return u4_project_mod_center(u4_power(
        U4Element{a.a1, a.a2, a.a3, a.u, ModScalar(0, field), a.w}, k));
  }
};

}  // namespace

bool cup_vanishes(const NilGroupContext& ctx, const Character& a,
                  const Character& b) {
  if (a.values.size() != ctx.rank() || b.values.size() != ctx.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "character needs one value per generator");
  if (ctx.flavor() == Flavor::Free) return true;
  const PrimeField& f = ctx.field();
  Residue sum = 0;
  for (int i = 0; i < ctx.genus(); ++i) {
    const std::size_t x = 2 * i, y = 2 * i + 1;
    sum = f.fma(sum, a.values[x], b.values[y]);
    sum = f.sub(sum, f.mul(a.values[y], b.values[x]));
  }
  return sum == 0;
}

std::optional<DefiningSystem> massey_nonempty(const NilGroupContext& ctx,
                                              const CharacterTriple& chi) {
  check_triple(ctx, chi);
  const Layout L{ctx.rank()};
  const std::size_t unknowns = 3 * L.n;
  const AffineU4Target t{ctx.field(), unknowns};
  const auto gens = symbolic_generators(ctx, chi, unknowns);
  ModMatrix a(ctx.field(), 0, unknowns);
  ModVector b;
  if (!relation_equations(ctx, t, gens, false, a, b)) return std::nullopt;
  const SolutionSet s = solve_affine({std::move(a), std::move(b), {}});
  if (s.empty()) return std::nullopt;

  DefiningSystem ds;
  std::vector<U4ModCenterElement> images;
  for (std::size_t j = 0; j < L.n; ++j) {
    ds.kappa12.push_back(s.particular()[L.kappa12(j)]);
    ds.kappa23.push_back(s.particular()[L.kappa23(j)]);
    images.push_back(u4_project_mod_center(
        make_u4(ctx.field(), chi.chi1.values[j], chi.chi2.values[j],
                chi.chi3.values[j], ds.kappa12[j], 0, ds.kappa23[j])));
  }
  if (ctx.flavor() == Flavor::Surface &&
      !evaluate_in(U4ModCenterTarget{ctx.field()}, images,
                   ctx.relation_word())
           .is_identity())
    throw std::logic_error("defining system fails the relation mod center");
  return ds;
}

LiftFamily::LiftFamily(const NilGroupContext& ctx, CharacterTriple chi,
                       SolutionSet solutions)
    : ctx_(&ctx), chi_(std::move(chi)), solutions_(std::move(solutions)) {}

U4Representation LiftFamily::at(std::span<const Residue> coeffs) const {
  const ModVector point = solutions_.point(ctx_->field(), coeffs);
  return representation_at(*ctx_, chi_, point);
}

U4Representation LiftFamily::particular() const {
  return representation_at(*ctx_, chi_, solutions_.particular());
}

std::optional<LiftFamily> lift_family(const NilGroupContext& ctx,
                                      const CharacterTriple& chi) {
  check_triple(ctx, chi);
  const std::size_t unknowns = 3 * ctx.rank();
  const AffineU4Target t{ctx.field(), unknowns};
  const auto gens = symbolic_generators(ctx, chi, unknowns);
  ModMatrix a(ctx.field(), 0, unknowns);
  ModVector b;
  if (!relation_equations(ctx, t, gens, true, a, b)) return std::nullopt;
  SolutionSet s = solve_affine({std::move(a), std::move(b), {}});
  if (s.empty()) return std::nullopt;
  return LiftFamily(ctx, chi, std::move(s));
}

std::optional<U4Representation> contains_zero(const NilGroupContext& ctx,
                                              const CharacterTriple& chi) {
  const auto family = lift_family(ctx, chi);
  if (!family) return std::nullopt;
  U4Representation rho = family->particular();
  if (!rho.relation_image(ctx).is_identity())
    throw std::logic_error("lift fails the surface relation");
  return rho;
}

ModScalar h_ell(const NilGroupContext& ctx, const U4Representation& rho,
                const GroupElement& omega) {
  if (!ctx.lcs_member(omega, 3))
    throw Error(ErrorCode::NotInThirdLayer,
                "h_ell is defined on the degree-3 layer only");
  return rho.evaluate(ctx, omega).v;
}

ModScalar h_ell(const NilGroupContext& ctx, const CharacterTriple& chi,
                const GroupElement& omega) {
  if (!ctx.lcs_member(omega, 3))
    throw Error(ErrorCode::NotInThirdLayer,
                "h_ell is defined on the degree-3 layer only");
  const auto rho = contains_zero(ctx, chi);
  if (!rho)
    throw Error(ErrorCode::PreconditionFailed,
                "the Massey product does not contain zero");
  return h_ell(ctx, *rho, omega);
}

std::pair<Residue, Residue> minors(const NilGroupContext& ctx,
                                   const CharacterTriple& chi,
                                   const GroupElement& sigma,
                                   const GroupElement& tau) {
  const PrimeField& f = ctx.field();
  auto det = [&](const Character& p, const Character& q) {
    return f.sub(f.mul(p(ctx, sigma), q(ctx, tau)),
                 f.mul(q(ctx, sigma), p(ctx, tau)));
  };
  return {det(chi.chi1, chi.chi2), det(chi.chi2, chi.chi3)};
}

ModScalar c_det(const NilGroupContext& ctx, const CharacterTriple& chi,
                const GroupElement& sigma, const GroupElement& tau,
                const GroupElement& gamma) {
  const PrimeField& f = ctx.field();
  const auto [d12, d23] = minors(ctx, chi, sigma, tau);
  // expansion along the first row
  const Residue c = f.sub(f.mul(chi.chi3(ctx, gamma), d12),
                          f.mul(chi.chi1(ctx, gamma), d23));
  return ModScalar(c, f);
}

namespace {

std::size_t character_rank(const NilGroupContext& ctx,
                           std::initializer_list<const Character*> chars) {
  ModMatrix m(ctx.field(), 0, ctx.rank());
  for (const Character* c : chars) m.append_row(c->values);
  return rank(m);
}

}  // namespace

bool nondegenerate(const NilGroupContext& ctx, const CharacterTriple& chi) {
  check_triple(ctx, chi);
  if (chi.chi1.is_zero() || chi.chi2.is_zero() || chi.chi3.is_zero())
    return false;
  return character_rank(ctx, {&chi.chi1, &chi.chi2}) == 2 ||
         character_rank(ctx, {&chi.chi2, &chi.chi3}) == 2;
}

SurjectivityWitness surjectivity_witness(const NilGroupContext& ctx,
                                         const CharacterTriple& chi) {
  if (!nondegenerate(ctx, chi))
    throw Error(ErrorCode::PreconditionFailed,
                "condition (ii) fails: a character vanishes or both pairs "
                "are dependent");
  if (!contains_zero(ctx, chi))
    throw Error(ErrorCode::PreconditionFailed,
                "condition (i) fails: the Massey product does not contain 0");
  const PrimeField& f = ctx.field();
  const std::size_t n = ctx.rank();
  const auto d = ctx.dims();
  auto with_v1 = [&](ModVector v1) {
    return ctx.element(std::move(v1), ModVector(d[1], 0), ModVector(d[2], 0));
  };
  auto finish = [&](SurjectivityWitness w) {
    if (w.c.is_zero())
      throw std::logic_error("surjectivity witness has zero determinant");
    return w;
  };

  if (character_rank(ctx, {&chi.chi1, &chi.chi2, &chi.chi3}) == 3) {
    ModMatrix c(f, 0, n);
    for (int i = 1; i <= 3; ++i) c.append_row(chi[i].values);
    auto solve_for = [&](ModVector target) {
      const SolutionSet s = solve_affine({c, std::move(target), {}});
      return with_v1(s.particular());
    };
    // rows of the determinant become e1, e2, e3
    GroupElement gamma = solve_for({f.neg(1), 0, 0});
    GroupElement sigma = solve_for({0, 1, 0});
    GroupElement tau = solve_for({0, 0, 1});
    const auto [d12, d23] = minors(ctx, chi, sigma, tau);
    ModScalar cv = c_det(ctx, chi, sigma, tau, gamma);
    return finish({SurjectivityWitness::Case::Independent, sigma, tau, gamma,
                   d12, d23, cv});
  }

  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      const GroupElement sigma = ctx.generator(s), tau = ctx.generator(t);
      const auto [d12, d23] = minors(ctx, chi, sigma, tau);
      if (d12 == 0 && d23 == 0) continue;
      if (d12 != 0 && d23 != 0) {
        // gamma = sigma^{chi2(tau)} tau^{-chi2(sigma)}
        const GroupElement gamma = ctx.multiply(
            ctx.power(sigma, chi.chi2(ctx, tau)),
            ctx.power(tau, -static_cast<std::int64_t>(chi.chi2(ctx, sigma))));
        return finish({SurjectivityWitness::Case::BothMinors, sigma, tau,
                       gamma, d12, d23, c_det(ctx, chi, sigma, tau, gamma)});
      }
      const Character& needed = d12 == 0 ? chi.chi1 : chi.chi3;
      for (std::size_t k = 0; k < n; ++k) {
        if (needed.values[k] == 0) continue;
        const GroupElement gamma = ctx.generator(k);
        return finish({d12 == 0 ? SurjectivityWitness::Case::D23Only
                                : SurjectivityWitness::Case::D12Only,
                       sigma, tau, gamma, d12, d23,
                       c_det(ctx, chi, sigma, tau, gamma)});
      }
    }
  throw std::logic_error("no generator pair with a nonzero minor");
}

// ----------------------------------------------------------------- semidirect

SemidirectContext::SemidirectContext(ContextPtr ctx, GroupHomomorphismSpec phi)
    : ctx_(std::move(ctx)), phi_(std::move(phi)) {
  if (phi_.context()->id() != ctx_->id())
    throw Error(ErrorCode::InvalidHom, "automorphism of another context");
  if (!phi_.power(ctx_->field().modulus()).is_identity())
    throw Error(ErrorCode::BadOrder,
                "Phi^" + std::to_string(ctx_->field().modulus()) +
                    " is not the identity");
  tau_ = third_layer_columns(phi_);
}

ExtendedTriple extend_characters(
    const SemidirectContext& sctx, const CharacterTriple& chi,
    std::optional<std::array<Residue, 3>> phi_values) {
  const NilGroupContext& ctx = sctx.group();
  check_triple(ctx, chi);
  for (int i = 1; i <= 3; ++i)
    for (std::size_t k = 0; k < ctx.rank(); ++k)
      if (chi[i](ctx, sctx.phi().image(k)) != chi[i].values[k])
        throw Error(ErrorCode::NotInvariant,
                    "chi" + std::to_string(i) + " is not invariant under Phi "
                    "(generator " + GeneratorSymbol::from_position(k).name() +
                    ")");
  if (phi_values)
    for (Residue& x : *phi_values) x %= ctx.field().modulus();
  return {chi, phi_values};
}

namespace {

class StratumSearch {
 public:
  StratumSearch(const SemidirectContext& sctx, const ExtendedTriple& chi,
                bool with_v)
      : ctx_(sctx.group()),
        phi_(sctx.phi()),
        chi_(chi),
        with_v_(with_v),
        L_{ctx_.rank()},
        t_{ctx_.field(), 3 * ctx_.rank() + 1},
        gens_(symbolic_generators(ctx_, chi.base, t_.unknowns)),
        base_(ctx_.field(), 0, t_.unknowns) {
    check_triple(ctx_, chi.base);
    feasible_ = relation_equations(ctx_, t_, gens_, with_v_, base_, base_b_);
    const PushForward<AffineU4Target> push(ctx_, t_, gens_);
    for (std::size_t j = 0; j < L_.n; ++j)
      phi_images_.push_back(push(phi_.image(j)));

    const Residue p = ctx_.field().modulus();
    for (int i = 0; i < 3; ++i)
      ranges_[i] = chi.phi_values ? std::pair<Residue, Residue>{(*chi.phi_values)[i], 1}
                                  : std::pair<Residue, Residue>{0, p};
    ranges_[3] = ranges_[4] = {0, p};
    total_ = 1;
    for (const auto& r : ranges_) total_ *= r.second;
  }

  std::size_t strata() const noexcept { return feasible_ ? total_ : 0; }

  // Stratum coordinates (a1, a2, a3, u, w), last one fastest.
  std::array<Residue, 5> decode(std::size_t index) const {
    std::array<Residue, 5> out{};
    for (int i = 4; i >= 0; --i) {
      out[i] = ranges_[i].first + static_cast<Residue>(index % ranges_[i].second);
      index /= ranges_[i].second;
    }
    return out;
  }

  std::optional<SemidirectWitness> solve(std::size_t index) const {
    const PrimeField& f = ctx_.field();
    const auto c = decode(index);
    AffineU4 m{c[0], c[1], c[2], AffineForm::constant_form(t_.unknowns, c[3]),
               AffineForm::unknown(t_.unknowns, L_.v_phi()),
               AffineForm::constant_form(t_.unknowns, c[4])};
    const AffineU4 m_inv = t_.inverse(m);

    ModMatrix a = base_;
    ModVector b = base_b_;
    for (std::size_t j = 0; j < L_.n; ++j) {
      const AffineU4 conj = t_.multiply(t_.multiply(m, gens_[j]), m_inv);
      const AffineU4& target = phi_images_[j];
      if (conj.a1 != target.a1 || conj.a2 != target.a2 ||
          conj.a3 != target.a3)
        return std::nullopt;
      const Residue minus_one = f.neg(1);
      add_equation(f, a, b, axpy(f, conj.u, minus_one, target.u));
      add_equation(f, a, b, axpy(f, conj.w, minus_one, target.w));
      if (with_v_) add_equation(f, a, b, axpy(f, conj.v, minus_one, target.v));
    }
    const SolutionSet s = solve_affine({std::move(a), std::move(b), {}});
    if (s.empty()) return std::nullopt;

    const ModVector& x = s.particular();
    SemidirectWitness out{representation_at(ctx_, chi_.base, x),
                          t_.evaluate(m, x), index};
    verify(out);
    return out;
  }

 private:
  void verify(const SemidirectWitness& wit) const {
    const PrimeField& f = ctx_.field();
    auto same = [&](const U4Element& p, const U4Element& q) {
      return with_v_ ? p == q
                     : u4_project_mod_center(p) == u4_project_mod_center(q);
    };
    if (!same(wit.rho.relation_image(ctx_), U4Element::identity(f)))
      throw std::logic_error("semidirect witness fails the relation");
    const U4Element m_inv = u4_inverse(wit.phi_matrix);
    for (std::size_t j = 0; j < L_.n; ++j) {
      const U4Element lhs = wit.phi_matrix * wit.rho.images[j] * m_inv;
      if (!same(lhs, wit.rho.evaluate(ctx_, phi_.image(j))))
        throw std::logic_error("semidirect witness fails conjugation");
    }
  }

  const NilGroupContext& ctx_;
  const GroupHomomorphismSpec& phi_;
  const ExtendedTriple& chi_;
  bool with_v_;
  Layout L_;
  AffineU4Target t_;
  std::vector<AffineU4> gens_;
  ModMatrix base_;
  ModVector base_b_;
  bool feasible_ = true;
  std::vector<AffineU4> phi_images_;
  std::array<std::pair<Residue, Residue>, 5> ranges_;  // (start, count)
  std::size_t total_ = 0;
};

std::optional<SemidirectWitness> sweep(const StratumSearch& search,
                                       unsigned jobs) {
  const std::size_t total = search.strata();
  if (jobs <= 1 || total < 2 * jobs) {
    for (std::size_t i = 0; i < total; ++i)
      if (auto w = search.solve(i)) return w;
    return std::nullopt;
  }
  // Strided workers; the smallest successful index wins, so the result
  // matches the sequential sweep.
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<SemidirectWitness>> found(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < total && i < best.load(); i += jobs)
          if (auto w = search.solve(i)) {
            found[t] = std::move(w);
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::optional<SemidirectWitness> out;
  for (auto& w : found)
    if (w && (!out || w->stratum < out->stratum)) out = std::move(w);
  return out;
}

}  // namespace

std::optional<SemidirectWitness> contains_zero_semidirect(
    const SemidirectContext& sctx, const ExtendedTriple& chi,
    SearchOptions options) {
  return sweep(StratumSearch(sctx, chi, true), options.jobs);
}

std::optional<SemidirectWitness> defining_system_semidirect(
    const SemidirectContext& sctx, const ExtendedTriple& chi,
    SearchOptions options) {
  return sweep(StratumSearch(sctx, chi, false), options.jobs);
}

bool massey_nonempty_semidirect(const SemidirectContext& sctx,
                                const ExtendedTriple& chi,
                                SearchOptions options) {
  return defining_system_semidirect(sctx, chi, options).has_value();
}

}  // namespace massey
