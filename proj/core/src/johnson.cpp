#include "massey/johnson.hpp"

#include <stdexcept>

#include "massey/error.hpp"

namespace massey {

GroupHomomorphismSpec build_phi_lambda(ContextPtr ctx) {
  if (ctx->genus() < 2)
    throw Error(ErrorCode::BadGenus, "Phi_lambda needs genus >= 2");
  const std::vector<std::pair<GeneratorSymbol, GroupWord>> images{
      {{GeneratorSymbol::Kind::Y, 1}, parse_word("[[x1,x2],x2]^-8 y1")},
      {{GeneratorSymbol::Kind::Y, 2}, parse_word("[[x1,x2],x1]^8 y2")},
  };
  GroupHomomorphismSpec phi =
      GroupHomomorphismSpec::from_words(ctx, images, true);
  if (!third_layer_columns(phi))
    throw std::logic_error("Phi_lambda moves a generator below degree 3");
  if (!phi.power(ctx->field().modulus()).is_identity())
    throw std::logic_error("Phi_lambda does not have order p");
  return phi;
}

GroupElement Tau3Map::apply(const NilGroupContext& ctx,
                            const GroupElement& omega) const {
  ctx.check(omega);
  const auto d = ctx.dims();
  return ctx.element(ModVector(d[0], 0), ModVector(d[1], 0),
                     matrix.apply(omega.v1()));
}

Tau3Map tau_3_ell(const GroupHomomorphismSpec& phi) {
  auto columns = third_layer_columns(phi);
  if (!columns)
    throw Error(ErrorCode::NotInG3,
                "Phi does not act trivially modulo degree 3");
  return {std::move(*columns)};
}

Tau3Map tau_3_ell(const SemidirectContext& sctx) {
  if (!sctx.tau())
    throw Error(ErrorCode::NotInG3,
                "Phi does not act trivially modulo degree 3");
  return {*sctx.tau()};
}

PropositionReport check_proposition(const SemidirectContext& sctx,
                                    const CharacterTriple& chi,
                                    const GroupElement& omega0) {
  const NilGroupContext& ctx = sctx.group();
  PropositionReport r;
  auto fail = [&](const std::string& why) {
    if (r.note.empty()) r.note = why;
  };

  r.lift = contains_zero(ctx, chi);
  r.condition_i = r.lift.has_value();
  if (!r.condition_i) fail("(i): the Massey product does not contain 0");

  r.characters_nonzero =
      !chi.chi1.is_zero() && !chi.chi2.is_zero() && !chi.chi3.is_zero();
  auto independent = [&](const Character& a, const Character& b) {
    ModMatrix m(ctx.field(), 0, ctx.rank());
    m.append_row(a.values);
    m.append_row(b.values);
    return rank(m) == 2;
  };
  r.pair12_independent = independent(chi.chi1, chi.chi2);
  r.pair23_independent = independent(chi.chi2, chi.chi3);
  r.condition_ii = r.characters_nonzero &&
                   (r.pair12_independent || r.pair23_independent);
  if (!r.condition_ii)
    fail(r.characters_nonzero ? "(ii): both pairs are dependent"
                              : "(ii): a character is zero");

  r.phi_in_g3 = sctx.tau().has_value();
  r.omega0_in_kernel = chi.chi1(ctx, omega0) == 0 &&
                       chi.chi2(ctx, omega0) == 0 && chi.chi3(ctx, omega0) == 0;
  if (!r.phi_in_g3) {
    fail("(iii): Phi is not in G(3)");
  } else if (!r.omega0_in_kernel) {
    fail("(iii): some character is nonzero on omega0");
  } else {
    r.tau_value = tau_3_ell(sctx).apply(ctx, omega0);
    if (r.lift) {
      r.h_value = h_ell(ctx, *r.lift, *r.tau_value);
      r.condition_iii = !r.h_value->is_zero();
      if (!r.condition_iii) fail("(iii): h_ell vanishes on tau(omega0)");
    } else {
      fail("(iii): h_ell is undefined without a lift");
    }
  }
  return r;
}

// -------------------------------------------------------------- tensor side

TensorSpaceContext::TensorSpaceContext(const PrimeField& field, std::size_t n)
    : field_(field),
      n_(n),
      m_(n * (n - 1) / 2),
      pair_index_(n * n, 0),
      wedge3_{ModMatrix(field, 0, 0), {}} {
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "H needs rank >= 2");
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair_index_[i * n + j] = p++;
  ModMatrix rows(field, 0, wedge2_h_dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        rows.append_row(embed_wedge3(basis_vector(a), basis_vector(b),
                                     basis_vector(c)));
  wedge3_ = row_reduce(std::move(rows));
}

std::size_t TensorSpaceContext::pair(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n_)
    throw Error(ErrorCode::DimensionMismatch, "pair needs i < j < n");
  return pair_index_[i * n_ + j];
}

Residue TensorSpaceContext::pairing(std::size_t t, std::size_t s) const {
  if (t / 2 != s / 2 || t == s || t / 2 >= n_ / 2) return 0;
  return t % 2 == 0 ? 1 : field_.neg(1);
}

ModVector TensorSpaceContext::basis_vector(std::size_t i) const {
  ModVector v(n_, 0);
  v.at(i) = 1;
  return v;
}

ModVector TensorSpaceContext::wedge(const ModVector& a,
                                    const ModVector& b) const {
  ModVector out(m_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Residue c =
          field_.sub(field_.mul(a[i], b[j]), field_.mul(a[j], b[i]));
      out[pair(i, j)] = c;
    }
  return out;
}

ModVector TensorSpaceContext::tensor(const ModVector& p,
                                     const ModVector& q) const {
  ModVector out(p.size() * q.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      out[i * q.size() + j] = field_.mul(p[i], q[j]);
  return out;
}

ModVector TensorSpaceContext::embed_wedge3(const ModVector& a,
                                           const ModVector& b,
                                           const ModVector& c) const {
  ModVector out = tensor(wedge(a, b), c);
  for (const ModVector& t : {tensor(wedge(b, c), a), tensor(wedge(c, a), b)})
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = field_.add(out[i], t[i]);
  return out;
}

ModVector TensorSpaceContext::reduce(const ModVector& t) const {
  if (t.size() != wedge2_h_dim())
    throw Error(ErrorCode::DimensionMismatch, "expected wedge^2 H (x) H");
  return wedge3_.reduce(t);
}

ModVector wedge_square_expand(const TensorSpaceContext& tctx,
                              const ModVector& a, const ModVector& b,
                              const ModVector& s, int sign) {
  const PrimeField& f = tctx.field();
  const Residue coeff = f.reduce(sign >= 0 ? 2 : -2);
  ModVector shifted = b;
  for (std::size_t i = 0; i < shifted.size(); ++i)
    shifted[i] = f.fma(shifted[i], coeff, s[i]);
  const ModVector w = tctx.wedge(a, shifted);
  return tctx.tensor(w, w);
}

ModVector project_w(const TensorSpaceContext& tctx, const ModVector& t) {
  const PrimeField& f = tctx.field();
  const std::size_t n = tctx.h_dim(), m = tctx.wedge2_dim();
  if (t.size() != m * m)
    throw Error(ErrorCode::DimensionMismatch,
                "expected wedge^2 H (x) wedge^2 H");
  // slices[t] is the wedge^2 H (x) H component paired with trailing h_t
  std::vector<ModVector> slices(n, ModVector(m * n, 0));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) {
        const Residue c = t[p * m + tctx.pair(k, l)];
        if (c == 0) continue;
        // h_k ^ h_l -> h_k (x) h_l - h_l (x) h_k
        auto& a = slices[l][p * n + k];
        a = f.add(a, c);
        auto& b = slices[k][p * n + l];
        b = f.sub(b, c);
      }
  ModVector out(m * n * n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const ModVector r = tctx.reduce(slices[s]);
    for (std::size_t i = 0; i < m * n; ++i) out[i * n + s] = r[i];
  }
  return out;
}

Tau3Map tensor_to_hom(const TensorSpaceContext& tctx,
                      const NilGroupContext& ctx, const ModVector& t) {
  const PrimeField& f = ctx.field();
  const std::size_t n = tctx.h_dim(), m = tctx.wedge2_dim();
  if (n != ctx.rank())
    throw Error(ErrorCode::DimensionMismatch, "H and the group disagree");
  if (t.size() != m * n * n)
    throw Error(ErrorCode::DimensionMismatch,
                "expected (wedge^2 H (x) H) (x) H");
  const FreeLieRing& lie = ctx.lie();

  // Lie element of each trailing slice
  std::vector<LieVector> slice_lie(n, lie.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = tctx.pair(i, j) * n + k;
        const LieVector atom = lie.triple_bracket(i, j, k);
        for (std::size_t s = 0; s < n; ++s) {
          const Residue c = t[row * n + s];
          if (c != 0) slice_lie[s] = lie.axpy(slice_lie[s], c, atom);
        }
      }

  Tau3Map out{ModMatrix(f, ctx.dims()[2], n)};
  for (std::size_t e = 0; e < n; ++e) {
    LieVector image = lie.zero();
    for (std::size_t s = 0; s < n; ++s) {
      const Residue c = tctx.pairing(s, e);
      if (c != 0) image = lie.axpy(image, c, slice_lie[s]);
    }
    const GroupElement g = ctx.from_lie(image);
    for (std::size_t q = 0; q < g.v3().size(); ++q) out.matrix(q, e) = g.v3()[q];
  }
  return out;
}

}  // namespace massey
