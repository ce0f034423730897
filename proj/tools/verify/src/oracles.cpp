#include "verify/oracles.hpp"

#include <stdexcept>

#include "massey/error.hpp"
#include "massey/homomorphism.hpp"

namespace massey::oracle {

Dense dense_identity(std::size_t k) {
  Dense d{k, std::vector<Residue>(k * k, 0)};
  for (std::size_t i = 0; i < k; ++i) d(i, i) = 1;
  return d;
}

Dense dense_from(const U4Element& m) {
  Dense d = dense_identity(4);
  d(0, 1) = m.a1.value();
  d(1, 2) = m.a2.value();
  d(2, 3) = m.a3.value();
  d(0, 2) = m.u.value();
  d(0, 3) = m.v.value();
  d(1, 3) = m.w.value();
  return d;
}

Dense dense_from(const U3Element& m) {
  Dense d = dense_identity(3);
  d(0, 1) = m.a.value();
  d(1, 2) = m.b.value();
  d(0, 2) = m.c.value();
  return d;
}

Dense dense_mul(const PrimeField& f, const Dense& x, const Dense& y) {
  const std::size_t k = x.k;
  Dense out{k, std::vector<Residue>(k * k, 0)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const Residue xil = x(i, l);
      if (xil == 0) continue;
      for (std::size_t j = 0; j < k; ++j)
        out(i, j) = f.fma(out(i, j), xil, y(l, j));
    }
  return out;
}

Dense dense_inverse(const PrimeField& f, const Dense& x) {
  const std::size_t k = x.k;
  Dense a = x, inv = dense_identity(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a(piv, c) == 0) ++piv;
    if (piv == k) throw Error(ErrorCode::ZeroInverse, "singular matrix");
    for (std::size_t j = 0; j < k; ++j) {
      std::swap(a(c, j), a(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    const Residue s = f.inv(a(c, c));
    for (std::size_t j = 0; j < k; ++j) {
      a(c, j) = f.mul(a(c, j), s);
      inv(c, j) = f.mul(inv(c, j), s);
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Residue t = f.neg(a(r, c));
      for (std::size_t j = 0; j < k; ++j) {
        a(r, j) = f.fma(a(r, j), t, a(c, j));
        inv(r, j) = f.fma(inv(r, j), t, inv(c, j));
      }
    }
  }
  return inv;
}

Dense dense_commutator(const PrimeField& f, const Dense& x, const Dense& y) {
  return dense_mul(
      f, dense_mul(f, dense_mul(f, x, y), dense_inverse(f, x)),
      dense_inverse(f, y));
}

Dense dense_power(const PrimeField& f, const Dense& x, std::uint64_t k) {
  Dense out = dense_identity(x.k);
  for (std::uint64_t i = 0; i < k; ++i) out = dense_mul(f, out, x);
  return out;
}

namespace {

struct DenseTarget {
  using Element = Dense;
  PrimeField field;
  std::size_t k;
  Element identity() const { return dense_identity(k); }
  Element multiply(const Element& a, const Element& b) const {
    return dense_mul(field, a, b);
  }
  Element inverse(const Element& a) const { return dense_inverse(field, a); }
  Element power(const Element& a, std::int64_t e) const {
    const std::int64_t p = field.modulus();
    const std::int64_t r = ((e % p) + p) % p;
    return dense_power(field, a, static_cast<std::uint64_t>(r));
  }
};

}  // namespace

bool u3_extension_exists(const NilGroupContext& ctx, const Character& a,
                         const Character& b) {
  if (ctx.flavor() == Flavor::Free) return true;
  const PrimeField& f = ctx.field();
  const std::size_t n = ctx.rank();
  const GroupWord relation = ctx.relation_word();
  const DenseTarget target{f, 3};
  std::vector<Residue> kappa(n, 0);
  while (true) {
    std::vector<Dense> images;
    for (std::size_t j = 0; j < n; ++j) {
      Dense d = dense_identity(3);
      d(0, 1) = a.values[j];
      d(1, 2) = b.values[j];
      d(0, 2) = kappa[j];
      images.push_back(d);
    }
    if (evaluate_in(target, images, relation) == dense_identity(3))
      return true;
    std::size_t i = 0;
    while (i < n && ++kappa[i] == f.modulus()) kappa[i++] = 0;
    if (i == n) return false;
  }
}

std::uint64_t witt_dimension(std::uint64_t n, int d) {
  auto mobius = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
      }
    return m > 1 ? -result : result;
  };
  std::int64_t sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    std::int64_t pw = 1;
    for (int i = 0; i < e; ++i) pw *= static_cast<std::int64_t>(n);
    sum += mobius(d / e) * pw;
  }
  return static_cast<std::uint64_t>(sum / d);
}

std::uint64_t hall_count(std::size_t n, int d) {
  std::uint64_t count = 0;
  switch (d) {
    case 1: return n;
    case 2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) count += i > j;
      return count;
    case 3:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) count += i > j && k >= j;
      return count;
    default: return 0;
  }
}

Residue Sampler::residue(const PrimeField& f) {
  return static_cast<Residue>(
      std::uniform_int_distribution<std::uint32_t>(0, f.modulus() - 1)(rng_));
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

U4Element Sampler::u4(const PrimeField& f) {
  return U4Element::make(f, residue(f), residue(f), residue(f), residue(f),
                         residue(f), residue(f));
}

GroupElement Sampler::element(const NilGroupContext& ctx) {
  const auto d = ctx.dims();
  std::array<ModVector, 3> parts;
  for (int i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < d[i]; ++k)
      parts[i].push_back(residue(ctx.field()));
  return ctx.element(parts[0], parts[1], parts[2]);
}

Character Sampler::character(const NilGroupContext& ctx) {
  Character c = Character::zero(ctx);
  for (Residue& x : c.values) x = residue(ctx.field());
  return c;
}

Character Sampler::nonzero_character(const NilGroupContext& ctx) {
  while (true) {
    Character c = character(ctx);
    if (!c.is_zero()) return c;
  }
}

Residue pairing_sum(const NilGroupContext& ctx, const Character& a,
                    const Character& b) {
  const PrimeField& f = ctx.field();
  Residue s = 0;
  for (std::size_t i = 0; i + 1 < ctx.rank(); i += 2) {
    s = f.add(s, f.mul(a.values[i], b.values[i + 1]));
    s = f.sub(s, f.mul(a.values[i + 1], b.values[i]));
  }
  return s;
}

void Sampler::make_cup_orthogonal(const NilGroupContext& ctx, Character& c,
                                  const Character& other) {
  const PrimeField& f = ctx.field();
  const Residue s = pairing_sum(ctx, c, other);
  if (s == 0) return;
  // d s / d c[k]: other(y_i) at x_i, -other(x_i) at y_i
  for (std::size_t k = 0; k < ctx.rank(); ++k) {
    const std::size_t partner = k ^ 1;
    if (partner >= ctx.rank()) continue;
    const Residue d = k % 2 == 0 ? other.values[partner]
                                 : f.neg(other.values[partner]);
    if (d == 0) continue;
    c.values[k] = f.sub(c.values[k], f.mul(s, f.inv(d)));
    return;
  }
}

CharacterTriple Sampler::good_triple(const NilGroupContext& ctx, int shape) {
  const PrimeField& f = ctx.field();
  auto combo = [&](const Character& p, Residue a, const Character* q,
                   Residue b) {
    Character c = Character::zero(ctx);
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      c.values[k] = f.mul(a, p.values[k]);
      if (q) c.values[k] = f.fma(c.values[k], b, q->values[k]);
    }
    return c;
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    CharacterTriple t{character(ctx), nonzero_character(ctx), character(ctx)};
    make_cup_orthogonal(ctx, t.chi1, t.chi2);
    make_cup_orthogonal(ctx, t.chi3, t.chi2);
    switch (shape) {
      case 1:
        t.chi3 = combo(t.chi1, residue(f), &t.chi2, residue(f));
        break;
      case 2: t.chi3 = combo(t.chi2, residue(f), nullptr, 0); break;
      case 3: t.chi1 = combo(t.chi2, residue(f), nullptr, 0); break;
      default: break;
    }
    if (!nondegenerate(ctx, t)) continue;
    if (!contains_zero(ctx, t)) continue;
    return t;
  }
  throw std::runtime_error("could not sample a triple satisfying (i), (ii)");
}

}  // namespace massey::oracle
