#include "massey/lie.hpp"

#include "massey/error.hpp"

namespace massey {

GeneratorSymbol GeneratorSymbol::from_position(std::size_t position) {
  return {position % 2 == 0 ? Kind::X : Kind::Y,
          static_cast<int>(position / 2) + 1};
}

std::string GeneratorSymbol::name() const {
  return (kind == Kind::X ? "x" : "y") + std::to_string(index);
}

std::string HallAtom::name() const {
  auto gen = [](std::size_t p) {
    return GeneratorSymbol::from_position(p).name();
  };
  switch (degree) {
    case 1: return gen(index[0]);
    case 2: return "[" + gen(index[0]) + "," + gen(index[1]) + "]";
    default:
      return "[[" + gen(index[0]) + "," + gen(index[1]) + "]," +
             gen(index[2]) + "]";
  }
}

HallBasis::HallBasis(std::size_t generators)
    : n_(generators),
      pair_lookup_(generators * generators, 0),
      triple_lookup_(generators * generators * generators, 0) {
  for (std::size_t i = 0; i < n_; ++i) singles_.push_back({1, {i, 0, 0}});
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      pair_lookup_[i * n_ + j] = pairs_.size();
      pairs_.push_back({2, {i, j, 0}});
    }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = j; k < n_; ++k) {
        triple_lookup_[(i * n_ + j) * n_ + k] = triples_.size();
        triples_.push_back({3, {i, j, k}});
      }
}

std::size_t HallBasis::dimension(int degree) const noexcept {
  switch (degree) {
    case 1: return singles_.size();
    case 2: return pairs_.size();
    case 3: return triples_.size();
    default: return 0;
  }
}

std::size_t HallBasis::offset(int degree) const noexcept {
  switch (degree) {
    case 1: return 0;
    case 2: return n_;
    case 3: return n_ + pairs_.size();
    default: return total_dimension();
  }
}

const HallAtom& HallBasis::atom(int degree, std::size_t position) const {
  switch (degree) {
    case 1: return singles_.at(position);
    case 2: return pairs_.at(position);
    case 3: return triples_.at(position);
    default:
      throw Error(ErrorCode::DimensionMismatch, "Hall atoms have degree 1..3");
  }
}

LieVector LieVector::zero(const HallBasis& basis) {
  return {ModVector(basis.dimension(1), 0), ModVector(basis.dimension(2), 0),
          ModVector(basis.dimension(3), 0)};
}

ModVector LieVector::flatten() const {
  ModVector out;
  out.reserve(d1.size() + d2.size() + d3.size());
  out.insert(out.end(), d1.begin(), d1.end());
  out.insert(out.end(), d2.begin(), d2.end());
  out.insert(out.end(), d3.begin(), d3.end());
  return out;
}

LieVector LieVector::unflatten(const HallBasis& basis,
                               std::span<const Residue> v) {
  if (v.size() != basis.total_dimension())
    throw Error(ErrorCode::DimensionMismatch, "flat Lie vector length");
  const auto o2 = basis.offset(2), o3 = basis.offset(3);
  return {ModVector(v.begin(), v.begin() + o2),
          ModVector(v.begin() + o2, v.begin() + o3),
          ModVector(v.begin() + o3, v.end())};
}

bool LieVector::is_zero() const noexcept {
  for (const ModVector* part : {&d1, &d2, &d3})
    for (Residue x : *part)
      if (x != 0) return false;
  return true;
}

FreeLieRing::FreeLieRing(const PrimeField& field, std::size_t generators)
    : field_(field), basis_(generators) {
  const std::size_t n = generators;
  pair_gen_.resize(basis_.dimension(2) * n);
  const Residue one = 1, minus_one = field_.neg(1);
  for (std::size_t p = 0; p < basis_.dimension(2); ++p) {
    const auto [i, j, unused] = basis_.atom(2, p).index;
    for (std::size_t k = 0; k < n; ++k) {
      auto& terms = pair_gen_[p * n + k];
      if (k >= j) {
        terms.push_back({basis_.triple_index(i, j, k), one});
      } else {
        // i > j > k: [[e_i,e_j],e_k] = [[e_i,e_k],e_j] - [[e_j,e_k],e_i]
        terms.push_back({basis_.triple_index(i, k, j), one});
        terms.push_back({basis_.triple_index(j, k, i), minus_one});
      }
    }
  }
}

LieVector FreeLieRing::generator(std::size_t i) const {
  if (i >= basis_.generators())
    throw Error(ErrorCode::UnknownGenerator,
                "generator position " + std::to_string(i));
  LieVector v = zero();
  v.d1[i] = 1;
  return v;
}

LieVector FreeLieRing::atom(const HallAtom& a) const {
  LieVector v = zero();
  switch (a.degree) {
    case 1: v.d1.at(a.index[0]) = 1; break;
    case 2: v.d2.at(basis_.pair_index(a.index[0], a.index[1])) = 1; break;
    case 3:
      v.d3.at(basis_.triple_index(a.index[0], a.index[1], a.index[2])) = 1;
      break;
    default: throw Error(ErrorCode::DimensionMismatch, "atom degree");
  }
  return v;
}

LieVector FreeLieRing::add(const LieVector& a, const LieVector& b) const {
  return axpy(a, 1, b);
}

LieVector FreeLieRing::scale(const LieVector& a, Residue c) const {
  LieVector out = a;
  for (ModVector* part : {&out.d1, &out.d2, &out.d3})
    for (Residue& x : *part) x = field_.mul(x, c);
  return out;
}

LieVector FreeLieRing::axpy(const LieVector& a, Residue c,
                            const LieVector& b) const {
  LieVector out = a;
  auto go = [&](ModVector& dst, const ModVector& src) {
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] = field_.fma(dst[i], c, src[i]);
  };
  go(out.d1, b.d1);
  go(out.d2, b.d2);
  go(out.d3, b.d3);
  return out;
}

LieVector FreeLieRing::bracket(const LieVector& a, const LieVector& b) const {
  const std::size_t n = basis_.generators();
  LieVector out = zero();
  for (std::size_t x = 0; x < n; ++x) {
    if (a.d1[x] == 0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (b.d1[y] == 0 || x == y) continue;
      const Residue c = field_.mul(a.d1[x], b.d1[y]);
      if (x > y) {
        auto& slot = out.d2[basis_.pair_index(x, y)];
        slot = field_.add(slot, c);
      } else {
        auto& slot = out.d2[basis_.pair_index(y, x)];
        slot = field_.sub(slot, c);
      }
    }
  }
  // [A2, B1] - [B2, A1]
  auto accumulate = [&](const ModVector& deg2, const ModVector& deg1,
                        bool negate) {
    for (std::size_t p = 0; p < deg2.size(); ++p) {
      if (deg2[p] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (deg1[k] == 0) continue;
        Residue c = field_.mul(deg2[p], deg1[k]);
        if (negate) c = field_.neg(c);
        for (const Term& t : pair_with_generator(p, k))
          out.d3[t.index] = field_.fma(out.d3[t.index], c, t.coefficient);
      }
    }
  };
  accumulate(a.d2, b.d1, false);
  accumulate(b.d2, a.d1, true);
  return out;
}

LieVector FreeLieRing::triple_bracket(std::size_t i, std::size_t j,
                                      std::size_t k) const {
  return bracket(bracket(generator(i), generator(j)), generator(k));
}

}  // namespace massey
