#pragma once

// Independent reference computations. Nothing here calls the closed forms
// it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "massey/massey.hpp"
#include "massey/nilgroup.hpp"
#include "massey/unitriangular.hpp"

namespace massey::oracle {

/// Square matrix over Z/p, row-major.
struct Dense {
  std::size_t k = 0;
  std::vector<Residue> a;

  Residue& operator()(std::size_t r, std::size_t c) { return a[r * k + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return a[r * k + c]; }
  friend bool operator==(const Dense&, const Dense&) = default;
};

Dense dense_identity(std::size_t k);
Dense dense_from(const U4Element& m);
Dense dense_from(const U3Element& m);
Dense dense_mul(const PrimeField& f, const Dense& x, const Dense& y);
/// Gauss-Jordan on [X | I]. Throws ZeroInverse when singular.
Dense dense_inverse(const PrimeField& f, const Dense& x);
Dense dense_commutator(const PrimeField& f, const Dense& x, const Dense& y);
Dense dense_power(const PrimeField& f, const Dense& x, std::uint64_t k);

/// Tries every kappa on generators; true iff some U3 assignment with
/// superdiagonal (a, b) kills the relation word. Exponential in the rank.
bool u3_extension_exists(const NilGroupContext& ctx, const Character& a,
                         const Character& b);

/// Necklace count (1/d) sum_{e | d} mu(d/e) n^e.
std::uint64_t witt_dimension(std::uint64_t n, int d);

/// Basic commutators counted by brute enumeration of index tuples.
std::uint64_t hall_count(std::size_t n, int d);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() noexcept { return rng_; }
  Residue residue(const PrimeField& f);
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin() { return integer(0, 1) == 1; }

  U4Element u4(const PrimeField& f);
  GroupElement element(const NilGroupContext& ctx);
  Character character(const NilGroupContext& ctx);
  Character nonzero_character(const NilGroupContext& ctx);

  /// Adjusts one coordinate of c so that its cup product with other
  /// vanishes. Leaves c alone when other is zero.
  void make_cup_orthogonal(const NilGroupContext& ctx, Character& c,
                           const Character& other);

  /// A triple satisfying conditions (i) and (ii), by rejection. Shapes:
  /// 0 unconstrained, 1 chi3 in span(chi1, chi2), 2 chi3 a multiple of
  /// chi2, 3 chi1 a multiple of chi2. The last three exercise the rank-2
  /// branches of the surjectivity argument.
  CharacterTriple good_triple(const NilGroupContext& ctx, int shape = 0);

 private:
  std::mt19937_64 rng_;
};

/// Symplectic sum used by the cup-product criterion.
Residue pairing_sum(const NilGroupContext& ctx, const Character& a,
                    const Character& b);

}  // namespace massey::oracle
