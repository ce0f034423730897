#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "massey/linalg.hpp"
#include "massey/scalar.hpp"

namespace massey {

/// x_i or y_i. Canonical order x1 < y1 < x2 < y2 < ...; the generator with
/// canonical position k is x_{k/2+1} for even k and y_{k/2+1} for odd k.
struct GeneratorSymbol {
  enum class Kind { X, Y };
  Kind kind;
  int index;  // 1-based

  static GeneratorSymbol from_position(std::size_t position);
  std::size_t position() const noexcept {
    return 2 * static_cast<std::size_t>(index - 1) + (kind == Kind::Y ? 1 : 0);
  }
  std::string name() const;
  friend bool operator==(const GeneratorSymbol&,
                         const GeneratorSymbol&) = default;
};

/// Basic commutator. Degree 1: e_i. Degree 2: [e_i, e_j] with i > j.
/// Degree 3: [[e_i, e_j], e_k] with i > j and k >= j. Indices are canonical
/// generator positions.
struct HallAtom {
  int degree;
  std::array<std::size_t, 3> index;

  std::string name() const;
  friend bool operator==(const HallAtom&, const HallAtom&) = default;
};

/// Hall basis of the free Lie ring on n generators, truncated above degree 3.
/// Degree-2 atoms are ordered by (i, j), degree-3 atoms by (i, j, k).
class HallBasis {
 public:
  explicit HallBasis(std::size_t generators);

  std::size_t generators() const noexcept { return n_; }
  std::size_t dimension(int degree) const noexcept;
  std::size_t total_dimension() const noexcept {
    return n_ + pairs_.size() + triples_.size();
  }
  const HallAtom& atom(int degree, std::size_t position) const;

  /// Position of [e_i, e_j], i > j.
  std::size_t pair_index(std::size_t i, std::size_t j) const noexcept {
    return pair_lookup_[i * n_ + j];
  }
  /// Position of [[e_i, e_j], e_k], i > j, k >= j.
  std::size_t triple_index(std::size_t i, std::size_t j,
                           std::size_t k) const noexcept {
    return triple_lookup_[(i * n_ + j) * n_ + k];
  }
  /// Offset of the first coordinate of the given degree in the flat layout
  /// (degree 1, then 2, then 3).
  std::size_t offset(int degree) const noexcept;

 private:
  std::size_t n_;
  std::vector<HallAtom> singles_;
  std::vector<HallAtom> pairs_;
  std::vector<HallAtom> triples_;
  std::vector<std::size_t> pair_lookup_;
  std::vector<std::size_t> triple_lookup_;
};

/// Element of the free class-3 Lie ring over Z/p in Hall coordinates.
struct LieVector {
  ModVector d1, d2, d3;

  static LieVector zero(const HallBasis& basis);
  ModVector flatten() const;
  static LieVector unflatten(const HallBasis& basis, std::span<const Residue> v);
  bool is_zero() const noexcept;
  friend bool operator==(const LieVector&, const LieVector&) = default;
};

/// Bracket and linear structure of the free nilpotent Lie ring of class 3.
class FreeLieRing {
 public:
  FreeLieRing(const PrimeField& field, std::size_t generators);

  const PrimeField& field() const noexcept { return field_; }
  const HallBasis& basis() const noexcept { return basis_; }

  LieVector zero() const { return LieVector::zero(basis_); }
  LieVector generator(std::size_t i) const;
  /// The Lie element of a Hall atom (a basis vector).
  LieVector atom(const HallAtom& a) const;

  LieVector add(const LieVector& a, const LieVector& b) const;
  LieVector scale(const LieVector& a, Residue c) const;
  /// a + c * b
  LieVector axpy(const LieVector& a, Residue c, const LieVector& b) const;
  /// Truncated above degree 3.
  LieVector bracket(const LieVector& a, const LieVector& b) const;

  /// [[e_i, e_j], e_k] for arbitrary generator positions, rewritten into the
  /// Hall basis with antisymmetry and Jacobi.
  LieVector triple_bracket(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  struct Term {
    std::size_t index;
    Residue coefficient;
  };
  // [pair p, e_k] as at most two degree-3 terms.
  const std::vector<Term>& pair_with_generator(std::size_t p,
                                               std::size_t k) const {
    return pair_gen_[p * basis_.generators() + k];
  }

  PrimeField field_;
  HallBasis basis_;
  std::vector<std::vector<Term>> pair_gen_;
};

}  // namespace massey
