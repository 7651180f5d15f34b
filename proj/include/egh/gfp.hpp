#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "egh/ideal.hpp"

namespace egh {

using Residue = std::uint32_t;

/// Trial division; p must also stay below 2^31 for the arithmetic here.
bool is_prime(std::uint64_t p);

/// Throws invalid_input unless p is a prime below 2^31.
void require_prime(std::uint64_t p);

Residue inverse_mod(Residue a, Residue p);

/// Homogeneous polynomial over GF(p): coefficients on the degree-`degree`
/// monomials in lex-descending order.
struct Form {
  int degree = 0;
  std::vector<Residue> coeffs;

  friend bool operator==(const Form&, const Form&) = default;
};

/// Uniform coefficients drawn as rng() % p, so a seed reproduces the form on
/// every platform.
Form random_form(const RingContext& ring, int degree, Residue p, std::mt19937_64& rng);

/// Substitutes x_i -> images[i] (linear forms over a ring with `target`
/// variables) into f.
Form substitute_linear(const RingContext& source, const Form& f, const RingContext& target,
                       std::span<const Form> images, Residue p);

/// Row space of a dense matrix over GF(p), kept in echelon form by pivot
/// column. Rows are reduced lazily in 64-bit accumulators.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t cols, Residue p);

  /// Reduces the row against the basis; returns true when it added a pivot.
  bool insert(std::vector<std::uint64_t> row);
  std::size_t rank() const noexcept { return rank_; }
  std::size_t cols() const noexcept { return pivots_.size(); }

 private:
  Residue p_;
  std::uint64_t lazy_limit_;
  std::size_t rank_ = 0;
  std::vector<std::vector<Residue>> pivots_;  // pivots_[c] starts at column c, leading 1
};

std::size_t rank_mod_p(const std::vector<std::vector<Residue>>& rows, Residue p);

/// dim of the degree-j part of the ideal generated by the forms (Macaulay
/// matrix rank).
Count ideal_dimension(const RingContext& ring, std::span<const Form> gens, int j, Residue p);

/// Ideal-side table of (gens) on [0, jmax].
HilbertTable hilbert_table_mod_p(const RingContext& ring, std::span<const Form> gens, int jmax, Residue p);

}  // namespace egh
