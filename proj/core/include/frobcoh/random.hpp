#pragma once

// Seeded random exact data for property tests and sampling commands.

#include <cstdint>
#include <random>

#include "frobcoh/cohomology.hpp"

namespace frobcoh {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  /// Small integers in [-bound, bound]; with probability ~1/4 a fraction
  /// n/m with 1 ≤ m ≤ bound; over Q(i) an independent imaginary part.
  Scalar scalar(const FieldSpec& field, int bound = 3);
  /// Dense random map with roughly `density` of its entries nonzero.
  LinMap linmap(const FieldSpec& field, std::size_t dim, unsigned dom, unsigned cod, double density = 0.5);
  Cochain cochain(const FrobeniusAlgebra& alg, unsigned degree, double density = 0.5);
  std::mt19937_64& engine() { return rng_; }

 private:
  Rational rational(int bound);
  std::mt19937_64 rng_;
};

}  // namespace frobcoh
