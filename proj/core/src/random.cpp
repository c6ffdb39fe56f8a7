#include "frobcoh/random.hpp"

namespace frobcoh {

Rational RandomSource::rational(int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  std::uniform_int_distribution<int> coin(0, 3);
  const int n = num(rng_);
  if (coin(rng_) == 0) return Rational(n) / Rational(den(rng_));
  return Rational(n);
}

Scalar RandomSource::scalar(const FieldSpec& field, int bound) {
  switch (field.kind()) {
    case FieldSpec::Kind::PrimeField: {
      std::uniform_int_distribution<std::uint64_t> v(0, field.modulus() - 1);
      return Scalar::from_int(field, static_cast<std::int64_t>(v(rng_)));
    }
    case FieldSpec::Kind::GaussianRationals:
      return Scalar(Gaussian{rational(bound), rational(bound)});
    case FieldSpec::Kind::Rationals:
      break;
  }
  return Scalar(rational(bound));
}

LinMap RandomSource::linmap(const FieldSpec& field, std::size_t dim, unsigned dom, unsigned cod, double density) {
  LinMap f(field, dim, dom, cod);
  std::bernoulli_distribution keep(density);
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      if (keep(rng_)) f.set(r, c, scalar(field));
    }
  }
  return f;
}

Cochain RandomSource::cochain(const FrobeniusAlgebra& alg, unsigned degree, double density) {
  Cochain c = Cochain::zero(alg, degree);
  for (unsigned i = 1; i <= degree; ++i) {
    c.components[i - 1] = linmap(alg.field(), alg.dim(), degree + 1 - i, i, density);
  }
  return c;
}

}  // namespace frobcoh
