#pragma once

#include <random>

#include "h2c/algebra.hpp"

namespace h2c {

// Deterministic generator of exact scalars and elements for property sweeps.
// Rational values are kept small so products stay cheap.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  Scalar scalar(const FieldSpec& f);
  Element element(const Algebra& a);
  std::uint64_t uniform(std::uint64_t bound);  // in [0, bound)

 private:
  std::mt19937_64 eng_;
};

}  // namespace h2c
