#pragma once

#include <cstdint>
#include <random>

#include "catc/rational.hpp"

namespace catc {

// Rational p/q with |p| <= numMax and 1 <= q <= denMax.
inline Rational random_rational(std::mt19937_64& rng, long numMax = 20, long denMax = 6) {
  std::uniform_int_distribution<long> num(-numMax, numMax), den(1, denMax);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace catc
