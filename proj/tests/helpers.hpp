#pragma once

#include <random>
#include <string>
#include <vector>

#include "qkac/laurent.hpp"
#include "qkac/ratq.hpp"

namespace testing {

inline qkac::LaurentInt poly(std::int64_t low, std::vector<long> coeffs) {
  std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
  return qkac::LaurentInt::from_coefficients(low, std::move(c));
}

inline qkac::LaurentInt q(std::int64_t k = 1) { return qkac::LaurentInt::q_power(k); }

inline qkac::LaurentInt random_poly(std::mt19937& rng, int max_terms = 5, long bound = 9) {
  std::uniform_int_distribution<int> len(0, max_terms);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::uniform_int_distribution<int> low(-3, 3);
  std::vector<mpz_class> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coef(rng);
  return qkac::LaurentInt::from_coefficients(low(rng), std::move(c));
}

inline qkac::RatQ random_ratq(std::mt19937& rng) {
  qkac::LaurentInt den;
  do {
    den = random_poly(rng, 3, 4);
  } while (den.is_zero());
  return qkac::RatQ(random_poly(rng), den);
}

}  // namespace testing
