#pragma once

#include <random>
#include <vector>

#include "scdt/quad_ext.hpp"

namespace test {

inline scdt::QuadExt q(const char* literal) { return scdt::parse_quad(literal); }

inline std::vector<scdt::QuadExt> qs(std::initializer_list<const char*> literals) {
  std::vector<scdt::QuadExt> out;
  for (const char* l : literals) out.push_back(q(l));
  return out;
}

/// Random rational with numerator in [-span, span] and denominator in [1, span].
inline scdt::Rational random_rational(std::mt19937_64& rng, long span) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return scdt::make_rational(num(rng), den(rng));
}

inline scdt::QuadExt random_quad(std::mt19937_64& rng, std::int64_t d, long span = 40) {
  return scdt::QuadExt::normalize(random_rational(rng, span), random_rational(rng, span), d);
}

}  // namespace test
