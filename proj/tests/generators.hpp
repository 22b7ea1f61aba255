#pragma once

// Small hand-rolled generators for the property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "dcb/laurent.hpp"
#include "dcb/multisegment.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Up to `terms` terms, exponents in [-span, span], coefficients in [-9, 9].
inline dcb::LaurentPoly laurent(Rng& rng, int terms = 4, int span = 4) {
  std::vector<std::pair<int, dcb::BigInt>> out;
  const int n = uniform(rng, 0, terms);
  for (int i = 0; i < n; ++i) out.emplace_back(uniform(rng, -span, span), uniform(rng, -9, 9));
  return dcb::LaurentPoly::from_terms(std::move(out));
}

inline dcb::Segment segment(Rng& rng, int lo, int hi) {
  const int a = uniform(rng, lo, hi);
  const int b = uniform(rng, lo, hi);
  return dcb::Segment(std::min(a, b), std::max(a, b));
}

// Nonempty, at most `count` segments inside [lo, hi].
inline dcb::Multisegment multisegment(Rng& rng, int count, int lo, int hi) {
  std::vector<dcb::Segment> segs;
  const int n = uniform(rng, 1, count);
  for (int i = 0; i < n; ++i) segs.push_back(segment(rng, lo, hi));
  return dcb::Multisegment(std::move(segs));
}

}  // namespace gen
