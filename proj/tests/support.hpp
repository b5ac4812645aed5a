#pragma once

// Shared helpers for the unit tests: the run seed and small random
// generators for polynomials and words.

#include <cstdint>
#include <random>

#include "braidrep/braid.hpp"
#include "braidrep/group_words.hpp"
#include "braidrep/laurent.hpp"

namespace testing_support {

/// Seed for every randomized test; `--seed N` on the test binary overrides it.
std::uint64_t& seed();

/// A fresh generator per test, derived from the run seed and a per-test salt.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline int uniform(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

/// Sum of up to `terms` monomials in t1..tn, q1..qn with exponents in [-2, 2]
/// and coefficients in [-3, 3].
inline braidrep::LaurentPoly random_poly(std::mt19937_64& g, int n, int terms = 4) {
  using namespace braidrep;
  LaurentPoly p(n);
  int k = uniform(g, 0, terms);
  for (int i = 0; i < k; ++i) {
    std::vector<Monomial::Entry> entries;
    for (int v = 1; v <= n; ++v) {
      int et = uniform(g, -2, 2), eq = uniform(g, -1, 1);
      if (et) entries.push_back({VarId::t(v), et});
      if (eq && uniform(g, 0, 2) == 0) entries.push_back({VarId::q(v), eq});
    }
    p += LaurentPoly::monomial(n, Monomial(entries), uniform(g, -3, 3));
  }
  return p;
}

/// Random letters over the generators of `u`, exponents +-1 or +-2.
inline braidrep::GroupWord random_group_word(std::mt19937_64& g, const braidrep::UniversePtr& u,
                                             int max_len = 8) {
  std::vector<braidrep::Letter> letters;
  int len = uniform(g, 0, max_len);
  for (int i = 0; i < len; ++i) {
    int e = uniform(g, 1, 2) * (uniform(g, 0, 1) ? 1 : -1);
    letters.push_back({uniform(g, 0, u->generator_count() - 1), e});
  }
  return braidrep::gw_normalize(u, letters);
}

}  // namespace testing_support
