#pragma once

#include "polymat/ideal.hpp"

#include <random>
#include <vector>

namespace testing {

inline polymat::MonomialIdeal ideal(const char* text, int n) { return polymat::parse_ideal(text, n); }
inline polymat::Monomial mono(const char* text, int n) { return polymat::parse_monomial(text, n); }

/// Seeded random ideals: up to max_gens generators of degree 1..max_deg.
inline std::vector<polymat::MonomialIdeal> random_ideals(int n, int max_deg, int max_gens, int count,
                                                          std::uint64_t seed, bool squarefree = false) {
  std::mt19937_64 rng(seed);
  std::vector<polymat::MonomialIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    const int g = 1 + static_cast<int>(rng() % max_gens);
    std::vector<polymat::Monomial> gens;
    for (int k = 0; k < g; ++k) {
      polymat::ExponentVector e = polymat::ExponentVector::Zero(n);
      const int d = 1 + static_cast<int>(rng() % max_deg);
      for (int s = 0; s < d; ++s) {
        const int i = static_cast<int>(rng() % n);
        if (squarefree && e[i] == 1) continue;
        ++e[i];
      }
      if (e.sum() == 0) e[0] = 1;
      gens.emplace_back(e);
    }
    out.emplace_back(n, std::move(gens));
  }
  return out;
}

}  // namespace testing
