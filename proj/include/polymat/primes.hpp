#pragma once

#include "polymat/budget.hpp"
#include "polymat/ideal.hpp"

#include <map>
#include <vector>

namespace polymat {

/// An irreducible monomial ideal (x_i^{powers[i]} : i in keys).
struct IrreducibleComponent {
  std::map<int, Exponent> powers;  // 0-based variable -> positive exponent

  VarSubset radical(int nvars) const;
  MonomialIdeal ideal(int nvars) const;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

/// The irredundant irreducible decomposition of a nonzero, non-unit monomial
/// ideal, by recursively splitting generators that are not pure powers.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal, const Budget& budget = {});

struct AssociatedPrime {
  VarSubset prime;
  /// I : witness == prime.
  Monomial witness;
};

struct PrimeData {
  std::vector<AssociatedPrime> associated;  // sorted by (size, bits)
  std::vector<VarSubset> minimal;
  int height = 0;
  bool has_embedded = false;
};

/// Ass(S/I) from the radicals of the irreducible components, each validated
/// by a witness monomial w with I : w equal to the prime. Throws
/// ResourceError naming the candidate if no witness is found among the
/// divisors of lcm(G(I)).
PrimeData associated_primes(const MonomialIdeal& ideal, const Budget& budget = {});

/// The transversal ideal P_1^{a_1} ... P_r^{a_r}.
MonomialIdeal transversal(const std::vector<VarSubset>& primes, const std::vector<int>& exponents);

}  // namespace polymat
