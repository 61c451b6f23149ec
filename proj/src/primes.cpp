#include "polymat/primes.hpp"

#include "polymat/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace polymat {

VarSubset IrreducibleComponent::radical(int nvars) const {
  VarSubset::Bits bits = 0;
  for (const auto& [var, power] : powers) bits |= VarSubset::Bits{1} << var;
  return VarSubset(nvars, bits);
}

MonomialIdeal IrreducibleComponent::ideal(int nvars) const {
  std::vector<Monomial> gens;
  for (const auto& [var, power] : powers) gens.push_back(Monomial::variable(nvars, var).pow(power));
  return MonomialIdeal(nvars, std::move(gens));
}

namespace {

/// Q ⊆ R for irreducible components: every generator x_i^a of Q lies in R.
bool component_contained(const IrreducibleComponent& q, const IrreducibleComponent& r) {
  return std::all_of(q.powers.begin(), q.powers.end(), [&](const auto& entry) {
    const auto it = r.powers.find(entry.first);
    return it != r.powers.end() && it->second <= entry.second;
  });
}

int pure_power_variable(const Monomial& m) {
  int var = -1;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (var >= 0) return -1;
    var = i;
  }
  return var;
}

void split(const MonomialIdeal& ideal, std::set<IrreducibleComponent>& out, const Budget& budget) {
  const auto& gens = ideal.generators();
  const auto mixed = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return pure_power_variable(g) < 0; });
  if (mixed == gens.end()) {
    IrreducibleComponent c;
    for (const auto& g : gens) {
      const int var = pure_power_variable(g);
      c.powers[var] = g[var];
    }
    out.insert(std::move(c));
    if (out.size() > budget.max_components)
      throw ResourceError("irreducible decomposition exceeds " + std::to_string(budget.max_components) + " components");
    return;
  }
  // m = x_i^a * m'  =>  I = (I', x_i^a) ∩ (I', m').
  const Monomial m = *mixed;
  int var = 0;
  while (m[var] == 0) ++var;
  const Monomial pure = Monomial::variable(m.nvars(), var).pow(m[var]);
  std::vector<Monomial> rest;
  for (const auto& g : gens)
    if (!(g == m)) rest.push_back(g);
  std::vector<Monomial> left = rest, right = rest;
  left.push_back(pure);
  right.push_back(m / pure);
  split(MonomialIdeal(ideal.nvars(), std::move(left)), out, budget);
  split(MonomialIdeal(ideal.nvars(), std::move(right)), out, budget);
}

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError();
  if (ideal.is_unit()) throw DomainError("the unit ideal has no primary decomposition");
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal, const Budget& budget) {
  require_proper(ideal);
  std::set<IrreducibleComponent> found;
  split(ideal, found, budget);
  std::vector<IrreducibleComponent> all(found.begin(), found.end());
  std::vector<IrreducibleComponent> kept;
  for (std::size_t a = 0; a < all.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < all.size() && !redundant; ++b)
      redundant = a != b && component_contained(all[b], all[a]);
    if (!redundant) kept.push_back(all[a]);
  }
  return kept;
}

PrimeData associated_primes(const MonomialIdeal& ideal, const Budget& budget) {
  const int n = ideal.nvars();
  const auto components = irreducible_decomposition(ideal, budget);
  const Monomial top = ideal.lcm();

  std::set<VarSubset> candidates;
  for (const auto& c : components) candidates.insert(c.radical(n));

  PrimeData data;
  for (const auto& prime : candidates) {
    const MonomialIdeal target = MonomialIdeal::prime(prime);
    std::optional<Monomial> witness;
    // Corner of a component with this radical: a_i - 1 on the prime, full lcm elsewhere.
    for (const auto& c : components) {
      if (!(c.radical(n) == prime)) continue;
      ExponentVector e = top.exponents();
      for (const auto& [var, power] : c.powers) e[var] = power - 1;
      Monomial w(std::move(e));
      if (colon(ideal, w) == target) {
        witness = w;
        break;
      }
    }
    if (!witness) {
      for (const auto& w : capped_divisors(ideal, budget))
        if (colon(ideal, w) == target) {
          witness = w;
          break;
        }
    }
    if (!witness)
      throw ResourceError("no witness monomial found for candidate associated prime (" + prime.to_string() + ")");
    data.associated.push_back({prime, *witness});
  }
  std::sort(data.associated.begin(), data.associated.end(),
            [](const AssociatedPrime& a, const AssociatedPrime& b) { return a.prime < b.prime; });

  for (const auto& p : data.associated) {
    const bool minimal = std::none_of(data.associated.begin(), data.associated.end(), [&](const AssociatedPrime& q) {
      return !(q.prime == p.prime) && q.prime.is_subset_of(p.prime);
    });
    if (minimal) data.minimal.push_back(p.prime);
  }
  data.height = data.minimal.front().size();
  for (const auto& p : data.minimal) data.height = std::min(data.height, p.size());
  data.has_embedded = data.minimal.size() != data.associated.size();
  return data;
}

MonomialIdeal transversal(const std::vector<VarSubset>& primes, const std::vector<int>& exponents) {
  if (primes.empty()) throw DomainError("a transversal ideal needs at least one prime");
  if (primes.size() != exponents.size()) throw DomainError("one exponent per prime is required");
  const int n = primes.front().nvars();
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (primes[k].nvars() != n) throw DomainError("primes over different numbers of variables");
    if (exponents[k] < 1) throw DomainError("transversal exponents must be positive");
    if (primes[k].empty()) throw DomainError("transversal primes must be nonempty");
    out = out * power(MonomialIdeal::prime(primes[k]), exponents[k]);
  }
  return out;
}

}  // namespace polymat
