#include "polymat/ideal.hpp"

#include "polymat/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace polymat {

namespace {

void check_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw DomainError("ideals over different numbers of variables");
}

void check_same(const MonomialIdeal& a, const Monomial& u) {
  if (a.nvars() != u.nvars()) throw DomainError("monomial and ideal over different numbers of variables");
}

}  // namespace

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal::MonomialIdeal(int nvars) : nvars_(nvars) {
  Monomial probe(nvars);  // validates the range
  (void)probe;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : MonomialIdeal(nvars) {
  for (const auto& g : gens)
    if (g.nvars() != nvars)
      throw DomainError("generator " + g.to_string() + " has " + std::to_string(g.nvars()) +
                        " variables, expected " + std::to_string(nvars));
  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  gens_.reserve(gens.size());
  // Degree-ascending order: only earlier generators can divide later ones.
  for (auto& g : gens) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::maximal(int nvars) { return prime(VarSubset::all(nvars)); }

MonomialIdeal MonomialIdeal::prime(const VarSubset& vars) {
  std::vector<Monomial> gens;
  for (int i : vars.members()) gens.push_back(Monomial::variable(vars.nvars(), i));
  return MonomialIdeal(vars.nvars(), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

long MonomialIdeal::min_degree() const {
  if (is_zero()) throw ZeroIdealError();
  return gens_.front().degree();
}

long MonomialIdeal::max_degree() const {
  if (is_zero()) throw ZeroIdealError();
  return gens_.back().degree();
}

Monomial MonomialIdeal::lcm() const {
  Monomial out(nvars_);
  for (const auto& g : gens_) out = polymat::lcm(out, g);
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_same(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
  std::string s;
  for (const auto& g : gens_) {
    if (!s.empty()) s += ", ";
    s += g.to_string();
  }
  return s;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  check_same(ideal, u);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& v : ideal.generators()) gens.push_back(colon_part(v, u));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& u) {
  check_same(ideal, u);
  MonomialIdeal current = colon(ideal, u);
  Monomial power = u;
  while (true) {
    power = power * u;
    MonomialIdeal next = colon(ideal, power);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal localize(const MonomialIdeal& ideal, const VarSubset& ones) {
  if (ones.nvars() != ideal.nvars()) throw DomainError("variable subset over a different number of variables");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.dehomogenize(ones));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::unordered_set<Monomial, MonomialHash> products;
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) products.insert(u * v);
  return MonomialIdeal(a.nvars(), {products.begin(), products.end()});
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::unordered_set<Monomial, MonomialHash> lcms;
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) lcms.insert(lcm(u, v));
  return MonomialIdeal(a.nvars(), {lcms.begin(), lcms.end()});
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw DomainError("power exponent must be positive");
  MonomialIdeal out = ideal;
  for (int i = 1; i < k; ++i) out = out * ideal;
  return out;
}

MonomialIdeal combine(CombineOp op, const MonomialIdeal& a, const MonomialIdeal& b) {
  switch (op) {
    case CombineOp::sum: return a + b;
    case CombineOp::product: return a * b;
    case CombineOp::intersect: return intersect(a, b);
  }
  throw DomainError("unknown combine operation");
}

MonomialIdeal component(const MonomialIdeal& ideal, long j) {
  if (j < 0) throw DomainError("component degree must be non-negative");
  std::unordered_set<Monomial, MonomialHash> degree_j;
  for (const auto& v : ideal.generators()) {
    const long gap = j - v.degree();
    if (gap < 0) break;  // generators are degree-sorted
    for (const auto& w : monomials_of_degree(ideal.nvars(), gap)) degree_j.insert(v * w);
  }
  return MonomialIdeal(ideal.nvars(), {degree_j.begin(), degree_j.end()});
}

bool is_single_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError();
  return ideal.min_degree() == ideal.max_degree();
}

std::vector<Monomial> capped_divisors(const MonomialIdeal& ideal, const Budget& budget) {
  const Monomial top = ideal.lcm();
  std::size_t count = 1;
  for (int i = 0; i < top.nvars(); ++i) {
    count *= static_cast<std::size_t>(top[i]) + 1;
    if (count > budget.max_enumeration)
      throw ResourceError("lcm of " + ideal.to_string() + " has more than " +
                          std::to_string(budget.max_enumeration) + " divisors");
  }
  return divisors(top);
}

}  // namespace polymat
