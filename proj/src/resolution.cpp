#include "polymat/resolution.hpp"

#include "polymat/errors.hpp"
#include "polymat/linalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace polymat {

namespace {

using Face = SimplicialComplex::Face;

bool face_less(Face a, Face b) { return a < b; }

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int nverts, std::vector<Face> faces) {
  if (nverts < 0 || nverts > 31) throw DomainError("simplicial complexes support at most 31 vertices");
  SimplicialComplex out;
  out.nverts_ = nverts;
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  const Face universe = nverts == 0 ? 0 : ((Face{1} << nverts) - 1);
  for (Face f : faces) {
    if ((f & ~universe) != 0) throw DomainError("face uses a vertex outside the vertex set");
    for (Face rest = f; rest != 0; rest &= rest - 1) {
      const Face without = f & ~(rest & -rest);
      if (!std::binary_search(faces.begin(), faces.end(), without))
        throw DomainError("face set is not closed under taking subsets");
    }
    const int dim = std::popcount(f) - 1;
    if (out.by_dim_.size() < static_cast<std::size_t>(dim + 2)) out.by_dim_.resize(dim + 2);
    out.by_dim_[dim + 1].push_back(f);
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(int nverts, const std::vector<Face>& facets) {
  std::unordered_set<Face> all;
  for (Face f : facets) {
    // Enumerate every submask of f, including f and 0.
    for (Face s = f;; s = (s - 1) & f) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  return from_faces(nverts, {all.begin(), all.end()});
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
  static const std::vector<Face> none;
  if (k < -1 || k + 1 >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[k + 1];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& layer : by_dim_) total += layer.size();
  return total;
}

bool SimplicialComplex::contains(Face f) const {
  const auto& layer = faces(std::popcount(f) - 1);
  return std::binary_search(layer.begin(), layer.end(), f, face_less);
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (int k = dimension(); k >= -1; --k)
    for (Face f : faces(k)) {
      const bool covered = std::any_of(out.begin(), out.end(), [f](Face g) { return (f & ~g) == 0; });
      if (!covered) out.push_back(f);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Boundary map from k-faces to (k-1)-faces.
linalg::IntMatrix boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  linalg::IntMatrix d = linalg::IntMatrix::Zero(static_cast<Eigen::Index>(lower.size()),
                                                static_cast<Eigen::Index>(upper.size()));
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Face f = upper[c];
    int position = 0;
    for (Face rest = f; rest != 0; rest &= rest - 1, ++position) {
      const Face without = f & ~(rest & -rest);
      const auto it = std::lower_bound(lower.begin(), lower.end(), without);
      d(it - lower.begin(), static_cast<Eigen::Index>(c)) = (position % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

}  // namespace

std::vector<long> SimplicialComplex::reduced_homology(std::int64_t characteristic) const {
  linalg::check_characteristic(characteristic);
  const int top = dimension();
  std::vector<long> out;
  if (is_void()) return out;
  // boundary_rank[k+1] = rank of ∂_k : C_k → C_{k-1}; ∂_{-1} = 0.
  std::vector<long> boundary_rank(static_cast<std::size_t>(top + 3), 0);
  for (int k = 0; k <= top; ++k)
    boundary_rank[k + 1] = linalg::rank(boundary_matrix(faces(k - 1), faces(k)), characteristic);
  for (int k = -1; k <= top; ++k) {
    const long chains = static_cast<long>(faces(k).size());
    out.push_back(chains - boundary_rank[k + 1] - boundary_rank[k + 2]);
  }
  return out;
}

long SimplicialComplex::reduced_euler_characteristic() const {
  long chi = 0;
  for (int k = -1; k <= dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(faces(k).size());
  return chi;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& multidegree) {
  if (multidegree.nvars() != ideal.nvars()) throw DomainError("multidegree over a different number of variables");
  const Face support = multidegree.support().bits();
  std::vector<Face> faces;
  for (Face tau = support;; tau = (tau - 1) & support) {
    ExponentVector e = multidegree.exponents();
    for (Face rest = tau; rest != 0; rest &= rest - 1) --e[std::countr_zero(rest)];
    if (ideal.contains(Monomial(std::move(e)))) faces.push_back(tau);
    if (tau == 0) break;
  }
  return SimplicialComplex::from_faces(ideal.nvars(), std::move(faces));
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const Budget& budget) {
  const auto& gens = ideal.generators();
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        Monomial joined = lcm(m, g);
        if (seen.insert(joined).second) {
          if (seen.size() > budget.max_lattice)
            throw ResourceError("lcm lattice of " + ideal.to_string() + " exceeds " +
                                std::to_string(budget.max_lattice) + " elements");
          next.push_back(std::move(joined));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

long BettiTable::operator()(int i, long j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, long j, long rank) {
  if (rank < 0) throw DomainError("negative Betti number");
  if (rank == 0) return;
  entries_[{i, j}] += rank;
}

std::vector<long> BettiTable::generator_degrees() const {
  std::vector<long> out;
  for (const auto& [key, rank] : entries_)
    if (key.first == 0) out.insert(out.end(), static_cast<std::size_t>(rank), key.second);
  return out;
}

long BettiTable::regularity() const {
  if (entries_.empty()) throw ZeroIdealError();
  long reg = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, rank] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty()) throw ZeroIdealError();
  return entries_.rbegin()->first.first;
}

BettiTable betti_table(const MonomialIdeal& ideal, std::int64_t characteristic, const Budget& budget) {
  linalg::check_characteristic(characteristic);
  if (ideal.is_zero()) throw ZeroIdealError();
  BettiTable table;
  for (const auto& b : lcm_lattice(ideal, budget)) {
    const auto homology = upper_koszul_complex(ideal, b).reduced_homology(characteristic);
    for (std::size_t idx = 0; idx < homology.size(); ++idx)
      table.add(static_cast<int>(idx), b.degree(), homology[idx]);  // β_{i,b} = H~_{i-1}
  }
  return table;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiTable& table) {
  if (!is_single_degree(ideal)) return false;
  const long d = ideal.min_degree();
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [d](const auto& entry) { return entry.first.second == entry.first.first + d; });
}

bool has_linear_resolution(const MonomialIdeal& ideal, std::int64_t characteristic, const Budget& budget) {
  if (!is_single_degree(ideal)) return false;
  return has_linear_resolution(ideal, betti_table(ideal, characteristic, budget));
}

bool has_linear_relations(const MonomialIdeal& ideal, std::int64_t characteristic, const Budget& budget) {
  if (!is_single_degree(ideal)) throw DomainError("linear relations are defined for ideals generated in one degree");
  const long d = ideal.min_degree();
  const BettiTable table = betti_table(ideal, characteristic, budget);
  return std::all_of(table.entries().begin(), table.entries().end(), [d](const auto& entry) {
    return entry.first.first != 1 || entry.first.second == d + 1;
  });
}

ComponentwiseLinearVerdict is_componentwise_linear(const MonomialIdeal& ideal, std::int64_t characteristic,
                                                   const Budget& budget, long extra_degrees) {
  if (ideal.is_zero()) throw ZeroIdealError();
  if (extra_degrees < 0) throw DomainError("extra degrees must be non-negative");
  for (long j = ideal.min_degree(); j <= ideal.max_degree() + extra_degrees; ++j)
    if (!has_linear_resolution(component(ideal, j), characteristic, budget)) return {false, j};
  return {true, std::nullopt};
}

}  // namespace polymat
