#pragma once

#include "polymat/budget.hpp"
#include "polymat/ideal.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace polymat {

/// A simplicial complex on vertices 0..nverts-1 with faces as bitmasks.
/// Faces are kept closed under subsets; the void complex has no faces at all,
/// every other complex contains the empty face.
class SimplicialComplex {
 public:
  using Face = std::uint32_t;

  SimplicialComplex() = default;
  /// Subset closure of `facets`.
  static SimplicialComplex from_facets(int nverts, const std::vector<Face>& facets);
  /// `faces` must already be subset-closed; throws DomainError otherwise.
  static SimplicialComplex from_faces(int nverts, std::vector<Face> faces);

  int nverts() const { return nverts_; }
  bool is_void() const { return by_dim_.empty(); }
  /// Dimension of the largest face; -1 for {∅}, -2 for the void complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }
  /// Faces of dimension k >= -1, sorted.
  const std::vector<Face>& faces(int k) const;
  std::size_t face_count() const;
  std::vector<Face> facets() const;
  bool contains(Face f) const;

  /// Ranks of reduced homology: entry k+1 is dim H~_k for k = -1..dimension().
  std::vector<long> reduced_homology(std::int64_t characteristic) const;
  /// Sum of (-1)^k f_k over k >= -1.
  long reduced_euler_characteristic() const;

 private:
  int nverts_ = 0;
  std::vector<std::vector<Face>> by_dim_;  // by_dim_[k+1] = faces of dimension k
};

/// The upper Koszul complex K^b(I) = { squarefree τ ⊆ supp(b) : x^b / x^τ ∈ I }.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& multidegree);

/// Join-closure of the generator multidegrees under lcm, canonically sorted.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const Budget& budget = {});

class BettiTable {
 public:
  /// β_{i,j}; zero when absent.
  long operator()(int i, long j) const;
  void add(int i, long j, long rank);

  const std::map<std::pair<int, long>, long>& entries() const { return entries_; }
  /// Degrees of the minimal generators, ascending, with multiplicity.
  std::vector<long> generator_degrees() const;
  /// max { j - i : β_{i,j} ≠ 0 }.
  long regularity() const;
  int projective_dimension() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, long>, long> entries_;  // only nonzero ranks
};

/// Graded Betti numbers of I over the prime field of the given
/// characteristic, via reduced homology of upper Koszul complexes over the
/// lcm lattice. Throws ResourceError if the lattice exceeds the budget.
BettiTable betti_table(const MonomialIdeal& ideal, std::int64_t characteristic = 0, const Budget& budget = {});

/// Single degree d and β_{i,j} = 0 whenever j ≠ i + d.
bool has_linear_resolution(const MonomialIdeal& ideal, std::int64_t characteristic = 0, const Budget& budget = {});
bool has_linear_resolution(const MonomialIdeal& ideal, const BettiTable& table);
/// β_{1,j} = 0 for j ≠ d + 1. Throws DomainError if not single degree.
bool has_linear_relations(const MonomialIdeal& ideal, std::int64_t characteristic = 0, const Budget& budget = {});

struct ComponentwiseLinearVerdict {
  bool holds = false;
  std::optional<long> failing_degree;
  explicit operator bool() const { return holds; }
};

/// Every I_<j> for j from the least to the greatest generator degree
/// (plus `extra_degrees`) has a linear resolution.
ComponentwiseLinearVerdict is_componentwise_linear(const MonomialIdeal& ideal, std::int64_t characteristic = 0,
                                                   const Budget& budget = {}, long extra_degrees = 0);

}  // namespace polymat
