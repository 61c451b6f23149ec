#pragma once

#include "polymat/budget.hpp"
#include "polymat/ideal.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/report.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polymat::lab {

enum class SpaceMode { exhaustive, sampled };

/// A family of monomial ideals to scan. Generators are monomials of degree
/// min_degree..max_degree. Exhaustive mode enumerates every antichain of at
/// most max_generators such monomials; sampled mode draws `samples` generator
/// sets from a PRNG seeded per ideal index and minimalizes them.
struct IdealSpace {
  int nvars = 3;
  long min_degree = 1;
  long max_degree = 3;
  std::size_t max_generators = 4;
  SpaceMode mode = SpaceMode::exhaustive;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  bool squarefree_only = false;

  void validate() const;
  Json to_json() const;
};

std::vector<MonomialIdeal> enumerate_space(const IdealSpace& space, const Budget& budget = {});
/// The index-th ideal of a sampled space; depends only on (space, index).
MonomialIdeal sample_ideal(const IdealSpace& space, std::size_t index);

/// The five conditions of the colon characterization of polymatroidal
/// ideals, each quantified over all colons I:u with u dividing lcm(G(I)):
/// (a) I polymatroidal, (b) every I:u polymatroidal, (c) every I:u single
/// degree with revlex linear quotients, (d) every I:u linearly resolved,
/// (e) every I:u single degree.
struct EquivalenceRecord {
  MonomialIdeal ideal;
  std::array<bool, 5> conditions{};
  ExchangeVerdict polymatroidal;
  /// first_failure[k] is a u at which condition k (b..e) fails.
  std::array<std::optional<Monomial>, 5> first_failure;
  /// (c) re-evaluated with increasing revlex order, only when (c) disagrees with (a).
  std::optional<bool> increasing_revlex;
  bool convention_sensitive = false;
  bool violation = false;
  std::size_t distinct_colons = 0;

  Json to_json() const;
};

EquivalenceRecord verify_equivalences(const MonomialIdeal& ideal, std::int64_t characteristic = 0,
                                      const Budget& budget = {});

/// Matroidal versus localization conditions over every monomial prime
/// P_C (C ⊆ [n]), and the same conditions for powers I^k, k = 1..kmax.
struct SquarefreeRecord {
  MonomialIdeal ideal;
  int kmax = 1;
  bool matroidal = false;
  /// (b) all I(P) matroidal, (c) single degree + revlex LQ, (d) linear resolution, (e) single degree.
  std::array<bool, 4> localizations{};
  /// (b) all P, all k: I^k(P) linear; (c) all P, some k: linear; (d) all P, some k: single degree;
  /// (e) all P, all k: single degree.
  std::array<bool, 4> powers{};
  std::array<std::optional<VarSubset>, 4> localization_failure;
  std::array<std::optional<VarSubset>, 4> power_failure;
  bool violation = false;

  Json to_json() const;
};

SquarefreeRecord verify_squarefree(const MonomialIdeal& ideal, int kmax, std::int64_t characteristic = 0,
                                   const Budget& budget = {});

enum class ScanStatus { agree, forward_violation, counterexample, skipped };
const char* to_string(ScanStatus status);

/// Polymatroidal versus "every monomial localization has a linear resolution".
struct ConjectureRecord {
  MonomialIdeal ideal;
  ScanStatus status = ScanStatus::agree;
  ExchangeVerdict polymatroidal;
  bool all_localizations_linear = false;
  /// The first C (by size, then bits) whose localization is not linearly resolved.
  std::optional<VarSubset> failing_localization;
  std::string error;

  Json to_json() const;
};

ConjectureRecord evaluate_conjecture(const MonomialIdeal& ideal, std::int64_t characteristic = 0,
                                     const Budget& budget = {});

/// Re-runs the predicates on the ideal embedded in a scan item and reports
/// whether they reproduce the recorded verdicts and witness.
bool reverify_conjecture_item(const Json& item, std::int64_t characteristic);

struct LabReport {
  Json config;
  Json items = Json::array();
  Json summary;
  double elapsed_seconds = 0.0;

  /// {config, items, summary, version[, runtime]}
  Json to_json(bool include_runtime = true) const;
};

struct ScanOptions {
  std::int64_t characteristic = 0;
  Budget budget;
  unsigned threads = 0;  // 0 = hardware concurrency
};

LabReport scan_conjecture(const IdealSpace& space, const ScanOptions& options = {});
LabReport scan_conjecture(const std::vector<MonomialIdeal>& corpus, const ScanOptions& options = {});

/// Every hard-coded worked example and theorem spot check. Experimental
/// items carry status "experimental" and never fail the suite.
LabReport paper_suite(std::int64_t characteristic = 0, const Budget& budget = {});
bool suite_passed(const LabReport& report);

}  // namespace polymat::lab
