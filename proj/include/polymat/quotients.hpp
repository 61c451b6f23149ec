#pragma once

#include "polymat/budget.hpp"
#include "polymat/ideal.hpp"
#include "polymat/polymatroid.hpp"

#include <optional>
#include <vector>

namespace polymat {

/// Witnesses that `base` extends by linear quotients along `appended`:
/// (G(base), appended[0..k-1]) : appended[k] is generated by the variables
/// steps[k] (0-based indices). A zero base means plain linear quotients.
struct LinearQuotientsCertificate {
  MonomialIdeal base;
  std::vector<Monomial> appended;
  std::vector<std::vector<int>> steps;

  /// The ideal generated by base and all appended monomials.
  MonomialIdeal ideal() const;
};

struct LqCheck {
  std::optional<LinearQuotientsCertificate> certificate;
  /// Position in `order` whose colon is not generated by variables.
  std::optional<std::size_t> failing_position;
  explicit operator bool() const { return certificate.has_value(); }
};

/// Verifies `order` step by step. Throws DomainError unless G(base) and
/// `order` together are the minimal generating set of their sum.
LqCheck check_lq_order(const MonomialIdeal& base, const std::vector<Monomial>& order);

/// Exhaustive search for an admissible order of `gens` over `base`. The
/// first success in canonical candidate order is returned. Throws
/// ResourceError above budget.max_lq_generators.
std::optional<LinearQuotientsCertificate> find_lq_order(const MonomialIdeal& base, const std::vector<Monomial>& gens,
                                                        const Budget& budget = {});
std::optional<LinearQuotientsCertificate> find_lq_order(const MonomialIdeal& ideal, const Budget& budget = {});

enum class RevlexDirection { decreasing, increasing };

/// G(I) sorted by reverse lexicographic order (x1 > ... > xn) and checked.
/// Throws DomainError if I is not generated in a single degree.
LqCheck revlex_lq(const MonomialIdeal& ideal, RevlexDirection direction = RevlexDirection::decreasing);

/// Extends I·m to J by linear quotients for Veronese-type I (degree d) and
/// J (degree d+1) with I·m ⊆ J, in two stages: first to
/// I_(d+1; a_1+1..a_n+1), then raising one cap at a time in index order.
/// Throws DomainError on a precondition violation and TheoremViolation if
/// the produced order fails verification.
LinearQuotientsCertificate extend_lq_veronese(const VeroneseParams& from, const VeroneseParams& to);

/// Linear-quotients certificate for a componentwise-Veronese ideal, built
/// by chaining extend_lq_veronese across consecutive components and keeping
/// the minimal generators. Throws DomainError if the ideal is not
/// componentwise of Veronese type.
LinearQuotientsCertificate componentwise_veronese_lq(const MonomialIdeal& ideal);

}  // namespace polymat
