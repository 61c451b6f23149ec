#pragma once

#include "polymat/ideal.hpp"

#include <optional>
#include <vector>

namespace polymat {

/// Parameters of the Veronese-type ideal I_(d; a_1..a_n): all degree-d
/// monomials whose x_i-exponent is at most a_i.
class VeroneseParams {
 public:
  /// Throws DomainError unless d >= 1, caps are non-negative and sum to at least d.
  VeroneseParams(long degree, std::vector<Exponent> caps);

  long degree() const { return degree_; }
  const std::vector<Exponent>& caps() const { return caps_; }
  int nvars() const { return static_cast<int>(caps_.size()); }
  /// Caps clipped to the degree; these are the exponents actually attained.
  VeroneseParams normalized() const;

  friend bool operator==(const VeroneseParams&, const VeroneseParams&) = default;

  /// "d; a1,a2,..."
  std::string to_string() const;
  static VeroneseParams parse(std::string_view text);

 private:
  long degree_;
  std::vector<Exponent> caps_;
};

/// A pair of generators and exchange indices (0-based) found while checking
/// an exchange property. For a violation of the ordinary or non-pure
/// property, `j` is absent; for the strong property it names the failing j.
struct ExchangeWitness {
  Monomial u;
  Monomial v;
  int i = -1;
  std::optional<int> j;
};

struct ExchangeVerdict {
  bool holds = false;
  /// False when the ideal is not generated in a single degree; then no
  /// exchange witness is attached.
  bool single_degree = true;
  std::optional<ExchangeWitness> witness;

  explicit operator bool() const { return holds; }
};

// All exchange predicates reject the zero ideal (ZeroIdealError). The unit
// ideal and principal ideals satisfy them vacuously. Pairs are visited in
// canonical generator order, so witnesses are deterministic.

ExchangeVerdict is_polymatroidal(const MonomialIdeal& ideal);
ExchangeVerdict is_matroidal(const MonomialIdeal& ideal);
ExchangeVerdict has_strong_exchange(const MonomialIdeal& ideal);
ExchangeVerdict has_nonpure_exchange(const MonomialIdeal& ideal);
/// For u, v in G(I) with deg_i(v) > deg_i(u), some t with deg_t(u) > deg_t(v)
/// has u*x_i/x_t in I. A consequence of polymatroidality.
ExchangeVerdict has_symmetric_exchange(const MonomialIdeal& ideal);

MonomialIdeal veronese(const VeroneseParams& params);
/// Params reconstructed from the maximal exponents, if the ideal is exactly
/// that Veronese-type ideal. Throws DomainError if not single degree.
std::optional<VeroneseParams> detect_veronese(const MonomialIdeal& ideal);

struct ComponentwiseVerdict {
  bool holds = false;
  std::optional<long> failing_degree;
  explicit operator bool() const { return holds; }
};

/// Checks I_<j> for j from the least generator degree up to the greatest,
/// plus `extra_degrees` beyond it.
ComponentwiseVerdict is_componentwise_polymatroidal(const MonomialIdeal& ideal, long extra_degrees = 0);
/// As above, but always one degree past the greatest: a Veronese-type
/// I_<d> need not stay Veronese after multiplying by m.
ComponentwiseVerdict is_componentwise_veronese(const MonomialIdeal& ideal, long extra_degrees = 0);

}  // namespace polymat
