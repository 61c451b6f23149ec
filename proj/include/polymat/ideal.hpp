#pragma once

#include "polymat/budget.hpp"
#include "polymat/monomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace polymat {

/// A monomial ideal held by its minimal generating set G(I), canonically
/// sorted so that structural equality is ideal equality. No generators is
/// the zero ideal; the single generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal.
  explicit MonomialIdeal(int nvars);
  /// Minimalizes `gens`.
  MonomialIdeal(int nvars, std::vector<Monomial> gens);

  static MonomialIdeal unit(int nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }
  /// The maximal ideal m = (x1, ..., xn).
  static MonomialIdeal maximal(int nvars);
  /// The prime generated by the variables in `vars`.
  static MonomialIdeal prime(const VarSubset& vars);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_squarefree() const;

  long min_degree() const;
  long max_degree() const;
  /// lcm of G(I); the unit monomial for the zero ideal.
  Monomial lcm() const;

  bool contains(const Monomial& m) const;
  /// Ideal containment: other ⊆ *this.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// Canonical text form, re-parseable by parse_ideal. Zero ideal is "".
  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// The divisibility-minimal elements of `gens`, deduplicated and sorted.
MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
/// I : u^k for the least k at which the colon chain stops growing.
MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& u);
/// Monomial localization at P_C: variables in `ones` are set to 1.
MonomialIdeal localize(const MonomialIdeal& ideal, const VarSubset& ones);

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int k);

enum class CombineOp { sum, product, intersect };
MonomialIdeal combine(CombineOp op, const MonomialIdeal& a, const MonomialIdeal& b);

/// I_<j>: the ideal generated by the degree-j monomials of I.
MonomialIdeal component(const MonomialIdeal& ideal, long j);

/// Throws ZeroIdealError on the zero ideal.
bool is_single_degree(const MonomialIdeal& ideal);

/// Divisors of lcm(G(I)). Every colon I:u equals I:cap_by(u, lcm), so this
/// finite set realizes all colon ideals of I.
std::vector<Monomial> capped_divisors(const MonomialIdeal& ideal, const Budget& budget = {});

/// Parses the ideal grammar and minimalizes.
MonomialIdeal parse_ideal(std::string_view text, int nvars);
/// Parses the ideal grammar and keeps the generators in input order.
std::vector<Monomial> parse_monomials(std::string_view text, int nvars);
/// Parses exactly one generator.
Monomial parse_monomial(std::string_view text, int nvars);

}  // namespace polymat
