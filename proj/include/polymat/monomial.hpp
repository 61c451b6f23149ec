#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace polymat {

inline constexpr int kMaxVars = 16;

using Exponent = std::int32_t;

/// Exponent vectors live inline: fixed capacity, dynamic length, no heap.
using ExponentVector = Eigen::Matrix<Exponent, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxVars, 1>;

/// A set of variable indices (0-based internally, 1-based in text).
class VarSubset {
 public:
  using Bits = std::uint32_t;

  VarSubset() = default;
  explicit VarSubset(int nvars, Bits bits = 0);
  /// From 1-based indices, as written on the command line.
  static VarSubset from_one_based(int nvars, const std::vector<int>& indices);
  static VarSubset all(int nvars) { return VarSubset(nvars, full_mask(nvars)); }

  int nvars() const { return nvars_; }
  Bits bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::vector<int> members() const;
  VarSubset complement() const { return VarSubset(nvars_, ~bits_ & full_mask(nvars_)); }
  bool is_subset_of(const VarSubset& other) const { return (bits_ & ~other.bits_) == 0; }

  /// "x1, x3" style listing; the empty set prints as "0".
  std::string to_string() const;

  friend bool operator==(const VarSubset&, const VarSubset&) = default;
  friend auto operator<=>(const VarSubset& a, const VarSubset& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  static Bits full_mask(int nvars) { return nvars >= 32 ? ~Bits{0} : ((Bits{1} << nvars) - 1); }

 private:
  int nvars_ = 0;
  Bits bits_ = 0;
};

class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(int nvars);
  explicit Monomial(ExponentVector exps);
  Monomial(std::initializer_list<Exponent> exps);

  static Monomial variable(int nvars, int index);
  /// x_C = product of the variables in C.
  static Monomial product_of(const VarSubset& vars);

  int nvars() const { return static_cast<int>(exps_.size()); }
  Exponent operator[](int i) const { return exps_[i]; }
  const ExponentVector& exponents() const { return exps_; }

  long degree() const { return exps_.template cast<long>().sum(); }
  bool is_unit() const { return (exps_.array() == 0).all(); }
  bool is_squarefree() const { return (exps_.array() <= 1).all(); }
  bool divides(const Monomial& other) const { return (exps_.array() <= other.exps_.array()).all(); }
  VarSubset support() const;
  /// Index of the variable if this is a single variable, else -1.
  int as_variable() const;

  /// Checked product; throws DomainError on exponent overflow.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact division; throws DomainError if `b` does not divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  Monomial pow(Exponent k) const;
  /// Same monomial with the variables in C set to 1.
  Monomial dehomogenize(const VarSubset& ones) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars() == b.nvars() && a.exps_ == b.exps_;
  }

  /// "x1^2*x3"; the unit prints as "1".
  std::string to_string() const;

 private:
  ExponentVector exps_;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// v / gcd(v, u): the generator contributed by v to the colon by u.
Monomial colon_part(const Monomial& v, const Monomial& u);
/// Componentwise minimum of u with `cap`.
Monomial cap_by(const Monomial& u, const Monomial& cap);

/// Lexicographic with x1 > x2 > ... > xn: true iff a >_lex b.
bool lex_greater(const Monomial& a, const Monomial& b);
/// Reverse lexicographic for equal degree: true iff a >_revlex b.
bool revlex_greater(const Monomial& a, const Monomial& b);

/// Canonical generator order: degree ascending, then lex descending.
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of degree `d` in `nvars` variables, in lex-descending order.
std::vector<Monomial> monomials_of_degree(int nvars, long d);
/// All divisors of `m`, in canonical order.
std::vector<Monomial> divisors(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace polymat
