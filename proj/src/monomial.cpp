#include "polymat/monomial.hpp"

#include "polymat/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace polymat {

namespace {

void check_nvars(int nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw DomainError("number of variables must be in [1, " + std::to_string(kMaxVars) + "], got " +
                      std::to_string(nvars));
}

void check_same(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw DomainError("monomials over different numbers of variables (" + std::to_string(a.nvars()) +
                      " vs " + std::to_string(b.nvars()) + ")");
}

}  // namespace

VarSubset::VarSubset(int nvars, Bits bits) : nvars_(nvars), bits_(bits) {
  check_nvars(nvars);
  if ((bits & ~full_mask(nvars)) != 0) throw DomainError("variable subset exceeds the variable range");
}

VarSubset VarSubset::from_one_based(int nvars, const std::vector<int>& indices) {
  check_nvars(nvars);
  Bits bits = 0;
  for (int i : indices) {
    if (i < 1 || i > nvars)
      throw DomainError("variable index " + std::to_string(i) + " out of range 1.." + std::to_string(nvars));
    bits |= Bits{1} << (i - 1);
  }
  return VarSubset(nvars, bits);
}

int VarSubset::size() const { return std::popcount(bits_); }

std::vector<int> VarSubset::members() const {
  std::vector<int> out;
  for (int i = 0; i < nvars_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string VarSubset::to_string() const {
  if (empty()) return "0";
  std::string s;
  for (int i : members()) {
    if (!s.empty()) s += ", ";
    s += "x" + std::to_string(i + 1);
  }
  return s;
}

Monomial::Monomial(int nvars) {
  check_nvars(nvars);
  exps_ = ExponentVector::Zero(nvars);
}

Monomial::Monomial(ExponentVector exps) : exps_(std::move(exps)) {
  check_nvars(static_cast<int>(exps_.size()));
  if ((exps_.array() < 0).any()) throw DomainError("negative exponent");
}

Monomial::Monomial(std::initializer_list<Exponent> exps) {
  check_nvars(static_cast<int>(exps.size()));
  exps_.resize(static_cast<Eigen::Index>(exps.size()));
  std::copy(exps.begin(), exps.end(), exps_.data());
  if ((exps_.array() < 0).any()) throw DomainError("negative exponent");
}

Monomial Monomial::variable(int nvars, int index) {
  Monomial m(nvars);
  if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
  m.exps_[index] = 1;
  return m;
}

Monomial Monomial::product_of(const VarSubset& vars) {
  Monomial m(vars.nvars());
  for (int i : vars.members()) m.exps_[i] = 1;
  return m;
}

VarSubset Monomial::support() const {
  VarSubset::Bits bits = 0;
  for (int i = 0; i < nvars(); ++i)
    if (exps_[i] > 0) bits |= VarSubset::Bits{1} << i;
  return VarSubset(nvars(), bits);
}

int Monomial::as_variable() const {
  int found = -1;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (exps_[i] != 1 || found >= 0) return -1;
    found = i;
  }
  return found;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  ExponentVector out(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &out[i])) throw DomainError("exponent overflow");
  }
  return Monomial(std::move(out));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  if (!b.divides(a)) throw DomainError(b.to_string() + " does not divide " + a.to_string());
  return Monomial(ExponentVector(a.exps_ - b.exps_));
}

Monomial Monomial::pow(Exponent k) const {
  if (k < 0) throw DomainError("negative power");
  ExponentVector out(nvars());
  for (int i = 0; i < nvars(); ++i) {
    if (__builtin_mul_overflow(exps_[i], k, &out[i])) throw DomainError("exponent overflow");
  }
  return Monomial(std::move(out));
}

Monomial Monomial::dehomogenize(const VarSubset& ones) const {
  if (ones.nvars() != nvars()) throw DomainError("variable subset over a different number of variables");
  ExponentVector out = exps_;
  for (int i : ones.members()) out[i] = 0;
  return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (exps_[i] != 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  return Monomial(ExponentVector(a.exponents().cwiseMin(b.exponents())));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  return Monomial(ExponentVector(a.exponents().cwiseMax(b.exponents())));
}

Monomial colon_part(const Monomial& v, const Monomial& u) {
  check_same(v, u);
  return Monomial(ExponentVector((v.exponents() - u.exponents()).cwiseMax(0)));
}

Monomial cap_by(const Monomial& u, const Monomial& cap) { return gcd(u, cap); }

bool lex_greater(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool revlex_greater(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool CanonicalLess::operator()(const Monomial& a, const Monomial& b) const {
  const long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_greater(a, b);
}

namespace {

void compositions(int nvars, int pos, long remaining, ExponentVector& cur, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    if (remaining > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
    cur[pos] = static_cast<Exponent>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (long e = remaining; e >= 0; --e) {
    cur[pos] = static_cast<Exponent>(e);
    compositions(nvars, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, long d) {
  check_nvars(nvars);
  std::vector<Monomial> out;
  if (d < 0) return out;
  ExponentVector cur = ExponentVector::Zero(nvars);
  compositions(nvars, 0, d, cur, out);
  return out;
}

std::vector<Monomial> divisors(const Monomial& m) {
  std::vector<Monomial> out;
  ExponentVector cur = ExponentVector::Zero(m.nvars());
  const int n = m.nvars();
  while (true) {
    out.emplace_back(cur);
    int i = 0;
    while (i < n && cur[i] == m[i]) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.nvars());
  for (int i = 0; i < m.nvars(); ++i) h = h * 1000003u ^ static_cast<std::size_t>(m[i]);
  return h;
}

}  // namespace polymat
