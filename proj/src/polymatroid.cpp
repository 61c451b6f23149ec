#include "polymat/polymatroid.hpp"

#include "polymat/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace polymat {

VeroneseParams::VeroneseParams(long degree, std::vector<Exponent> caps) : degree_(degree), caps_(std::move(caps)) {
  if (degree_ < 1) throw DomainError("Veronese degree must be positive");
  if (caps_.empty() || caps_.size() > static_cast<std::size_t>(kMaxVars))
    throw DomainError("Veronese caps must name between 1 and " + std::to_string(kMaxVars) + " variables");
  if (std::any_of(caps_.begin(), caps_.end(), [](Exponent a) { return a < 0; }))
    throw DomainError("Veronese caps must be non-negative");
  const long total = std::accumulate(caps_.begin(), caps_.end(), 0L);
  if (total < degree_)
    throw DomainError("Veronese caps sum to " + std::to_string(total) + " < degree " + std::to_string(degree_) +
                      "; the ideal would be zero");
}

VeroneseParams VeroneseParams::normalized() const {
  std::vector<Exponent> caps = caps_;
  for (auto& a : caps) a = static_cast<Exponent>(std::min<long>(a, degree_));
  return VeroneseParams(degree_, std::move(caps));
}

std::string VeroneseParams::to_string() const {
  std::string s = std::to_string(degree_) + ";";
  for (std::size_t i = 0; i < caps_.size(); ++i) s += (i ? "," : " ") + std::to_string(caps_[i]);
  return s;
}

VeroneseParams VeroneseParams::parse(std::string_view text) {
  auto number = [&](std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    long value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size() || token.empty())
      throw ParseError("expected an integer in Veronese parameters, found '" + std::string(token) + "'", 0);
    return value;
  };
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("Veronese parameters must look like 'd; a1,...,an'", 0);
  const long d = number(text.substr(0, semi));
  std::vector<Exponent> caps;
  std::string_view rest = text.substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    caps.push_back(static_cast<Exponent>(number(rest.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return VeroneseParams(d, std::move(caps));
}

namespace {

/// x_j * (u / x_i); requires u_i > 0.
bool exchanged_in(const MonomialIdeal& ideal, const Monomial& u, int i, int j) {
  ExponentVector e = u.exponents();
  --e[i];
  ++e[j];
  return ideal.contains(Monomial(std::move(e)));
}

void require_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError();
}

/// Ordinary exchange: for u, v and i with u_i > v_i, some j with u_j < v_j
/// gives x_j(u/x_i) in I.
std::optional<ExchangeWitness> find_exchange_failure(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  const int n = ideal.nvars();
  for (const auto& u : gens) {
    for (const auto& v : gens) {
      if (&u == &v) continue;
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j)
          if (u[j] < v[j] && exchanged_in(ideal, u, i, j)) found = true;
        if (!found) return ExchangeWitness{u, v, i, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ExchangeVerdict is_polymatroidal(const MonomialIdeal& ideal) {
  require_nonzero(ideal);
  ExchangeVerdict verdict;
  if (!is_single_degree(ideal)) {
    verdict.single_degree = false;
    return verdict;
  }
  verdict.witness = find_exchange_failure(ideal);
  verdict.holds = !verdict.witness.has_value();
  return verdict;
}

ExchangeVerdict is_matroidal(const MonomialIdeal& ideal) {
  ExchangeVerdict verdict = is_polymatroidal(ideal);
  if (!ideal.is_squarefree()) verdict.holds = false;
  return verdict;
}

ExchangeVerdict has_strong_exchange(const MonomialIdeal& ideal) {
  require_nonzero(ideal);
  ExchangeVerdict verdict;
  if (!is_single_degree(ideal)) {
    verdict.single_degree = false;
    return verdict;
  }
  const auto& gens = ideal.generators();
  const int n = ideal.nvars();
  for (const auto& u : gens)
    for (const auto& v : gens) {
      if (&u == &v) continue;
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (u[j] >= v[j]) continue;
          if (!exchanged_in(ideal, u, i, j)) {
            verdict.witness = ExchangeWitness{u, v, i, j};
            return verdict;
          }
        }
      }
    }
  verdict.holds = true;
  return verdict;
}

ExchangeVerdict has_nonpure_exchange(const MonomialIdeal& ideal) {
  require_nonzero(ideal);
  ExchangeVerdict verdict;
  verdict.single_degree = is_single_degree(ideal);
  const auto& gens = ideal.generators();
  const int n = ideal.nvars();
  for (const auto& u : gens)
    for (const auto& v : gens) {
      if (&u == &v || u.degree() > v.degree()) continue;
      for (int i = 0; i < n; ++i) {
        if (v[i] <= u[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j)
          if (v[j] < u[j] && exchanged_in(ideal, v, i, j)) found = true;
        if (!found) {
          verdict.witness = ExchangeWitness{u, v, i, std::nullopt};
          return verdict;
        }
      }
    }
  verdict.holds = true;
  return verdict;
}

ExchangeVerdict has_symmetric_exchange(const MonomialIdeal& ideal) {
  require_nonzero(ideal);
  ExchangeVerdict verdict;
  verdict.single_degree = is_single_degree(ideal);
  const auto& gens = ideal.generators();
  const int n = ideal.nvars();
  for (const auto& u : gens)
    for (const auto& v : gens) {
      if (&u == &v) continue;
      for (int i = 0; i < n; ++i) {
        if (v[i] <= u[i]) continue;
        bool found = false;
        for (int t = 0; t < n && !found; ++t)
          if (u[t] > v[t] && exchanged_in(ideal, u, t, i)) found = true;
        if (!found) {
          verdict.witness = ExchangeWitness{u, v, i, std::nullopt};
          return verdict;
        }
      }
    }
  verdict.holds = true;
  return verdict;
}

MonomialIdeal veronese(const VeroneseParams& params) {
  const int n = params.nvars();
  std::vector<Monomial> gens;
  for (auto& m : monomials_of_degree(n, params.degree())) {
    bool within = true;
    for (int i = 0; i < n && within; ++i) within = m[i] <= params.caps()[i];
    if (within) gens.push_back(std::move(m));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::optional<VeroneseParams> detect_veronese(const MonomialIdeal& ideal) {
  if (!is_single_degree(ideal)) throw DomainError("detect_veronese needs an ideal generated in a single degree");
  if (ideal.is_unit()) throw DomainError("detect_veronese is undefined for the unit ideal");
  const Monomial caps = ideal.lcm();
  VeroneseParams params(ideal.min_degree(), {caps.exponents().data(), caps.exponents().data() + caps.nvars()});
  if (veronese(params) == ideal) return params;
  return std::nullopt;
}

namespace {

template <typename Predicate>
ComponentwiseVerdict componentwise(const MonomialIdeal& ideal, long extra_degrees, Predicate&& holds_for) {
  if (ideal.is_zero()) throw ZeroIdealError();
  if (extra_degrees < 0) throw DomainError("extra degrees must be non-negative");
  for (long j = ideal.min_degree(); j <= ideal.max_degree() + extra_degrees; ++j) {
    if (!holds_for(component(ideal, j))) return {false, j};
  }
  return {true, std::nullopt};
}

}  // namespace

ComponentwiseVerdict is_componentwise_polymatroidal(const MonomialIdeal& ideal, long extra_degrees) {
  return componentwise(ideal, extra_degrees, [](const MonomialIdeal& c) { return is_polymatroidal(c).holds; });
}

ComponentwiseVerdict is_componentwise_veronese(const MonomialIdeal& ideal, long extra_degrees) {
  // I_<d+1> = I_<d> m can leave Veronese type (a_i + a_j < d for some i != j);
  // once it is of Veronese type the property persists in all higher degrees.
  return componentwise(ideal, extra_degrees + 1,
                       [](const MonomialIdeal& c) { return c.is_unit() || detect_veronese(c).has_value(); });
}

}  // namespace polymat
