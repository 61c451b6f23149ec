#include "polymat/quotients.hpp"

#include "polymat/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace polymat {

MonomialIdeal LinearQuotientsCertificate::ideal() const {
  std::vector<Monomial> gens = base.generators();
  gens.insert(gens.end(), appended.begin(), appended.end());
  return MonomialIdeal(base.nvars(), std::move(gens));
}

namespace {

void require_minimal_union(const MonomialIdeal& base, const std::vector<Monomial>& order) {
  std::vector<Monomial> all = base.generators();
  for (const auto& m : order) {
    if (m.nvars() != base.nvars()) throw DomainError("generator " + m.to_string() + " has the wrong variable count");
    all.push_back(m);
  }
  if (MonomialIdeal(base.nvars(), all).size() != all.size())
    throw DomainError("base generators and the ordered monomials are not a minimal generating set");
}

/// Variable indices generating `colon`, or nullopt if it is not generated by variables.
std::optional<std::vector<int>> linear_generators(const MonomialIdeal& colon_ideal) {
  std::vector<int> vars;
  for (const auto& g : colon_ideal.generators()) {
    const int v = g.as_variable();
    if (v < 0) return std::nullopt;
    vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

}  // namespace

LqCheck check_lq_order(const MonomialIdeal& base, const std::vector<Monomial>& order) {
  require_minimal_union(base, order);
  LinearQuotientsCertificate cert{base, {}, {}};
  std::vector<Monomial> predecessors = base.generators();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const MonomialIdeal previous(base.nvars(), predecessors);
    auto vars = linear_generators(colon(previous, order[k]));
    if (!vars) return LqCheck{std::nullopt, k};
    cert.appended.push_back(order[k]);
    cert.steps.push_back(std::move(*vars));
    predecessors.push_back(order[k]);
  }
  return LqCheck{std::move(cert), std::nullopt};
}

namespace {

/// Depth-first search over placed subsets. Admissibility of the next
/// generator depends only on the set already placed, so failed subsets are
/// memoized.
class OrderSearch {
 public:
  OrderSearch(const MonomialIdeal& base, const std::vector<Monomial>& gens) : count_(gens.size()) {
    const std::size_t m = gens.size();
    pair_support_.assign(m * m, 0);
    pair_variable_.assign(m * m, -1);
    base_variables_.assign(m, 0);
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = 0; w < m; ++w) {
        if (v == w) continue;
        const Monomial q = colon_part(gens[w], gens[v]);
        pair_support_[w * m + v] = q.support().bits();
        pair_variable_[w * m + v] = q.as_variable();
      }
      // Base generators are always present; fold their contribution in once.
      std::vector<VarSubset::Bits> base_supports;
      for (const auto& b : base.generators()) {
        const Monomial q = colon_part(b, gens[v]);
        if (const int x = q.as_variable(); x >= 0) base_variables_[v] |= VarSubset::Bits{1} << x;
        base_supports.push_back(q.support().bits());
      }
      base_supports_.push_back(std::move(base_supports));
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    if (dfs(0)) return path_;
    return std::nullopt;
  }

 private:
  bool admissible(std::uint64_t placed, std::size_t v) const {
    const std::size_t m = count_;
    VarSubset::Bits linear = base_variables_[v];
    for (std::size_t w = 0; w < m; ++w)
      if ((placed >> w) & 1u)
        if (const int x = pair_variable_[w * m + v]; x >= 0) linear |= VarSubset::Bits{1} << x;
    for (VarSubset::Bits support : base_supports_[v])
      if ((support & linear) == 0) return false;
    for (std::size_t w = 0; w < m; ++w)
      if (((placed >> w) & 1u) && (pair_support_[w * m + v] & linear) == 0) return false;
    return true;
  }

  bool dfs(std::uint64_t placed) {
    if (path_.size() == count_) return true;
    if (dead_.count(placed)) return false;
    for (std::size_t v = 0; v < count_; ++v) {
      if ((placed >> v) & 1u) continue;
      if (!admissible(placed, v)) continue;
      path_.push_back(v);
      if (dfs(placed | (std::uint64_t{1} << v))) return true;
      path_.pop_back();
    }
    dead_.insert(placed);
    return false;
  }

  std::size_t count_;
  std::vector<VarSubset::Bits> pair_support_;
  std::vector<int> pair_variable_;
  std::vector<VarSubset::Bits> base_variables_;
  std::vector<std::vector<VarSubset::Bits>> base_supports_;
  std::unordered_set<std::uint64_t> dead_;
  std::vector<std::size_t> path_;
};

}  // namespace

std::optional<LinearQuotientsCertificate> find_lq_order(const MonomialIdeal& base, const std::vector<Monomial>& gens,
                                                        const Budget& budget) {
  require_minimal_union(base, gens);
  const std::size_t limit = std::min<std::size_t>(budget.max_lq_generators, 63);
  if (gens.size() > limit)
    throw ResourceError("linear-quotients search over " + std::to_string(gens.size()) + " generators exceeds the limit of " +
                        std::to_string(limit));
  std::vector<Monomial> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  const auto path = OrderSearch(base, sorted).run();
  if (!path) return std::nullopt;
  std::vector<Monomial> order;
  for (std::size_t idx : *path) order.push_back(sorted[idx]);
  auto verified = check_lq_order(base, order);
  if (!verified) throw TheoremViolation("linear-quotients search produced an order that fails verification");
  return std::move(verified.certificate);
}

std::optional<LinearQuotientsCertificate> find_lq_order(const MonomialIdeal& ideal, const Budget& budget) {
  return find_lq_order(MonomialIdeal(ideal.nvars()), ideal.generators(), budget);
}

LqCheck revlex_lq(const MonomialIdeal& ideal, RevlexDirection direction) {
  if (!is_single_degree(ideal)) throw DomainError("reverse-lexicographic linear quotients need a single degree");
  std::vector<Monomial> order = ideal.generators();
  std::sort(order.begin(), order.end(), revlex_greater);
  if (direction == RevlexDirection::increasing) std::reverse(order.begin(), order.end());
  return check_lq_order(MonomialIdeal(ideal.nvars()), order);
}

namespace {

/// The order of the first extension stage: u > v iff |S_u| < |S_v|, or the
/// sizes agree and the saturated parts compare ū >_lex v̄, or those agree and
/// u >_lex v. S_u holds the variables at their raised cap a_i + 1.
struct SaturatedOrder {
  const std::vector<Exponent>& caps;

  std::pair<int, Monomial> key(const Monomial& u) const {
    ExponentVector bar = ExponentVector::Zero(u.nvars());
    int size = 0;
    for (int i = 0; i < u.nvars(); ++i)
      if (u[i] == caps[i] + 1) {
        bar[i] = u[i];
        ++size;
      }
    return {size, Monomial(std::move(bar))};
  }

  bool greater(const Monomial& u, const Monomial& v) const {
    const auto [su, ubar] = key(u);
    const auto [sv, vbar] = key(v);
    if (su != sv) return su < sv;
    if (ubar != vbar) return lex_greater(ubar, vbar);
    return lex_greater(u, v);
  }
};

std::vector<Monomial> new_generators(const MonomialIdeal& target, const MonomialIdeal& current) {
  std::vector<Monomial> out;
  for (const auto& g : target.generators())
    if (!current.contains(g)) out.push_back(g);
  return out;
}

}  // namespace

LinearQuotientsCertificate extend_lq_veronese(const VeroneseParams& from, const VeroneseParams& to) {
  if (from.nvars() != to.nvars()) throw DomainError("Veronese parameters over different numbers of variables");
  if (to.degree() != from.degree() + 1) throw DomainError("target Veronese degree must be the source degree plus one");
  const int n = from.nvars();
  const MonomialIdeal source = veronese(from) * MonomialIdeal::maximal(n);
  const MonomialIdeal target = veronese(to);
  if (!target.contains(source))
    throw DomainError("I_(" + from.to_string() + ")·m is not contained in I_(" + to.to_string() + ")");

  const auto a = from.normalized().caps();
  const auto b = to.normalized().caps();
  std::vector<Exponent> raised(a);
  for (auto& c : raised) ++c;
  for (int i = 0; i < n; ++i)
    if (raised[i] > b[i]) throw TheoremViolation("containment I·m ⊆ J did not imply a_i + 1 <= b_i");

  std::vector<Monomial> appended;

  // Stage 1: I·m to L = I_(d+1; a_1+1, ..., a_n+1).
  const MonomialIdeal stage_one = veronese(VeroneseParams(to.degree(), raised));
  auto first = new_generators(stage_one, source);
  const SaturatedOrder order{a};
  std::sort(first.begin(), first.end(), [&](const Monomial& u, const Monomial& v) { return order.greater(u, v); });
  appended.insert(appended.end(), first.begin(), first.end());

  // Stage 2: L to J, raising one cap at a time in index order.
  MonomialIdeal current = stage_one;
  std::vector<Exponent> caps = raised;
  for (int s = 0; s < n; ++s) {
    while (caps[s] < b[s]) {
      ++caps[s];
      const MonomialIdeal next = veronese(VeroneseParams(to.degree(), caps));
      auto fresh = new_generators(next, current);
      std::sort(fresh.begin(), fresh.end(), lex_greater);
      appended.insert(appended.end(), fresh.begin(), fresh.end());
      current = next;
    }
  }

  auto verified = check_lq_order(source, appended);
  if (!verified)
    throw TheoremViolation("extension of I_(" + from.to_string() + ")·m to I_(" + to.to_string() +
                           ") fails at position " + std::to_string(*verified.failing_position));
  if (verified.certificate->ideal() != target)
    throw TheoremViolation("extension of I_(" + from.to_string() + ")·m does not reach I_(" + to.to_string() + ")");
  return std::move(*verified.certificate);
}

LinearQuotientsCertificate componentwise_veronese_lq(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError();
  const int n = ideal.nvars();
  if (ideal.is_unit()) return *check_lq_order(MonomialIdeal(n), ideal.generators()).certificate;
  if (!is_componentwise_veronese(ideal)) throw DomainError(ideal.to_string() + " is not componentwise of Veronese type");

  const long low = ideal.min_degree();
  const MonomialIdeal first = component(ideal, low);
  std::vector<Monomial> order = first.generators();
  std::sort(order.begin(), order.end(), revlex_greater);
  if (!check_lq_order(MonomialIdeal(n), order)) {
    auto found = find_lq_order(first);
    if (!found) throw TheoremViolation("Veronese-type ideal " + first.to_string() + " has no linear quotients");
    order = found->appended;
  }
  for (long j = low; j < ideal.max_degree(); ++j) {
    const auto from = detect_veronese(component(ideal, j));
    const auto to = detect_veronese(component(ideal, j + 1));
    const auto step = extend_lq_veronese(*from, *to);
    for (const auto& v : step.appended)
      if (std::find(ideal.generators().begin(), ideal.generators().end(), v) != ideal.generators().end())
        order.push_back(v);
  }
  auto verified = check_lq_order(MonomialIdeal(n), order);
  if (!verified) throw TheoremViolation("chained Veronese extensions of " + ideal.to_string() + " fail verification");
  return std::move(*verified.certificate);
}

}  // namespace polymat
