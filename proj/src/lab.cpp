#include "polymat/lab.hpp"

#include "polymat/errors.hpp"
#include "polymat/linalg.hpp"
#include "polymat/primes.hpp"
#include "polymat/quotients.hpp"
#include "polymat/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

namespace polymat::lab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform in [0, n), by rejection; portable across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

std::vector<Monomial> candidate_generators(const IdealSpace& space) {
  std::vector<Monomial> out;
  for (long d = space.min_degree; d <= space.max_degree; ++d)
    for (auto& m : monomials_of_degree(space.nvars, d))
      if (!space.squarefree_only || m.is_squarefree()) out.push_back(std::move(m));
  return out;
}

/// All subsets C of [n] ordered by (size, bits); `proper` drops C = [n].
std::vector<VarSubset> all_subsets(int n, bool proper) {
  std::vector<VarSubset> out;
  const VarSubset::Bits full = VarSubset::full_mask(n);
  for (VarSubset::Bits b = 0; b <= full; ++b) {
    if (proper && b == full) continue;
    out.emplace_back(n, b);
    if (b == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool linear(const MonomialIdeal& ideal, std::int64_t characteristic, const Budget& budget) {
  return is_single_degree(ideal) && has_linear_resolution(ideal, characteristic, budget);
}

bool revlex_linear_quotients(const MonomialIdeal& ideal, RevlexDirection direction) {
  return is_single_degree(ideal) && revlex_lq(ideal, direction).certificate.has_value();
}

Json optional_monomial(const std::optional<Monomial>& m) { return m ? Json(m->to_string()) : Json(nullptr); }
Json optional_subset(const std::optional<VarSubset>& c) { return c ? to_json(*c) : Json(nullptr); }

}  // namespace

void IdealSpace::validate() const {
  if (nvars < 1 || nvars > kMaxVars) throw DomainError("nvars must be in 1.." + std::to_string(kMaxVars));
  if (min_degree < 1 || max_degree < min_degree) throw DomainError("degree bounds must satisfy 1 <= min <= max");
  if (max_generators < 1) throw DomainError("max_generators must be positive");
  if (mode == SpaceMode::sampled && samples < 1) throw DomainError("a sampled space needs at least one sample");
}

Json IdealSpace::to_json() const {
  return {{"nvars", nvars},
          {"min_degree", min_degree},
          {"max_degree", max_degree},
          {"max_generators", max_generators},
          {"mode", mode == SpaceMode::exhaustive ? "exhaustive" : "sampled"},
          {"samples", samples},
          {"seed", seed},
          {"squarefree_only", squarefree_only}};
}

std::vector<MonomialIdeal> enumerate_space(const IdealSpace& space, const Budget& budget) {
  space.validate();
  std::vector<MonomialIdeal> out;
  if (space.mode == SpaceMode::sampled) {
    if (space.samples > budget.max_enumeration) throw ResourceError("sample count exceeds the enumeration budget");
    out.reserve(space.samples);
    for (std::size_t k = 0; k < space.samples; ++k) out.push_back(sample_ideal(space, k));
    return out;
  }
  // Candidates are sorted by degree, so a later candidate never divides an
  // earlier one; checking the chosen set for divisors keeps an antichain.
  const auto candidates = candidate_generators(space);
  std::vector<Monomial> chosen;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t k = start; k < candidates.size(); ++k) {
      const Monomial& m = candidates[k];
      if (std::any_of(chosen.begin(), chosen.end(), [&](const Monomial& g) { return g.divides(m); })) continue;
      chosen.push_back(m);
      out.emplace_back(space.nvars, chosen);
      if (out.size() > budget.max_enumeration)
        throw ResourceError("exhaustive space exceeds " + std::to_string(budget.max_enumeration) + " ideals");
      if (chosen.size() < space.max_generators) self(self, k + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

MonomialIdeal sample_ideal(const IdealSpace& space, std::size_t index) {
  space.validate();
  std::mt19937_64 rng(splitmix64(space.seed ^ splitmix64(index)));
  std::map<long, std::vector<Monomial>> by_degree;
  for (long d = space.min_degree; d <= space.max_degree; ++d) {
    auto& bucket = by_degree[d];
    for (auto& m : monomials_of_degree(space.nvars, d))
      if (!space.squarefree_only || m.is_squarefree()) bucket.push_back(std::move(m));
    if (bucket.empty()) by_degree.erase(d);
  }
  if (by_degree.empty()) throw DomainError("the space contains no generators");
  std::vector<long> degrees;
  for (const auto& [d, bucket] : by_degree) degrees.push_back(d);
  const std::size_t count = 1 + draw(rng, space.max_generators);
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& bucket = by_degree[degrees[draw(rng, degrees.size())]];
    gens.push_back(bucket[draw(rng, bucket.size())]);
  }
  return minimalize(space.nvars, std::move(gens));
}

// ---------------------------------------------------------------------------

Json EquivalenceRecord::to_json() const {
  static constexpr const char* names[] = {"a", "b", "c", "d", "e"};
  Json conds = Json::object();
  Json fails = Json::object();
  for (int k = 0; k < 5; ++k) {
    conds[names[k]] = conditions[k];
    if (k > 0) fails[names[k]] = optional_monomial(first_failure[k]);
  }
  Json out{{"ideal", ideal.to_string()},
           {"nvars", ideal.nvars()},
           {"conditions", std::move(conds)},
           {"polymatroidal", polymat::to_json(polymatroidal)},
           {"first_failure", std::move(fails)},
           {"distinct_colons", distinct_colons}};
  out["increasing_revlex"] = increasing_revlex ? Json(*increasing_revlex) : Json(nullptr);
  out["convention_sensitive"] = convention_sensitive;
  out["violation"] = violation;
  return out;
}

EquivalenceRecord verify_equivalences(const MonomialIdeal& ideal, std::int64_t characteristic, const Budget& budget) {
  if (ideal.is_zero()) throw ZeroIdealError();
  if (ideal.is_unit()) throw DomainError("equivalences are checked for proper ideals only");

  EquivalenceRecord rec;
  rec.ideal = ideal;
  rec.polymatroidal = is_polymatroidal(ideal);
  rec.conditions = {rec.polymatroidal.holds, true, true, true, true};

  struct ColonVerdict {
    bool pm, lq, lr, sd;
    MonomialIdeal colon;
  };
  std::unordered_map<std::string, ColonVerdict> memo;
  for (const auto& u : capped_divisors(ideal, budget)) {
    MonomialIdeal j = colon(ideal, u);
    auto [it, fresh] = memo.try_emplace(j.to_string());
    if (fresh) {
      ColonVerdict& v = it->second;
      v.sd = is_single_degree(j);
      v.pm = v.sd && is_polymatroidal(j).holds;
      v.lq = v.sd && revlex_linear_quotients(j, RevlexDirection::decreasing);
      v.lr = v.sd && has_linear_resolution(j, characteristic, budget);
      v.colon = std::move(j);
    }
    const ColonVerdict& v = it->second;
    const bool holds[5] = {true, v.pm, v.lq, v.lr, v.sd};
    for (int k = 1; k < 5; ++k)
      if (!holds[k] && rec.conditions[k]) {
        rec.conditions[k] = false;
        rec.first_failure[k] = u;
      }
  }
  rec.distinct_colons = memo.size();

  const bool a = rec.conditions[0];
  bool c_agrees = rec.conditions[2] == a;
  if (!c_agrees) {
    bool inc = true;
    for (const auto& [name, v] : memo)
      if (!(v.sd && revlex_linear_quotients(v.colon, RevlexDirection::increasing))) inc = false;
    rec.increasing_revlex = inc;
    rec.convention_sensitive = inc == a;
    c_agrees = rec.convention_sensitive;
  }
  rec.violation = !c_agrees || rec.conditions[1] != a || rec.conditions[3] != a || rec.conditions[4] != a;
  return rec;
}

// ---------------------------------------------------------------------------

Json SquarefreeRecord::to_json() const {
  static constexpr const char* names[] = {"b", "c", "d", "e"};
  Json loc = Json::object(), pw = Json::object(), locf = Json::object(), pwf = Json::object();
  for (int k = 0; k < 4; ++k) {
    loc[names[k]] = localizations[k];
    pw[names[k]] = powers[k];
    locf[names[k]] = optional_subset(localization_failure[k]);
    pwf[names[k]] = optional_subset(power_failure[k]);
  }
  return {{"ideal", ideal.to_string()},
          {"nvars", ideal.nvars()},
          {"kmax", kmax},
          {"matroidal", matroidal},
          {"localizations", std::move(loc)},
          {"localization_failure", std::move(locf)},
          {"powers", std::move(pw)},
          {"power_failure", std::move(pwf)},
          {"violation", violation}};
}

SquarefreeRecord verify_squarefree(const MonomialIdeal& ideal, int kmax, std::int64_t characteristic,
                                   const Budget& budget) {
  if (ideal.is_zero()) throw ZeroIdealError();
  if (!ideal.is_squarefree()) throw DomainError("verify_squarefree needs a squarefree ideal");
  if (kmax < 1) throw DomainError("kmax must be positive");

  SquarefreeRecord rec;
  rec.ideal = ideal;
  rec.kmax = kmax;
  rec.matroidal = is_matroidal(ideal).holds;
  rec.localizations.fill(true);
  rec.powers.fill(true);

  const int n = ideal.nvars();
  for (const auto& c : all_subsets(n, false)) {
    const MonomialIdeal loc = localize(ideal, c);
    const bool sd = is_single_degree(loc);
    const bool holds[4] = {is_matroidal(loc).holds, sd && revlex_linear_quotients(loc, RevlexDirection::decreasing),
                           sd && has_linear_resolution(loc, characteristic, budget), sd};
    for (int k = 0; k < 4; ++k)
      if (!holds[k] && rec.localizations[k]) {
        rec.localizations[k] = false;
        rec.localization_failure[k] = c;
      }

    bool all_lr = true, some_lr = false, some_sd = false, all_sd = true;
    MonomialIdeal pk = loc;
    for (int k = 1; k <= kmax; ++k) {
      if (k > 1) pk = pk * loc;
      const bool psd = is_single_degree(pk);
      const bool plr = psd && has_linear_resolution(pk, characteristic, budget);
      all_lr = all_lr && plr;
      some_lr = some_lr || plr;
      all_sd = all_sd && psd;
      some_sd = some_sd || psd;
    }
    const bool pholds[4] = {all_lr, some_lr, some_sd, all_sd};
    for (int k = 0; k < 4; ++k)
      if (!pholds[k] && rec.powers[k]) {
        rec.powers[k] = false;
        rec.power_failure[k] = c;
      }
  }
  for (int k = 0; k < 4; ++k)
    if (rec.localizations[k] != rec.matroidal || rec.powers[k] != rec.matroidal) rec.violation = true;
  return rec;
}

// ---------------------------------------------------------------------------

const char* to_string(ScanStatus status) {
  switch (status) {
    case ScanStatus::agree: return "agree";
    case ScanStatus::forward_violation: return "forward-violation";
    case ScanStatus::counterexample: return "counterexample";
    case ScanStatus::skipped: return "skipped";
  }
  return "?";
}

Json ConjectureRecord::to_json() const {
  Json out{{"ideal", ideal.to_string()}, {"nvars", ideal.nvars()}};
  out["verdicts"] = {{"polymatroidal", polymatroidal.holds},
                     {"single_degree", polymatroidal.single_degree},
                     {"all_localizations_linear", all_localizations_linear}};
  out["witnesses"] = {{"exchange", polymatroidal.witness ? polymat::to_json(*polymatroidal.witness) : Json(nullptr)},
                      {"failing_localization", optional_subset(failing_localization)}};
  out["status"] = lab::to_string(status);
  if (!error.empty()) out["error"] = error;
  return out;
}

ConjectureRecord evaluate_conjecture(const MonomialIdeal& ideal, std::int64_t characteristic, const Budget& budget) {
  ConjectureRecord rec;
  rec.ideal = ideal;
  try {
    rec.polymatroidal = is_polymatroidal(ideal);
    rec.all_localizations_linear = true;
    for (const auto& c : all_subsets(ideal.nvars(), true))
      if (!linear(localize(ideal, c), characteristic, budget)) {
        rec.all_localizations_linear = false;
        rec.failing_localization = c;
        break;
      }
  } catch (const ResourceError& e) {
    rec.status = ScanStatus::skipped;
    rec.error = e.what();
    return rec;
  }
  const bool pm = rec.polymatroidal.holds;
  if (pm == rec.all_localizations_linear) rec.status = ScanStatus::agree;
  else rec.status = pm ? ScanStatus::forward_violation : ScanStatus::counterexample;
  return rec;
}

bool reverify_conjecture_item(const Json& item, std::int64_t characteristic) {
  const int n = item.at("nvars").get<int>();
  const MonomialIdeal ideal = parse_ideal(item.at("ideal").get<std::string>(), n);
  const Json& verdicts = item.at("verdicts");
  const Json& witnesses = item.at("witnesses");
  const bool pm = verdicts.at("polymatroidal").get<bool>();

  // The embedded exchange witness must itself refute the exchange property.
  const Json& w = witnesses.at("exchange");
  if (!w.is_null()) {
    if (pm) return false;
    const Monomial u = parse_monomial(w.at("u").get<std::string>(), n);
    const Monomial v = parse_monomial(w.at("v").get<std::string>(), n);
    const int i = w.at("i").get<int>() - 1;
    const auto& gens = ideal.generators();
    if (std::find(gens.begin(), gens.end(), u) == gens.end() || std::find(gens.begin(), gens.end(), v) == gens.end())
      return false;
    if (i < 0 || i >= n || u[i] <= v[i]) return false;
    const Monomial ui = u / Monomial::variable(n, i);
    for (int j = 0; j < n; ++j)
      if (v[j] > u[j] && ideal.contains(ui * Monomial::variable(n, j))) return false;
  }
  // The embedded failing localization must not be linearly resolved.
  const Json& c = witnesses.at("failing_localization");
  if (!c.is_null()) {
    const VarSubset ones = VarSubset::from_one_based(n, c.get<std::vector<int>>());
    if (linear(localize(ideal, ones), characteristic, {})) return false;
  }
  const ConjectureRecord again = evaluate_conjecture(ideal, characteristic);
  Json redo = again.to_json();
  return redo.at("verdicts") == verdicts && redo.at("witnesses") == witnesses &&
         redo.at("status") == item.at("status");
}

// ---------------------------------------------------------------------------

Json LabReport::to_json(bool include_runtime) const {
  Json out{{"config", config}, {"items", items}, {"summary", summary}, {"version", kReportVersion}};
  if (include_runtime) out["runtime"] = {{"elapsed_seconds", elapsed_seconds}};
  return out;
}

namespace {

Json budget_json(const Budget& b) {
  return {{"max_lattice", b.max_lattice},
          {"max_lq_generators", b.max_lq_generators},
          {"max_enumeration", b.max_enumeration},
          {"max_components", b.max_components}};
}

LabReport run_scan(const std::vector<MonomialIdeal>& corpus, Json config, const ScanOptions& options) {
  linalg::check_characteristic(options.characteristic);
  const auto start = std::chrono::steady_clock::now();
  std::vector<ConjectureRecord> records(corpus.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, corpus.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < corpus.size();)
      records[k] = evaluate_conjecture(corpus[k], options.characteristic, options.budget);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  LabReport report;
  config["char"] = options.characteristic;
  config["budget"] = budget_json(options.budget);
  report.config = std::move(config);
  std::map<std::string, std::size_t> counts{{"agree", 0}, {"forward-violation", 0}, {"counterexample", 0}, {"skipped", 0}};
  Json counterexamples = Json::array();
  for (std::size_t k = 0; k < records.size(); ++k) {
    Json item{{"index", k}};
    item.update(records[k].to_json());
    ++counts[to_string(records[k].status)];
    if (records[k].status == ScanStatus::counterexample || records[k].status == ScanStatus::forward_violation)
      counterexamples.push_back(item);
    report.items.push_back(std::move(item));
  }
  Json c = {{"total", records.size()}};
  for (const auto& [name, count] : counts) c[name] = count;
  report.summary = {{"counts", std::move(c)}, {"counterexamples", std::move(counterexamples)}, {"skipped", counts["skipped"]}};
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

LabReport scan_conjecture(const IdealSpace& space, const ScanOptions& options) {
  const auto corpus = enumerate_space(space, options.budget);
  return run_scan(corpus, {{"space", space.to_json()}, {"seed", space.seed}}, options);
}

LabReport scan_conjecture(const std::vector<MonomialIdeal>& corpus, const ScanOptions& options) {
  return run_scan(corpus, {{"space", "corpus"}, {"corpus_size", corpus.size()}, {"seed", nullptr}}, options);
}

// ---------------------------------------------------------------------------

namespace {

class SuiteItem {
 public:
  SuiteItem(std::string name, std::optional<MonomialIdeal> ideal, bool experimental = false)
      : name_(std::move(name)), ideal_(std::move(ideal)), experimental_(experimental) {}

  void expect(const std::string& key, bool actual, bool expected) {
    verdicts_[key] = actual;
    expected_[key] = expected;
    if (actual != expected) passed_ = false;
  }
  void note(const std::string& key, Json value) { verdicts_[key] = std::move(value); }
  void witness(const std::string& key, Json value) { witnesses_[key] = std::move(value); }
  void fail(const std::string& error) {
    passed_ = false;
    error_ = error;
  }

  Json finish() const {
    Json out{{"name", name_}};
    out["ideal"] = ideal_ ? Json(ideal_->to_string()) : Json(nullptr);
    out["nvars"] = ideal_ ? Json(ideal_->nvars()) : Json(nullptr);
    out["verdicts"] = verdicts_;
    out["expected"] = expected_;
    out["witnesses"] = witnesses_;
    out["status"] = experimental_ ? "experimental" : (passed_ ? "pass" : "fail");
    if (!error_.empty()) out["error"] = error_;
    return out;
  }

 private:
  std::string name_;
  std::optional<MonomialIdeal> ideal_;
  bool experimental_;
  bool passed_ = true;
  Json verdicts_ = Json::object();
  Json expected_ = Json::object();
  Json witnesses_ = Json::object();
  std::string error_;
};

MonomialIdeal ideal_of(const char* text, int n) { return parse_ideal(text, n); }

/// Every nonempty set of degree-d monomials in n variables (n, d small).
std::vector<MonomialIdeal> all_single_degree(int n, long d) {
  const auto mons = monomials_of_degree(n, d);
  if (mons.size() > 12) throw ResourceError("too many monomials for a full single-degree sweep");
  std::vector<MonomialIdeal> out;
  for (std::uint32_t mask = 1; mask < (1u << mons.size()); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < mons.size(); ++k)
      if ((mask >> k) & 1u) gens.push_back(mons[k]);
    out.emplace_back(n, std::move(gens));
  }
  return out;
}

bool every_localization_linear(const MonomialIdeal& ideal, std::int64_t ch, const Budget& budget,
                               std::optional<VarSubset>* failing = nullptr) {
  for (const auto& c : all_subsets(ideal.nvars(), true))
    if (!linear(localize(ideal, c), ch, budget)) {
      if (failing) *failing = c;
      return false;
    }
  return true;
}

MonomialIdeal colon_by_maximal(const MonomialIdeal& ideal) {
  MonomialIdeal out = colon(ideal, Monomial::variable(ideal.nvars(), 0));
  for (int i = 1; i < ideal.nvars(); ++i) out = intersect(out, colon(ideal, Monomial::variable(ideal.nvars(), i)));
  return out;
}

int max_exponent(const MonomialIdeal& ideal, int var) {
  int a = 0;
  for (const auto& g : ideal.generators()) a = std::max<int>(a, g[var]);
  return a;
}

/// The Veronese-type ideal of degree d with the given caps in n variables,
/// the unit ideal for d = 0 and nullopt when it would be zero.
std::optional<MonomialIdeal> veronese_or_unit(int n, long d, std::vector<Exponent> caps) {
  if (d == 0) return MonomialIdeal::unit(n);
  long total = 0;
  for (auto c : caps) total += c;
  if (d < 0 || total < d) return std::nullopt;
  return veronese(VeroneseParams(d, std::move(caps)));
}

using Check = std::function<void(SuiteItem&)>;

Json run_item(const std::string& name, std::optional<MonomialIdeal> ideal, bool experimental, const Check& body) {
  SuiteItem item(name, std::move(ideal), experimental);
  try {
    body(item);
  } catch (const std::exception& e) {
    item.fail(e.what());
  }
  return item.finish();
}

}  // namespace

LabReport paper_suite(std::int64_t ch, const Budget& budget) {
  linalg::check_characteristic(ch);
  const auto start = std::chrono::steady_clock::now();
  LabReport report;
  report.config = {{"suite", "regression"}, {"seed", nullptr}, {"char", ch}, {"budget", budget_json(budget)}};
  auto add = [&](const std::string& name, std::optional<MonomialIdeal> ideal, const Check& body,
                 bool experimental = false) {
    report.items.push_back(run_item(name, std::move(ideal), experimental, body));
  };

  {
    const auto I = ideal_of("x1*x2*x3, x2*x3*x4, x3*x5*x6", 6);
    add("localization-by-substitution", I, [&](SuiteItem& it) {
      const auto ones = VarSubset::from_one_based(6, {4});
      const auto expected = ideal_of("x2*x3, x3*x5*x6", 6);
      const auto loc = localize(I, ones);
      it.witness("localization", loc.to_string());
      it.expect("localization_matches", loc == expected, true);
      it.expect("saturation_matches", saturate(I, Monomial::variable(6, 3)) == expected, true);
    });
  }
  {
    const auto I = ideal_of("x1^2, x1*x2, x3^2, x2*x3", 3);
    add("single-degree-localizations-without-exchange", I, [&](SuiteItem& it) {
      const auto pm = is_polymatroidal(I);
      it.expect("polymatroidal", pm.holds, false);
      if (pm.witness) it.witness("exchange", to_json(*pm.witness));
      bool all_sd = true;
      for (const auto& c : all_subsets(3, false)) all_sd = all_sd && is_single_degree(localize(I, c));
      it.expect("all_localizations_single_degree", all_sd, true);
      it.expect("linear_resolution", has_linear_resolution(I, ch, budget), false);
      const auto eq = verify_equivalences(I, ch, budget);
      it.expect("equivalence_violation", eq.violation, false);
      it.witness("equivalences", eq.to_json());
    });
  }
  {
    const auto I = ideal_of("x1*x3^2, x1^2*x3, x1*x2*x3, x2^2*x3", 3);
    add("linear-colons-by-variables-without-exchange", I, [&](SuiteItem& it) {
      it.expect("linear_resolution", has_linear_resolution(I, ch, budget), true);
      for (int i = 0; i < 3; ++i)
        it.expect("colon_x" + std::to_string(i + 1) + "_linear",
                  linear(colon(I, Monomial::variable(3, i)), ch, budget), true);
      const auto pm = is_polymatroidal(I);
      it.expect("polymatroidal", pm.holds, false);
      if (pm.witness) it.witness("exchange", to_json(*pm.witness));
      const bool same = pm.witness && pm.witness->u == parse_monomial("x1*x3^2", 3) &&
                        pm.witness->v == parse_monomial("x2^2*x3", 3) && pm.witness->i == 0;
      it.expect("witness_reproduced", same, true);
    });
  }
  {
    const auto I = ideal_of("x1^3, x1^2*x2, x1^2*x3, x2*x3*x4, x1*x2*x3, x1*x3*x4, x1^2*x4", 4);
    add("linear-single-variable-localizations-without-exchange", I, [&](SuiteItem& it) {
      for (int i = 1; i <= 4; ++i)
        it.expect("localization_x" + std::to_string(i) + "_linear",
                  linear(localize(I, VarSubset::from_one_based(4, {i})), ch, budget), true);
      it.expect("polymatroidal", is_polymatroidal(I).holds, false);
      const auto rec = evaluate_conjecture(I, ch, budget);
      it.expect("all_localizations_linear", rec.all_localizations_linear, false);
      it.expect("conjecture_agrees", rec.status == ScanStatus::agree, true);
      it.witness("conjecture", rec.to_json());
    });
  }
  {
    const auto I = ideal_of("x1^3, x1^2*x2, x1^2*x3, x2^3, x1*x2^2, x2^2*x3, x3^3, x1*x3^2, x2*x3^2", 3);
    add("linear-relations-with-polymatroidal-localizations", I, [&](SuiteItem& it) {
      it.expect("linear_relations", has_linear_relations(I, ch, budget), true);
      for (int i = 1; i <= 3; ++i)
        it.expect("localization_x" + std::to_string(i) + "_polymatroidal",
                  is_polymatroidal(localize(I, VarSubset::from_one_based(3, {i}))).holds, true);
      it.expect("polymatroidal", is_polymatroidal(I).holds, false);
      it.note("linear_resolution", has_linear_resolution(I, ch, budget));
    });
  }
  {
    const auto I = ideal_of("x1^2, x2^2*x3, x1*x2*x3, x1*x2^2, x1*x3^3, x2*x3^3", 3);
    add("componentwise-polymatroidal-with-bad-square", I, [&](SuiteItem& it) {
      it.expect("componentwise_polymatroidal", is_componentwise_polymatroidal(I).holds, true);
      const auto sq = power(I, 2);
      const auto cw = is_componentwise_polymatroidal(sq);
      it.expect("square_componentwise_polymatroidal", cw.holds, false);
      if (cw.failing_degree) it.witness("square_failing_degree", *cw.failing_degree);
      const auto comp = component(sq, 6);
      it.expect("square_degree6_polymatroidal", is_polymatroidal(comp).holds, false);
      const auto loc = localize(comp, VarSubset::from_one_based(3, {3}));
      it.witness("localization", loc.to_string());
      it.expect("localization_matches", loc == ideal_of("x1*x2^3, x2^4, x1^2*x2, x1^3", 3), true);
      it.expect("localization_single_degree", is_single_degree(loc), false);
    });
  }
  {
    const auto I = ideal_of("x1*x2, x1*x3^2, x2*x3^2", 3);
    add("nonpure-exchange-without-componentwise-exchange", I, [&](SuiteItem& it) {
      it.expect("nonpure_exchange", has_nonpure_exchange(I).holds, true);
      const auto cw = is_componentwise_polymatroidal(I);
      it.expect("componentwise_polymatroidal", cw.holds, false);
      it.expect("fails_in_degree_3", cw.failing_degree == 3L, true);
      const auto cert = find_lq_order(I, budget);
      it.expect("linear_quotients", cert.has_value(), true);
      if (cert) {
        it.witness("certificate", to_json(*cert));
        it.expect("certificate_verified", check_lq_order(cert->base, cert->appended).certificate.has_value(), true);
      }
      bool all_cw = true;
      std::optional<Monomial> bad;
      for (const auto& u : capped_divisors(I, budget))
        if (!is_componentwise_linear(colon(I, u), ch, budget).holds) {
          all_cw = false;
          bad = u;
          break;
        }
      it.expect("all_colons_componentwise_linear", all_cw, true);
      if (bad) it.witness("failing_u", bad->to_string());
    });
  }

  for (const auto& [text, n] : std::vector<std::pair<const char*, int>>{
           {"x1, x2^2", 2}, {"x1, x2^2, x2*x3, x3^2", 3}, {"x1*x2, x1*x3, x2*x3, x1^3", 3}, {"x1^2, x1*x2^2, x2^3", 2}}) {
    const auto I = ideal_of(text, n);
    add("powers-of-two-degree-componentwise-polymatroidal", I, [&](SuiteItem& it) {
      std::set<long> degrees;
      for (const auto& g : I.generators()) degrees.insert(g.degree());
      it.expect("at_most_two_degrees", degrees.size() <= 2, true);
      it.expect("componentwise_polymatroidal", is_componentwise_polymatroidal(I).holds, true);
      for (int k = 2; k <= 3; ++k)
        it.expect("power_" + std::to_string(k) + "_componentwise_polymatroidal",
                  is_componentwise_polymatroidal(power(I, k)).holds, true);
    });
  }
  add("powers-of-two-degree-componentwise-polymatroidal-corpus", std::nullopt, [&](SuiteItem& it) {
    IdealSpace space;
    space.nvars = 3;
    space.max_degree = 3;
    space.max_generators = 4;
    std::size_t hits = 0;
    for (const auto& I : enumerate_space(space, budget)) {
      std::set<long> degrees;
      for (const auto& g : I.generators()) degrees.insert(g.degree());
      if (degrees.size() > 2 || !is_componentwise_polymatroidal(I).holds) continue;
      ++hits;
      for (int k = 2; k <= 3; ++k)
        if (!is_componentwise_polymatroidal(power(I, k)).holds) {
          it.witness("counterexample", {{"ideal", I.to_string()}, {"k", k}});
          it.expect("all_powers_componentwise_polymatroidal", false, true);
          return;
        }
    }
    it.note("hypothesis_hits", hits);
    it.expect("all_powers_componentwise_polymatroidal", true, true);
    it.expect("non_vacuous", hits > 0, true);
  });

  add("veronese-from-veronese-localizations", std::nullopt, [&](SuiteItem& it) {
    std::size_t hits = 0;
    for (int n : {2, 3})
      for (long d : {2L, 3L})
        for (const auto& I : all_single_degree(n, d)) {
          std::vector<Exponent> a(n);
          for (int i = 0; i < n; ++i) a[i] = max_exponent(I, i);
          bool hypothesis = true;
          for (int i = 0; i < n && hypothesis; ++i) {
            std::vector<Exponent> caps = a;
            caps[i] = 0;
            const auto want = veronese_or_unit(n, d - a[i], caps);
            hypothesis = want && localize(I, VarSubset::from_one_based(n, {i + 1})) == *want;
          }
          if (!hypothesis || !has_linear_resolution(I, ch, budget)) continue;
          ++hits;
          if (!(I == veronese(VeroneseParams(d, a)))) {
            it.witness("counterexample", I.to_string());
            it.expect("ideal_is_veronese", false, true);
            return;
          }
        }
    it.note("hypothesis_hits", hits);
    it.expect("ideal_is_veronese", true, true);
    it.expect("non_vacuous", hits > 0, true);
  });

  add("pure-powers-force-veronese", std::nullopt, [&](SuiteItem& it) {
    std::size_t hits = 0;
    for (const auto& [n, d] : std::vector<std::pair<int, long>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
      std::vector<Monomial> pure, rest;
      for (const auto& m : monomials_of_degree(n, d)) {
        const int v = m.support().size() == 1 ? m.support().members().front() : -1;
        (v >= 0 && v < n - 1 ? pure : rest).push_back(m);
      }
      for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
        std::vector<Monomial> gens = pure;
        for (std::size_t k = 0; k < rest.size(); ++k)
          if ((mask >> k) & 1u) gens.push_back(rest[k]);
        const MonomialIdeal I(n, std::move(gens));
        if (!has_linear_resolution(I, ch, budget)) continue;
        if (!linear(localize(I, VarSubset::from_one_based(n, {n})), ch, budget)) continue;
        ++hits;
        std::vector<Exponent> caps(n, static_cast<Exponent>(d));
        caps[n - 1] = max_exponent(I, n - 1);
        if (!(I == veronese(VeroneseParams(d, caps)))) {
          it.witness("counterexample", {{"ideal", I.to_string()}, {"nvars", n}});
          it.expect("ideal_is_veronese", false, true);
          return;
        }
      }
    }
    it.note("hypothesis_hits", hits);
    it.expect("ideal_is_veronese", true, true);
  });

  add("pure-powers-with-linear-resolution", std::nullopt, [&](SuiteItem& it) {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n)
      for (int k = 1; k <= 4 && ok; ++k)
        ok = has_linear_resolution(power(MonomialIdeal::maximal(n), k), ch, budget);
    it.expect("maximal_powers_linear", ok, true);
    for (int n : {2, 3})
      for (long d : {2L, 3L})
        for (const auto& I : all_single_degree(n, d)) {
          bool pure = true;
          for (int i = 0; i < n; ++i) pure = pure && I.contains(Monomial::variable(n, i).pow(d));
          if (!pure || !has_linear_resolution(I, ch, budget)) continue;
          if (!(I == power(MonomialIdeal::maximal(n), static_cast<int>(d)))) {
            it.witness("counterexample", I.to_string());
            it.expect("linear_with_pure_powers_is_maximal_power", false, true);
            return;
          }
        }
    it.expect("linear_with_pure_powers_is_maximal_power", true, true);
  });

  add("degree-two-localization-characterization", std::nullopt, [&](SuiteItem& it) {
    std::size_t total = 0;
    for (int n : {2, 3, 4})
      for (const auto& I : all_single_degree(n, 2)) {
        ++total;
        const auto rec = evaluate_conjecture(I, ch, budget);
        if (rec.status != ScanStatus::agree) {
          it.witness("disagreement", rec.to_json());
          it.expect("polymatroidal_iff_localizations_linear", false, true);
          return;
        }
      }
    it.note("ideals", total);
    it.expect("polymatroidal_iff_localizations_linear", true, true);
  });

  {
    const auto I = ideal_of("x1*x2, x1*x3, x2*x3", 3);
    add("unmixed-height-n-minus-one", I, [&](SuiteItem& it) {
      const auto primes = associated_primes(I, budget);
      it.witness("primes", to_json(primes));
      it.expect("three_associated_primes", primes.associated.size() == 3, true);
      it.expect("has_embedded", primes.has_embedded, false);
      it.expect("height_n_minus_one", primes.height == 2, true);
      it.expect("all_localizations_linear", every_localization_linear(I, ch, budget), true);
      it.expect("polymatroidal", is_polymatroidal(I).holds, true);
    });
  }
  {
    const auto I = transversal({VarSubset::from_one_based(4, {1, 2}), VarSubset::from_one_based(4, {3, 4})}, {1, 1});
    add("transversal-two-primes", I, [&](SuiteItem& it) {
      const auto primes = associated_primes(I, budget);
      it.witness("primes", to_json(primes));
      it.expect("two_associated_primes", primes.associated.size() == 2, true);
      it.expect("has_embedded", primes.has_embedded, false);
      it.expect("all_localizations_linear", every_localization_linear(I, ch, budget), true);
      it.expect("polymatroidal", is_polymatroidal(I).holds, true);
    });
  }

  // Beliefs from the discussion of the conjecture; evidence only.
  add("linear-with-polymatroidal-product", std::nullopt, [&](SuiteItem& it) {
    std::size_t hits = 0, supported = 0;
    for (int n : {2, 3})
      for (long d : {2L, 3L})
        for (const auto& I : all_single_degree(n, d)) {
          if (!is_polymatroidal(I * MonomialIdeal::maximal(n)).holds) continue;
          if (!has_linear_resolution(I, ch, budget)) continue;
          ++hits;
          if (is_polymatroidal(I).holds) ++supported;
          else if (hits == supported + 1) it.witness("counterexample", {{"ideal", I.to_string()}, {"nvars", n}});
        }
    it.note("hypothesis_hits", hits);
    it.note("supported", hits == supported);
  }, true);

  add("colon-by-maximal-ideal-component", std::nullopt, [&](SuiteItem& it) {
    std::size_t hits = 0, supported = 0;
    std::vector<MonomialIdeal> corpus;
    for (int n : {2, 3})
      for (long d : {2L, 3L})
        for (auto& I : all_single_degree(n, d))
          if (is_polymatroidal(I).holds) corpus.push_back(std::move(I));
    corpus.push_back(veronese(VeroneseParams(3, {2, 1, 2, 1})));
    corpus.push_back(transversal({VarSubset::from_one_based(4, {1, 2}), VarSubset::from_one_based(4, {2, 3, 4})}, {2, 1}));
    for (const auto& I : corpus) {
      const long d = I.min_degree();
      const auto comp = component(colon_by_maximal(I), d - 1);
      if (comp.is_zero()) continue;
      ++hits;
      if (is_polymatroidal(comp).holds) ++supported;
      else if (hits == supported + 1)
        it.witness("counterexample", {{"ideal", I.to_string()}, {"nvars", I.nvars()}});
    }
    it.note("hypothesis_hits", hits);
    it.note("supported", hits == supported);
  }, true);

  add("revlex-convention", std::nullopt, [&](SuiteItem& it) {
    std::size_t total = 0, decreasing = 0, increasing = 0;
    for (int n : {2, 3})
      for (long d : {2L, 3L})
        for (const auto& I : all_single_degree(n, d)) {
          if (!is_polymatroidal(I).holds) continue;
          ++total;
          if (revlex_lq(I, RevlexDirection::decreasing)) ++decreasing;
          if (revlex_lq(I, RevlexDirection::increasing)) ++increasing;
        }
    it.note("polymatroidal_ideals", total);
    it.note("decreasing_succeeds", decreasing);
    it.note("increasing_succeeds", increasing);
  }, true);

  std::size_t pass = 0, fail = 0, experimental = 0;
  Json failures = Json::array();
  for (const auto& item : report.items) {
    const auto status = item["status"].get<std::string>();
    if (status == "pass") ++pass;
    else if (status == "fail") {
      ++fail;
      failures.push_back(item);
    } else ++experimental;
  }
  report.summary = {{"counts", {{"total", report.items.size()}, {"pass", pass}, {"fail", fail}, {"experimental", experimental}}},
                    {"counterexamples", std::move(failures)},
                    {"skipped", 0}};
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool suite_passed(const LabReport& report) { return report.summary.at("counts").at("fail").get<std::size_t>() == 0; }

}  // namespace polymat::lab
