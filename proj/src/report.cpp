#include "polymat/report.hpp"

namespace polymat {

Json to_json(const VarSubset& vars) {
  Json out = Json::array();
  for (int i : vars.members()) out.push_back(i + 1);
  return out;
}

Json to_json(const ExchangeWitness& witness) {
  Json out{{"u", witness.u.to_string()}, {"v", witness.v.to_string()}, {"i", witness.i + 1}};
  if (witness.j) out["j"] = *witness.j + 1;
  return out;
}

Json to_json(const ExchangeVerdict& verdict) {
  Json out{{"holds", verdict.holds}, {"single_degree", verdict.single_degree}};
  out["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
  return out;
}

Json to_json(const BettiTable& table) {
  Json out = Json::array();
  for (const auto& [key, rank] : table.entries()) out.push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
  return out;
}

Json to_json(const LinearQuotientsCertificate& cert) {
  Json order = Json::array();
  for (const auto& m : cert.appended) order.push_back(m.to_string());
  Json steps = Json::array();
  for (const auto& step : cert.steps) {
    Json vars = Json::array();
    for (int v : step) vars.push_back(v + 1);
    steps.push_back(std::move(vars));
  }
  return {{"base", cert.base.to_string()}, {"order", std::move(order)}, {"steps", std::move(steps)}};
}

Json to_json(const IrreducibleComponent& component) {
  Json out = Json::object();
  for (const auto& [var, power] : component.powers) out["x" + std::to_string(var + 1)] = power;
  return out;
}

Json to_json(const PrimeData& primes) {
  Json ass = Json::array();
  for (const auto& p : primes.associated) ass.push_back({{"prime", to_json(p.prime)}, {"witness", p.witness.to_string()}});
  Json minimal = Json::array();
  for (const auto& p : primes.minimal) minimal.push_back(to_json(p));
  return {{"associated", std::move(ass)},
          {"minimal", std::move(minimal)},
          {"height", primes.height},
          {"has_embedded", primes.has_embedded}};
}

}  // namespace polymat
