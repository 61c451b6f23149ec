#pragma once

#include "polymat/ideal.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/primes.hpp"
#include "polymat/quotients.hpp"
#include "polymat/resolution.hpp"

#include <json.hpp>

namespace polymat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1.0";

/// Variable lists in JSON use 1-based indices, matching the text grammar.
Json to_json(const VarSubset& vars);
Json to_json(const ExchangeWitness& witness);
Json to_json(const ExchangeVerdict& verdict);
/// [{i, j, rank}, ...] sorted by (i, j).
Json to_json(const BettiTable& table);
/// {base, order: [...], steps: [[vars]...]}
Json to_json(const LinearQuotientsCertificate& cert);
/// {"x1": 2, "x3": 1}
Json to_json(const IrreducibleComponent& component);
Json to_json(const PrimeData& primes);

}  // namespace polymat
