#include "polymat/linalg.hpp"

#include <string>

namespace polymat::linalg {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_characteristic(std::int64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw DomainError("field characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  if (characteristic > (std::int64_t{1} << 31))
    throw DomainError("field characteristic above 2^31 is not supported");
}

}  // namespace polymat::linalg
