#pragma once

#include <cstddef>

namespace polymat {

/// Size limits that turn combinatorial blow-ups into ResourceError.
struct Budget {
  std::size_t max_lattice = 1u << 16;      // lcm-lattice elements per Betti table
  std::size_t max_lq_generators = 20;      // exhaustive linear-quotients search
  std::size_t max_enumeration = 2'000'000; // ideals per exhaustive space, divisors per colon sweep
  std::size_t max_components = 1u << 14;   // irreducible components during splitting
};

}  // namespace polymat
