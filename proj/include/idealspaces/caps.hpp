#pragma once

#include <cstddef>
#include <cstdint>

namespace idealspaces {

/// Resource caps. Correctness-bearing enumerations fail loudly past a cap;
/// they never fall back to silent sampling. Each field can be overridden by
/// an environment variable of the same name prefixed IDEALSPACES_ and
/// upper-cased (e.g. IDEALSPACES_IDEAL_CAP).
struct Caps {
  std::size_t ring_size_cap = std::size_t{1} << 20;
  std::size_t ideal_cap = std::size_t{1} << 16;
  std::size_t closed_set_cap = std::size_t{1} << 20;
  std::uint64_t chain_enumeration_cap = 100000;
  std::uint64_t z_factor_limit = 1000000;

  static Caps from_env();
};

}  // namespace idealspaces
