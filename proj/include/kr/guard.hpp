#pragma once

#include <cstdint>
#include <string>

namespace kr {

/// Upper bound on the size of any explicitly materialized object (expanded
/// weight characters, brute-force products, ambient tensor spaces).
/// Defaults to 1e5; the KR_MAX_DIM environment variable overrides it.
struct DimGuard {
  std::int64_t max_dim;

  static DimGuard from_env();
  static constexpr std::int64_t kDefault = 100000;

  /// Throws GuardExceeded naming `what` if dim > max_dim.
  void check(std::int64_t dim, const std::string& what) const;
};

}  // namespace kr
