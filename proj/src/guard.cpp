#include "kr/guard.hpp"

#include <cstdlib>
#include <string>

#include "kr/errors.hpp"

namespace kr {

DimGuard DimGuard::from_env() {
  const char* raw = std::getenv("KR_MAX_DIM");
  if (raw == nullptr || *raw == '\0') return DimGuard{kDefault};
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) {
    throw InvalidInput("KR_MAX_DIM must be a positive integer, got '" + std::string(raw) + "'");
  }
  return DimGuard{v};
}

void DimGuard::check(std::int64_t dim, const std::string& what) const {
  if (dim > max_dim) {
    throw GuardExceeded(what + ": dimension " + std::to_string(dim) + " exceeds guard " +
                        std::to_string(max_dim) + " (raise KR_MAX_DIM to override)");
  }
}

}  // namespace kr
