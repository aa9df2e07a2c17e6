#include "polarix/budgets.hpp"

#include <cstdlib>

namespace polarix {

Budgets Budgets::from_env() {
  Budgets b;
  if (const char* raw = std::getenv("POLARIX_BUDGET_OVERRIDE")) {
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0)
      throw std::invalid_argument(
          "POLARIX_BUDGET_OVERRIDE must be a positive integer");
    b.group_orbit = value;
    b.hilbert_subsets = value;
    b.transversals = value;
    b.complex_faces = value;
  }
  return b;
}

}  // namespace polarix
