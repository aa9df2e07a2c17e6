#ifndef POLARIX_BUDGETS_HPP
#define POLARIX_BUDGETS_HPP

#include <stdexcept>
#include <string>

namespace polarix {

/// Raised when an exact computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Hard caps for the exhaustive algorithms.  Everything here is desk scale;
/// the caps exist so an oversized request fails loudly instead of hanging.
struct Budgets {
  long long group_orbit = 8'000'000;   // |S_m x (S_n)^m| for canonical forms
  long long hilbert_subsets = 1 << 20; // 2^generators in inclusion-exclusion
  long long transversals = 200'000;    // partial minimal transversals kept
  long long complex_faces = 200'000;   // faces enumerated per complex
  int shelling_facets = 14;            // facet count for shelling search

  /// Defaults, with POLARIX_BUDGET_OVERRIDE (an integer) applied to every
  /// count-valued field when the variable is set.
  static Budgets from_env();
};

}  // namespace polarix

#endif
