#pragma once

namespace reconf {

/// Counters reported by the solvers.
struct SolveStats {
  /// Largest module partition the solver worked over.
  int width = 0;
  long long nodes_deleted = 0;
  long long rule_applications = 0;

  void saw_width(int r) {
    if (r > width) width = r;
  }
};

}  // namespace reconf
