#pragma once

#include <functional>

namespace magneton {

struct RootResult {
  double root;
  double residual;  // f(root)
  int iterations;
};

// Root of f in [lo, hi], where f(lo) and f(hi) have opposite signs. Secant
// steps are taken while they shrink the bracket by at least half; otherwise
// the bracket is bisected. Stops once the bracket is narrower than x_tol.
// Throws BracketError without a sign change and ConvergenceError after
// max_iterations.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double x_tol = 1e-12, int max_iterations = 200);

}  // namespace magneton
