#include "magneton/roots.hpp"

#include <cmath>
#include <utility>

#include <fmt/core.h>

#include "magneton/errors.hpp"

namespace magneton {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                     int max_iterations) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError(fmt::format("find_root: invalid bracket [{}, {}]", lo, hi));
  }
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if (!(fa * fb < 0.0)) {
    throw BracketError(fmt::format("find_root: no sign change on [{}, {}] (f = {}, {})", lo, hi,
                                   fa, fb));
  }

  bool bisect_next = false;
  for (int it = 1; it <= max_iterations; ++it) {
    const double width = b - a;
    double x = 0.5 * (a + b);
    if (!bisect_next) {
      const double secant = b - fb * (b - a) / (fb - fa);
      if (secant > a && secant < b) x = secant;
    }
    const double fx = f(x);
    if (fx == 0.0) return {x, 0.0, it};
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    bisect_next = (b - a) > 0.5 * width;
    if (b - a <= x_tol) {
      const bool left = std::abs(fa) <= std::abs(fb);
      return {left ? a : b, left ? fa : fb, it};
    }
  }
  throw ConvergenceError(
      fmt::format("find_root: bracket still {:.3e} wide after {} iterations", b - a, max_iterations));
}

}  // namespace magneton
