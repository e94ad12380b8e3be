#pragma once

#include <functional>

namespace beltrami {

/// Adaptive Simpson integration of `f` over [lo, hi] with absolute error
/// target `tol`. Throws Error(kNoConvergence) once more than `max_intervals`
/// subintervals would be needed.
double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double tol,
                        long max_intervals = 1L << 20);

}  // namespace beltrami
