#include "beltrami/quadrature.hpp"

#include <cmath>
#include <limits>

#include "beltrami/error.hpp"

namespace beltrami {
namespace {

constexpr int kInitialPanels = 16;
constexpr int kMaxDepth = 60;

struct Integrator {
  const std::function<double(double)>& f;
  long max_intervals;
  long intervals = 0;

  double refine(double lo, double hi, double f_lo, double f_mid, double f_hi,
                double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double rm = 0.5 * (mid + hi);
    const double f_lm = f(lm);
    const double f_rm = f(rm);
    const double left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lm + f_mid);
    const double right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_hi);
    const double both = left + right;
    const double delta = both - whole;
    // Below ~eps*|S| the estimate is rounding noise; accept it.
    const double floor =
        64.0 * std::numeric_limits<double>::epsilon() * std::abs(both);
    if (std::abs(delta) <= 15.0 * std::max(tol, floor) || depth >= kMaxDepth ||
        mid <= lo || mid >= hi) {
      return both + delta / 15.0;
    }
    if (++intervals > max_intervals) {
      throw Error(ErrorCode::kNoConvergence,
                  "adaptive quadrature exceeded its refinement limit");
    }
    return refine(lo, mid, f_lo, f_lm, f_mid, left, 0.5 * tol, depth + 1) +
           refine(mid, hi, f_mid, f_rm, f_hi, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double tol, long max_intervals) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "quadrature tolerance must be > 0");
  }
  if (lo == hi) return 0.0;
  Integrator integ{f, max_intervals};
  integ.intervals = kInitialPanels;
  const double width = (hi - lo) / kInitialPanels;
  double total = 0.0;
  double f_lo = f(lo);
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = lo + i * width;
    const double b = (i + 1 == kInitialPanels) ? hi : lo + (i + 1) * width;
    const double m = 0.5 * (a + b);
    const double f_m = f(m);
    const double f_b = f(b);
    const double whole = (b - a) / 6.0 * (f_lo + 4.0 * f_m + f_b);
    total += integ.refine(a, b, f_lo, f_m, f_b, whole, tol / kInitialPanels, 0);
    f_lo = f_b;
  }
  return total;
}

}  // namespace beltrami
