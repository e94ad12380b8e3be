#pragma once

#include <functional>
#include <string>
#include <vector>

#include "beltrami/angles.hpp"

namespace beltrami {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const noexcept;
};

/// Runs every acceptance check. `tol_scale` multiplies each numeric
/// tolerance; the report records measured and expected values either way.
VerifyReport run_verification(double tol_scale = 1.0);

using CoordinateAngleFn =
    std::function<CoordinateCurveAngle(const DiskPoint&, const ModelParams&)>;

/// sin^2 + cos^2 = 1 for the coordinate-curve angle. Takes the angle
/// function as a parameter so tests can feed it a mutated formula.
CheckResult check_coordinate_angle_identity(
    double tol_scale, const CoordinateAngleFn& fn = coordinate_curve_angle);

/// One line per check: "PASS|FAIL name measured=... expected=... tol=...".
std::string format_check(const CheckResult& check);

}  // namespace beltrami
