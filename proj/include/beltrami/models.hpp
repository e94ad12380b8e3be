#pragma once

#include "beltrami/core.hpp"
#include "beltrami/metric.hpp"

namespace beltrami {

struct MinkowskiVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Geodesic polar coordinates on the hyperboloid: m = (distance from the
/// vertex)/R, theta the polar angle.
struct HyperboloidPolar {
  double m = 0.0;
  double theta = 0.0;
};

HyperboloidPoint lift_to_hyperboloid(const DiskPoint& p,
                                     const ModelParams& params);
DiskPoint project_to_disk(const HyperboloidPoint& h, const ModelParams& params);

/// x1 x2 + y1 y2 - z1 z2.
double minkowski_inner(const MinkowskiVector& h1, const MinkowskiVector& h2);
double minkowski_inner(const HyperboloidPoint& h1, const HyperboloidPoint& h2);

/// R arccosh(-<h1, h2>/R^2); the hyperboloid-side distance.
double hyperboloid_distance(const HyperboloidPoint& h1,
                            const HyperboloidPoint& h2,
                            const ModelParams& params);

HyperboloidPoint polar_parametrization(const HyperboloidPolar& q,
                                       const ModelParams& params);

struct PolarCoefficients {
  double dm_coeff;
  double dtheta_coeff;
};

/// Coefficients of dm^2 and dtheta^2 measured by pushing the Minkowski form
/// through polar_parametrization with central differences.
PolarCoefficients polar_metric_check(double m, double theta,
                                     const ModelParams& params);

/// E, F, G measured by pushing the Minkowski form through
/// lift_to_hyperboloid with central differences.
FundamentalForm pullback_fundamental_form(const DiskPoint& p,
                                          const ModelParams& params);

}  // namespace beltrami
