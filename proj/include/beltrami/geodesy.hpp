#pragma once

#include <span>
#include <variant>

#include "beltrami/core.hpp"

namespace beltrami {

double dist_from_origin(double r, const ModelParams& params);
double euclidean_radius(double rho, const ModelParams& params);
/// cosh(rho/R) for a point at Euclidean radius r: a / sqrt(a^2 - r^2).
double cosh_from_r(double r, const ModelParams& params);

/// Hyperbolic distance between two interior points.
double distance(const DiskPoint& p, const DiskPoint& q,
                const ModelParams& params);

/// Same distance via the half-log cross ratio of p, q and the chord endpoints.
/// Independent route used to check `distance`.
double cross_ratio_distance(const DiskPoint& p, const DiskPoint& q,
                            const ModelParams& params);

/// Chord through p and q; travelling from p to q heads toward second().
Geodesic chord_through(const DiskPoint& p, const DiskPoint& q,
                       const ModelParams& params);

struct CurveSample {
  double t;
  double u;
  double v;
};

/// Discrete straightness test |u'v'' - v'u''| <= tol (|u'| + |v'|)^2 at every
/// interior sample, derivatives by (non-uniform) central differences.
bool is_straight(std::span<const CurveSample> samples, double tol);

struct Intersecting {
  DiskPoint point;
  double angle;
};
struct Asymptotic {
  IdealPoint ideal;
  double angle = 0.0;
};
struct Ultraparallel {};

using PairClass = std::variant<Intersecting, Asymptotic, Ultraparallel>;

PairClass classify_pair(const Geodesic& g1, const Geodesic& g2,
                        const ModelParams& params);

}  // namespace beltrami
