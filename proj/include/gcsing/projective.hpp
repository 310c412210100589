#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <utility>

namespace gcs {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Relative gauge used for every "is zero" decision unless overridden.
inline constexpr double kDefaultTol = 1e-9;

/// |q| < tol * scale
inline bool negligible(double q, double scale, double tol = kDefaultTol) {
  return std::abs(q) < tol * scale;
}

/// A point of P^3 as (x, y, z, w). Finite iff w != 0; w == 0 is a direction.
class HomogeneousPoint {
 public:
  HomogeneousPoint(double x, double y, double z, double w);
  explicit HomogeneousPoint(const Vec4& coords);

  static HomogeneousPoint finite(const Vec3& position);
  static HomogeneousPoint at_infinity(const Vec3& direction);

  const Vec4& coords() const { return coords_; }
  Vec3 xyz() const { return coords_.head<3>(); }
  double w() const { return coords_[3]; }
  double norm() const { return coords_.norm(); }

  bool is_finite() const { return coords_[3] != 0.0; }
  /// Representative with w = 1. Throws InvalidArgument for points at infinity.
  HomogeneousPoint normalized() const;
  /// Affine position of a finite point.
  Vec3 position() const { return normalized().xyz(); }

  HomogeneousPoint scaled(double lambda) const;

  friend bool operator==(const HomogeneousPoint& p, const HomogeneousPoint& q) {
    return p.coords_ == q.coords_;
  }

 private:
  Vec4 coords_;
};

/// Line as a 2-extensor: (direction; moment). For a line through point r with
/// direction s the coordinates are (s; r x s). direction == 0 marks a line at
/// infinity.
struct PlueckerLine {
  Vec3 direction = Vec3::Zero();
  Vec3 moment = Vec3::Zero();

  Vec6 coords() const;
  double norm() const { return coords().norm(); }
  /// direction . moment, zero for every decomposable line.
  double quadric() const { return direction.dot(moment); }
  bool is_infinite() const { return direction.isZero(0.0) && !moment.isZero(0.0); }

  PlueckerLine operator-() const { return {-direction, -moment}; }
  friend bool operator==(const PlueckerLine&, const PlueckerLine&) = default;
};

/// Plane n . x + d w = 0 stored as (n; d).
class ProjectivePlane {
 public:
  explicit ProjectivePlane(const Vec4& coefficients);

  const Vec4& coefficients() const { return coeffs_; }
  Vec3 normal() const { return coeffs_.head<3>(); }
  double offset() const { return coeffs_[3]; }
  /// Value of the plane's linear form at p; zero iff p lies on the plane.
  double evaluate(const HomogeneousPoint& p) const { return coeffs_.dot(p.coords()); }

 private:
  Vec4 coeffs_;
};

/// Bracket [p1 p2 p3 p4]: determinant of the 4x4 matrix with the points as
/// columns. Exactly antisymmetric and exactly zero on repeated arguments.
double bracket4(const HomogeneousPoint& p1, const HomogeneousPoint& p2,
                const HomogeneousPoint& p3, const HomogeneousPoint& p4);

/// a v b. Throws DegenerateLine when a and b coincide projectively.
PlueckerLine join(const HomogeneousPoint& a, const HomogeneousPoint& b, double tol = kDefaultTol);

/// Plane through a, b, c whose form satisfies evaluate(x) == bracket4(a, b, c, x).
/// Throws DegeneratePlane when the points are collinear.
ProjectivePlane plane_from_points(const HomogeneousPoint& a, const HomogeneousPoint& b,
                                  const HomogeneousPoint& c, double tol = kDefaultTol);

/// Line of intersection, direction n1 x n2. Distinct planes whose normals are
/// parallel within tol give the line at infinity; proportional planes throw
/// CoincidentPlanes.
PlueckerLine meet_planes(const ProjectivePlane& p1, const ProjectivePlane& p2,
                         double tol = kDefaultTol);

/// Reciprocal pairing u1.v2 + u2.v1. Equals bracket4(a, b, d, c) for
/// l1 = join(a, b), l2 = join(c, d); zero iff the lines are coplanar.
double mutual_bracket(const PlueckerLine& l1, const PlueckerLine& l2);

/// Two points spanning a line: for a finite line the point closest to the
/// origin and that point shifted by the direction; for a line at infinity two
/// directions u, v with u x v equal to the moment.
std::pair<HomogeneousPoint, HomogeneousPoint> spanning_points(const PlueckerLine& line);

/// Unit vector u perpendicular to n, built from the basis axis least aligned
/// with n (ties go to the lower axis index).
Vec3 perpendicular_unit(const Vec3& n);

}  // namespace gcs
