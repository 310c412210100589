#include "gcsing/projective.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>

#include "gcsing/errors.hpp"

namespace gcs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::CoincidentPlanes: return "CoincidentPlanes";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::DegenerateMoment: return "DegenerateMoment";
    case ErrorCode::ZeroLegLength: return "ZeroLegLength";
    case ErrorCode::UAxisParallelToLeg: return "UAxisParallelToLeg";
    case ErrorCode::ParallelogramViolation: return "ParallelogramViolation";
    case ErrorCode::ZeroRodLength: return "ZeroRodLength";
    case ErrorCode::NotDeltaConfiguration: return "NotDeltaConfiguration";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

HomogeneousPoint::HomogeneousPoint(double x, double y, double z, double w)
    : HomogeneousPoint(Vec4(x, y, z, w)) {}

HomogeneousPoint::HomogeneousPoint(const Vec4& coords) : coords_(coords) {
  if (!coords_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "homogeneous coordinates must be finite numbers");
  }
  if (coords_.isZero(0.0)) {
    throw Error(ErrorCode::InvalidArgument, "(0,0,0,0) is not a projective point");
  }
}

HomogeneousPoint HomogeneousPoint::finite(const Vec3& position) {
  return HomogeneousPoint(Vec4(position.x(), position.y(), position.z(), 1.0));
}

HomogeneousPoint HomogeneousPoint::at_infinity(const Vec3& direction) {
  return HomogeneousPoint(Vec4(direction.x(), direction.y(), direction.z(), 0.0));
}

HomogeneousPoint HomogeneousPoint::normalized() const {
  if (!is_finite()) {
    throw Error(ErrorCode::InvalidArgument, "point at infinity has no affine representative");
  }
  return HomogeneousPoint(coords_ / coords_[3]);
}

HomogeneousPoint HomogeneousPoint::scaled(double lambda) const {
  return HomogeneousPoint(coords_ * lambda);
}

Vec6 PlueckerLine::coords() const {
  Vec6 out;
  out << direction, moment;
  return out;
}

ProjectivePlane::ProjectivePlane(const Vec4& coefficients) : coeffs_(coefficients) {
  if (!coeffs_.allFinite() || coeffs_.isZero(0.0)) {
    throw Error(ErrorCode::InvalidArgument, "plane coefficients must be finite and not all zero");
  }
}

namespace {

// Laplace expansion along the column pairs (0,1) | (2,3).
double det4_columns(const Vec4& c0, const Vec4& c1, const Vec4& c2, const Vec4& c3) {
  auto m = [](const Vec4& x, const Vec4& y, int i, int j) { return x[i] * y[j] - x[j] * y[i]; };
  return m(c0, c1, 0, 1) * m(c2, c3, 2, 3) - m(c0, c1, 0, 2) * m(c2, c3, 1, 3) +
         m(c0, c1, 0, 3) * m(c2, c3, 1, 2) + m(c0, c1, 1, 2) * m(c2, c3, 0, 3) -
         m(c0, c1, 1, 3) * m(c2, c3, 0, 2) + m(c0, c1, 2, 3) * m(c2, c3, 0, 1);
}

bool lex_less(const Vec4& x, const Vec4& y) {
  return std::lexicographical_compare(x.data(), x.data() + 4, y.data(), y.data() + 4);
}

}  // namespace

double bracket4(const HomogeneousPoint& p1, const HomogeneousPoint& p2, const HomogeneousPoint& p3,
                const HomogeneousPoint& p4) {
  // Evaluate on a canonical column order and restore the permutation sign, so
  // transpositions negate the result bit for bit.
  std::array<const Vec4*, 4> cols{&p1.coords(), &p2.coords(), &p3.coords(), &p4.coords()};
  double sign = 1.0;
  for (int i = 1; i < 4; ++i) {
    for (int j = i; j > 0 && lex_less(*cols[j], *cols[j - 1]); --j) {
      std::swap(cols[j], cols[j - 1]);
      sign = -sign;
    }
  }
  for (int i = 1; i < 4; ++i) {
    if (*cols[i] == *cols[i - 1]) return 0.0;
  }
  return sign * det4_columns(*cols[0], *cols[1], *cols[2], *cols[3]);
}

PlueckerLine join(const HomogeneousPoint& a, const HomogeneousPoint& b, double tol) {
  const Vec3 ax = a.xyz();
  const Vec3 bx = b.xyz();
  PlueckerLine line{a.w() * bx - b.w() * ax, ax.cross(bx)};
  if (line.norm() <= tol * a.norm() * b.norm()) {
    throw Error(ErrorCode::DegenerateLine, "join of projectively coincident points");
  }
  return line;
}

ProjectivePlane plane_from_points(const HomogeneousPoint& a, const HomogeneousPoint& b,
                                  const HomogeneousPoint& c, double tol) {
  Eigen::Matrix<double, 4, 3> m;
  m << a.coords(), b.coords(), c.coords();
  Vec4 coeffs;
  for (int k = 0; k < 4; ++k) {
    Eigen::Matrix3d minor;
    int row = 0;
    for (int r = 0; r < 4; ++r) {
      if (r == k) continue;
      minor.row(row++) = m.row(r);
    }
    coeffs[k] = ((k + 3) % 2 == 0 ? 1.0 : -1.0) * minor.determinant();
  }
  if (coeffs.norm() <= tol * a.norm() * b.norm() * c.norm()) {
    throw Error(ErrorCode::DegeneratePlane, "points are collinear");
  }
  return ProjectivePlane(coeffs);
}

PlueckerLine meet_planes(const ProjectivePlane& p1, const ProjectivePlane& p2, double tol) {
  const Vec3 n1 = p1.normal();
  const Vec3 n2 = p2.normal();
  // x on both planes => x x (n1 x n2) = d1 n2 - d2 n1
  PlueckerLine line{n1.cross(n2), p1.offset() * n2 - p2.offset() * n1};
  // Normals parallel within tolerance: the planes meet at infinity.
  if (negligible(line.direction.norm(), n1.norm() * n2.norm(), tol)) line.direction = Vec3::Zero();
  if (line.norm() <= tol * p1.coefficients().norm() * p2.coefficients().norm()) {
    throw Error(ErrorCode::CoincidentPlanes, "planes are proportional");
  }
  return line;
}

double mutual_bracket(const PlueckerLine& l1, const PlueckerLine& l2) {
  return l1.direction.dot(l2.moment) + l2.direction.dot(l1.moment);
}

Vec3 perpendicular_unit(const Vec3& n) {
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(n[i]) < std::abs(n[axis])) axis = i;
  }
  return n.cross(Vec3::Unit(axis)).normalized();
}

std::pair<HomogeneousPoint, HomogeneousPoint> spanning_points(const PlueckerLine& line) {
  const double d2 = line.direction.squaredNorm();
  if (d2 > 0.0) {
    const Vec3 closest = line.direction.cross(line.moment) / d2;
    return {HomogeneousPoint::finite(closest), HomogeneousPoint::finite(closest + line.direction)};
  }
  if (line.moment.isZero(0.0)) {
    throw Error(ErrorCode::DegenerateLine, "zero Pluecker vector has no spanning points");
  }
  const Vec3 u = perpendicular_unit(line.moment);
  return {HomogeneousPoint::at_infinity(u), HomogeneousPoint::at_infinity(line.moment.cross(u))};
}

}  // namespace gcs
