#include "gcsing/wrench.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include "gcsing/errors.hpp"

namespace gcs {

namespace {

LineSpan moment_span(const Vec3& n) {
  const Vec3 u = perpendicular_unit(n);
  return {HomogeneousPoint::at_infinity(u), HomogeneousPoint::at_infinity(n.cross(u))};
}

}  // namespace

Wrench force_wrench(const Vec3& s, const Vec3& r, std::string leg, double tol) {
  const double len = s.norm();
  if (!(len >= tol)) {
    throw Error(ErrorCode::ZeroDirection, "force direction of leg " + leg + " vanishes");
  }
  const Vec3 unit = s / len;
  const LineSpan span{HomogeneousPoint::finite(r), HomogeneousPoint::at_infinity(unit)};
  return {WrenchKind::ActuationForce, join(span.first, span.second, 0.0), std::move(leg),
          span.first.coords(), span.second.coords()};
}

Wrench moment_wrench(const Vec3& n, std::string leg, double tol) {
  if (!(n.norm() >= tol)) {
    throw Error(ErrorCode::DegenerateMoment, "constraint moment of leg " + leg + " degenerates");
  }
  const LineSpan span = moment_span(n);
  return {WrenchKind::ConstraintMoment, join(span.first, span.second, 0.0), std::move(leg),
          span.first.coords(), span.second.coords()};
}

LineSpan wrench_span(const Wrench& w) {
  return {HomogeneousPoint(w.span_first), HomogeneousPoint(w.span_second)};
}

SuperbracketInput spans_of(const WrenchSystem& system) {
  return {wrench_span(system[0]), wrench_span(system[1]), wrench_span(system[2]),
          wrench_span(system[3]), wrench_span(system[4]), wrench_span(system[5])};
}

InverseJacobian assemble(const WrenchSystem& system) {
  InverseJacobian j{Mat6::Zero(), system};
  for (int i = 0; i < 6; ++i) j.matrix.row(i) = system[i].line.coords().transpose();
  return j;
}

int numeric_rank(const InverseJacobian& jacobian, double tol) {
  return numeric_rank(jacobian.matrix, tol);
}

int numeric_rank(const Mat6& matrix, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "rank tolerance must be positive");
  const Eigen::JacobiSVD<Mat6> svd(matrix);
  const auto& sv = svd.singularValues();
  const double smax = sv[0];
  if (smax == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < 6; ++i) {
    if (sv[i] > tol * smax) ++rank;
  }
  return rank;
}

}  // namespace gcs
