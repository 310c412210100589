#pragma once

#include <array>
#include <string>

#include "gcsing/projective.hpp"
#include "gcsing/superbracket.hpp"

namespace gcs {

enum class WrenchKind { ActuationForce, ConstraintMoment };

/// A row of the inverse Jacobian.
///
/// ActuationForce: zero-pitch screw (s; r x s) with unit s through `anchor`.
/// ConstraintMoment: infinite-pitch screw (0; n), a line at infinity.
/// `line` is always the join of the two stored spanning points.
struct Wrench {
  WrenchKind kind = WrenchKind::ActuationForce;
  PlueckerLine line;
  std::string leg;
  Vec4 span_first = Vec4::Zero();
  Vec4 span_second = Vec4::Zero();

  /// Point r on the line of a force.
  Vec3 anchor() const { return span_first.head<3>(); }
};

using WrenchSystem = std::array<Wrench, 6>;

struct InverseJacobian {
  Mat6 matrix;
  WrenchSystem system;
};

/// Force along s through r. s is normalized; throws ZeroDirection if ||s|| < tol.
Wrench force_wrench(const Vec3& s, const Vec3& r, std::string leg, double tol = kDefaultTol);

/// Pure moment about n. Throws DegenerateMoment if ||n|| < tol.
/// The stored line is the join of wrench_span(), so the moment part is n up
/// to rounding and the round trip through the span is exact.
Wrench moment_wrench(const Vec3& n, std::string leg, double tol = kDefaultTol);

/// Forces: ((r, 1), (s, 0)). Moments: two directions (u, 0), (v, 0) with
/// u = unit(n x e_k), e_k the axis least aligned with n, and v = n x u.
LineSpan wrench_span(const Wrench& w);

SuperbracketInput spans_of(const WrenchSystem& system);

InverseJacobian assemble(const WrenchSystem& system);

/// Number of singular values above tol * sigma_max.
int numeric_rank(const InverseJacobian& jacobian, double tol = kDefaultTol);
int numeric_rank(const Mat6& matrix, double tol = kDefaultTol);

}  // namespace gcs
