#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcsing/projective.hpp"
#include "gcsing/wrench.hpp"

namespace gcs {

enum class CaseLabel {
  // 3-UPU / linear Delta style systems: three forces plus three moments.
  ForcesCoplanar,
  ForcesTwoParallel,
  ForcesAllParallel,
  MomentsCoplanar,
  MomentsTwoParallel,
  MomentsAllParallel,
  MomentDegenerate,
  // Verne parallel module.
  CaseI,    // planes of legs II and III coplanar or parallel
  CaseII,   // ef parallel to ij
  CaseIII,  // ef || cd and ij || ab, or ef || ab and ij || cd
  CaseIV,   // ab and cd both meet tu
  CaseV,    // a rod of leg I parallel to the ef/ij plane and coplanar with tu
  CaseVI,   // general linear complex
};

std::string_view to_string(CaseLabel label) noexcept;

struct NamedValue {
  std::string name;
  double value = 0.0;
};

struct SingularityReport {
  double value = 0.0;
  std::vector<NamedValue> factors;
  int rank = 6;
  std::vector<CaseLabel> labels;
  double tol = kDefaultTol;
  /// Scale against which value is judged; singular implies |value| < gauge.
  double gauge = 0.0;
  bool singular = false;
  /// Independent 6x6 determinant and the constant with value == constant * det.
  double oracle_det = 0.0;
  double oracle_constant = 1.0;

  double oracle_delta() const { return std::abs(value - oracle_constant * oracle_det); }
  /// Closed-form verdict and numeric rank agree.
  bool consistent() const { return singular == (rank < 6); }
};

// ---------------------------------------------------------------------------
// 3-UPU translational manipulator
// ---------------------------------------------------------------------------

struct UPU3Geometry {
  std::array<Vec3, 3> base_points;       // A_i
  std::array<Vec3, 3> platform_offsets;  // B_i in the platform frame
  std::array<Vec3, 3> base_u_axes;       // e_i, unit
};

/// Throws InvariantViolation naming the offending field.
void validate(const UPU3Geometry& geom, double tol = kDefaultTol);

struct UPU3State {
  std::array<Vec3, 3> s;  // unit leg directions
  std::array<Vec3, 3> r;  // points on the legs
  std::array<Vec3, 3> n;  // constraint moment directions
};

/// Leg i: s_i = unit((p + B_i) - A_i), r_i = A_i. The moving U axis is taken
/// perpendicular to both the fixed axis and the leg, e'_i = unit(e_i x s_i),
/// and n_i = e_i x e'_i.
UPU3State upu3_state(const UPU3Geometry& geom, const Vec3& platform_position,
                     double tol = kDefaultTol);

/// Forces F1..F3 then moments M1..M3. Throws DegenerateMoment.
WrenchSystem upu3_system(const UPU3State& state, double tol = kDefaultTol);

/// value = ((s1 x s2).s3) * ((n1 x n2).n3), the determinant of the
/// block-triangular inverse Jacobian.
SingularityReport upu3_singularity(const UPU3State& state, double tol = kDefaultTol);

std::vector<CaseLabel> upu3_classify(const UPU3State& state, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Verne parallel module
// ---------------------------------------------------------------------------

/// Spherical joint centers. Rods are ab, cd (leg I), ef, gh (leg II) and
/// ij, kl (leg III); legs II and III are parallelograms.
struct VerneConfiguration {
  Vec3 a, b, c, d, e, f, g, h, i, j, k, l;

  std::array<Vec3, 12> points() const { return {a, b, c, d, e, f, g, h, i, j, k, l}; }
  static VerneConfiguration from_points(const std::array<Vec3, 12>& p);
  /// Rigid translation of the platform-side joints b, d, f, h, j, l.
  VerneConfiguration with_platform_offset(const Vec3& offset) const;
  /// Translation of all twelve points.
  VerneConfiguration translated(const Vec3& offset) const;
  SuperbracketInput rod_spans() const;
};

/// Throws ParallelogramViolation or ZeroRodLength.
void validate(const VerneConfiguration& config, double tol = kDefaultTol);

/// Derived quantities of the condition.
///
///   leg2_direction  o = f - e = h - g      leg3_direction  p = j - i = l - k
///   rod_ab          m = b - a              rod_cd          n = d - c
///   q = e + p,  r = q + n,  s = q + m      leg_normal      N = (f - e) x (j - i)
///   plane_meet      tu, the line shared by planes (e, f, g) and (i, j, k),
///                   with direction (ef x eg) x (ij x ik)
struct VerneAux {
  Vec3 leg2_direction, leg3_direction;
  Vec3 rod_ab, rod_cd;
  Vec3 q, r, s;
  Vec3 leg_normal;
  ProjectivePlane leg2_plane, leg3_plane;
  PlueckerLine plane_meet;
  HomogeneousPoint meet_t, meet_u;
};

WrenchSystem verne_wrenches(const VerneConfiguration& config, double tol = kDefaultTol);

/// Throws CoincidentPlanes when legs II and III are coplanar.
VerneAux verne_aux(const VerneConfiguration& config, double tol = kDefaultTol);

/// Bracket form [feqr][tuba] - [feqs][tudc] cross-checked against the vector
/// form (cd.N)(tu.(ub x ab)) - (ab.N)(tu.(ud x cd)). Equals the superbracket
/// of the raw rod lines exactly (constant +1).
SingularityReport verne_singularity(const VerneConfiguration& config, double tol = kDefaultTol);

inline constexpr double kVerneConditionConstant = 1.0;

/// Every intermediate form of the derivation evaluated numerically.
struct VerneDerivation {
  double condensed = 0.0;       // expansion over (a,m),(c,n),(e,o),(g,o),(i,p),(k,p)
  double four_monomial = 0.0;   // [oegm][oncp][aipk] - [oega][oncp][mipk] - ...
  double shuffled = 0.0;        // [oncp][oeg m'][a' ipk] - [omap][oeg n'][c' ipk]
  double finite_points = 0.0;   // [oncp][feg b'][a' ijk] - [omap][feg d'][c' ijk]
  double meet_form = 0.0;       // [feqr][tuba] - [feqs][tudc]
  double vector_form = 0.0;     // (cd.N)(tu.(ub x ab)) - (ab.N)(tu.(ud x cd))
  double rod_determinant = 0.0; // superbracket_det of the rods

  std::vector<NamedValue> entries() const;
};

/// Constants relating each stage to rod_determinant.
inline constexpr double kFourMonomialConstant = -1.0;

VerneDerivation verne_stepwise(const VerneConfiguration& config, double tol = kDefaultTol);

std::vector<CaseLabel> verne_classify(const VerneConfiguration& config, double tol = kDefaultTol);

/// Linear Delta: Verne geometry with leg I also a parallelogram (d - c = b - a).
/// value = (ab.N)(tu.(db x ab)). Throws NotDeltaConfiguration.
SingularityReport delta_singularity(const VerneConfiguration& config, double tol = kDefaultTol);

}  // namespace gcs
