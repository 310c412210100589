#include "gcsing/manipulators.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "gcsing/errors.hpp"

namespace gcs {

std::string_view to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::ForcesCoplanar: return "FORCES_COPLANAR";
    case CaseLabel::ForcesTwoParallel: return "FORCES_TWO_PARALLEL";
    case CaseLabel::ForcesAllParallel: return "FORCES_ALL_PARALLEL";
    case CaseLabel::MomentsCoplanar: return "MOMENTS_COPLANAR";
    case CaseLabel::MomentsTwoParallel: return "MOMENTS_TWO_PARALLEL";
    case CaseLabel::MomentsAllParallel: return "MOMENTS_ALL_PARALLEL";
    case CaseLabel::MomentDegenerate: return "MOMENT_DEGENERATE";
    case CaseLabel::CaseI: return "CASE_I";
    case CaseLabel::CaseII: return "CASE_II";
    case CaseLabel::CaseIII: return "CASE_III";
    case CaseLabel::CaseIV: return "CASE_IV";
    case CaseLabel::CaseV: return "CASE_V";
    case CaseLabel::CaseVI: return "CASE_VI";
  }
  return "UNKNOWN";
}

namespace {

double triple(const std::array<Vec3, 3>& v) { return v[0].cross(v[1]).dot(v[2]); }

double norm_product(const std::array<Vec3, 3>& v) {
  return v[0].norm() * v[1].norm() * v[2].norm();
}

bool parallel(const Vec3& x, const Vec3& y, double tol) {
  return negligible(x.cross(y).norm(), x.norm() * y.norm(), tol);
}

// Coplanar / two parallel / all parallel for one triple of directions.
void classify_triple(const std::array<Vec3, 3>& v, double tol, CaseLabel coplanar,
                     CaseLabel two_parallel, CaseLabel all_parallel,
                     std::vector<CaseLabel>& out) {
  int parallel_pairs = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (parallel(v[i], v[j], tol)) ++parallel_pairs;
    }
  }
  if (parallel_pairs > 0 || negligible(triple(v), norm_product(v), tol)) out.push_back(coplanar);
  if (parallel_pairs > 0) out.push_back(two_parallel);
  if (parallel_pairs == 3) out.push_back(all_parallel);
}

bool has_degenerate_moment(const UPU3State& state, double tol) {
  for (const auto& n : state.n) {
    if (!(n.norm() >= tol)) return true;
  }
  return false;
}

}  // namespace

void validate(const UPU3Geometry& geom, double tol) {
  const auto& a = geom.base_points;
  const double spread = std::max({(a[0] - a[1]).norm(), (a[1] - a[2]).norm(), (a[0] - a[2]).norm()});
  if (!(spread > tol * (a[0].norm() + a[1].norm() + a[2].norm()))) {
    throw Error(ErrorCode::InvariantViolation, "base_points: all three base points coincide");
  }
  for (int i = 0; i < 3; ++i) {
    if (!(std::abs(geom.base_u_axes[i].norm() - 1.0) <= tol)) {
      throw Error(ErrorCode::InvariantViolation,
                  "base_u_axes[" + std::to_string(i) + "] is not a unit vector");
    }
  }
}

UPU3State upu3_state(const UPU3Geometry& geom, const Vec3& platform_position, double tol) {
  UPU3State state;
  for (int i = 0; i < 3; ++i) {
    const Vec3& base = geom.base_points[i];
    const Vec3 leg = platform_position + geom.platform_offsets[i] - base;
    const double len = leg.norm();
    const double scale = platform_position.norm() + geom.platform_offsets[i].norm() + base.norm();
    if (!(len > tol * scale) || len == 0.0) {
      throw Error(ErrorCode::ZeroLegLength, "leg " + std::to_string(i + 1) + " has zero length");
    }
    const Vec3 s = leg / len;
    const Vec3& e = geom.base_u_axes[i];
    const Vec3 e_cross_s = e.cross(s);
    if (!(e_cross_s.norm() >= tol * e.norm())) {
      throw Error(ErrorCode::UAxisParallelToLeg,
                  "leg " + std::to_string(i + 1) + " is parallel to its base U-joint axis");
    }
    state.s[i] = s;
    state.r[i] = base;
    state.n[i] = e.cross(e_cross_s.normalized());
  }
  return state;
}

WrenchSystem upu3_system(const UPU3State& state, double tol) {
  return {force_wrench(state.s[0], state.r[0], "1", tol),
          force_wrench(state.s[1], state.r[1], "2", tol),
          force_wrench(state.s[2], state.r[2], "3", tol),
          moment_wrench(state.n[0], "1", tol),
          moment_wrench(state.n[1], "2", tol),
          moment_wrench(state.n[2], "3", tol)};
}

SingularityReport upu3_singularity(const UPU3State& state, double tol) {
  const InverseJacobian jac = assemble(upu3_system(state, tol));

  SingularityReport report;
  const double triple_s = triple(state.s);
  const double triple_n = triple(state.n);
  report.value = triple_s * triple_n;
  report.factors = {{"triple_s", triple_s}, {"triple_n", triple_n}};
  report.tol = tol;
  report.gauge = tol * norm_product(state.s) * norm_product(state.n);
  report.singular = negligible(triple_s, norm_product(state.s), tol) ||
                    negligible(triple_n, norm_product(state.n), tol);
  report.rank = numeric_rank(jac, tol);
  report.oracle_det = jac.matrix.partialPivLu().determinant();
  report.oracle_constant = 1.0;
  report.labels = upu3_classify(state, tol);
  return report;
}

std::vector<CaseLabel> upu3_classify(const UPU3State& state, double tol) {
  if (has_degenerate_moment(state, tol)) return {CaseLabel::MomentDegenerate};
  std::vector<CaseLabel> labels;
  classify_triple(state.s, tol, CaseLabel::ForcesCoplanar, CaseLabel::ForcesTwoParallel,
                  CaseLabel::ForcesAllParallel, labels);
  classify_triple(state.n, tol, CaseLabel::MomentsCoplanar, CaseLabel::MomentsTwoParallel,
                  CaseLabel::MomentsAllParallel, labels);
  return labels;
}

}  // namespace gcs
