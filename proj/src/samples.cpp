#include "gcsing/samples.hpp"

#include <Eigen/Geometry>

#include "gcsing/errors.hpp"

namespace gcs {

Vec3 Rng::unit3() {
  for (;;) {
    const Vec3 v = vec3();
    const double n = v.norm();
    if (n > 0.1 && n <= 1.0) return v / n;
  }
}

HomogeneousPoint random_point(Rng& rng) { return HomogeneousPoint(rng.vec4()); }

SuperbracketInput random_superbracket_input(Rng& rng) {
  auto span = [&] { return LineSpan{random_point(rng), random_point(rng)}; };
  return {span(), span(), span(), span(), span(), span()};
}

UPU3Geometry random_upu3_geometry(Rng& rng) {
  UPU3Geometry g;
  for (int i = 0; i < 3; ++i) {
    g.base_points[i] = rng.vec3(2.0);
    g.platform_offsets[i] = rng.vec3(0.5);
    g.base_u_axes[i] = rng.unit3();
  }
  return g;
}

UPU3State random_upu3_state(Rng& rng) {
  for (;;) {
    try {
      return upu3_state(random_upu3_geometry(rng), rng.vec3(1.5) + Vec3(0, 0, 1.0));
    } catch (const Error&) {
      // leg parallel to its U axis: draw again
    }
  }
}

UPU3State make_upu3_case(Rng& rng, CaseLabel label) {
  UPU3State st = random_upu3_state(rng);
  auto& s = st.s;
  auto& n = st.n;
  switch (label) {
    case CaseLabel::ForcesCoplanar:
      s[2] = (rng.uniform(0.3, 1.0) * s[0] + rng.uniform(0.3, 1.0) * s[1]).normalized();
      break;
    case CaseLabel::ForcesTwoParallel:
      s[1] = -s[0];
      break;
    case CaseLabel::ForcesAllParallel:
      s[1] = s[0];
      s[2] = -s[0];
      break;
    case CaseLabel::MomentsCoplanar:
      n[2] = rng.uniform(0.3, 1.0) * n[0] - rng.uniform(0.3, 1.0) * n[1];
      break;
    case CaseLabel::MomentsTwoParallel:
      n[2] = rng.uniform(0.5, 2.0) * n[1];
      break;
    case CaseLabel::MomentsAllParallel:
      n[1] = rng.uniform(0.5, 2.0) * n[0];
      n[2] = -rng.uniform(0.5, 2.0) * n[0];
      break;
    case CaseLabel::MomentDegenerate: {
      // U joint replaced by two revolute joints with parallel axes
      const Vec3 axis = rng.unit3();
      n[1] = axis.cross(axis);
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "not a 3-UPU case label");
  }
  return st;
}

std::vector<CaseLabel> expected_upu3_labels(CaseLabel label) {
  using L = CaseLabel;
  switch (label) {
    case L::ForcesCoplanar: return {L::ForcesCoplanar};
    case L::ForcesTwoParallel: return {L::ForcesCoplanar, L::ForcesTwoParallel};
    case L::ForcesAllParallel: return {L::ForcesCoplanar, L::ForcesTwoParallel, L::ForcesAllParallel};
    case L::MomentsCoplanar: return {L::MomentsCoplanar};
    case L::MomentsTwoParallel: return {L::MomentsCoplanar, L::MomentsTwoParallel};
    case L::MomentsAllParallel:
      return {L::MomentsCoplanar, L::MomentsTwoParallel, L::MomentsAllParallel};
    case L::MomentDegenerate: return {L::MomentDegenerate};
    default: throw Error(ErrorCode::InvalidArgument, "not a 3-UPU case label");
  }
}

VerneConfiguration random_verne_config(Rng& rng) {
  VerneConfiguration c;
  c.a = rng.vec3();
  c.b = rng.vec3();
  c.c = rng.vec3();
  c.d = rng.vec3();
  c.e = rng.vec3();
  c.f = rng.vec3();
  c.g = rng.vec3();
  c.h = c.g + (c.f - c.e);
  c.i = rng.vec3();
  c.j = rng.vec3();
  c.k = rng.vec3();
  c.l = c.k + (c.j - c.i);
  return c;
}

VerneConfiguration make_verne_case(Rng& rng, CaseLabel label) {
  VerneConfiguration c = random_verne_config(rng);
  const Vec3 o = c.f - c.e;
  switch (label) {
    case CaseLabel::CaseI: {
      const Vec3 u = c.f - c.e;
      const Vec3 v = c.g - c.e;
      auto in_plane = [&] { return c.e + rng.uniform() * u + rng.uniform() * v; };
      c.i = in_plane();
      c.j = in_plane();
      c.k = in_plane();
      c.l = c.k + (c.j - c.i);
      break;
    }
    case CaseLabel::CaseII:
      c.j = c.i + rng.uniform(0.5, 1.5) * o;
      c.l = c.k + (c.j - c.i);
      break;
    case CaseLabel::CaseIII:
      c.d = c.c + rng.uniform(0.5, 1.5) * o;
      c.b = c.a + rng.uniform(0.5, 1.5) * (c.j - c.i);
      break;
    case CaseLabel::CaseIV: {
      const VerneAux aux = verne_aux(c);
      const Vec3 t = aux.meet_t.position();
      const Vec3 dir = aux.plane_meet.direction;
      const Vec3 x1 = t + rng.uniform() * dir;
      const Vec3 x2 = t + rng.uniform() * dir;
      c.b = c.a + rng.uniform(0.5, 1.5) * (x1 - c.a);
      c.d = c.c + rng.uniform(0.5, 1.5) * (x2 - c.c);
      break;
    }
    case CaseLabel::CaseV: {
      const VerneAux aux = verne_aux(c);
      const Vec3 x = aux.meet_t.position() + rng.uniform() * aux.plane_meet.direction;
      c.c = x - rng.uniform(0.2, 1.0) * o;
      c.d = x + rng.uniform(0.2, 1.0) * o;
      break;
    }
    case CaseLabel::CaseVI: {
      // The condition is affine in b: step along a random direction to its
      // root. If the other five rods leave it nearly flat in b, redraw.
      for (int attempt = 1;; ++attempt) {
        const Vec3 delta = rng.unit3();
        const double v0 = superbracket_det(c.rod_spans());
        VerneConfiguration shifted = c;
        shifted.b += delta;
        const double v1 = superbracket_det(shifted.rod_spans());
        const double step = -v0 / (v1 - v0);
        if (std::abs(step) < 2.0 && (c.b + step * delta - c.a).norm() > 0.1) {
          c.b += step * delta;
          break;
        }
        if (attempt % 16 == 0) c = random_verne_config(rng);
      }
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "not a Verne case label");
  }
  return c;
}

VerneConfiguration make_verne_parallel_legs(Rng& rng) {
  VerneConfiguration c = random_verne_config(rng);
  const Vec3 normal = (c.f - c.e).cross(c.g - c.e).normalized();
  const Vec3 shift = rng.uniform(0.5, 1.5) * normal;
  const Vec3 u = c.f - c.e;
  const Vec3 v = c.g - c.e;
  auto in_plane = [&] { return c.e + shift + rng.uniform() * u + rng.uniform() * v; };
  c.i = in_plane();
  c.j = in_plane();
  c.k = in_plane();
  c.l = c.k + (c.j - c.i);
  return c;
}

VerneConfiguration random_delta_config(Rng& rng) {
  VerneConfiguration c = random_verne_config(rng);
  c.d = c.c + (c.b - c.a);
  return c;
}

}  // namespace gcs
