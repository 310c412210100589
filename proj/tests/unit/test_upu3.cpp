#include <doctest.h>

#include "gcsing/errors.hpp"
#include "gcsing/manipulators.hpp"
#include "gcsing/samples.hpp"
#include "helpers.hpp"

using namespace gcs;

namespace {

UPU3Geometry orthonormal_geometry() {
  UPU3Geometry g;
  g.base_points = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  g.platform_offsets = {Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
  g.base_u_axes = {Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(0, 1, 0)};
  return g;
}

UPU3State state_from(std::array<Vec3, 3> s, std::array<Vec3, 3> n) {
  UPU3State st;
  for (int i = 0; i < 3; ++i) {
    st.s[i] = s[i].normalized();
    st.r[i] = Vec3(i, 2 * i, -i);
    st.n[i] = n[i];
  }
  return st;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("state geometry: unit leg, moment orthogonal to both U axes") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const UPU3Geometry g = random_upu3_geometry(rng);
    const Vec3 pose = rng.vec3() + Vec3(0, 0, 1.5);
    UPU3State st;
    try {
      st = upu3_state(g, pose);
    } catch (const Error&) {
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      const Vec3 leg = pose + g.platform_offsets[i] - g.base_points[i];
      CHECK(st.s[i].isApprox(leg.normalized()));
      CHECK(st.r[i] == g.base_points[i]);
      const Vec3& e = g.base_u_axes[i];
      const Vec3 moving = e.cross(st.s[i]).normalized();
      CHECK(st.n[i].norm() == doctest::Approx(1.0));
      CHECK(std::abs(st.n[i].dot(e)) < 1e-12);
      CHECK(std::abs(st.n[i].dot(moving)) < 1e-12);
      CHECK(std::abs(moving.dot(st.s[i])) < 1e-12);
    }
  }
}

TEST_CASE("value is the product of the two triple products and matches the determinant") {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const UPU3State st = random_upu3_state(rng);
    const SingularityReport rep = upu3_singularity(st);
    const double ts = oracle::triple(to_array(st.s[0]), to_array(st.s[1]), to_array(st.s[2]));
    const double tn = oracle::triple(to_array(st.n[0]), to_array(st.n[1]), to_array(st.n[2]));
    REQUIRE(rep.factors.size() == 2);
    CHECK(rep.factors[0].name == "triple_s");
    CHECK(rep.factors[0].value == doctest::Approx(ts).epsilon(1e-12));
    CHECK(rep.factors[1].value == doctest::Approx(tn).epsilon(1e-12));
    CHECK(oracle::rel(rep.value, ts * tn) < 1e-12);

    const InverseJacobian jac = assemble(upu3_system(st));
    oracle::Mat<6> m{};
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) m[i][j] = jac.matrix(i, j);
    }
    CHECK(oracle::rel(oracle::det<6>(m), rep.value) < 1e-10);
    CHECK(rep.consistent());
    CHECK(rep.rank == 6);
    CHECK(rep.labels.empty());
  }
}

TEST_CASE("orthonormal reference pose") {
  const UPU3State st = upu3_state(orthonormal_geometry(), Vec3(0, 0, 0.1));
  const SingularityReport rep = upu3_singularity(st);
  CHECK(rep.rank == 6);
  CHECK_FALSE(rep.singular);
  CHECK(rep.gauge == doctest::Approx(1e-9));
}

TEST_CASE("hand-built force and moment families are labelled") {
  const Vec3 x(1, 0, 0), y(0, 1, 0), z(0, 0, 1);
  const std::array<Vec3, 3> generic{x, y, z};
  using L = CaseLabel;

  auto labels = [&](std::array<Vec3, 3> s, std::array<Vec3, 3> n) {
    const UPU3State st = state_from(s, n);
    const SingularityReport rep = upu3_singularity(st);
    CHECK(rep.singular);
    CHECK(rep.rank < 6);
    return rep.labels;
  };
  CHECK(labels({x, y, Vec3(1, 1, 0)}, generic) == std::vector<L>{L::ForcesCoplanar});
  CHECK(labels({x, y, x}, generic) == std::vector<L>{L::ForcesCoplanar, L::ForcesTwoParallel});
  CHECK(labels({x, -x, x}, generic) ==
        std::vector<L>{L::ForcesCoplanar, L::ForcesTwoParallel, L::ForcesAllParallel});
  CHECK(labels(generic, {y, z, Vec3(0, 1, -1)}) == std::vector<L>{L::MomentsCoplanar});
  CHECK(labels(generic, {z, z, y}) == std::vector<L>{L::MomentsCoplanar, L::MomentsTwoParallel});
  CHECK(labels(generic, {z, z, -z}) ==
        std::vector<L>{L::MomentsCoplanar, L::MomentsTwoParallel, L::MomentsAllParallel});
  // Both blocks singular at once.
  CHECK(labels({x, y, x + y}, {z, y, y + z}) == std::vector<L>{L::ForcesCoplanar, L::MomentsCoplanar});
}

TEST_CASE("degenerate moment is classified and rejected by the system builder") {
  const UPU3State st = state_from({Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)},
                                  {Vec3(1, 0, 0), Vec3::Zero(), Vec3(0, 0, 1)});
  CHECK(upu3_classify(st) == std::vector<CaseLabel>{CaseLabel::MomentDegenerate});
  CHECK(code_of([&] { upu3_system(st); }) == ErrorCode::DegenerateMoment);
  CHECK(code_of([&] { upu3_singularity(st); }) == ErrorCode::DegenerateMoment);
}

TEST_CASE("constructed families from the sampler") {
  Rng rng(43);
  const CaseLabel cases[] = {CaseLabel::ForcesCoplanar,    CaseLabel::ForcesTwoParallel,
                             CaseLabel::ForcesAllParallel, CaseLabel::MomentsCoplanar,
                             CaseLabel::MomentsTwoParallel, CaseLabel::MomentsAllParallel};
  for (int trial = 0; trial < 50; ++trial) {
    for (CaseLabel c : cases) {
      const UPU3State st = make_upu3_case(rng, c);
      const SingularityReport rep = upu3_singularity(st);
      CHECK(rep.labels == expected_upu3_labels(c));
      CHECK(rep.rank < 6);
      CHECK(rep.singular);
    }
  }
  CHECK_THROWS_AS(expected_upu3_labels(CaseLabel::CaseI), Error);
}

TEST_CASE("state errors") {
  UPU3Geometry g = orthonormal_geometry();
  CHECK(code_of([&] { upu3_state(g, Vec3(1, 0, 0)); }) == ErrorCode::ZeroLegLength);
  // Leg 1 runs along its own U axis.
  CHECK(code_of([&] { upu3_state(g, Vec3(1, 0, 2)); }) == ErrorCode::UAxisParallelToLeg);
  g.base_u_axes[1] = Vec3(2, 0, 0);
  CHECK(code_of([&] { validate(g); }) == ErrorCode::InvariantViolation);
  g = orthonormal_geometry();
  g.base_points = {Vec3(1, 1, 1), Vec3(1, 1, 1), Vec3(1, 1, 1)};
  CHECK(code_of([&] { validate(g); }) == ErrorCode::InvariantViolation);
}

TEST_CASE("label names") {
  CHECK(to_string(CaseLabel::ForcesCoplanar) == "FORCES_COPLANAR");
  CHECK(to_string(CaseLabel::MomentsAllParallel) == "MOMENTS_ALL_PARALLEL");
  CHECK(to_string(CaseLabel::MomentDegenerate) == "MOMENT_DEGENERATE");
  CHECK(to_string(CaseLabel::CaseIV) == "CASE_IV");
}
