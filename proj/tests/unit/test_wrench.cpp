#include <doctest.h>

#include "gcsing/errors.hpp"
#include "gcsing/wrench.hpp"
#include "helpers.hpp"

using namespace gcs;

TEST_CASE("force wrench is (s; r x s) with unit s") {
  const Vec3 s(3, 0, 4), r(1, -2, 0.5);
  const Wrench w = force_wrench(s, r, "leg 1");
  CHECK(w.kind == WrenchKind::ActuationForce);
  CHECK(w.line.direction.isApprox(s / 5.0));
  CHECK(w.line.moment.isApprox(r.cross(s / 5.0)));
  CHECK(w.anchor().isApprox(r));
  CHECK(w.leg == "leg 1");
}

TEST_CASE("moment wrench is a line at infinity carrying n") {
  const Vec3 n(0.2, -0.7, 1.1);
  const Wrench w = moment_wrench(n, "leg 2");
  CHECK(w.kind == WrenchKind::ConstraintMoment);
  CHECK(w.line.direction == Vec3::Zero());
  CHECK(w.line.moment.isApprox(n, 1e-14));
  const LineSpan span = wrench_span(w);
  CHECK_FALSE(span.first.is_finite());
  CHECK_FALSE(span.second.is_finite());
  // Round trip through the stored span is exact.
  CHECK(join(span.first, span.second) == w.line);
}

TEST_CASE("force wrench span round trip is exact") {
  const Wrench w = force_wrench(Vec3(1, 2, 2), Vec3(0.3, 0.1, -0.4), "leg");
  const LineSpan span = wrench_span(w);
  CHECK(span.first.is_finite());
  CHECK_FALSE(span.second.is_finite());
  CHECK(join(span.first, span.second) == w.line);
}

TEST_CASE("zero directions are rejected") {
  try {
    force_wrench(Vec3(1e-12, 0, 0), Vec3::Zero(), "leg");
    FAIL("expected ZeroDirection");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ZeroDirection);
  }
  try {
    moment_wrench(Vec3::Zero(), "leg");
    FAIL("expected DegenerateMoment");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DegenerateMoment);
  }
}

TEST_CASE("three forces and three moments give a block-triangular determinant") {
  oracle::Draw draw(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Vec3, 3> s, r, n;
    for (int i = 0; i < 3; ++i) {
      s[i] = Vec3(draw.uniform(), draw.uniform(), draw.uniform()).normalized();
      r[i] = Vec3(draw.uniform(), draw.uniform(), draw.uniform());
      n[i] = Vec3(draw.uniform(), draw.uniform(), draw.uniform());
    }
    WrenchSystem sys{force_wrench(s[0], r[0], "1"), force_wrench(s[1], r[1], "2"),
                     force_wrench(s[2], r[2], "3"), moment_wrench(n[0], "1"),
                     moment_wrench(n[1], "2"),      moment_wrench(n[2], "3")};
    const InverseJacobian jac = assemble(sys);
    oracle::Mat<6> m{};
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) m[i][j] = jac.matrix(i, j);
    }
    const double expected = oracle::triple(to_array(s[0]), to_array(s[1]), to_array(s[2])) *
                            oracle::triple(to_array(n[0]), to_array(n[1]), to_array(n[2]));
    CHECK(oracle::rel(oracle::det<6>(m), expected) < 1e-10);
    CHECK(superbracket_det(spans_of(sys)) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("numeric_rank counts singular values above the relative threshold") {
  // Singular values one decade apart: the rank drops by one each time the
  // tolerance passes a value.
  Mat6 m = Mat6::Zero();
  for (int i = 0; i < 6; ++i) m(i, i) = std::pow(10.0, -2 * i);
  CHECK(numeric_rank(m, 1e-12) == 6);
  CHECK(numeric_rank(m, 1e-9) == 5);
  CHECK(numeric_rank(m, 1e-7) == 4);
  CHECK(numeric_rank(m, 1e-5) == 3);
  CHECK(numeric_rank(m, 1e-3) == 2);
  CHECK(numeric_rank(m, 0.5) == 1);
  CHECK(numeric_rank(Mat6::Zero(), 1e-9) == 0);
  CHECK_THROWS_AS(numeric_rank(m, 0.0), Error);
  CHECK_THROWS_AS(numeric_rank(m, -1.0), Error);
}

TEST_CASE("numeric_rank sees a dependent row") {
  oracle::Draw draw(32);
  Mat6 m;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) m(i, j) = draw.uniform();
  }
  CHECK(numeric_rank(m) == 6);
  m.row(5) = 0.3 * m.row(0) - 2.0 * m.row(3);
  CHECK(numeric_rank(m) == 5);
}
