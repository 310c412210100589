#include <doctest.h>

#include <set>
#include <vector>

#include "gcsing/errors.hpp"
#include "gcsing/superbracket.hpp"
#include "helpers.hpp"

using namespace gcs;

namespace {

std::array<oracle::P4, 12> random_points(oracle::Draw& draw) {
  std::array<oracle::P4, 12> pts;
  for (auto& p : pts) p = draw.point();
  return pts;
}

SuperbracketInput to_input(const std::array<oracle::P4, 12>& pts) {
  SuperbracketInput in{
      LineSpan{to_point(pts[0]), to_point(pts[1])},  LineSpan{to_point(pts[2]), to_point(pts[3])},
      LineSpan{to_point(pts[4]), to_point(pts[5])},  LineSpan{to_point(pts[6]), to_point(pts[7])},
      LineSpan{to_point(pts[8]), to_point(pts[9])},  LineSpan{to_point(pts[10]), to_point(pts[11])}};
  return in;
}

}  // namespace

TEST_CASE("point_of indexes a..l across the spans") {
  oracle::Draw draw(21);
  const auto pts = random_points(draw);
  const auto in = to_input(pts);
  for (int i = 0; i < 12; ++i) CHECK(to_array(point_of(in, i)) == pts[i]);
  CHECK_THROWS_AS(point_of(in, 12), Error);
}

TEST_CASE("superbracket_det matches the Laplace 6x6 determinant") {
  oracle::Draw draw(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(draw);
    const double expected = oracle::superbracket(pts);
    CHECK(superbracket_det(to_input(pts)) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("the expansion table has 24 well-formed monomials") {
  const auto table = expansion_monomials();
  REQUIRE(table.size() == 24);
  std::set<std::vector<int>> seen;
  for (const auto& mono : table) {
    CHECK((mono.sign == 1 || mono.sign == -1));
    std::vector<int> used;
    for (const auto& br : mono.brackets) {
      for (auto idx : br) used.push_back(idx);
    }
    std::vector<int> sorted = used;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 12; ++i) CHECK(sorted[i] == i);  // each point exactly once
    CHECK(seen.insert(used).second);
  }
}

TEST_CASE("bracket expansion equals the determinant with constant +1") {
  oracle::Draw draw(23);
  for (int trial = 0; trial < 500; ++trial) {
    const auto pts = random_points(draw);
    const double det = oracle::superbracket(pts);
    const double expanded = superbracket_expand(to_input(pts));
    CHECK(oracle::rel(expanded, kExpansionConstant * det) < 1e-9);
  }
}

TEST_CASE("flipping one monomial sign breaks the identity") {
  oracle::Draw draw(24);
  const auto base = expansion_monomials();
  std::vector<BracketMonomial> mutated(base.begin(), base.end());
  mutated[5].sign = -mutated[5].sign;
  int broken = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto in = to_input(random_points(draw));
    const double det = superbracket_det(in);
    if (oracle::rel(superbracket_expand(in, mutated), det) > 1e-6) ++broken;
  }
  CHECK(broken == 50);
}

TEST_CASE("expansion vanishes on dependent line sets") {
  oracle::Draw draw(25);
  auto pts = random_points(draw);
  // Lines 1-3 form a planar pencil through one hub point, which spans only
  // a two-dimensional family.
  const oracle::P4 hub = draw.point();
  pts[0] = pts[2] = pts[4] = hub;
  for (int c = 0; c < 4; ++c) pts[5][c] = 0.4 * pts[1][c] + 0.6 * pts[3][c];
  const auto in = to_input(pts);
  const double scale = plucker_matrix(in).rowwise().norm().prod();
  CHECK(std::abs(superbracket_det(in)) < 1e-12 * scale);
  CHECK(std::abs(superbracket_expand(in)) < 1e-12 * scale);
}

TEST_CASE("expansion is exactly zero on a repeated span") {
  oracle::Draw draw(26);
  auto pts = random_points(draw);
  pts[2] = pts[0];
  pts[3] = pts[1];
  CHECK(superbracket_expand(to_input(pts)) == 0.0);
}

TEST_CASE("degenerate spans are rejected") {
  oracle::Draw draw(27);
  auto pts = random_points(draw);
  pts[7] = pts[6];
  CHECK_THROWS_AS(superbracket_det(to_input(pts)), Error);
  CHECK_THROWS_AS(superbracket_expand(to_input(pts)), Error);
}
