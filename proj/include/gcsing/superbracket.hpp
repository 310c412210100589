#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "gcsing/projective.hpp"

namespace gcs {

/// Ordered pair of points spanning one line.
struct LineSpan {
  HomogeneousPoint first;
  HomogeneousPoint second;
};

/// Six spans [ab, cd, ef, gh, ij, kl]; the twelve points a..l are indexed
/// 0..11 in that order (span k holds points 2k and 2k+1).
using SuperbracketInput = std::array<LineSpan, 6>;

const HomogeneousPoint& point_of(const SuperbracketInput& input, int index);

/// Row i is join(spans[i]) laid out as (direction; moment).
Mat6 plucker_matrix(const SuperbracketInput& input, double tol = kDefaultTol);

/// Determinant of plucker_matrix. Zero iff the six lines are linearly dependent.
double superbracket_det(const SuperbracketInput& input, double tol = kDefaultTol);

/// sign * [p0 p1 p2 p3][p4 p5 p6 p7][p8 p9 p10 p11] over point indices.
struct BracketMonomial {
  int sign = 1;
  std::array<std::array<std::uint8_t, 4>, 3> brackets{};
};

/// The 24 monomials of the bracket expansion of [ab, cd, ef, gh, ij, kl].
std::span<const BracketMonomial> expansion_monomials();

/// Ratio superbracket_expand / superbracket_det, fixed once by the
/// determinant oracle.
inline constexpr double kExpansionConstant = 1.0;

/// Sum of the expansion monomials evaluated with bracket4.
double superbracket_expand(const SuperbracketInput& input);

/// Same, over a caller-supplied monomial table.
double superbracket_expand(const SuperbracketInput& input,
                           std::span<const BracketMonomial> monomials);

}  // namespace gcs
