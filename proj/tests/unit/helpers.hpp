#pragma once

#include <array>

#include "gcsing/projective.hpp"
#include "oracles.hpp"

inline gcs::HomogeneousPoint to_point(const oracle::P4& p) {
  return gcs::HomogeneousPoint(p[0], p[1], p[2], p[3]);
}

inline oracle::P4 to_array(const gcs::HomogeneousPoint& p) {
  return {p.coords()[0], p.coords()[1], p.coords()[2], p.coords()[3]};
}

inline std::array<double, 3> to_array(const gcs::Vec3& v) { return {v[0], v[1], v[2]}; }

inline oracle::P4 finite(const gcs::Vec3& v) { return {v[0], v[1], v[2], 1.0}; }
inline oracle::P4 direction(const gcs::Vec3& v) { return {v[0], v[1], v[2], 0.0}; }
