#pragma once

#include <cstdint>
#include <random>

#include "gcsing/manipulators.hpp"
#include "gcsing/superbracket.hpp"

namespace gcs {

/// Seedable generator with a platform-independent uniform draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi), built from the top 53 bits of mt19937_64.
  double uniform(double lo = -1.0, double hi = 1.0) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  Vec3 vec3(double scale = 1.0) { return Vec3(uniform(), uniform(), uniform()) * scale; }
  Vec4 vec4(double scale = 1.0) { return Vec4(uniform(), uniform(), uniform(), uniform()) * scale; }
  Vec3 unit3();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

HomogeneousPoint random_point(Rng& rng);
SuperbracketInput random_superbracket_input(Rng& rng);

UPU3Geometry random_upu3_geometry(Rng& rng);
/// Generic state from a random geometry and pose.
UPU3State random_upu3_state(Rng& rng);
/// State built to exhibit exactly the given configuration family
/// (one of the force/moment labels or MomentDegenerate).
UPU3State make_upu3_case(Rng& rng, CaseLabel label);
/// Labels upu3_classify must return for make_upu3_case(label).
std::vector<CaseLabel> expected_upu3_labels(CaseLabel label);

VerneConfiguration random_verne_config(Rng& rng);
/// Configuration in the given Verne case (CaseI .. CaseVI).
VerneConfiguration make_verne_case(Rng& rng, CaseLabel label);
/// Legs II and III in distinct parallel planes (the other half of CaseI).
VerneConfiguration make_verne_parallel_legs(Rng& rng);
/// Random configuration with d - c = b - a.
VerneConfiguration random_delta_config(Rng& rng);

}  // namespace gcs
