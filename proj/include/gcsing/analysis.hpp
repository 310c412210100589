#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcsing/description.hpp"
#include "gcsing/manipulators.hpp"

namespace gcs {

/// Pose is the platform position for 3-UPU and the rigid offset of the
/// platform-side joints (b, d, f, h, j, l) for Verne and Delta models.
SingularityReport analyze(const ManipulatorDescription& desc, const Vec3& pose,
                          std::optional<double> tol = std::nullopt);

/// Throws OracleDisagreement if the closed form and the determinant or rank
/// oracle disagree beyond the report's tolerance.
void check_report(const SingularityReport& report);

/// Allowed |value - constant * det| for a report.
double oracle_tolerance(const SingularityReport& report);

std::string render_report(const ManipulatorDescription& desc, const Vec3& pose,
                          const SingularityReport& report);

/// %.17g
std::string format_real(double x);

struct SweepAxis {
  int axis = 0;  // 0 = x, 1 = y, 2 = z
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  double at(int index) const;
};

struct SweepSpec {
  std::vector<SweepAxis> axes;
};

/// "z=-1:1:21,x=0:0.5:3". Throws ParseError.
SweepSpec parse_grid(std::string_view text);

/// CSV text: header "<axes>,value,rank,labels", one row per grid point in
/// lexicographic grid-index order (first axis outermost). Independent of
/// the worker count.
std::string sweep_csv(const ManipulatorDescription& desc, const SweepSpec& spec,
                      std::optional<double> tol = std::nullopt, unsigned workers = 1);

}  // namespace gcs
