#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "gcsing/manipulators.hpp"

namespace gcs {

enum class ModelKind { Upu3, Verne, Delta };

std::string_view to_string(ModelKind kind) noexcept;

/// A validated manipulator description file.
///
/// 3-UPU:
///   {"model": "upu3", "tolerance": 1e-9,
///    "base_points": [[x,y,z] x3], "platform_offsets": [[x,y,z] x3],
///    "base_u_axes": [[x,y,z] x3]}
/// Verne / Delta:
///   {"model": "verne" | "delta", "tolerance": 1e-9,
///    "joints": {"a": [x,y,z], ..., "l": [x,y,z]}}
///
/// "tolerance" is optional. U-joint axes are normalized on load.
struct ManipulatorDescription {
  ModelKind model = ModelKind::Upu3;
  double tol = kDefaultTol;
  std::variant<UPU3Geometry, VerneConfiguration> geometry;

  const UPU3Geometry& upu3() const { return std::get<UPU3Geometry>(geometry); }
  const VerneConfiguration& verne() const { return std::get<VerneConfiguration>(geometry); }
};

/// Throws ParseError (with line/column or field name) or InvariantViolation.
ManipulatorDescription parse_description(std::string_view text);
ManipulatorDescription load_description(const std::filesystem::path& path);

}  // namespace gcs
