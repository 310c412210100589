#include "gcsing/description.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "gcsing/errors.hpp"

namespace gcs {

using nlohmann::json;

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::Upu3: return "upu3";
    case ModelKind::Verne: return "verne";
    case ModelKind::Delta: return "delta";
  }
  return "unknown";
}

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(std::string("missing field '") + key + "'");
  return *it;
}

Vec3 to_vec3(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 3) parse_fail("field '" + field + "': expected [x, y, z]");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) parse_fail("field '" + field + "': coordinates must be numbers");
    out[i] = v[i].get<double>();
  }
  return out;
}

std::array<Vec3, 3> to_vec3_triple(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_array() || v.size() != 3) {
    parse_fail(std::string("field '") + key + "': expected 3 rows, got " +
               (v.is_array() ? std::to_string(v.size()) : std::string("a non-array")));
  }
  std::array<Vec3, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = to_vec3(v[i], std::string(key) + "[" + std::to_string(i) + "]");
  return out;
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Model checks surface as InvariantViolation, keeping the specific cause.
template <class F>
void as_invariant(F&& check) {
  try {
    check();
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InvariantViolation) throw;
    throw Error(ErrorCode::InvariantViolation, err.what());
  }
}

}  // namespace

ManipulatorDescription parse_description(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    parse_fail("malformed description at " + position_of(text, err.byte));
  }
  if (!doc.is_object()) parse_fail("description must be an object");

  ManipulatorDescription desc;
  const json& model = require(doc, "model");
  if (!model.is_string()) parse_fail("field 'model': expected a string");
  const auto name = model.get<std::string>();
  if (name == "upu3") {
    desc.model = ModelKind::Upu3;
  } else if (name == "verne") {
    desc.model = ModelKind::Verne;
  } else if (name == "delta") {
    desc.model = ModelKind::Delta;
  } else {
    parse_fail("field 'model': unknown model '" + name + "' (expected upu3, verne or delta)");
  }

  if (auto it = doc.find("tolerance"); it != doc.end()) {
    if (!it->is_number() || !(it->get<double>() > 0.0)) {
      parse_fail("field 'tolerance': expected a positive number");
    }
    desc.tol = it->get<double>();
  }

  if (desc.model == ModelKind::Upu3) {
    UPU3Geometry g;
    g.base_points = to_vec3_triple(doc, "base_points");
    g.platform_offsets = to_vec3_triple(doc, "platform_offsets");
    g.base_u_axes = to_vec3_triple(doc, "base_u_axes");
    for (int i = 0; i < 3; ++i) {
      const double n = g.base_u_axes[i].norm();
      if (n == 0.0) {
        throw Error(ErrorCode::InvariantViolation, "base_u_axes[" + std::to_string(i) + "] is zero");
      }
      g.base_u_axes[i] /= n;
    }
    validate(g, desc.tol);
    desc.geometry = g;
    return desc;
  }

  const json& joints = require(doc, "joints");
  if (!joints.is_object()) parse_fail("field 'joints': expected an object with keys a..l");
  if (joints.size() != 12) {
    parse_fail("field 'joints': expected 12 joint centers a..l, got " + std::to_string(joints.size()));
  }
  std::array<Vec3, 12> pts;
  for (int idx = 0; idx < 12; ++idx) {
    const std::string key(1, static_cast<char>('a' + idx));
    auto it = joints.find(key);
    if (it == joints.end()) parse_fail("field 'joints': missing joint '" + key + "'");
    pts[idx] = to_vec3(*it, "joints." + key);
  }
  const VerneConfiguration config = VerneConfiguration::from_points(pts);
  as_invariant([&] { validate(config, desc.tol); });
  if (desc.model == ModelKind::Delta) {
    const Vec3 ab = config.b - config.a;
    const Vec3 cd = config.d - config.c;
    if (!((cd - ab).norm() <= desc.tol * (ab.norm() + cd.norm()))) {
      throw Error(ErrorCode::InvariantViolation, "leg I: delta model requires d - c = b - a");
    }
  }
  desc.geometry = config;
  return desc;
}

ManipulatorDescription load_description(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_description(buf.str());
}

}  // namespace gcs
