#include "gcsing/analysis.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "gcsing/errors.hpp"

namespace gcs {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

SingularityReport analyze(const ManipulatorDescription& desc, const Vec3& pose,
                          std::optional<double> tol) {
  const double t = tol.value_or(desc.tol);
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  switch (desc.model) {
    case ModelKind::Upu3:
      return upu3_singularity(upu3_state(desc.upu3(), pose, t), t);
    case ModelKind::Verne:
      return verne_singularity(desc.verne().with_platform_offset(pose), t);
    case ModelKind::Delta:
      return delta_singularity(desc.verne().with_platform_offset(pose), t);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown model");
}

double oracle_tolerance(const SingularityReport& report) {
  return 1e-9 * (std::abs(report.value) + std::abs(report.oracle_constant * report.oracle_det)) +
         report.gauge;
}

void check_report(const SingularityReport& report) {
  if (!(report.oracle_delta() <= oracle_tolerance(report))) {
    throw Error(ErrorCode::OracleDisagreement,
                "closed-form value " + format_real(report.value) + " vs determinant " +
                    format_real(report.oracle_det));
  }
  if (!report.consistent()) {
    throw Error(ErrorCode::OracleDisagreement,
                "closed-form verdict (" + std::string(report.singular ? "singular" : "regular") +
                    ") disagrees with numeric rank " + std::to_string(report.rank));
  }
}

namespace {

std::string join_labels(const std::vector<CaseLabel>& labels, char sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += to_string(labels[i]);
  }
  return out;
}

const char* const kAxisNames[] = {"x", "y", "z"};

}  // namespace

std::string render_report(const ManipulatorDescription& desc, const Vec3& pose,
                          const SingularityReport& report) {
  std::ostringstream out;
  out << "model: " << to_string(desc.model) << '\n';
  out << "pose: " << format_real(pose.x()) << ", " << format_real(pose.y()) << ", "
      << format_real(pose.z()) << '\n';
  out << "tolerance: " << format_real(report.tol) << '\n';
  out << "value: " << format_real(report.value) << '\n';
  out << "factors:\n";
  for (const auto& f : report.factors) out << "  " << f.name << " = " << format_real(f.value) << '\n';
  out << "rank: " << report.rank << '\n';
  out << "singular: " << (report.singular ? "yes" : "no") << " (gauge " << format_real(report.gauge)
      << ")\n";
  out << "labels: " << (report.labels.empty() ? "(none)" : join_labels(report.labels, ' ')) << '\n';
  out << "oracle: det = " << format_real(report.oracle_det)
      << ", constant = " << format_real(report.oracle_constant)
      << ", |value - constant*det| = " << format_real(report.oracle_delta())
      << " (tolerance " << format_real(oracle_tolerance(report)) << ")\n";
  return out.str();
}

double SweepAxis::at(int index) const {
  if (steps == 1) return min;
  return min + (max - min) * static_cast<double>(index) / static_cast<double>(steps - 1);
}

SweepSpec parse_grid(std::string_view text) {
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::ParseError, "grid '" + std::string(text) + "': " + why);
  };
  auto number = [&](std::string_view s, double& out) {
    // from_chars for double is missing in older libstdc++
    std::string tmp(s);
    char* end = nullptr;
    out = std::strtod(tmp.c_str(), &end);
    if (tmp.empty() || end != tmp.c_str() + tmp.size()) fail("bad number '" + tmp + "'");
  };

  SweepSpec spec;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;

    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) fail("expected axis=min:max:steps");
    const std::string_view name = item.substr(0, eq);
    SweepAxis axis;
    if (name == "x") {
      axis.axis = 0;
    } else if (name == "y") {
      axis.axis = 1;
    } else if (name == "z") {
      axis.axis = 2;
    } else {
      fail("unknown axis '" + std::string(name) + "'");
    }
    for (const auto& other : spec.axes) {
      if (other.axis == axis.axis) fail("axis '" + std::string(name) + "' given twice");
    }
    const std::string_view range = item.substr(eq + 1);
    const std::size_t c1 = range.find(':');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : range.find(':', c1 + 1);
    if (c2 == std::string_view::npos) fail("expected min:max:steps");
    number(range.substr(0, c1), axis.min);
    number(range.substr(c1 + 1, c2 - c1 - 1), axis.max);
    const std::string_view steps = range.substr(c2 + 1);
    const auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), axis.steps);
    if (ec != std::errc() || ptr != steps.data() + steps.size()) fail("bad step count");
    if (axis.steps < 1) fail("steps must be at least 1");
    if (!(axis.min <= axis.max)) fail("min must not exceed max");
    spec.axes.push_back(axis);
    if (comma == text.size()) break;
  }
  if (spec.axes.empty() || spec.axes.size() > 3) fail("expected one to three axes");
  return spec;
}

std::string sweep_csv(const ManipulatorDescription& desc, const SweepSpec& spec,
                      std::optional<double> tol, unsigned workers) {
  if (spec.axes.empty() || spec.axes.size() > 3) {
    throw Error(ErrorCode::InvalidArgument, "sweep needs one to three axes");
  }
  std::size_t cells = 1;
  for (const auto& ax : spec.axes) cells *= static_cast<std::size_t>(ax.steps);

  auto pose_of = [&](std::size_t flat) {
    Vec3 pose = Vec3::Zero();
    std::vector<double> coords(spec.axes.size());
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
      const auto& ax = spec.axes[k];
      const int idx = static_cast<int>(flat % static_cast<std::size_t>(ax.steps));
      flat /= static_cast<std::size_t>(ax.steps);
      coords[k] = ax.at(idx);
      pose[ax.axis] = coords[k];
    }
    return std::pair{pose, coords};
  };

  std::vector<std::string> rows(cells);
  std::vector<std::exception_ptr> errors(cells);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t cell = next++; cell < cells; cell = next++) {
      try {
        const auto [pose, coords] = pose_of(cell);
        const SingularityReport report = analyze(desc, pose, tol);
        check_report(report);
        std::string row;
        for (double c : coords) row += format_real(c) + ",";
        row += format_real(report.value) + "," + std::to_string(report.rank) + "," +
               join_labels(report.labels, ';') + "\n";
        rows[cell] = std::move(row);
      } catch (...) {
        errors[cell] = std::current_exception();
      }
    }
  };

  const unsigned n_workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cells)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  std::string out;
  for (const auto& ax : spec.axes) out += std::string(kAxisNames[ax.axis]) + ",";
  out += "value,rank,labels\n";
  for (const auto& row : rows) out += row;
  return out;
}

}  // namespace gcs
