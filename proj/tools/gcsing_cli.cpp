// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "gcsing/gcsing.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvariant = 2, kOracle = 3 };

int exit_for(gcs_status st) {
  switch (st) {
    case GCS_OK: return kOk;
    case GCS_E_ARGUMENT:
    case GCS_E_PARSE:
    case GCS_E_IO: return kUsage;
    case GCS_E_INVARIANT:
    case GCS_E_DEGENERATE: return kInvariant;
    case GCS_E_ORACLE:
    case GCS_E_INTERNAL: return kOracle;
  }
  return kOracle;
}

int fail(gcs_status st) {
  std::fprintf(stderr, "error: %s\n", gcs_last_error());
  return exit_for(st);
}

bool parse_pose(const std::string& text, double out[3]) {
  std::stringstream in(text);
  std::string part;
  int n = 0;
  while (std::getline(in, part, ',')) {
    if (n == 3) return false;
    char* end = nullptr;
    out[n] = std::strtod(part.c_str(), &end);
    if (part.empty() || *end != '\0') return false;
    ++n;
  }
  return n == 3;
}

// RAII for the opaque handles
struct Model {
  gcs_model* p = nullptr;
  ~Model() { gcs_model_free(p); }
};

int run_analyze(const std::string& file, const std::string& pose_text, double tol) {
  double pose[3];
  if (!parse_pose(pose_text, pose)) {
    std::fprintf(stderr, "error: --pose expects x,y,z\n");
    return kUsage;
  }
  Model model;
  if (gcs_status st = gcs_model_load(file.c_str(), &model.p); st != GCS_OK) return fail(st);
  gcs_report* report = nullptr;
  if (gcs_status st = gcs_analyze(model.p, pose, tol, &report); st != GCS_OK) return fail(st);
  std::fputs(gcs_report_text(report), stdout);
  gcs_report_free(report);
  return kOk;
}

int run_sweep(const std::string& file, const std::string& grid, const std::string& out,
              unsigned jobs, double tol) {
  Model model;
  if (gcs_status st = gcs_model_load(file.c_str(), &model.p); st != GCS_OK) return fail(st);
  const char* path = out == "-" ? nullptr : out.c_str();
  if (gcs_status st = gcs_sweep(model.p, grid.c_str(), tol, jobs, path); st != GCS_OK) return fail(st);
  if (!path) std::fputs(gcs_sweep_text(), stdout);
  return kOk;
}

int run_verify(uint64_t seed, int trials) {
  gcs_verify_result* res = nullptr;
  if (gcs_status st = gcs_verify(seed, trials, &res); st != GCS_OK) return fail(st);
  std::fputs(gcs_verify_result_text(res), stdout);
  const bool ok = gcs_verify_result_passed(res) != 0;
  gcs_verify_result_free(res);
  return ok ? kOk : kOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel-singularity analysis for 3-UPU, Verne and Delta manipulators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gcs_version());

  std::string model_file, pose, grid, out;
  double tol = 0.0;
  unsigned jobs = 1;
  uint64_t seed = gcs_default_seed();
  int trials = 1000;

  auto* analyze = app.add_subcommand("analyze", "Evaluate the singularity condition at one pose");
  analyze->add_option("--model-file", model_file, "JSON manipulator description")->required();
  analyze->add_option("--pose", pose, "x,y,z")->required();
  analyze->add_option("--tol", tol, "relative tolerance (default: from the model file)")
      ->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Evaluate the condition over a pose grid, write CSV");
  sweep->add_option("--model-file", model_file, "JSON manipulator description")->required();
  sweep->add_option("--grid", grid, "axis=min:max:steps[,...]")->required();
  sweep->add_option("--out", out, "CSV path, '-' for stdout")->required();
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  sweep->add_option("--tol", tol, "relative tolerance")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check the identities on random configurations");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--trials", trials, "trials per suite")->check(CLI::Range(1, 100000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (analyze->parsed()) return run_analyze(model_file, pose, tol);
  if (sweep->parsed()) return run_sweep(model_file, grid, out, jobs, tol);
  return run_verify(seed, trials);
}
