// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gcsing/gcsing.h"

namespace {

const char* kUpu3 = R"({"model": "upu3",
  "base_points": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
  "platform_offsets": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
  "base_u_axes": [[0, 0, 1], [1, 0, 0], [0, 1, 0]]})";

}  // namespace

TEST_CASE("bracket and join primitives") {
  const double pts[16] = {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  double b = 0.0;
  REQUIRE(gcs_bracket4(pts, &b) == GCS_OK);
  CHECK(b == doctest::Approx(1.0));

  const double a[4] = {1, 2, 3, 1}, d[4] = {0, 0, 1, 0};
  double line[6];
  REQUIRE(gcs_join(a, d, line) == GCS_OK);
  CHECK(line[2] == 1.0);
  CHECK(line[3] == 2.0);
  CHECK(line[4] == -1.0);
  CHECK(line[5] == 0.0);

  CHECK(gcs_join(a, a, line) == GCS_E_DEGENERATE);
  CHECK(std::string(gcs_last_error_kind()) == "DegenerateLine");
  CHECK(gcs_bracket4(nullptr, &b) == GCS_E_ARGUMENT);
  const double zero[16] = {0};
  CHECK(gcs_bracket4(zero, &b) == GCS_E_ARGUMENT);
}

TEST_CASE("superbracket determinant and expansion agree") {
  double pts[48];
  for (int i = 0; i < 48; ++i) pts[i] = std::sin(1.7 * i + 0.3) + (i % 4 == 3 ? 2.0 : 0.0);
  double det = 0.0, expanded = 0.0;
  REQUIRE(gcs_superbracket_det(pts, &det) == GCS_OK);
  REQUIRE(gcs_superbracket_expand(pts, &expanded) == GCS_OK);
  CHECK(expanded == doctest::Approx(det).epsilon(1e-9));
}

TEST_CASE("model lifecycle and analysis") {
  gcs_model* model = nullptr;
  REQUIRE(gcs_model_parse(kUpu3, &model) == GCS_OK);
  CHECK(std::string(gcs_model_kind(model)) == "upu3");
  CHECK(gcs_model_tolerance(model) == 1e-9);

  const double pose[3] = {0, 0, 0.1};
  gcs_report* report = nullptr;
  REQUIRE(gcs_analyze(model, pose, 0.0, &report) == GCS_OK);
  CHECK(gcs_report_rank(report) == 6);
  CHECK(gcs_report_is_singular(report) == 0);
  CHECK(gcs_report_factor_count(report) == 2);
  CHECK(std::string(gcs_report_factor_name(report, 0)) == "triple_s");
  CHECK(gcs_report_factor_name(report, 2) == nullptr);
  CHECK(gcs_report_value(report) ==
        doctest::Approx(gcs_report_factor_value(report, 0) * gcs_report_factor_value(report, 1)));
  CHECK(gcs_report_oracle_delta(report) < 1e-12);
  CHECK(gcs_report_label_count(report) == 0);
  CHECK(std::string(gcs_report_text(report)).find("rank: 6") != std::string::npos);
  gcs_report_free(report);

  const double bad_pose[3] = {1, 0, 0};
  CHECK(gcs_analyze(model, bad_pose, 0.0, &report) == GCS_E_DEGENERATE);
  CHECK(std::string(gcs_last_error()).find("zero length") != std::string::npos);
  gcs_model_free(model);
  gcs_model_free(nullptr);
}

TEST_CASE("status codes for parse, I/O and invariant failures") {
  gcs_model* model = nullptr;
  CHECK(gcs_model_parse("{", &model) == GCS_E_PARSE);
  CHECK(model == nullptr);
  CHECK(gcs_model_load("/nonexistent.json", &model) == GCS_E_IO);
  CHECK(gcs_model_parse(R"({"model": "upu3",
    "base_points": [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
    "platform_offsets": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    "base_u_axes": [[0, 0, 1], [1, 0, 0], [0, 1, 0]]})", &model) == GCS_E_INVARIANT);
  CHECK(gcs_model_parse(nullptr, &model) == GCS_E_ARGUMENT);
}

TEST_CASE("sweep in memory and to a file") {
  gcs_model* model = nullptr;
  REQUIRE(gcs_model_parse(kUpu3, &model) == GCS_OK);
  REQUIRE(gcs_sweep(model, "z=0.1:0.5:5", 0.0, 2, nullptr) == GCS_OK);
  const std::string mem = gcs_sweep_text();
  CHECK(mem.rfind("z,value,rank,labels\n", 0) == 0);

  const std::string path = "c_api_sweep.csv";
  REQUIRE(gcs_sweep(model, "z=0.1:0.5:5", 0.0, 3, path.c_str()) == GCS_OK);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == mem);
  std::remove(path.c_str());

  CHECK(gcs_sweep(model, "q=0:1:2", 0.0, 1, nullptr) == GCS_E_PARSE);
  CHECK(gcs_sweep(model, "z=0.1:0.5:5", 0.0, 1, "/nonexistent/dir/out.csv") == GCS_E_IO);
  gcs_model_free(model);
}

TEST_CASE("verification through the C API") {
  gcs_verify_result* res = nullptr;
  REQUIRE(gcs_verify(gcs_default_seed(), 50, &res) == GCS_OK);
  CHECK(gcs_verify_result_passed(res) == 1);
  CHECK(gcs_verify_result_suite_count(res) == 6);
  for (size_t i = 0; i < gcs_verify_result_suite_count(res); ++i) {
    CHECK(gcs_verify_result_suite_passed(res, i) == 1);
    CHECK(gcs_verify_result_suite_residual(res, i) < 1e-9);
  }
  CHECK(std::string(gcs_verify_result_suite_name(res, 0)) == "bracket_relations");
  CHECK(std::string(gcs_verify_result_text(res)).find("ALL SUITES PASSED") != std::string::npos);
  gcs_verify_result_free(res);
  CHECK(gcs_verify(1, 0, &res) == GCS_E_ARGUMENT);
}
