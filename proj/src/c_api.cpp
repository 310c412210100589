#include "gcsing/gcsing.h"

#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "gcsing/analysis.hpp"
#include "gcsing/description.hpp"
#include "gcsing/errors.hpp"
#include "gcsing/superbracket.hpp"
#include "gcsing/verify.hpp"

struct gcs_model {
  gcs::ManipulatorDescription desc;
};

struct gcs_report {
  gcs::SingularityReport report;
  std::vector<std::string> labels;
  std::string text;
};

struct gcs_verify_result {
  gcs::VerifySummary summary;
  std::string text;
};

namespace {

thread_local std::string t_last_error;
thread_local std::string t_last_kind;
thread_local std::string t_sweep_text;

gcs_status status_of(gcs::ErrorCode code) {
  using gcs::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return GCS_E_ARGUMENT;
    case ErrorCode::ParseError: return GCS_E_PARSE;
    case ErrorCode::Io: return GCS_E_IO;
    case ErrorCode::ParallelogramViolation:
    case ErrorCode::NotDeltaConfiguration:
    case ErrorCode::InvariantViolation: return GCS_E_INVARIANT;
    case ErrorCode::OracleDisagreement: return GCS_E_ORACLE;
    case ErrorCode::DegenerateLine:
    case ErrorCode::DegeneratePlane:
    case ErrorCode::CoincidentPlanes:
    case ErrorCode::ZeroDirection:
    case ErrorCode::DegenerateMoment:
    case ErrorCode::ZeroLegLength:
    case ErrorCode::UAxisParallelToLeg:
    case ErrorCode::ZeroRodLength: return GCS_E_DEGENERATE;
  }
  return GCS_E_INTERNAL;
}

template <class F>
gcs_status guard(F&& body) {
  t_last_error.clear();
  t_last_kind.clear();
  try {
    body();
    return GCS_OK;
  } catch (const gcs::Error& err) {
    t_last_error = err.what();
    t_last_kind = std::string(gcs::to_string(err.code()));
    return status_of(err.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    t_last_kind = "Internal";
  } catch (const std::exception& err) {
    t_last_error = err.what();
    t_last_kind = "Internal";
  }
  return GCS_E_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw gcs::Error(gcs::ErrorCode::InvalidArgument, what);
}

gcs::HomogeneousPoint point_at(const double* p) { return gcs::HomogeneousPoint(p[0], p[1], p[2], p[3]); }

gcs::SuperbracketInput input_from(const double* pts) {
  auto span = [&](int k) { return gcs::LineSpan{point_at(pts + 8 * k), point_at(pts + 8 * k + 4)}; };
  return {span(0), span(1), span(2), span(3), span(4), span(5)};
}

}  // namespace

extern "C" {

const char* gcs_version(void) { return "0.1.0"; }
const char* gcs_last_error(void) { return t_last_error.c_str(); }
const char* gcs_last_error_kind(void) { return t_last_kind.c_str(); }

gcs_status gcs_bracket4(const double points[16], double* out) {
  return guard([&] {
    require(points && out, "null argument");
    *out = gcs::bracket4(point_at(points), point_at(points + 4), point_at(points + 8), point_at(points + 12));
  });
}

gcs_status gcs_join(const double a[4], const double b[4], double out[6]) {
  return guard([&] {
    require(a && b && out, "null argument");
    const gcs::Vec6 c = gcs::join(point_at(a), point_at(b)).coords();
    for (int i = 0; i < 6; ++i) out[i] = c[i];
  });
}

gcs_status gcs_superbracket_det(const double points[48], double* out) {
  return guard([&] {
    require(points && out, "null argument");
    *out = gcs::superbracket_det(input_from(points));
  });
}

gcs_status gcs_superbracket_expand(const double points[48], double* out) {
  return guard([&] {
    require(points && out, "null argument");
    *out = gcs::superbracket_expand(input_from(points));
  });
}

gcs_status gcs_model_load(const char* path, gcs_model** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new gcs_model{gcs::load_description(path)};
  });
}

gcs_status gcs_model_parse(const char* text, gcs_model** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new gcs_model{gcs::parse_description(text)};
  });
}

void gcs_model_free(gcs_model* model) { delete model; }

const char* gcs_model_kind(const gcs_model* model) {
  return model ? gcs::to_string(model->desc.model).data() : "";
}

double gcs_model_tolerance(const gcs_model* model) { return model ? model->desc.tol : 0.0; }

gcs_status gcs_analyze(const gcs_model* model, const double pose[3], double tol, gcs_report** out) {
  return guard([&] {
    require(model && pose && out, "null argument");
    const gcs::Vec3 p(pose[0], pose[1], pose[2]);
    std::optional<double> t;
    if (tol > 0.0) t = tol;
    auto rep = std::make_unique<gcs_report>();
    rep->report = gcs::analyze(model->desc, p, t);
    gcs::check_report(rep->report);
    for (auto l : rep->report.labels) rep->labels.emplace_back(gcs::to_string(l));
    rep->text = gcs::render_report(model->desc, p, rep->report);
    *out = rep.release();
  });
}

void gcs_report_free(gcs_report* report) { delete report; }
double gcs_report_value(const gcs_report* r) { return r ? r->report.value : 0.0; }
int gcs_report_rank(const gcs_report* r) { return r ? r->report.rank : -1; }
int gcs_report_is_singular(const gcs_report* r) { return r && r->report.singular ? 1 : 0; }
double gcs_report_gauge(const gcs_report* r) { return r ? r->report.gauge : 0.0; }
double gcs_report_oracle_det(const gcs_report* r) { return r ? r->report.oracle_det : 0.0; }
double gcs_report_oracle_delta(const gcs_report* r) { return r ? r->report.oracle_delta() : 0.0; }
size_t gcs_report_factor_count(const gcs_report* r) { return r ? r->report.factors.size() : 0; }

const char* gcs_report_factor_name(const gcs_report* r, size_t i) {
  return r && i < r->report.factors.size() ? r->report.factors[i].name.c_str() : nullptr;
}

double gcs_report_factor_value(const gcs_report* r, size_t i) {
  return r && i < r->report.factors.size() ? r->report.factors[i].value : 0.0;
}

size_t gcs_report_label_count(const gcs_report* r) { return r ? r->labels.size() : 0; }

const char* gcs_report_label(const gcs_report* r, size_t i) {
  return r && i < r->labels.size() ? r->labels[i].c_str() : nullptr;
}

const char* gcs_report_text(const gcs_report* r) { return r ? r->text.c_str() : ""; }

gcs_status gcs_sweep(const gcs_model* model, const char* grid, double tol, unsigned workers,
                     const char* out_path) {
  return guard([&] {
    require(model && grid, "null argument");
    std::optional<double> t;
    if (tol > 0.0) t = tol;
    std::string csv = gcs::sweep_csv(model->desc, gcs::parse_grid(grid), t, workers);
    if (!out_path) {
      t_sweep_text = std::move(csv);
      return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw gcs::Error(gcs::ErrorCode::Io, std::string("cannot write ") + out_path);
    file << csv;
    if (!file) throw gcs::Error(gcs::ErrorCode::Io, std::string("write failed for ") + out_path);
  });
}

const char* gcs_sweep_text(void) { return t_sweep_text.c_str(); }

gcs_status gcs_verify(uint64_t seed, int trials, gcs_verify_result** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    require(trials >= 1, "trials must be at least 1");
    gcs::VerifyOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    auto res = std::make_unique<gcs_verify_result>();
    res->summary = gcs::run_verification(opt);
    res->text = res->summary.render();
    *out = res.release();
  });
}

void gcs_verify_result_free(gcs_verify_result* result) { delete result; }

int gcs_verify_result_passed(const gcs_verify_result* r) { return r && r->summary.passed() ? 1 : 0; }

size_t gcs_verify_result_suite_count(const gcs_verify_result* r) {
  return r ? r->summary.suites.size() : 0;
}

const char* gcs_verify_result_suite_name(const gcs_verify_result* r, size_t i) {
  return r && i < r->summary.suites.size() ? r->summary.suites[i].name.c_str() : nullptr;
}

int gcs_verify_result_suite_passed(const gcs_verify_result* r, size_t i) {
  return r && i < r->summary.suites.size() && r->summary.suites[i].passed ? 1 : 0;
}

double gcs_verify_result_suite_residual(const gcs_verify_result* r, size_t i) {
  return r && i < r->summary.suites.size() ? r->summary.suites[i].max_residual : 0.0;
}

const char* gcs_verify_result_text(const gcs_verify_result* r) { return r ? r->text.c_str() : ""; }

uint64_t gcs_default_seed(void) { return gcs::kDefaultVerifySeed; }

}  // extern "C"
