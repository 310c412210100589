#include "gcsing/verify.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "gcsing/errors.hpp"
#include "gcsing/manipulators.hpp"
#include "gcsing/samples.hpp"

namespace gcs {

namespace {

// Independent streams per suite so adding trials to one leaves the others unchanged.
Rng suite_rng(const VerifyOptions& opt, std::uint64_t salt) {
  return Rng(opt.seed * 0x9E3779B97F4A7C15ULL + salt);
}

struct Tracker {
  SuiteResult result;

  Tracker(std::string name, double threshold) {
    result.name = std::move(name);
    result.threshold = threshold;
  }
  void residual(double r) {
    ++result.checks;
    result.max_residual = std::max(result.max_residual, r);
    if (!(r <= result.threshold)) result.passed = false;
  }
  void require(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (result.passed || result.detail.find(what) == std::string::npos) {
      if (!result.detail.empty()) result.detail += "; ";
      result.detail += what;
    }
    result.passed = false;
  }
  void note(const std::string& text) {
    if (!result.detail.empty()) result.detail += "; ";
    result.detail += text;
  }
};

double rel(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double hadamard(const Mat6& m) {
  double p = 1.0;
  for (int i = 0; i < 6; ++i) p *= m.row(i).norm();
  return p;
}

template <class F>
void guarded(Tracker& t, F&& body) {
  try {
    body();
  } catch (const std::exception& err) {
    t.fail(std::string("exception: ") + err.what());
  }
}

}  // namespace

bool VerifySummary::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed; });
}

std::string VerifySummary::render() const {
  std::ostringstream out;
  out << "seed: " << seed << '\n' << "trials: " << trials << '\n';
  for (const auto& s : suites) {
    char line[256];
    std::snprintf(line, sizeof line, "%s %-24s max_residual=%.3e threshold=%.1e checks=%d",
                  s.passed ? "PASS" : "FAIL", s.name.c_str(), s.max_residual, s.threshold,
                  s.checks);
    out << line;
    if (!s.detail.empty()) out << "  [" << s.detail << ']';
    out << '\n';
  }
  out << (passed() ? "ALL SUITES PASSED" : "VERIFICATION FAILED") << '\n';
  return out.str();
}

SuiteResult verify_bracket_relations(const VerifyOptions& opt) {
  Tracker t("bracket_relations", 1e-9);
  Rng rng = suite_rng(opt, 1);
  guarded(t, [&] {
    for (int trial = 0; trial < opt.trials; ++trial) {
      std::array<HomogeneousPoint, 4> e{random_point(rng), random_point(rng), random_point(rng),
                                        random_point(rng)};
      std::array<HomogeneousPoint, 4> f{random_point(rng), random_point(rng), random_point(rng),
                                        random_point(rng)};
      auto br = [](const std::array<HomogeneousPoint, 4>& p) { return bracket4(p[0], p[1], p[2], p[3]); };
      const double be = br(e);

      const int i = static_cast<int>(rng.next() % 4);
      const int j = (i + 1 + static_cast<int>(rng.next() % 3)) % 4;
      auto swapped = e;
      std::swap(swapped[i], swapped[j]);
      t.require(br(swapped) == -be, "antisymmetry not exact");

      auto repeated = e;
      repeated[j] = repeated[i];
      t.require(br(repeated) == 0.0, "repeated point does not annihilate exactly");

      const Vec4 dep = rng.uniform() * e[0].coords() + rng.uniform() * e[1].coords() +
                       rng.uniform() * e[2].coords();
      if (!dep.isZero(0.0)) {
        auto dependent = e;
        dependent[3] = HomogeneousPoint(dep);
        const double scale = e[0].norm() * e[1].norm() * e[2].norm() * dependent[3].norm();
        t.require(std::abs(br(dependent)) < 1e-10 * scale, "dependent points give nonzero bracket");
      }

      // [e1..e4][f1..f4] = sum_j [f_j e2 e3 e4][f1 .. e1 (at j) .. f4]
      const double lhs = be * br(f);
      double rhs = 0.0;
      double largest = std::abs(lhs);
      for (int k = 0; k < 4; ++k) {
        auto left = e;
        left[0] = f[k];
        auto right = f;
        right[k] = e[0];
        const double term = br(left) * br(right);
        rhs += term;
        largest = std::max(largest, std::abs(term));
      }
      t.residual(largest == 0.0 ? 0.0 : std::abs(lhs - rhs) / largest);
    }
  });
  return t.result;
}

SuiteResult verify_superbracket_identity(const VerifyOptions& opt) {
  Tracker t("superbracket_identity", 1e-9);
  Rng rng = suite_rng(opt, 2);
  guarded(t, [&] {
    int excluded = 0;
    for (int trial = 0; trial < opt.trials; ++trial) {
      const SuperbracketInput in = random_superbracket_input(rng);
      const Mat6 m = plucker_matrix(in);
      const double det = m.partialPivLu().determinant();
      if (std::abs(det) < 1e-12 * hadamard(m)) {
        ++excluded;
        continue;
      }
      const double ratio = superbracket_expand(in, opt.monomials) / det;
      t.residual(std::abs(ratio - kExpansionConstant));
    }
    t.require(opt.monomials.size() == 24, "expansion does not have 24 monomials");
    t.note("constant " + sci(kExpansionConstant) + ", excluded " + std::to_string(excluded));
  });
  return t.result;
}

constexpr double kReducedFormConstant = -1.0;

SuiteResult verify_upu3_factorization(const VerifyOptions& opt) {
  Tracker t("upu3_factorization", 1e-10);
  Rng rng = suite_rng(opt, 3);
  guarded(t, [&] {
    for (int trial = 0; trial < opt.trials; ++trial) {
      const UPU3State st = random_upu3_state(rng);
      const SingularityReport rep = upu3_singularity(st);
      t.residual(rel(rep.oracle_det, rep.value));
      t.require(rep.consistent(), "rank and factor verdicts disagree on a random state");

      // Reduced bracket form with lines at infinity gh, gi, hi. Under the
      // expansion's sign convention the product comes out negated.
      const HomogeneousPoint g = HomogeneousPoint::at_infinity(rng.unit3());
      const HomogeneousPoint h = HomogeneousPoint::at_infinity(rng.unit3());
      const HomogeneousPoint i = HomogeneousPoint::at_infinity(rng.unit3());
      const auto fa = HomogeneousPoint::finite(st.r[0]), fb = HomogeneousPoint::at_infinity(st.s[0]);
      const auto fc = HomogeneousPoint::finite(st.r[1]), fd = HomogeneousPoint::at_infinity(st.s[1]);
      const auto fe = HomogeneousPoint::finite(st.r[2]), ff = HomogeneousPoint::at_infinity(st.s[2]);
      const SuperbracketInput in{LineSpan{fa, fb}, LineSpan{fc, fd}, LineSpan{fe, ff},
                                 LineSpan{g, h},   LineSpan{g, i},   LineSpan{h, i}};
      const double reduced = bracket4(fa, fb, fd, ff) * bracket4(fc, g, h, i) * bracket4(fe, g, h, i);
      t.residual(rel(superbracket_expand(in), kReducedFormConstant * reduced));
    }

    const CaseLabel cases[] = {CaseLabel::ForcesCoplanar,     CaseLabel::ForcesTwoParallel,
                               CaseLabel::ForcesAllParallel,  CaseLabel::MomentsCoplanar,
                               CaseLabel::MomentsTwoParallel, CaseLabel::MomentsAllParallel,
                               CaseLabel::MomentDegenerate};
    const int case_trials = std::max(1, std::min(opt.trials, 100));
    for (int trial = 0; trial < case_trials; ++trial) {
      for (CaseLabel c : cases) {
        const UPU3State st = make_upu3_case(rng, c);
        const auto labels = upu3_classify(st);
        t.require(labels == expected_upu3_labels(c),
                  std::string("wrong labels for ") + std::string(to_string(c)));
        if (c == CaseLabel::MomentDegenerate) {
          bool threw = false;
          try {
            upu3_singularity(st);
          } catch (const Error& err) {
            threw = err.code() == ErrorCode::DegenerateMoment;
          }
          t.require(threw, "degenerate moment not reported");
          continue;
        }
        const SingularityReport rep = upu3_singularity(st);
        t.require(rep.rank < 6 && rep.singular,
                  std::string("constructed case not singular: ") + std::string(to_string(c)));
      }
    }
  });
  return t.result;
}

SuiteResult verify_verne_chain(const VerifyOptions& opt) {
  Tracker t("verne_chain", 1e-9);
  Rng rng = suite_rng(opt, 4);
  guarded(t, [&] {
    double worst_ratio = 0.0, worst_vector = 0.0, worst_eq = 0.0;
    int sign_mismatch = 0, excluded = 0;
    for (int trial = 0; trial < opt.trials; ++trial) {
      const VerneConfiguration c = random_verne_config(rng);
      const VerneDerivation v = verne_stepwise(c);
      const VerneAux aux = verne_aux(c);
      const Mat6 raw = plucker_matrix(c.rod_spans());
      if (std::abs(v.rod_determinant) < 1e-12 * hadamard(raw)) {
        ++excluded;
        continue;
      }
      t.residual(rel(v.condensed, kExpansionConstant * v.rod_determinant));
      t.residual(rel(v.four_monomial, kFourMonomialConstant * v.rod_determinant));
      t.residual(rel(v.shuffled, v.four_monomial));
      t.residual(rel(v.finite_points, v.shuffled));

      using HP = HomogeneousPoint;
      const HP o = HP::at_infinity(aux.leg2_direction), p = HP::at_infinity(aux.leg3_direction);
      const HP m = HP::at_infinity(aux.rod_ab), n = HP::at_infinity(aux.rod_cd);
      const HP F = HP::finite(c.f), E = HP::finite(c.e), Q = HP::finite(aux.q);
      const double e1 = rel(bracket4(o, n, HP::finite(c.c), p), bracket4(F, E, Q, HP::finite(aux.r)));
      const double e2 = rel(bracket4(o, m, HP::finite(c.a), p), bracket4(F, E, Q, HP::finite(aux.s)));
      worst_eq = std::max({worst_eq, e1, e2});
      t.residual(e1);
      t.residual(e2);

      const double vec = rel(v.meet_form, v.vector_form);
      worst_vector = std::max(worst_vector, vec);
      if (!(vec <= 1e-10)) t.fail("meet form and vector form differ by " + sci(vec));

      const double ratio = v.meet_form / v.rod_determinant;
      worst_ratio = std::max(worst_ratio, std::abs(ratio - kVerneConditionConstant));
      t.residual(std::abs(ratio - kVerneConditionConstant));

      const SingularityReport rep = verne_singularity(c);
      const double assembled = assemble(verne_wrenches(c)).matrix.partialPivLu().determinant();
      const bool same_sign = (rep.value > 0) == (assembled > 0);
      if (!same_sign) ++sign_mismatch;
      t.require(same_sign, "sign of condition differs from assembled determinant");
      t.require(rep.consistent(), "zero set of condition differs from rank");
    }
    t.note("ratio const " + sci(kVerneConditionConstant) + " max dev " + sci(worst_ratio) +
           ", vector-form dev " + sci(worst_vector) + ", aux-bracket dev " + sci(worst_eq) +
           ", sign mismatches " + std::to_string(sign_mismatch) + ", excluded " +
           std::to_string(excluded));
  });
  return t.result;
}

SuiteResult verify_verne_cases(const VerifyOptions& opt) {
  Tracker t("verne_cases", 0.0);
  Rng rng = suite_rng(opt, 5);
  guarded(t, [&] {
    const CaseLabel cases[] = {CaseLabel::CaseI,  CaseLabel::CaseII, CaseLabel::CaseIII,
                               CaseLabel::CaseIV, CaseLabel::CaseV,  CaseLabel::CaseVI};
    const int case_trials = std::max(1, std::min(opt.trials, 100));
    auto sound = [&](const SingularityReport& rep) {
      t.require(rep.labels.empty() || (rep.rank < 6 && rep.singular), "label emitted at full rank");
    };
    for (int trial = 0; trial < case_trials; ++trial) {
      for (CaseLabel c : cases) {
        const SingularityReport rep = verne_singularity(make_verne_case(rng, c));
        const bool labelled = std::find(rep.labels.begin(), rep.labels.end(), c) != rep.labels.end();
        t.require(labelled && rep.rank < 6,
                  std::string("constructed ") + std::string(to_string(c)) + " not detected");
        if (c == CaseLabel::CaseVI) t.require(rep.labels.size() == 1, "CASE_VI not residual");
        sound(rep);
      }
      const SingularityReport par = verne_singularity(make_verne_parallel_legs(rng));
      t.require(par.rank < 6 && par.labels.size() >= 1 && par.labels.front() == CaseLabel::CaseI,
                "parallel leg planes not detected as CASE_I");
      sound(par);

      const SingularityReport gen = verne_singularity(random_verne_config(rng));
      t.require(gen.rank == 6 && gen.labels.empty(), "generic configuration reported singular");
    }
  });
  return t.result;
}

SuiteResult verify_delta_reduction(const VerifyOptions& opt) {
  Tracker t("delta_reduction", 1e-9);
  Rng rng = suite_rng(opt, 6);
  guarded(t, [&] {
    for (int trial = 0; trial < opt.trials; ++trial) {
      const VerneConfiguration c = random_delta_config(rng);
      const double full = verne_singularity(c).value;
      const double reduced = delta_singularity(c).value;
      t.residual(rel(reduced, full));
    }
  });
  return t.result;
}

VerifySummary run_verification(const VerifyOptions& opt) {
  VerifySummary summary;
  summary.seed = opt.seed;
  summary.trials = opt.trials;
  if (opt.trials < 1) {
    SuiteResult bad;
    bad.name = "options";
    bad.passed = false;
    bad.detail = "trials must be at least 1";
    summary.suites.push_back(bad);
    return summary;
  }
  summary.suites.push_back(verify_bracket_relations(opt));
  summary.suites.push_back(verify_superbracket_identity(opt));
  summary.suites.push_back(verify_upu3_factorization(opt));
  summary.suites.push_back(verify_verne_chain(opt));
  summary.suites.push_back(verify_verne_cases(opt));
  summary.suites.push_back(verify_delta_reduction(opt));
  return summary;
}

}  // namespace gcs
