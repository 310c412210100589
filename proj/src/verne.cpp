#include "gcsing/manipulators.hpp"

#include <Eigen/Geometry>

#include <optional>

#include "gcsing/errors.hpp"

namespace gcs {

namespace {

using HP = HomogeneousPoint;

HP fin(const Vec3& x) { return HP::finite(x); }
HP inf(const Vec3& x) { return HP::at_infinity(x); }

bool parallel(const Vec3& x, const Vec3& y, double tol) {
  return negligible(x.cross(y).norm(), x.norm() * y.norm(), tol);
}

std::string vec_str(const Vec3& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g)", v.x(), v.y(), v.z());
  return buf;
}

void check_rod(const Vec3& p, const Vec3& q, const char* name, double tol) {
  const double len = (q - p).norm();
  if (!(len > tol * (p.norm() + q.norm())) || len == 0.0) {
    throw Error(ErrorCode::ZeroRodLength, std::string("rod ") + name + " has zero length");
  }
}

void check_parallelogram(const Vec3& rod1, const Vec3& rod2, const char* leg, const char* what,
                         double tol) {
  const Vec3 residual = rod1 - rod2;
  if (!(residual.norm() <= tol * (rod1.norm() + rod2.norm()))) {
    throw Error(ErrorCode::ParallelogramViolation, std::string("leg ") + leg + ": " + what +
                                                       " = " + vec_str(residual));
  }
}

// Normals of the planes of legs II and III as produced by plane_from_points.
struct LegPlanes {
  ProjectivePlane leg2;
  ProjectivePlane leg3;
  Vec3 meet_direction() const { return leg2.normal().cross(leg3.normal()); }
};

LegPlanes leg_planes(const VerneConfiguration& c, double tol) {
  return {plane_from_points(fin(c.e), fin(c.f), fin(c.g), tol),
          plane_from_points(fin(c.i), fin(c.j), fin(c.k), tol)};
}

double hadamard_bound(const Mat6& rows) {
  double p = 1.0;
  for (int i = 0; i < 6; ++i) p *= rows.row(i).norm();
  return p;
}

// Report without labels; shared by verne_singularity and verne_classify.
SingularityReport evaluate_verne(const VerneConfiguration& c, double tol) {
  validate(c, tol);
  const SuperbracketInput rods = c.rod_spans();
  const Mat6 raw = plucker_matrix(rods, tol);

  SingularityReport report;
  report.tol = tol;
  report.gauge = tol * hadamard_bound(raw);
  report.oracle_det = superbracket_det(rods, tol);
  report.oracle_constant = kVerneConditionConstant;
  report.rank = numeric_rank(assemble(verne_wrenches(c, tol)), tol);

  const Vec3 ab = c.b - c.a;
  const Vec3 cd = c.d - c.c;
  const Vec3 N = (c.f - c.e).cross(c.j - c.i);
  const double cd_n = cd.dot(N);
  const double ab_n = ab.dot(N);

  std::optional<VerneAux> aux;
  try {
    aux = verne_aux(c, tol);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CoincidentPlanes) throw;
  }

  if (!aux) {
    // Legs II and III share one plane: the meet direction vanishes and with
    // it every term of the vector form.
    const Vec3 tu = leg_planes(c, tol).meet_direction();
    const double t1 = cd_n * tu.dot((c.b - c.e).cross(ab));
    const double t2 = ab_n * tu.dot((c.d - c.e).cross(cd));
    report.value = t1 - t2;
    report.factors = {{"cd.N", cd_n}, {"ab.N", ab_n}, {"|tu|", tu.norm()}, {"vector_form", report.value}};
  } else {
    const HP F = fin(c.f), E = fin(c.e), Q = fin(aux->q);
    const double feqr = bracket4(F, E, Q, fin(aux->r));
    const double feqs = bracket4(F, E, Q, fin(aux->s));
    const double tuba = bracket4(aux->meet_t, aux->meet_u, fin(c.b), fin(c.a));
    const double tudc = bracket4(aux->meet_t, aux->meet_u, fin(c.d), fin(c.c));
    const double bracket_form = feqr * tuba - feqs * tudc;

    double vector_form = 0.0;
    double v1 = 0.0, v2 = 0.0;
    const Vec3 tu = aux->plane_meet.direction;
    if (aux->meet_u.is_finite()) {
      const Vec3 u = aux->meet_u.position();
      v1 = cd_n * tu.dot((c.b - u).cross(ab));
      v2 = ab_n * tu.dot((c.d - u).cross(cd));
      vector_form = v1 - v2;
    }
    const double scale = std::max({std::abs(feqr * tuba), std::abs(feqs * tudc), std::abs(v1),
                                   std::abs(v2)});
    if (!(std::abs(bracket_form - vector_form) <= 1e-10 * scale + report.gauge)) {
      throw Error(ErrorCode::OracleDisagreement,
                  "bracket form and vector form of the condition disagree");
    }
    report.value = bracket_form;
    report.factors = {{"[feqr]", feqr},          {"[tuba]", tuba},        {"[feqs]", feqs},
                      {"[tudc]", tudc},          {"cd.N", cd_n},          {"ab.N", ab_n},
                      {"vector_form", vector_form}};
  }
  report.singular = std::abs(report.value) < report.gauge;
  return report;
}

double mutual_with_rod(const PlueckerLine& meet, const Vec3& p, const Vec3& q, double tol,
                       bool& negligible_out) {
  const PlueckerLine rod = join(fin(p), fin(q), tol);
  const double x = mutual_bracket(meet, rod);
  negligible_out = negligible(x, meet.norm() * rod.norm(), tol);
  return x;
}

}  // namespace

VerneConfiguration VerneConfiguration::from_points(const std::array<Vec3, 12>& p) {
  return {p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8], p[9], p[10], p[11]};
}

VerneConfiguration VerneConfiguration::with_platform_offset(const Vec3& offset) const {
  VerneConfiguration out = *this;
  for (Vec3* pt : {&out.b, &out.d, &out.f, &out.h, &out.j, &out.l}) *pt += offset;
  return out;
}

VerneConfiguration VerneConfiguration::translated(const Vec3& offset) const {
  auto pts = points();
  for (auto& pt : pts) pt += offset;
  return from_points(pts);
}

SuperbracketInput VerneConfiguration::rod_spans() const {
  return {LineSpan{fin(a), fin(b)}, LineSpan{fin(c), fin(d)}, LineSpan{fin(e), fin(f)},
          LineSpan{fin(g), fin(h)}, LineSpan{fin(i), fin(j)}, LineSpan{fin(k), fin(l)}};
}

void validate(const VerneConfiguration& c, double tol) {
  for (const auto& p : c.points()) {
    if (!p.allFinite()) throw Error(ErrorCode::InvariantViolation, "joint center is not finite");
  }
  check_rod(c.a, c.b, "ab", tol);
  check_rod(c.c, c.d, "cd", tol);
  check_rod(c.e, c.f, "ef", tol);
  check_rod(c.g, c.h, "gh", tol);
  check_rod(c.i, c.j, "ij", tol);
  check_rod(c.k, c.l, "kl", tol);
  check_parallelogram(c.f - c.e, c.h - c.g, "II", "(f - e) - (h - g)", tol);
  check_parallelogram(c.j - c.i, c.l - c.k, "III", "(j - i) - (l - k)", tol);
}

WrenchSystem verne_wrenches(const VerneConfiguration& c, double tol) {
  validate(c, tol);
  // one direction per parallelogram leg so both rods carry identical s
  const Vec3 leg2 = 0.5 * ((c.f - c.e) + (c.h - c.g));
  const Vec3 leg3 = 0.5 * ((c.j - c.i) + (c.l - c.k));
  return {force_wrench(c.b - c.a, c.a, "I", tol), force_wrench(c.d - c.c, c.c, "I", tol),
          force_wrench(leg2, c.e, "II", tol),     force_wrench(leg2, c.g, "II", tol),
          force_wrench(leg3, c.i, "III", tol),    force_wrench(leg3, c.k, "III", tol)};
}

VerneAux verne_aux(const VerneConfiguration& c, double tol) {
  validate(c, tol);
  const LegPlanes planes = leg_planes(c, tol);
  const PlueckerLine meet = meet_planes(planes.leg2, planes.leg3, tol);
  const auto [t, u] = spanning_points(meet);
  const Vec3 o = c.f - c.e;
  const Vec3 p = c.j - c.i;
  const Vec3 m = c.b - c.a;
  const Vec3 n = c.d - c.c;
  const Vec3 q = c.e + p;
  return VerneAux{o, p, m, n, q, q + n, q + m, o.cross(p), planes.leg2, planes.leg3, meet, t, u};
}

SingularityReport verne_singularity(const VerneConfiguration& config, double tol) {
  SingularityReport report = evaluate_verne(config, tol);
  report.labels = verne_classify(config, tol);
  return report;
}

std::vector<NamedValue> VerneDerivation::entries() const {
  return {{"condensed", condensed},       {"four_monomial", four_monomial},
          {"shuffled", shuffled},         {"finite_points", finite_points},
          {"meet_form", meet_form},       {"vector_form", vector_form},
          {"rod_determinant", rod_determinant}};
}

VerneDerivation verne_stepwise(const VerneConfiguration& c, double tol) {
  validate(c, tol);
  const VerneAux aux = verne_aux(c, tol);
  const HP A = fin(c.a), B = fin(c.b), C = fin(c.c), D = fin(c.d), E = fin(c.e), F = fin(c.f),
           G = fin(c.g), I = fin(c.i), J = fin(c.j), K = fin(c.k);
  const HP m = inf(aux.rod_ab), n = inf(aux.rod_cd), o = inf(aux.leg2_direction),
           p = inf(aux.leg3_direction);
  auto br = [](const HP& w, const HP& x, const HP& y, const HP& z) { return bracket4(w, x, y, z); };

  VerneDerivation out;
  out.rod_determinant = superbracket_det(c.rod_spans(), tol);
  out.condensed = superbracket_expand(
      {LineSpan{A, m}, LineSpan{C, n}, LineSpan{E, o}, LineSpan{G, o}, LineSpan{I, p}, LineSpan{K, p}});

  const double oncp = br(o, n, C, p);
  const double omap = br(o, m, A, p);
  out.four_monomial = br(o, E, G, m) * oncp * br(A, I, p, K) - br(o, E, G, A) * oncp * br(m, I, p, K) -
                      br(o, E, G, n) * omap * br(C, I, p, K) + br(o, E, G, C) * omap * br(n, I, p, K);
  // Shuffle over {m, a} and {n, c}.
  out.shuffled = oncp * (br(o, E, G, m) * br(A, I, p, K) - br(o, E, G, A) * br(m, I, p, K)) -
                 omap * (br(o, E, G, n) * br(C, I, p, K) - br(o, E, G, C) * br(n, I, p, K));
  // Shuffle over {b, a} and {d, c}, directions replaced by finite points.
  out.finite_points = oncp * (br(F, E, G, B) * br(A, I, J, K) - br(F, E, G, A) * br(B, I, J, K)) -
                      omap * (br(F, E, G, D) * br(C, I, J, K) - br(F, E, G, C) * br(D, I, J, K));

  const HP Q = fin(aux.q);
  out.meet_form = br(F, E, Q, fin(aux.r)) * br(aux.meet_t, aux.meet_u, B, A) -
                  br(F, E, Q, fin(aux.s)) * br(aux.meet_t, aux.meet_u, D, C);
  if (aux.meet_u.is_finite()) {
    const Vec3 tu = aux.plane_meet.direction;
    const Vec3 u = aux.meet_u.position();
    out.vector_form = aux.rod_cd.dot(aux.leg_normal) * tu.dot((c.b - u).cross(aux.rod_ab)) -
                      aux.rod_ab.dot(aux.leg_normal) * tu.dot((c.d - u).cross(aux.rod_cd));
  }
  return out;
}

std::vector<CaseLabel> verne_classify(const VerneConfiguration& c, double tol) {
  const SingularityReport base = evaluate_verne(c, tol);
  if (!base.singular) return {};

  std::vector<CaseLabel> labels;
  const LegPlanes planes = leg_planes(c, tol);
  const Vec3 n2 = planes.leg2.normal();
  const Vec3 n3 = planes.leg3.normal();
  const bool case_i = negligible(n2.cross(n3).norm(), n2.norm() * n3.norm(), tol);
  if (case_i) labels.push_back(CaseLabel::CaseI);

  const Vec3 o = c.f - c.e;
  const Vec3 p = c.j - c.i;
  const Vec3 ab = c.b - c.a;
  const Vec3 cd = c.d - c.c;
  if (parallel(o, p, tol)) labels.push_back(CaseLabel::CaseII);
  if ((parallel(o, cd, tol) && parallel(p, ab, tol)) || (parallel(o, ab, tol) && parallel(p, cd, tol))) {
    labels.push_back(CaseLabel::CaseIII);
  }

  if (!case_i) {
    const PlueckerLine meet = meet_planes(planes.leg2, planes.leg3, tol);
    bool ab_meets = false, cd_meets = false;
    mutual_with_rod(meet, c.a, c.b, tol, ab_meets);
    mutual_with_rod(meet, c.c, c.d, tol, cd_meets);
    if (ab_meets && cd_meets) labels.push_back(CaseLabel::CaseIV);
    const bool cd_flat = parallel(o, cd, tol) || parallel(p, cd, tol);
    const bool ab_flat = parallel(o, ab, tol) || parallel(p, ab, tol);
    if ((cd_flat && cd_meets) || (ab_flat && ab_meets)) labels.push_back(CaseLabel::CaseV);
  }

  if (labels.empty()) labels.push_back(CaseLabel::CaseVI);
  return labels;
}

SingularityReport delta_singularity(const VerneConfiguration& c, double tol) {
  validate(c, tol);
  const Vec3 ab = c.b - c.a;
  const Vec3 cd = c.d - c.c;
  if (!((cd - ab).norm() <= tol * (ab.norm() + cd.norm()))) {
    throw Error(ErrorCode::NotDeltaConfiguration,
                "leg I is not a parallelogram: (d - c) - (b - a) = " + vec_str(cd - ab));
  }
  SingularityReport verne = verne_singularity(c, tol);

  const Vec3 N = (c.f - c.e).cross(c.j - c.i);
  const Vec3 tu = leg_planes(c, tol).meet_direction();
  const double ab_n = ab.dot(N);
  const double tu_db_ab = tu.dot((c.b - c.d).cross(ab));
  const double value = ab_n * tu_db_ab;

  const double scale = std::abs(value) + std::abs(verne.value) + verne.gauge;
  if (!(std::abs(value - verne.value) <= 1e-9 * scale)) {
    throw Error(ErrorCode::OracleDisagreement, "reduced leg-I-parallelogram condition disagrees with the full condition");
  }
  SingularityReport report = verne;
  report.value = value;
  report.factors = {{"ab.N", ab_n}, {"tu.(db x ab)", tu_db_ab}, {"full_condition", verne.value}};
  return report;
}

}  // namespace gcs
