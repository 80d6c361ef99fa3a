#include "sforge/majorana.hpp"

#include <cmath>
#include <numbers>

namespace sforge {

namespace {

constexpr std::size_t to_index(Helicity h) { return h == Helicity::Up ? 0 : 1; }

Vec2 rest_unit(Helicity eta) { return eta == Helicity::Up ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0}; }

ConjClass other(ConjClass c) { return c == ConjClass::S ? ConjClass::A : ConjClass::S; }
Family other(Family f) { return f == Family::Lambda ? Family::Rho : Family::Lambda; }

double class_sign(ConjClass c) { return c == ConjClass::S ? 1.0 : -1.0; }

// Tabulated closed forms, without the 1/(2 sqrt(E+m)) prefactor.
Vec4 tabulated(const FourMomentum& p, const MajoranaLabel& l) {
  const double m = p.mass();
  const Complex pr = p.p_r();
  const Complex pl = p.p_l();
  const double ppm = p.p_plus() + m;
  const double pmm = p.p_minus() + m;
  const bool up = l.eta == Helicity::Up;
  if (l.family == Family::Lambda) {
    if (l.cls == ConjClass::S) {
      return up ? Vec4{kI * pl, kI * pmm, pmm, -pr} : Vec4{-kI * ppm, -kI * pr, -pl, ppm};
    }
    return up ? Vec4{-kI * pl, -kI * pmm, pmm, -pr} : Vec4{kI * ppm, kI * pr, -pl, ppm};
  }
  if (l.cls == ConjClass::S) {
    return up ? Vec4{ppm, pr, kI * pl, -kI * ppm} : Vec4{pl, pmm, kI * pmm, -kI * pr};
  }
  return up ? Vec4{ppm, pr, -kI * pl, kI * ppm} : Vec4{pl, pmm, -kI * pmm, kI * pr};
}

double spinor_scale(const FourMomentum& p) { return std::sqrt(p.energy()); }

}  // namespace

std::size_t majorana_index(const MajoranaLabel& l) {
  return (l.family == Family::Lambda ? 0 : 4) + (l.cls == ConjClass::S ? 0 : 2) + to_index(l.eta);
}

std::string label_name(const MajoranaLabel& l) {
  std::string s = l.family == Family::Lambda ? "lambda" : "rho";
  s += l.cls == ConjClass::S ? "^S" : "^A";
  s += l.eta == Helicity::Up ? "_up" : "_down";
  return s;
}

Mat4 charge_conjugation_matrix(double theta) {
  Mat4 m;
  m(0, 3) = -kI;
  m(1, 2) = kI;
  m(2, 1) = kI;
  m(3, 0) = -kI;
  return std::polar(1.0, theta) * m;
}

Vec4 charge_conjugate(const Vec4& v, double theta) { return charge_conjugation_matrix(theta) * v.conj(); }

Vec2 boosted_left(const FourMomentum& p, const Vec2& chi) {
  const double ep = p.energy() + p.mass();
  const Mat2 op = Mat2::identity() * ep - sigma_dot(p.momentum());
  return (1.0 / (2.0 * std::sqrt(ep))) * (op * chi);
}

Vec2 boosted_right(const FourMomentum& p, const Vec2& chi) {
  const double ep = p.energy() + p.mass();
  const Mat2 op = Mat2::identity() * ep + sigma_dot(p.momentum());
  return (1.0 / (2.0 * std::sqrt(ep))) * (op * chi);
}

Vec4 lambda_from_left(ConjClass cls, const Vec2& phi_l) {
  const Vec2 top = (class_sign(cls) * kI) * (wigner_theta() * phi_l.conj());
  return stack(top, phi_l);
}

Vec4 rho_from_right(ConjClass cls, const Vec2& phi_r) {
  const Vec2 bottom = (-class_sign(cls) * kI) * (wigner_theta() * phi_r.conj());
  return stack(phi_r, bottom);
}

MajoranaSpinor majorana_spinor(const FourMomentum& p, const MajoranaLabel& label, Route route) {
  Vec4 c;
  if (route == Route::ClosedForm) {
    c = (1.0 / (2.0 * std::sqrt(p.energy() + p.mass()))) * tabulated(p, label);
  } else {
    if (p.mass() == 0.0) throw Error(ErrorCode::Domain, "boost route needs m > 0");
    const Vec2 phi0 = std::sqrt(p.mass() / 2.0) * rest_unit(label.eta);
    c = label.family == Family::Lambda ? lambda_from_left(label.cls, lambda_L(p) * phi0)
                                       : rho_from_right(label.cls, lambda_R(p) * phi0);
  }
  return MajoranaSpinor{c, label.family, label.cls, label.eta, p, GammaBasis::Chiral};
}

MajoranaSpinor lambda_spinor(const FourMomentum& p, ConjClass cls, Helicity eta, Route route) {
  return majorana_spinor(p, {Family::Lambda, cls, eta}, route);
}

MajoranaSpinor rho_spinor(const FourMomentum& p, ConjClass cls, Helicity eta, Route route) {
  return majorana_spinor(p, {Family::Rho, cls, eta}, route);
}

std::array<MajoranaSpinor, 8> majorana_set(const FourMomentum& p, Route route) {
  auto make = [&](std::size_t i) { return majorana_spinor(p, kMajoranaOrder[i], route); };
  return {make(0), make(1), make(2), make(3), make(4), make(5), make(6), make(7)};
}

MajoranaSpinor lambda_from_rest(const FourMomentum& p, ConjClass cls, Helicity eta_label, const Vec2& chi) {
  return MajoranaSpinor{lambda_from_left(cls, boosted_left(p, chi)), Family::Lambda, cls, eta_label, p,
                        GammaBasis::Chiral};
}

double selfconj_residual(const MajoranaSpinor& s, double theta) {
  return (charge_conjugate(s.components, theta) - class_sign(s.cls) * s.components).norm();
}

BilinearTable biorthonormal_table(const FourMomentum& p) {
  const auto set = majorana_set(p);
  BilinearTable t{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) t[i][j] = dirac_bilinear(set[i].components, set[j].components);
  return t;
}

namespace {

// rho_label = coefficient * lambda_partner, from the rho<->lambda relations.
struct Relation {
  MajoranaLabel rho;
  Complex coefficient;
  MajoranaLabel lambda;
};

const std::array<Relation, 4> kRelations{{
    {{Family::Rho, ConjClass::S, Helicity::Up}, -kI, {Family::Lambda, ConjClass::A, Helicity::Down}},
    {{Family::Rho, ConjClass::S, Helicity::Down}, kI, {Family::Lambda, ConjClass::A, Helicity::Up}},
    {{Family::Rho, ConjClass::A, Helicity::Up}, kI, {Family::Lambda, ConjClass::S, Helicity::Down}},
    {{Family::Rho, ConjClass::A, Helicity::Down}, -kI, {Family::Lambda, ConjClass::S, Helicity::Up}},
}};

const Relation& relation_for(const MajoranaLabel& rho) {
  for (const auto& r : kRelations)
    if (r.rho == rho) return r;
  throw Error(ErrorCode::InvalidArgument, "no relation for " + label_name(rho));
}

}  // namespace

bool is_tabulated_entry(std::size_t i, std::size_t j) {
  // Within one family and one class, opposite eta.
  return i / 2 == j / 2 && i != j;
}

BilinearTable expected_biorthonormal_table(double m) {
  BilinearTable t{};
  // (lambda S, lambda A, rho S, rho A) x (up-down, down-up)
  const Complex up_down[4] = {-kI * m, kI * m, kI * m, -kI * m};
  for (std::size_t block = 0; block < 4; ++block) {
    t[2 * block][2 * block + 1] = up_down[block];
    t[2 * block + 1][2 * block] = -up_down[block];
  }
  // lambdabar_i rho_j = c_j lambdabar_i lambda_k; rhobar_i lambda_j = conj(c_i) lambdabar_k lambda_j.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 4; j < 8; ++j) {
      const Relation& r = relation_for(kMajoranaOrder[j]);
      t[i][j] = r.coefficient * t[i][majorana_index(r.lambda)];
    }
  }
  for (std::size_t i = 4; i < 8; ++i) {
    const Relation& r = relation_for(kMajoranaOrder[i]);
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = std::conj(r.coefficient) * t[majorana_index(r.lambda)][j];
  }
  return t;
}

VerificationReport parity_map_check(const FourMomentum& p, double tol) {
  VerificationReport report("parity-maps");
  const auto here = majorana_set(p);
  const auto there = majorana_set(p.reversed());
  const double threshold = tol * spinor_scale(p);
  for (std::size_t i = 0; i < 8; ++i) {
    const MajoranaLabel src = kMajoranaOrder[i];
    // P psi(p) = g0 psi(-p)
    const Vec4 image = gamma(0) * there[i].components;
    MajoranaLabel best{other(src.family), other(src.cls), src.eta};
    double best_res = (image - here[majorana_index(best)].components).norm();
    const MajoranaLabel alt{other(src.family), other(src.cls), flip(src.eta)};
    const double alt_res = (image - here[majorana_index(alt)].components).norm();
    if (alt_res < best_res) {
      best = alt;
      best_res = alt_res;
    }
    report.record("P " + label_name(src) + " -> " + label_name(best),
                  src.family == Family::Lambda ? "P lambda^{S,A} = rho^{A,S}" : "P rho^{S,A} = lambda^{A,S}",
                  best_res, threshold);
    report.record("P " + label_name(src) + " not an eigenstate",
                  "min_c |P psi - c psi| / |P psi| > 0.1", projection_residual(image, here[i].components), 0.1,
                  Bound::AtLeast);
  }
  if (p.mass() > 0.0) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      const std::string tag = s == Spin::Up ? "+1/2" : "-1/2";
      const auto u = u_spinor(p, s, GammaBasis::Chiral, Normalization::MassDim);
      const auto v = v_spinor(p, s, GammaBasis::Chiral, Normalization::MassDim);
      const auto pu = parity_apply(u_spinor(p.reversed(), s, GammaBasis::Chiral, Normalization::MassDim));
      const auto pv = parity_apply(v_spinor(p.reversed(), s, GammaBasis::Chiral, Normalization::MassDim));
      report.record("P u_" + tag + " = +u_" + tag, "P u = +u", (pu.components - u.components).norm(), threshold);
      report.record("P v_" + tag + " = -v_" + tag, "P v = -v", (pv.components + v.components).norm(), threshold);
    }
  }
  return report;
}

VerificationReport rho_lambda_relation_check(const FourMomentum& p, double tol) {
  VerificationReport report("rho-lambda");
  const double threshold = tol * spinor_scale(p);
  const auto set = majorana_set(p);
  for (const auto& r : kRelations) {
    const Vec4 lhs = set[majorana_index(r.rho)].components;
    const Vec4 rhs = r.coefficient * set[majorana_index(r.lambda)].components;
    const std::string coeff = r.coefficient.imag() > 0 ? "+i " : "-i ";
    report.record(label_name(r.rho) + " = " + coeff + label_name(r.lambda), "rho <-> lambda relation",
                  (lhs - rhs).norm(), threshold);
  }
  return report;
}

Mat4 connection_matrix() {
  return 0.5 * Mat4{1.0, kI, -1.0, kI,    //
                    -kI, 1.0, -kI, -1.0,  //
                    1.0, -kI, -1.0, -kI,  //
                    kI, 1.0, kI, -1.0};
}

VerificationReport dirac_to_majorana(const FourMomentum& p, double tol) {
  if (p.mass() == 0.0) throw Error(ErrorCode::Domain, "Dirac-Majorana connection needs m > 0");
  VerificationReport report("connect");
  const Mat4 k = connection_matrix();
  report.record("coefficient matrix unitary", "K K† = 1", unitarity_residual(k), std::min(tol, 1e-14));

  const Mat4 g5 = gamma5();
  std::array<Vec4, 4> dirac;
  dirac[0] = u_spinor(p, Spin::Up, GammaBasis::Chiral, Normalization::MassDim).components;
  dirac[1] = u_spinor(p, Spin::Down, GammaBasis::Chiral, Normalization::MassDim).components;
  dirac[2] = g5 * dirac[0];
  dirac[3] = g5 * dirac[1];

  const double threshold = tol * spinor_scale(p);
  for (std::size_t row = 0; row < 4; ++row) {
    Vec4 combo;
    for (std::size_t col = 0; col < 4; ++col) combo += k(row, col) * dirac[col];
    const MajoranaLabel target = kMajoranaOrder[row];
    const Vec4 lam = majorana_spinor(p, target).components;
    report.record("row " + std::to_string(row + 1) + " -> " + label_name(target),
                  "(lambda) = K (u_+, u_-, v_+, v_-)", (combo - lam).norm(), threshold);
  }
  return report;
}

MajoranaSpinor gauge_transform(const MajoranaSpinor& s, double alpha) {
  const double sign = s.family == Family::Lambda ? -1.0 : 1.0;
  const Mat4 op = std::cos(alpha) * Mat4::identity() + (sign * std::sin(alpha) * kI) * gamma5();
  MajoranaSpinor r = s;
  r.components = op * s.components;
  return r;
}

VerificationReport gauge_check(const FourMomentum& p, double alpha, double tol) {
  VerificationReport report("gauge");
  const auto set = majorana_set(p);
  std::array<Vec4, 8> moved;
  const double spin_thr = tol * spinor_scale(p);
  for (std::size_t i = 0; i < 8; ++i) {
    const MajoranaSpinor t = gauge_transform(set[i], alpha);
    moved[i] = t.components;
    report.record(label_name(set[i].label()) + " keeps its class", "C psi' = ±psi'", selfconj_residual(t), spin_thr);
  }
  const double bil_thr = tol * std::max(p.mass(), 1.0) * std::max(p.energy() / std::max(p.mass(), 1e-300), 1.0);
  const Mat4 g5 = gamma5();
  // (cos 2a - i g5 sin 2a) for lambdabar' lambda'; rho gets the conjugate rotation.
  const Mat4 twice_l = std::cos(2 * alpha) * Mat4::identity() - (std::sin(2 * alpha) * kI) * g5;
  const Mat4 twice_r = std::cos(2 * alpha) * Mat4::identity() + (std::sin(2 * alpha) * kI) * g5;
  double cross = 0.0;
  double diag = 0.0;
  double rule = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Complex after = dirac_bilinear(moved[i], moved[j]);
      const bool i_lambda = i < 4;
      const bool j_lambda = j < 4;
      if (i == j) diag = std::max(diag, std::abs(after));
      if (i_lambda != j_lambda) {
        cross = std::max(cross, std::abs(after - dirac_bilinear(set[i].components, set[j].components)));
      } else {
        const Mat4& rot = i_lambda ? twice_l : twice_r;
        rule = std::max(rule, std::abs(after - dirac_bilinear(set[i].components, rot * set[j].components)));
      }
    }
  }
  report.record("lambda-rho bilinears invariant", "lambdabar' rho' = lambdabar rho", cross, bil_thr);
  report.record("diagonal bilinears stay zero", "psibar' psi' = 0", diag, bil_thr);
  report.record("within-family rule", "lambdabar' = lambdabar (cos a - i g5 sin a)", rule, bil_thr);
  return report;
}

Mat4 xi_block_matrix(XiVariant which, double phi) {
  const Mat2 xi = xi_matrix(phi);
  const Mat2 zero{};
  switch (which) {
    case XiVariant::I:
      return blocks(xi, zero, zero, xi);
    case XiVariant::II:
      return blocks(kI * xi, zero, zero, -kI * xi);
    case XiVariant::III:
      return blocks(zero, kI * xi, kI * xi, zero);
    case XiVariant::IV:
      return blocks(zero, xi, -xi, zero);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Xi variant");
}

MajoranaSpinor xi_transform(const MajoranaSpinor& lambda_s, XiVariant which) {
  if (lambda_s.family != Family::Lambda || lambda_s.cls != ConjClass::S) {
    throw Error(ErrorCode::InvalidArgument, "Xi transforms act on lambda^S spinors");
  }
  MajoranaSpinor r = lambda_s;
  r.components = xi_block_matrix(which, lambda_s.momentum.azimuth()) * lambda_s.components;
  return r;
}

Vec4 xi_identification(XiVariant which, const Vec4& lambda_s, const Vec4& lambda_a) {
  switch (which) {
    case XiVariant::I:
      return lambda_a.conj();
    case XiVariant::II:
      return -kI * lambda_s.conj();
    case XiVariant::III:
      return kI * (gamma(0) * lambda_a.conj());
    case XiVariant::IV:
      return gamma(0) * lambda_s.conj();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Xi variant");
}

namespace {

const char* xi_name(XiVariant v) {
  switch (v) {
    case XiVariant::I:
      return "I";
    case XiVariant::II:
      return "II";
    case XiVariant::III:
      return "III";
    case XiVariant::IV:
      return "IV";
  }
  return "?";
}

const char* xi_anchor(XiVariant v) {
  switch (v) {
    case XiVariant::I:
      return "diag(Xi,Xi) lambda_S = lambda_A*";
    case XiVariant::II:
      return "diag(iXi,-iXi) lambda_S = -i lambda_S*";
    case XiVariant::III:
      return "offdiag(iXi,iXi) lambda_S = i g0 lambda_A*";
    case XiVariant::IV:
      return "[[0,Xi],[-Xi,0]] lambda_S = g0 lambda_S*";
  }
  return "?";
}

constexpr std::array<XiVariant, 4> kXiVariants{XiVariant::I, XiVariant::II, XiVariant::III, XiVariant::IV};

}  // namespace

VerificationReport xi_identity_check(const FourMomentum& p, double tol) {
  VerificationReport report("xi");
  const double threshold = tol * spinor_scale(p);
  const double phi = p.azimuth();

  report.record("Xi Lambda_L Xi^-1 = Lambda_L*", "Xi Lambda Xi^-1 = Lambda*",
                p.mass() > 0.0 ? (xi_matrix(phi) * lambda_L(p) * xi_matrix(-phi) - lambda_L(p).conj()).max_abs() : 0.0,
                tol * std::max(1.0, p.energy() / std::max(p.mass(), 1e-300)));

  // Rest spinors in the azimuthal phase gauge e^{-/+ i phi/2}: identities hold at any azimuth.
  for (Helicity eta : {Helicity::Up, Helicity::Down}) {
    const Vec2 chi = eta == Helicity::Up ? Vec2{std::polar(1.0, -phi / 2.0), 0.0}
                                         : Vec2{0.0, std::polar(1.0, phi / 2.0)};
    const auto ls = lambda_from_rest(p, ConjClass::S, eta, chi);
    const auto la = lambda_from_rest(p, ConjClass::A, eta, chi);
    const std::string tag = eta == Helicity::Up ? "up" : "down";
    for (XiVariant v : kXiVariants) {
      const auto moved = xi_transform(ls, v);
      report.record(std::string(xi_name(v)) + " phased " + tag, xi_anchor(v),
                    (moved.components - xi_identification(v, ls.components, la.components)).norm(), threshold);
    }
  }

  // Tabulated spinors: identities at zero azimuth; class preserved at any azimuth.
  const Vec3& q = p.momentum();
  const auto p0 = FourMomentum::on_shell(p.mass(), {std::hypot(q[0], q[1]), 0.0, q[2]});
  for (Helicity eta : {Helicity::Up, Helicity::Down}) {
    const std::string tag = eta == Helicity::Up ? "up" : "down";
    const auto ls0 = lambda_spinor(p0, ConjClass::S, eta);
    const auto la0 = lambda_spinor(p0, ConjClass::A, eta);
    const auto ls = lambda_spinor(p, ConjClass::S, eta);
    for (XiVariant v : kXiVariants) {
      const auto moved0 = xi_transform(ls0, v);
      report.record(std::string(xi_name(v)) + " tabulated " + tag + " azimuth 0", xi_anchor(v),
                    (moved0.components - xi_identification(v, ls0.components, la0.components)).norm(), threshold);
      report.record(std::string(xi_name(v)) + " tabulated " + tag + " stays self-conjugate", "C psi' = +psi'",
                    selfconj_residual(xi_transform(ls, v)), threshold);
    }
  }
  return report;
}

std::vector<double> massless_limit_norm(ConjClass cls, Helicity eta, const Vec3& direction, double pmag,
                                        std::span<const double> masses) {
  const double n = norm3(direction);
  if (n == 0.0) throw Error(ErrorCode::InvalidArgument, "direction must be non-zero");
  if (!(pmag > 0.0)) throw Error(ErrorCode::InvalidArgument, "|p| must be positive");
  const Vec3 unit{direction[0] / n, direction[1] / n, direction[2] / n};
  std::vector<double> out;
  out.reserve(masses.size());
  for (double m : masses) {
    const auto p = FourMomentum::on_shell(m, {pmag * unit[0], pmag * unit[1], pmag * unit[2]});
    const Vec2 chi = xi_helicity(p.polar(), p.azimuth(), eta);
    // sigma.p chi = ±|p| chi exactly, so E + m -/+ |p| is formed without cancellation.
    const double e = p.energy();
    const double factor = eta == Helicity::Up ? m + (m * m) / (e + pmag) : e + m + pmag;
    const Vec2 phi_l = (factor / (2.0 * std::sqrt(e + m))) * chi;
    const Vec4 lam = lambda_from_left(cls, phi_l);
    out.push_back(lam.norm() / std::sqrt(e));
  }
  return out;
}

Complex phased_bilinear(const FourMomentum& p, double theta1, double theta2, double n) {
  const Mat2 boost = lambda_L(p);
  const Vec2 up = boost * (n * std::polar(1.0, theta1) * Vec2{1.0, 0.0});
  const Vec2 down = boost * (n * std::polar(1.0, theta2) * Vec2{0.0, 1.0});
  return dirac_bilinear(lambda_from_left(ConjClass::S, up), lambda_from_left(ConjClass::S, down));
}

}  // namespace sforge
