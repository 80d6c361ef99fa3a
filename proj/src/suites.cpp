#include "sforge/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>

namespace sforge {

namespace {

using SuiteFn = std::function<VerificationReport(const RunConfig&)>;

double spinor_size(const FourMomentum& p) { return std::sqrt(p.energy()); }

std::string spin_tag(Spin s) { return s == Spin::Up ? "+1/2" : "-1/2"; }

std::string basis_tag(GammaBasis b) { return b == GammaBasis::Chiral ? "chiral" : "standard"; }

// The rest frame first, then the seeded sample.
std::vector<FourMomentum> momenta(const RunConfig& c) {
  std::vector<FourMomentum> out{FourMomentum::on_shell(1.0, {0.0, 0.0, 0.0})};
  const auto random = random_momenta(c.seed, c.samples);
  out.insert(out.end(), random.begin(), random.end());
  return out;
}

void corrupt(std::array<MajoranaSpinor, 8>& set) {
  Vec4& v = set[0].components;
  v[0] += 1e-3 * (1.0 + v.norm());
}

std::array<MajoranaSpinor, 8> spinors_for(const FourMomentum& p, const RunConfig& c) {
  auto set = majorana_set(p);
  if (c.fault == Fault::CorruptSpinor) corrupt(set);
  return set;
}

double equation_mass(const FourMomentum& p, const RunConfig& c) {
  return c.fault == Fault::WrongSignMass ? -p.mass() : p.mass();
}

VerificationReport clifford_suite(const RunConfig& c) {
  VerificationReport r("clifford");
  const double thr = std::min(c.tolerance, 1e-14);
  for (GammaBasis b : {GammaBasis::Chiral, GammaBasis::Standard}) {
    const std::string tag = basis_tag(b);
    r.record("{g^mu, g^nu} = 2 g^{mu nu} (" + tag + ")", "{g^mu, g^nu} = 2 g^{mu nu}", clifford_residual(b), thr);
    const Mat4 g5 = gamma5(b);
    double anti = 0.0;
    for (int mu = 0; mu < 4; ++mu) anti = std::max(anti, anticommutator(g5, gamma(mu, b)).max_abs());
    r.record("{g5, g^mu} = 0 (" + tag + ")", "{g5, g^mu} = 0", anti, thr);
    r.record("g5^2 = 1 (" + tag + ")", "g5^2 = 1", (g5 * g5 - Mat4::identity()).max_abs(), thr);
    r.record("g5 hermitian (" + tag + ")", "g5† = g5", hermiticity_residual(g5), thr);
  }
  double change = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    change = std::max(change, (change_basis(gamma(mu, GammaBasis::Chiral), GammaBasis::Chiral, GammaBasis::Standard) -
                               gamma(mu, GammaBasis::Standard))
                                  .max_abs());
  }
  r.record("chiral -> standard maps every g^mu", "g_std = S g_chiral S†", change, thr);
  r.record("basis change unitary", "S S† = 1", unitarity_residual(basis_change_unitary()), thr);
  const std::array<Mat8, 4> big{big_gamma(0), big_gamma(1), big_gamma(2), big_gamma(3)};
  r.record("8x8 Gamma^mu Clifford", "{G^mu, G^nu} = 2 g^{mu nu}", clifford_residual<8>(std::span<const Mat8, 4>(big)),
           thr);
  return r;
}

VerificationReport dirac_norms_suite(const RunConfig& c) {
  VerificationReport r("dirac-norms");
  for (const auto& p : momenta(c)) {
    for (Normalization norm : {Normalization::UnitNorm, Normalization::MassDim}) {
      const double scale = norm == Normalization::UnitNorm ? 1.0 : p.mass();
      const std::string tag = norm == Normalization::UnitNorm ? "" : " (mass dimension)";
      std::array<DiracSpinor, 2> u{u_spinor(p, Spin::Up, c.basis, norm), u_spinor(p, Spin::Down, c.basis, norm)};
      std::array<DiracSpinor, 2> v{v_spinor(p, Spin::Up, c.basis, norm), v_spinor(p, Spin::Down, c.basis, norm)};
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          const double delta = i == j ? scale : 0.0;
          r.record("ubar u = +delta" + tag, "ubar_s u_s' = +delta_ss'",
                   std::abs(dirac_bilinear(u[i], u[j]) - delta), c.tolerance * scale);
          r.record("vbar v = -delta" + tag, "vbar_s v_s' = -delta_ss'",
                   std::abs(dirac_bilinear(v[i], v[j]) + delta), c.tolerance * scale);
          r.record("ubar v = 0" + tag, "ubar v = 0", std::abs(dirac_bilinear(u[i], v[j])), c.tolerance * scale);
          r.record("vbar u = 0" + tag, "vbar u = 0", std::abs(dirac_bilinear(v[i], u[j])), c.tolerance * scale);
        }
      }
    }
  }
  return r;
}

VerificationReport dirac_residuals_suite(const RunConfig& c) {
  VerificationReport r("dirac-residuals");
  for (const auto& p : momenta(c)) {
    const Mat4 gp = slash(p, c.basis);
    const double m = equation_mass(p, c);
    const double thr = c.tolerance * (p.energy() + p.mass());
    for (Spin s : {Spin::Up, Spin::Down}) {
      const std::string t = spin_tag(s);
      const auto uc = u_spinor(p, s, c.basis, Normalization::UnitNorm, Route::ClosedForm);
      const auto ub = u_spinor(p, s, c.basis, Normalization::UnitNorm, Route::Boost);
      const auto vc = v_spinor(p, s, c.basis, Normalization::UnitNorm, Route::ClosedForm);
      const auto vb = v_spinor(p, s, c.basis, Normalization::UnitNorm, Route::Boost);
      r.record("(g.p - m) u_" + t + " closed form", "(g.p - m) u = 0", (gp * uc.components - m * uc.components).norm(),
               thr);
      r.record("(g.p - m) u_" + t + " boost", "(g.p - m) u = 0", (gp * ub.components - m * ub.components).norm(), thr);
      r.record("(g.p + m) v_" + t + " closed form", "(g.p + m) v = 0", (gp * vc.components + m * vc.components).norm(),
               thr);
      r.record("(g.p + m) v_" + t + " boost", "(g.p + m) v = 0", (gp * vb.components + m * vb.components).norm(), thr);
      const double size = std::max(1.0, uc.components.norm());
      r.record("routes agree u_" + t, "closed form = Lambda(p) u(0)", (uc.components - ub.components).norm(),
               c.tolerance * size);
      r.record("routes agree v_" + t, "closed form = Lambda(p) v(0)", (vc.components - vb.components).norm(),
               c.tolerance * size);
    }
  }
  // Massless, mass-dimension normalisation: closed forms only.
  const auto massless = FourMomentum::on_shell(0.0, {0.3, -0.4, 1.2});
  for (Spin s : {Spin::Up, Spin::Down}) {
    const auto u = u_spinor(massless, s, c.basis, Normalization::MassDim);
    r.record("massless g.p u_" + spin_tag(s) + " = 0", "g.p u = 0 at m = 0", dirac_residual(u),
             c.tolerance * massless.energy());
  }
  return r;
}

VerificationReport parity_suite(const RunConfig& c) {
  VerificationReport r("parity");
  for (const auto& p : momenta(c)) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      const auto u = u_spinor(p, s, c.basis);
      const auto v = v_spinor(p, s, c.basis);
      const auto pu = parity_apply(u_spinor(p.reversed(), s, c.basis));
      const auto pv = parity_apply(v_spinor(p.reversed(), s, c.basis));
      const double thr = c.tolerance * std::max(1.0, u.components.norm());
      r.record("P u_" + spin_tag(s) + " = +u", "g0 u(-p) = +u(p)", (pu.components - u.components).norm(), thr);
      r.record("P v_" + spin_tag(s) + " = -v", "g0 v(-p) = -v(p)", (pv.components + v.components).norm(), thr);
    }
  }
  return r;
}

VerificationReport selfconj_suite(const RunConfig& c) {
  VerificationReport r("selfconj");
  auto ps = momenta(c);
  ps.push_back(FourMomentum::on_shell(0.0, {0.5, 0.2, -1.0}));
  for (const auto& p : ps) {
    const auto set = spinors_for(p, c);
    for (const auto& s : set) {
      r.record("C " + label_name(s.label()) + (s.cls == ConjClass::S ? " = +" : " = -") + label_name(s.label()),
               s.cls == ConjClass::S ? "C psi = +psi" : "C psi = -psi", selfconj_residual(s),
               c.tolerance * std::max(spinor_size(p), 1e-300));
    }
    if (p.mass() > 0.0) {
      const auto boosted = majorana_set(p, Route::Boost);
      for (std::size_t i = 0; i < 8; ++i) {
        r.record("routes agree " + label_name(kMajoranaOrder[i]), "closed form = Lambda(p) psi(0)",
                 (boosted[i].components - set[i].components).norm(), c.tolerance * spinor_size(p));
      }
    }
  }
  for (double theta : {0.0, 0.7}) {
    const Mat4 m = charge_conjugation_matrix(theta);
    r.record("C^2 = 1" + std::string(theta == 0.0 ? "" : " (theta = 0.7)"), "C^2 = 1",
             (m * m.conj() - Mat4::identity()).max_abs(), std::min(c.tolerance, 1e-14));
  }
  return r;
}

VerificationReport biorthonormal_suite(const RunConfig& c) {
  VerificationReport r("biorthonormal");
  for (const auto& p : momenta(c)) {
    const auto set = spinors_for(p, c);
    const auto expected = expected_biorthonormal_table(p.mass());
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        const Complex got = dirac_bilinear(set[i].components, set[j].components);
        const bool same_family = (i < 4) == (j < 4);
        const char* anchor = is_tabulated_entry(i, j) ? "tabulated ±im entry"
                             : same_family            ? "all other within-family products vanish"
                                                      : "lambda-rho product fixed by the rho<->lambda relations";
        r.record("bar(" + label_name(kMajoranaOrder[i]) + ") " + label_name(kMajoranaOrder[j]), anchor,
                 std::abs(got - expected[i][j]), c.tolerance * p.mass());
      }
    }
  }
  return r;
}

VerificationReport parity_maps_suite(const RunConfig& c) {
  VerificationReport r("parity-maps");
  for (const auto& p : momenta(c)) r.append(parity_map_check(p, c.tolerance));
  return r;
}

VerificationReport rho_lambda_suite(const RunConfig& c) {
  VerificationReport r("rho-lambda");
  for (const auto& p : momenta(c)) r.append(rho_lambda_relation_check(p, c.tolerance));
  return r;
}

VerificationReport connect_suite(const RunConfig& c) {
  VerificationReport r("connect");
  for (const auto& p : momenta(c)) r.append(dirac_to_majorana(p, c.tolerance));
  return r;
}

VerificationReport gauge_suite(const RunConfig& c) {
  VerificationReport r("gauge");
  for (const auto& p : momenta(c)) {
    for (double alpha : {std::numbers::pi / 6, std::numbers::pi / 3, std::numbers::pi / 2}) {
      r.append(gauge_check(p, alpha, c.tolerance));
    }
  }
  return r;
}

VerificationReport xi_suite(const RunConfig& c) {
  VerificationReport r("xi");
  for (const auto& p : momenta(c)) r.append(xi_identity_check(p, c.tolerance));
  return r;
}

VerificationReport massless_suite(const RunConfig& c) {
  VerificationReport r("massless-limit");
  SampleRng rng(c.seed ^ 0x6d6173736c657373ULL);
  const std::vector<Vec3> directions{{0.0, 0.0, 1.0}, rng.direction()};
  const double pmag = 1.0;
  for (std::size_t d = 0; d < directions.size(); ++d) {
    const std::string where = d == 0 ? " on axis" : " generic direction";
    for (double m : {1e-3, 1e-6}) {
      const std::array<double, 1> masses{m};
      char mass_text[32];
      std::snprintf(mass_text, sizeof mass_text, "%g", m);
      for (ConjClass cls : {ConjClass::S, ConjClass::A}) {
        const std::string name = cls == ConjClass::S ? "lambda^S" : "lambda^A";
        const double up = massless_limit_norm(cls, Helicity::Up, directions[d], pmag, masses)[0];
        const double down = massless_limit_norm(cls, Helicity::Down, directions[d], pmag, masses)[0];
        r.record("|" + name + "_up|/sqrt(E) < 2m/|p| at m=" + mass_text + where, "|lambda_up| / sqrt(E) ~ m / |p|",
                 up, 2.0 * m / pmag);
        r.record("|" + name + "_down|/sqrt(E) -> sqrt2 at m=" + mass_text + where, "|lambda_down| / sqrt(E) -> sqrt2",
                 std::abs(down - std::numbers::sqrt2), 2.0 * m);
      }
    }
    const std::array<double, 1> zero{0.0};
    for (ConjClass cls : {ConjClass::S, ConjClass::A}) {
      const std::string name = cls == ConjClass::S ? "lambda^S" : "lambda^A";
      r.record(name + "_up vanishes at m=0" + where, "lambda_up = 0 at m = 0",
               massless_limit_norm(cls, Helicity::Up, directions[d], pmag, zero)[0], 0.0);
    }
  }
  // The tabulated closed form along +z at m = 0.
  const auto light = FourMomentum::on_shell(0.0, {0.0, 0.0, 2.5});
  r.record("tabulated lambda^S_up = 0 at m=0 along +z", "lambda_up = 0 at m = 0",
           lambda_spinor(light, ConjClass::S, Helicity::Up).components.norm(), 0.0);
  return r;
}

VerificationReport coupled_suite(const RunConfig& c) {
  VerificationReport r("coupled");
  for (const auto& p : momenta(c)) {
    const auto set = spinors_for(p, c);
    for (Helicity eta : {Helicity::Up, Helicity::Down}) {
      const auto res = coupled_residual(set, eta, equation_mass(p, c), c.frequency);
      for (std::size_t k = 0; k < 4; ++k) {
        r.record(res.pairing[k], "coupled lambda/rho equations", res.residuals[k], c.tolerance * (p.energy() + p.mass()));
      }
    }
  }
  return r;
}

VerificationReport eight_component_suite(const RunConfig& c) {
  VerificationReport r("eight-component");
  for (const auto& p : momenta(c)) {
    const auto set = spinors_for(p, c);
    const double m = equation_mass(p, c);
    const double thr = c.tolerance * (p.energy() + p.mass());
    for (ParityClass cls : {ParityClass::Plus, ParityClass::Minus}) {
      const std::string tag = cls == ParityClass::Plus ? "Psi(+)" : "Psi(-)";
      for (Helicity eta : {Helicity::Up, Helicity::Down}) {
        const std::string id = tag + (eta == Helicity::Up ? " up" : " down");
        const auto psi = make_eight_spinor(set, cls, eta);
        const double res = eight_component_residual(psi, m, c.frequency);
        r.record(id + " (G.p - m) Psi = 0", cls == ParityClass::Plus ? "[i G.d - m] Psi(+) = 0" : "[i G.d + m] Psi(-) = 0",
                 res, thr);
        const auto four = coupled_residual(set, eta, m, c.frequency);
        const std::size_t a = cls == ParityClass::Plus ? 0 : 2;
        r.record(id + " equals max of its 4-component parts", "8-component = max(coupled pair)",
                 std::abs(res - std::max(four.residuals[a], four.residuals[a + 1])), 1e-14 * (p.energy() + p.mass()));
        const FrequencyConvention opposite = c.frequency == FrequencyConvention::Positive
                                                 ? FrequencyConvention::Negative
                                                 : FrequencyConvention::Positive;
        const double wrong = eight_component_residual(psi, m, opposite);
        const double block = std::max(set[majorana_index({Family::Rho, ConjClass::A, eta})].components.norm(),
                                      set[majorana_index({Family::Lambda, ConjClass::S, eta})].components.norm());
        r.record(id + " opposite mass sign rejected", "|(G.p + m) Psi| = 2m |block|", wrong / (2.0 * p.mass() * block),
                 0.5, Bound::AtLeast);
      }
    }
  }
  return r;
}

VerificationReport markov_suite(const RunConfig& c) {
  VerificationReport r("markov");
  const Mat4 g5 = gamma5(c.basis);
  for (const auto& p : momenta(c)) {
    const double thr = c.tolerance * (p.energy() + p.mass());
    for (Spin s : {Spin::Up, Spin::Down}) {
      const auto u = u_spinor(p, s, c.basis);
      DiracSpinor partner = u;
      partner.components = g5 * u.components;
      const auto res = markov_pair_residual(u, partner);
      const std::string t = spin_tag(s);
      r.record("(g.p - m) psi1 = 0, psi1 = u_" + t, "(g.p - m) psi1 = 0", res.first, thr);
      r.record("(g.p + m) psi2 = 0, psi2 = g5 u_" + t, "(g.p + m) psi2 = 0", res.second, thr);
      r.record("g.p chi = m eta, " + t, "g.p chi = m eta", res.chi_eq, thr);
      r.record("g.p eta = m chi, " + t, "g.p eta = m chi", res.eta_eq, thr);
      const auto same = markov_pair_residual(u, u);
      r.record("psi2 = psi1 rejected, " + t, "|g.p chi - m eta| >= m |psi|", same.chi_eq / u.components.norm(),
               p.mass(), Bound::AtLeast);
    }
  }
  return r;
}

VerificationReport operator_zoo_suite(const RunConfig& c) {
  VerificationReport r("operator-zoo");
  std::vector<Vec3> dirs{{0.0, 0.0, 1.0}, {1.0, 1.0, 1.0}, {1e-3, 0.0, -1.0}};
  SampleRng rng(c.seed ^ 0x7a6f6fULL);
  for (std::size_t i = 0; i < c.samples; ++i) dirs.push_back(rng.direction());
  for (const auto& d : dirs) {
    r.append(diagonalize_helicity(d, c.tolerance));
    r.append(diagonalize_chiral_helicity(d, c.tolerance));
  }
  return r;
}

VerificationReport gd1_suite(const RunConfig& c) {
  VerificationReport r("gd1");
  r.record("shell(m1, 0) = m1", "p^2 = m1^2 - m2^2", std::abs(generalized_mass_shell(1.7, 0.0) - 1.7), 0.0);
  r.record("shell(m, m) = 0", "massless m1 = ±m2 states", generalized_mass_shell(2.3, 2.3), 0.0);
  r.record("shell(2, 1) = sqrt3", "p^2 = m1^2 - m2^2", std::abs(generalized_mass_shell(2.0, 1.0) - std::sqrt(3.0)),
           c.tolerance);
  SampleRng rng(c.seed ^ 0x676431ULL);
  struct Case {
    double m1, m2;
    Vec3 p;
  };
  std::vector<Case> cases{{2.0, 1.0, {0.3, -0.2, 0.9}}, {1.0, 0.0, {0.0, 0.0, 1.0}}, {1.0, 1.0, {0.0, 0.0, 1.0}}};
  for (std::size_t i = 0; i < c.samples; ++i) {
    const double m1 = rng.uniform(0.1, 10.0);
    const double m2 = i % 3 == 0 ? m1 : rng.uniform(0.0, m1);
    const Vec3 dir = rng.direction();
    const double pmag = rng.uniform(0.05, 10.0 * m1);
    cases.push_back({m1, m2, {pmag * dir[0], pmag * dir[1], pmag * dir[2]}});
  }
  for (const auto& k : cases) {
    const auto p = FourMomentum::on_shell(generalized_mass_shell(k.m1, k.m2), k.p);
    const std::string kind = k.m1 == k.m2 ? "massless" : (k.m2 == 0.0 ? "Dirac" : "massive");
    r.record("kernel residual (" + kind + ")", "(g.p - m1 - m2 g5) psi = 0",
             generalized_mass_residual(k.p, k.m1, k.m2), c.tolerance * std::max(1.0, p.energy() + k.m1 + k.m2));
    if (k.m1 == k.m2) r.append(not_chiral_eigenstate_check(k.p, k.m1, k.m2, c.tolerance));
  }
  return r;
}

VerificationReport barut_suite(const RunConfig& c) {
  VerificationReport r("barut");
  const auto golden = barut_masses(1.0, 1.0, 1.0);
  const double s5 = std::sqrt(5.0);
  r.record("alpha=beta=m=1 gives two masses", "mu = (m/2alpha)(±1 ± sqrt(1 + 4 alpha beta/m))",
           golden.size() == 2 ? 0.0 : 1.0, 0.0);
  if (golden.size() == 2) {
    r.record("alpha=beta=m=1 roots", "mu = (±1 + sqrt5)/2",
             std::max(std::abs(golden[0] - (s5 - 1.0) / 2.0), std::abs(golden[1] - (s5 + 1.0) / 2.0)), c.tolerance);
  }
  SampleRng rng(c.seed ^ 0x6261727574ULL);
  for (std::size_t i = 0; i < c.samples; ++i) {
    const double alpha = rng.uniform(0.01, 2.0);
    const double beta = rng.uniform(0.1, 5.0);
    const double m = rng.uniform(0.1, 10.0);
    for (double mu : barut_masses(alpha, beta, m)) {
      r.record("dispersion residual", "±mu + alpha mu^2/m - beta = 0", barut_residual(mu, alpha, beta, m), c.tolerance);
    }
  }
  const auto single = barut_masses(0.0, 1.3, 1.0);
  r.record("alpha = 0 gives the single mass beta", "alpha -> 0: mu = beta",
           single.size() == 1 ? std::abs(single[0] - 1.3) : 1.0, 0.0);
  for (double alpha : {1e-6, 1e-9, 1e-12}) {
    const double beta = 1.3;
    const double m = 1.0;
    const auto roots = barut_masses(alpha, beta, m);
    double closest = roots.front();
    for (double mu : roots)
      if (std::abs(mu - beta) < std::abs(closest - beta)) closest = mu;
    r.record("finite root -> beta as alpha -> 0", "alpha -> 0: mu = beta", std::abs(closest - beta),
             4.0 * alpha * beta * beta / m + c.tolerance * beta);
  }
  return r;
}

// Rodrigues rotation of v about a unit axis.
Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  const double dot = axis[0] * v[0] + axis[1] * v[1] + axis[2] * v[2];
  const Vec3 cross{axis[1] * v[2] - axis[2] * v[1], axis[2] * v[0] - axis[0] * v[2], axis[0] * v[1] - axis[1] * v[0]};
  Vec3 out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = v[i] * cs + cross[i] * sn + axis[i] * dot * (1.0 - cs);
  return out;
}

VerificationReport noncommutative_suite(const RunConfig& c) {
  VerificationReport r("noncommutative");
  SampleRng rng(c.seed ^ 0x6e63ULL);
  struct Case {
    Vec3 p;
    double m;
    Vec3 theta;
  };
  std::vector<Case> cases{{{0.0, 0.0, 0.0}, 1.0, {0.0, 0.0, 0.1}},
                          {{0.0, 0.0, 0.0}, 1.0, {0.0, 0.0, 0.0}},
                          {{0.2, 0.1, 0.0}, 1.0, {0.0, 0.0, -0.3}}};
  for (std::size_t i = 0; i < c.samples; ++i) {
    const double m = rng.uniform(0.1, 10.0);
    const Vec3 dp = rng.direction();
    const double pmag = rng.uniform(0.0, 10.0 * m);
    const Vec3 dt = rng.direction();
    const double tmag = rng.uniform(0.0, pmag * pmag + m * m);
    cases.push_back({{pmag * dp[0], pmag * dp[1], pmag * dp[2]}, m, {tmag * dt[0], tmag * dt[1], tmag * dt[2]}});
  }
  for (const auto& k : cases) {
    r.append(noncommutative_check(k.p, k.m, k.theta, c.tolerance));
    const auto base = noncommutative_spectrum_numeric(k.p, k.m, k.theta);
    const Vec3 axis = rng.direction();
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const auto turned = noncommutative_spectrum_numeric(k.p, k.m, rotate(k.theta, axis, angle));
    double diff = 0.0;
    for (std::size_t i = 0; i < 4; ++i) diff = std::max(diff, std::abs(base[i] - turned[i]));
    r.record("spectrum invariant under rotations of theta", "E^2 depends on |theta| only", diff,
             c.tolerance * (base[3] + 1.0));
  }
  const auto zero = noncommutative_spectrum({0.3, 0.4, 0.0}, 1.2, {0.0, 0.0, 0.0});
  double undeformed = 0.0;
  for (double e2 : zero) undeformed = std::max(undeformed, std::abs(e2 - (0.25 + 1.44)));
  r.record("theta = 0 gives p^2 + m^2", "E^2 = p^2 + m^2", undeformed, c.tolerance * 2.0);
  return r;
}

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"clifford", clifford_suite},
      {"dirac-norms", dirac_norms_suite},
      {"dirac-residuals", dirac_residuals_suite},
      {"parity", parity_suite},
      {"selfconj", selfconj_suite},
      {"biorthonormal", biorthonormal_suite},
      {"parity-maps", parity_maps_suite},
      {"rho-lambda", rho_lambda_suite},
      {"connect", connect_suite},
      {"gauge", gauge_suite},
      {"xi", xi_suite},
      {"massless-limit", massless_suite},
      {"coupled", coupled_suite},
      {"eight-component", eight_component_suite},
      {"markov", markov_suite},
      {"operator-zoo", operator_zoo_suite},
      {"gd1", gd1_suite},
      {"barut", barut_suite},
      {"noncommutative", noncommutative_suite},
  };
  return suites;
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be a positive finite number");
  }
  if (config.samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(const std::string& name, const RunConfig& config) {
  validate(config);
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    VerificationReport out(name);
    out.append(fn(config));
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_suites(const std::vector<std::string>& names, const RunConfig& config) {
  validate(config);
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") {
      expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
    } else if (is_suite(n)) {
      expanded.push_back(n);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown suite '" + n + "'");
    }
  }
  std::vector<VerificationReport> out;
  out.reserve(expanded.size());
  for (const auto& n : expanded) out.push_back(run_suite(n, config));
  return out;
}

Vec3 SampleRng::direction() {
  const double z = 2.0 * uniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

std::vector<FourMomentum> random_momenta(std::uint64_t seed, std::size_t count) {
  SampleRng rng(seed);
  std::vector<FourMomentum> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double m = rng.uniform(0.1, 10.0);
    const double pmag = rng.uniform(0.0, 10.0 * m);
    const Vec3 d = rng.direction();
    out.push_back(FourMomentum::on_shell(m, {pmag * d[0], pmag * d[1], pmag * d[2]}));
  }
  return out;
}

double ResidualSummary::max() const { return std::max({dirac, coupled, eight}); }

ResidualSummary residual_summary(const FourMomentum& p, GammaBasis basis, FrequencyConvention convention) {
  ResidualSummary s;
  if (p.mass() > 0.0) {
    for (Spin sp : {Spin::Up, Spin::Down}) {
      s.dirac = std::max(s.dirac, dirac_residual(u_spinor(p, sp, basis)));
      s.dirac = std::max(s.dirac, dirac_residual(v_spinor(p, sp, basis)));
    }
  }
  const auto set = majorana_set(p);
  for (Helicity eta : {Helicity::Up, Helicity::Down}) {
    const auto c = coupled_residual(set, eta, p.mass(), convention);
    s.coupled = std::max(s.coupled, *std::max_element(c.residuals.begin(), c.residuals.end()));
    for (ParityClass cls : {ParityClass::Plus, ParityClass::Minus}) {
      s.eight = std::max(s.eight, eight_component_residual(make_eight_spinor(set, cls, eta), p.mass(), convention));
    }
  }
  return s;
}

double biorthonormal_deviation(const FourMomentum& p) {
  if (!(p.mass() > 0.0)) throw Error(ErrorCode::Domain, "relative deviation needs m > 0");
  const auto got = biorthonormal_table(p);
  const auto want = expected_biorthonormal_table(p.mass());
  double worst = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) worst = std::max(worst, std::abs(got[i][j] - want[i][j]));
  return worst / p.mass();
}

}  // namespace sforge
