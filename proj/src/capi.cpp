#include "sforge/sforge.h"

#include <exception>
#include <new>
#include <string>

#include "sforge/suites.hpp"

struct sf_report {
  sforge::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

sf_status fail(sf_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

sf_status from_error(const sforge::Error& e) {
  switch (e.code()) {
    case sforge::ErrorCode::InvalidArgument:
      return fail(SF_ERR_INVALID_ARGUMENT, e.what());
    case sforge::ErrorCode::Domain:
      return fail(SF_ERR_DOMAIN, e.what());
    case sforge::ErrorCode::Singular:
      return fail(SF_ERR_SINGULAR, e.what());
  }
  return fail(SF_ERR_INTERNAL, e.what());
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
sf_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return SF_OK;
  } catch (const sforge::Error& e) {
    return from_error(e);
  } catch (const std::bad_alloc&) {
    return fail(SF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SF_ERR_INTERNAL, e.what());
  }
}

sforge::GammaBasis to_basis(sf_basis b) {
  switch (b) {
    case SF_BASIS_CHIRAL:
      return sforge::GammaBasis::Chiral;
    case SF_BASIS_STANDARD:
      return sforge::GammaBasis::Standard;
  }
  throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown basis");
}

sforge::Helicity to_spin(sf_spin s) {
  switch (s) {
    case SF_UP:
      return sforge::Helicity::Up;
    case SF_DOWN:
      return sforge::Helicity::Down;
  }
  throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown spin label");
}

sforge::FrequencyConvention to_frequency(sf_frequency f) {
  switch (f) {
    case SF_FREQUENCY_POSITIVE:
      return sforge::FrequencyConvention::Positive;
    case SF_FREQUENCY_NEGATIVE:
      return sforge::FrequencyConvention::Negative;
  }
  throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown frequency convention");
}

sforge::Fault to_fault(sf_fault f) {
  switch (f) {
    case SF_FAULT_NONE:
      return sforge::Fault::None;
    case SF_FAULT_CORRUPT_SPINOR:
      return sforge::Fault::CorruptSpinor;
    case SF_FAULT_WRONG_SIGN_MASS:
      return sforge::Fault::WrongSignMass;
  }
  throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown fault");
}

sforge::Vec3 to_vec3(const double* p) {
  if (p == nullptr) throw sforge::Error(sforge::ErrorCode::InvalidArgument, "null momentum");
  return {p[0], p[1], p[2]};
}

void write(const sforge::Vec4& v, sf_complex* out) {
  for (std::size_t i = 0; i < 4; ++i) out[i] = {v[i].real(), v[i].imag()};
}

void write_table(const sforge::BilinearTable& t, sf_complex* out) {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) out[i * 8 + j] = {t[i][j].real(), t[i][j].imag()};
}

}  // namespace

extern "C" {

const char* sf_version(void) { return "1.0.0"; }

const char* sf_last_error(void) { return g_last_error.c_str(); }

const char* sf_status_name(sf_status status) {
  switch (status) {
    case SF_OK:
      return "ok";
    case SF_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SF_ERR_DOMAIN:
      return "domain error";
    case SF_ERR_SINGULAR:
      return "singular";
    case SF_ERR_NULL_POINTER:
      return "null pointer";
    case SF_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void sf_run_config_default(sf_run_config* config) {
  if (config == nullptr) return;
  const sforge::RunConfig d;
  config->tolerance = d.tolerance;
  config->basis = SF_BASIS_CHIRAL;
  config->seed = d.seed;
  config->samples = d.samples;
  config->frequency = SF_FREQUENCY_POSITIVE;
  config->fault = SF_FAULT_NONE;
}

sf_status sf_momentum_info_get(double m, const double p[3], sf_momentum_info* out) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    const auto k = sforge::FourMomentum::on_shell(m, to_vec3(p));
    *out = {k.energy(), k.magnitude(), k.p_plus(), k.p_minus()};
  });
}

sf_status sf_dirac_spinor(sf_dirac_kind kind, sf_spin spin, sf_basis basis, sf_normalization norm, sf_route route,
                          double m, const double p[3], sf_complex out[4]) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    const auto k = sforge::FourMomentum::on_shell(m, to_vec3(p));
    if (norm != SF_NORM_UNIT && norm != SF_NORM_MASS) {
      throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown normalization");
    }
    if (route != SF_ROUTE_CLOSED_FORM && route != SF_ROUTE_BOOST) {
      throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown route");
    }
    const auto n = norm == SF_NORM_UNIT ? sforge::Normalization::UnitNorm : sforge::Normalization::MassDim;
    const auto r = route == SF_ROUTE_CLOSED_FORM ? sforge::Route::ClosedForm : sforge::Route::Boost;
    if (kind == SF_KIND_U) {
      write(sforge::u_spinor(k, to_spin(spin), to_basis(basis), n, r).components, out);
    } else if (kind == SF_KIND_V) {
      write(sforge::v_spinor(k, to_spin(spin), to_basis(basis), n, r).components, out);
    } else {
      throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown spinor kind");
    }
  });
}

sf_status sf_majorana_spinor(sf_family family, sf_class cls, sf_spin eta, sf_basis basis, double m, const double p[3],
                             sf_complex out[4]) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    if (family != SF_FAMILY_LAMBDA && family != SF_FAMILY_RHO) {
      throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown family");
    }
    if (cls != SF_CLASS_S && cls != SF_CLASS_A) throw sforge::Error(sforge::ErrorCode::InvalidArgument, "unknown class");
    const auto k = sforge::FourMomentum::on_shell(m, to_vec3(p));
    const sforge::MajoranaLabel label{family == SF_FAMILY_LAMBDA ? sforge::Family::Lambda : sforge::Family::Rho,
                                      cls == SF_CLASS_S ? sforge::ConjClass::S : sforge::ConjClass::A, to_spin(eta)};
    const auto target = to_basis(basis);
    const auto s = sforge::majorana_spinor(k, label);
    write(sforge::change_basis(s.components, sforge::GammaBasis::Chiral, target), out);
  });
}

sf_status sf_biorthonormal_table(double m, const double p[3], sf_complex out[64]) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    write_table(sforge::biorthonormal_table(sforge::FourMomentum::on_shell(m, to_vec3(p))), out);
  });
}

sf_status sf_expected_biorthonormal_table(double m, sf_complex out[64]) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    if (!(m >= 0.0)) throw sforge::Error(sforge::ErrorCode::Domain, "mass must be non-negative");
    write_table(sforge::expected_biorthonormal_table(m), out);
  });
}

sf_status sf_biorthonormal_deviation(double m, const double p[3], double* out) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] { *out = sforge::biorthonormal_deviation(sforge::FourMomentum::on_shell(m, to_vec3(p))); });
}

sf_status sf_residual_summary(double m, const double p[3], sf_basis basis, sf_frequency frequency, double out[4]) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    const auto s = sforge::residual_summary(sforge::FourMomentum::on_shell(m, to_vec3(p)), to_basis(basis),
                                            to_frequency(frequency));
    out[0] = s.dirac;
    out[1] = s.coupled;
    out[2] = s.eight;
    out[3] = s.max();
  });
}

size_t sf_suite_count(void) { return sforge::suite_names().size(); }

const char* sf_suite_name(size_t index) {
  const auto& names = sforge::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

sf_status sf_verify(const char* suite, const sf_run_config* config, sf_report** out) {
  if (suite == nullptr || config == nullptr || out == nullptr) return fail(SF_ERR_NULL_POINTER, "null argument");
  *out = nullptr;
  return guarded([&] {
    sforge::RunConfig c;
    c.tolerance = config->tolerance;
    c.basis = to_basis(config->basis);
    c.seed = config->seed;
    c.samples = config->samples;
    c.frequency = to_frequency(config->frequency);
    c.fault = to_fault(config->fault);
    *out = new sf_report{sforge::run_suite(suite, c)};
  });
}

void sf_report_destroy(sf_report* report) { delete report; }

const char* sf_report_suite(const sf_report* report) {
  return report == nullptr ? nullptr : report->report.suite().c_str();
}

size_t sf_report_check_count(const sf_report* report) {
  return report == nullptr ? 0 : report->report.checks().size();
}

size_t sf_report_passed(const sf_report* report) { return report == nullptr ? 0 : report->report.passed(); }

sf_status sf_report_check(const sf_report* report, size_t index, sf_check* out) {
  if (report == nullptr || out == nullptr) return fail(SF_ERR_NULL_POINTER, "null argument");
  const auto& checks = report->report.checks();
  if (index >= checks.size()) return fail(SF_ERR_INVALID_ARGUMENT, "check index out of range");
  const auto& c = checks[index];
  *out = {c.id.c_str(), c.anchor.c_str(), c.residual, c.threshold, c.bound == sforge::Bound::AtLeast ? 1 : 0,
          c.pass ? 1 : 0};
  g_last_error.clear();
  return SF_OK;
}

sf_status sf_noncommutative_spectrum(const double p[3], double m, const double theta[3], double out[4]) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    if (!(m >= 0.0)) throw sforge::Error(sforge::ErrorCode::Domain, "mass must be non-negative");
    const auto s = sforge::noncommutative_spectrum(to_vec3(p), m, to_vec3(theta));
    for (std::size_t i = 0; i < 4; ++i) out[i] = s[i];
  });
}

sf_status sf_noncommutative_spectrum_numeric(const double p[3], double m, const double theta[3], double out[4]) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    if (!(m >= 0.0)) throw sforge::Error(sforge::ErrorCode::Domain, "mass must be non-negative");
    const auto s = sforge::noncommutative_spectrum_numeric(to_vec3(p), m, to_vec3(theta));
    for (std::size_t i = 0; i < 4; ++i) out[i] = s[i];
  });
}

sf_status sf_barut_masses(double alpha, double beta, double m, double out[2], size_t* count) {
  if (out == nullptr || count == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] {
    const auto roots = sforge::barut_masses(alpha, beta, m);
    *count = roots.size() < 2 ? roots.size() : 2;
    for (std::size_t i = 0; i < *count; ++i) out[i] = roots[i];
  });
}

sf_status sf_barut_residual(double mu, double alpha, double beta, double m, double* out) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] { *out = sforge::barut_residual(mu, alpha, beta, m); });
}

sf_status sf_generalized_mass_shell(double m1, double m2, double* out) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] { *out = sforge::generalized_mass_shell(m1, m2); });
}

sf_status sf_generalized_mass_residual(double m1, double m2, const double p[3], double* out) {
  if (out == nullptr) return fail(SF_ERR_NULL_POINTER, "null output");
  return guarded([&] { *out = sforge::generalized_mass_residual(to_vec3(p), m1, m2); });
}

}  // extern "C"
