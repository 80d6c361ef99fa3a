/* C interface to the spinor verification library.
 *
 * All functions return an sf_status; on failure a description is available
 * from sf_last_error() on the calling thread until the next call.
 * Momenta are passed as (m, p[3]) with E = +sqrt(p^2 + m^2).
 */
#ifndef SFORGE_SFORGE_H
#define SFORGE_SFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SF_API __declspec(dllexport)
#else
#define SF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SF_OK = 0,
  SF_ERR_INVALID_ARGUMENT = 1,
  SF_ERR_DOMAIN = 2,
  SF_ERR_SINGULAR = 3,
  SF_ERR_NULL_POINTER = 4,
  SF_ERR_INTERNAL = 5
} sf_status;

typedef struct {
  double re;
  double im;
} sf_complex;

typedef enum { SF_BASIS_CHIRAL = 0, SF_BASIS_STANDARD = 1 } sf_basis;
typedef enum { SF_NORM_UNIT = 0, SF_NORM_MASS = 1 } sf_normalization;
typedef enum { SF_ROUTE_CLOSED_FORM = 0, SF_ROUTE_BOOST = 1 } sf_route;
typedef enum { SF_KIND_U = 0, SF_KIND_V = 1 } sf_dirac_kind;
/* Spin projection for u/v; chiral-helicity label for lambda/rho. */
typedef enum { SF_UP = 0, SF_DOWN = 1 } sf_spin;
typedef enum { SF_FAMILY_LAMBDA = 0, SF_FAMILY_RHO = 1 } sf_family;
typedef enum { SF_CLASS_S = 0, SF_CLASS_A = 1 } sf_class;
typedef enum { SF_FREQUENCY_POSITIVE = 0, SF_FREQUENCY_NEGATIVE = 1 } sf_frequency;
typedef enum { SF_FAULT_NONE = 0, SF_FAULT_CORRUPT_SPINOR = 1, SF_FAULT_WRONG_SIGN_MASS = 2 } sf_fault;

typedef struct {
  double energy;
  double magnitude;
  double p_plus;
  double p_minus;
} sf_momentum_info;

typedef struct {
  double tolerance;
  sf_basis basis;
  uint64_t seed;
  size_t samples;
  sf_frequency frequency;
  sf_fault fault;
} sf_run_config;

typedef struct sf_report sf_report;

typedef struct {
  const char* id;     /* valid until the report is destroyed */
  const char* anchor;
  double residual;
  double threshold;
  int at_least; /* 1: pass iff residual >= threshold */
  int pass;
} sf_check;

SF_API const char* sf_version(void);
SF_API const char* sf_last_error(void);
SF_API const char* sf_status_name(sf_status status);

SF_API void sf_run_config_default(sf_run_config* config);

SF_API sf_status sf_momentum_info_get(double m, const double p[3], sf_momentum_info* out);

SF_API sf_status sf_dirac_spinor(sf_dirac_kind kind, sf_spin spin, sf_basis basis, sf_normalization norm,
                                 sf_route route, double m, const double p[3], sf_complex out[4]);

/* Mass-dimension normalisation; chiral-basis formulas converted when basis is standard. */
SF_API sf_status sf_majorana_spinor(sf_family family, sf_class cls, sf_spin eta, sf_basis basis, double m,
                                    const double p[3], sf_complex out[4]);

/* Row-major 8x8 table of psibar_i psi_j in the order
 * lambda^S_up, lambda^S_down, lambda^A_up, lambda^A_down, then rho likewise. */
SF_API sf_status sf_biorthonormal_table(double m, const double p[3], sf_complex out[64]);
SF_API sf_status sf_expected_biorthonormal_table(double m, sf_complex out[64]);
/* Largest |table - expected| / m. */
SF_API sf_status sf_biorthonormal_deviation(double m, const double p[3], double* out);

/* out = {dirac, coupled, eight_component, max}. */
SF_API sf_status sf_residual_summary(double m, const double p[3], sf_basis basis, sf_frequency frequency,
                                     double out[4]);

SF_API size_t sf_suite_count(void);
/* NULL when index is out of range. */
SF_API const char* sf_suite_name(size_t index);

/* Runs one named suite. The report must be released with sf_report_destroy. */
SF_API sf_status sf_verify(const char* suite, const sf_run_config* config, sf_report** out);
SF_API void sf_report_destroy(sf_report* report);
SF_API const char* sf_report_suite(const sf_report* report);
SF_API size_t sf_report_check_count(const sf_report* report);
SF_API size_t sf_report_passed(const sf_report* report);
SF_API sf_status sf_report_check(const sf_report* report, size_t index, sf_check* out);

/* E^2 eigenvalues, ascending. */
SF_API sf_status sf_noncommutative_spectrum(const double p[3], double m, const double theta[3], double out[4]);
SF_API sf_status sf_noncommutative_spectrum_numeric(const double p[3], double m, const double theta[3],
                                                    double out[4]);

/* Writes up to 2 masses; *count receives how many. */
SF_API sf_status sf_barut_masses(double alpha, double beta, double m, double out[2], size_t* count);
SF_API sf_status sf_barut_residual(double mu, double alpha, double beta, double m, double* out);

SF_API sf_status sf_generalized_mass_shell(double m1, double m2, double* out);
SF_API sf_status sf_generalized_mass_residual(double m1, double m2, const double p[3], double* out);

#ifdef __cplusplus
}
#endif

#endif /* SFORGE_SFORGE_H */
