#pragma once

// Named verification suites over seeded random momenta, and the per-point
// summaries used by parameter scans.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sforge/equations.hpp"
#include "sforge/report.hpp"

namespace sforge {

/// Deliberate defects for negative controls; a run with a fault must fail.
enum class Fault { None, CorruptSpinor, WrongSignMass };

struct RunConfig {
  double tolerance = 1e-12;
  GammaBasis basis = GammaBasis::Chiral;
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  FrequencyConvention frequency = FrequencyConvention::Positive;
  Fault fault = Fault::None;
};

/// Throws InvalidArgument unless tolerance > 0 and samples >= 1.
void validate(const RunConfig& config);

/// Suite names in run order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

VerificationReport run_suite(const std::string& name, const RunConfig& config);
/// "all" expands to every suite; unknown names throw InvalidArgument.
std::vector<VerificationReport> run_suites(const std::vector<std::string>& names, const RunConfig& config);

/// Portable uniform doubles from mt19937_64 (53-bit mantissa fill).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Isotropic unit vector.
  Vec3 direction();

 private:
  std::mt19937_64 engine_;
};

/// m uniform in [0.1, 10], |p| uniform in [0, 10 m], isotropic direction.
std::vector<FourMomentum> random_momenta(std::uint64_t seed, std::size_t count);

struct ResidualSummary {
  double dirac = 0.0;    // max |(g.p -/+ m){u, v}| over spins, unit normalisation
  double coupled = 0.0;  // max coupled-equation residual over both labels
  double eight = 0.0;    // max 8-component residual over both classes and labels
  [[nodiscard]] double max() const;
};

ResidualSummary residual_summary(const FourMomentum& p, GammaBasis basis, FrequencyConvention convention);

/// Largest |table - expected| over all 64 entries, divided by m.
double biorthonormal_deviation(const FourMomentum& p);

}  // namespace sforge
