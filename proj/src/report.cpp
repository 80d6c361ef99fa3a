#include "sforge/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sforge {

namespace {

bool evaluate(double residual, double threshold, Bound bound) {
  if (std::isnan(residual)) return false;
  return bound == Bound::AtMost ? residual <= threshold : residual >= threshold;
}

// How close to failing: larger is worse.
double severity(const Check& c) {
  if (std::isnan(c.residual)) return std::numeric_limits<double>::infinity();
  if (c.bound == Bound::AtMost) {
    if (c.threshold <= 0.0) return c.residual > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return c.residual / c.threshold;
  }
  if (c.residual <= 0.0) return std::numeric_limits<double>::infinity();
  return c.threshold / c.residual;
}

}  // namespace

void VerificationReport::record(const std::string& id, const std::string& anchor, double residual,
                                double threshold, Bound bound) {
  Check c{id, anchor, residual, threshold, bound, evaluate(residual, threshold, bound)};
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& x) { return x.id == id; });
  if (it == checks_.end()) {
    checks_.push_back(std::move(c));
  } else if (severity(c) > severity(*it)) {
    *it = std::move(c);
  }
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.checks_) record(c.id, c.anchor, c.residual, c.threshold, c.bound);
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; }));
}

const Check* VerificationReport::find(const std::string& id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& x) { return x.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

}  // namespace sforge
