#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sforge {

/// AtMost: pass iff residual <= threshold. AtLeast: pass iff residual >= threshold
/// (used for claims that something is *not* an eigenstate).
enum class Bound { AtMost, AtLeast };

struct Check {
  std::string id;
  std::string anchor;  // the relation being checked, written as a formula
  double residual = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::AtMost;
  bool pass = false;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  [[nodiscard]] const std::string& suite() const { return suite_; }
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }

  /// Adds a check, or, when one with the same id exists, keeps whichever of the
  /// two is closer to failing. Sweeps over samples therefore report their worst case.
  void record(const std::string& id, const std::string& anchor, double residual, double threshold,
              Bound bound = Bound::AtMost);

  void append(const VerificationReport& other);

  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t failed() const { return checks_.size() - passed(); }
  [[nodiscard]] bool all_passed() const { return failed() == 0; }
  /// Lookup by id; nullptr if absent.
  [[nodiscard]] const Check* find(const std::string& id) const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

}  // namespace sforge
