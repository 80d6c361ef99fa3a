// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "process.hpp"
#include "sforge/suites.hpp"

using namespace sforge;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::function<VerificationReport()> run;
};

VerificationReport suites(const std::vector<std::string>& names, std::size_t samples = 100) {
  RunConfig c;
  c.samples = samples;
  VerificationReport out("acceptance");
  for (const auto& r : run_suites(names, c)) out.append(r);
  return out;
}

VerificationReport both_bases(const std::string& name) {
  RunConfig c;
  VerificationReport out("acceptance");
  out.append(run_suite(name, c));
  c.basis = GammaBasis::Standard;
  out.append(run_suite(name, c));
  return out;
}

VerificationReport biorthonormal() {
  auto r = suites({"biorthonormal"});
  const double tol = 1e-12;
  for (const auto& p : random_momenta(42, 100)) {
    const auto t = biorthonormal_table(p);
    const double m = p.mass();
    r.record("bar(lambda^S_up) lambda^S_down = -im", "-im", std::abs(t[0][1] - Complex{0.0, -m}), tol * m);
  }
  return r;
}

VerificationReport barut() {
  auto r = suites({"barut"});
  for (double beta : {0.3, 1.0, 4.0}) {
    const auto mu = barut_masses(0.0, beta, 1.0);
    r.record("alpha = 0 collapses to beta", "mu = beta", mu.size() == 1 ? std::abs(mu[0] - beta) : 1.0, 1e-12);
    for (double alpha : {0.5, 2.0}) {
      for (double m : barut_masses(alpha, beta, 1.0)) {
        r.record("roots satisfy the dispersion", "±mu + alpha mu^2/m - beta = 0", barut_residual(m, alpha, beta, 1.0),
                 1e-12);
      }
    }
  }
  return r;
}

VerificationReport cli() {
  VerificationReport r("cli");
  const auto first = proc::run("verify all --seed 42");
  const auto second = proc::run("verify all --seed 42");
  r.record("verify all --seed 42 exits 0", "exit 0", first.status, 0);
  r.record("repeat output byte-identical", "identical", first.out == second.out && !first.out.empty() ? 0 : 1, 0);
  const auto js = proc::run("--format json verify all --seed 42");
  double roundtrip = 1.0;
  try {
    roundtrip = nlohmann::json::parse(js.out).dump(2) + "\n" == js.out ? 0.0 : 1.0;
  } catch (const nlohmann::json::exception&) {
  }
  r.record("json round-trips", "parse(dump) = dump", js.status == 0 ? roundtrip : 1.0, 0);
  r.record("corrupted spinor exits 1", "exit 1",
           std::abs(proc::run("--fault corrupt-spinor verify all --seed 42").status - 1), 0);
  r.record("wrong-sign mass exits 1", "exit 1",
           std::abs(proc::run("--fault wrong-sign-mass verify all --seed 42").status - 1), 0);
  return r;
}

void print_failures(const VerificationReport& r) {
  for (const auto& c : r.checks()) {
    if (c.pass) continue;
    std::printf("       failed: %s  residual=%.3g threshold=%.3g\n", c.id.c_str(), c.residual, c.threshold);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Clifford algebra in both bases below 1e-14", [] { return suites({"clifford"}); }},
      {2, "Dirac normalization table at 100 random momenta", [] { return both_bases("dirac-norms"); }},
      {3, "Dirac residuals for both routes, routes agree", [] { return both_bases("dirac-residuals"); }},
      {4, "self/anti-self conjugacy and C^2 = 1", [] { return suites({"selfconj"}); }},
      {5, "bi-orthonormal table, unlisted pairings vanish", biorthonormal},
      {6, "parity maps lambda <-> rho, no parity eigenstates", [] { return suites({"parity-maps", "parity"}); }},
      {7, "rho <-> lambda relations", [] { return suites({"rho-lambda"}); }},
      {8, "connection matrix at rest and 50 random momenta", [] { return suites({"connect"}, 50); }},
      {9, "coupled, 8-component and Markov equations",
       [] { return suites({"coupled", "eight-component", "markov"}); }},
      {10, "operator-zoo unitary equivalences", [] { return suites({"operator-zoo"}); }},
      {11, "massless limit of lambda_up", [] { return suites({"massless-limit"}); }},
      {12, "g5 gauge transformations and Xi identities", [] { return suites({"gauge", "xi"}); }},
      {13, "generalized mass shell and eta eigenstate test", [] { return suites({"gd1"}); }},
      {14, "noncommutative spectrum vs eigensolver", [] { return suites({"noncommutative"}); }},
      {15, "Barut masses and alpha -> 0 limit", barut},
      {16, "CLI determinism, JSON and negative controls", cli},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    VerificationReport r;
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool pass = error.empty() && !r.checks().empty() && r.all_passed();
    if (!pass) ++failed;
    std::printf("[%s] %2d %s (%zu checks)\n", pass ? "PASS" : "FAIL", c.number, c.description.c_str(),
                r.checks().size());
    if (!error.empty()) std::printf("       error: %s\n", error.c_str());
    print_failures(r);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
