// spinor-forge: emit spinors, run verification suites, scan grids and print spectra.
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage or configuration error.

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "output.hpp"
#include "sforge/sforge.h"

namespace {

using nlohmann::json;
using cli::Format;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// A usage or parameter problem; the message names the offending flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tol = 1e-12;
  std::string basis = "chiral";
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  std::string format = "text";
  std::string frequency = "positive";
  std::string fault = "none";
};

double parse_double(const std::string& text, const std::string& flag) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw UsageError(flag + ": '" + text + "' is not a finite number");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::array<double, 3> parse_vec3(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError(flag + ": expected three comma-separated numbers, got '" + text + "'");
  return {parse_double(parts[0], flag), parse_double(parts[1], flag), parse_double(parts[2], flag)};
}

// "start:stop:count" or a single value.
std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_double(parts[0], flag)};
  if (parts.size() != 3) throw UsageError(flag + ": expected start:stop:count or a single value, got '" + text + "'");
  const double start = parse_double(parts[0], flag);
  const double stop = parse_double(parts[1], flag);
  char* end = nullptr;
  errno = 0;
  const long long count = std::strtoll(parts[2].c_str(), &end, 10);
  if (parts[2].empty() || end != parts[2].c_str() + parts[2].size() || errno == ERANGE || count < 0) {
    throw UsageError(flag + ": grid count must be a non-negative integer, got '" + parts[2] + "'");
  }
  if (count == 0) throw UsageError(flag + ": empty grid (count 0)");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    out.push_back(count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return out;
}

Format to_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

sf_basis to_basis(const std::string& s) { return s == "standard" ? SF_BASIS_STANDARD : SF_BASIS_CHIRAL; }

sf_frequency to_frequency(const std::string& s) {
  return s == "negative" ? SF_FREQUENCY_NEGATIVE : SF_FREQUENCY_POSITIVE;
}

sf_fault to_fault(const std::string& s) {
  if (s == "corrupt-spinor") return SF_FAULT_CORRUPT_SPINOR;
  if (s == "wrong-sign-mass") return SF_FAULT_WRONG_SIGN_MASS;
  return SF_FAULT_NONE;
}

// Library failures on user-supplied parameters are usage errors.
void check(sf_status status, const std::string& context) {
  if (status == SF_OK) return;
  throw UsageError(context + ": " + sf_last_error());
}

json vec3_json(const std::array<double, 3>& v) { return json::array({v[0], v[1], v[2]}); }

// ---------------------------------------------------------------- emit

struct EmitArgs {
  std::vector<std::string> labels;
  double m = 1.0;
  std::string p = "0,0,0";
  std::string norm;
  std::string route = "closed";
};

json run_emit(const EmitArgs& a, const Globals& g) {
  if (a.labels.empty()) throw UsageError("emit: missing spinor kind (u, v, lambda, rho)");
  const std::string& kind = a.labels[0];
  const auto p = parse_vec3(a.p, "--p");
  const sf_basis basis = to_basis(g.basis);
  sf_complex comps[4];
  json doc;
  doc["command"] = "emit";
  std::string normalization;

  auto parse_spin = [](const std::string& s, const char* what) {
    if (s == "+1/2" || s == "up" || s == "+" || s == "1/2") return SF_UP;
    if (s == "-1/2" || s == "down" || s == "-") return SF_DOWN;
    throw UsageError(std::string("emit: invalid ") + what + " '" + s + "'");
  };

  if (kind == "u" || kind == "v") {
    if (a.labels.size() != 2) throw UsageError("emit: " + kind + " takes one spin label (+1/2 or -1/2)");
    const sf_spin spin = parse_spin(a.labels[1], "spin");
    normalization = a.norm.empty() ? "unit" : a.norm;
    const sf_route route = a.route == "boost" ? SF_ROUTE_BOOST : SF_ROUTE_CLOSED_FORM;
    check(sf_dirac_spinor(kind == "u" ? SF_KIND_U : SF_KIND_V, spin, basis,
                          normalization == "mass" ? SF_NORM_MASS : SF_NORM_UNIT, route, a.m, p.data(), comps),
          "--m/--p");
    doc["kind"] = kind;
    doc["label"] = spin == SF_UP ? "+1/2" : "-1/2";
    doc["route"] = a.route;
  } else if (kind == "λ" || kind == "lambda" || kind == "ρ" || kind == "rho") {
    if (a.labels.size() != 3) throw UsageError("emit: " + kind + " takes a class (S or A) and a label (up or down)");
    const std::string& cls = a.labels[1];
    if (cls != "S" && cls != "A") throw UsageError("emit: invalid class '" + cls + "' (expected S or A)");
    const sf_spin eta = parse_spin(a.labels[2], "label");
    if (!a.norm.empty() && a.norm != "mass") throw UsageError("--norm: lambda/rho spinors use the mass normalisation");
    if (a.route != "closed") throw UsageError("--route: lambda/rho spinors are emitted from their closed forms");
    normalization = "mass";
    const bool lambda = kind == "λ" || kind == "lambda";
    check(sf_majorana_spinor(lambda ? SF_FAMILY_LAMBDA : SF_FAMILY_RHO, cls == "S" ? SF_CLASS_S : SF_CLASS_A, eta, basis,
                             a.m, p.data(), comps),
          "--m/--p");
    doc["kind"] = lambda ? "lambda" : "rho";
    doc["label"] = cls + (eta == SF_UP ? " up" : " down");
  } else {
    throw UsageError("emit: unknown spinor kind '" + kind + "' (expected u, v, lambda or rho)");
  }

  sf_momentum_info info{};
  check(sf_momentum_info_get(a.m, p.data(), &info), "--m/--p");
  double norm2 = 0.0;
  json components = json::array();
  for (const auto& c : comps) {
    components.push_back(cli::complex_json(c.re, c.im));
    norm2 += c.re * c.re + c.im * c.im;
  }
  doc["basis"] = g.basis;
  doc["normalization"] = normalization;
  doc["m"] = a.m;
  doc["p"] = vec3_json(p);
  doc["energy"] = info.energy;
  doc["p_plus"] = info.p_plus;
  doc["p_minus"] = info.p_minus;
  doc["norm"] = std::sqrt(norm2);
  doc["components"] = components;
  return doc;
}

std::string render_emit(const json& d, Format f) {
  if (f == Format::Json) return cli::json_document(d);
  const auto& c = d["components"];
  if (f == Format::Csv) {
    std::string out = cli::csv_row({"index", "re", "im"});
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += cli::csv_row({std::to_string(i), cli::csv_number(c[i]["re"]), cli::csv_number(c[i]["im"])});
    }
    return out;
  }
  std::string out;
  out += "spinor: " + d["kind"].get<std::string>() + " " + d["label"].get<std::string>() + "\n";
  out += "basis: " + d["basis"].get<std::string>() + "\n";
  out += "normalization: " + d["normalization"].get<std::string>() + "\n";
  const auto& p = d["p"];
  out += "m: " + cli::text_number(d["m"]) + "\n";
  out += "p: " + cli::text_number(p[0]) + ", " + cli::text_number(p[1]) + ", " + cli::text_number(p[2]) + "\n";
  out += "E: " + cli::text_number(d["energy"]) + "\n";
  out += "p+: " + cli::text_number(d["p_plus"]) + "\n";
  out += "p-: " + cli::text_number(d["p_minus"]) + "\n";
  out += "norm: " + cli::text_number(d["norm"]) + "\n";
  out += "components:\n";
  for (const auto& z : c) out += "  " + cli::text_complex(z["re"], z["im"]) + "\n";
  return out;
}

// ---------------------------------------------------------------- verify

std::pair<json, bool> run_verify(const std::vector<std::string>& requested, const Globals& g) {
  std::vector<std::string> names;
  for (const auto& r : requested.empty() ? std::vector<std::string>{"all"} : requested) {
    if (r == "all") {
      for (std::size_t i = 0; i < sf_suite_count(); ++i) names.emplace_back(sf_suite_name(i));
      continue;
    }
    bool known = false;
    for (std::size_t i = 0; i < sf_suite_count(); ++i) known = known || r == sf_suite_name(i);
    if (!known) throw UsageError("verify: unknown suite '" + r + "'");
    names.push_back(r);
  }

  sf_run_config cfg;
  sf_run_config_default(&cfg);
  cfg.tolerance = g.tol;
  cfg.basis = to_basis(g.basis);
  cfg.seed = g.seed;
  cfg.samples = g.samples;
  cfg.frequency = to_frequency(g.frequency);
  cfg.fault = to_fault(g.fault);

  json doc;
  doc["command"] = "verify";
  doc["config"] = {{"tolerance", g.tol},         {"basis", g.basis},          {"seed", g.seed},
                   {"samples", g.samples},       {"frequency_convention", g.frequency}, {"fault", g.fault}};
  json suites = json::array();
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& name : names) {
    sf_report* report = nullptr;
    const sf_status st = sf_verify(name.c_str(), &cfg, &report);
    if (st != SF_OK) throw UsageError("verify " + name + ": " + sf_last_error());
    json checks = json::array();
    const std::size_t n = sf_report_check_count(report);
    for (std::size_t i = 0; i < n; ++i) {
      sf_check c{};
      sf_report_check(report, i, &c);
      checks.push_back({{"id", c.id},
                        {"anchor", c.anchor},
                        {"residual", c.residual},
                        {"threshold", c.threshold},
                        {"bound", c.at_least ? "at-least" : "at-most"},
                        {"pass", c.pass != 0}});
    }
    const std::size_t passed = sf_report_passed(report);
    sf_report_destroy(report);
    total += n;
    failed += n - passed;
    suites.push_back({{"suite", name}, {"checks", checks}, {"passed", passed}, {"failed", n - passed}});
  }
  doc["suites"] = suites;
  doc["summary"] = {{"suites", names.size()}, {"checks", total}, {"failed", failed}, {"all_passed", failed == 0}};
  return {doc, failed == 0};
}

std::string render_verify(const json& d, Format f) {
  if (f == Format::Json) return cli::json_document(d);
  std::string out;
  if (f == Format::Csv) {
    out = cli::csv_row({"suite", "id", "anchor", "residual", "threshold", "bound", "pass"});
    for (const auto& s : d["suites"]) {
      for (const auto& c : s["checks"]) {
        out += cli::csv_row({s["suite"], c["id"], c["anchor"], cli::csv_number(c["residual"]),
                             cli::csv_number(c["threshold"]), c["bound"], c["pass"].get<bool>() ? "true" : "false"});
      }
    }
    return out;
  }
  for (const auto& s : d["suites"]) {
    const std::size_t n = s["checks"].size();
    out += "suite " + s["suite"].get<std::string>() + ": " + std::to_string(s["passed"].get<std::size_t>()) + "/" +
           std::to_string(n) + " passed\n";
    for (const auto& c : s["checks"]) {
      const bool at_least = c["bound"] == "at-least";
      out += std::string("  ") + (c["pass"].get<bool>() ? "PASS" : "FAIL") + "  " + c["id"].get<std::string>() +
             "  residual=" + cli::text_number(c["residual"].is_number() ? c["residual"].get<double>() : NAN) +
             (at_least ? " >= " : " <= ") + cli::text_number(c["threshold"]) + "\n";
    }
  }
  const auto& sum = d["summary"];
  out += "summary: " + std::to_string(sum["suites"].get<std::size_t>()) + " suites, " +
         std::to_string(sum["checks"].get<std::size_t>()) + " checks, " +
         std::to_string(sum["failed"].get<std::size_t>()) + " failed\n";
  return out;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string quantity;
  std::string m = "1";
  std::string pmag = "0";
  std::string dir = "0,0,1";
  std::string p = "0,0,0";
  std::string theta_mag = "0";
  std::string theta_dir = "0,0,1";
};

std::array<double, 3> unit_vector(const std::array<double, 3>& v, const std::string& flag) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!(n > 0.0)) throw UsageError(flag + ": direction must be non-zero");
  return {v[0] / n, v[1] / n, v[2] / n};
}

json run_scan(const ScanArgs& a, const Globals& g) {
  json doc;
  doc["command"] = "scan";
  doc["quantity"] = a.quantity;
  json rows = json::array();
  const auto masses = parse_grid(a.m, "--m");
  if (a.quantity == "residuals" || a.quantity == "biorthonormal") {
    const auto pmags = parse_grid(a.pmag, "--pmag");
    const auto dir = unit_vector(parse_vec3(a.dir, "--dir"), "--dir");
    const bool residuals = a.quantity == "residuals";
    doc["columns"] = residuals ? json{"m", "pmag", "E", "dirac", "coupled", "eight_component", "max_residual"}
                               : json{"m", "pmag", "E", "max_deviation_over_m", "lsu_lsd_re_over_m",
                                      "lsu_lsd_im_over_m"};
    for (double m : masses) {
      for (double pm : pmags) {
        const std::array<double, 3> p{pm * dir[0], pm * dir[1], pm * dir[2]};
        sf_momentum_info info{};
        check(sf_momentum_info_get(m, p.data(), &info), "--m/--pmag");
        if (residuals) {
          double r[4];
          check(sf_residual_summary(m, p.data(), to_basis(g.basis), to_frequency(g.frequency), r), "--m/--pmag");
          rows.push_back({m, pm, info.energy, r[0], r[1], r[2], r[3]});
        } else {
          double dev = 0.0;
          check(sf_biorthonormal_deviation(m, p.data(), &dev), "--m");
          sf_complex table[64];
          check(sf_biorthonormal_table(m, p.data(), table), "--m/--pmag");
          rows.push_back({m, pm, info.energy, dev, table[1].re / m, table[1].im / m});
        }
      }
    }
  } else if (a.quantity == "spectrum") {
    const auto p = parse_vec3(a.p, "--p");
    const auto tmags = parse_grid(a.theta_mag, "--theta-mag");
    const auto tdir = unit_vector(parse_vec3(a.theta_dir, "--theta-dir"), "--theta-dir");
    doc["columns"] = {"m", "theta_mag", "E2_1", "E2_2", "E2_3", "E2_4", "eigensolver_deviation"};
    for (double m : masses) {
      for (double t : tmags) {
        const std::array<double, 3> theta{t * tdir[0], t * tdir[1], t * tdir[2]};
        double closed[4];
        double numeric[4];
        check(sf_noncommutative_spectrum(p.data(), m, theta.data(), closed), "--m");
        check(sf_noncommutative_spectrum_numeric(p.data(), m, theta.data(), numeric), "--m");
        double dev = 0.0;
        for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(closed[i] - numeric[i]));
        rows.push_back({m, t, closed[0], closed[1], closed[2], closed[3], dev});
      }
    }
  } else {
    throw UsageError("scan: unknown quantity '" + a.quantity + "' (expected biorthonormal, residuals or spectrum)");
  }
  doc["rows"] = rows;
  return doc;
}

std::string render_table(const json& d, Format f) {
  if (f == Format::Json) return cli::json_document(d);
  std::vector<std::string> header;
  for (const auto& c : d["columns"]) header.push_back(c.get<std::string>());
  std::string out;
  if (f == Format::Csv) {
    out = cli::csv_row(header);
    for (const auto& row : d["rows"]) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(cli::csv_number(v));
      out += cli::csv_row(cells);
    }
    return out;
  }
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? " " : "") + header[i];
  out += "\n";
  for (const auto& row : d["rows"]) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + cli::text_number(row[i]);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string kind;
  double m = 1.0;
  std::string p = "0,0,0";
  std::string theta = "0,0,0";
  double alpha = 0.0;
  double beta = 0.0;
  double m1 = 1.0;
  double m2 = 0.0;
  std::string gd1_p = "0,0,1";
};

json run_spectrum(const SpectrumArgs& a) {
  json doc;
  doc["command"] = "spectrum";
  doc["kind"] = a.kind;
  json values = json::array();
  if (a.kind == "noncommutative") {
    const auto p = parse_vec3(a.p, "--p");
    const auto theta = parse_vec3(a.theta, "--theta");
    double e2[4];
    check(sf_noncommutative_spectrum(p.data(), a.m, theta.data(), e2), "--m");
    for (double v : e2) values.push_back(v);
    doc["quantity"] = "E^2";
    doc["formula"] = "E^2 = p^2 + m^2 - |theta| (x2), p^2 + m^2 + |theta| (x2)";
    doc["parameters"] = {{"m", a.m}, {"p", vec3_json(p)}, {"theta", vec3_json(theta)}};
  } else if (a.kind == "barut") {
    double mu[2];
    std::size_t n = 0;
    check(sf_barut_masses(a.alpha, a.beta, a.m, mu, &n), "--alpha/--beta/--m");
    json residuals = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(mu[i]);
      double r = 0.0;
      check(sf_barut_residual(mu[i], a.alpha, a.beta, a.m, &r), "--alpha/--beta/--m");
      residuals.push_back(r);
    }
    doc["quantity"] = "mass";
    doc["formula"] = "±mu + alpha mu^2/m - beta = 0, non-negative roots";
    doc["parameters"] = {{"alpha", a.alpha}, {"beta", a.beta}, {"m", a.m}};
    doc["residuals"] = residuals;
  } else if (a.kind == "gd1") {
    double shell = 0.0;
    check(sf_generalized_mass_shell(a.m1, a.m2, &shell), "--m1/--m2");
    values.push_back(shell);
    const auto p = parse_vec3(a.gd1_p, "--p");
    double r = 0.0;
    check(sf_generalized_mass_residual(a.m1, a.m2, p.data(), &r), "--m1/--m2/--p");
    doc["quantity"] = "mass";
    doc["formula"] = "p^2 = m1^2 - m2^2 for (g.p - m1 - m2 g5) psi = 0";
    doc["parameters"] = {{"m1", a.m1}, {"m2", a.m2}, {"p", vec3_json(p)}};
    doc["kernel_residual"] = r;
  } else {
    throw UsageError("spectrum: unknown kind '" + a.kind + "' (expected noncommutative, barut or gd1)");
  }
  doc["values"] = values;
  return doc;
}

std::string render_spectrum(const json& d, Format f) {
  if (f == Format::Json) return cli::json_document(d);
  if (f == Format::Csv) {
    std::string out = cli::csv_row({"index", "value"});
    const auto& v = d["values"];
    for (std::size_t i = 0; i < v.size(); ++i) out += cli::csv_row({std::to_string(i), cli::csv_number(v[i])});
    return out;
  }
  std::string out = "spectrum: " + d["kind"].get<std::string>() + "\n";
  out += "quantity: " + d["quantity"].get<std::string>() + "\n";
  out += "formula: " + d["formula"].get<std::string>() + "\n";
  out += "values:";
  for (const auto& v : d["values"]) out += " " + cli::text_number(v);
  out += "\n";
  if (d.contains("kernel_residual")) out += "kernel residual: " + cli::text_number(d["kernel_residual"]) + "\n";
  if (d.contains("residuals")) {
    out += "dispersion residuals:";
    for (const auto& v : d["residuals"]) out += " " + cli::text_number(v);
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Momentum-space Dirac and Majorana-like spinors: tables, checks, scans and spectra"};
  app.set_version_flag("--version", std::string(sf_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* tol_opt = app.add_option("--tol", g.tol, "Tolerance for the checks (default 1e-12, or SPINOR_FORGE_TOL)");
  app.add_option("--basis", g.basis, "Gamma-matrix basis")->check(CLI::IsMember({"chiral", "standard"}));
  app.add_option("--seed", g.seed, "Seed for random momenta");
  app.add_option("--samples", g.samples, "Random samples per suite")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--frequency-convention", g.frequency, "Plane-wave association of the lambda/rho pairs")
      ->check(CLI::IsMember({"positive", "negative"}));
  app.add_option("--fault", g.fault, "Inject a defect (negative control)")
      ->check(CLI::IsMember({"none", "corrupt-spinor", "wrong-sign-mass"}));

  EmitArgs emit;
  auto* emit_cmd = app.add_subcommand("emit", "Print the four components of a spinor");
  emit_cmd->add_option("labels", emit.labels, "Kind and labels: u +1/2 | v -1/2 | lambda S up | rho A down")
      ->required();
  emit_cmd->add_option("--m", emit.m, "Mass");
  emit_cmd->add_option("--p", emit.p, "Momentum px,py,pz");
  emit_cmd->add_option("--norm", emit.norm, "u/v normalisation")->check(CLI::IsMember({"unit", "mass"}));
  emit_cmd->add_option("--route", emit.route, "u/v construction")->check(CLI::IsMember({"closed", "boost"}));

  std::vector<std::string> suites;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites (default: all)");
  verify_cmd->add_option("suites", suites, "Suite names or 'all'");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Evaluate a quantity over a parameter grid");
  scan_cmd->add_option("quantity", scan.quantity, "biorthonormal | residuals | spectrum")->required();
  scan_cmd->add_option("--m", scan.m, "Mass grid start:stop:count");
  scan_cmd->add_option("--pmag", scan.pmag, "|p| grid start:stop:count");
  scan_cmd->add_option("--dir", scan.dir, "Momentum direction");
  scan_cmd->add_option("--p", scan.p, "Fixed momentum for spectrum scans");
  scan_cmd->add_option("--theta-mag", scan.theta_mag, "|theta| grid start:stop:count");
  scan_cmd->add_option("--theta-dir", scan.theta_dir, "theta direction");

  SpectrumArgs spec;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print a mass or energy spectrum");
  spectrum_cmd->add_option("kind", spec.kind, "noncommutative | barut | gd1")->required();
  spectrum_cmd->add_option("--m", spec.m, "Mass (reference mass for barut)");
  spectrum_cmd->add_option("--p", spec.p, "Momentum px,py,pz (gd1: kernel momentum, default 0,0,1)");
  spectrum_cmd->add_option("--theta", spec.theta, "theta vector");
  spectrum_cmd->add_option("--alpha", spec.alpha, "Barut alpha");
  spectrum_cmd->add_option("--beta", spec.beta, "Barut beta");
  spectrum_cmd->add_option("--m1", spec.m1, "gd1 m1");
  spectrum_cmd->add_option("--m2", spec.m2, "gd1 m2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (tol_opt->count() == 0) {
      if (const char* env = std::getenv("SPINOR_FORGE_TOL")) g.tol = parse_double(env, "SPINOR_FORGE_TOL");
    }
    if (!(g.tol > 0.0) || !std::isfinite(g.tol)) throw UsageError("--tol: must be a positive finite number");
    const Format format = to_format(g.format);

    if (emit_cmd->parsed()) {
      std::cout << render_emit(run_emit(emit, g), format);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto [doc, ok] = run_verify(suites, g);
      std::cout << render_verify(doc, format);
      return ok ? kExitOk : kExitFailed;
    }
    if (scan_cmd->parsed()) {
      std::cout << render_table(run_scan(scan, g), format);
      return kExitOk;
    }
    if (spectrum_cmd->parsed()) {
      if (spec.kind == "gd1" && spectrum_cmd->get_option("--p")->count() > 0) spec.gd1_p = spec.p;
      std::cout << render_spectrum(run_spectrum(spec), format);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
