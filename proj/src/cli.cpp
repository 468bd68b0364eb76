#include "ksl/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "ksl/algebra/verify.hpp"
#include "ksl/constants.hpp"
#include "ksl/sphere/lab.hpp"
#include "ksl/sphere/newton.hpp"

namespace ksl::cli {

namespace {

using report::Report;
using report::Row;

double parse_number(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

std::vector<double> q_values(const RunConfig& c) {
  if (c.q_grid.empty()) return {c.q};
  return parse_q_grid(c.q_grid);
}

Dimensions dims_for(const RunConfig& c, double q) {
  Dimensions d{c.n, q};
  d.validate();
  return d;
}

void constants_section(Report& r, const RunConfig& c, bool rows) {
  const auto qs = q_values(c);
  for (double q : qs) {
    const ConstantsReport cr = constants_report(dims_for(c, q));
    if (qs.size() == 1) {
      r.set("constants.n", static_cast<long long>(c.n));
      r.set("constants.q", q);
      r.set("constants.c_s", cr.c_s);
      r.set("constants.c_riem_raw", cr.c_riem_raw);
      r.set("constants.c_riem_bridged", cr.c_riem_bridged);
      r.set("constants.c_conj", cr.c_conj);
      r.set("constants.lambda1_lower", cr.lambda1_lower);
      r.set("constants.boundary", cr.boundary);
    }
    if (rows)
      r.add_row({{"n", static_cast<long long>(c.n)},
                 {"q", q},
                 {"c_s", cr.c_s},
                 {"c_riem_raw", cr.c_riem_raw},
                 {"c_riem_bridged", cr.c_riem_bridged},
                 {"c_conj", cr.c_conj},
                 {"lambda1_lower", cr.lambda1_lower},
                 {"boundary", cr.boundary}});
  }
}

void interval_section(Report& r, const RunConfig& c, bool rows) {
  const auto qs = q_values(c);
  bool consistent = true;
  for (double q : qs) {
    const Dimensions d = dims_for(c, q);
    const KInterval iv = k_interval(d);
    const double eps0 = k_lower_bound_eps0(d);
    const double thr = section2_threshold(d);
    const double cs = cs_bm(d);
    consistent = consistent && std::fabs(iv.k_lo * iv.k_hi - 1) <= 1e-12 &&
                 std::fabs(eps0 - iv.k_lo) <= 1e-12 &&
                 std::fabs(thr - 1 / (2 * cs)) <= 1e-10;
    if (qs.size() == 1) {
      r.set("interval.n", static_cast<long long>(c.n));
      r.set("interval.q", q);
      r.set("interval.k_lo", iv.k_lo);
      r.set("interval.k_hi", iv.k_hi);
      r.set("interval.width", iv.width());
      r.set("interval.endpoint_product", iv.k_lo * iv.k_hi);
      r.set("interval.epsilon_max", epsilon_max(d));
      r.set("interval.k_lower_bound_eps0", eps0);
      r.set("interval.section2_threshold", thr);
    }
    if (rows)
      r.add_row({{"n", static_cast<long long>(c.n)},
                 {"q", q},
                 {"k_lo", iv.k_lo},
                 {"k_hi", iv.k_hi},
                 {"epsilon_max", epsilon_max(d)},
                 {"k_lower_bound_eps0", eps0},
                 {"section2_threshold", thr}});
  }
  r.check("interval.consistency", consistent);
}

void optimize_section(Report& r, const RunConfig& c, bool rows) {
  const auto qs = q_values(c);
  for (double q : qs) {
    const Dimensions d = dims_for(c, q);
    double k = 0, threshold = 0;
    if (c.k == "auto") {
      const KOptimum opt = optimize_k(d, c.lambda1);
      k = opt.k_star;
      threshold = opt.lambda_threshold;
    } else {
      k = parse_number(c.k);
      threshold = f_of_k(d, k, c.lambda1);
    }
    const double cs = cs_general(d, k, c.lambda1);
    const XBounds xb = x_bounds(d, k);
    if (qs.size() == 1) {
      r.set("optimize_k.n", static_cast<long long>(c.n));
      r.set("optimize_k.q", q);
      r.set("optimize_k.lambda1", c.lambda1);
      r.set("optimize_k.mode", c.k == "auto" ? std::string("auto") : std::string("fixed"));
      r.set("optimize_k.k", k);
      r.set("optimize_k.lambda_threshold", threshold);
      r.set("optimize_k.c_s_general", cs);
      r.set("optimize_k.x_lo", xb.x_lo);
      r.set("optimize_k.x_hi", xb.x_hi);
    }
    if (rows)
      r.add_row({{"n", static_cast<long long>(c.n)},
                 {"q", q},
                 {"k", k},
                 {"lambda1", c.lambda1},
                 {"lambda_threshold", threshold},
                 {"c_s_general", cs}});
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " | ") + p;
  return out;
}

void algebra_section(Report& r) {
  auto passes = algebra::verify_all();
  passes.push_back(algebra::verify_psi_monotone(1, 3, 1));
  for (const auto& p : passes) {
    for (const auto& s : p.steps) {
      const std::string key = "algebra." + p.name + "." + s.name;
      r.set(key + ".description", s.description);
      r.set(key + ".instantiations", static_cast<long long>(s.instantiations.size()));
      if (!s.notes.empty()) r.set(key + ".notes", join(s.notes));
      if (!s.residuals.empty()) r.set(key + ".residuals", join(s.residuals));
      r.check(key, s.passed);
    }
  }
}

void sphere_check(Report& r, const std::string& key, double value, double tol, bool ok) {
  r.set(key + ".value", value);
  r.set(key + ".tolerance", tol);
  r.check(key, ok);
}

void sphere_section(Report& r, const RunConfig& c) {
  using namespace sphere;
  const SpherePtr S = Sphere::create(c.L);
  const double pi4 = 4 * std::numbers::pi;
  const SphereField z = z_field(S);
  const SphereField one = SphereField::constant(S, 1.0);
  const SphereField f = random_field(S, c.seed);
  const SphereField g = random_field(S, c.seed + 1);

  const double area_err = std::fabs(S->grid().area() - pi4);
  sphere_check(r, "sphere.grid.area_error", area_err, 1e-13, area_err <= 1e-13);
  const double z2 = mean_square(z);
  sphere_check(r, "sphere.grid.avg_z2", z2, 1e-12, std::fabs(z2 - 1.0 / 3) <= 1e-12);

  const SphereField rt = SphereField::from_native_values(S, f.values());
  double rt_err = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    rt_err = std::max(rt_err, std::fabs(rt.coeffs()[i] - f.coeffs()[i]));
  sphere_check(r, "sphere.transform.roundtrip_error", rt_err, 1e-10, rt_err <= 1e-10);
  const SphereField fm = f + one;
  const double mean_err = std::fabs(fm.mean() - fm.quadrature_mean());
  sphere_check(r, "sphere.field.mean_error", mean_err, 1e-12, mean_err <= 1e-12);

  const double ge = grad_energy(z);
  sphere_check(r, "sphere.grad_energy.z", ge, 1e-10, std::fabs(ge - 2.0 / 3) <= 1e-10);
  const double ge_rel =
      std::fabs(grad_energy(f) - grad_energy_quadrature(f)) / grad_energy(f);
  sphere_check(r, "sphere.grad_energy.dual_path_rel_error", ge_rel, 1e-9, ge_rel <= 1e-9);

  const double sa = self_adjointness_residual(f, g);
  sphere_check(r, "sphere.box.self_adjointness", sa, 1e-10, sa <= 1e-10);
  const double ei = energy_identity_residual(f);
  sphere_check(r, "sphere.box.energy_identity", ei, 1e-10, ei <= 1e-10);
  const EigenEstimate ev = measure_lambda1(S, c.seed);
  sphere_check(r, "sphere.lambda1", ev.lambda1, 1e-8, std::fabs(ev.lambda1 - 1) <= 1e-8);

  const IneqReport s1 = sobolev_check(one + z, 2, 0.5, "1+z");
  r.set("sphere.sobolev.one_plus_z.lhs", s1.lhs);
  r.set("sphere.sobolev.one_plus_z.rhs", s1.rhs);
  r.set("sphere.sobolev.one_plus_z.margin", s1.margin);
  r.check("sphere.sobolev.one_plus_z", std::fabs(s1.lhs - std::cbrt(4.0)) <= 1e-6 &&
                                           std::fabs(s1.rhs - 5.0 / 3) <= 1e-6 &&
                                           std::fabs(s1.margin - (5.0 / 3 - std::cbrt(4.0))) <= 1e-6);
  double min_margin = INFINITY;
  for (int i = 0; i < 100; ++i) {
    const SphereField g = random_field(S, c.seed * 1000 + i);
    double peak = 0;
    for (double v : g.fine_values()) peak = std::max(peak, std::fabs(v));
    const SphereField trial = one + g * ((0.01 + 0.02 * i) / peak);
    min_margin = std::min(min_margin, sobolev_check(trial, 2, 0.5).margin);
  }
  sphere_check(r, "sphere.sobolev.corpus_min_margin", min_margin, 1e-9, min_margin >= -1e-9);

  const PerturbationReport pt = perturbation_tcoeff(z, 2, 0.5);
  r.set("sphere.perturbation.lhs_t2", pt.lhs_t2);
  r.set("sphere.perturbation.rhs_t2", pt.rhs_t2);
  r.set("sphere.perturbation.numeric_t2", pt.numeric_t2);
  r.check("sphere.perturbation", std::fabs(pt.lhs_t2 - 2.0 / 3) <= 1e-8 &&
                                     std::fabs(pt.rhs_t2 - 2.0 / 3) <= 1e-8 &&
                                     pt.numeric_rel_error <= 1e-6);

  const double qc = quotient(one, 1, 2);
  const double qc_expected = std::pow(pi4, 1.0 / 3);
  sphere_check(r, "sphere.quotient.constant", qc, 1e-12,
               std::fabs(qc - qc_expected) <= 1e-12 * qc_expected);
  const SphereField u = one + z * 0.1;
  const double hom = std::fabs(quotient(u * 2.0, 1, 2) / quotient(u, 1, 2) - 1);
  sphere_check(r, "sphere.quotient.homogeneity_error", hom, 1e-12, hom <= 1e-12);
  double grad_err = 0;
  for (int b = 0; b < 3; ++b) {
    const SphereField base = random_positive_field(S, c.seed + 100 + b, 1.0, 0.5);
    grad_err = std::max(grad_err,
                        check_quotient_gradient(base, 1, 2, 5, c.seed + 200 + b).max_rel_error);
  }
  sphere_check(r, "sphere.quotient_gradient.max_rel_error", grad_err, 1e-6, grad_err <= 1e-6);
}

void pde_section(Report& r, const RunConfig& c) {
  using namespace sphere;
  if (!(c.lambda > 0)) throw DomainError("newton_solve: lambda must be positive");
  if (!(c.q > 1)) throw DomainError("newton_solve: q must exceed 1");
  const SpherePtr S = Sphere::create(c.L);
  const SphereField u0 = random_initial_guess(S, c.lambda, c.q, c.seed);
  const SolveReport s = newton_solve(c.lambda, c.q, u0, 1e-10, 50);
  r.set("pde.lambda", c.lambda);
  r.set("pde.q", c.q);
  r.set("pde.iterations", static_cast<long long>(s.iterations));
  r.set("pde.halvings", static_cast<long long>(s.halvings));
  r.set("pde.residual", s.residual);
  r.set("pde.is_constant", s.is_constant);
  r.set("pde.constant_value", s.constant_value);
  r.set("pde.expected_constant", std::pow(c.lambda, 1 / (c.q - 1)));
  r.set("pde.message", s.message);
  r.check("pde.converged", s.converged);
}

void echo_config(Report& r, const RunConfig& c) {
  r.config("n", static_cast<long long>(c.n));
  r.config("q", c.q);
  if (!c.q_grid.empty()) r.config("q_grid", c.q_grid);
  r.config("k", c.k);
  r.config("lambda1", c.lambda1);
  r.config("lambda", c.lambda);
  r.config("L", static_cast<long long>(c.L));
  r.config("seed", static_cast<long long>(c.seed));
  r.config("format", c.format);
}

}  // namespace

std::vector<double> parse_q_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw std::invalid_argument("q-grid must be start:stop:count");
    const double a = parse_number(parts[0]), b = parse_number(parts[1]);
    const double count = parse_number(parts[2]);
    if (count < 1 || count != std::floor(count))
      throw std::invalid_argument("q-grid count must be a positive integer");
    const int m = static_cast<int>(count);
    for (int i = 0; i < m; ++i) out.push_back(m == 1 ? a : a + (b - a) * i / (m - 1));
  } else {
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_number(p));
  }
  if (out.empty()) throw std::invalid_argument("empty q-grid");
  return out;
}

report::Report build_report(const RunConfig& cfg) {
  Report r(cfg.subcommand);
  echo_config(r, cfg);
  const std::string& s = cfg.subcommand;
  if (s == "constants") {
    constants_section(r, cfg, true);
  } else if (s == "interval") {
    interval_section(r, cfg, true);
  } else if (s == "optimize-k") {
    optimize_section(r, cfg, true);
  } else if (s == "algebra-verify") {
    algebra_section(r);
  } else if (s == "sphere-verify") {
    sphere_section(r, cfg);
  } else if (s == "pde-solve") {
    pde_section(r, cfg);
  } else if (s == "all") {
    constants_section(r, cfg, false);
    interval_section(r, cfg, false);
    optimize_section(r, cfg, false);
    algebra_section(r);
    sphere_section(r, cfg);
    pde_section(r, cfg);
  } else {
    throw std::invalid_argument("unknown subcommand: " + s);
  }
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Kahler Sobolev constants, symbolic verification and sphere experiments", "ksl"};
  app.set_config("--config", "", "File of key = value lines using the flag names");
  app.add_option("--n", cfg.n, "Complex dimension");
  app.add_option("--q", cfg.q, "Exponent q");
  app.add_option("--q-grid", cfg.q_grid, "q values as start:stop:count or q1,q2,...");
  app.add_option("--k", cfg.k, "k value or 'auto'");
  app.add_option("--lambda1", cfg.lambda1, "First eigenvalue lower bound");
  app.add_option("--lambda", cfg.lambda, "lambda in -box u + lambda u = u^q");
  app.add_option("--L", cfg.L, "Band limit of the sphere discretization");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--out", cfg.out, "Output directory (KSL_OUT overrides)");
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  const char* blurbs[] = {"Sharp constant and reference constants",
                          "Admissible k-interval and thresholds",
                          "Eigenvalue threshold over k",
                          "Exact re-derivation of the coefficient identities",
                          "Spectral checks on the round sphere",
                          "Newton solve of -box u + lambda u = u^q",
                          "Every section in one report"};
  for (std::size_t i = 0; i < std::size(kSubcommands); ++i)
    app.add_subcommand(kSubcommands[i], blurbs[i])->fallthrough();
  app.require_subcommand(1, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (cfg.k != "auto") parse_number(cfg.k);
    if (!cfg.q_grid.empty()) parse_q_grid(cfg.q_grid);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (const char* env = std::getenv("KSL_OUT"); env && *env) cfg.out = env;

  Report rep(cfg.subcommand);
  int code = 0;
  try {
    rep = build_report(cfg);
    code = rep.passed() ? 0 : 1;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    rep = Report(cfg.subcommand);
    echo_config(rep, cfg);
    rep.error(cfg.subcommand, e.what());
    code = 1;
  }

  const std::string ts = report::utc_timestamp();
  const std::string text = cfg.format == "csv" ? rep.to_csv(ts) : rep.to_json(ts);
  out << text;
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  const auto path = std::filesystem::path(cfg.out) / (cfg.subcommand + "." + cfg.format);
  std::ofstream file(path);
  if (!file) {
    err << "cannot write report to " << path.string() << "\n";
    return code == 0 ? 1 : code;
  }
  file << text;
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ksl::cli
