#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "orbkit/dynamics.hpp"
#include "orbkit/json_io.hpp"
#include "orbkit/optctrl.hpp"
#include "orbkit/propagate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitSolver = 4;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  return j;
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
}

std::vector<double> parse_schedule(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

int cmd_convert(const std::string& input, const std::string& from, const std::string& to,
                const std::string& out_path) {
  nlohmann::json j;
  try {
    j = read_json_file(input);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    const orbkit::AnyState in = orbkit::state_from_json(j, from);
    const orbkit::AnyState result = orbkit::convert_state(in, to);
    write_text(out_path, orbkit::to_json(result).dump(2) + "\n");
    return kExitOk;
  } catch (const orbkit::Error& e) {
    std::cerr << "conversion error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

int cmd_propagate(const std::string& input, const std::string& out_path, double rtol_override,
                  double atol_override) {
  nlohmann::json j;
  std::string set;
  orbkit::AnyState state{orbkit::CoeSet{}};
  double mu = 0.0;
  double duration_s = 0.0;
  double orbits = 0.0;
  orbkit::Vec3 thrust{0.0, 0.0, 0.0};
  int samples = 200;
  orbkit::IntegratorConfig cfg;
  try {
    j = read_json_file(input);
    set = j.at("set").get<std::string>();
    const std::string state_kind =
        j.contains("state_kind") ? j.at("state_kind").get<std::string>() : set;
    state = orbkit::state_from_json(j.at("state"), state_kind);
    if (j.contains("duration_s")) duration_s = j.at("duration_s").get<double>();
    if (j.contains("orbits")) orbits = j.at("orbits").get<double>();
    if (j.contains("thrust_lvlh_km_s2")) {
      const auto v = j.at("thrust_lvlh_km_s2").get<std::vector<double>>();
      if (v.size() != 3) throw std::runtime_error("thrust_lvlh_km_s2 must have 3 entries");
      thrust = {v[0], v[1], v[2]};
    }
    if (j.contains("samples")) samples = j.at("samples").get<int>();
    if (j.contains("rel_tol")) cfg.rel_tol = j.at("rel_tol").get<double>();
    if (j.contains("abs_tol")) cfg.abs_tol = j.at("abs_tol").get<double>();
    if (rtol_override > 0.0) cfg.rel_tol = rtol_override;
    if (atol_override > 0.0) cfg.abs_tol = atol_override;
    if (duration_s <= 0.0 && orbits <= 0.0) {
      throw std::runtime_error("one of duration_s or orbits must be positive");
    }
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }

  double offending_time = 0.0;
  try {
    const orbkit::AnyState in_set = orbkit::convert_state(state, set);
    std::array<double, 6> y0;
    double a_km = 0.0;  // semi-major axis, fixes the canonical length unit
    if (set == "coe") {
      const auto& c = std::get<orbkit::CoeSet>(in_set);
      mu = c.mu;
      a_km = c.a;
      y0 = {c.a, c.e, c.i, c.raan, c.argp, c.nu};
      y0[0] /= a_km;
    } else if (set == "mee") {
      const auto& m = std::get<orbkit::MeeSet>(in_set);
      mu = m.mu;
      a_km = m.p / (1.0 - m.e1 * m.e1 - m.e2 * m.e2);
      y0 = {m.p / a_km, m.e1, m.e2, m.q1, m.q2, m.l};
    } else if (set == "mrpmee") {
      const auto& m = std::get<orbkit::MrpMeeSet>(in_set);
      mu = m.mu;
      a_km = m.p / (1.0 - m.e1 * m.e1 - m.e2 * m.e2);
      y0 = {m.p / a_km, m.e1, m.e2, m.sigma1, m.sigma2, m.l};
    } else {
      std::cerr << "input error: unknown set '" << set << "'\n";
      return kExitInput;
    }

    const double du = a_km;
    const double tu = std::sqrt(du * du * du / mu);
    const double tf = duration_s > 0.0 ? duration_s / tu : orbits * 2.0 * M_PI;
    const orbkit::LvlhAccel a_c{thrust.x / (du / (tu * tu)), thrust.y / (du / (tu * tu)),
                                thrust.z / (du / (tu * tu))};

    const orbkit::OdeRhs rhs = [&](double t, std::span<const double> y,
                                   std::span<double> dydt) {
      offending_time = t;
      orbkit::ElementRates r;
      if (set == "coe") {
        r = orbkit::coe_rates({y[0], y[1], y[2], y[3], y[4], y[5], 1.0}, a_c,
                              orbkit::AnomalyChoice::TrueAnomaly);
      } else if (set == "mee") {
        r = orbkit::mee_rates({y[0], y[1], y[2], y[3], y[4], y[5], 1.0}, a_c);
      } else {
        r = orbkit::mrpmee_rates({y[0], y[1], y[2], y[3], y[4], y[5], 1.0}, a_c);
      }
      std::copy(r.begin(), r.end(), dydt.begin());
    };

    const orbkit::Trajectory traj = orbkit::integrate_sampled(rhs, y0, 0.0, tf, samples, cfg);
    std::ostringstream os;
    orbkit::write_propagation_csv(os, traj, set, 1.0, du, tu);
    write_text(out_path, os.str());
    return kExitOk;
  } catch (const orbkit::Error& e) {
    std::cerr << "domain error at t = " << offending_time << " (canonical): " << e.what()
              << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

int cmd_solve(const std::string& input, const std::string& set, const std::string& out_path,
              const std::string& traj_path, const std::string& rho_csv, double rtol, double atol,
              std::optional<std::uint64_t> seed_flag) {
  orbkit::ProblemConfig cfg;
  try {
    cfg = orbkit::problem_from_json(read_json_file(input));
    if (set == "mee") cfg.problem.set = orbkit::ElementSetKind::CrpMee;
    else if (set == "mrpmee") cfg.problem.set = orbkit::ElementSetKind::MrpMee;
    else if (!set.empty()) throw std::runtime_error("unknown set '" + set + "'");
    if (!rho_csv.empty()) cfg.problem.rho_schedule = parse_schedule(rho_csv);
    if (rtol > 0.0) cfg.problem.ode.rel_tol = rtol;
    if (atol > 0.0) cfg.problem.ode.abs_tol = atol;
    if (seed_flag) cfg.seed = *seed_flag;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    const std::array<double, 7> guess =
        cfg.lam_guess ? *cfg.lam_guess : orbkit::random_costate_guess(cfg.seed, 0);
    const orbkit::TransferSolution sol = orbkit::try_solve_tpbvp(cfg.problem, guess);
    write_text(out_path, orbkit::solution_to_json(sol).dump(2) + "\n");
    if (!traj_path.empty()) {
      std::ostringstream os;
      orbkit::write_solution_csv(os, sol, cfg.problem);
      write_text(traj_path, os.str());
    }
    return sol.converged ? kExitOk : kExitSolver;
  } catch (const orbkit::Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
}

int cmd_stats(const std::string& input, const std::string& set, int trials,
              std::optional<std::uint64_t> seed_flag, bool no_time) {
  orbkit::ProblemConfig cfg;
  try {
    cfg = orbkit::problem_from_json(read_json_file(input));
    if (seed_flag) cfg.seed = *seed_flag;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  std::vector<std::pair<std::string, orbkit::ElementSetKind>> runs;
  if (set.empty() || set == "mee") runs.emplace_back("mee", orbkit::ElementSetKind::CrpMee);
  if (set.empty() || set == "mrpmee") runs.emplace_back("mrpmee", orbkit::ElementSetKind::MrpMee);
  if (runs.empty()) {
    std::cerr << "input error: unknown set '" << set << "'\n";
    return kExitInput;
  }

  std::printf("%-8s %12s %12s %12s %9s\n", "set", "mean_fevals", "mean_iters", "mean_time_s",
              "success");
  for (const auto& [name, kind] : runs) {
    orbkit::TransferProblem p = cfg.problem;
    p.set = kind;
    const orbkit::MultistartStats st = orbkit::multistart_stats(p, trials, cfg.seed);
    if (no_time) {
      std::printf("%-8s %12.1f %12.1f %12s %8.1f%%\n", name.c_str(), st.mean_fevals,
                  st.mean_iterations, "-", st.success_rate);
    } else {
      std::printf("%-8s %12.1f %12.1f %12.3f %8.1f%%\n", name.c_str(), st.mean_fevals,
                  st.mean_iterations, st.mean_time_s, st.success_rate);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbital element sets, attitude kinematics, and fuel-optimal low-thrust transfers"};
  app.require_subcommand(1);

  std::string input, out_path, traj_path, from, to, set, rho_csv;
  double rtol = 0.0, atol = 0.0;
  int trials = 50;
  bool no_time = false;
  std::optional<std::uint64_t> seed_flag;
  std::uint64_t seed_value = 0;

  auto* conv = app.add_subcommand("convert", "convert an element-set/state JSON file");
  conv->add_option("input", input, "input JSON path")->required();
  conv->add_option("--from", from, "input representation: coe|mee|mrpmee|cartesian")->required();
  conv->add_option("--to", to, "output representation")->required();
  conv->add_option("--out", out_path, "output path (default stdout)");

  auto* prop = app.add_subcommand("propagate", "propagate an element set, emit CSV");
  prop->add_option("input", input, "config JSON path")->required();
  prop->add_option("--out", out_path, "output CSV path (default stdout)");
  prop->add_option("--rtol", rtol, "integrator relative tolerance override");
  prop->add_option("--atol", atol, "integrator absolute tolerance override");

  auto* solve = app.add_subcommand("solve", "solve a fuel-optimal transfer problem");
  solve->add_option("input", input, "problem JSON path")->required();
  solve->add_option("--set", set, "element set: mee|mrpmee (default from file / mrpmee)");
  solve->add_option("--out", out_path, "solution JSON path (default stdout)");
  solve->add_option("--traj", traj_path, "also write the trajectory CSV here");
  solve->add_option("--rho-schedule", rho_csv, "comma-separated smoothing schedule");
  solve->add_option("--rtol", rtol, "integrator relative tolerance override");
  solve->add_option("--atol", atol, "integrator absolute tolerance override");
  auto* seed_opt_solve = solve->add_option("--seed", seed_value, "random guess seed");

  auto* stats = app.add_subcommand("stats", "random-start convergence statistics");
  stats->add_option("input", input, "problem JSON path")->required();
  stats->add_option("--set", set, "element set: mee|mrpmee (default: both)");
  stats->add_option("--trials", trials, "number of random starts");
  auto* seed_opt_stats = stats->add_option("--seed", seed_value, "random seed");
  stats->add_flag("--no-time", no_time, "suppress wall-time column (deterministic output)");

  CLI11_PARSE(app, argc, argv);

  if (seed_opt_solve->count() || seed_opt_stats->count()) seed_flag = seed_value;

  if (conv->parsed()) return cmd_convert(input, from, to, out_path);
  if (prop->parsed()) return cmd_propagate(input, out_path, rtol, atol);
  if (solve->parsed()) return cmd_solve(input, set, out_path, traj_path, rho_csv, rtol, atol, seed_flag);
  if (stats->parsed()) return cmd_stats(input, set, trials, seed_flag, no_time);
  return kExitInput;
}
