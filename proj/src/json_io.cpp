#include "orbkit/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace orbkit {

using nlohmann::json;

namespace {

double need(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key).get<double>();
}

Vec3 vec3_from(const json& j, const char* key) {
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != 3) throw Error(std::string("field '") + key + "' must be [x,y,z]");
  return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

}  // namespace

json to_json(const CoeSet& c) {
  return {{"type", "coe"}, {"a", c.a}, {"e", c.e},       {"i", c.i},
          {"raan", c.raan}, {"argp", c.argp}, {"nu", c.nu}, {"mu", c.mu}};
}

json to_json(const MeeSet& m) {
  return {{"type", "mee"}, {"p", m.p}, {"e1", m.e1}, {"e2", m.e2},
          {"q1", m.q1},    {"q2", m.q2}, {"l", m.l},  {"mu", m.mu}};
}

json to_json(const MrpMeeSet& m) {
  return {{"type", "mrpmee"}, {"p", m.p},          {"e1", m.e1}, {"e2", m.e2},
          {"sigma1", m.sigma1}, {"sigma2", m.sigma2}, {"l", m.l},   {"mu", m.mu}};
}

json to_json(const CartesianState& s) {
  return {{"type", "cartesian"},
          {"r", {s.r.x, s.r.y, s.r.z}},
          {"v", {s.v.x, s.v.y, s.v.z}},
          {"mu", s.mu}};
}

json to_json(const AnyState& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

CoeSet coe_from_json(const json& j) {
  return {need(j, "a"), need(j, "e"),    need(j, "i"), need(j, "raan"),
          need(j, "argp"), need(j, "nu"), need(j, "mu")};
}

MeeSet mee_from_json(const json& j) {
  return {need(j, "p"), need(j, "e1"), need(j, "e2"), need(j, "q1"),
          need(j, "q2"), need(j, "l"),  need(j, "mu")};
}

MrpMeeSet mrpmee_from_json(const json& j) {
  return {need(j, "p"),      need(j, "e1"), need(j, "e2"), need(j, "sigma1"),
          need(j, "sigma2"), need(j, "l"),  need(j, "mu")};
}

CartesianState cartesian_from_json(const json& j) {
  return {vec3_from(j, "r"), vec3_from(j, "v"), need(j, "mu")};
}

AnyState state_from_json(const json& j, const std::string& kind) {
  if (j.contains("type") && j.at("type").get<std::string>() != kind) {
    throw Error("state 'type' field disagrees with the requested kind '" + kind + "'");
  }
  if (kind == "coe") return coe_from_json(j);
  if (kind == "mee") return mee_from_json(j);
  if (kind == "mrpmee") return mrpmee_from_json(j);
  if (kind == "cartesian") return cartesian_from_json(j);
  throw Error("unknown state kind '" + kind + "'");
}

namespace {

CartesianState to_cartesian_any(const AnyState& in) {
  struct V {
    CartesianState operator()(const CoeSet& c) const { return coe_to_cartesian(c); }
    CartesianState operator()(const MeeSet& m) const { return mee_to_cartesian(m); }
    CartesianState operator()(const MrpMeeSet& m) const { return mrpmee_to_cartesian(m); }
    CartesianState operator()(const CartesianState& s) const { return s; }
  };
  return std::visit(V{}, in);
}

}  // namespace

AnyState convert_state(const AnyState& in, const std::string& to_kind) {
  // Pass-through keeps the exact representation.
  if (to_kind == "coe" && std::holds_alternative<CoeSet>(in)) return in;
  if (to_kind == "mee" && std::holds_alternative<MeeSet>(in)) return in;
  if (to_kind == "mrpmee" && std::holds_alternative<MrpMeeSet>(in)) return in;
  if (to_kind == "cartesian" && std::holds_alternative<CartesianState>(in)) return in;

  // Element-to-element conversions avoid the Cartesian detour where a direct
  // path exists; everything else goes through position/velocity.
  if (to_kind == "mrpmee" && std::holds_alternative<MeeSet>(in)) {
    return mee_to_mrpmee(std::get<MeeSet>(in));
  }
  if (to_kind == "mee" && std::holds_alternative<MrpMeeSet>(in)) {
    return mrpmee_to_mee(std::get<MrpMeeSet>(in));
  }
  if (std::holds_alternative<CoeSet>(in)) {
    const CoeSet& c = std::get<CoeSet>(in);
    if (to_kind == "mee") return coe_to_mee(c);
    if (to_kind == "mrpmee") return coe_to_mrpmee(c);
    if (to_kind == "cartesian") return coe_to_cartesian(c);
  }
  if (to_kind == "coe") {
    if (std::holds_alternative<MeeSet>(in)) return mee_to_coe(std::get<MeeSet>(in)).coe;
    if (std::holds_alternative<MrpMeeSet>(in)) return mrpmee_to_coe(std::get<MrpMeeSet>(in)).coe;
    return cartesian_to_coe(to_cartesian_any(in)).coe;
  }
  const CartesianState s = to_cartesian_any(in);
  if (to_kind == "cartesian") return s;
  if (to_kind == "mee") return cartesian_to_mee(s);
  if (to_kind == "mrpmee") return cartesian_to_mrpmee(s);
  throw Error("unknown state kind '" + to_kind + "'");
}

ProblemConfig problem_from_json(const json& j) {
  ProblemConfig cfg;
  TransferProblem& p = cfg.problem;

  p.mu_km3s2 = need(j, "mu_km3s2");
  const json& b = j.at("boundary");
  json dep_j = b.at("departure_coe");
  json arr_j = b.at("arrival_coe");
  dep_j["mu"] = p.mu_km3s2;
  arr_j["mu"] = p.mu_km3s2;
  const CoeSet dep = coe_from_json(dep_j);
  const CoeSet arr = coe_from_json(arr_j);

  p.x0 = coe_to_mrpmee(dep);
  p.xf_target = coe_to_mrpmee(arr);
  p.t0_s = 0.0;
  p.tf_s = need(j, "epoch_span_days") * 86400.0;

  const json& e = j.at("engine");
  p.engine.thrust_kN = need(e, "thrust_N") * 1e-3;
  p.engine.isp_s = need(e, "isp_s");
  p.engine.m0_kg = need(e, "m0_kg");

  p.units = CanonicalUnits::from_mu(p.mu_km3s2);

  if (j.contains("rho_schedule")) {
    p.rho_schedule = j.at("rho_schedule").get<std::vector<double>>();
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (t.contains("residual_tol")) p.tols.residual_tol = t.at("residual_tol").get<double>();
    if (t.contains("fd_step")) p.tols.fd_step = t.at("fd_step").get<double>();
    if (t.contains("max_newton_iters")) p.tols.max_newton_iters = t.at("max_newton_iters").get<int>();
  }
  if (j.contains("ode")) {
    const json& o = j.at("ode");
    if (o.contains("rel_tol")) p.ode.rel_tol = o.at("rel_tol").get<double>();
    if (o.contains("abs_tol")) p.ode.abs_tol = o.at("abs_tol").get<double>();
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("lam_guess")) {
    const auto v = j.at("lam_guess").get<std::vector<double>>();
    if (v.size() != 7) throw Error("lam_guess must have 7 entries");
    std::array<double, 7> g;
    std::copy(v.begin(), v.end(), g.begin());
    cfg.lam_guess = g;
  }
  if (j.contains("revolutions")) cfg.revolutions = j.at("revolutions").get<int>();

  // Fix the arrival longitude's revolution count.
  int n_rev = cfg.revolutions;
  if (n_rev < 0) {
    const double n0 = std::sqrt(p.mu_km3s2 / std::pow(dep.a, 3));
    const double nf = std::sqrt(p.mu_km3s2 / std::pow(arr.a, 3));
    const double drift = 0.5 * (n0 + nf) * (p.tf_s - p.t0_s);
    n_rev = static_cast<int>(std::lround((p.x0.l + drift - p.xf_target.l) / (2.0 * M_PI)));
    n_rev = std::max(n_rev, 0);
  }
  p.xf_target.l += 2.0 * M_PI * n_rev;
  cfg.revolutions = n_rev;
  return cfg;
}

json solution_to_json(const TransferSolution& sol) {
  json per_rho = json::array();
  for (const RhoStageReport& r : sol.per_rho) {
    per_rho.push_back({{"rho", r.rho},
                       {"iterations", r.iterations},
                       {"fevals", r.fevals},
                       {"residual_norm", r.residual_norm},
                       {"converged", r.converged}});
  }
  return {{"converged", sol.converged},
          {"lam0", {sol.lam0[0], sol.lam0[1], sol.lam0[2], sol.lam0[3], sol.lam0[4], sol.lam0[5]}},
          {"lam_m0", sol.lam_m0},
          {"final_mass_kg", sol.final_mass_kg},
          {"residual_norm", sol.residual_norm},
          {"iterations", sol.iterations_total},
          {"fevals", sol.fevals_total},
          {"per_rho", per_rho}};
}

void write_solution_csv(std::ostream& os, const TransferSolution& sol, const TransferProblem& p) {
  const CanonicalProblem cp = make_canonical(p);
  const double rho = p.rho_schedule.empty() ? 1e-4 : p.rho_schedule.back();
  const char* g1 = (p.set == ElementSetKind::MrpMee) ? "sigma1" : "q1";
  const char* g2 = (p.set == ElementSetKind::MrpMee) ? "sigma2" : "q2";
  os << "# orbkit-solution-csv v1, canonical units, du_km=" << p.units.du_km
     << ", tu_s=" << p.units.tu_s << ", m_unit_kg=" << p.engine.m0_kg << "\n";
  os << "t,p,e1,e2," << g1 << "," << g2
     << ",l,m,lam1,lam2,lam3,lam4,lam5,lam6,lam_m,delta,alpha1,alpha2,alpha3,S_tilde,H\n";
  os.precision(17);
  for (std::size_t k = 0; k < sol.trajectory.times.size(); ++k) {
    const auto& y = sol.trajectory.states[k];
    Vec6 x, lam;
    std::copy_n(y.begin(), 6, x.begin());
    std::copy_n(y.begin() + 7, 6, lam.begin());
    const double m = y[6], lam_m = y[13];
    const ControlOutput u = control_law(x, m, lam, lam_m, rho, cp.c, cp.set);
    const double amag = cp.thrust * u.delta / m;
    const LvlhAccel a{amag * u.alpha_hat.x, amag * u.alpha_hat.y, amag * u.alpha_hat.z};
    const double H = hamiltonian(x, m, lam, lam_m, a, cp.c, cp.set);
    os << sol.trajectory.times[k];
    for (double v : x) os << ',' << v;
    os << ',' << m;
    for (double v : lam) os << ',' << v;
    os << ',' << lam_m << ',' << u.delta << ',' << u.alpha_hat.x << ',' << u.alpha_hat.y << ','
       << u.alpha_hat.z << ',' << u.s_tilde << ',' << H << "\n";
  }
}

void write_propagation_csv(std::ostream& os, const Trajectory& traj, const std::string& set_kind,
                           double mu, double du_km, double tu_s) {
  os << "# orbkit-propagation-csv v1, canonical units, du_km=" << du_km << ", tu_s=" << tu_s
     << "\n";
  const char* names = nullptr;
  if (set_kind == "coe") names = "a,e,i,raan,argp,nu";
  else if (set_kind == "mee") names = "p,e1,e2,q1,q2,l";
  else if (set_kind == "mrpmee") names = "p,e1,e2,sigma1,sigma2,l";
  else throw Error("unknown element set '" + set_kind + "'");
  os << "t," << names << ",rx,ry,rz,vx,vy,vz\n";
  os.precision(17);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const auto& y = traj.states[k];
    CartesianState s{};
    if (set_kind == "coe") {
      s = coe_to_cartesian({y[0], y[1], y[2], y[3], y[4], y[5], mu});
    } else if (set_kind == "mee") {
      s = mee_to_cartesian({y[0], y[1], y[2], y[3], y[4], y[5], mu});
    } else {
      s = mrpmee_to_cartesian({y[0], y[1], y[2], y[3], y[4], y[5], mu});
    }
    os << traj.times[k];
    for (int i = 0; i < 6; ++i) os << ',' << y[i];
    os << ',' << s.r.x << ',' << s.r.y << ',' << s.r.z << ',' << s.v.x << ',' << s.v.y << ','
       << s.v.z << "\n";
  }
}

}  // namespace orbkit
