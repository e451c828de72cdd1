#include "orbkit/optctrl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbkit {

namespace {

constexpr int kTrajSamples = 2000;

BMatrix b_of(const Vec6& x, ElementSetKind set, double mu) {
  if (set == ElementSetKind::MrpMee) {
    return b_matrix(MrpMeeSet{x[0], x[1], x[2], x[3], x[4], x[5], mu});
  }
  return b_matrix_mee(MeeSet{x[0], x[1], x[2], x[3], x[4], x[5], mu});
}

double w_of(const Vec6& x) {
  return 1.0 + x[1] * std::cos(x[5]) + x[2] * std::sin(x[5]);
}

double rh_of(const Vec6& x, double mu) { return std::sqrt(x[0] / mu) / w_of(x); }

double k6_of(const Vec6& x, double mu) {
  const double w = w_of(x);
  return std::sqrt(mu / (x[0] * x[0] * x[0])) * w * w;
}

}  // namespace

CanonicalUnits CanonicalUnits::from_mu(double mu_km3s2, double du_km) {
  CanonicalUnits u;
  u.du_km = du_km;
  u.tu_s = std::sqrt(du_km * du_km * du_km / mu_km3s2);
  u.mu_canonical = 1.0;
  return u;
}

std::vector<double> default_rho_schedule() {
  return {1.0, 0.5, 0.25, 0.1, 0.05, 0.01, 5e-3, 1e-3, 5e-4, 1e-4};
}

CanonicalProblem make_canonical(const TransferProblem& p) {
  CanonicalProblem cp;
  cp.x0 = {p.x0.p / p.units.du_km, p.x0.e1, p.x0.e2, p.x0.sigma1, p.x0.sigma2, p.x0.l};
  cp.xf = {p.xf_target.p / p.units.du_km, p.xf_target.e1, p.xf_target.e2, p.xf_target.sigma1,
           p.xf_target.sigma2, p.xf_target.l};
  if (p.set == ElementSetKind::CrpMee) {
    // Reinterpret the two attitude slots as the CRPs of the same orbits.
    const auto to_crp = [](double s1, double s2) {
      const double s2n = s1 * s1 + s2 * s2;
      return std::array<double, 2>{2.0 * s1 / (1.0 - s2n), 2.0 * s2 / (1.0 - s2n)};
    };
    const auto q0 = to_crp(p.x0.sigma1, p.x0.sigma2);
    const auto qf = to_crp(p.xf_target.sigma1, p.xf_target.sigma2);
    cp.x0[3] = q0[0];
    cp.x0[4] = q0[1];
    cp.xf[3] = qf[0];
    cp.xf[4] = qf[1];
  }
  cp.t0 = 0.0;
  cp.tf = (p.tf_s - p.t0_s) / p.units.tu_s;
  cp.thrust = p.engine.thrust_kN / (p.engine.m0_kg * p.units.accel_kms2());
  cp.c = p.engine.exhaust_velocity_kms() / p.units.vu_kms();
  cp.set = p.set;
  cp.ode = p.ode;
  cp.tols = p.tols;
  return cp;
}

ControlOutput control_law(const Vec6& x, double m, const Vec6& lam, double lam_m, double rho,
                          double c, ElementSetKind set, double mu) {
  const BMatrix B = b_of(x, set, mu);
  Vec3 primer{0.0, 0.0, 0.0};
  for (int i = 0; i < 6; ++i) {
    primer.x += B.rows[i][0] * lam[i];
    primer.y += B.rows[i][1] * lam[i];
    primer.z += B.rows[i][2] * lam[i];
  }
  const double np = primer.norm();
  ControlOutput out;
  out.s_tilde = rh_of(x, mu) * np * c / m + lam_m - 1.0;
  out.delta = 0.5 * (1.0 + std::tanh(out.s_tilde / rho));
  if (np < 1e-14) {
    out.alpha_hat = {0.0, 0.0, 0.0};
    out.zero_primer = true;
  } else {
    out.alpha_hat = primer / -np;
  }
  return out;
}

double hamiltonian(const Vec6& x, double m, const Vec6& lam, double lam_m, const LvlhAccel& a,
                   double c, ElementSetKind set, double mu) {
  const BMatrix B = b_of(x, set, mu);
  const double rh = rh_of(x, mu);
  const double amag = std::sqrt(a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3);
  double h = lam[5] * k6_of(x, mu);
  for (int i = 0; i < 6; ++i) {
    h += lam[i] * rh * (B.rows[i][0] * a.a1 + B.rows[i][1] * a.a2 + B.rows[i][2] * a.a3);
  }
  h -= (lam_m - 1.0) * m * amag / c;
  return h;
}

Vec6 rh_gradient(const Vec6& x, double mu) {
  const double sl = std::sin(x[5]), cl = std::cos(x[5]);
  const double w = 1.0 + x[1] * cl + x[2] * sl;
  const double rh = std::sqrt(x[0] / mu) / w;
  const double esv = x[1] * sl - x[2] * cl;
  return {rh / (2.0 * x[0]), -rh * cl / w, -rh * sl / w, 0.0, 0.0, rh * esv / w};
}

Vec6 k6_gradient(const Vec6& x, double mu) {
  const double sl = std::sin(x[5]), cl = std::cos(x[5]);
  const double w = 1.0 + x[1] * cl + x[2] * sl;
  const double k6 = std::sqrt(mu / (x[0] * x[0] * x[0])) * w * w;
  const double esv = x[1] * sl - x[2] * cl;
  return {-1.5 * k6 / x[0], 2.0 * k6 * cl / w, 2.0 * k6 * sl / w, 0.0, 0.0, -2.0 * k6 * esv / w};
}

BGradients b_gradients(const Vec6& x, ElementSetKind set) {
  const double sl = std::sin(x[5]), cl = std::cos(x[5]);
  const double w = 1.0 + x[1] * cl + x[2] * sl;
  const double esv = x[1] * sl - x[2] * cl;

  BGradients d{};  // zero-initialized; only the structural nonzeros are set

  // b1 = (0, 2p, 0)
  d[0][1][0] = 2.0;

  double b4, b5, b6;
  double db4_d1, db4_d2, db4_dl, db5_d1, db5_d2, db5_dl, db6_d1, db6_d2, db6_dl;

  if (set == ElementSetKind::MrpMee) {
    const double s1 = x[3], s2 = x[4];
    const double ss = s1 * s1 + s2 * s2;
    if (ss >= 1.0 - 1e-9) throw KinematicSingularity();
    const double om = 1.0 - ss, op = 1.0 + ss;
    const double f = op / om;
    b6 = (2.0 / om) * (s1 * sl - s2 * cl);
    b4 = 0.25 * op * (cl - s2 * b6);
    b5 = 0.25 * op * (sl + s1 * b6);
    db6_d1 = (2.0 * s1 / om) * b6 + 2.0 * sl / om;
    db6_d2 = (2.0 * s2 / om) * b6 - 2.0 * cl / om;
    db6_dl = (2.0 / om) * (s1 * cl + s2 * sl);
    db4_d1 = (4.0 * s1 / (om * op)) * b4 - 0.5 * f * (s1 * cl + s2 * sl);
    db4_d2 = (4.0 * s2 / (om * op)) * b4 + 0.5 * f * (s2 * cl - s1 * sl);
    db4_dl = -0.25 * op * (sl + s2 * db6_dl);
    db5_d1 = (4.0 * s1 / (om * op)) * b5 + 0.5 * f * (s1 * sl - s2 * cl);
    db5_d2 = (4.0 * s2 / (om * op)) * b5 - 0.5 * f * (s2 * sl + s1 * cl);
    db5_dl = 0.25 * op * (cl + s1 * db6_dl);
  } else {
    const double q1 = x[3], q2 = x[4];
    const double qq = q1 * q1 + q2 * q2;
    b6 = q1 * sl - q2 * cl;
    b4 = 0.5 * (1.0 + qq) * cl;
    b5 = 0.5 * (1.0 + qq) * sl;
    db6_d1 = sl;
    db6_d2 = -cl;
    db6_dl = q1 * cl + q2 * sl;
    db4_d1 = q1 * cl;
    db4_d2 = q2 * cl;
    db4_dl = -0.5 * (1.0 + qq) * sl;
    db5_d1 = q1 * sl;
    db5_d2 = q2 * sl;
    db5_dl = 0.5 * (1.0 + qq) * cl;
  }
  (void)b4;
  (void)b5;

  // b2 = (w sin l, (w+1) cos l + e1, -e2 b6)
  d[1][0][1] = cl * sl;
  d[1][0][2] = sl * sl;
  d[1][0][5] = -esv * sl + w * cl;
  d[1][1][1] = 1.0 + cl * cl;
  d[1][1][2] = cl * sl;
  d[1][1][5] = -(esv * cl + (w + 1.0) * sl);
  d[1][2][2] = -b6;
  d[1][2][3] = -x[2] * db6_d1;
  d[1][2][4] = -x[2] * db6_d2;
  d[1][2][5] = -x[2] * db6_dl;

  // b3 = (-w cos l, (w+1) sin l + e2, e1 b6)
  d[2][0][1] = -cl * cl;
  d[2][0][2] = -cl * sl;
  d[2][0][5] = esv * cl + w * sl;
  d[2][1][1] = cl * sl;
  d[2][1][2] = 1.0 + sl * sl;
  d[2][1][5] = -esv * sl + (w + 1.0) * cl;
  d[2][2][1] = b6;
  d[2][2][3] = x[1] * db6_d1;
  d[2][2][4] = x[1] * db6_d2;
  d[2][2][5] = x[1] * db6_dl;

  d[3][2][3] = db4_d1;
  d[3][2][4] = db4_d2;
  d[3][2][5] = db4_dl;
  d[4][2][3] = db5_d1;
  d[4][2][4] = db5_d2;
  d[4][2][5] = db5_dl;
  d[5][2][3] = db6_d1;
  d[5][2][4] = db6_d2;
  d[5][2][5] = db6_dl;
  return d;
}

void costate_rates(const Vec6& x, double m, const Vec6& lam, double lam_m, const LvlhAccel& a,
                   double c, ElementSetKind set, Vec6& lam_dot, double& lam_m_dot, double mu) {
  (void)m;
  const BMatrix B = b_of(x, set, mu);
  const BGradients dB = b_gradients(x, set);
  const Vec6 grh = rh_gradient(x, mu);
  const Vec6 gk6 = k6_gradient(x, mu);
  const double rh = rh_of(x, mu);
  const std::array<double, 3> av{a.a1, a.a2, a.a3};

  std::array<double, 6> b_dot_a;
  for (int i = 0; i < 6; ++i) {
    b_dot_a[i] = B.rows[i][0] * av[0] + B.rows[i][1] * av[1] + B.rows[i][2] * av[2];
  }

  for (int k = 0; k < 6; ++k) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double db_ik_dot_a =
          dB[i][0][k] * av[0] + dB[i][1][k] * av[1] + dB[i][2][k] * av[2];
      s += lam[i] * (b_dot_a[i] * grh[k] + rh * db_ik_dot_a);
    }
    lam_dot[k] = -s - lam[5] * gk6[k];
  }
  const double amag = std::sqrt(a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3);
  lam_m_dot = (lam_m - 1.0) * amag / c;
}

void augmented_rhs(double t, std::span<const double> y, std::span<double> dydt, double rho,
                   const CanonicalProblem& cp) {
  (void)t;
  Vec6 x, lam;
  std::copy_n(y.begin(), 6, x.begin());
  const double m = y[6];
  std::copy_n(y.begin() + 7, 6, lam.begin());
  const double lam_m = y[13];

  if (!(m > 0.0) || !(x[0] > 0.0)) throw IntegrationFailed("state left the physical domain");

  const ControlOutput u = control_law(x, m, lam, lam_m, rho, cp.c, cp.set);
  const double amag = cp.thrust * u.delta / m;
  const LvlhAccel a{amag * u.alpha_hat.x, amag * u.alpha_hat.y, amag * u.alpha_hat.z};

  const BMatrix B = b_of(x, cp.set, 1.0);
  const double rh = rh_of(x, 1.0);
  const double k6 = k6_of(x, 1.0);
  for (int i = 0; i < 6; ++i) {
    dydt[i] = rh * (B.rows[i][0] * a.a1 + B.rows[i][1] * a.a2 + B.rows[i][2] * a.a3);
  }
  dydt[5] += k6;

  const double anorm = std::sqrt(a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3);
  dydt[6] = -m * anorm / cp.c;

  Vec6 lam_dot;
  double lam_m_dot;
  costate_rates(x, m, lam, lam_m, a, cp.c, cp.set, lam_dot, lam_m_dot);
  std::copy(lam_dot.begin(), lam_dot.end(), dydt.begin() + 7);
  dydt[13] = lam_m_dot;
}

std::array<double, 7> shoot(const CanonicalProblem& cp, const Vec6& lam0, double lam_m0,
                            double rho, IntegratorStats* stats) {
  std::array<double, 14> y0;
  std::copy(cp.x0.begin(), cp.x0.end(), y0.begin());
  y0[6] = 1.0;
  std::copy(lam0.begin(), lam0.end(), y0.begin() + 7);
  y0[13] = lam_m0;

  Trajectory traj;
  try {
    traj = integrate(
        [&](double t, std::span<const double> y, std::span<double> dydt) {
          augmented_rhs(t, y, dydt, rho, cp);
        },
        y0, cp.t0, cp.tf, cp.ode);
  } catch (const Error& e) {
    throw IntegrationFailed(std::string("shooting integration failed: ") + e.what());
  }
  if (stats) {
    stats->steps_accepted += traj.stats.steps_accepted;
    stats->steps_rejected += traj.stats.steps_rejected;
    stats->rhs_evals += traj.stats.rhs_evals;
  }
  const auto& yf = traj.back_state();
  std::array<double, 7> r;
  for (int i = 0; i < 6; ++i) r[i] = yf[i] - cp.xf[i];
  r[6] = yf[13];
  return r;
}

namespace {

double norm_inf(const std::array<double, 7>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm_2(const std::array<double, 7>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Solve the 7x7 system in place by Gaussian elimination with partial
/// pivoting. Throws JacobianSingular.
std::array<double, 7> lu_solve7(std::array<std::array<double, 7>, 7> A, std::array<double, 7> b) {
  constexpr int n = 7;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(A[i][k]) > std::abs(A[piv][k])) piv = i;
    }
    if (std::abs(A[piv][k]) < 1e-300) throw JacobianSingular();
    std::swap(A[k], A[piv]);
    std::swap(b[k], b[piv]);
    for (int i = k + 1; i < n; ++i) {
      const double f = A[i][k] / A[k][k];
      A[i][k] = 0.0;
      for (int j = k + 1; j < n; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  std::array<double, 7> x{};
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A[i][j] * x[j];
    x[i] = s / A[i][i];
  }
  return x;
}

struct NewtonResult {
  std::array<double, 7> unknowns;
  double residual_norm;
  int iterations;
  long fevals;
  bool converged;
};

NewtonResult newton_stage(const CanonicalProblem& cp, double rho, std::array<double, 7> u,
                          const SolverTols& tols) {
  NewtonResult out{u, std::numeric_limits<double>::infinity(), 0, 0, false};

  auto residual_of = [&](const std::array<double, 7>& v) {
    Vec6 lam;
    std::copy_n(v.begin(), 6, lam.begin());
    ++out.fevals;
    return shoot(cp, lam, v[6], rho);
  };

  std::array<double, 7> r;
  try {
    r = residual_of(u);
  } catch (const Error&) {
    return out;  // even the starting point fails to integrate
  }
  double rn2 = norm_2(r);
  out.residual_norm = norm_inf(r);

  for (int iter = 0; iter < tols.max_newton_iters; ++iter) {
    if (norm_inf(r) < tols.residual_tol) {
      out.unknowns = u;
      out.iterations = iter;
      out.residual_norm = norm_inf(r);
      out.converged = true;
      return out;
    }

    // Central finite-difference Jacobian, column per unknown.
    std::array<std::array<double, 7>, 7> J;
    bool jac_ok = true;
    for (int j = 0; j < 7 && jac_ok; ++j) {
      std::array<double, 7> up = u, um = u;
      up[j] += tols.fd_step;
      um[j] -= tols.fd_step;
      try {
        const auto rp = residual_of(up);
        const auto rm = residual_of(um);
        for (int i = 0; i < 7; ++i) J[i][j] = (rp[i] - rm[i]) / (2.0 * tols.fd_step);
      } catch (const Error&) {
        jac_ok = false;
      }
    }
    if (!jac_ok) break;

    std::array<double, 7> rhs;
    for (int i = 0; i < 7; ++i) rhs[i] = -r[i];
    std::array<double, 7> d;
    try {
      d = lu_solve7(J, rhs);
    } catch (const JacobianSingular&) {
      break;
    }

    // Cap absurd steps so the line search starts from sane territory.
    double dmax = 0.0;
    for (double v : d) dmax = std::max(dmax, std::abs(v));
    if (dmax > 1e3) {
      for (double& v : d) v *= 1e3 / dmax;
    }

    bool accepted = false;
    double alpha = 1.0;
    for (int ls = 0; ls < 20; ++ls) {
      std::array<double, 7> u_try = u;
      for (int i = 0; i < 7; ++i) u_try[i] += alpha * d[i];
      std::array<double, 7> r_try;
      try {
        r_try = residual_of(u_try);
      } catch (const Error&) {
        alpha *= 0.5;
        continue;
      }
      const double rn2_try = norm_2(r_try);
      if (rn2_try < rn2 * (1.0 - 1e-4 * alpha) || norm_inf(r_try) < tols.residual_tol) {
        u = u_try;
        r = r_try;
        rn2 = rn2_try;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    out.iterations = iter + 1;
    out.unknowns = u;
    out.residual_norm = norm_inf(r);
    if (!accepted) break;  // stalled
  }

  if (norm_inf(r) < tols.residual_tol) {
    out.converged = true;
    out.residual_norm = norm_inf(r);
    out.unknowns = u;
  }
  return out;
}

}  // namespace

TransferSolution try_solve_tpbvp(const TransferProblem& p,
                                 const std::array<double, 7>& lam_guess) {
  const CanonicalProblem cp = make_canonical(p);
  TransferSolution sol;
  std::array<double, 7> u = lam_guess;
  bool all_ok = true;

  // A stage that stalls close to the boundary still warm-starts the next
  // (sharper) one, which often polishes it off; only the final stage decides
  // success. A stall far from the boundary ends the attempt.
  for (double rho : p.rho_schedule) {
    const NewtonResult nr = newton_stage(cp, rho, u, p.tols);
    sol.per_rho.push_back({rho, nr.iterations, nr.fevals, nr.residual_norm, nr.converged});
    sol.iterations_total += nr.iterations;
    sol.fevals_total += nr.fevals;
    u = nr.unknowns;
    all_ok = nr.converged;
    if (!nr.converged && !(nr.residual_norm < 1e-3)) break;
  }

  std::copy_n(u.begin(), 6, sol.lam0.begin());
  sol.lam_m0 = u[6];
  sol.converged = all_ok;
  sol.residual_norm = sol.per_rho.empty() ? std::numeric_limits<double>::infinity()
                                          : sol.per_rho.back().residual_norm;

  // Final trajectory on a uniform grid at the last attempted rho.
  const double rho_final = sol.per_rho.empty() ? p.rho_schedule.back() : sol.per_rho.back().rho;
  std::array<double, 14> y0;
  std::copy(cp.x0.begin(), cp.x0.end(), y0.begin());
  y0[6] = 1.0;
  std::copy_n(u.begin(), 6, y0.begin() + 7);
  y0[13] = u[6];
  try {
    sol.trajectory = integrate_sampled(
        [&](double t, std::span<const double> y, std::span<double> dydt) {
          augmented_rhs(t, y, dydt, rho_final, cp);
        },
        y0, cp.t0, cp.tf, kTrajSamples, cp.ode);
    sol.final_mass_kg = sol.trajectory.back_state()[6] * p.engine.m0_kg;
  } catch (const Error&) {
    sol.final_mass_kg = std::numeric_limits<double>::quiet_NaN();
  }
  return sol;
}

TransferSolution solve_tpbvp(const TransferProblem& p, const std::array<double, 7>& lam_guess) {
  TransferSolution sol = try_solve_tpbvp(p, lam_guess);
  if (!sol.converged) {
    const double rho = sol.per_rho.empty() ? p.rho_schedule.front() : sol.per_rho.back().rho;
    throw NewtonStalled(rho, sol.residual_norm);
  }
  return sol;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int resolve_threads(int max_threads) {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (max_threads > 0) n = std::min(n, max_threads);
  if (const char* env = std::getenv("ORBKIT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(n, 1);
}

}  // namespace

std::array<double, 7> random_costate_guess(std::uint64_t seed, int trial_index) {
  std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(trial_index + 1));
  std::array<double, 7> g;
  for (double& v : g) {
    const double u01 = static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
    v = 2.0 * u01 - 1.0;
  }
  return g;
}

MultistartStats multistart_stats(const TransferProblem& p, int trials, std::uint64_t seed,
                                 int max_threads, bool stop_after_first_success) {
  MultistartStats stats;
  stats.trials = trials;
  stats.records.resize(trials);
  const int nthreads = resolve_threads(max_threads);

  auto run_trial = [&](int idx) {
    TrialRecord rec;
    rec.index = idx;
    rec.guess = random_costate_guess(seed, idx);
    const auto tic = std::chrono::steady_clock::now();
    const TransferSolution sol = try_solve_tpbvp(p, rec.guess);
    const auto toc = std::chrono::steady_clock::now();
    rec.success = sol.converged;
    rec.iterations = sol.iterations_total;
    rec.fevals = sol.fevals_total;
    rec.residual = sol.residual_norm;
    rec.seconds = std::chrono::duration<double>(toc - tic).count();
    stats.records[idx] = rec;
  };

  if (stop_after_first_success) {
    // Chunked scan in index order so the stopping point is deterministic.
    int done = 0;
    while (done < trials) {
      const int hi = std::min(trials, done + nthreads);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nthreads) schedule(dynamic)
#endif
      for (int i = done; i < hi; ++i) run_trial(i);
      bool hit = false;
      for (int i = done; i < hi; ++i) {
        if (stats.records[i].success) {
          hit = true;
          break;
        }
      }
      done = hi;
      if (hit) break;
    }
    stats.records.resize(done);
    stats.trials = done;
  } else {
#ifdef _OPENMP
#pragma omp parallel for num_threads(nthreads) schedule(dynamic)
#endif
    for (int i = 0; i < trials; ++i) run_trial(i);
  }

  long it_sum = 0, fe_sum = 0;
  double t_sum = 0.0;
  for (const TrialRecord& r : stats.records) {
    if (!r.success) continue;
    ++stats.successes;
    it_sum += r.iterations;
    fe_sum += r.fevals;
    t_sum += r.seconds;
  }
  if (stats.successes > 0) {
    stats.mean_iterations = static_cast<double>(it_sum) / stats.successes;
    stats.mean_fevals = static_cast<double>(fe_sum) / stats.successes;
    stats.mean_time_s = t_sum / stats.successes;
  }
  stats.success_rate = 100.0 * stats.successes / std::max(trials, 1);
  return stats;
}

}  // namespace orbkit
