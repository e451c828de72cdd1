#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "orbkit/dynamics.hpp"
#include "orbkit/propagate.hpp"

namespace orbkit {

inline constexpr double kAstronomicalUnitKm = 1.495978707e8;
inline constexpr double kG0KmS2 = 9.80665e-3;

struct Engine {
  double thrust_kN;            // kg km / s^2
  double isp_s;
  double g0_kms2 = kG0KmS2;
  double m0_kg;

  double exhaust_velocity_kms() const { return isp_s * g0_kms2; }
};

/// Canonical unit system with mu = 1: one distance unit du and the matching
/// time unit tu = sqrt(du^3 / mu). With du = 1 AU and the solar mu this gives
/// tu of one year over 2 pi.
struct CanonicalUnits {
  double du_km;
  double tu_s;
  double mu_canonical = 1.0;

  static CanonicalUnits from_mu(double mu_km3s2, double du_km = kAstronomicalUnitKm);

  double vu_kms() const { return du_km / tu_s; }
  double accel_kms2() const { return du_km / (tu_s * tu_s); }
};

enum class ElementSetKind { CrpMee, MrpMee };

using Vec6 = std::array<double, 6>;

/// (element state, mass, element costates, mass costate): the 14 unknowns of
/// the fuel-optimal ODE. Packed order in flat vectors: x[0..5], m, lam[0..5],
/// lam_m.
struct AugmentedState {
  Vec6 x;
  double m;
  Vec6 lam;
  double lam_m;
};

struct ControlOutput {
  Vec3 alpha_hat;      // unit thrust direction in LVLH components
  double delta;        // throttle in [0, 1]
  double s_tilde;      // switching value
  bool zero_primer = false;
};

struct SolverTols {
  double residual_tol = 1e-9;
  double fd_step = 1e-7;
  int max_newton_iters = 200;
};

std::vector<double> default_rho_schedule();

struct TransferProblem {
  double mu_km3s2;
  MrpMeeSet x0;         // physical units, l unwrapped
  MrpMeeSet xf_target;  // physical units, l unwrapped (encodes revolution count)
  double t0_s = 0.0;
  double tf_s = 0.0;
  Engine engine;
  CanonicalUnits units;
  std::vector<double> rho_schedule = default_rho_schedule();
  SolverTols tols;
  ElementSetKind set = ElementSetKind::MrpMee;
  IntegratorConfig ode;  // canonical-unit integrator settings
};

/// The same problem scaled to canonical units (mu = 1, m0 = 1).
struct CanonicalProblem {
  Vec6 x0;
  Vec6 xf;
  double t0 = 0.0;
  double tf;
  double thrust;  // acceleration of the full engine at unit mass
  double c;       // exhaust velocity
  ElementSetKind set;
  IntegratorConfig ode;
  SolverTols tols;
};

CanonicalProblem make_canonical(const TransferProblem& p);

/// Thrust direction and smoothed throttle from the primer vector B^T lam,
/// for exhaust velocity c. When the primer vanishes the direction is
/// undefined: alpha_hat = 0 and zero_primer is set, with delta still
/// following the switching value.
ControlOutput control_law(const Vec6& x, double m, const Vec6& lam, double lam_m, double rho,
                          double c, ElementSetKind set, double mu = 1.0);

double hamiltonian(const Vec6& x, double m, const Vec6& lam, double lam_m, const LvlhAccel& a,
                   double c, ElementSetKind set, double mu = 1.0);

/// Analytic gradient of r/h = sqrt(p/mu)/w with respect to the six elements.
Vec6 rh_gradient(const Vec6& x, double mu = 1.0);

/// Analytic gradient of k6 = h/r^2 = sqrt(mu/p^3) w^2.
Vec6 k6_gradient(const Vec6& x, double mu = 1.0);

/// dB[i][j][k] = d(b_i)_j / d x_k for the six rows of B.
using BGradients = std::array<std::array<Vec6, 3>, 6>;

BGradients b_gradients(const Vec6& x, ElementSetKind set);

/// Euler-Lagrange costate rates for a held acceleration a:
/// lam_dot_k = -lam_i (b_i . a d(r/h)/dx_k + (r/h) db_i/dx_k . a) - lam6 dk6/dx_k,
/// lam_m_dot = (1/c)(lam_m - 1)|a|.
void costate_rates(const Vec6& x, double m, const Vec6& lam, double lam_m, const LvlhAccel& a,
                   double c, ElementSetKind set, Vec6& lam_dot, double& lam_m_dot,
                   double mu = 1.0);

/// Closed-loop 14-state right-hand side in canonical units.
void augmented_rhs(double t, std::span<const double> y, std::span<double> dydt, double rho,
                   const CanonicalProblem& cp);

/// Integrate the augmented ODE and return the 7 boundary residuals
/// (x(tf) - xf, lam_m(tf)). Throws IntegrationFailed.
std::array<double, 7> shoot(const CanonicalProblem& cp, const Vec6& lam0, double lam_m0,
                            double rho, IntegratorStats* stats = nullptr);

struct RhoStageReport {
  double rho;
  int iterations;
  long fevals;
  double residual_norm;
  bool converged;
};

struct TransferSolution {
  Vec6 lam0;
  double lam_m0;
  double final_mass_kg;
  double residual_norm;
  bool converged;
  std::vector<RhoStageReport> per_rho;
  long iterations_total = 0;
  long fevals_total = 0;
  Trajectory trajectory;  // canonical, 14 columns, uniform sample grid
};

/// Damped-Newton single shooting with rho continuation; never throws on a
/// stall, the returned solution carries the best residual and history.
TransferSolution try_solve_tpbvp(const TransferProblem& p, const std::array<double, 7>& lam_guess);

/// Same, but throws NewtonStalled when the final rho stage fails to converge.
TransferSolution solve_tpbvp(const TransferProblem& p, const std::array<double, 7>& lam_guess);

/// Uniform [-1,1]^7 costate guess from a counter-based generator; portable
/// and reproducible across platforms and thread counts.
std::array<double, 7> random_costate_guess(std::uint64_t seed, int trial_index);

struct TrialRecord {
  int index;
  std::array<double, 7> guess;
  bool success;
  long iterations;
  long fevals;
  double residual;
  double seconds;
};

struct MultistartStats {
  int trials = 0;
  int successes = 0;
  double success_rate = 0.0;   // percent
  double mean_iterations = 0.0;  // over converged trials
  double mean_fevals = 0.0;
  double mean_time_s = 0.0;
  std::vector<TrialRecord> records;
};

/// Random-start convergence statistics. Trials are independent and may run
/// in parallel (OpenMP); results are keyed by trial index so the aggregate is
/// identical for any thread count. ORBKIT_THREADS caps the parallelism.
/// With stop_after_first_success the scan is chunked in index order and stops
/// deterministically at the first converged trial.
MultistartStats multistart_stats(const TransferProblem& p, int trials, std::uint64_t seed,
                                 int max_threads = 0, bool stop_after_first_success = false);

}  // namespace orbkit
