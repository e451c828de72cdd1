// Throughput comparison of the OpenMP paths against their serial twins:
// batched element conversions and multistart shooting trials.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orbkit/elements.hpp"
#include "orbkit/optctrl.hpp"

namespace {

double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::vector<orbkit::CoeSet> make_states(int n) {
  std::vector<orbkit::CoeSet> states(n);
  for (int i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / n;
    states[i] = {1.0 + u, 0.1 + 0.6 * u, 0.2 + 2.5 * u, 6.0 * u, 4.0 * u, 2.0 * u, 1.0};
  }
  return states;
}

double convert_roundtrip(const orbkit::CoeSet& c) {
  const orbkit::MrpMeeSet m = orbkit::coe_to_mrpmee(c);
  const orbkit::CartesianState s = orbkit::mrpmee_to_cartesian(m);
  const orbkit::MrpMeeSet back = orbkit::cartesian_to_mrpmee(s);
  return back.p + back.e1 + back.e2 + back.sigma1 + back.sigma2 + std::sin(back.l);
}

void bench_conversions(int n) {
  const auto states = make_states(n);
  std::vector<double> out_serial(n), out_parallel(n);

  double t0 = now_s();
  for (int i = 0; i < n; ++i) out_serial[i] = convert_roundtrip(states[i]);
  const double t_serial = now_s() - t0;

  t0 = now_s();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i) out_parallel[i] = convert_roundtrip(states[i]);
  const double t_parallel = now_s() - t0;

  double max_diff = 0.0;
  for (int i = 0; i < n; ++i) max_diff = std::max(max_diff, std::abs(out_serial[i] - out_parallel[i]));

  std::printf("conversion round trips (n=%d): serial %.3fs, parallel %.3fs, speedup %.2fx, "
              "max |serial - parallel| = %.1e\n",
              n, t_serial, t_parallel, t_serial / t_parallel, max_diff);
}

orbkit::TransferProblem small_problem() {
  // Mildly perturbed one-revolution rendezvous; cheap enough to run many trials.
  const double mu = 1.32712440018e11;
  orbkit::TransferProblem p;
  p.mu_km3s2 = mu;
  p.units = orbkit::CanonicalUnits::from_mu(mu);
  const orbkit::CoeSet dep{orbkit::kAstronomicalUnitKm, 0.02, 0.05, 0.3, 0.4, 0.5, mu};
  const orbkit::CoeSet arr{1.08 * orbkit::kAstronomicalUnitKm, 0.05, 0.08, 0.35, 0.5, 2.2, mu};
  p.x0 = orbkit::coe_to_mrpmee(dep);
  p.xf_target = orbkit::coe_to_mrpmee(arr);
  p.xf_target.l += 2.0 * M_PI;
  p.tf_s = 500.0 * 86400.0;
  p.engine = {2.0e-4, 3000.0, orbkit::kG0KmS2, 1000.0};
  p.ode.rel_tol = p.ode.abs_tol = 1e-10;
  return p;
}

void bench_multistart(int trials) {
  const orbkit::TransferProblem p = small_problem();

  double t0 = now_s();
  const orbkit::MultistartStats serial = orbkit::multistart_stats(p, trials, 42, 1);
  const double t_serial = now_s() - t0;

  t0 = now_s();
  const orbkit::MultistartStats parallel = orbkit::multistart_stats(p, trials, 42, 0);
  const double t_parallel = now_s() - t0;

  const bool same = serial.successes == parallel.successes &&
                    serial.mean_fevals == parallel.mean_fevals &&
                    serial.mean_iterations == parallel.mean_iterations;
  std::printf("multistart shooting (trials=%d): serial %.3fs, parallel %.3fs, speedup %.2fx, "
              "stats identical: %s (success %.0f%%)\n",
              trials, t_serial, t_parallel, t_serial / t_parallel, same ? "yes" : "NO",
              serial.success_rate);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel paths run serially\n");
#endif
  bench_conversions(200000);
  bench_multistart(8);
  return 0;
}
