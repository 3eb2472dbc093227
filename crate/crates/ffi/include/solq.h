#ifndef SOLQ_H
#define SOLQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum SolqStatus {
  SolqStatus_Ok = 0,
  SolqStatus_InvalidArgument = 1,
  SolqStatus_SolverFailed = 2,
  SolqStatus_OutOfRange = 3,
} SolqStatus;

/**
 * Opaque handle around a converged Dirac-Poisson solution.
 */
typedef struct SolqDiracSolution SolqDiracSolution;

/**
 * Scalar observables of a Dirac solution, plain-old-data for C callers.
 */
typedef struct SolqDiracObservables {
  double alpha;
  double beta;
  double spin;
  double spin_signed;
  double charge_integral;
  double alpha_out;
  double total_mass;
  double mass_balance;
  double amplitude_a;
  double amplitude_b;
  int32_t converged;
} SolqDiracObservables;

/**
 * Classical dipole-decay constants.
 */
typedef struct SolqDipoleDecay {
  double tau;
  double gamma;
  double phase_alpha;
  double delta_omega;
  /**
   * Nonzero when tau * omega > 1 and the phase formula saturated.
   */
  int32_t regime_violated;
} SolqDipoleDecay;

/**
 * Rotating-frame drive parameters for the two-level integrator. Pass
 * `tau0 <= 0` to disable relaxation.
 */
typedef struct SolqBlochParams {
  double omega;
  double omega_a;
  double epsilon;
  double tau0;
  double x0;
  double mass;
  double charge;
} SolqBlochParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version string of the library; static storage, do not free.
 */
const char *solq_version(void);

/**
 * Most recent error message on this thread; valid until the next failing
 * call from the same thread. Do not free.
 */
const char *solq_last_error_message(void);

/**
 * Solve the full soliton problem for `kappa` (+1 or -1) at coupling
 * `alpha` (pass 0 for the built-in defaults). On success writes a handle
 * the caller must free with [`solq_dirac_free`].
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one pointer.
 */
enum SolqStatus solq_dirac_solve(int32_t kappa, double alpha, struct SolqDiracSolution **out);

/**
 * Solve one family member at fixed (kappa, alpha, beta, amplitude).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one pointer.
 */
enum SolqStatus solq_dirac_solve_member(int32_t kappa,
                                        double alpha,
                                        double beta,
                                        double amplitude,
                                        struct SolqDiracSolution **out);

/**
 * Free a solution handle. Passing NULL is a no-op.
 *
 * # Safety
 * `handle` must have come from a solq solve call and not be freed twice.
 */
void solq_dirac_free(struct SolqDiracSolution *handle);

/**
 * Copy the scalar observables of a solution into `out`.
 *
 * # Safety
 * `handle` must be a live solution handle; `out` must be writable.
 */
enum SolqStatus solq_dirac_observables(const struct SolqDiracSolution *handle,
                                       struct SolqDiracObservables *out);

/**
 * Number of radial samples in the solution trace.
 *
 * # Safety
 * `handle` must be a live solution handle.
 */
uintptr_t solq_dirac_profile_len(const struct SolqDiracSolution *handle);

/**
 * Copy up to `capacity` samples of the profile columns (rho, f, g, V) into
 * caller buffers; any column pointer may be NULL to skip it. Returns the
 * number of samples written through `written`.
 *
 * # Safety
 * Non-NULL buffers must hold at least `capacity` doubles; `written` must
 * be writable.
 */
enum SolqStatus solq_dirac_profile(const struct SolqDiracSolution *handle,
                                   double *rho,
                                   double *f,
                                   double *g,
                                   double *v,
                                   uintptr_t capacity,
                                   uintptr_t *written);

/**
 * Ground-state central amplitude of the nonlinear field equation with the
 * linear term, by bisection shooting on [1, 10].
 *
 * # Safety
 * `out` must be writable.
 */
enum SolqStatus solq_photon_ground_state(double rho_max,
                                         uintptr_t grid_points,
                                         double tol,
                                         double *out);

/**
 * Pure-vacuum polarization potential `c1 exp(-sqrt(a) r)/r` at radius
 * `r` meters, CODATA constants.
 *
 * # Safety
 * `out` must be writable.
 */
enum SolqStatus solq_uehling_vacuum_value(double c1, double r_meters, double *out);

/**
 * Classical dipole decay constants at angular frequency `omega` (rad/s).
 *
 * # Safety
 * `out` must be writable.
 */
enum SolqStatus solq_dipole_decay(double omega, struct SolqDipoleDecay *out);

/**
 * Integrate the rotating-frame two-level system from (u0, v0, w0) over
 * `n_steps` steps to `t_end`, writing `n_steps + 1` samples per non-NULL
 * buffer (including the initial state).
 *
 * # Safety
 * Non-NULL buffers must hold at least `n_steps + 1` doubles.
 */
enum SolqStatus solq_bloch_integrate(struct SolqBlochParams params,
                                     double u0,
                                     double v0,
                                     double w0,
                                     double t_end,
                                     uintptr_t n_steps,
                                     double *t_out,
                                     double *u_out,
                                     double *v_out,
                                     double *w_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SOLQ_H */
