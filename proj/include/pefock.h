/* SPDX-License-Identifier: Apache-2.0 */

/* C interface to the pefock shared library.
 *
 * The library simulates path-entangled two-mode photon Fock states
 * (|m::m'> = (|m,m'> + |m',m>)/sqrt(2), N00N states when m' = 0) in a
 * Mach-Zehnder interferometer subject to Gaussian phase noise and photon
 * loss, and evaluates parity-detection signals, phase sensitivity,
 * visibility and quantum Fisher information.
 *
 * All handles are opaque; every function that can fail returns a
 * pefock_status and reports results through out parameters. A textual
 * description of the most recent failure on the calling thread is
 * available from pefock_last_error().
 */

#ifndef PEFOCK_H
#define PEFOCK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(_WIN64)
#define PEFOCK_API __declspec(dllexport)
#else
#define PEFOCK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pefock_status {
    PEFOCK_OK = 0,
    PEFOCK_ERR_INVALID_ARGUMENT = 1,
    PEFOCK_ERR_NUMERIC = 2,
    PEFOCK_ERR_IO = 3,
    PEFOCK_ERR_INTERNAL = 4
} pefock_status;

/* Two-mode pure state and sparse density operator. */
typedef struct pefock_state pefock_state;
typedef struct pefock_density pefock_density;

/* Gaussian dephasing of variance 2*gamma*dephase_len on the upper arm,
 * plus per-arm beam-splitter transmittances in [0, 1]. */
typedef struct pefock_noise_params {
    double gamma;
    double dephase_len;
    double t_a;
    double t_b;
} pefock_noise_params;

PEFOCK_API const char* pefock_version(void);
PEFOCK_API const char* pefock_status_name(pefock_status status);
/* Message for the last failing call on this thread; empty string if none. */
PEFOCK_API const char* pefock_last_error(void);

/* ---- states ---- */

/* (|m,m'> + |m',m>)/sqrt(2); requires m > m' >= 0. */
PEFOCK_API pefock_status pefock_mm_state_create(int m, int m_prime, pefock_state** out);
/* Phase shifter in the upper arm: term (k_a, k_b) gains exp(i k_b phi). */
PEFOCK_API pefock_status pefock_state_phase_shift(const pefock_state* state, double phi,
                                                  pefock_state** out);
PEFOCK_API void pefock_state_destroy(pefock_state* state);

/* ---- density operators ---- */

PEFOCK_API pefock_status pefock_state_to_density(const pefock_state* state, pefock_density** out);
/* Pure dephasing: dyads scale by exp(-d^2 gamma L), d the mode-b photon
 * number difference of the dyad. */
PEFOCK_API pefock_status pefock_density_dephase(const pefock_density* rho, double gamma,
                                                double dephase_len, pefock_density** out);
/* Mixed state of an (m, m') input under loss and dephasing. */
PEFOCK_API pefock_status pefock_lossy_dephased_density(int m, int m_prime, double phi,
                                                       pefock_noise_params params,
                                                       pefock_density** out);
PEFOCK_API pefock_status pefock_density_trace(const pefock_density* rho, double* out);
PEFOCK_API size_t pefock_density_num_entries(const pefock_density* rho);
/* Entry `index` in canonical (ket, bra) lexicographic order. */
PEFOCK_API pefock_status pefock_density_entry(const pefock_density* rho, size_t index, int* ket_a,
                                              int* ket_b, int* bra_a, int* bra_b, double* re,
                                              double* im);
PEFOCK_API void pefock_density_destroy(pefock_density* rho);

/* ---- detection ---- */

/* Expectation of the in-interferometer swap parity observable. Nonzero
 * `shifted` selects the half-wave-plate convention (phi -> phi + pi/2),
 * in which every closed-form signal of this library is stated. */
PEFOCK_API pefock_status pefock_parity_expectation(const pefock_density* rho, int shifted,
                                                   double* out);

/* ---- metrology ---- */

/* Divergent sensitivities are reported as +infinity, never as an error. */
PEFOCK_API pefock_status pefock_sensitivity_closed_form(int m, int m_prime, double gamma,
                                                        double dephase_len, double phi,
                                                        double* out);
PEFOCK_API pefock_status pefock_sensitivity_lossy(int m, int m_prime, pefock_noise_params params,
                                                  double phi, double* out);
/* K1 + (-1)^(m+m') K2 cos(dm phi) decomposition of the parity signal. */
PEFOCK_API pefock_status pefock_k_coefficients(int m, int m_prime, pefock_noise_params params,
                                               double* k1, double* k2);
PEFOCK_API pefock_status pefock_visibility(int m, int m_prime, pefock_noise_params params,
                                           double* out);
PEFOCK_API pefock_status pefock_qfi_closed_form(int m, int m_prime, double gamma,
                                                double dephase_len, double* out);
/* Quantum Fisher information of the (possibly lossy) state family at phi,
 * computed through the symmetric logarithmic derivative. */
PEFOCK_API pefock_status pefock_qfi_numerical(int m, int m_prime, pefock_noise_params params,
                                              double phi, double* out);
/* Gap between the sensitivity minimum at phi = pi/(2 dm) and the quantum
 * Cramer-Rao bound; `saturated` is nonzero when the gap is below 1e-10. */
PEFOCK_API pefock_status pefock_saturation_check(int m, int m_prime, double gamma,
                                                 double dephase_len, int* saturated, double* gap);
PEFOCK_API pefock_status pefock_shot_noise_limit(int m, int m_prime, double* out);
PEFOCK_API pefock_status pefock_heisenberg_limit(int m, int m_prime, double* out);

/* ---- oracle ---- */

/* Monte Carlo estimate of <e^{i dm dphi}>, dphi ~ Normal(0, 2 gamma L),
 * with the standard error of the real part. Seeded runs reproduce bit
 * for bit. */
PEFOCK_API pefock_status pefock_mc_dephasing_factor(int delta_m, double gamma, double dephase_len,
                                                    uint64_t samples, uint64_t seed, double* re,
                                                    double* im, double* std_error);

/* ---- sweeps ---- */

typedef enum pefock_quantity {
    PEFOCK_QUANTITY_SENSITIVITY = 0,
    PEFOCK_QUANTITY_PARITY = 1,
    PEFOCK_QUANTITY_VISIBILITY = 2,
    PEFOCK_QUANTITY_QFI = 3,
    PEFOCK_QUANTITY_REPORT = 4
} pefock_quantity;

typedef struct pefock_sweep_spec {
    int m;
    int m_prime;
    double phi_start;
    double phi_stop;
    int phi_steps;
    int open_phi_grid;  /* nonzero: interior grid points only */
    int min_phase_only; /* nonzero: one row per gamma at phi = pi/(2 dm) */
    const double* gammas;
    size_t num_gammas;
    double dephase_len;
    double t_a;
    double t_b;
    const char* output_path;
    pefock_quantity quantity;
} pefock_sweep_spec;

PEFOCK_API pefock_status pefock_run_sweep(const pefock_sweep_spec* spec, size_t* rows_written);

/* Figure presets; see the CLI documentation for the pinned parameters. */
PEFOCK_API pefock_status pefock_run_fig2(const char* output_path, size_t* rows_written);
PEFOCK_API pefock_status pefock_run_fig3(const char* output_path, size_t* rows_written);
PEFOCK_API pefock_status pefock_run_fig4(const char* output_path, size_t* rows_written);

/* ---- validation ---- */

typedef enum pefock_validate_depth {
    PEFOCK_VALIDATE_QUICK = 0,
    PEFOCK_VALIDATE_FULL = 1
} pefock_validate_depth;

/* Runs the differential validation suite. `report` receives a newline-
 * separated per-check report (release with pefock_string_free);
 * `all_passed` is nonzero when every check passed. */
PEFOCK_API pefock_status pefock_validate(pefock_validate_depth depth, uint64_t mc_samples,
                                         uint64_t mc_seed, char** report, int* all_passed);

PEFOCK_API void pefock_string_free(char* str);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PEFOCK_H */
