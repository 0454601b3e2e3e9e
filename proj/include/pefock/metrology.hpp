// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pefock/channels.hpp"
#include "pefock/fock.hpp"

namespace pefock {

/// Figures of merit at one parameter point. Divergent sensitivities are
/// in-band +infinity, never NaN.
struct MetrologyReport {
    double phi = 0.0;
    double sensitivity = 0.0;
    double visibility = 0.0;
    double qfi = 0.0;
    double qcrb = 0.0;
    double snl = 0.0;
    double hl = 0.0;
};

/// Symmetric-logarithmic-derivative computation on the support of rho.
/// `sld` is the dense Hermitian L_phi over `basis` (row-major).
struct SLDResult {
    std::vector<FockKet> basis;
    std::vector<double> eigenvalues;
    std::vector<Complex> sld;
    double qfi = 0.0;

    int dim() const { return static_cast<int>(basis.size()); }
    Complex sld_entry(int i, int j) const { return sld[static_cast<std::size_t>(i) * basis.size() + j]; }
};

/// A phi-parametrized family of density operators. `drho` may be empty, in
/// which case derivatives fall back to central finite differences; the
/// built-in families supply the analytic derivative (phases enter only
/// through exp(+i k_b phi), so d rho/d phi = i*(k_b - b_b) entrywise).
struct PhiFamily {
    std::function<DensityOperator(double)> rho;
    std::function<SparseOperator(double)> drho;
};

/// Entrywise i*(ket_b - bra_b) * rho: the analytic phi-derivative of any
/// state whose phi dependence enters through the mode-b phase unitary.
SparseOperator mode_b_phase_derivative(const DensityOperator& rho);

PhiFamily dephased_family(int m, int m_prime, double gamma, double dephase_len);
PhiFamily lossy_family(int m, int m_prime, NoiseParams params);

/// Shot-noise limit 1/sqrt(m+m') and Heisenberg limit 1/(m+m'), counting
/// total photons.
double shot_noise_limit(int m, int m_prime);
double heisenberg_limit(int m, int m_prime);

/// Phase sensitivity of parity detection on the dephased (m, m') state:
///   sqrt[(1 - e^{-2 dm^2 GL} cos^2(dm phi)) / (dm^2 e^{-2 dm^2 GL} sin^2(dm phi))].
/// Returns +infinity where sin(dm phi) vanishes exactly.
double sensitivity_closed_form(int m, int m_prime, double gamma, double dephase_len, double phi);

/// Linear error propagation dPi/|d<Pi>/dphi| on an arbitrary family, with
/// <Pi^2> = 1 by parity involution. The derivative is a Richardson-
/// extrapolated central difference with base step 1e-6; magnitudes below
/// 1e-14 give +infinity.
double sensitivity_error_propagation(const PhiFamily& family, double phi);

/// Closed-form sensitivity under loss and dephasing,
///   sqrt[(1 - (K1 + (-1)^(m+m') K2 cos(dm phi))^2) / (dm K2 sin(dm phi))^2],
/// reducing to sensitivity_closed_form at t_a = t_b = 1.
double sensitivity_lossy(int m, int m_prime, const NoiseParams& params, double phi);

/// Parity-signal decomposition <Pi> = K1 + (-1)^(m+m') K2 cos(dm phi):
///   K1 = 1/2 sum_k [d1(k,k) + d2(k,k)]            (constant in gamma),
///   K2 = 1/2 sum_k [d3(k,k) + d4(k,k)] e^{-dm^2 GL}.
/// The 1/2 folds the state amplitudes |alpha|^2 = |alpha beta*| = 1/2 into
/// the coefficients so that K2 -> 1 in the noiseless, lossless limit.
std::pair<double, double> k_coefficients(int m, int m_prime, const NoiseParams& params);

/// Relative visibility of the parity fringe against its noiseless,
/// lossless counterpart: K2(0) e^{-dm^2 GL}; equals e^{-dm^2 GL} without
/// loss.
double visibility(int m, int m_prime, const NoiseParams& params);

/// Quantum Fisher information of the dephased (m, m') family,
/// F = dm^2 e^{-2 dm^2 GL}, and the resulting bound 1/sqrt(F).
double qfi_closed_form(int m, int m_prime, double gamma, double dephase_len);
double qcrb_closed_form(int m, int m_prime, double gamma, double dephase_len);

/// Quantum Fisher information via the symmetric logarithmic derivative:
/// eigendecomposes rho(phi) on its support, solves
/// (lambda_i + lambda_j)/2 <i|L|j> = <i|d rho|j> skipping pairs with
/// lambda_i + lambda_j below 1e-12 relative to the largest eigenvalue, and
/// returns F = sum 2|<i|d rho|j>|^2/(lambda_i + lambda_j) together with L.
SLDResult qfi_numerical(const PhiFamily& family, double phi);

struct SaturationResult {
    double sensitivity_min = 0.0;
    double qcrb = 0.0;
    double gap = 0.0;
    bool saturated = false;
};

/// Compares the sensitivity minimum at phi = pi/(2 dm) with the
/// Cramer-Rao bound; saturated when the absolute gap is below 1e-10.
SaturationResult saturation_check(int m, int m_prime, double gamma, double dephase_len);

/// Bundle of all figures of merit at one parameter point. The QFI is the
/// closed form when lossless and the numerical SLD value otherwise.
MetrologyReport make_report(int m, int m_prime, const NoiseParams& params, double phi);

}  // namespace pefock
