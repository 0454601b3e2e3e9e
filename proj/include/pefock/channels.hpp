// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "pefock/fock.hpp"

namespace pefock {

/// Noise model parameters. The dephasing is Gaussian phase noise of
/// variance 2*gamma*dephase_len acting on mode b; only the product
/// gamma*dephase_len enters any result. Photon loss is modeled by one
/// fictitious beam splitter per mode with transmittances t_a, t_b;
/// reflectances are derived as 1 - t and never stored.
struct NoiseParams {
    double gamma = 0.0;
    double dephase_len = 1.0;
    double t_a = 1.0;
    double t_b = 1.0;

    double r_a() const { return 1.0 - t_a; }
    double r_b() const { return 1.0 - t_b; }

    /// Throws std::invalid_argument unless gamma, dephase_len >= 0 and
    /// both transmittances lie in [0, 1].
    void validate() const;
};

/// Binomial weight families of the beam-splitter loss model for an
/// (m, m') input. d1/d2 weight the diagonal blocks and are indexed
/// k in [0,m], k' in [0,m']; d3/d4 weight the coherence blocks and are
/// indexed k, k' in [0,m']. All weights lie in [0,1]; d1 and d2 each sum
/// to one over their index range.
class LossCoefficients {
public:
    LossCoefficients(int m, int m_prime, const NoiseParams& params);

    double d1(int k, int k_prime) const;
    double d2(int k, int k_prime) const;
    double d3(int k, int k_prime) const;
    double d4(int k, int k_prime) const;

    int m() const { return m_; }
    int m_prime() const { return m_prime_; }
    int delta_m() const { return m_ - m_prime_; }

private:
    int m_;
    int m_prime_;
    std::vector<double> d1_, d2_;  // (m+1) x (m_prime+1)
    std::vector<double> d3_, d4_;  // (m_prime+1) x (m_prime+1)
};

/// Phase shifter in the upper path b: each term (k_a, k_b) picks up
/// exp(i * k_b * phi).
TwoModePureState apply_phase_shift(const TwoModePureState& state, double phi);

/// Pure dephasing from Gaussian phase noise on mode b. Each dyad is scaled
/// by exp(-delta^2 * gamma * dephase_len) with delta the mode-b photon
/// number difference between ket and bra; populations are untouched.
/// For Gaussian noise the factor is the exact characteristic function
/// exp(-delta^2 <dphi^2>/2) with <dphi^2> = 2*gamma*dephase_len.
DensityOperator dephase(const DensityOperator& rho, double gamma, double dephase_len);

/// Coefficient families for the (m, m') state and the given transmittances.
/// Requires m > m_prime >= 0.
LossCoefficients loss_coefficients(int m, int m_prime, const NoiseParams& params);

/// Photon-loss channel: per-mode Kraus maps of the fictitious beam
/// splitters, applied to an arbitrary density operator.
DensityOperator apply_loss(const DensityOperator& rho, const NoiseParams& params);

/// The loss-and-dephasing mixed state of an (m, m') input carrying phase
/// phi, assembled directly from the d-coefficient families: diagonal blocks
/// |k,k'><k,k'| and |k',k><k',k| weighted by d1/2 and d2/2, coherence
/// blocks |dm+k,k'><k,dm+k'| (and adjoint) weighted by
/// e^{-i dm phi} d3(k,k')/2 * exp(-dm^2 gamma L). Reduces to the pure
/// dephased state at t_a = t_b = 1.
DensityOperator lossy_dephased_density(int m, int m_prime, double phi, const NoiseParams& params);

/// Convenience pipeline: dephase(to_density(apply_phase_shift(mm state))).
DensityOperator dephased_density(int m, int m_prime, double phi, double gamma, double dephase_len);

/// Dense two-mode state vector with a per-mode photon cutoff,
/// used by the brute-force oracle paths.
class TwoModeVector {
public:
    explicit TwoModeVector(int max_photons_per_mode);

    int cutoff() const { return cutoff_; }
    Complex& at(int n_a, int n_b);
    const Complex& at(int n_a, int n_b) const;
    double norm() const;

private:
    int cutoff_;
    std::vector<Complex> amp_;
};

/// Beam-splitter unitary in the Fock basis, real symmetric convention:
/// a_out = sqrt(T) a + sqrt(R) v, v_out = sqrt(T) v - sqrt(R) a. Transmit
/// amplitudes sqrt(T), reflect amplitudes sqrt(R), no relative i. Photon
/// number is conserved and the norm is preserved. Throws std::domain_error
/// if any populated pair total exceeds the cutoff.
TwoModeVector beam_splitter_fock(const TwoModeVector& input, double transmittance);

}  // namespace pefock
