// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "pefock/channels.hpp"
#include "pefock/fock.hpp"
#include "pefock/parity.hpp"

namespace pefock::oracle {

// Oracle comparison tolerances. Exact paths compare at kExactTol;
// positive-semidefiniteness allows eigenvalues down to -kPsdTol; Monte
// Carlo estimates are judged within cfg.confidence_sigmas standard errors.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

struct McConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 12345;
    double confidence_sigmas = 3.0;
};

struct McEstimate {
    Complex estimate;
    double std_error_re = 0.0;
    double std_error_im = 0.0;
};

/// Standard-normal generator: Marsaglia polar method over a seeded
/// mersenne twister, bit-reproducible for a fixed seed.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next();

private:
    double next_uniform();  // in [0, 1)

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Ensemble average of e^{i delta_m dphi} over dphi ~ Normal(0, 2*gamma*L).
/// The real part estimates e^{-delta_m^2 gamma L}. Degenerate cases
/// (delta_m = 0 or gamma*L = 0) return exactly 1 with zero error.
McEstimate mc_dephasing_factor(int delta_m, double gamma, double dephase_len, const McConfig& cfg);

/// Full-Hilbert-space loss simulation: four-mode pure state (system a, b
/// plus one environment mode per arm), beam splitters applied per mode
/// pair, phase shift on system mode b, environments traced out, dephasing
/// factor applied per dyad. Requires cutoff >= m.
DensityOperator lossy_state_bruteforce(int m, int m_prime, double phi, const NoiseParams& params,
                                       int cutoff);

/// Dense recomputation of Tr[Pi rho] over the full basis of kets with
/// total <= the operator cutoff, enumerated sector-lexicographically.
double dense_recompute(const DensityOperator& rho, const ParityOperator& observable,
                       bool shifted = true);

/// Smallest eigenvalue of rho on its support (dense eigendecomposition).
double min_eigenvalue(const DensityOperator& rho);

/// max |a - b| over the union of the two entry maps.
double max_entry_difference(const DensityOperator& a, const DensityOperator& b);

}  // namespace pefock::oracle
