// SPDX-License-Identifier: Apache-2.0

#include "pefock/parity.hpp"

#include <stdexcept>

namespace pefock {

namespace {

// conj(i^n) as a function of n mod 4.
Complex conj_i_pow(int n)
{
    switch (((n % 4) + 4) % 4) {
        case 0: return Complex{1.0, 0.0};
        case 1: return Complex{0.0, -1.0};
        case 2: return Complex{-1.0, 0.0};
        default: return Complex{0.0, 1.0};
    }
}

}  // namespace

ParityOperator::ParityOperator(int max_total_photons) : max_total_(max_total_photons)
{
    if (max_total_ < 0) throw std::invalid_argument("ParityOperator: negative photon cutoff");

    DyadMap unshifted;
    DyadMap shifted;
    for (int n = 0; n <= max_total_; ++n) {
        const Complex sector_phase = conj_i_pow(n);
        const double swap_sign = (n % 2 == 0) ? 1.0 : -1.0;
        for (int k = 0; k <= n; ++k) {
            const Dyad dyad{FockKet{k, n - k}, FockKet{n - k, k}};
            const double alternating = (k % 2 == 0) ? 1.0 : -1.0;
            unshifted[dyad] = sector_phase * alternating;
            shifted[dyad] = Complex{swap_sign, 0.0};
        }
    }
    unshifted_ = SparseOperator{std::move(unshifted)};
    shifted_ = SparseOperator{std::move(shifted)};
}

ParityOperator parity_operator(int max_total_photons)
{
    return ParityOperator{max_total_photons};
}

double parity_expectation(const DensityOperator& rho, bool shifted)
{
    return parity_expectation(ParityOperator{rho.max_total_photons()}, rho, shifted);
}

double parity_expectation(const ParityOperator& op, const DensityOperator& rho, bool shifted)
{
    if (rho.max_total_photons() > op.max_total_photons())
        throw std::domain_error("parity_expectation: state support exceeds operator cutoff");
    return expectation(op.matrix(shifted), rho);
}

}  // namespace pefock
