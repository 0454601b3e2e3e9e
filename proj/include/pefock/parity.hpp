// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pefock/fock.hpp"

namespace pefock {

/// Photon-number-sector-wise swap observable measured inside the
/// interferometer, covering every sector n <= max_total_photons.
///
/// Sector n of the unshifted operator is
///     conj(i^n) * sum_k (-1)^k |k,n-k><n-k,k|,   k in [0, n],
/// which is Hermitian and squares to the identity on each sector. The
/// sector phase is written against the outer-product convention used by
/// this library (phase exp(+i k_b phi) on mode b), so that the expectation
/// on a dephased (m, m') state equals
/// (-1)^(m+m') e^{-dm^2 GL} cos[dm (phi - pi/2)].
///
/// The shifted form models a half-wave plate in front of the phase shifter
/// (phi -> phi + pi/2) and reduces to (-1)^n times the plain swap; on the
/// same states it gives (-1)^(m+m') e^{-dm^2 GL} cos(dm phi).
class ParityOperator {
public:
    explicit ParityOperator(int max_total_photons);

    int max_total_photons() const { return max_total_; }
    const SparseOperator& matrix(bool shifted = true) const
    {
        return shifted ? shifted_ : unshifted_;
    }

private:
    int max_total_;
    SparseOperator unshifted_;
    SparseOperator shifted_;
};

ParityOperator parity_operator(int max_total_photons);

/// Tr[Pi rho], sizing the operator to the support of rho. The shifted
/// convention is the default: every closed-form signal in this library is
/// stated in it.
double parity_expectation(const DensityOperator& rho, bool shifted = true);

/// Same, with a caller-provided operator. Throws std::domain_error if the
/// support of rho exceeds the operator cutoff.
double parity_expectation(const ParityOperator& op, const DensityOperator& rho,
                          bool shifted = true);

}  // namespace pefock
