// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace pefock {

using Complex = std::complex<double>;

// Validation tolerances for operator construction and expectation values.
inline constexpr double kEpsHermitian = 1e-12;
inline constexpr double kEpsExpectation = 1e-10;

/// Occupation numbers of the two interferometer arms. The first slot is
/// always mode a (lower path), the second mode b (upper path, where the
/// phase shifter and the phase noise act).
struct FockKet {
    int photons_a = 0;
    int photons_b = 0;

    int total() const { return photons_a + photons_b; }

    friend auto operator<=>(const FockKet&, const FockKet&) = default;
};

/// |ket><bra| pair keying one entry of a sparse operator. Ordered ket
/// before bra, lexicographically, so maps compare canonically.
struct Dyad {
    FockKet ket;
    FockKet bra;

    friend auto operator<=>(const Dyad&, const Dyad&) = default;
};

using DyadMap = std::map<Dyad, Complex>;

/// Orders kets by total photon number first, then lexicographically within
/// a sector. Dense enumerations use this order throughout.
bool sector_lex_less(const FockKet& lhs, const FockKet& rhs);

/// Normalized superposition of two-mode Fock kets.
///
/// Invariants enforced on construction: no duplicate kets, and the squared
/// amplitudes sum to one within 1e-12.
class TwoModePureState {
public:
    using Term = std::pair<FockKet, Complex>;

    explicit TwoModePureState(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    int max_total_photons() const;

private:
    std::vector<Term> terms_;
};

/// Sparse operator as a linear combination of dyads. Carries no
/// normalization constraint; Hermiticity is up to the caller.
class SparseOperator {
public:
    SparseOperator() = default;
    explicit SparseOperator(DyadMap entries);

    const DyadMap& entries() const { return entries_; }
    Complex entry(const FockKet& ket, const FockKet& bra) const;
    bool is_hermitian(double tol = kEpsHermitian) const;

    SparseOperator adjoint() const;
    Complex trace() const;
    int max_total_photons() const;

    /// Identity restricted to the given kets.
    static SparseOperator identity_on(const std::vector<FockKet>& kets);

    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(Complex scale, const SparseOperator& op);

private:
    DyadMap entries_;
};

/// Sparse density operator. Construction validates Hermiticity (1e-12),
/// unit trace (1e-12) and real, non-negative diagonal (>= -1e-12).
/// Entries with exactly zero weight are dropped. Immutable once built.
class DensityOperator {
public:
    static DensityOperator from_entries(DyadMap entries);

    const DyadMap& entries() const { return entries_; }
    Complex entry(const FockKet& ket, const FockKet& bra) const;
    double trace() const;
    int max_total_photons() const;

    SparseOperator as_operator() const { return SparseOperator{entries_}; }

    /// Distinct kets appearing on either side of any dyad, in
    /// sector-lexicographic order.
    std::vector<FockKet> support() const;

private:
    explicit DensityOperator(DyadMap entries) : entries_(std::move(entries)) {}

    DyadMap entries_;
};

/// (|m,m'> + |m',m>)/sqrt(2). Requires m > m' >= 0; equal occupations carry
/// no phase information and are rejected.
TwoModePureState make_mm_state(int m, int m_prime);

/// Outer product |psi><psi| of a normalized state.
DensityOperator to_density(const TwoModePureState& state);

/// Tr[op * rho]. Throws std::domain_error if the imaginary residual exceeds
/// 1e-10, which signals a non-Hermitian operand.
double expectation(const SparseOperator& op, const DensityOperator& rho);

/// Convex combination p*a + (1-p)*b, p in [0,1].
DensityOperator mix(double p, const DensityOperator& a, const DensityOperator& b);

/// Union of the supports of the given operators, sector-lexicographic.
std::vector<FockKet> support_union(const std::vector<const DyadMap*>& maps);

/// Row-major dense matrix of `op` over `basis`. Throws if an entry lies
/// outside the basis.
std::vector<Complex> to_dense(const DyadMap& entries, const std::vector<FockKet>& basis);

}  // namespace pefock
