// SPDX-License-Identifier: Apache-2.0

#include "pefock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pefock {

bool sector_lex_less(const FockKet& lhs, const FockKet& rhs)
{
    if (lhs.total() != rhs.total()) return lhs.total() < rhs.total();
    return lhs < rhs;
}

TwoModePureState::TwoModePureState(std::vector<Term> terms) : terms_(std::move(terms))
{
    double norm2 = 0.0;
    std::set<FockKet> seen;
    for (const auto& [ket, amp] : terms_) {
        if (ket.photons_a < 0 || ket.photons_b < 0)
            throw std::invalid_argument("TwoModePureState: negative photon count");
        if (!seen.insert(ket).second)
            throw std::invalid_argument("TwoModePureState: duplicate ket");
        norm2 += std::norm(amp);
    }
    if (std::abs(norm2 - 1.0) > kEpsHermitian)
        throw std::invalid_argument("TwoModePureState: state is not normalized");
}

int TwoModePureState::max_total_photons() const
{
    int n = 0;
    for (const auto& [ket, amp] : terms_) n = std::max(n, ket.total());
    return n;
}

SparseOperator::SparseOperator(DyadMap entries) : entries_(std::move(entries))
{
    for (auto it = entries_.begin(); it != entries_.end();) {
        it = (it->second == Complex{0.0, 0.0}) ? entries_.erase(it) : std::next(it);
    }
}

Complex SparseOperator::entry(const FockKet& ket, const FockKet& bra) const
{
    auto it = entries_.find(Dyad{ket, bra});
    return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
}

bool SparseOperator::is_hermitian(double tol) const
{
    for (const auto& [dyad, value] : entries_) {
        if (std::abs(entry(dyad.bra, dyad.ket) - std::conj(value)) > tol) return false;
    }
    return true;
}

SparseOperator SparseOperator::adjoint() const
{
    DyadMap out;
    for (const auto& [dyad, value] : entries_) out[Dyad{dyad.bra, dyad.ket}] = std::conj(value);
    return SparseOperator{std::move(out)};
}

Complex SparseOperator::trace() const
{
    Complex tr{0.0, 0.0};
    for (const auto& [dyad, value] : entries_)
        if (dyad.ket == dyad.bra) tr += value;
    return tr;
}

int SparseOperator::max_total_photons() const
{
    int n = 0;
    for (const auto& [dyad, value] : entries_)
        n = std::max({n, dyad.ket.total(), dyad.bra.total()});
    return n;
}

SparseOperator SparseOperator::identity_on(const std::vector<FockKet>& kets)
{
    DyadMap out;
    for (const auto& ket : kets) out[Dyad{ket, ket}] = Complex{1.0, 0.0};
    return SparseOperator{std::move(out)};
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b)
{
    DyadMap out;
    for (const auto& [da, va] : a.entries_) {
        for (const auto& [db, vb] : b.entries_) {
            if (da.bra == db.ket) out[Dyad{da.ket, db.bra}] += va * vb;
        }
    }
    return SparseOperator{std::move(out)};
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b)
{
    DyadMap out = a.entries_;
    for (const auto& [dyad, value] : b.entries_) out[dyad] += value;
    return SparseOperator{std::move(out)};
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b)
{
    return a + (Complex{-1.0, 0.0} * b);
}

SparseOperator operator*(Complex scale, const SparseOperator& op)
{
    DyadMap out;
    for (const auto& [dyad, value] : op.entries_) out[dyad] = scale * value;
    return SparseOperator{std::move(out)};
}

DensityOperator DensityOperator::from_entries(DyadMap entries)
{
    for (auto it = entries.begin(); it != entries.end();) {
        it = (it->second == Complex{0.0, 0.0}) ? entries.erase(it) : std::next(it);
    }

    double tr = 0.0;
    for (const auto& [dyad, value] : entries) {
        if (dyad.ket.photons_a < 0 || dyad.ket.photons_b < 0 || dyad.bra.photons_a < 0 ||
            dyad.bra.photons_b < 0)
            throw std::invalid_argument("DensityOperator: negative photon count");
        auto mirror = entries.find(Dyad{dyad.bra, dyad.ket});
        const Complex mirrored =
            mirror == entries.end() ? Complex{0.0, 0.0} : mirror->second;
        if (std::abs(mirrored - std::conj(value)) > kEpsHermitian)
            throw std::invalid_argument("DensityOperator: not Hermitian");
        if (dyad.ket == dyad.bra) {
            if (std::abs(value.imag()) > kEpsHermitian)
                throw std::invalid_argument("DensityOperator: complex diagonal entry");
            if (value.real() < -kEpsHermitian)
                throw std::invalid_argument("DensityOperator: negative diagonal entry");
            tr += value.real();
        }
    }
    if (std::abs(tr - 1.0) > kEpsHermitian) {
        std::ostringstream msg;
        msg << "DensityOperator: trace " << tr << " is not 1";
        throw std::invalid_argument(msg.str());
    }
    return DensityOperator{std::move(entries)};
}

Complex DensityOperator::entry(const FockKet& ket, const FockKet& bra) const
{
    auto it = entries_.find(Dyad{ket, bra});
    return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
}

double DensityOperator::trace() const
{
    double tr = 0.0;
    for (const auto& [dyad, value] : entries_)
        if (dyad.ket == dyad.bra) tr += value.real();
    return tr;
}

int DensityOperator::max_total_photons() const
{
    int n = 0;
    for (const auto& [dyad, value] : entries_)
        n = std::max({n, dyad.ket.total(), dyad.bra.total()});
    return n;
}

std::vector<FockKet> DensityOperator::support() const
{
    return support_union({&entries_});
}

TwoModePureState make_mm_state(int m, int m_prime)
{
    if (m_prime < 0 || m <= m_prime)
        throw std::invalid_argument(
            "make_mm_state: requires m > m_prime >= 0 (equal occupations carry no phase "
            "information)");
    const double amp = 1.0 / std::sqrt(2.0);
    return TwoModePureState{{{FockKet{m, m_prime}, Complex{amp, 0.0}},
                             {FockKet{m_prime, m}, Complex{amp, 0.0}}}};
}

DensityOperator to_density(const TwoModePureState& state)
{
    DyadMap out;
    for (const auto& [ket, ket_amp] : state.terms()) {
        for (const auto& [bra, bra_amp] : state.terms()) {
            out[Dyad{ket, bra}] = ket_amp * std::conj(bra_amp);
        }
    }
    return DensityOperator::from_entries(std::move(out));
}

double expectation(const SparseOperator& op, const DensityOperator& rho)
{
    // Tr[op rho] = sum over op dyads (K, B) of op(K,B) * rho(B,K).
    Complex tr{0.0, 0.0};
    for (const auto& [dyad, value] : op.entries()) {
        tr += value * rho.entry(dyad.bra, dyad.ket);
    }
    if (std::abs(tr.imag()) > kEpsExpectation)
        throw std::domain_error("expectation: imaginary residual exceeds tolerance");
    return tr.real();
}

DensityOperator mix(double p, const DensityOperator& a, const DensityOperator& b)
{
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("mix: weight outside [0, 1]");
    DyadMap out = a.entries();
    for (auto& [dyad, value] : out) value *= p;
    for (const auto& [dyad, value] : b.entries()) out[dyad] += (1.0 - p) * value;
    return DensityOperator::from_entries(std::move(out));
}

std::vector<FockKet> support_union(const std::vector<const DyadMap*>& maps)
{
    std::set<FockKet> kets;
    for (const DyadMap* map : maps) {
        for (const auto& [dyad, value] : *map) {
            kets.insert(dyad.ket);
            kets.insert(dyad.bra);
        }
    }
    std::vector<FockKet> out(kets.begin(), kets.end());
    std::sort(out.begin(), out.end(), sector_lex_less);
    return out;
}

std::vector<Complex> to_dense(const DyadMap& entries, const std::vector<FockKet>& basis)
{
    const std::size_t n = basis.size();
    std::vector<Complex> dense(n * n, Complex{0.0, 0.0});
    auto index_of = [&](const FockKet& ket) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (basis[i] == ket) return i;
        throw std::invalid_argument("to_dense: ket outside the basis");
    };
    for (const auto& [dyad, value] : entries) {
        dense[index_of(dyad.ket) * n + index_of(dyad.bra)] = value;
    }
    return dense;
}

}  // namespace pefock
