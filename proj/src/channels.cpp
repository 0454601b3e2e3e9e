// SPDX-License-Identifier: Apache-2.0

#include "pefock/channels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pefock {

namespace {

// Exact for n <= 62.
double binomial(int n, int k)
{
    if (k < 0 || k > n) return 0.0;
    std::uint64_t num = 1;
    for (int i = 0; i < std::min(k, n - k); ++i) {
        num = num * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return static_cast<double>(num);
}

// sqrt of the binomial probability C(n,j) T^j R^(n-j); the amplitude for
// keeping j of n photons at a beam splitter of transmittance T.
double keep_amplitude(int n, int j, double t)
{
    if (j < 0 || j > n) return 0.0;
    const double p = binomial(n, j) * std::pow(t, j) * std::pow(1.0 - t, n - j);
    return std::sqrt(p);
}

void require_mm(int m, int m_prime)
{
    if (m_prime < 0 || m <= m_prime)
        throw std::invalid_argument("loss model: requires m > m_prime >= 0");
}

}  // namespace

void NoiseParams::validate() const
{
    if (!(gamma >= 0.0) || !(dephase_len >= 0.0))
        throw std::invalid_argument("NoiseParams: gamma and dephase_len must be >= 0");
    if (!(t_a >= 0.0 && t_a <= 1.0) || !(t_b >= 0.0 && t_b <= 1.0))
        throw std::invalid_argument("NoiseParams: transmittances must lie in [0, 1]");
}

LossCoefficients::LossCoefficients(int m, int m_prime, const NoiseParams& params)
    : m_(m), m_prime_(m_prime)
{
    require_mm(m, m_prime);
    params.validate();
    const int dm = m - m_prime;
    const double ta = params.t_a, tb = params.t_b;

    d1_.assign(static_cast<std::size_t>(m + 1) * (m_prime + 1), 0.0);
    d2_.assign(static_cast<std::size_t>(m + 1) * (m_prime + 1), 0.0);
    for (int k = 0; k <= m; ++k) {
        for (int kp = 0; kp <= m_prime; ++kp) {
            const std::size_t at = static_cast<std::size_t>(k) * (m_prime + 1) + kp;
            // d1 weights the branch with m photons in arm a; d2 the
            // arm-swapped branch.
            double a1 = keep_amplitude(m, k, ta) * keep_amplitude(m_prime, kp, tb);
            double a2 = keep_amplitude(m_prime, kp, ta) * keep_amplitude(m, k, tb);
            d1_[at] = a1 * a1;
            d2_[at] = a2 * a2;
        }
    }

    d3_.assign(static_cast<std::size_t>(m_prime + 1) * (m_prime + 1), 0.0);
    d4_.assign(static_cast<std::size_t>(m_prime + 1) * (m_prime + 1), 0.0);
    for (int k = 0; k <= m_prime; ++k) {
        for (int kp = 0; kp <= m_prime; ++kp) {
            const std::size_t at = static_cast<std::size_t>(k) * (m_prime + 1) + kp;
            d3_[at] = keep_amplitude(m, dm + k, ta) * keep_amplitude(m_prime, k, ta) *
                      keep_amplitude(m, dm + kp, tb) * keep_amplitude(m_prime, kp, tb);
            d4_[at] = keep_amplitude(m, dm + kp, ta) * keep_amplitude(m_prime, kp, ta) *
                      keep_amplitude(m, dm + k, tb) * keep_amplitude(m_prime, k, tb);
        }
    }
}

double LossCoefficients::d1(int k, int k_prime) const
{
    return d1_.at(static_cast<std::size_t>(k) * (m_prime_ + 1) + k_prime);
}

double LossCoefficients::d2(int k, int k_prime) const
{
    return d2_.at(static_cast<std::size_t>(k) * (m_prime_ + 1) + k_prime);
}

double LossCoefficients::d3(int k, int k_prime) const
{
    return d3_.at(static_cast<std::size_t>(k) * (m_prime_ + 1) + k_prime);
}

double LossCoefficients::d4(int k, int k_prime) const
{
    return d4_.at(static_cast<std::size_t>(k) * (m_prime_ + 1) + k_prime);
}

TwoModePureState apply_phase_shift(const TwoModePureState& state, double phi)
{
    std::vector<TwoModePureState::Term> terms = state.terms();
    for (auto& [ket, amp] : terms) {
        amp *= std::polar(1.0, ket.photons_b * phi);
    }
    return TwoModePureState{std::move(terms)};
}

DensityOperator dephase(const DensityOperator& rho, double gamma, double dephase_len)
{
    if (!(gamma >= 0.0) || !(dephase_len >= 0.0))
        throw std::invalid_argument("dephase: gamma and dephase_len must be >= 0");
    if (gamma * dephase_len == 0.0) return rho;

    DyadMap out = rho.entries();
    for (auto& [dyad, value] : out) {
        const int delta = dyad.ket.photons_b - dyad.bra.photons_b;
        if (delta != 0) value *= std::exp(-static_cast<double>(delta) * delta * gamma * dephase_len);
    }
    return DensityOperator::from_entries(std::move(out));
}

LossCoefficients loss_coefficients(int m, int m_prime, const NoiseParams& params)
{
    return LossCoefficients{m, m_prime, params};
}

DensityOperator apply_loss(const DensityOperator& rho, const NoiseParams& params)
{
    params.validate();
    DyadMap out;
    for (const auto& [dyad, value] : rho.entries()) {
        const int ka = dyad.ket.photons_a, kb = dyad.ket.photons_b;
        const int ba = dyad.bra.photons_a, bb = dyad.bra.photons_b;
        // Kraus index = photons lost per mode; ket and bra must emit the
        // same number into the environment.
        for (int la = 0; la <= std::min(ka, ba); ++la) {
            const double wa = keep_amplitude(ka, ka - la, params.t_a) *
                              keep_amplitude(ba, ba - la, params.t_a);
            if (wa == 0.0) continue;
            for (int lb = 0; lb <= std::min(kb, bb); ++lb) {
                const double wb = keep_amplitude(kb, kb - lb, params.t_b) *
                                  keep_amplitude(bb, bb - lb, params.t_b);
                if (wb == 0.0) continue;
                out[Dyad{FockKet{ka - la, kb - lb}, FockKet{ba - la, bb - lb}}] +=
                    value * wa * wb;
            }
        }
    }
    return DensityOperator::from_entries(std::move(out));
}

DensityOperator lossy_dephased_density(int m, int m_prime, double phi, const NoiseParams& params)
{
    require_mm(m, m_prime);
    params.validate();
    const int dm = m - m_prime;
    const LossCoefficients d = loss_coefficients(m, m_prime, params);
    const Complex alpha = std::polar(1.0 / std::sqrt(2.0), m_prime * phi);
    const Complex beta = std::polar(1.0 / std::sqrt(2.0), m * phi);
    const double decay =
        std::exp(-static_cast<double>(dm) * dm * params.gamma * params.dephase_len);

    DyadMap out;
    for (int k = 0; k <= m; ++k) {
        for (int kp = 0; kp <= m_prime; ++kp) {
            out[Dyad{FockKet{k, kp}, FockKet{k, kp}}] += std::norm(alpha) * d.d1(k, kp);
            out[Dyad{FockKet{kp, k}, FockKet{kp, k}}] += std::norm(beta) * d.d2(k, kp);
        }
    }
    for (int k = 0; k <= m_prime; ++k) {
        for (int kp = 0; kp <= m_prime; ++kp) {
            out[Dyad{FockKet{dm + k, kp}, FockKet{k, dm + kp}}] +=
                alpha * std::conj(beta) * d.d3(k, kp) * decay;
            out[Dyad{FockKet{kp, dm + k}, FockKet{dm + kp, k}}] +=
                std::conj(alpha) * beta * d.d4(k, kp) * decay;
        }
    }
    return DensityOperator::from_entries(std::move(out));
}

DensityOperator dephased_density(int m, int m_prime, double phi, double gamma, double dephase_len)
{
    return dephase(to_density(apply_phase_shift(make_mm_state(m, m_prime), phi)), gamma,
                   dephase_len);
}

TwoModeVector::TwoModeVector(int max_photons_per_mode) : cutoff_(max_photons_per_mode)
{
    if (cutoff_ < 0) throw std::invalid_argument("TwoModeVector: negative cutoff");
    amp_.assign(static_cast<std::size_t>(cutoff_ + 1) * (cutoff_ + 1), Complex{0.0, 0.0});
}

Complex& TwoModeVector::at(int n_a, int n_b)
{
    if (n_a < 0 || n_a > cutoff_ || n_b < 0 || n_b > cutoff_)
        throw std::out_of_range("TwoModeVector: index outside cutoff");
    return amp_[static_cast<std::size_t>(n_a) * (cutoff_ + 1) + n_b];
}

const Complex& TwoModeVector::at(int n_a, int n_b) const
{
    return const_cast<TwoModeVector*>(this)->at(n_a, n_b);
}

double TwoModeVector::norm() const
{
    double n2 = 0.0;
    for (const Complex& a : amp_) n2 += std::norm(a);
    return std::sqrt(n2);
}

TwoModeVector beam_splitter_fock(const TwoModeVector& input, double transmittance)
{
    if (!(transmittance >= 0.0 && transmittance <= 1.0))
        throw std::invalid_argument("beam_splitter_fock: transmittance outside [0, 1]");
    const int c = input.cutoff();
    const double rt = std::sqrt(transmittance);
    const double rr = std::sqrt(1.0 - transmittance);

    std::vector<double> log_fact(2 * c + 2, 0.0);
    for (int i = 1; i < static_cast<int>(log_fact.size()); ++i)
        log_fact[i] = log_fact[i - 1] + std::log(static_cast<double>(i));
    auto sqrt_fact_ratio = [&](int p, int q, int j, int l) {
        // sqrt(p! q! / (j! l!))
        return std::exp(0.5 * (log_fact[p] + log_fact[q] - log_fact[j] - log_fact[l]));
    };

    TwoModeVector out(c);
    for (int j = 0; j <= c; ++j) {
        for (int l = 0; l <= c; ++l) {
            const Complex w = input.at(j, l);
            if (w == Complex{0.0, 0.0}) continue;
            if (j + l > c)
                throw std::domain_error("beam_splitter_fock: populated pair total exceeds cutoff");
            // (rt a + rr v)^j (rt v - rr a)^l |0,0> expanded binomially.
            for (int p = 0; p <= j; ++p) {
                for (int q = 0; q <= l; ++q) {
                    const int na = p + (l - q);
                    const int nv = (j - p) + q;
                    double coeff = binomial(j, p) * binomial(l, q) * std::pow(rt, p + q) *
                                   std::pow(rr, j - p) * std::pow(-rr, l - q);
                    coeff *= sqrt_fact_ratio(na, nv, j, l);
                    out.at(na, nv) += w * coeff;
                }
            }
        }
    }
    return out;
}

}  // namespace pefock
