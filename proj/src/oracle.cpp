// SPDX-License-Identifier: Apache-2.0

#include "pefock/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace pefock::oracle {

namespace {

// Dense four-mode vector: system modes a, b and one environment mode per
// arm, each with the same per-mode cutoff.
class FourModeVector {
public:
    explicit FourModeVector(int cutoff)
        : cutoff_(cutoff), dim_(cutoff + 1),
          amp_(static_cast<std::size_t>(dim_) * dim_ * dim_ * dim_, Complex{0.0, 0.0})
    {
    }

    Complex& at(int na, int nb, int va, int vb)
    {
        return amp_[((static_cast<std::size_t>(na) * dim_ + nb) * dim_ + va) * dim_ + vb];
    }
    int cutoff() const { return cutoff_; }
    int dim() const { return dim_; }

private:
    int cutoff_;
    int dim_;
    std::vector<Complex> amp_;
};

}  // namespace

double GaussianSampler::next_uniform()
{
    // 53-bit mantissa mapping, identical on every platform.
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double GaussianSampler::next()
{
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Marsaglia polar method.
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    have_spare_ = true;
    return u * factor;
}

McEstimate mc_dephasing_factor(int delta_m, double gamma, double dephase_len, const McConfig& cfg)
{
    if (cfg.samples < 1) throw std::invalid_argument("mc_dephasing_factor: samples must be >= 1");
    if (!(gamma >= 0.0) || !(dephase_len >= 0.0))
        throw std::invalid_argument("mc_dephasing_factor: gamma and dephase_len must be >= 0");

    const double variance = 2.0 * gamma * dephase_len;
    if (delta_m == 0 || variance == 0.0) {
        return McEstimate{Complex{1.0, 0.0}, 0.0, 0.0};
    }

    const double sigma = std::sqrt(variance);
    GaussianSampler sampler(cfg.seed);
    double sum_re = 0.0, sum_im = 0.0, sum_re2 = 0.0, sum_im2 = 0.0;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        const double dphi = sigma * sampler.next();
        const double re = std::cos(delta_m * dphi);
        const double im = std::sin(delta_m * dphi);
        sum_re += re;
        sum_im += im;
        sum_re2 += re * re;
        sum_im2 += im * im;
    }
    const double n = static_cast<double>(cfg.samples);
    const double mean_re = sum_re / n;
    const double mean_im = sum_im / n;
    McEstimate est;
    est.estimate = Complex{mean_re, mean_im};
    if (cfg.samples > 1) {
        const double var_re = std::max(0.0, (sum_re2 - n * mean_re * mean_re) / (n - 1.0));
        const double var_im = std::max(0.0, (sum_im2 - n * mean_im * mean_im) / (n - 1.0));
        est.std_error_re = std::sqrt(var_re / n);
        est.std_error_im = std::sqrt(var_im / n);
    }
    return est;
}

DensityOperator lossy_state_bruteforce(int m, int m_prime, double phi, const NoiseParams& params,
                                       int cutoff)
{
    if (m_prime < 0 || m <= m_prime)
        throw std::invalid_argument("lossy_state_bruteforce: requires m > m_prime >= 0");
    params.validate();
    if (cutoff < m) throw std::domain_error("lossy_state_bruteforce: cutoff below photon number");

    FourModeVector psi(cutoff);
    const double amp = 1.0 / std::sqrt(2.0);
    psi.at(m, m_prime, 0, 0) = Complex{amp, 0.0};
    psi.at(m_prime, m, 0, 0) = Complex{amp, 0.0};

    const int dim = psi.dim();

    // Beam splitter on (a, v_a), one two-mode slice per fixed (b, v_b).
    for (int nb = 0; nb < dim; ++nb) {
        for (int vb = 0; vb < dim; ++vb) {
            TwoModeVector slice(cutoff);
            bool populated = false;
            for (int na = 0; na < dim; ++na)
                for (int va = 0; va < dim; ++va) {
                    slice.at(na, va) = psi.at(na, nb, va, vb);
                    populated |= slice.at(na, va) != Complex{0.0, 0.0};
                }
            if (!populated) continue;
            const TwoModeVector mixed = beam_splitter_fock(slice, params.t_a);
            for (int na = 0; na < dim; ++na)
                for (int va = 0; va < dim; ++va) psi.at(na, nb, va, vb) = mixed.at(na, va);
        }
    }
    // Beam splitter on (b, v_b).
    for (int na = 0; na < dim; ++na) {
        for (int va = 0; va < dim; ++va) {
            TwoModeVector slice(cutoff);
            bool populated = false;
            for (int nb = 0; nb < dim; ++nb)
                for (int vb = 0; vb < dim; ++vb) {
                    slice.at(nb, vb) = psi.at(na, nb, va, vb);
                    populated |= slice.at(nb, vb) != Complex{0.0, 0.0};
                }
            if (!populated) continue;
            const TwoModeVector mixed = beam_splitter_fock(slice, params.t_b);
            for (int nb = 0; nb < dim; ++nb)
                for (int vb = 0; vb < dim; ++vb) psi.at(na, nb, va, vb) = mixed.at(nb, vb);
        }
    }
    // Phase shifter on the surviving system mode b.
    for (int na = 0; na < dim; ++na)
        for (int nb = 0; nb < dim; ++nb) {
            const Complex factor = std::polar(1.0, nb * phi);
            for (int va = 0; va < dim; ++va)
                for (int vb = 0; vb < dim; ++vb) psi.at(na, nb, va, vb) *= factor;
        }

    // Trace out the environment pair, then damp each dyad with the
    // Gaussian dephasing factor.
    DyadMap rho;
    for (int na = 0; na < dim; ++na)
        for (int nb = 0; nb < dim; ++nb)
            for (int ba = 0; ba < dim; ++ba)
                for (int bb = 0; bb < dim; ++bb) {
                    Complex sum{0.0, 0.0};
                    for (int va = 0; va < dim; ++va)
                        for (int vb = 0; vb < dim; ++vb)
                            sum += psi.at(na, nb, va, vb) * std::conj(psi.at(ba, bb, va, vb));
                    if (sum == Complex{0.0, 0.0}) continue;
                    const int delta = nb - bb;
                    sum *= std::exp(-static_cast<double>(delta) * delta * params.gamma *
                                    params.dephase_len);
                    rho[Dyad{FockKet{na, nb}, FockKet{ba, bb}}] = sum;
                }
    return DensityOperator::from_entries(std::move(rho));
}

double dense_recompute(const DensityOperator& rho, const ParityOperator& observable, bool shifted)
{
    if (rho.max_total_photons() > observable.max_total_photons())
        throw std::domain_error("dense_recompute: state support exceeds operator cutoff");

    // Full basis of every ket with total <= cutoff, sector-lexicographic.
    std::vector<FockKet> basis;
    for (int n = 0; n <= observable.max_total_photons(); ++n)
        for (int a = 0; a <= n; ++a) basis.push_back(FockKet{a, n - a});

    const std::vector<Complex> rho_flat = to_dense(rho.entries(), basis);
    const std::vector<Complex> pi_flat = to_dense(observable.matrix(shifted).entries(), basis);
    const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd rho_mat(n, n), pi_mat(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            rho_mat(i, j) = rho_flat[static_cast<std::size_t>(i) * n + j];
            pi_mat(i, j) = pi_flat[static_cast<std::size_t>(i) * n + j];
        }
    const Complex tr = (pi_mat * rho_mat).trace();
    if (std::abs(tr.imag()) > kEpsExpectation)
        throw std::domain_error("dense_recompute: imaginary residual exceeds tolerance");
    return tr.real();
}

double min_eigenvalue(const DensityOperator& rho)
{
    const std::vector<FockKet> basis = rho.support();
    const std::vector<Complex> flat = to_dense(rho.entries(), basis);
    const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd mat(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) mat(i, j) = flat[static_cast<std::size_t>(i) * n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(mat);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("min_eigenvalue: eigendecomposition failed");
    return eig.eigenvalues().minCoeff();
}

double max_entry_difference(const DensityOperator& a, const DensityOperator& b)
{
    double max_diff = 0.0;
    for (const auto& [dyad, value] : a.entries())
        max_diff = std::max(max_diff, std::abs(value - b.entry(dyad.ket, dyad.bra)));
    for (const auto& [dyad, value] : b.entries())
        max_diff = std::max(max_diff, std::abs(value - a.entry(dyad.ket, dyad.bra)));
    return max_diff;
}

}  // namespace pefock::oracle
