// SPDX-License-Identifier: Apache-2.0

#include "pefock/metrology.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pefock/parity.hpp"

namespace pefock {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDerivativeStep = 1e-6;
constexpr double kDerivativeFloor = 1e-14;
constexpr double kSldNullThreshold = 1e-12;  // relative to the largest eigenvalue

void require_mm(int m, int m_prime)
{
    if (m_prime < 0 || m <= m_prime)
        throw std::invalid_argument("metrology: requires m > m_prime >= 0");
}

Eigen::MatrixXcd dense_matrix(const DyadMap& entries, const std::vector<FockKet>& basis)
{
    const std::vector<Complex> flat = to_dense(entries, basis);
    const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd mat(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) mat(i, j) = flat[static_cast<std::size_t>(i) * n + j];
    return mat;
}

}  // namespace

SparseOperator mode_b_phase_derivative(const DensityOperator& rho)
{
    DyadMap out;
    for (const auto& [dyad, value] : rho.entries()) {
        const int delta = dyad.ket.photons_b - dyad.bra.photons_b;
        if (delta != 0) out[dyad] = Complex{0.0, static_cast<double>(delta)} * value;
    }
    return SparseOperator{std::move(out)};
}

PhiFamily dephased_family(int m, int m_prime, double gamma, double dephase_len)
{
    require_mm(m, m_prime);
    PhiFamily family;
    family.rho = [=](double phi) { return dephased_density(m, m_prime, phi, gamma, dephase_len); };
    family.drho = [=](double phi) {
        return mode_b_phase_derivative(dephased_density(m, m_prime, phi, gamma, dephase_len));
    };
    return family;
}

PhiFamily lossy_family(int m, int m_prime, NoiseParams params)
{
    require_mm(m, m_prime);
    params.validate();
    PhiFamily family;
    family.rho = [=](double phi) { return lossy_dephased_density(m, m_prime, phi, params); };
    family.drho = [=](double phi) {
        return mode_b_phase_derivative(lossy_dephased_density(m, m_prime, phi, params));
    };
    return family;
}

double shot_noise_limit(int m, int m_prime)
{
    require_mm(m, m_prime);
    return 1.0 / std::sqrt(static_cast<double>(m + m_prime));
}

double heisenberg_limit(int m, int m_prime)
{
    require_mm(m, m_prime);
    return 1.0 / static_cast<double>(m + m_prime);
}

double sensitivity_closed_form(int m, int m_prime, double gamma, double dephase_len, double phi)
{
    require_mm(m, m_prime);
    if (!(gamma >= 0.0) || !(dephase_len >= 0.0))
        throw std::invalid_argument("sensitivity_closed_form: gamma and dephase_len must be >= 0");
    const double dm = m - m_prime;
    const double s = std::sin(dm * phi);
    if (s == 0.0) return kInf;
    const double c = std::cos(dm * phi);
    const double g2 = std::exp(-2.0 * dm * dm * gamma * dephase_len);
    return std::sqrt((1.0 - g2 * c * c) / (dm * dm * g2 * s * s));
}

double sensitivity_error_propagation(const PhiFamily& family, double phi)
{
    auto signal = [&](double x) { return parity_expectation(family.rho(x), true); };
    const double p0 = signal(phi);

    // Richardson-extrapolated central difference.
    const double h = kDerivativeStep;
    const double d_h = (signal(phi + h) - signal(phi - h)) / (2.0 * h);
    const double d_h2 = (signal(phi + h / 2.0) - signal(phi - h / 2.0)) / h;
    const double derivative = (4.0 * d_h2 - d_h) / 3.0;
    if (!std::isfinite(derivative))
        throw std::domain_error("sensitivity_error_propagation: derivative failure");
    if (std::abs(derivative) < kDerivativeFloor) return kInf;

    const double variance = std::max(0.0, 1.0 - p0 * p0);  // <Pi^2> = 1
    return std::sqrt(variance) / std::abs(derivative);
}

double sensitivity_lossy(int m, int m_prime, const NoiseParams& params, double phi)
{
    const auto [k1, k2] = k_coefficients(m, m_prime, params);
    const double dm = m - m_prime;
    const double sign = ((m + m_prime) % 2 == 0) ? 1.0 : -1.0;
    const double denom = dm * k2 * std::sin(dm * phi);
    if (denom == 0.0) return kInf;
    const double signal = k1 + sign * k2 * std::cos(dm * phi);
    return std::sqrt(std::max(0.0, 1.0 - signal * signal)) / std::abs(denom);
}

std::pair<double, double> k_coefficients(int m, int m_prime, const NoiseParams& params)
{
    const LossCoefficients d = loss_coefficients(m, m_prime, params);
    const double dm = m - m_prime;
    double k1 = 0.0;
    double k2_zero = 0.0;
    for (int k = 0; k <= m_prime; ++k) {
        k1 += 0.5 * (d.d1(k, k) + d.d2(k, k));
        k2_zero += 0.5 * (d.d3(k, k) + d.d4(k, k));
    }
    const double decay = std::exp(-dm * dm * params.gamma * params.dephase_len);
    return {k1, k2_zero * decay};
}

double visibility(int m, int m_prime, const NoiseParams& params)
{
    // max - min of the fringe is 2 K2(t); the noiseless lossless reference is 2.
    return k_coefficients(m, m_prime, params).second;
}

double qfi_closed_form(int m, int m_prime, double gamma, double dephase_len)
{
    require_mm(m, m_prime);
    if (!(gamma >= 0.0) || !(dephase_len >= 0.0))
        throw std::invalid_argument("qfi_closed_form: gamma and dephase_len must be >= 0");
    const double dm = m - m_prime;
    return dm * dm * std::exp(-2.0 * dm * dm * gamma * dephase_len);
}

double qcrb_closed_form(int m, int m_prime, double gamma, double dephase_len)
{
    const double f = qfi_closed_form(m, m_prime, gamma, dephase_len);
    return f == 0.0 ? kInf : 1.0 / std::sqrt(f);
}

SLDResult qfi_numerical(const PhiFamily& family, double phi)
{
    if (!family.rho) throw std::invalid_argument("qfi_numerical: family has no rho");
    const DensityOperator rho = family.rho(phi);

    SparseOperator drho;
    if (family.drho) {
        drho = family.drho(phi);
    } else {
        const double h = kDerivativeStep;
        drho = Complex{1.0 / (2.0 * h), 0.0} *
               (family.rho(phi + h).as_operator() - family.rho(phi - h).as_operator());
    }
    if (!drho.is_hermitian(kEpsExpectation))
        throw std::domain_error("qfi_numerical: derivative is not Hermitian");
    for (const auto& [dyad, value] : drho.entries()) {
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
            throw std::domain_error("qfi_numerical: derivative failure");
    }

    SLDResult result;
    result.basis = support_union({&rho.entries(), &drho.entries()});
    const Eigen::MatrixXcd rho_mat = dense_matrix(rho.entries(), result.basis);
    const Eigen::MatrixXcd drho_mat = dense_matrix(drho.entries(), result.basis);
    if (!rho_mat.isApprox(rho_mat.adjoint(), kEpsExpectation))
        throw std::domain_error("qfi_numerical: state is not Hermitian");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho_mat);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("qfi_numerical: eigendecomposition failed");
    const Eigen::VectorXd lambda = eig.eigenvalues();
    const Eigen::MatrixXcd vectors = eig.eigenvectors();
    const Eigen::Index n = lambda.size();

    result.eigenvalues.assign(lambda.data(), lambda.data() + n);

    // <i|drho|j> in the eigenbasis; pairs inside the kernel of rho are
    // excluded per the support convention.
    const Eigen::MatrixXcd drho_eig = vectors.adjoint() * drho_mat * vectors;
    const double threshold = kSldNullThreshold * lambda.maxCoeff();
    Eigen::MatrixXcd sld_eig = Eigen::MatrixXcd::Zero(n, n);
    double qfi = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double denom = lambda(i) + lambda(j);
            if (denom <= threshold) continue;
            sld_eig(i, j) = 2.0 * drho_eig(i, j) / denom;
            qfi += 2.0 * std::norm(drho_eig(i, j)) / denom;
        }
    }
    const Eigen::MatrixXcd sld = vectors * sld_eig * vectors.adjoint();

    result.sld.resize(static_cast<std::size_t>(n) * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            result.sld[static_cast<std::size_t>(i) * n + j] = sld(i, j);
    result.qfi = qfi;
    return result;
}

SaturationResult saturation_check(int m, int m_prime, double gamma, double dephase_len)
{
    require_mm(m, m_prime);
    const double dm = m - m_prime;
    const double phi_min = M_PI / (2.0 * dm);
    SaturationResult result;
    result.sensitivity_min = sensitivity_closed_form(m, m_prime, gamma, dephase_len, phi_min);
    result.qcrb = qcrb_closed_form(m, m_prime, gamma, dephase_len);
    result.gap = std::abs(result.sensitivity_min - result.qcrb);
    result.saturated = result.gap < 1e-10;
    return result;
}

MetrologyReport make_report(int m, int m_prime, const NoiseParams& params, double phi)
{
    require_mm(m, m_prime);
    params.validate();
    const bool lossless = params.t_a == 1.0 && params.t_b == 1.0;

    MetrologyReport report;
    report.phi = phi;
    report.sensitivity = sensitivity_lossy(m, m_prime, params, phi);
    report.visibility = visibility(m, m_prime, params);
    report.qfi = lossless ? qfi_closed_form(m, m_prime, params.gamma, params.dephase_len)
                          : qfi_numerical(lossy_family(m, m_prime, params), phi).qfi;
    report.qcrb = report.qfi == 0.0 ? kInf : 1.0 / std::sqrt(report.qfi);
    report.snl = shot_noise_limit(m, m_prime);
    report.hl = heisenberg_limit(m, m_prime);
    return report;
}

}  // namespace pefock
