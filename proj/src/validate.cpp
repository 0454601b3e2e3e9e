// SPDX-License-Identifier: Apache-2.0

#include "pefock/validate.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "pefock/metrology.hpp"
#include "pefock/parity.hpp"

namespace pefock::validate {

namespace {

constexpr double kPi = 3.14159265358979323846;

double u01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::pair<int, int>> state_grid(int max_total)
{
    std::vector<std::pair<int, int>> states;
    for (int m = 1; m <= max_total; ++m)
        for (int mp = 0; mp < m && m + mp <= max_total; ++mp) states.emplace_back(m, mp);
    return states;
}

std::string format_gap(double gap)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << gap;
    return os.str();
}

struct Checker {
    Report report;

    void record(const std::string& name, bool passed, const std::string& detail)
    {
        report.checks.push_back({name, passed, detail});
    }

    void record_gap(const std::string& name, double worst, double tol, const std::string& extra = "")
    {
        std::string detail = "max deviation " + format_gap(worst) + " (tol " + format_gap(tol) + ")";
        if (!extra.empty()) detail += ", " + extra;
        record(name, worst <= tol, detail);
    }
};

void check_parity_closed_form(Checker& c, int max_total)
{
    std::mt19937_64 rng(2024001);
    double worst = 0.0, worst_rel = 0.0;
    for (const auto& [m, mp] : state_grid(max_total)) {
        const int dm = m - mp;
        const double sign = ((m + mp) % 2 == 0) ? 1.0 : -1.0;
        for (int rep = 0; rep < 4; ++rep) {
            const double phi = 2.0 * kPi * u01(rng);
            const double gamma = 0.6 * u01(rng);
            const double len = 0.2 + 1.8 * u01(rng);
            const DensityOperator rho = dephased_density(m, mp, phi, gamma, len);
            const double got = parity_expectation(rho, true);
            const double want = sign * std::exp(-dm * dm * gamma * len) * std::cos(dm * phi);
            worst = std::max(worst, std::abs(got - want));
            // same signal through the unshifted operator at phi + pi/2
            const double unshifted =
                parity_expectation(dephased_density(m, mp, phi + kPi / 2.0, gamma, len), false);
            worst_rel = std::max(worst_rel, std::abs(unshifted - got));
        }
    }
    c.record_gap("parity expectation vs closed form", worst, oracle::kExactTol);
    c.record_gap("parity shift convention (phi -> phi + pi/2)", worst_rel, oracle::kExactTol);
}

void check_dense_trace(Checker& c, int max_total)
{
    std::mt19937_64 rng(2024002);
    double worst = 0.0;
    const ParityOperator op(max_total);
    for (const auto& [m, mp] : state_grid(max_total)) {
        const double phi = 2.0 * kPi * u01(rng);
        const double gamma = 0.5 * u01(rng);
        for (bool shifted : {false, true}) {
            const DensityOperator rho = dephased_density(m, mp, phi, gamma, 1.0);
            const double sparse = parity_expectation(op, rho, shifted);
            const double dense = oracle::dense_recompute(rho, op, shifted);
            worst = std::max(worst, std::abs(sparse - dense));
        }
    }
    c.record_gap("sparse vs dense parity trace", worst, oracle::kExactTol);
}

void check_loss_coefficients(Checker& c)
{
    std::mt19937_64 rng(2024003);
    double worst_sum = 0.0, worst_swap = 0.0, worst_range = 0.0;
    for (int rep = 0; rep < 30; ++rep) {
        const int m = 1 + static_cast<int>(u01(rng) * 6);
        const int mp = static_cast<int>(u01(rng) * m);
        NoiseParams params;
        params.t_a = u01(rng);
        params.t_b = u01(rng);
        const LossCoefficients d = loss_coefficients(m, mp, params);
        NoiseParams swapped;
        swapped.t_a = params.t_b;
        swapped.t_b = params.t_a;
        const LossCoefficients ds = loss_coefficients(m, mp, swapped);
        double sum1 = 0.0, sum2 = 0.0;
        for (int k = 0; k <= m; ++k)
            for (int kp = 0; kp <= mp; ++kp) {
                sum1 += d.d1(k, kp);
                sum2 += d.d2(k, kp);
                worst_swap = std::max(worst_swap, std::abs(d.d2(k, kp) - ds.d1(k, kp)));
                for (double w : {d.d1(k, kp), d.d2(k, kp)})
                    worst_range = std::max({worst_range, -w, w - 1.0});
            }
        for (int k = 0; k <= mp; ++k)
            for (int kp = 0; kp <= mp; ++kp)
                for (double w : {d.d3(k, kp), d.d4(k, kp)})
                    worst_range = std::max({worst_range, -w, w - 1.0});
        worst_sum = std::max({worst_sum, std::abs(sum1 - 1.0), std::abs(sum2 - 1.0)});
    }
    c.record_gap("loss coefficients: binomial completeness", worst_sum, oracle::kExactTol);
    c.record_gap("loss coefficients: arm-swap symmetry", worst_swap, oracle::kExactTol);
    c.record_gap("loss coefficients: weights within [0,1]", worst_range, 0.0);
}

void check_lossy_assembly(Checker& c, int max_m)
{
    std::mt19937_64 rng(2024004);
    double worst = 0.0, worst_trace = 0.0;
    int cases = 0;
    for (int m = 1; m <= max_m; ++m) {
        for (int mp = 0; mp < m; ++mp) {
            for (int rep = 0; rep < 2; ++rep) {
                NoiseParams params;
                params.gamma = 0.5 * u01(rng);
                params.t_a = rep == 0 ? 1.0 : 0.5 + 0.5 * u01(rng);
                params.t_b = u01(rng);
                const double phi = 2.0 * kPi * u01(rng);
                const DensityOperator assembled = lossy_dephased_density(m, mp, phi, params);
                const DensityOperator brute =
                    oracle::lossy_state_bruteforce(m, mp, phi, params, m);
                worst = std::max(worst, oracle::max_entry_difference(assembled, brute));
                worst_trace = std::max(worst_trace, std::abs(assembled.trace() - 1.0));
                ++cases;
            }
        }
    }
    c.record_gap("loss model vs four-mode bruteforce", worst, oracle::kExactTol,
                 std::to_string(cases) + " draws");
    c.record_gap("lossy state trace", worst_trace, oracle::kExactTol);
}

void check_channel_structure(Checker& c)
{
    std::mt19937_64 rng(2024005);
    double worst_semi = 0.0, worst_comm = 0.0, worst_psd = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        const int m = 1 + static_cast<int>(u01(rng) * 4);
        const int mp = static_cast<int>(u01(rng) * m);
        const double phi = 2.0 * kPi * u01(rng);
        const double gamma = 0.4 * u01(rng);
        const double l1 = u01(rng), l2 = u01(rng);
        const DensityOperator rho = to_density(apply_phase_shift(make_mm_state(m, mp), phi));

        const DensityOperator two_step = dephase(dephase(rho, gamma, l1), gamma, l2);
        const DensityOperator one_step = dephase(rho, gamma, l1 + l2);
        worst_semi = std::max(worst_semi, oracle::max_entry_difference(two_step, one_step));

        NoiseParams params;
        params.gamma = gamma;
        params.dephase_len = l1;
        params.t_a = 0.5 + 0.5 * u01(rng);
        params.t_b = u01(rng);
        const DensityOperator loss_then_dephase =
            dephase(apply_loss(rho, params), gamma, l1);
        const DensityOperator dephase_then_loss =
            apply_loss(dephase(rho, gamma, l1), params);
        worst_comm =
            std::max(worst_comm, oracle::max_entry_difference(loss_then_dephase, dephase_then_loss));
        worst_comm = std::max(worst_comm,
                              oracle::max_entry_difference(
                                  loss_then_dephase, lossy_dephased_density(m, mp, phi, params)));

        worst_psd = std::max(worst_psd, -oracle::min_eigenvalue(loss_then_dephase));
    }
    c.record_gap("dephasing semigroup property", worst_semi, oracle::kExactTol);
    c.record_gap("loss and dephasing commute", worst_comm, oracle::kExactTol);
    c.record_gap("channel outputs positive semidefinite", worst_psd, oracle::kPsdTol);
}

void check_sensitivity(Checker& c)
{
    std::mt19937_64 rng(2024006);
    double worst_err = 0.0, worst_red = 0.0, worst_signal = 0.0, worst_lossy = 0.0;
    for (int rep = 0; rep < 12; ++rep) {
        const int m = 1 + static_cast<int>(u01(rng) * 4);
        const int mp = static_cast<int>(u01(rng) * m);
        const int dm = m - mp;
        const double gamma = 0.4 * u01(rng);
        const double phi = (0.15 + 0.7 * u01(rng)) * kPi / (2.0 * dm);

        const double closed = sensitivity_closed_form(m, mp, gamma, 1.0, phi);
        const double propagated =
            sensitivity_error_propagation(dephased_family(m, mp, gamma, 1.0), phi);
        worst_err = std::max(worst_err, std::abs(closed - propagated));

        NoiseParams lossless{gamma, 1.0, 1.0, 1.0};
        worst_red =
            std::max(worst_red, std::abs(sensitivity_lossy(m, mp, lossless, phi) - closed));

        NoiseParams lossy{gamma, 1.0, 1.0, 0.3 + 0.7 * u01(rng)};
        const auto [k1, k2] = k_coefficients(m, mp, lossy);
        const double sign = ((m + mp) % 2 == 0) ? 1.0 : -1.0;
        const double signal =
            parity_expectation(lossy_dephased_density(m, mp, phi, lossy), true);
        worst_signal =
            std::max(worst_signal, std::abs(signal - (k1 + sign * k2 * std::cos(dm * phi))));

        const double lossy_closed = sensitivity_lossy(m, mp, lossy, phi);
        const double lossy_prop =
            sensitivity_error_propagation(lossy_family(m, mp, lossy), phi);
        worst_lossy = std::max(worst_lossy, std::abs(lossy_closed - lossy_prop));
    }
    c.record_gap("sensitivity: error propagation vs closed form", worst_err, 1e-6);
    c.record_gap("lossy sensitivity reduces at t = 1", worst_red, oracle::kExactTol);
    c.record_gap("lossy parity signal vs K decomposition", worst_signal, oracle::kExactTol);
    c.record_gap("lossy sensitivity vs error propagation", worst_lossy, 1e-6);
}

void check_qfi(Checker& c, int max_total)
{
    double worst = 0.0, worst_sat = 0.0;
    for (const auto& [m, mp] : state_grid(max_total)) {
        for (double gamma : {0.0, 0.1, 0.5}) {
            const double closed = qfi_closed_form(m, mp, gamma, 1.0);
            const double numeric = qfi_numerical(dephased_family(m, mp, gamma, 1.0), 0.37).qfi;
            worst = std::max(worst, std::abs(closed - numeric));
            worst_sat = std::max(worst_sat, saturation_check(m, mp, gamma, 1.0).gap);
        }
    }
    c.record_gap("numerical SLD QFI vs closed form", worst, 1e-8);
    c.record_gap("parity saturates the Cramer-Rao bound", worst_sat, 1e-10);
}

void check_visibility(Checker& c)
{
    double worst = 0.0;
    bool monotone = true;
    for (double gamma : {0.05, 0.1, 0.2}) {
        double previous = 2.0;
        for (int dm : {2, 4, 6, 8}) {
            NoiseParams params{gamma, 1.0, 1.0, 1.0};
            const double v = visibility(dm, 0, params);
            worst = std::max(worst, std::abs(v - std::exp(-dm * dm * gamma)));
            if (v >= previous) monotone = false;
            previous = v;
            if (v < 0.0 || v > 1.0) monotone = false;
        }
    }
    c.record_gap("visibility closed form", worst, oracle::kExactTol);
    c.record("visibility ordering in delta m", monotone, "strictly decreasing for gamma > 0");
}

void check_mc_dephasing(Checker& c, const oracle::McConfig& mc)
{
    double worst_sigmas = 0.0;
    int comparisons = 0;
    for (int dm : {1, 2, 4, 6, 8}) {
        for (int i = 1; i <= 10; ++i) {
            const double gamma = 0.02 * i;
            oracle::McConfig cfg = mc;
            cfg.seed = mc.seed + 1000 * dm + i;
            const auto est = oracle::mc_dephasing_factor(dm, gamma, 1.0, cfg);
            const double want = std::exp(-static_cast<double>(dm) * dm * gamma);
            const double se = std::max(est.std_error_re, 1e-15);
            worst_sigmas = std::max(worst_sigmas, std::abs(est.estimate.real() - want) / se);
            if (est.std_error_im > 0.0)
                worst_sigmas =
                    std::max(worst_sigmas, std::abs(est.estimate.imag()) / est.std_error_im);
            ++comparisons;
        }
    }
    c.record("monte carlo dephasing factor", worst_sigmas <= mc.confidence_sigmas,
             "worst deviation " + format_gap(worst_sigmas) + " sigma over " +
                 std::to_string(comparisons) + " points (limit " +
                 format_gap(mc.confidence_sigmas) + ")");
}

void check_mc_convergence(Checker& c, const oracle::McConfig& mc)
{
    oracle::McConfig small = mc;
    small.samples = std::max<std::uint64_t>(mc.samples / 4, 1000);
    oracle::McConfig large = mc;
    large.samples = small.samples * 4;
    const auto est_small = oracle::mc_dephasing_factor(2, 0.1, 1.0, small);
    const auto est_large = oracle::mc_dephasing_factor(2, 0.1, 1.0, large);
    const double ratio = est_small.std_error_re / est_large.std_error_re;
    c.record("monte carlo convergence rate", std::abs(ratio - 2.0) < 0.4,
             "std error ratio " + format_gap(ratio) + " for 4x samples (want 2.0 +- 0.4)");

    const auto repeat = oracle::mc_dephasing_factor(2, 0.1, 1.0, small);
    c.record("monte carlo seeded reproducibility",
             est_small.estimate == repeat.estimate &&
                 est_small.std_error_re == repeat.std_error_re,
             "identical estimates for identical seeds");
}

}  // namespace

bool Report::all_passed() const
{
    for (const auto& check : checks)
        if (!check.passed) return false;
    return true;
}

std::string Report::to_string() const
{
    std::ostringstream os;
    for (const auto& check : checks)
        os << (check.passed ? "[ok]   " : "[FAIL] ") << check.name << ": " << check.detail << "\n";
    return os.str();
}

Report run_validation(Depth depth, const oracle::McConfig& mc)
{
    Checker c;
    const int max_total = depth == Depth::full ? 8 : 6;
    const int max_loss_m = depth == Depth::full ? 4 : 3;

    check_parity_closed_form(c, max_total);
    check_dense_trace(c, max_total);
    check_loss_coefficients(c);
    check_lossy_assembly(c, max_loss_m);
    check_channel_structure(c);
    check_sensitivity(c);
    check_qfi(c, max_total);
    check_visibility(c);

    if (depth == Depth::full) {
        check_mc_dephasing(c, mc);
        check_mc_convergence(c, mc);
    }
    return c.report;
}

}  // namespace pefock::validate
