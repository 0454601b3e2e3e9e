// SPDX-License-Identifier: Apache-2.0

#include "pefock/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pefock/metrology.hpp"
#include "pefock/parity.hpp"

namespace pefock::sweep {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 12 significant digits; divergences serialize as "inf", never NaN.
std::string format_value(double value)
{
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::vector<double> phi_grid(const SweepSpec& spec)
{
    std::vector<double> grid;
    const double span = spec.phi_stop - spec.phi_start;
    if (spec.open_phi_grid) {
        grid.reserve(spec.phi_steps);
        for (int i = 0; i < spec.phi_steps; ++i)
            grid.push_back(spec.phi_start + span * (i + 1) / (spec.phi_steps + 1));
    } else {
        grid.reserve(spec.phi_steps);
        for (int i = 0; i < spec.phi_steps; ++i)
            grid.push_back(spec.phi_start + span * i / (spec.phi_steps - 1));
    }
    return grid;
}

const char* header_for(Quantity q)
{
    switch (q) {
        case Quantity::sensitivity:
            return "m,m_prime,gamma,dephase_len,t_a,t_b,phi,sensitivity,qcrb,snl,hl";
        case Quantity::parity:
            return "m,m_prime,gamma,dephase_len,t_a,t_b,phi,parity";
        case Quantity::visibility:
            return "m,m_prime,gamma,dephase_len,t_a,t_b,visibility";
        case Quantity::qfi:
            return "m,m_prime,gamma,dephase_len,t_a,t_b,phi,qfi,qfi_sld,qcrb";
        case Quantity::report:
            return "m,m_prime,gamma,dephase_len,t_a,t_b,phi,sensitivity,visibility,qfi,qcrb,snl,"
                   "hl";
    }
    throw std::invalid_argument("unknown quantity");
}

}  // namespace

const char* quantity_name(Quantity q)
{
    switch (q) {
        case Quantity::sensitivity: return "sensitivity";
        case Quantity::parity: return "parity";
        case Quantity::visibility: return "visibility";
        case Quantity::qfi: return "qfi";
        case Quantity::report: return "report";
    }
    return "?";
}

void SweepSpec::validate() const
{
    if (states.empty()) throw std::invalid_argument("sweep: no states given");
    for (const auto& [m, mp] : states) {
        if (mp < 0 || m <= mp)
            throw std::invalid_argument("sweep: each state requires m > m_prime >= 0");
    }
    if (gammas.empty()) throw std::invalid_argument("sweep: gamma list is empty");
    for (double g : gammas)
        if (!(g >= 0.0)) throw std::invalid_argument("sweep: gamma must be >= 0");
    if (!(dephase_len >= 0.0)) throw std::invalid_argument("sweep: dephase_len must be >= 0");
    if (!(t_a >= 0.0 && t_a <= 1.0) || !(t_b >= 0.0 && t_b <= 1.0))
        throw std::invalid_argument("sweep: transmittances must lie in [0, 1]");
    const bool needs_phi_grid =
        !min_phase_only && quantity != Quantity::visibility;
    if (needs_phi_grid) {
        if (phi_steps < 2) throw std::invalid_argument("sweep: phi_steps must be >= 2");
        if (!(phi_start < phi_stop)) throw std::invalid_argument("sweep: phi_start must be < phi_stop");
    }
    if (output_path.empty()) throw std::invalid_argument("sweep: output path is empty");
}

SweepSummary run_sweep(const SweepSpec& spec)
{
    spec.validate();

    std::ostringstream csv;
    csv << header_for(spec.quantity) << "\n";

    std::size_t rows = 0;
    for (const auto& [m, mp] : spec.states) {
        const int dm = m - mp;
        for (double gamma : spec.gammas) {
            const NoiseParams params{gamma, spec.dephase_len, spec.t_a, spec.t_b};
            const bool lossless = spec.t_a == 1.0 && spec.t_b == 1.0;

            auto prefix = [&](double) {
                csv << m << ',' << mp << ',' << format_value(gamma) << ','
                    << format_value(spec.dephase_len) << ',' << format_value(spec.t_a) << ','
                    << format_value(spec.t_b);
            };

            if (spec.quantity == Quantity::visibility) {
                prefix(0.0);
                csv << ',' << format_value(visibility(m, mp, params)) << "\n";
                ++rows;
                continue;
            }

            std::vector<double> phis = spec.min_phase_only
                                           ? std::vector<double>{kPi / (2.0 * dm)}
                                           : phi_grid(spec);
            for (double phi : phis) {
                prefix(phi);
                switch (spec.quantity) {
                    case Quantity::sensitivity: {
                        const double sens = sensitivity_lossy(m, mp, params, phi);
                        const double qcrb =
                            lossless ? qcrb_closed_form(m, mp, gamma, spec.dephase_len)
                                     : 1.0 / std::sqrt(qfi_numerical(lossy_family(m, mp, params),
                                                                     phi)
                                                           .qfi);
                        csv << ',' << format_value(phi) << ',' << format_value(sens) << ','
                            << format_value(qcrb) << ',' << format_value(shot_noise_limit(m, mp))
                            << ',' << format_value(heisenberg_limit(m, mp));
                        break;
                    }
                    case Quantity::parity: {
                        const double signal =
                            parity_expectation(lossy_dephased_density(m, mp, phi, params), true);
                        csv << ',' << format_value(phi) << ',' << format_value(signal);
                        break;
                    }
                    case Quantity::qfi: {
                        const double closed = qfi_closed_form(m, mp, gamma, spec.dephase_len);
                        const double sld = qfi_numerical(lossy_family(m, mp, params), phi).qfi;
                        const double qcrb = sld == 0.0 ? std::numeric_limits<double>::infinity()
                                                       : 1.0 / std::sqrt(sld);
                        csv << ',' << format_value(phi) << ',' << format_value(closed) << ','
                            << format_value(sld) << ',' << format_value(qcrb);
                        break;
                    }
                    case Quantity::report: {
                        const MetrologyReport rep = make_report(m, mp, params, phi);
                        csv << ',' << format_value(phi) << ',' << format_value(rep.sensitivity)
                            << ',' << format_value(rep.visibility) << ','
                            << format_value(rep.qfi) << ',' << format_value(rep.qcrb) << ','
                            << format_value(rep.snl) << ',' << format_value(rep.hl);
                        break;
                    }
                    case Quantity::visibility: break;  // handled above
                }
                csv << "\n";
                ++rows;
            }
        }
    }

    std::ofstream file(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("sweep: cannot open output file " + spec.output_path);
    file << csv.str();
    file.flush();
    if (!file) throw std::runtime_error("sweep: write failed for " + spec.output_path);

    return SweepSummary{rows, spec.output_path};
}

SweepSpec fig2_preset(std::string output_path)
{
    SweepSpec spec;
    spec.states = {{5, 1}};
    spec.gammas = {0.1, 0.3, 0.5};
    spec.dephase_len = 1.0;
    spec.phi_start = 0.0;
    spec.phi_stop = kPi / 2.0;
    spec.phi_steps = 200;
    spec.open_phi_grid = true;  // endpoints diverge
    spec.quantity = Quantity::sensitivity;
    spec.output_path = std::move(output_path);
    return spec;
}

SweepSpec fig3_preset(std::string output_path)
{
    SweepSpec spec;
    spec.states = {{4, 0}, {5, 1}};
    spec.gammas.clear();
    for (int i = 0; i <= 100; ++i) spec.gammas.push_back(0.005 * i);
    spec.dephase_len = 1.0;
    spec.min_phase_only = true;
    spec.quantity = Quantity::sensitivity;
    spec.output_path = std::move(output_path);
    return spec;
}

SweepSpec fig4_preset(std::string output_path)
{
    SweepSpec spec;
    spec.states = {{2, 0}, {4, 0}, {6, 0}, {8, 0}};
    spec.gammas.clear();
    for (int i = 0; i <= 100; ++i) spec.gammas.push_back(0.002 * i);
    spec.dephase_len = 1.0;
    spec.quantity = Quantity::visibility;
    spec.output_path = std::move(output_path);
    return spec;
}

}  // namespace pefock::sweep
