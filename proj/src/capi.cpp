// SPDX-License-Identifier: Apache-2.0

#include "pefock.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "pefock/channels.hpp"
#include "pefock/fock.hpp"
#include "pefock/metrology.hpp"
#include "pefock/oracle.hpp"
#include "pefock/parity.hpp"
#include "pefock/sweep.hpp"
#include "pefock/validate.hpp"

struct pefock_state {
    pefock::TwoModePureState value;
};

struct pefock_density {
    pefock::DensityOperator value;
};

namespace {

thread_local std::string g_last_error;

pefock::NoiseParams convert(const pefock_noise_params& p)
{
    return pefock::NoiseParams{p.gamma, p.dephase_len, p.t_a, p.t_b};
}

// Runs `fn`, translating exceptions into status codes and recording the
// message for pefock_last_error().
template <typename Fn>
pefock_status guarded(Fn&& fn)
{
    try {
        fn();
        g_last_error.clear();
        return PEFOCK_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PEFOCK_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return PEFOCK_ERR_NUMERIC;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return PEFOCK_ERR_INVALID_ARGUMENT;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        return PEFOCK_ERR_IO;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PEFOCK_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PEFOCK_ERR_INTERNAL;
    }
}

pefock_status require(bool ok, const char* message)
{
    if (ok) return PEFOCK_OK;
    g_last_error = message;
    return PEFOCK_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text)
{
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* pefock_version(void)
{
    return "1.0.0";
}

const char* pefock_status_name(pefock_status status)
{
    switch (status) {
        case PEFOCK_OK: return "ok";
        case PEFOCK_ERR_INVALID_ARGUMENT: return "invalid argument";
        case PEFOCK_ERR_NUMERIC: return "numeric error";
        case PEFOCK_ERR_IO: return "i/o error";
        case PEFOCK_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* pefock_last_error(void)
{
    return g_last_error.c_str();
}

pefock_status pefock_mm_state_create(int m, int m_prime, pefock_state** out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded([&] { *out = new pefock_state{pefock::make_mm_state(m, m_prime)}; });
}

pefock_status pefock_state_phase_shift(const pefock_state* state, double phi, pefock_state** out)
{
    if (auto st = require(state != nullptr && out != nullptr, "null handle")) return st;
    return guarded([&] { *out = new pefock_state{pefock::apply_phase_shift(state->value, phi)}; });
}

void pefock_state_destroy(pefock_state* state)
{
    delete state;
}

pefock_status pefock_state_to_density(const pefock_state* state, pefock_density** out)
{
    if (auto st = require(state != nullptr && out != nullptr, "null handle")) return st;
    return guarded([&] { *out = new pefock_density{pefock::to_density(state->value)}; });
}

pefock_status pefock_density_dephase(const pefock_density* rho, double gamma, double dephase_len,
                                     pefock_density** out)
{
    if (auto st = require(rho != nullptr && out != nullptr, "null handle")) return st;
    return guarded(
        [&] { *out = new pefock_density{pefock::dephase(rho->value, gamma, dephase_len)}; });
}

pefock_status pefock_lossy_dephased_density(int m, int m_prime, double phi,
                                            pefock_noise_params params, pefock_density** out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded([&] {
        *out = new pefock_density{
            pefock::lossy_dephased_density(m, m_prime, phi, convert(params))};
    });
}

pefock_status pefock_density_trace(const pefock_density* rho, double* out)
{
    if (auto st = require(rho != nullptr && out != nullptr, "null handle")) return st;
    return guarded([&] { *out = rho->value.trace(); });
}

size_t pefock_density_num_entries(const pefock_density* rho)
{
    return rho == nullptr ? 0 : rho->value.entries().size();
}

pefock_status pefock_density_entry(const pefock_density* rho, size_t index, int* ket_a, int* ket_b,
                                   int* bra_a, int* bra_b, double* re, double* im)
{
    if (auto st = require(rho != nullptr, "null handle")) return st;
    if (auto st = require(index < rho->value.entries().size(), "entry index out of range"))
        return st;
    auto it = rho->value.entries().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    if (ket_a) *ket_a = it->first.ket.photons_a;
    if (ket_b) *ket_b = it->first.ket.photons_b;
    if (bra_a) *bra_a = it->first.bra.photons_a;
    if (bra_b) *bra_b = it->first.bra.photons_b;
    if (re) *re = it->second.real();
    if (im) *im = it->second.imag();
    g_last_error.clear();
    return PEFOCK_OK;
}

void pefock_density_destroy(pefock_density* rho)
{
    delete rho;
}

pefock_status pefock_parity_expectation(const pefock_density* rho, int shifted, double* out)
{
    if (auto st = require(rho != nullptr && out != nullptr, "null handle")) return st;
    return guarded([&] { *out = pefock::parity_expectation(rho->value, shifted != 0); });
}

pefock_status pefock_sensitivity_closed_form(int m, int m_prime, double gamma, double dephase_len,
                                             double phi, double* out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded(
        [&] { *out = pefock::sensitivity_closed_form(m, m_prime, gamma, dephase_len, phi); });
}

pefock_status pefock_sensitivity_lossy(int m, int m_prime, pefock_noise_params params, double phi,
                                       double* out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded([&] { *out = pefock::sensitivity_lossy(m, m_prime, convert(params), phi); });
}

pefock_status pefock_k_coefficients(int m, int m_prime, pefock_noise_params params, double* k1,
                                    double* k2)
{
    if (auto st = require(k1 != nullptr && k2 != nullptr, "out pointer is null")) return st;
    return guarded([&] {
        const auto [a, b] = pefock::k_coefficients(m, m_prime, convert(params));
        *k1 = a;
        *k2 = b;
    });
}

pefock_status pefock_visibility(int m, int m_prime, pefock_noise_params params, double* out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded([&] { *out = pefock::visibility(m, m_prime, convert(params)); });
}

pefock_status pefock_qfi_closed_form(int m, int m_prime, double gamma, double dephase_len,
                                     double* out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded([&] { *out = pefock::qfi_closed_form(m, m_prime, gamma, dephase_len); });
}

pefock_status pefock_qfi_numerical(int m, int m_prime, pefock_noise_params params, double phi,
                                   double* out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded([&] {
        *out = pefock::qfi_numerical(pefock::lossy_family(m, m_prime, convert(params)), phi).qfi;
    });
}

pefock_status pefock_saturation_check(int m, int m_prime, double gamma, double dephase_len,
                                      int* saturated, double* gap)
{
    if (auto st = require(saturated != nullptr && gap != nullptr, "out pointer is null"))
        return st;
    return guarded([&] {
        const auto result = pefock::saturation_check(m, m_prime, gamma, dephase_len);
        *saturated = result.saturated ? 1 : 0;
        *gap = result.gap;
    });
}

pefock_status pefock_shot_noise_limit(int m, int m_prime, double* out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded([&] { *out = pefock::shot_noise_limit(m, m_prime); });
}

pefock_status pefock_heisenberg_limit(int m, int m_prime, double* out)
{
    if (auto st = require(out != nullptr, "out pointer is null")) return st;
    return guarded([&] { *out = pefock::heisenberg_limit(m, m_prime); });
}

pefock_status pefock_mc_dephasing_factor(int delta_m, double gamma, double dephase_len,
                                         uint64_t samples, uint64_t seed, double* re, double* im,
                                         double* std_error)
{
    if (auto st = require(re != nullptr && im != nullptr && std_error != nullptr,
                          "out pointer is null"))
        return st;
    return guarded([&] {
        pefock::oracle::McConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        const auto est = pefock::oracle::mc_dephasing_factor(delta_m, gamma, dephase_len, cfg);
        *re = est.estimate.real();
        *im = est.estimate.imag();
        *std_error = est.std_error_re;
    });
}

pefock_status pefock_run_sweep(const pefock_sweep_spec* spec, size_t* rows_written)
{
    if (auto st = require(spec != nullptr, "spec is null")) return st;
    return guarded([&] {
        pefock::sweep::SweepSpec cpp;
        cpp.states = {{spec->m, spec->m_prime}};
        cpp.phi_start = spec->phi_start;
        cpp.phi_stop = spec->phi_stop;
        cpp.phi_steps = spec->phi_steps;
        cpp.open_phi_grid = spec->open_phi_grid != 0;
        cpp.min_phase_only = spec->min_phase_only != 0;
        if (spec->gammas != nullptr)
            cpp.gammas.assign(spec->gammas, spec->gammas + spec->num_gammas);
        cpp.dephase_len = spec->dephase_len;
        cpp.t_a = spec->t_a;
        cpp.t_b = spec->t_b;
        cpp.output_path = spec->output_path == nullptr ? "" : spec->output_path;
        switch (spec->quantity) {
            case PEFOCK_QUANTITY_SENSITIVITY:
                cpp.quantity = pefock::sweep::Quantity::sensitivity;
                break;
            case PEFOCK_QUANTITY_PARITY: cpp.quantity = pefock::sweep::Quantity::parity; break;
            case PEFOCK_QUANTITY_VISIBILITY:
                cpp.quantity = pefock::sweep::Quantity::visibility;
                break;
            case PEFOCK_QUANTITY_QFI: cpp.quantity = pefock::sweep::Quantity::qfi; break;
            case PEFOCK_QUANTITY_REPORT: cpp.quantity = pefock::sweep::Quantity::report; break;
            default: throw std::invalid_argument("unknown sweep quantity");
        }
        const auto summary = pefock::sweep::run_sweep(cpp);
        if (rows_written) *rows_written = summary.rows;
    });
}

pefock_status pefock_run_fig2(const char* output_path, size_t* rows_written)
{
    if (auto st = require(output_path != nullptr, "output path is null")) return st;
    return guarded([&] {
        const auto summary = pefock::sweep::run_sweep(pefock::sweep::fig2_preset(output_path));
        if (rows_written) *rows_written = summary.rows;
    });
}

pefock_status pefock_run_fig3(const char* output_path, size_t* rows_written)
{
    if (auto st = require(output_path != nullptr, "output path is null")) return st;
    return guarded([&] {
        const auto summary = pefock::sweep::run_sweep(pefock::sweep::fig3_preset(output_path));
        if (rows_written) *rows_written = summary.rows;
    });
}

pefock_status pefock_run_fig4(const char* output_path, size_t* rows_written)
{
    if (auto st = require(output_path != nullptr, "output path is null")) return st;
    return guarded([&] {
        const auto summary = pefock::sweep::run_sweep(pefock::sweep::fig4_preset(output_path));
        if (rows_written) *rows_written = summary.rows;
    });
}

pefock_status pefock_validate(pefock_validate_depth depth, uint64_t mc_samples, uint64_t mc_seed,
                              char** report, int* all_passed)
{
    if (auto st = require(report != nullptr && all_passed != nullptr, "out pointer is null"))
        return st;
    return guarded([&] {
        pefock::oracle::McConfig mc;
        if (mc_samples > 0) mc.samples = mc_samples;
        mc.seed = mc_seed;
        const auto result = pefock::validate::run_validation(
            depth == PEFOCK_VALIDATE_FULL ? pefock::validate::Depth::full
                                          : pefock::validate::Depth::quick,
            mc);
        *report = copy_string(result.to_string());
        *all_passed = result.all_passed() ? 1 : 0;
    });
}

void pefock_string_free(char* str)
{
    delete[] str;
}

}  // extern "C"
