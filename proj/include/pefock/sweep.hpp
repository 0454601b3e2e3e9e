// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pefock::sweep {

enum class Quantity { sensitivity, parity, visibility, qfi, report };

/// One CSV-producing parameter sweep. Rows are ordered by (state index,
/// gamma index, phi index); all floating-point columns print with 12
/// significant digits and divergent values serialize as "inf", so output
/// is byte-identical across runs of the same spec.
struct SweepSpec {
    std::vector<std::pair<int, int>> states = {{5, 1}};
    double phi_start = 0.0;
    double phi_stop = 1.5707963267948966;
    int phi_steps = 200;
    bool open_phi_grid = false;   // use interior points only
    bool min_phase_only = false;  // single row per gamma at phi = pi/(2 dm)
    std::vector<double> gammas;
    double dephase_len = 1.0;
    double t_a = 1.0;
    double t_b = 1.0;
    std::string output_path;
    Quantity quantity = Quantity::sensitivity;

    /// Throws std::invalid_argument on an ill-formed spec (no states, no
    /// gammas, phi_steps < 2 on a gridded sweep, start >= stop,
    /// out-of-range noise parameters, empty output path).
    void validate() const;
};

struct SweepSummary {
    std::size_t rows = 0;
    std::string path;
};

/// Runs the sweep and writes the CSV. Throws std::invalid_argument for a
/// bad spec and std::runtime_error on I/O failure.
SweepSummary run_sweep(const SweepSpec& spec);

// Figure presets: sensitivity of |5::1> vs phi for gamma in {0.1, 0.3,
// 0.5}; minimum sensitivity of |4::0> and |5::1> vs gamma; visibility vs
// gamma for dm in {2, 4, 6, 8}.
SweepSpec fig2_preset(std::string output_path);
SweepSpec fig3_preset(std::string output_path);
SweepSpec fig4_preset(std::string output_path);

const char* quantity_name(Quantity q);

}  // namespace pefock::sweep
