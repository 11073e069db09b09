#pragma once

#include <string>

#include "qclock/circuit.hpp"
#include "qclock/evolve.hpp"

namespace qclock {

// Exact decomposition rho = rho_wire + rho_I of a density matrix evolving
// under H_wire + H_I: rho_wire follows the Von Neumann equation under
// H_wire alone with rho_wire(0) = rho(0); rho_I picks up the source term
// -i [H_I, rho_wire] and starts at zero. rho_total is integrated alongside
// as the exactness diagnostic.

struct SplitRun {
    // Columns: "shift" (Tr sigma_z^out rho_I), "pol_total", "pol_wire",
    // "correlator" (Tr sigma_z^{N-2} sigma_x^N rho_wire),
    // "split_error" (max-abs entry of rho_wire + rho_I - rho_total),
    // "trace_rho_i".
    Trajectory trajectory;
    DensityMatrix rho_wire;
    DensityMatrix rho_i;
    DensityMatrix rho_total;
    double max_split_error = 0.0;
    double max_trace_rho_i = 0.0;
};

// Requires NNN couplings (otherwise there is nothing to split) and
// n_cells <= 10. The coupled pair and the total advance in lockstep on one
// fixed RK4 grid with shared stage times.
SplitRun evolve_split(const Circuit& c, const DensityMatrix& rho0, double dt,
                      int samples = 300);

// Tr(sigma_z^cell rho_I): the NNN-induced polarization shift.
double polarization_shift(const DensityMatrix& rho_i, int cell);

// Tr(sigma_z^{N-2} sigma_x^N rho_wire): the driving signal behind the
// heuristic that excited starts accumulate less shift.
double driving_correlator(const DensityMatrix& rho_wire, int n_cells);

}  // namespace qclock
