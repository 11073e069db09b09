#pragma once

#include <string>
#include <vector>

#include "qclock/observables.hpp"
#include "qclock/pauli.hpp"

namespace qclock {

// Named observable recorded along a run.
struct Probe {
    std::string name;
    PauliString op;
};

// Time-stamped observable records from a run. Columns are uniform across
// rows; values()[i] pairs with times()[i].
struct Trajectory {
    std::vector<double> times;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t find_column(const std::string& name) const;
    double max_abs_column(const std::string& name) const;
};

struct EvolveOptions {
    double dt = 1e-3;       // target step, hbar/E_k; the actual step divides t_f evenly
    int samples = 300;      // trajectory rows per run (plus the t=0 row)
};

struct StateRun {
    StateVector final_state;
    Trajectory trajectory;  // always carries a "norm" column
    double norm_drift = 0.0;
};

// Fixed-step classic 4th-order integration of i d|psi>/dt = H(t)|psi>
// from t = 0 to t_f. No renormalization: norm drift is reported as an
// accuracy diagnostic.
StateRun evolve_state(const HamiltonianTemplate& h, const StateVector& v0, double t_f,
                      const EvolveOptions& opt = {}, const std::vector<Probe>& probes = {});

struct DensityRun {
    DensityMatrix final_rho;
    Trajectory trajectory;  // carries "trace" and "purity" columns
    double trace_drift = 0.0;
};

// Von Neumann evolution d rho/dt = -i [H(t), rho]; rho is re-symmetrized
// each step to (rho + rho^dagger)/2.
DensityRun evolve_density(const HamiltonianTemplate& h, const DensityMatrix& rho0,
                          double t_f, const EvolveOptions& opt = {},
                          const std::vector<Probe>& probes = {});

// Basis state |label> as a normalized state vector / pure density matrix.
StateVector basis_state(const std::string& label);
DensityMatrix basis_density(const std::string& label);

}  // namespace qclock
