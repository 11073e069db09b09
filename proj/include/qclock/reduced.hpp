#pragma once

#include <string>

#include <Eigen/Dense>

#include "qclock/circuit.hpp"
#include "qclock/evolve.hpp"

namespace qclock {

// Closed linear ODE system for the chain observables
//   Z_i = <sigma_z^{N-i} sigma_x^{N-i+1} ... sigma_x^N>,   i = 0..N-1,
//   Z_N = <sigma_x^1 ... sigma_x^N>,
//   Y_i = <sigma_y^{N-i} sigma_x^{N-i+1} ... sigma_x^N>,   i = 0..N-1,
// with Z_0 the output polarization. Valid for single open chains with one
// driver on cell 1; couplings may be non-uniform and signed.

// Layout: [Z_0 .. Z_N, Y_0 .. Y_{N-1}], dimension 2N+1.
using ReducedState = Eigen::VectorXd;

// Chain data extracted from a circuit; throws std::invalid_argument with
// an unsupported-topology message when the circuit is not a single chain.
struct ChainWire {
    int n = 0;                        // number of quantum cells (the paper's N)
    std::vector<double> coupling_j;   // coupling_j[k-1] couples cells (k, k+1)
    Schedule driver;                  // P_in(t) on cell 1
    std::vector<Schedule> gamma;      // per-cell clock, gamma[i-1] for cell i
    double t_f = 0.0;
};

ChainWire chain_view(const Circuit& c);

// Latched start: Z_0 = +-1 from the last bit of the label, all else zero.
ReducedState init_reduced(const std::string& label);

void reduced_rhs(const ChainWire& wire, double t, const ReducedState& s,
                 ReducedState& dsdt);

// Fixed-step 4th-order integration on the same grid convention as
// evolve_state. The trajectory carries one column per reduced component;
// "Z0" is the output polarization.
Trajectory evolve_reduced(const Circuit& c, const std::string& label, double dt,
                          int samples = 300);

// max_t |Z_0^reduced(t) - P_out^full(t)| with both integrations sharing one
// time grid, sampled every step.
double compare_with_full(const Circuit& c, const std::string& label, double dt);

}  // namespace qclock
