#pragma once

#include <map>
#include <string>

#include "qclock/pauli.hpp"

namespace qclock {

// <psi|P|psi>. The imaginary residue must stay below 1e-10; larger values
// indicate a corrupted state and throw.
double pauli_expectation(const StateVector& v, const PauliString& p);
// Tr(P rho), matrix-free over the string's single nonzero per column.
double pauli_expectation(const DensityMatrix& rho, const PauliString& p);

// <sigma_z^cell>, in [-1, 1].
double polarization(const StateVector& v, int cell);
double polarization(const DensityMatrix& rho, int cell);

struct TransitionReport {
    std::map<std::string, double> entries;  // label -> probability
    double residual = 0.0;                  // mass below threshold
};

TransitionReport transition_probabilities(const StateVector& v, int n_cells,
                                          double threshold = 1e-4);

// Probability that the given cell reads bit 1.
double bit_one_probability(const StateVector& v, int cell, int n_cells);

// Couplings whose cells violate their preferred (anti-)alignment, plus one
// if cell 1 disagrees with the driver's instantaneous favored bit
// (P > 0 favors |0>). NNN couplings are not counted.
int kink_count(const std::string& label, const Circuit& c, double t = 0.0);

}  // namespace qclock
