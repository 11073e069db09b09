#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qclock/schedule.hpp"

namespace qclock {

// Cell indices are 1-based; cell 1 is the leftmost cell next to the driver.
// Couplings are in units of the kink energy E_k (fixed to 1).

struct Coupling {
    int a = 0;
    int b = 0;
    double j = 1.0;
    bool operator==(const Coupling&) const = default;
};

struct Driver {
    int cell = 0;
    Schedule schedule;
    bool operator==(const Driver&) const = default;
};

struct ClockZone {
    std::vector<int> cells;
    Schedule schedule;
    bool operator==(const ClockZone&) const = default;
};

struct Circuit {
    int n_cells = 0;
    std::vector<Coupling> couplings;
    std::vector<Coupling> nnn_couplings;
    std::vector<Driver> drivers;
    std::vector<ClockZone> clock_zones;
    double t_f = 0.0;
    double dt = 1e-3;
    int output_cell = 0;               // defaults to n_cells in the builders
    std::string initial_state;         // optional bitstring from config files
    bool operator==(const Circuit&) const = default;
};

// Full invariant check; throws std::invalid_argument naming the violation.
void validate_circuit(const Circuit& c);

// Builders for the named topologies. All throw on out-of-range parameters
// and return circuits that pass validate_circuit.

// Linear chain: driver CosineSwitch(1,-1,t_f) on cell 1, unit couplings
// (i,i+1), one clock zone over all cells with SineRamp(gamma_max, t_f).
// With nnn, pairs (i,i+2) at strength 1/32 are added.
Circuit wire(int n_cells, double t_f, double gamma_max, bool nnn = false);

// Chain identical to wire() except the last coupling has J = -1, so the
// transmitted bit is inverted at the output cell.
Circuit singly_branched_inverter(int n_cells, double t_f, double gamma_max);

// Three input arms of arm_len cells meeting at a device cell, plus an
// output arm. The first arm's driver is the switched input
// CosineSwitch(-1,1,t_f); the other two are held at Constant(fixed_b) and
// Constant(fixed_c). The defaults start all inputs at -1 (bit 1), so the
// latched ground state is unfrustrated and the output holds the fixed
// inputs' majority value through the switch.
Circuit majority_gate(int arm_len, double t_f, double gamma_max,
                      double fixed_b = -1.0, double fixed_c = -1.0);

// Driven input arm splitting into two parallel branches of arm_len cells
// that rejoin at the output cell through two J = -1 couplings. The driver
// is CosineSwitch(-1, 1, t_f) so ground-state switching ends with positive
// output polarization.
Circuit doubly_branched_inverter(int arm_len, double t_f, double gamma_max);

// Basis label <-> index. Labels read cell 1 leftmost; the packed index
// carries cell 1 as the most significant bit. '0' maps to sigma_z
// eigenvalue -1, '1' to +1.
std::size_t label_to_index(const std::string& label);
std::string index_to_label(std::size_t index, int n_cells);
int spin_of_bit(char bit);                       // '0' -> -1, '1' -> +1
int spin_at(std::size_t index, int cell, int n_cells);

// True when the circuit is a single open chain 1-2-...-n with one driver
// on cell 1 and no NNN couplings (the reduced-system precondition).
bool is_single_chain(const Circuit& c);

// FNV-1a hash of a canonical serialization; stable across runs.
std::uint64_t circuit_hash(const Circuit& c);

// Cells with no driver attached and excluding the output cell; the
// "internal" cells whose initial flips generate the excited gate starts.
std::vector<int> internal_cells(const Circuit& c);

}  // namespace qclock
