#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qclock/circuit.hpp"

namespace qclock {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

// Tensor product of single-cell Pauli operators with a real coefficient
// (units E_k). Cell i occupies bit n_cells - i of the basis index, so cell 1
// is the most significant bit.
struct PauliString {
    int n_cells = 0;
    double coefficient = 0.0;
    std::uint64_t x_mask = 0;
    std::uint64_t y_mask = 0;
    std::uint64_t z_mask = 0;

    static PauliString identity(int n_cells, double coefficient = 1.0);
    // letters reads cell 1 leftmost, e.g. "ZZII".
    static PauliString from_letters(const std::string& letters, double coefficient);
    static PauliString single(int n_cells, int cell, Pauli p, double coefficient = 1.0);

    PauliString& set(int cell, Pauli p);
    Pauli letter(int cell) const;
    std::string letters() const;
    std::uint64_t flip_mask() const { return x_mask | y_mask; }
};

// out += scale * P|v>. v and out must be distinct objects of dimension 2^n.
void accumulate_apply(const PauliString& p, double scale, const StateVector& v,
                      StateVector& out);

// out += scale * (P rho) and out += scale * (rho P); matrix-free row/column
// updates used by the density-matrix integrator.
void accumulate_apply_left(const PauliString& p, double scale, const DensityMatrix& rho,
                           DensityMatrix& out);
void accumulate_apply_right(const PauliString& p, double scale, const DensityMatrix& rho,
                            DensityMatrix& out);

struct DrivenTerm {
    PauliString op;
    Schedule schedule;
};

// Compiled, time-evaluable Hamiltonian: static coupling terms plus
// schedule-weighted driver and clock terms. Hermitian at every t by
// construction (real coefficients, X/Z strings).
struct HamiltonianTemplate {
    int n_cells = 0;
    std::vector<PauliString> static_terms;
    std::vector<DrivenTerm> driven_terms;

    std::size_t dim() const { return std::size_t{1} << n_cells; }
    // Latest time all schedules accept.
    double domain_end() const;
};

// Term multiset: -J/2 Z_a Z_b per coupling (NNN included), +P(t)/2 Z_c per
// driver, +gamma(t) X_i per clocked cell. The driver sign is chosen so
// P = +1 favors |0> (sigma_z = -1), making the all-zeros label the latched
// ground state under a positive input.
HamiltonianTemplate build_template(const Circuit& c);
// Same, excluding the NNN couplings (the H_wire part).
HamiltonianTemplate build_wire_template(const Circuit& c);
// The NNN couplings alone (the H_I part).
HamiltonianTemplate build_nnn_template(const Circuit& c);

// Dense 2^n x 2^n matrix of H(t).
Eigen::MatrixXcd assemble(const HamiltonianTemplate& h, double t);

// Matrix-free H(t)|v>, cost O(T 2^n).
StateVector apply(const HamiltonianTemplate& h, double t, const StateVector& v);
void apply(const HamiltonianTemplate& h, double t, const StateVector& v, StateVector& out);

// out = scale * (H(t) rho - rho H(t)), matrix-free per term.
void commutator(const HamiltonianTemplate& h, double t, const DensityMatrix& rho,
                Complex scale, DensityMatrix& out);
// Same without zeroing out first.
void accumulate_commutator(const HamiltonianTemplate& h, double t,
                           const DensityMatrix& rho, Complex scale, DensityMatrix& out);

// Diagonal matrix element <b|H(t)|b>; clock terms are off-diagonal and do
// not contribute.
double classical_energy(const Circuit& c, const std::string& label, double t);

}  // namespace qclock
