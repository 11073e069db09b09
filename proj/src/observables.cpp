#include "qclock/observables.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qclock {

namespace {

inline Complex string_phase(const PauliString& p, std::uint64_t idx) {
    const int sign_bits = std::popcount(idx & p.y_mask) +
                          std::popcount(~idx & p.z_mask);
    double sign = (sign_bits & 1) ? -1.0 : 1.0;
    switch (std::popcount(p.y_mask) & 3) {  // (-i)^ny
        case 0: return Complex(sign, 0.0);
        case 1: return Complex(0.0, -sign);
        case 2: return Complex(-sign, 0.0);
        default: return Complex(0.0, sign);
    }
}

double check_real(Complex value, const char* what) {
    if (std::abs(value.imag()) > 1e-10)
        throw std::runtime_error(std::string(what) +
                                 ": imaginary residue exceeds 1e-10");
    return value.real();
}

}  // namespace

double pauli_expectation(const StateVector& v, const PauliString& p) {
    if (static_cast<int>(std::bit_width(static_cast<std::uint64_t>(v.size())) - 1) !=
        p.n_cells)
        throw std::invalid_argument("pauli_expectation: dimension mismatch");
    const std::uint64_t dim = static_cast<std::uint64_t>(v.size());
    const std::uint64_t flip = p.flip_mask();
    Complex acc = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i)
        acc += std::conj(v[i ^ flip]) * (p.coefficient * string_phase(p, i)) * v[i];
    return check_real(acc, "pauli_expectation");
}

double pauli_expectation(const DensityMatrix& rho, const PauliString& p) {
    if (rho.rows() != rho.cols() ||
        static_cast<std::size_t>(rho.rows()) != (std::size_t{1} << p.n_cells))
        throw std::invalid_argument("pauli_expectation: dimension mismatch");
    const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
    const std::uint64_t flip = p.flip_mask();
    Complex acc = 0.0;
    // Tr(P rho) = sum_j P(j^flip, j) rho(j, j^flip)
    for (std::uint64_t j = 0; j < dim; ++j)
        acc += p.coefficient * string_phase(p, j) * rho(j, j ^ flip);
    return check_real(acc, "pauli_expectation");
}

double polarization(const StateVector& v, int cell) {
    const int n = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(v.size())) - 1);
    return pauli_expectation(v, PauliString::single(n, cell, Pauli::Z));
}

double polarization(const DensityMatrix& rho, int cell) {
    const int n = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(rho.rows())) - 1);
    return pauli_expectation(rho, PauliString::single(n, cell, Pauli::Z));
}

TransitionReport transition_probabilities(const StateVector& v, int n_cells,
                                          double threshold) {
    TransitionReport report;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i) {
        const double prob = std::norm(v[i]);
        if (prob >= threshold)
            report.entries[index_to_label(i, n_cells)] = prob;
        else
            report.residual += prob;
    }
    return report;
}

double bit_one_probability(const StateVector& v, int cell, int n_cells) {
    double total = 0.0;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i)
        if (spin_at(i, cell, n_cells) > 0) total += std::norm(v[i]);
    return total;
}

int kink_count(const std::string& label, const Circuit& c, double t) {
    if (static_cast<int>(label.size()) != c.n_cells)
        throw std::invalid_argument("kink_count: label length mismatch");
    int kinks = 0;
    for (const auto& cp : c.couplings) {
        const int ma = spin_of_bit(label[cp.a - 1]);
        const int mb = spin_of_bit(label[cp.b - 1]);
        if ((cp.j > 0 ? 1 : -1) * ma * mb < 0) ++kinks;
    }
    for (const auto& d : c.drivers) {
        const double p = evaluate_schedule(d.schedule, t);
        if (p == 0.0) continue;  // no favored bit
        const int favored = p > 0 ? -1 : 1;
        if (spin_of_bit(label[d.cell - 1]) != favored) ++kinks;
    }
    return kinks;
}

}  // namespace qclock
