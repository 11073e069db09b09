#pragma once

#include <vector>

#include "qclock/pauli.hpp"

namespace qclock {

struct SpectrumSample {
    double t = 0.0;
    std::vector<double> eigenvalues;  // ascending, units E_k
};

// Lowest k eigenvalues of H(t) by dense Hermitian eigendecomposition.
// When H(t) is exactly diagonal (all clocks latched) the sorted diagonal
// is returned directly, so endpoint spectra are exact.
SpectrumSample instantaneous_spectrum(const HamiltonianTemplate& h, double t, int k);

// Uniform grid over [0, domain end] including both endpoints.
std::vector<SpectrumSample> spectrum_sweep(const HamiltonianTemplate& h, int samples,
                                           int k);

struct MinGap {
    double t = 0.0;
    double gap = 0.0;  // E1 - E0, units E_k
};

MinGap min_gap(const std::vector<SpectrumSample>& sweep);

}  // namespace qclock
