#include "qclock/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qclock {

SpectrumSample instantaneous_spectrum(const HamiltonianTemplate& h, double t, int k) {
    const auto dim = static_cast<Eigen::Index>(h.dim());
    if (k < 1 || k > dim)
        throw std::invalid_argument("instantaneous_spectrum: k out of range");
    const Eigen::MatrixXcd m = assemble(h, t);

    SpectrumSample sample;
    sample.t = t;

    bool diagonal = true;
    for (Eigen::Index j = 0; j < dim && diagonal; ++j)
        for (Eigen::Index i = 0; i < dim; ++i)
            if (i != j && m(i, j) != Complex(0.0, 0.0)) {
                diagonal = false;
                break;
            }
    if (diagonal) {
        std::vector<double> diag(dim);
        for (Eigen::Index i = 0; i < dim; ++i) diag[i] = m(i, i).real();
        std::sort(diag.begin(), diag.end());
        sample.eigenvalues.assign(diag.begin(), diag.begin() + k);
        return sample;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("instantaneous_spectrum: eigensolver failed");
    sample.eigenvalues.assign(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + k);
    return sample;
}

std::vector<SpectrumSample> spectrum_sweep(const HamiltonianTemplate& h, int samples,
                                           int k) {
    if (samples < 2) throw std::invalid_argument("spectrum_sweep: samples must be >= 2");
    const double t_end = h.domain_end();
    std::vector<SpectrumSample> sweep;
    sweep.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = t_end * static_cast<double>(i) / (samples - 1);
        sweep.push_back(instantaneous_spectrum(h, t, k));
    }
    return sweep;
}

MinGap min_gap(const std::vector<SpectrumSample>& sweep) {
    if (sweep.empty()) throw std::invalid_argument("min_gap: empty sweep");
    MinGap best{sweep.front().t,
                sweep.front().eigenvalues.at(1) - sweep.front().eigenvalues.at(0)};
    for (const auto& s : sweep) {
        const double gap = s.eigenvalues.at(1) - s.eigenvalues.at(0);
        if (gap < best.gap) best = {s.t, gap};
    }
    return best;
}

}  // namespace qclock
