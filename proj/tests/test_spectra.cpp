#include <doctest.h>

#include <algorithm>

#include "qclock/spectra.hpp"

using namespace qclock;

namespace {

// Independent eigenvalue oracle: the general (non-selfadjoint) Schur-based
// solver, a different algorithm than the tridiagonal QR path used by the
// library code.
std::vector<double> sorted_eigenvalues_general(const Eigen::MatrixXcd& h) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h, false);
    std::vector<double> values;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        CHECK(std::abs(solver.eigenvalues()[i].imag()) < 1e-10);
        values.push_back(solver.eigenvalues()[i].real());
    }
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace

TEST_CASE("latched spectra are the sorted classical energies exactly") {
    for (int n : {2, 3, 4, 5, 6}) {
        const Circuit c = wire(n, 30.0, 0.5, n >= 4);
        const HamiltonianTemplate h = build_template(c);
        const std::size_t dim = h.dim();
        std::vector<double> classical;
        for (std::size_t idx = 0; idx < dim; ++idx)
            classical.push_back(classical_energy(c, index_to_label(idx, n), 0.0));
        std::sort(classical.begin(), classical.end());

        const SpectrumSample s = instantaneous_spectrum(h, 0.0, static_cast<int>(dim));
        REQUIRE(s.eigenvalues.size() == dim);
        for (std::size_t i = 0; i < dim; ++i)
            CHECK(s.eigenvalues[i] == classical[i]);  // bitwise, no tolerance
    }
}

TEST_CASE("ground state energy and gap of the latched 4-cell wire") {
    const HamiltonianTemplate h = build_template(wire(4, 30.0, 0.5, false));
    const SpectrumSample s = instantaneous_spectrum(h, 0.0, 2);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.eigenvalues[0] == -2.0);
    CHECK(s.eigenvalues[1] - s.eigenvalues[0] == 1.0);
}

TEST_CASE("mid-switch eigenvalues match the general-solver oracle") {
    const HamiltonianTemplate h = build_template(wire(4, 30.0, 0.5, false));
    const double t = 15.0;
    const SpectrumSample s = instantaneous_spectrum(h, t, 4);
    const std::vector<double> want = sorted_eigenvalues_general(assemble(h, t));
    for (int k = 0; k < 4; ++k)
        CHECK(s.eigenvalues[k] == doctest::Approx(want[k]).epsilon(1e-10));
}

TEST_CASE("sweep grid and minimum gap") {
    const HamiltonianTemplate h = build_template(wire(4, 30.0, 0.5, false));
    const auto sweep = spectrum_sweep(h, 101, 2);
    REQUIRE(sweep.size() == 101);
    CHECK(sweep.front().t == 0.0);
    CHECK(sweep.back().t == doctest::Approx(30.0).epsilon(1e-12));

    const MinGap mg = min_gap(sweep);
    CHECK(mg.gap > 0.0);
    CHECK(mg.gap < 1.0);                        // smaller than the latched gap
    CHECK(std::abs(mg.t - 15.0) < 3.1);         // minimum near mid-switch
}

TEST_CASE("stronger clock widens the minimum gap") {
    double previous = 0.0;
    for (double gamma : {0.1, 0.5, 2.0}) {
        const HamiltonianTemplate h = build_template(wire(4, 30.0, gamma, false));
        const double gap = min_gap(spectrum_sweep(h, 201, 2)).gap;
        CHECK(gap > previous);
        previous = gap;
    }
}

TEST_CASE("eigenvalue sums vanish at all times") {
    // Every Pauli string is traceless, so the full eigenvalue sum vanishes at
    // any time.
    const HamiltonianTemplate h = build_template(wire(4, 30.0, 0.5, true));
    for (double t : {0.0, 8.0, 15.0, 30.0}) {
        const SpectrumSample s = instantaneous_spectrum(h, t, 16);
        double sum = 0.0;
        for (double e : s.eigenvalues) sum += e;
        CHECK(std::abs(sum) < 1e-8);
    }
}

TEST_CASE("requesting more levels than the dimension throws") {
    const HamiltonianTemplate h = build_template(wire(2, 10.0, 0.5, false));
    CHECK_THROWS_AS(instantaneous_spectrum(h, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(instantaneous_spectrum(h, 0.0, 0), std::invalid_argument);
}
