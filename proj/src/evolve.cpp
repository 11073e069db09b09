#include "qclock/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qclock {

namespace {

long step_count(double t_f, double dt) {
    if (!(dt > 0)) throw std::invalid_argument("evolve: dt must be > 0");
    if (!(t_f > 0)) throw std::invalid_argument("evolve: t_f must be > 0");
    long n = std::lround(t_f / dt);
    return std::max<long>(n, 1);
}

long sample_stride(long n_steps, int samples) {
    return std::max<long>(1, n_steps / std::max(samples, 1));
}

}  // namespace

std::size_t Trajectory::find_column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw std::out_of_range("Trajectory: no column named " + name);
}

double Trajectory::max_abs_column(const std::string& name) const {
    const std::size_t col = find_column(name);
    double m = 0.0;
    for (const auto& row : rows) m = std::max(m, std::abs(row[col]));
    return m;
}

StateRun evolve_state(const HamiltonianTemplate& h, const StateVector& v0, double t_f,
                      const EvolveOptions& opt, const std::vector<Probe>& probes) {
    if (std::abs(v0.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("evolve_state: initial state is not normalized");
    const long n_steps = step_count(t_f, opt.dt);
    const double dt = t_f / static_cast<double>(n_steps);
    const long stride = sample_stride(n_steps, opt.samples);

    StateRun run;
    run.trajectory.columns.push_back("norm");
    for (const auto& p : probes) run.trajectory.columns.push_back(p.name);

    StateVector v = v0;
    StateVector k1(v.size()), k2(v.size()), k3(v.size()), k4(v.size()), tmp(v.size());
    const Complex minus_i(0.0, -1.0);

    auto record = [&](double t) {
        std::vector<double> row;
        row.reserve(1 + probes.size());
        row.push_back(v.norm());
        for (const auto& p : probes) row.push_back(pauli_expectation(v, p.op));
        run.trajectory.times.push_back(t);
        run.trajectory.rows.push_back(std::move(row));
        run.norm_drift = std::max(run.norm_drift, std::abs(v.norm() - 1.0));
    };

    record(0.0);
    for (long step = 0; step < n_steps; ++step) {
        const double t = step * dt;
        const double tm = t + 0.5 * dt;
        const double te = t + dt;

        apply(h, t, v, k1);
        tmp = v + (0.5 * dt * minus_i) * k1;
        apply(h, tm, tmp, k2);
        tmp = v + (0.5 * dt * minus_i) * k2;
        apply(h, tm, tmp, k3);
        tmp = v + (dt * minus_i) * k3;
        apply(h, te, tmp, k4);
        v += (dt / 6.0 * minus_i) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if ((step + 1) % stride == 0 || step + 1 == n_steps) record(te);
    }
    run.final_state = std::move(v);
    return run;
}

DensityRun evolve_density(const HamiltonianTemplate& h, const DensityMatrix& rho0,
                          double t_f, const EvolveOptions& opt,
                          const std::vector<Probe>& probes) {
    if ((rho0 - rho0.adjoint().eval()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("evolve_density: initial matrix is not Hermitian");
    const long n_steps = step_count(t_f, opt.dt);
    const double dt = t_f / static_cast<double>(n_steps);
    const long stride = sample_stride(n_steps, opt.samples);

    DensityRun run;
    run.trajectory.columns = {"trace", "purity"};
    for (const auto& p : probes) run.trajectory.columns.push_back(p.name);

    DensityMatrix rho = rho0;
    const auto dim = rho.rows();
    DensityMatrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim);
    const Complex minus_i(0.0, -1.0);
    const double trace0 = rho0.trace().real();

    auto record = [&](double t) {
        std::vector<double> row;
        row.reserve(2 + probes.size());
        const double tr = rho.trace().real();
        row.push_back(tr);
        row.push_back((rho * rho).trace().real());
        for (const auto& p : probes) row.push_back(pauli_expectation(rho, p.op));
        run.trajectory.times.push_back(t);
        run.trajectory.rows.push_back(std::move(row));
        run.trace_drift = std::max(run.trace_drift, std::abs(tr - trace0));
    };

    record(0.0);
    for (long step = 0; step < n_steps; ++step) {
        const double t = step * dt;
        const double tm = t + 0.5 * dt;
        const double te = t + dt;

        commutator(h, t, rho, minus_i, k1);
        tmp = rho + (0.5 * dt) * k1;
        commutator(h, tm, tmp, minus_i, k2);
        tmp = rho + (0.5 * dt) * k2;
        commutator(h, tm, tmp, minus_i, k3);
        tmp = rho + dt * k3;
        commutator(h, te, tmp, minus_i, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = 0.5 * (rho + rho.adjoint().eval());  // commutator RHS accumulates asymmetry

        if ((step + 1) % stride == 0 || step + 1 == n_steps) record(te);
    }
    run.final_rho = std::move(rho);
    return run;
}

StateVector basis_state(const std::string& label) {
    const int n = static_cast<int>(label.size());
    StateVector v = StateVector::Zero(std::size_t{1} << n);
    v[label_to_index(label)] = 1.0;
    return v;
}

DensityMatrix basis_density(const std::string& label) {
    const StateVector v = basis_state(label);
    return v * v.adjoint();
}

}  // namespace qclock
