#include "qclock/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qclock {

ChainWire chain_view(const Circuit& c) {
    if (!is_single_chain(c))
        throw std::invalid_argument(
            "reduced system: unsupported topology (needs a single chain with one "
            "driver on cell 1 and no NNN couplings)");
    ChainWire w;
    w.n = c.n_cells;
    w.t_f = c.t_f;
    w.driver = c.drivers.front().schedule;
    w.coupling_j.assign(static_cast<std::size_t>(w.n - 1), 0.0);
    for (const auto& cp : c.couplings)
        w.coupling_j[static_cast<std::size_t>(std::min(cp.a, cp.b)) - 1] = cp.j;
    w.gamma.resize(static_cast<std::size_t>(w.n), Constant{0.0});
    for (const auto& z : c.clock_zones)
        for (int cell : z.cells) w.gamma[cell - 1] = z.schedule;
    return w;
}

ReducedState init_reduced(const std::string& label) {
    const int n = static_cast<int>(label.size());
    ReducedState s = ReducedState::Zero(2 * n + 1);
    s[0] = spin_of_bit(label.back());  // Z_0 = m_N
    return s;
}

void reduced_rhs(const ChainWire& wire, double t, const ReducedState& s,
                 ReducedState& dsdt) {
    const int n = wire.n;
    if (s.size() != 2 * n + 1)
        throw std::invalid_argument("reduced_rhs: state dimension mismatch");
    dsdt.resize(s.size());

    const auto z = [&](int i) -> double { return s[i]; };
    const auto y = [&](int i) -> double { return s[n + 1 + i]; };
    auto dz = [&](int i) -> double& { return dsdt[i]; };
    auto dy = [&](int i) -> double& { return dsdt[n + 1 + i]; };

    const double p_in = evaluate_schedule(wire.driver, t);
    // Effective clock rate for cell N - i. The clock enters the Hamiltonian
    // as gamma(t) * sigma_x (full strength, matching build_wire_template),
    // so the commutator picks up 2 * gamma.
    auto gamma_at = [&](int i) {
        return 2.0 *
               evaluate_schedule(wire.gamma[static_cast<std::size_t>(n - i) - 1], t);
    };

    // dZ_i = 2 gamma^{N-i} Y_i + J_{N-i} Y_{i-1}
    for (int i = 0; i < n; ++i) {
        double v = gamma_at(i) * y(i);
        if (i >= 1) v += wire.coupling_j[static_cast<std::size_t>(n - i) - 1] * y(i - 1);
        dz(i) = v;
    }
    // dZ_N = -P_in Y_{N-1}
    dz(n) = -p_in * y(n - 1);

    // dY_i = -2 gamma^{N-i} Z_i - J_{N-i-1} Z_{i+1},  i <= N-2
    for (int i = 0; i + 1 < n; ++i)
        dy(i) = -gamma_at(i) * z(i) -
                wire.coupling_j[static_cast<std::size_t>(n - i) - 2] * z(i + 1);
    // dY_{N-1} = -2 gamma^1 Z_{N-1} + P_in Z_N
    dy(n - 1) = -gamma_at(n - 1) * z(n - 1) + p_in * z(n);
}

namespace {

struct Grid {
    long n_steps;
    double dt;
    long stride;
};

Grid make_grid(double t_f, double dt, int samples) {
    if (!(dt > 0)) throw std::invalid_argument("evolve_reduced: dt must be > 0");
    const long n = std::max<long>(std::lround(t_f / dt), 1);
    return {n, t_f / static_cast<double>(n),
            std::max<long>(1, n / std::max(samples, 1))};
}

}  // namespace

Trajectory evolve_reduced(const Circuit& c, const std::string& label, double dt,
                          int samples) {
    const ChainWire wire = chain_view(c);
    if (static_cast<int>(label.size()) != wire.n)
        throw std::invalid_argument("evolve_reduced: label length mismatch");
    const Grid grid = make_grid(wire.t_f, dt, samples);

    Trajectory traj;
    for (int i = 0; i <= wire.n; ++i) traj.columns.push_back("Z" + std::to_string(i));
    for (int i = 0; i < wire.n; ++i) traj.columns.push_back("Y" + std::to_string(i));

    ReducedState s = init_reduced(label);
    ReducedState k1(s.size()), k2(s.size()), k3(s.size()), k4(s.size()), tmp(s.size());

    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.rows.emplace_back(s.data(), s.data() + s.size());
    };

    record(0.0);
    for (long step = 0; step < grid.n_steps; ++step) {
        const double t = step * grid.dt;
        const double tm = t + 0.5 * grid.dt;
        const double te = t + grid.dt;
        reduced_rhs(wire, t, s, k1);
        tmp = s + (0.5 * grid.dt) * k1;
        reduced_rhs(wire, tm, tmp, k2);
        tmp = s + (0.5 * grid.dt) * k2;
        reduced_rhs(wire, tm, tmp, k3);
        tmp = s + grid.dt * k3;
        reduced_rhs(wire, te, tmp, k4);
        s += (grid.dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((step + 1) % grid.stride == 0 || step + 1 == grid.n_steps) record(te);
    }
    return traj;
}

double compare_with_full(const Circuit& c, const std::string& label, double dt) {
    const Trajectory reduced = evolve_reduced(c, label, dt, 1 << 30);  // every step

    const HamiltonianTemplate h = build_template(c);
    const int out_cell = c.output_cell == 0 ? c.n_cells : c.output_cell;
    EvolveOptions opt;
    opt.dt = dt;
    opt.samples = 1 << 30;
    const std::vector<Probe> probes = {
        {"P_out", PauliString::single(c.n_cells, out_cell, Pauli::Z)}};
    const StateRun full = evolve_state(h, basis_state(label), c.t_f, opt, probes);

    if (reduced.times.size() != full.trajectory.times.size())
        throw std::runtime_error("compare_with_full: grids do not match");
    const std::size_t zcol = reduced.find_column("Z0");
    const std::size_t pcol = full.trajectory.find_column("P_out");
    double max_dev = 0.0;
    for (std::size_t i = 0; i < reduced.times.size(); ++i)
        max_dev = std::max(max_dev,
                           std::abs(reduced.rows[i][zcol] - full.trajectory.rows[i][pcol]));
    return max_dev;
}

}  // namespace qclock
