#include "qclock/split.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qclock {

double polarization_shift(const DensityMatrix& rho_i, int cell) {
    const int n = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(rho_i.rows())) - 1);
    // rho_I is traceless, not a physical state; the expectation helper's
    // Hermiticity path still applies since sigma_z rho_I has a real trace.
    const std::uint64_t dim = static_cast<std::uint64_t>(rho_i.rows());
    double acc = 0.0;
    for (std::uint64_t j = 0; j < dim; ++j)
        acc += spin_at(j, cell, n) * rho_i(j, j).real();
    return acc;
}

double driving_correlator(const DensityMatrix& rho_wire, int n_cells) {
    PauliString p = PauliString::identity(n_cells, 1.0);
    p.set(n_cells - 2, Pauli::Z).set(n_cells, Pauli::X);
    return pauli_expectation(rho_wire, p);
}

SplitRun evolve_split(const Circuit& c, const DensityMatrix& rho0, double dt,
                      int samples) {
    if (c.nnn_couplings.empty())
        throw std::invalid_argument("evolve_split: circuit has no NNN couplings");
    if (c.n_cells > 10)
        throw std::invalid_argument("evolve_split: n_cells must be <= 10");
    if ((rho0 - rho0.adjoint().eval()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("evolve_split: rho0 is not Hermitian");

    const HamiltonianTemplate h_wire = build_wire_template(c);
    const HamiltonianTemplate h_i = build_nnn_template(c);
    const HamiltonianTemplate h_total = build_template(c);
    const int out_cell = c.output_cell == 0 ? c.n_cells : c.output_cell;

    const long n_steps = std::max<long>(std::lround(c.t_f / dt), 1);
    const double h = c.t_f / static_cast<double>(n_steps);
    const long stride = std::max<long>(1, n_steps / std::max(samples, 1));
    const Complex minus_i(0.0, -1.0);
    const auto dim = rho0.rows();

    DensityMatrix rw = rho0, ri = DensityMatrix::Zero(dim, dim), rt = rho0;

    // RK4 stage storage for the coupled triple
    DensityMatrix kw[4], ki[4], kt[4];
    for (auto* k : {kw, ki, kt})
        for (int s = 0; s < 4; ++s) k[s].resize(dim, dim);
    DensityMatrix tw(dim, dim), ti(dim, dim), tt(dim, dim);

    auto rhs = [&](double t, const DensityMatrix& w, const DensityMatrix& i_,
                   const DensityMatrix& tot, DensityMatrix& dw, DensityMatrix& di,
                   DensityMatrix& dtot) {
        commutator(h_wire, t, w, minus_i, dw);
        commutator(h_total, t, i_, minus_i, di);
        accumulate_commutator(h_i, t, w, minus_i, di);  // source term
        commutator(h_total, t, tot, minus_i, dtot);
    };

    SplitRun run;
    run.trajectory.columns = {"shift", "pol_total", "pol_wire",
                              "correlator", "split_error", "trace_rho_i"};

    auto record = [&](double t) {
        const double split_error = (rw + ri - rt).cwiseAbs().maxCoeff();
        const double tr_i = std::abs(ri.trace().real());
        run.max_split_error = std::max(run.max_split_error, split_error);
        run.max_trace_rho_i = std::max(run.max_trace_rho_i, tr_i);
        run.trajectory.times.push_back(t);
        run.trajectory.rows.push_back({polarization_shift(ri, out_cell),
                                       polarization(rt, out_cell),
                                       polarization(rw, out_cell),
                                       driving_correlator(rw, c.n_cells), split_error,
                                       tr_i});
    };

    record(0.0);
    for (long step = 0; step < n_steps; ++step) {
        const double t = step * h;
        const double tm = t + 0.5 * h;
        const double te = t + h;

        rhs(t, rw, ri, rt, kw[0], ki[0], kt[0]);
        tw = rw + (0.5 * h) * kw[0];
        ti = ri + (0.5 * h) * ki[0];
        tt = rt + (0.5 * h) * kt[0];
        rhs(tm, tw, ti, tt, kw[1], ki[1], kt[1]);
        tw = rw + (0.5 * h) * kw[1];
        ti = ri + (0.5 * h) * ki[1];
        tt = rt + (0.5 * h) * kt[1];
        rhs(tm, tw, ti, tt, kw[2], ki[2], kt[2]);
        tw = rw + h * kw[2];
        ti = ri + h * ki[2];
        tt = rt + h * kt[2];
        rhs(te, tw, ti, tt, kw[3], ki[3], kt[3]);

        rw += (h / 6.0) * (kw[0] + 2.0 * kw[1] + 2.0 * kw[2] + kw[3]);
        ri += (h / 6.0) * (ki[0] + 2.0 * ki[1] + 2.0 * ki[2] + ki[3]);
        rt += (h / 6.0) * (kt[0] + 2.0 * kt[1] + 2.0 * kt[2] + kt[3]);
        // symmetrize all three identically so the split identity survives
        rw = 0.5 * (rw + rw.adjoint().eval());
        ri = 0.5 * (ri + ri.adjoint().eval());
        rt = 0.5 * (rt + rt.adjoint().eval());

        if ((step + 1) % stride == 0 || step + 1 == n_steps) record(te);
    }
    run.rho_wire = std::move(rw);
    run.rho_i = std::move(ri);
    run.rho_total = std::move(rt);
    return run;
}

}  // namespace qclock
