#include "qclock/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qclock {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_cell(int cell, int n, const std::string& where) {
    require(cell >= 1 && cell <= n,
            where + ": cell index " + std::to_string(cell) + " outside 1.." +
                std::to_string(n));
}

std::pair<int, int> ordered(const Coupling& c) {
    return {std::min(c.a, c.b), std::max(c.a, c.b)};
}

}  // namespace

void validate_circuit(const Circuit& c) {
    require(c.n_cells >= 1 && c.n_cells <= 12, "n_cells must be in 1..12");
    require(c.t_f > 0, "t_f must be > 0");
    require(c.dt > 0, "dt must be > 0");

    std::set<std::pair<int, int>> seen;
    for (const auto& cp : c.couplings) {
        check_cell(cp.a, c.n_cells, "coupling");
        check_cell(cp.b, c.n_cells, "coupling");
        require(cp.a != cp.b, "coupling endpoints must be distinct");
        require(std::isfinite(cp.j), "coupling strength must be finite");
        require(seen.insert(ordered(cp)).second, "duplicate coupling pair");
    }
    std::set<std::pair<int, int>> seen_nnn;
    for (const auto& cp : c.nnn_couplings) {
        check_cell(cp.a, c.n_cells, "nnn coupling");
        check_cell(cp.b, c.n_cells, "nnn coupling");
        require(cp.a != cp.b, "nnn coupling endpoints must be distinct");
        require(std::isfinite(cp.j), "nnn coupling strength must be finite");
        require(seen_nnn.insert(ordered(cp)).second, "duplicate nnn coupling pair");
    }

    for (const auto& d : c.drivers) {
        check_cell(d.cell, c.n_cells, "driver");
        validate_schedule(d.schedule);
    }

    std::vector<int> zone_of(static_cast<std::size_t>(c.n_cells), 0);
    for (const auto& z : c.clock_zones) {
        validate_schedule(z.schedule);
        for (int cell : z.cells) {
            check_cell(cell, c.n_cells, "clock zone");
            require(zone_of[cell - 1] == 0,
                    "cell " + std::to_string(cell) + " assigned to two clock zones");
            zone_of[cell - 1] = 1;
        }
    }
    for (int i = 0; i < c.n_cells; ++i)
        require(zone_of[i] == 1,
                "cell " + std::to_string(i + 1) + " belongs to no clock zone");

    if (c.output_cell != 0) check_cell(c.output_cell, c.n_cells, "output cell");
    if (!c.initial_state.empty()) {
        require(static_cast<int>(c.initial_state.size()) == c.n_cells,
                "initial_state length must equal n_cells");
        for (char ch : c.initial_state)
            require(ch == '0' || ch == '1', "initial_state must be a bitstring");
    }
}

Circuit wire(int n_cells, double t_f, double gamma_max, bool nnn) {
    if (n_cells < 2 || n_cells > 12)
        throw std::invalid_argument("wire: n_cells must be in 2..12");
    Circuit c;
    c.n_cells = n_cells;
    c.t_f = t_f;
    c.output_cell = n_cells;
    for (int i = 1; i < n_cells; ++i) c.couplings.push_back({i, i + 1, 1.0});
    if (nnn)
        for (int i = 1; i + 2 <= n_cells; ++i)
            c.nnn_couplings.push_back({i, i + 2, 1.0 / 32.0});
    c.drivers.push_back({1, CosineSwitch{1.0, -1.0, t_f}});
    ClockZone zone;
    for (int i = 1; i <= n_cells; ++i) zone.cells.push_back(i);
    zone.schedule = SineRamp{gamma_max, t_f};
    c.clock_zones.push_back(std::move(zone));
    validate_circuit(c);
    return c;
}

Circuit singly_branched_inverter(int n_cells, double t_f, double gamma_max) {
    Circuit c = wire(n_cells, t_f, gamma_max, false);
    c.couplings.back().j = -1.0;
    return c;
}

Circuit majority_gate(int arm_len, double t_f, double gamma_max,
                      double fixed_b, double fixed_c) {
    if (arm_len < 1) throw std::invalid_argument("majority_gate: arm_len must be >= 1");
    const int L = arm_len;
    Circuit c;
    c.n_cells = 4 * L + 1;
    c.t_f = t_f;
    c.output_cell = c.n_cells;
    const int device = 3 * L + 1;
    auto chain = [&](int first, int last) {
        for (int i = first; i < last; ++i) c.couplings.push_back({i, i + 1, 1.0});
    };
    chain(1, L);                    // switched arm
    chain(L + 1, 2 * L);            // fixed arm B
    chain(2 * L + 1, 3 * L);        // fixed arm C
    c.couplings.push_back({L, device, 1.0});
    c.couplings.push_back({2 * L, device, 1.0});
    c.couplings.push_back({3 * L, device, 1.0});
    c.couplings.push_back({device, device + 1, 1.0});
    chain(device + 1, c.n_cells);   // output arm
    // The switched input starts aligned with the fixed inputs (-1, favoring
    // bit 1) so the latched ground state is the unfrustrated all-ones
    // configuration and ground-state switching keeps the output positive.
    c.drivers.push_back({1, CosineSwitch{-1.0, 1.0, t_f}});
    c.drivers.push_back({L + 1, Constant{fixed_b}});
    c.drivers.push_back({2 * L + 1, Constant{fixed_c}});
    ClockZone zone;
    for (int i = 1; i <= c.n_cells; ++i) zone.cells.push_back(i);
    zone.schedule = SineRamp{gamma_max, t_f};
    c.clock_zones.push_back(std::move(zone));
    validate_circuit(c);
    return c;
}

Circuit doubly_branched_inverter(int arm_len, double t_f, double gamma_max) {
    if (arm_len < 1)
        throw std::invalid_argument("doubly_branched_inverter: arm_len must be >= 1");
    const int L = arm_len;
    Circuit c;
    c.n_cells = 3 * L + 1;
    c.t_f = t_f;
    c.output_cell = c.n_cells;
    auto chain = [&](int first, int last) {
        for (int i = first; i < last; ++i) c.couplings.push_back({i, i + 1, 1.0});
    };
    chain(1, L);                        // input arm
    c.couplings.push_back({L, L + 1, 1.0});
    c.couplings.push_back({L, 2 * L + 1, 1.0});
    chain(L + 1, 2 * L);                // branch 1
    chain(2 * L + 1, 3 * L);            // branch 2
    // rejoin inverts: both branches couple to the output antiferromagnetically
    c.couplings.push_back({2 * L, c.n_cells, -1.0});
    c.couplings.push_back({3 * L, c.n_cells, -1.0});
    c.drivers.push_back({1, CosineSwitch{-1.0, 1.0, t_f}});
    ClockZone zone;
    for (int i = 1; i <= c.n_cells; ++i) zone.cells.push_back(i);
    zone.schedule = SineRamp{gamma_max, t_f};
    c.clock_zones.push_back(std::move(zone));
    validate_circuit(c);
    return c;
}

std::size_t label_to_index(const std::string& label) {
    std::size_t idx = 0;
    for (char ch : label) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("basis label must be a bitstring");
        idx = (idx << 1) | static_cast<std::size_t>(ch - '0');
    }
    return idx;
}

std::string index_to_label(std::size_t index, int n_cells) {
    std::string s(static_cast<std::size_t>(n_cells), '0');
    for (int cell = 1; cell <= n_cells; ++cell)
        if (index >> (n_cells - cell) & 1u) s[cell - 1] = '1';
    return s;
}

int spin_of_bit(char bit) { return bit == '1' ? 1 : -1; }

int spin_at(std::size_t index, int cell, int n_cells) {
    return (index >> (n_cells - cell) & 1u) ? 1 : -1;
}

bool is_single_chain(const Circuit& c) {
    if (!c.nnn_couplings.empty()) return false;
    if (c.drivers.size() != 1 || c.drivers.front().cell != 1) return false;
    if (static_cast<int>(c.couplings.size()) != c.n_cells - 1) return false;
    std::vector<bool> present(static_cast<std::size_t>(c.n_cells), false);
    for (const auto& cp : c.couplings) {
        const auto [a, b] = std::minmax(cp.a, cp.b);
        if (b != a + 1) return false;
        if (present[a - 1]) return false;
        present[a - 1] = true;
    }
    return true;
}

namespace {

void hash_combine(std::uint64_t& h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;  // FNV-1a
    }
}

std::string schedule_string(const Schedule& s) {
    std::ostringstream os;
    os.precision(17);
    if (const auto* c = std::get_if<CosineSwitch>(&s))
        os << "cos(" << c->p0 << "," << c->p1 << "," << c->t_f << ")";
    else if (const auto* r = std::get_if<SineRamp>(&s))
        os << "sin(" << r->gamma_max << "," << r->t_f << ")";
    else if (const auto* k = std::get_if<Constant>(&s))
        os << "const(" << k->value << ")";
    else {
        os << "pwl(";
        for (const auto& [t, v] : std::get<PiecewiseLinear>(s).points)
            os << t << ":" << v << ";";
        os << ")";
    }
    return os.str();
}

}  // namespace

std::uint64_t circuit_hash(const Circuit& c) {
    std::ostringstream os;
    os.precision(17);
    os << "n=" << c.n_cells << ";tf=" << c.t_f << ";dt=" << c.dt
       << ";out=" << c.output_cell << ";init=" << c.initial_state << ";";
    for (const auto& cp : c.couplings)
        os << "J(" << cp.a << "," << cp.b << ")=" << cp.j << ";";
    for (const auto& cp : c.nnn_couplings)
        os << "Jnnn(" << cp.a << "," << cp.b << ")=" << cp.j << ";";
    for (const auto& d : c.drivers)
        os << "drv(" << d.cell << ")=" << schedule_string(d.schedule) << ";";
    for (const auto& z : c.clock_zones) {
        os << "zone(";
        for (int cell : z.cells) os << cell << ",";
        os << ")=" << schedule_string(z.schedule) << ";";
    }
    std::uint64_t h = 14695981039346656037ull;
    hash_combine(h, os.str());
    return h;
}

std::vector<int> internal_cells(const Circuit& c) {
    std::vector<bool> driven(static_cast<std::size_t>(c.n_cells), false);
    for (const auto& d : c.drivers) driven[d.cell - 1] = true;
    const int out = c.output_cell == 0 ? c.n_cells : c.output_cell;
    std::vector<int> cells;
    for (int i = 1; i <= c.n_cells; ++i)
        if (!driven[i - 1] && i != out) cells.push_back(i);
    return cells;
}

}  // namespace qclock
