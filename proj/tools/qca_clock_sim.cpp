// Command-line front end: runs the named simulation scenarios and emits
// CSV trajectories / JSON reports. Exit code 0 when all embedded verdicts
// pass, 2 on verdict failure, 1 on usage or parse errors.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qclock/circuit.hpp"
#include "qclock/circuit_io.hpp"
#include "qclock/scenarios.hpp"

namespace {

using qclock::Circuit;
namespace sc = qclock::scenarios;

Circuit circuit_or_default(const std::string& config_path) {
    if (config_path.empty()) return qclock::wire(4, 30.0, 0.5, false);
    return qclock::load_circuit(config_path);
}

int verdict_exit(const std::vector<sc::Verdict>& verdicts) {
    return sc::all_pass(verdicts) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adiabatically clocked QCA circuit simulator"};
    app.require_subcommand(1);

    std::string config, out, initial, observables;
    double dt = 1e-3;
    double threshold = 1e-4;
    int levels = 4;
    int samples = 201;
    std::vector<double> gamma_values;

    auto add_common = [&](CLI::App* cmd, bool wants_config) {
        if (wants_config) cmd->add_option("--config", config, "circuit configuration JSON");
        cmd->add_option("--out", out, "output path (default: stdout)");
        cmd->add_option("--dt", dt, "integrator step, hbar/E_k");
        return cmd;
    };

    auto* cmd_spectrum = add_common(app.add_subcommand(
        "spectrum", "instantaneous eigenvalue spectra across the clocking cycle"), true);
    cmd_spectrum->add_option("--levels", levels, "number of lowest eigenvalues");
    cmd_spectrum->add_option("--samples", samples, "time samples, both endpoints included");
    cmd_spectrum->add_option("--gamma-max", gamma_values, "clock maxima (one sweep each)")
        ->delimiter(',');

    auto* cmd_evolve = add_common(
        app.add_subcommand("evolve", "integrate the state and report transitions"), true);
    cmd_evolve->add_option("--initial", initial, "initial basis label (bitstring)");
    cmd_evolve->add_option("--observables", observables,
                           "comma-separated probes like z4,x2 (default: output Z)");
    cmd_evolve->add_option("--threshold", threshold, "report probability threshold");

    auto* cmd_table1 = add_common(
        app.add_subcommand("table1", "reference 6/7-cell output polarization table"),
        false);

    auto* cmd_oracle = add_common(
        app.add_subcommand("oracle",
                           "closed chain system vs full evolution comparison"),
        true);
    cmd_oracle->add_option("--initial", initial, "initial basis label");

    auto* cmd_split = add_common(
        app.add_subcommand("split", "NNN-induced polarization shift trajectories"), true);

    auto* cmd_gates = add_common(
        app.add_subcommand("gates", "majority and doubly-branched inverter experiments"),
        false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message / help text
        return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success) ? 0 : 1;
    }

    try {
        sc::ScenarioOptions opt;
        opt.dt = dt;
        opt.out_path = out;

        if (cmd_spectrum->parsed()) {
            const Circuit c = circuit_or_default(config);
            return verdict_exit(
                sc::run_spectrum(c, levels, samples, gamma_values, opt, std::cout));
        }
        if (cmd_evolve->parsed()) {
            Circuit c = circuit_or_default(config);
            std::vector<std::string> probes;
            if (observables.empty()) {
                probes.push_back(
                    "z" + std::to_string(c.output_cell == 0 ? c.n_cells : c.output_cell));
            } else if (observables != "none") {
                std::stringstream ss(observables);
                std::string token;
                while (std::getline(ss, token, ','))
                    if (!token.empty()) probes.push_back(token);
            }
            return verdict_exit(
                sc::run_evolve(c, initial, probes, threshold, opt, std::cout));
        }
        if (cmd_table1->parsed()) return verdict_exit(sc::run_table1(opt, std::cout));
        if (cmd_oracle->parsed()) {
            const Circuit c = circuit_or_default(config);
            return verdict_exit(sc::run_oracle(c, initial, opt, std::cout));
        }
        if (cmd_split->parsed()) {
            // density runs are heavy; coarser default step for plotting
            if (cmd_split->get_option("--dt")->count() == 0) opt.dt = 5e-3;
            std::optional<Circuit> c;
            if (!config.empty()) c = qclock::load_circuit(config);
            return verdict_exit(sc::run_split(c, opt, std::cout));
        }
        if (cmd_gates->parsed()) return verdict_exit(sc::run_gates(opt, std::cout));
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
