#include <doctest.h>

#include <sstream>

#include "qclock/scenarios.hpp"

using namespace qclock;
using namespace qclock::scenarios;

namespace {

ScenarioOptions fast_options(double dt = 1e-2, int samples = 10) {
    ScenarioOptions opt;
    opt.dt = dt;
    opt.samples = samples;
    return opt;
}

}  // namespace

TEST_CASE("verdict aggregation") {
    Verdict pass{"a", 1.0, 1.0, 0.1, "analytic", true};
    Verdict fail{"b", 2.0, 1.0, 0.1, "analytic", false};
    CHECK(all_pass({}));
    CHECK(all_pass({pass, pass}));
    CHECK_FALSE(all_pass({pass, fail}));
}

TEST_CASE("number formatting is locale-free and round-trippable") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.0) == "-2");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(1e-9) == "1e-09");
}

TEST_CASE("gamma substitution touches only the clock ramps") {
    const Circuit c = with_gamma_max(wire(4, 30.0, 0.5, false), 0.7);
    CHECK(c == wire(4, 30.0, 0.7, false));
}

TEST_CASE("latched ground label") {
    CHECK(latched_ground_label(wire(4, 30.0, 0.5, false)) == "0000");
    CHECK(latched_ground_label(wire(4, 30.0, 0.5, false), 30.0) == "1111");
    CHECK(latched_ground_label(singly_branched_inverter(4, 30.0, 0.5)) == "0001");
    // Driver starts at -1 (favoring bit 1); the inverting rejoin couplings
    // force the output cell to the opposite bit.
    CHECK(latched_ground_label(doubly_branched_inverter(1, 60.0, 0.5)) == "1110");
}

TEST_CASE("reference table sanity") {
    REQUIRE(kWireReferenceTable.size() == 10);
    int six = 0, seven = 0;
    for (const auto& row : kWireReferenceTable) {
        CHECK(static_cast<int>(std::string(row.label).size()) == row.n_cells);
        CHECK(row.label[row.n_cells - 1] == '0');  // last bit latched to 0
        (row.n_cells == 6 ? six : seven) += 1;
    }
    CHECK(six == 6);
    CHECK(seven == 4);
}

TEST_CASE("evolve scenario output is deterministic") {
    const Circuit c = wire(3, 10.0, 0.5, false);
    std::ostringstream a, b;
    const auto va = run_evolve(c, "000", {"z3"}, 1e-4, fast_options(), a);
    const auto vb = run_evolve(c, "000", {"z3"}, 1e-4, fast_options(), b);
    CHECK(a.str() == b.str());
    CHECK(va.empty());  // reference verdicts only attach to the 4-cell run
    CHECK(a.str().find("# circuit_hash=") != std::string::npos);
    CHECK(a.str().find("gamma_max=0.5") != std::string::npos);
    CHECK(a.str().find("t,norm,z3") != std::string::npos);
    CHECK(a.str().find("\"output_bit_one_probability\"") != std::string::npos);
}

TEST_CASE("observable tokens are validated") {
    const Circuit c = wire(3, 10.0, 0.5, false);
    std::ostringstream os;
    CHECK_THROWS_AS(run_evolve(c, "000", {"q1"}, 1e-4, fast_options(), os),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_evolve(c, "000", {"z9"}, 1e-4, fast_options(), os),
                    std::invalid_argument);
    CHECK_NOTHROW(run_evolve(c, "000", {"x2", "Z1", "y3"}, 1e-4, fast_options(), os));
}

TEST_CASE("spectrum scenario sweeps gamma and checks the gap trend") {
    const Circuit c = wire(3, 10.0, 0.5, false);
    std::ostringstream os;
    const auto verdicts = run_spectrum(c, 2, 51, {0.1, 0.5, 2.0}, fast_options(), os);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts.front().name == "min_gap_increasing_with_gamma_max");
    CHECK(verdicts.front().pass);
    CHECK(os.str().find("t,E0,E1") != std::string::npos);
    // Three sweeps, three summaries.
    CHECK(os.str().find("gamma_max=0.1 min_gap=") != std::string::npos);
    CHECK(os.str().find("gamma_max=2 min_gap=") != std::string::npos);
}

TEST_CASE("oracle scenario passes on a short chain") {
    const Circuit c = wire(3, 10.0, 0.5, false);
    std::ostringstream os;
    const auto verdicts = run_oracle(c, "", fast_options(1e-3), os);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts.front().pass);
    CHECK(verdicts.front().value <= 1e-6);
    CHECK(os.str().find("t,z0_reduced,pout_full,abs_diff") != std::string::npos);
}

TEST_CASE("split scenario honors a configured start") {
    Circuit c = wire(4, 20.0, 0.5, true);
    c.initial_state = "0000";
    std::ostringstream os;
    const auto verdicts = run_split(c, fast_options(5e-3, 20), os);
    REQUIRE(verdicts.size() == 3);
    CHECK(all_pass(verdicts));
    CHECK(os.str().find("shift_0000") != std::string::npos);
}

TEST_CASE("wire4 reference verdicts attach to the canonical run") {
    std::ostringstream os;
    const auto verdicts =
        run_evolve(wire(4, 30.0, 0.5, false), "0000", {}, 1e-4, fast_options(1e-3), os);
    REQUIRE(verdicts.size() == 2);
    CHECK(verdicts[0].name == "wire4_ground_to_1111");
    CHECK(verdicts[1].name == "wire4_output_bit1_from_0000");
    CHECK(all_pass(verdicts));
    CHECK(os.str().find("PASS wire4_ground_to_1111") != std::string::npos);
}
