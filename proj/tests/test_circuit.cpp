#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qclock/circuit.hpp"
#include "qclock/circuit_io.hpp"

using namespace qclock;

TEST_CASE("schedule values and endpoints") {
    const Schedule cosine = CosineSwitch{1.0, -1.0, 30.0};
    CHECK(evaluate_schedule(cosine, 0.0) == 1.0);
    CHECK(evaluate_schedule(cosine, 30.0) == -1.0);
    CHECK(evaluate_schedule(cosine, 15.0) == doctest::Approx(0.0).epsilon(1e-15));

    const Schedule ramp = SineRamp{0.5, 30.0};
    CHECK(evaluate_schedule(ramp, 0.0) == 0.0);
    CHECK(evaluate_schedule(ramp, 30.0) == 0.0);
    CHECK(evaluate_schedule(ramp, 15.0) == doctest::Approx(0.5).epsilon(1e-15));

    CHECK(evaluate_schedule(Constant{0.25}, -1e6) == 0.25);

    const Schedule pw = PiecewiseLinear{{{0.0, 0.0}, {2.0, 1.0}, {4.0, 1.0}}};
    CHECK(evaluate_schedule(pw, 1.0) == doctest::Approx(0.5));
    CHECK(evaluate_schedule(pw, 3.0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(evaluate_schedule(cosine, -0.5), std::out_of_range);
    CHECK_THROWS_AS(evaluate_schedule(cosine, 30.5), std::out_of_range);
    // integrator stage times may overshoot t_f by roundoff
    CHECK(evaluate_schedule(cosine, 30.0 + 1e-12) == -1.0);
}

TEST_CASE("schedule validation") {
    CHECK_THROWS_AS(validate_schedule(CosineSwitch{1.0, -1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_schedule(SineRamp{0.5, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_schedule(PiecewiseLinear{{{1.0, 0.0}, {1.0, 1.0}}}),
                    std::invalid_argument);
    CHECK_NOTHROW(validate_schedule(Constant{3.0}));
}

TEST_CASE("wire builder") {
    const Circuit c = wire(4, 30.0, 0.5, false);
    CHECK(c.couplings.size() == 3);
    CHECK(c.nnn_couplings.empty());
    CHECK(c.drivers.size() == 1);
    CHECK(c.clock_zones.size() == 1);
    CHECK(c.output_cell == 4);
    CHECK_NOTHROW(validate_circuit(c));
    CHECK(is_single_chain(c));

    const Circuit cn = wire(4, 30.0, 0.5, true);
    REQUIRE(cn.nnn_couplings.size() == 2);
    CHECK(cn.nnn_couplings[0] == Coupling{1, 3, 1.0 / 32.0});
    CHECK(cn.nnn_couplings[1] == Coupling{2, 4, 1.0 / 32.0});

    CHECK(wire(2, 10.0, 0.5, true).nnn_couplings.empty());
    CHECK_THROWS_AS(wire(1, 30.0, 0.5, false), std::invalid_argument);
    CHECK_THROWS_AS(wire(13, 30.0, 0.5, false), std::invalid_argument);
}

TEST_CASE("inverter and gate builders validate") {
    const Circuit inv = singly_branched_inverter(4, 30.0, 0.5);
    CHECK(inv.couplings.back().j == -1.0);
    CHECK(is_single_chain(inv));

    const Circuit maj = majority_gate(1, 30.0, 0.5);
    CHECK(maj.n_cells == 5);
    CHECK(maj.drivers.size() == 3);
    CHECK_FALSE(is_single_chain(maj));
    CHECK(internal_cells(maj) == std::vector<int>{4});

    const Circuit dbi = doubly_branched_inverter(1, 60.0, 0.5);
    CHECK(dbi.n_cells == 4);
    CHECK(internal_cells(dbi) == std::vector<int>{2, 3});
    int negative = 0;
    for (const auto& cp : dbi.couplings)
        if (cp.j < 0) ++negative;
    CHECK(negative == 2);

    CHECK_THROWS_AS(majority_gate(0, 30.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(doubly_branched_inverter(0, 60.0, 0.5), std::invalid_argument);
}

TEST_CASE("circuit validation rejects bad structure") {
    Circuit c = wire(4, 30.0, 0.5, false);
    SUBCASE("cell index out of range") {
        c.couplings.push_back({0, 2, 1.0});
        CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
    }
    SUBCASE("duplicate coupling") {
        c.couplings.push_back({2, 1, 1.0});
        CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
    }
    SUBCASE("cell in two clock zones") {
        c.clock_zones.push_back({{4}, SineRamp{0.5, 30.0}});
        CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
    }
    SUBCASE("uncovered cell") {
        c.clock_zones.front().cells.pop_back();
        CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
    }
    SUBCASE("validation is idempotent on good circuits") {
        CHECK_NOTHROW(validate_circuit(c));
        CHECK_NOTHROW(validate_circuit(c));
    }
}

TEST_CASE("basis label conventions") {
    CHECK(label_to_index("0000") == 0);
    CHECK(label_to_index("1000") == 8);  // cell 1 is the most significant bit
    CHECK(label_to_index("0001") == 1);
    CHECK(index_to_label(8, 4) == "1000");
    CHECK(spin_of_bit('0') == -1);
    CHECK(spin_of_bit('1') == 1);
    CHECK(spin_at(8, 1, 4) == 1);
    CHECK(spin_at(8, 4, 4) == -1);
}

TEST_CASE("parse_circuit") {
    SUBCASE("minimal two-cell document") {
        const std::string doc = R"({
            "cells": 2, "t_f": 10.0,
            "couplings": [{"a": 1, "b": 2, "j": 1.0}],
            "drivers": [{"cell": 1, "schedule": {"type": "cosine", "p0": 1, "p1": -1}}],
            "clock_zones": [{"cells": [1, 2], "schedule": {"type": "sine", "gamma_max": 0.5}}]
        })";
        const Circuit c = parse_circuit(doc);
        CHECK(c.n_cells == 2);
        CHECK(c.t_f == 10.0);
    }
    SUBCASE("unknown key rejected") {
        const std::string doc = R"({"cells": 2, "t_f": 10.0, "couplings": [],
            "drivers": [], "clock_zones": [{"cells": [1,2],
            "schedule": {"type": "sine", "gamma_max": 0.5}}], "bogus": 1})";
        CHECK_THROWS_WITH_AS(parse_circuit(doc),
                             doctest::Contains("unknown key \"bogus\""), ParseError);
    }
    SUBCASE("cell index 0 fails validation") {
        const std::string doc = R"({"cells": 2, "t_f": 10.0,
            "couplings": [{"a": 0, "b": 1, "j": 1.0}],
            "drivers": [], "clock_zones": [{"cells": [1,2],
            "schedule": {"type": "sine", "gamma_max": 0.5}}]})";
        CHECK_THROWS_AS(parse_circuit(doc), std::invalid_argument);
    }
    SUBCASE("shipped wire4.json equals the builder output") {
        const Circuit parsed = load_circuit(std::string(QCLOCK_SOURCE_DIR) +
                                            "/configs/wire4.json");
        CHECK(parsed == wire(4, 30.0, 0.5, false));
    }
    SUBCASE("round trip through circuit_to_json") {
        const Circuit c = wire(6, 60.0, 0.5, true);
        CHECK(parse_circuit(circuit_to_json(c)) == c);
    }
}

TEST_CASE("circuit hash is stable and input-sensitive") {
    const Circuit a = wire(4, 30.0, 0.5, false);
    CHECK(circuit_hash(a) == circuit_hash(wire(4, 30.0, 0.5, false)));
    CHECK(circuit_hash(a) != circuit_hash(wire(4, 30.0, 0.6, false)));
    CHECK(circuit_hash(a) != circuit_hash(wire(5, 30.0, 0.5, false)));
}
