#include <doctest.h>

#include <cmath>

#include "qclock/evolve.hpp"
#include "qclock/observables.hpp"

using namespace qclock;

TEST_CASE("basis-state expectations") {
    const StateVector v = basis_state("010");
    CHECK(polarization(v, 1) == doctest::Approx(-1.0));
    CHECK(polarization(v, 2) == doctest::Approx(1.0));
    CHECK(polarization(v, 3) == doctest::Approx(-1.0));
    CHECK(pauli_expectation(v, PauliString::single(3, 2, Pauli::X)) ==
          doctest::Approx(0.0));
    CHECK(pauli_expectation(v, PauliString::from_letters("ZZI", 1.0)) ==
          doctest::Approx(-1.0));
    CHECK(pauli_expectation(v, PauliString::from_letters("IZZ", 1.0)) ==
          doctest::Approx(-1.0));
}

TEST_CASE("superposition expectations") {
    const StateVector v = (basis_state("00") + basis_state("11")) / std::sqrt(2.0);
    CHECK(polarization(v, 1) == doctest::Approx(0.0));
    CHECK(pauli_expectation(v, PauliString::from_letters("ZZ", 1.0)) ==
          doctest::Approx(1.0));
    CHECK(pauli_expectation(v, PauliString::from_letters("XX", 1.0)) ==
          doctest::Approx(1.0));
    CHECK(pauli_expectation(v, PauliString::from_letters("YY", 1.0)) ==
          doctest::Approx(-1.0));
}

TEST_CASE("state and density polarizations agree mid-run") {
    const Circuit c = wire(3, 10.0, 0.5, false);
    const HamiltonianTemplate h = build_template(c);
    const StateRun run = evolve_state(h, basis_state("000"), 5.0, {.dt = 1e-3});
    const DensityMatrix rho = run.final_state * run.final_state.adjoint();
    for (int cell = 1; cell <= 3; ++cell)
        CHECK(polarization(run.final_state, cell) ==
              doctest::Approx(polarization(rho, cell)).epsilon(1e-10));
    const PauliString zz = PauliString::from_letters("ZZI", 1.0);
    CHECK(pauli_expectation(run.final_state, zz) ==
          doctest::Approx(pauli_expectation(rho, zz)).epsilon(1e-10));
}

TEST_CASE("transition report") {
    const StateVector v =
        std::sqrt(0.9) * basis_state("11") + std::sqrt(0.1) * basis_state("01");
    const TransitionReport rep = transition_probabilities(v, 2);
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries.at("11") == doctest::Approx(0.9));
    CHECK(rep.entries.at("01") == doctest::Approx(0.1));
    CHECK(rep.residual == doctest::Approx(0.0));

    // A high threshold pushes the minor amplitude into the residual.
    const TransitionReport coarse = transition_probabilities(v, 2, 0.5);
    CHECK(coarse.entries.size() == 1);
    CHECK(coarse.residual == doctest::Approx(0.1));

    double total = coarse.residual;
    for (const auto& [label, p] : coarse.entries) total += p;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("bit-one probability") {
    const StateVector v =
        std::sqrt(0.25) * basis_state("10") + std::sqrt(0.75) * basis_state("11");
    CHECK(bit_one_probability(v, 1, 2) == doctest::Approx(1.0));
    CHECK(bit_one_probability(v, 2, 2) == doctest::Approx(0.75));
}

TEST_CASE("kink counting") {
    const Circuit c = wire(4, 30.0, 0.5, false);
    // At t = 0 the driver favors bit 0 everywhere.
    CHECK(kink_count("0000", c, 0.0) == 0);
    CHECK(kink_count("1111", c, 0.0) == 1);   // driver disagreement only
    CHECK(kink_count("0110", c, 0.0) == 2);
    CHECK(kink_count("1000", c, 0.0) == 2);   // driver + first coupling
    // After the switch the driver favors bit 1.
    CHECK(kink_count("1111", c, 30.0) == 0);
    CHECK(kink_count("0000", c, 30.0) == 1);

    // The inverting coupling prefers anti-alignment across the last bond.
    const Circuit inv = singly_branched_inverter(4, 30.0, 0.5);
    CHECK(kink_count("0001", inv, 0.0) == 0);
    CHECK(kink_count("0000", inv, 0.0) == 1);
}

TEST_CASE("corrupted state is rejected") {
    const Circuit c = wire(2, 10.0, 0.5, false);
    (void)c;
    StateVector v = basis_state("00");
    CHECK_THROWS_AS(pauli_expectation(v, PauliString::single(3, 1, Pauli::Z)),
                    std::invalid_argument);
    DensityMatrix bad = DensityMatrix::Zero(4, 4);
    bad(0, 1) = Complex(0.0, 1.0);  // non-Hermitian: imaginary expectation
    CHECK_THROWS(pauli_expectation(bad, PauliString::from_letters("IX", 1.0)));
}
