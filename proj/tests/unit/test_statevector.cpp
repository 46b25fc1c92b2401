#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dqc/statevector.hpp"
#include "oracles.hpp"

using namespace dqc;

namespace {

constexpr double kTol = 1e-9;

double max_abs_diff(const std::vector<Amplitude>& a, const oracle::State& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_SUITE("statevector") {

TEST_CASE("basis states and bit order") {
    const StateVector zero(3);
    CHECK(zero.amplitudes().size() == 8);
    CHECK(zero[0] == Amplitude{1.0, 0.0});

    const StateVector one = run(Circuit(1, {Gate::x(0)}));
    CHECK(std::abs(one[1] - Amplitude{1.0, 0.0}) < kTol);

    const StateVector low = run(Circuit(2, {Gate::x(0)}));
    CHECK(std::abs(low[1]) == doctest::Approx(1.0));
    const StateVector high = run(Circuit(2, {Gate::x(1)}));
    CHECK(std::abs(high[2]) == doctest::Approx(1.0));

    CHECK(run(Circuit(4)).amplitudes() == StateVector(4).amplitudes());
}

TEST_CASE("sx squared is x") {
    const StateVector s = run(Circuit(1, {Gate::sx(0), Gate::sx(0)}));
    CHECK(state_fidelity(s, run(Circuit(1, {Gate::x(0)}))) == doctest::Approx(1.0).epsilon(kTol));
    // Pinned phase: SX|0> = ((1+i)/2, (1-i)/2).
    const StateVector half = run(Circuit(1, {Gate::sx(0)}));
    CHECK(std::abs(half[0] - Amplitude{0.5, 0.5}) < kTol);
    CHECK(std::abs(half[1] - Amplitude{0.5, -0.5}) < kTol);
}

TEST_CASE("bell state") {
    // RZ(pi/2) SX RZ(pi/2) is H up to global phase.
    const double h = std::numbers::pi / 2;
    const Circuit c(2, {Gate::rz(0, h), Gate::sx(0), Gate::rz(0, h), Gate::cx(0, 1)});
    const StateVector s = run(c);
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector bell(2, {r, 0.0, 0.0, r});
    CHECK(state_fidelity(s, bell) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(std::abs(s[0]) == doctest::Approx(r).epsilon(kTol));
    CHECK(std::abs(s[3]) == doctest::Approx(r).epsilon(kTol));
    CHECK(std::abs(s[1]) < kTol);
    CHECK(std::abs(s[2]) < kTol);
}

TEST_CASE("cx on a prepared superposition") {
    const double r = 1.0 / std::sqrt(2.0);
    StateVector s(2, {r, r, 0.0, 0.0});
    s.apply(Gate::cx(0, 1));
    CHECK(std::abs(s[0] - Amplitude{r, 0}) < kTol);
    CHECK(std::abs(s[3] - Amplitude{r, 0}) < kTol);
    CHECK(std::abs(s[1]) < kTol);
    CHECK(std::abs(s[2]) < kTol);
}

TEST_CASE("rz zero is identity and rz is phase only on basis states") {
    const Circuit u = random_circuit(3, 6, 4);
    Circuit with_rz = u;
    with_rz.append(Gate::rz(1, 0.0));
    CHECK(fidelity(run(u), with_rz) == doctest::Approx(1.0).epsilon(kTol));

    const Circuit x0(1, {Gate::x(0)});
    Circuit phased = x0;
    phased.append(Gate::rz(0, 0.7));
    CHECK(fidelity(run(x0), phased) == doctest::Approx(1.0).epsilon(kTol));
    const oracle::State a = oracle::simulate_dense(x0), b = oracle::simulate_dense(phased);
    CHECK(oracle::overlap(a, b) == doctest::Approx(1.0).epsilon(kTol));
}

TEST_CASE("fidelity cases") {
    const Circuit u = random_circuit(4, 8, 1);
    CHECK(fidelity(run(u), u) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(fidelity(StateVector(1), Circuit(1, {Gate::x(0)})) == doctest::Approx(0.0).epsilon(kTol));
    CHECK_THROWS_AS(fidelity(StateVector(2), Circuit(3)), std::invalid_argument);

    const StateVector a = run(random_circuit(3, 5, 10)), b = run(random_circuit(3, 5, 11));
    CHECK(state_fidelity(a, b) == doctest::Approx(state_fidelity(b, a)).epsilon(kTol));
    CHECK(std::norm(a.inner(b)) == doctest::Approx(std::norm(std::conj(b.inner(a)))).epsilon(kTol));
}

TEST_CASE("matches dense operator products") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 2 + seed % 4;
        const Circuit c = random_circuit(n, 1 + seed % 7, seed);
        CHECK(max_abs_diff(run(c).amplitudes(), oracle::simulate_dense(c)) < kTol);
    }
}

TEST_CASE("norm is preserved gate by gate") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Circuit c = random_circuit(5, 10, seed);
        StateVector s(5);
        for (const Gate& g : c.gates()) {
            s.apply(g);
            REQUIRE(std::abs(s.norm_squared() - 1.0) < kTol);
        }
    }
}

TEST_CASE("errors") {
    StateVector s(2);
    CHECK_THROWS_AS(s.apply(Gate::x(2)), std::out_of_range);
    CHECK_THROWS_AS(run(Circuit(21)), std::length_error);
    CHECK_NOTHROW(run(Circuit(3), 3));
    CHECK_THROWS_AS(run(Circuit(4), 3), std::length_error);
    CHECK_THROWS_AS(StateVector(2, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("amplitude dump") {
    const std::string csv = amplitudes_to_csv(run(Circuit(1, {Gate::x(0)})));
    CHECK(csv == "index,re,im\n0,0,0\n1,1,0\n");
}

}
