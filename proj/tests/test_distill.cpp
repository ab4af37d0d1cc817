#include <doctest.h>

#include "support.hpp"

using namespace distkit;
using testsupport::max_abs_diff;
using testsupport::random_state;
using testsupport::two_pair_protocol_oracle;

TEST_CASE("singlet_fidelity") {
    CHECK(singlet_fidelity(singlet()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(singlet_fidelity(BipartiteState(2, 2, CMatrix::Identity(4, 4) / 4.0)) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(singlet_fidelity(werner(0.62)) == doctest::Approx(0.62).epsilon(1e-12));
    CHECK_THROWS_AS(singlet_fidelity(random_state(2, 3, 1)), ValidationError);
}

TEST_CASE("twirl_to_werner") {
    SUBCASE("werner states are fixed points") {
        CHECK(max_abs_diff(twirl_to_werner(werner(0.7)).rho(), werner(0.7).rho()) <= 1e-14);
        CHECK(max_abs_diff(twirl_to_werner(singlet()).rho(), singlet().rho()) <= 1e-14);
    }
    SUBCASE("fidelity is preserved and the output is exact Werner form") {
        SplitMix64 rng(3);
        for (int trial = 0; trial < 25; ++trial) {
            const BipartiteState s = random_state(2, 2, rng.next_u64());
            const double f = singlet_fidelity(s);
            const BipartiteState t = twirl_to_werner(s);
            CHECK(std::abs(singlet_fidelity(t) - f) <= 1e-12);
            CHECK(max_abs_diff(t.rho(), werner(f).rho()) <= 1e-10);
        }
    }
}

TEST_CASE("bbpssw_step") {
    SUBCASE("fixed points") {
        const StepResult at_one = bbpssw_step(1.0);
        CHECK(at_one.fidelity == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(at_one.survival == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(bbpssw_step(0.5).fidelity == doctest::Approx(0.5).epsilon(1e-13));
    }
    SUBCASE("f = 0.75") {
        const StepResult r = bbpssw_step(0.75);
        CHECK(r.fidelity == doctest::Approx(0.7884615384615384).epsilon(1e-12));
        CHECK(r.survival == doctest::Approx(13.0 / 18.0).epsilon(1e-12));
    }
    SUBCASE("monotone on (1/2, 1)") {
        for (int i = 1; i < 100; ++i) {
            const double f = 0.5 + 0.5 * i / 100.0;
            CHECK(bbpssw_step(f).fidelity > f);
        }
    }
    SUBCASE("range validation") {
        CHECK_THROWS_AS(bbpssw_step(-0.1), ParameterError);
        CHECK_THROWS_AS(bbpssw_step(1.0001), ParameterError);
    }
}

TEST_CASE("recurrence formula matches the explicit two-pair simulation") {
    for (int i = 0; i <= 20; ++i) {
        const double f = i / 20.0;
        const StepResult formula = bbpssw_step(f);
        const StepResult oracle = two_pair_protocol_oracle(f);
        CHECK(std::abs(formula.fidelity - oracle.fidelity) <= 1e-9);
        CHECK(std::abs(formula.survival - oracle.survival) <= 1e-9);
    }
}

TEST_CASE("recurrence_distill") {
    SUBCASE("werner(0.75) reaches 0.99") {
        const DistillRun run = recurrence_distill(werner(0.75), 0.99, 15);
        CHECK(run.reached_target);
        CHECK_FALSE(run.filter_applied);
        CHECK(run.records.back().fidelity >= 0.99);
        CHECK(run.records.size() == 12); // 11 rounds after the initial record
        for (std::size_t i = 1; i < run.records.size(); ++i) {
            CHECK(run.records[i].fidelity > run.records[i - 1].fidelity);
            CHECK(run.records[i].pairs_factor >=
                  std::pow(2.0, static_cast<double>(run.records[i].round)));
        }
    }
    SUBCASE("singlet succeeds immediately") {
        const DistillRun run = recurrence_distill(singlet(), 0.99, 5);
        CHECK(run.reached_target);
        CHECK(run.records.size() == 1);
        CHECK(run.records.front().round == 0);
    }
    SUBCASE("werner(0.4) is not distillable by this protocol") {
        CHECK_THROWS_AS(recurrence_distill(werner(0.4), 0.99, 20), ProtocolFailure);
    }
    SUBCASE("round budget failure is reported, not thrown") {
        const DistillRun run = recurrence_distill(werner(0.75), 0.99, 3);
        CHECK_FALSE(run.reached_target);
        CHECK(run.records.size() == 4);
    }
    SUBCASE("trajectories are deterministic") {
        const DistillRun a = recurrence_distill(werner(0.8), 0.95, 20);
        const DistillRun b = recurrence_distill(werner(0.8), 0.95, 20);
        REQUIRE(a.records.size() == b.records.size());
        for (std::size_t i = 0; i < a.records.size(); ++i) {
            CHECK(a.records[i].fidelity == b.records[i].fidelity);
            CHECK(a.records[i].pairs_factor == b.records[i].pairs_factor);
        }
    }
    SUBCASE("parameter and dimension validation") {
        CHECK_THROWS_AS(recurrence_distill(werner(0.8), 0.4, 10), ParameterError);
        CHECK_THROWS_AS(recurrence_distill(werner(0.8), 1.0, 10), ParameterError);
        CHECK_THROWS_AS(recurrence_distill(werner(0.8), 0.99, 0), ParameterError);
        CHECK_THROWS_AS(recurrence_distill(random_state(3, 3, 5), 0.99, 10), ValidationError);
    }
}

TEST_CASE("filter_boost") {
    SUBCASE("fidelity above 1/2 short-circuits to the identity filter") {
        const FilterBoostResult r = filter_boost(werner(0.75), 16, 1);
        CHECK_FALSE(r.improved);
        CHECK(max_abs_diff(r.filter_a, CMatrix::Identity(2, 2)) == 0.0);
        CHECK(r.fidelity == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("a tilted pure state is boosted to near-unit fidelity") {
        // sqrt(0.9)|00> + sqrt(0.1)|11>: raw singlet fidelity is 0, but a
        // balancing filter plus local rotation reaches the exact singlet.
        CVector psi = CVector::Zero(4);
        psi(0) = std::sqrt(0.9);
        psi(3) = std::sqrt(0.1);
        const BipartiteState s(2, 2, psi * psi.adjoint());
        CHECK(singlet_fidelity(s) < 0.5);
        const FilterBoostResult r = filter_boost(s, 24, 7);
        CHECK(r.improved);
        CHECK(r.fidelity > 0.5);
        CHECK(r.fidelity > 0.95); // the closed-form filter achieves 1
        CHECK(std::abs(singlet_fidelity(r.boosted) - r.fidelity) <= 1e-9);
    }
    SUBCASE("separable states never cross 1/2") {
        SplitMix64 rng(11);
        for (int trial = 0; trial < 5; ++trial) {
            const BipartiteState s = random_separable(2, 2, 3, rng.next_u64());
            const FilterBoostResult r = filter_boost(s, 16, rng.next_u64());
            CHECK(r.fidelity <= 0.5 + 1e-6);
        }
    }
    SUBCASE("restart count must be positive") {
        CHECK_THROWS_AS(filter_boost(werner(0.3), 0, 1), ParameterError);
    }
}
