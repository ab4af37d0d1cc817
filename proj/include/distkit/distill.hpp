#pragma once

#include <cstdint>
#include <vector>

#include "distkit/densmat.hpp"

namespace distkit {

// Overlap <Psi-| rho |Psi-> of a two-qubit state with the singlet.
double singlet_fidelity(const BipartiteState& s);

// Deterministic projection onto the Werner family: returns werner(F) with
// F = singlet_fidelity(s). Matches the ensemble average of random bilateral
// rotations without sampling them.
BipartiteState twirl_to_werner(const BipartiteState& s);

struct StepResult {
    double fidelity;
    double survival; // probability that a pair of pairs passes the round
};

// One recurrence round on Werner input of singlet fidelity f:
//   f' = (f^2 + w^2) / (f^2 + 2 f w + 5 w^2),   w = (1 - f)/3,
// with the denominator as the survival probability.
StepResult bbpssw_step(double fidelity);

struct DistillRecord {
    int round = 0;
    double fidelity = 0.0;
    double survival = 1.0;
    // Cumulative expected input pairs consumed per surviving output pair,
    // 2^round / prod(survival); grows at least as fast as 2^round.
    double pairs_factor = 1.0;
};

struct DistillRun {
    std::vector<DistillRecord> records;
    bool reached_target = false;
    bool filter_applied = false;
    double filter_prob = 1.0; // success probability of the boost filter, if any
};

// Twirls to Werner form and iterates the recurrence until the target fidelity
// is reached or max_rounds expires. When the raw fidelity is at or below 1/2,
// a seeded filter search tries to lift it first; if that fails the state is
// not distillable by this protocol and ProtocolFailure is thrown.
DistillRun recurrence_distill(const BipartiteState& s, double target_fidelity, int max_rounds);

struct FilterBoostResult {
    CMatrix filter_a;
    CMatrix filter_b;
    BipartiteState boosted;
    double fidelity;
    bool improved; // false: identity filter returned, boosted == input
};

// Random-restart search over local filters R1 diag(1, t) R2 (per side)
// maximizing the singlet fidelity of the filtered state. Heuristic, no
// optimality guarantee; returns the identity filter when the input fidelity
// already exceeds 1/2 or no improvement is found.
FilterBoostResult filter_boost(const BipartiteState& s, int restarts, std::uint64_t seed);

} // namespace distkit
