#include "distkit/distill.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "distkit/locc.hpp"
#include "distkit/rng.hpp"
#include "distkit/states.hpp"

namespace distkit {

namespace {

constexpr int kBoostRestartsDefault = 48;
constexpr std::uint64_t kBoostSeedDefault = 0x7761746368646f67ULL;

// Below this the recurrence makes no practical progress.
constexpr double kMinUsableFidelity = 0.5 + 1e-9;

CVector singlet_vector() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CVector psi = CVector::Zero(4);
    psi(1) = inv_sqrt2;
    psi(2) = -inv_sqrt2;
    return psi;
}

void require_two_qubit(const BipartiteState& s, const char* where) {
    if (s.dim_a() != 2 || s.dim_b() != 2) {
        throw ValidationError(std::string(where) + ": expected a 2x2 state, got " +
                              std::to_string(s.dim_a()) + "x" + std::to_string(s.dim_b()));
    }
}

CMatrix rotation2(double theta) {
    CMatrix r(2, 2);
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

// Filter parametrization per side: R(theta1) diag(1, t) R(theta2).
struct FilterParams {
    std::array<double, 6> p; // thetaA1, tA, thetaA2, thetaB1, tB, thetaB2
};

CMatrix filter_from(double theta1, double t, double theta2) {
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = t;
    return rotation2(theta1) * d * rotation2(theta2);
}

double clamp_t(double t) { return std::min(1.0, std::max(0.01, t)); }

// Singlet fidelity of (a (x) b) rho (a (x) b)^dagger / p without building a
// validated state; returns -1 when the filter annihilates the state.
double filtered_fidelity(const CMatrix& rho, const CMatrix& a, const CMatrix& b,
                         const CVector& psi) {
    const CMatrix k = kron(a, b);
    const CVector u = k.adjoint() * psi;
    const double numer = (u.adjoint() * rho * u)(0, 0).real();
    const double denom = (k.adjoint() * k * rho).trace().real();
    if (denom < kNullOutcomeThreshold) {
        return -1.0;
    }
    return numer / denom;
}

} // namespace

double singlet_fidelity(const BipartiteState& s) {
    require_two_qubit(s, "singlet_fidelity");
    const CVector psi = singlet_vector();
    return (psi.adjoint() * s.rho() * psi)(0, 0).real();
}

BipartiteState twirl_to_werner(const BipartiteState& s) {
    require_two_qubit(s, "twirl_to_werner");
    double f = singlet_fidelity(s);
    // Clamp away validation-level noise at the range ends.
    f = std::min(1.0, std::max(0.0, f));
    return werner(f);
}

StepResult bbpssw_step(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw ParameterError("bbpssw_step: fidelity must lie in [0, 1], got " +
                             std::to_string(fidelity));
    }
    const double f = fidelity;
    const double w = (1.0 - f) / 3.0;
    const double survival = f * f + 2.0 * f * w + 5.0 * w * w;
    const double next = (f * f + w * w) / survival;
    return StepResult{next, survival};
}

DistillRun recurrence_distill(const BipartiteState& s, double target_fidelity, int max_rounds) {
    require_two_qubit(s, "recurrence_distill");
    if (!(target_fidelity > 0.5 && target_fidelity < 1.0)) {
        throw ParameterError("recurrence_distill: target fidelity must lie in (1/2, 1)");
    }
    if (max_rounds < 1) {
        throw ParameterError("recurrence_distill: max_rounds must be >= 1");
    }

    DistillRun run;
    double f = singlet_fidelity(s);
    if (f <= 0.5) {
        FilterBoostResult boost = filter_boost(s, kBoostRestartsDefault, kBoostSeedDefault);
        if (boost.fidelity <= kMinUsableFidelity) {
            throw ProtocolFailure("recurrence_distill: fidelity <= 1/2 after filtering");
        }
        run.filter_applied = true;
        run.filter_prob = local_filter(s, boost.filter_a, boost.filter_b).prob;
        f = boost.fidelity;
    }

    double pairs_factor = 1.0;
    run.records.push_back(DistillRecord{0, f, 1.0, pairs_factor});
    if (f >= target_fidelity) {
        run.reached_target = true;
        return run;
    }
    for (int round = 1; round <= max_rounds; ++round) {
        const StepResult step = bbpssw_step(f);
        f = step.fidelity;
        pairs_factor *= 2.0 / step.survival;
        run.records.push_back(DistillRecord{round, f, step.survival, pairs_factor});
        if (f >= target_fidelity) {
            run.reached_target = true;
            break;
        }
    }
    return run;
}

FilterBoostResult filter_boost(const BipartiteState& s, int restarts, std::uint64_t seed) {
    require_two_qubit(s, "filter_boost");
    if (restarts < 1) {
        throw ParameterError("filter_boost: restarts must be >= 1");
    }
    const CMatrix identity = CMatrix::Identity(2, 2);
    const double base = singlet_fidelity(s);
    FilterBoostResult result{identity, identity, s, base, false};
    if (base > 0.5) {
        return result; // nothing to lift
    }

    const CVector psi = singlet_vector();
    const CMatrix& rho = s.rho();
    FilterParams best_params{};
    double best = base;
    bool found = false;

    for (int r = 0; r < restarts; ++r) {
        // Restart r draws from the stream seeded with seed + r.
        SplitMix64 rng(seed + static_cast<std::uint64_t>(r));
        FilterParams cur{};
        for (int i : {0, 2, 3, 5}) {
            cur.p[i] = rng.next_double() * 2.0 * std::numbers::pi;
        }
        cur.p[1] = clamp_t(rng.next_double());
        cur.p[4] = clamp_t(rng.next_double());

        auto evaluate = [&](const FilterParams& q) {
            return filtered_fidelity(rho, filter_from(q.p[0], q.p[1], q.p[2]),
                                     filter_from(q.p[3], q.p[4], q.p[5]), psi);
        };
        double cur_val = evaluate(cur);
        double step = 0.4;
        int stagnation = 0;
        for (int it = 0; it < 400; ++it) {
            FilterParams trial = cur;
            for (int i = 0; i < 6; ++i) {
                trial.p[i] += step * rng.next_gaussian();
            }
            trial.p[1] = clamp_t(trial.p[1]);
            trial.p[4] = clamp_t(trial.p[4]);
            const double val = evaluate(trial);
            if (val > cur_val) {
                cur = trial;
                cur_val = val;
                stagnation = 0;
            } else if (++stagnation >= 20) {
                step = std::max(step * 0.5, 1e-6);
                stagnation = 0;
            }
        }
        if (cur_val > best + 1e-12) {
            best = cur_val;
            best_params = cur;
            found = true;
        }
    }

    if (!found) {
        return result;
    }
    result.filter_a = filter_from(best_params.p[0], best_params.p[1], best_params.p[2]);
    result.filter_b = filter_from(best_params.p[3], best_params.p[4], best_params.p[5]);
    result.boosted = local_filter(s, result.filter_a, result.filter_b).state;
    result.fidelity = singlet_fidelity(result.boosted);
    result.improved = true;
    return result;
}

} // namespace distkit
