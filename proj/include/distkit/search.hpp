#pragma once

#include <cstdint>
#include <optional>

#include "distkit/densmat.hpp"
#include "distkit/locc.hpp"
#include "distkit/rng.hpp"

namespace distkit {

enum class SearchVerdict { DistillableWitnessFound, NoWitnessFound, CertifiedNotDistillable };

const char* to_string(SearchVerdict v);

struct SearchResult {
    SearchVerdict verdict = SearchVerdict::NoWitnessFound;
    double best_negativity = 0.0;
    std::optional<Frame2> best_frame_a; // unset when certification short-circuits
    std::optional<Frame2> best_frame_b;
    int copies = 0;
    int restarts_used = 0;
    long evaluations = 0;
};

struct SearchOptions {
    int refine_budget = 2000;
    double ppt_tol = kDefaultTol;
    // Negativity above this counts as a genuine witness rather than
    // eigensolver noise.
    double witness_threshold = 1e-7;
    // Test hook: search NPT-style even when the input is PPT. The
    // certification short-circuit is the production behavior.
    bool bypass_ppt_certification = false;
    std::size_t dim_cap = kDefaultDimCap;
};

// Searches pairs of local two-dimensional projectors on the `copies`-fold
// tensor power for a projected 2x2 block with positive negativity, which is
// a direct distillability witness. PPT inputs are certified not distillable
// without searching. A NoWitnessFound verdict proves nothing.
SearchResult search_2x2_projection(const BipartiteState& s, int copies, int restarts,
                                   std::uint64_t seed, const SearchOptions& opts = {});

struct RefineResult {
    Frame2 frame_a;
    Frame2 frame_b;
    double negativity = 0.0;
    long evaluations = 0;
};

// Stochastic hill climb: perturbs the frame vectors with scaled random
// tangent steps, re-orthonormalizes, keeps improvements, and halves the step
// on stagnation (floor 1e-6). budget bounds the number of proposals.
RefineResult refine_frames(const BipartiteState& s_ncopy, const Frame2& fa, const Frame2& fb,
                           int budget, std::uint64_t seed);

// Seeded Haar-ish random frame (Gram-Schmidt on Gaussian vectors).
Frame2 random_frame(int local_dim, SplitMix64& rng);

} // namespace distkit
