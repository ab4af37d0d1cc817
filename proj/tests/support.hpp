#pragma once

// Shared helpers for the unit and acceptance suites.

#include <cstdint>
#include <vector>

#include <Eigen/QR>

#include "distkit/criteria.hpp"
#include "distkit/densmat.hpp"
#include "distkit/distill.hpp"
#include "distkit/locc.hpp"
#include "distkit/rng.hpp"
#include "distkit/search.hpp"
#include "distkit/states.hpp"

namespace testsupport {

using namespace distkit;

inline BipartiteState random_state(int dim_a, int dim_b, std::uint64_t seed) {
    return BipartiteState(dim_a, dim_b, random_density(dim_a * dim_b, seed));
}

inline CMatrix random_unitary(int d, SplitMix64& rng) {
    CMatrix g(d, d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    return qr.householderQ();
}

inline CMatrix random_complex_matrix(int rows, int cols, SplitMix64& rng) {
    CMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            m(i, j) = rng.next_complex_gaussian();
        }
    }
    return m;
}

inline double max_abs_diff(const CMatrix& x, const CMatrix& y) {
    return (x - y).cwiseAbs().maxCoeff();
}

// A random PPT state: a seeded random density matrix blended with just enough
// white noise to clear the PT boundary. Exercises states near the boundary,
// unlike separable samples.
inline BipartiteState random_ppt_state(int dim_a, int dim_b, std::uint64_t seed) {
    const int d = dim_a * dim_b;
    const CMatrix rho = random_density(d, seed);
    const double min_pt = eigvals_hermitian(partial_transpose(rho, dim_a, dim_b)).front();
    const double p = 1.05 * std::max(0.0, -min_pt) * d;
    const CMatrix blended = (rho + (p / d) * CMatrix::Identity(d, d)) / (1.0 + p);
    return BipartiteState(dim_a, dim_b, blended);
}

// Explicit two-pair realization of one recurrence round, kept independent of
// the closed-form bbpssw_step it validates:
//   - rotate Bob's qubit so the marked Bell state is |Phi+>
//   - take two copies (A factors first)
//   - bilateral CNOT, pair 1 controlling pair 2
//   - measure pair 2 in the computational bases, keep equal outcomes
//   - rotate back, twirl to Werner form
inline StepResult two_pair_protocol_oracle(double fidelity) {
    const CMatrix identity2 = CMatrix::Identity(2, 2);
    CMatrix sigma_y(2, 2);
    sigma_y << std::complex<double>(0, 0), std::complex<double>(0, -1),
        std::complex<double>(0, 1), std::complex<double>(0, 0);

    const BipartiteState w = werner(fidelity);
    const BipartiteState rotated = local_filter(w, identity2, sigma_y).state;
    const BipartiteState two = tensor_power(rotated, 2);

    CMatrix cnot = CMatrix::Zero(4, 4);
    for (int c = 0; c < 2; ++c) {
        for (int t = 0; t < 2; ++t) {
            cnot(c * 2 + (t ^ c), c * 2 + t) = 1.0;
        }
    }
    const BipartiteState after = apply_local_kraus(two, {KrausPair{cnot, cnot}}).state;

    std::vector<KrausPair> keep_equal;
    for (int m = 0; m < 2; ++m) {
        CMatrix op = CMatrix::Zero(2, 4);
        op(0, 0 * 2 + m) = 1.0;
        op(1, 1 * 2 + m) = 1.0;
        keep_equal.push_back(KrausPair{op, op});
    }
    const KrausResult kept = apply_local_kraus(after, keep_equal);

    const BipartiteState back = local_filter(kept.state, identity2, sigma_y.adjoint()).state;
    return StepResult{singlet_fidelity(twirl_to_werner(back)), kept.norm};
}

} // namespace testsupport
