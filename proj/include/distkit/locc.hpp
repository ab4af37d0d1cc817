#pragma once

#include <utility>
#include <vector>

#include "distkit/densmat.hpp"

namespace distkit {

// One term (A_i, B_i) of a separable superoperator, applied as A_i (x) B_i.
// Operators may be rectangular: they map the local spaces into smaller ones.
struct KrausPair {
    CMatrix a;
    CMatrix b;
};

// Ordered pair of orthonormal vectors spanning a local 2-dimensional
// subspace; the associated projector is v0 v0^dagger + v1 v1^dagger.
class Frame2 {
public:
    // Validating constructor: inputs farther than 1e-6 from orthonormal are
    // rejected; closer inputs are cleaned up by two-pass Gram-Schmidt.
    Frame2(CVector v0, CVector v1);

    // Builds an orthonormal frame from arbitrary (linearly independent)
    // vectors. Used wherever frames are generated or perturbed numerically.
    static Frame2 orthonormalized(CVector v0, CVector v1);

    // The |0>, |1> computational-basis frame.
    static Frame2 standard(int local_dim);

    const CVector& v0() const { return v0_; }
    const CVector& v1() const { return v1_; }
    int local_dim() const { return static_cast<int>(v0_.size()); }

private:
    struct AlreadyOrthonormal {};
    Frame2(AlreadyOrthonormal, CVector v0, CVector v1)
        : v0_(std::move(v0)), v1_(std::move(v1)) {}

    CVector v0_;
    CVector v1_;
};

// Tensor product with the A factors grouped in front:
// local dimensions multiply, A index = a1 * dA2 + a2, B index = b1 * dB2 + b2.
BipartiteState tensor_product(const BipartiteState& s, const BipartiteState& t,
                              std::size_t dim_cap = kDefaultDimCap);

// n-fold tensor power with all A factors preceding all B factors.
BipartiteState tensor_power(const BipartiteState& s, int n,
                            std::size_t dim_cap = kDefaultDimCap);

struct KrausResult {
    BipartiteState state;
    double norm; // Tr sum_i (A_i (x) B_i) rho (A_i (x) B_i)^dagger
};

// Applies sum_i (A_i (x) B_i) rho (A_i (x) B_i)^dagger / M.
// Throws NullOutcomeError when M falls below the null-outcome threshold.
KrausResult apply_local_kraus(const BipartiteState& s, const std::vector<KrausPair>& pairs);

struct FilterResult {
    BipartiteState state;
    double prob; // success probability of the filtering outcome
};

// Single-pair probabilistic local operation. The operators are rescaled by
// their largest singular values first, so prob lands in (0, 1].
FilterResult local_filter(const BipartiteState& s, const CMatrix& a, const CMatrix& b);

struct ProjectionResult {
    BipartiteState m2q;
    double prob; // Tr (P_A (x) P_B) rho
};

// Compresses rho onto the 2 (x) 2 subspace selected by the frames:
//   m2q(i*2+k, j*2+l) = <v_i (x) w_k| rho |v_j (x) w_l> / prob.
ProjectionResult project_to_2x2(const BipartiteState& s, const Frame2& fa, const Frame2& fb);

// Unnormalized 4x4 compression block and its trace. project_to_2x2 and the
// projector search share this so their numerics agree exactly.
std::pair<CMatrix, double> project_block(const BipartiteState& s, const Frame2& fa,
                                         const Frame2& fb);

} // namespace distkit
