#include "distkit/locc.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace distkit {

namespace {

// Two-pass modified Gram-Schmidt. Returns false if the pair is numerically
// dependent.
bool gram_schmidt(CVector& v0, CVector& v1) {
    const double n0 = v0.norm();
    if (n0 < 1e-12) {
        return false;
    }
    v0 /= n0;
    for (int pass = 0; pass < 2; ++pass) {
        v1 -= v0.dot(v1) * v0;
    }
    const double n1 = v1.norm();
    if (n1 < 1e-12) {
        return false;
    }
    v1 /= n1;
    return true;
}

} // namespace

Frame2::Frame2(CVector v0, CVector v1) : v0_(std::move(v0)), v1_(std::move(v1)) {
    if (v0_.size() != v1_.size() || v0_.size() < 2) {
        throw ValidationError("Frame2: vectors must share a local dimension >= 2");
    }
    const double dev = std::max({std::abs(v0_.norm() - 1.0), std::abs(v1_.norm() - 1.0),
                                 std::abs(v0_.dot(v1_))});
    if (dev > 1e-6) {
        throw ValidationError("Frame2: input deviates from orthonormal by " + std::to_string(dev));
    }
    if (!gram_schmidt(v0_, v1_)) {
        throw ValidationError("Frame2: vectors are linearly dependent");
    }
}

Frame2 Frame2::orthonormalized(CVector v0, CVector v1) {
    if (v0.size() != v1.size() || v0.size() < 2) {
        throw ValidationError("Frame2: vectors must share a local dimension >= 2");
    }
    if (!gram_schmidt(v0, v1)) {
        throw ParameterError("Frame2: vectors are linearly dependent");
    }
    return Frame2(AlreadyOrthonormal{}, std::move(v0), std::move(v1));
}

Frame2 Frame2::standard(int local_dim) {
    if (local_dim < 2) {
        throw ParameterError("Frame2: local dimension must be >= 2");
    }
    CVector v0 = CVector::Zero(local_dim);
    CVector v1 = CVector::Zero(local_dim);
    v0(0) = 1.0;
    v1(1) = 1.0;
    return Frame2(AlreadyOrthonormal{}, std::move(v0), std::move(v1));
}

BipartiteState tensor_product(const BipartiteState& s, const BipartiteState& t,
                              std::size_t dim_cap) {
    const int da = s.dim_a() * t.dim_a();
    const int db = s.dim_b() * t.dim_b();
    const std::size_t dim = static_cast<std::size_t>(da) * static_cast<std::size_t>(db);
    if (dim > dim_cap) {
        throw CapacityError("tensor_product: composite dimension " + std::to_string(dim) +
                            " exceeds cap " + std::to_string(dim_cap));
    }

    // Decode composite index -> (index into s, index into t) once per side.
    const int d = static_cast<int>(dim);
    std::vector<int> first(d), second(d);
    for (int ia = 0; ia < da; ++ia) {
        const int a1 = ia / t.dim_a();
        const int a2 = ia % t.dim_a();
        for (int ib = 0; ib < db; ++ib) {
            const int b1 = ib / t.dim_b();
            const int b2 = ib % t.dim_b();
            const int row = ia * db + ib;
            first[row] = a1 * s.dim_b() + b1;
            second[row] = a2 * t.dim_b() + b2;
        }
    }

    CMatrix out(d, d);
    const CMatrix& rs = s.rho();
    const CMatrix& rt = t.rho();
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) {
            out(r, c) = rs(first[r], first[c]) * rt(second[r], second[c]);
        }
    }
    return BipartiteState(da, db, std::move(out));
}

BipartiteState tensor_power(const BipartiteState& s, int n, std::size_t dim_cap) {
    if (n < 1) {
        throw ParameterError("tensor_power: copy count must be >= 1");
    }
    // Reject up front so a capped request fails before any allocation.
    double dim = 1.0;
    for (int i = 0; i < n; ++i) {
        dim *= static_cast<double>(s.dim());
        if (dim > static_cast<double>(dim_cap)) {
            throw CapacityError("tensor_power: composite dimension exceeds cap " +
                                std::to_string(dim_cap));
        }
    }
    BipartiteState acc = s;
    for (int i = 1; i < n; ++i) {
        acc = tensor_product(acc, s, dim_cap);
    }
    return acc;
}

KrausResult apply_local_kraus(const BipartiteState& s, const std::vector<KrausPair>& pairs) {
    if (pairs.empty()) {
        throw ParameterError("apply_local_kraus: need at least one Kraus pair");
    }
    const Eigen::Index out_a = pairs.front().a.rows();
    const Eigen::Index out_b = pairs.front().b.rows();
    for (const KrausPair& p : pairs) {
        if (p.a.cols() != s.dim_a() || p.b.cols() != s.dim_b()) {
            throw ValidationError("apply_local_kraus: operator column counts must match the "
                                  "state's local dimensions");
        }
        if (p.a.rows() != out_a || p.b.rows() != out_b) {
            throw ValidationError("apply_local_kraus: all pairs must share output dimensions");
        }
    }
    const Eigen::Index dim = out_a * out_b;
    CMatrix acc = CMatrix::Zero(dim, dim);
    for (const KrausPair& p : pairs) {
        const CMatrix k = kron(p.a, p.b);
        acc += k * s.rho() * k.adjoint();
    }
    const double norm = acc.trace().real();
    if (norm < kNullOutcomeThreshold) {
        throw NullOutcomeError("apply_local_kraus: operation annihilates the state (norm " +
                               std::to_string(norm) + ")");
    }
    acc /= norm;
    return KrausResult{BipartiteState(static_cast<int>(out_a), static_cast<int>(out_b),
                                      std::move(acc)),
                       norm};
}

FilterResult local_filter(const BipartiteState& s, const CMatrix& a, const CMatrix& b) {
    if (a.cols() != s.dim_a() || b.cols() != s.dim_b()) {
        throw ValidationError("local_filter: operator column counts must match the state's "
                              "local dimensions");
    }
    const double sa = Eigen::JacobiSVD<CMatrix>(a).singularValues()(0);
    const double sb = Eigen::JacobiSVD<CMatrix>(b).singularValues()(0);
    if (sa < 1e-300 || sb < 1e-300) {
        throw NullOutcomeError("local_filter: zero filter operator");
    }
    KrausResult r = apply_local_kraus(s, {KrausPair{a / sa, b / sb}});
    return FilterResult{std::move(r.state), r.norm};
}

std::pair<CMatrix, double> project_block(const BipartiteState& s, const Frame2& fa,
                                         const Frame2& fb) {
    if (fa.local_dim() != s.dim_a() || fb.local_dim() != s.dim_b()) {
        throw ValidationError("project_to_2x2: frame dimensions must match the state's local "
                              "dimensions");
    }
    const CVector* va[2] = {&fa.v0(), &fa.v1()};
    const CVector* wb[2] = {&fb.v0(), &fb.v1()};
    // Columns of the isometry V: v_i (x) w_k at column i*2+k.
    CMatrix isometry(s.dim(), 4);
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            CVector col(s.dim());
            for (int m = 0; m < s.dim_a(); ++m) {
                for (int mu = 0; mu < s.dim_b(); ++mu) {
                    col(m * s.dim_b() + mu) = (*va[i])(m) * (*wb[k])(mu);
                }
            }
            isometry.col(i * 2 + k) = col;
        }
    }
    CMatrix block = isometry.adjoint() * s.rho() * isometry;
    const double prob = block.trace().real();
    return {std::move(block), prob};
}

ProjectionResult project_to_2x2(const BipartiteState& s, const Frame2& fa, const Frame2& fb) {
    auto [block, prob] = project_block(s, fa, fb);
    if (prob < kNullOutcomeThreshold) {
        throw NullOutcomeError("project_to_2x2: projection annihilates the state (prob " +
                               std::to_string(prob) + ")");
    }
    block /= prob;
    return ProjectionResult{BipartiteState(2, 2, std::move(block)), prob};
}

} // namespace distkit
