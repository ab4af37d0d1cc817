#include "distkit/states.hpp"

#include <cmath>
#include <string>

#include "distkit/rng.hpp"

namespace distkit {

namespace {

CVector random_unit_vector(int d, SplitMix64& rng) {
    CVector v(d);
    for (int i = 0; i < d; ++i) {
        v(i) = rng.next_complex_gaussian();
    }
    return v / v.norm();
}

} // namespace

BipartiteState singlet() {
    // |Psi-><Psi-| expanded over |01>, |10>; entries are exact halves.
    CMatrix rho = CMatrix::Zero(4, 4);
    rho(1, 1) = 0.5;
    rho(2, 2) = 0.5;
    rho(1, 2) = -0.5;
    rho(2, 1) = -0.5;
    return BipartiteState(2, 2, std::move(rho));
}

BipartiteState werner(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw ParameterError("werner: fidelity must lie in [0, 1], got " + std::to_string(fidelity));
    }
    const CMatrix p_minus = singlet().rho();
    CMatrix rho = fidelity * p_minus + (1.0 - fidelity) / 3.0 * (CMatrix::Identity(4, 4) - p_minus);
    return BipartiteState(2, 2, std::move(rho));
}

BipartiteState isotropic(int d, double fidelity) {
    if (d < 2) {
        throw ParameterError("isotropic: local dimension must be >= 2");
    }
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw ParameterError("isotropic: fidelity must lie in [0, 1], got " + std::to_string(fidelity));
    }
    CVector phi = CVector::Zero(d * d);
    for (int i = 0; i < d; ++i) {
        phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    const CMatrix proj = phi * phi.adjoint();
    const int dim = d * d;
    CMatrix rho = fidelity * proj +
                  (1.0 - fidelity) / (dim - 1.0) * (CMatrix::Identity(dim, dim) - proj);
    return BipartiteState(d, d, std::move(rho));
}

BipartiteState horodecki3x3(double a) {
    if (!(a > 0.0 && a < 1.0)) {
        throw ParameterError("horodecki3x3: parameter must lie strictly inside (0, 1), got " +
                             std::to_string(a));
    }
    CMatrix rho = CMatrix::Zero(9, 9);
    for (int i = 0; i < 9; ++i) {
        rho(i, i) = a;
    }
    rho(6, 6) = (1.0 + a) / 2.0;
    rho(8, 8) = (1.0 + a) / 2.0;
    const int corners[][2] = {{0, 4}, {0, 8}, {4, 0}, {4, 8}, {8, 0}, {8, 4}};
    for (const auto& ij : corners) {
        rho(ij[0], ij[1]) = a;
    }
    const double cross = std::sqrt(1.0 - a * a) / 2.0;
    rho(6, 8) = cross;
    rho(8, 6) = cross;
    rho /= 8.0 * a + 1.0;
    return BipartiteState(3, 3, std::move(rho));
}

BipartiteState random_separable(int dim_a, int dim_b, int terms, std::uint64_t seed) {
    if (dim_a < 1 || dim_b < 1) {
        throw ParameterError("random_separable: dimensions must be positive");
    }
    if (terms < 1) {
        throw ParameterError("random_separable: mixture needs at least one term");
    }
    SplitMix64 rng(seed);
    std::vector<double> weights(terms);
    double total = 0.0;
    for (int i = 0; i < terms; ++i) {
        weights[i] = rng.next_double() + 1e-9;
        total += weights[i];
    }
    const int dim = dim_a * dim_b;
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (int i = 0; i < terms; ++i) {
        const CVector x = random_unit_vector(dim_a, rng);
        const CVector y = random_unit_vector(dim_b, rng);
        const CMatrix local_a = x * x.adjoint();
        const CMatrix local_b = y * y.adjoint();
        rho += (weights[i] / total) * kron(local_a, local_b);
    }
    return BipartiteState(dim_a, dim_b, std::move(rho));
}

CMatrix random_density(int d, std::uint64_t seed) {
    if (d < 1) {
        throw ParameterError("random_density: dimension must be positive");
    }
    SplitMix64 rng(seed);
    CMatrix g(d, d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

BipartiteState make_state(const FamilyParams& p) {
    switch (p.family) {
    case Family::Singlet:
        return singlet();
    case Family::Werner:
        return werner(p.fidelity);
    case Family::Isotropic:
        return isotropic(p.d, p.fidelity);
    case Family::Horodecki3x3:
        return horodecki3x3(p.a);
    case Family::RandomSeparable:
        return random_separable(p.dim_a, p.dim_b, p.terms, p.seed);
    case Family::RandomDensity: {
        if (p.dim_a < 1 || p.dim_b < 1) {
            throw ParameterError("random_density: dimensions must be positive");
        }
        return BipartiteState(p.dim_a, p.dim_b, random_density(p.dim_a * p.dim_b, p.seed));
    }
    }
    throw ParameterError("make_state: unknown family");
}

} // namespace distkit
