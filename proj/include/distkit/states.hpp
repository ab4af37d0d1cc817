#pragma once

#include <cstdint>

#include "distkit/densmat.hpp"

namespace distkit {

// Two-qubit singlet projector |Psi-><Psi-|, Psi- = (|01> - |10>)/sqrt(2).
BipartiteState singlet();

// Werner state parametrized by singlet fidelity:
//   F * P- + (1-F)/3 * (I4 - P-),   F in [0, 1].
BipartiteState werner(double fidelity);

// Isotropic d (x) d state:
//   F |Phi+><Phi+| + (1-F)/(d^2-1) (I - |Phi+><Phi+|),  Phi+ = sum_i |ii>/sqrt(d).
BipartiteState isotropic(int d, double fidelity);

// The 3 (x) 3 PPT-entangled one-parameter family, 0 < a < 1.
BipartiteState horodecki3x3(double a);

// Convex mixture of `terms` random product states
//   sum_i p_i |x_i><x_i| (x) |y_i><y_i|
// with seeded weights and local pure factors. Deterministic in seed.
BipartiteState random_separable(int dim_a, int dim_b, int terms, std::uint64_t seed);

// Seeded random full-rank density matrix G G^dagger / Tr(G G^dagger).
CMatrix random_density(int d, std::uint64_t seed);

enum class Family { Singlet, Werner, Isotropic, Horodecki3x3, RandomSeparable, RandomDensity };

struct FamilyParams {
    Family family = Family::Singlet;
    double fidelity = 0.0;   // Werner / Isotropic
    double a = 0.0;          // Horodecki3x3
    int d = 0;               // Isotropic local dimension
    int dim_a = 0;           // random families
    int dim_b = 0;
    int terms = 0;           // RandomSeparable mixture size
    std::uint64_t seed = 0;
};

// Dispatches to the family generators above, validating parameter ranges.
BipartiteState make_state(const FamilyParams& params);

} // namespace distkit
