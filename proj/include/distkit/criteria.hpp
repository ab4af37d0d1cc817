#pragma once

#include <map>
#include <string>
#include <vector>

#include "distkit/densmat.hpp"

namespace distkit {

enum class StateClass { Separable, FreeEntangledNPT, BoundEntangledPPT, UndecidedPPT };

const char* to_string(StateClass c);

struct ClassLabel {
    StateClass state_class = StateClass::UndecidedPPT;
    double min_pt_eigenvalue = 0.0;
    std::map<std::string, double> detector_scores;
    // Set only for NPT 2 (x) 2 states, where a violation of the partial
    // transposition test already certifies distillability. NPT states of
    // higher dimension keep the FreeEntangledNPT label with this flag off.
    bool distillability_certified = false;
};

struct CriteriaReport {
    ClassLabel label;
    std::vector<double> pt_spectrum; // ascending
    double negativity = 0.0;
    double realignment_norm = 0.0;
    int dim_a = 0;
    int dim_b = 0;
};

// Smallest eigenvalue of the partial transposition.
double min_pt_eigenvalue(const BipartiteState& s);

// Partial transposition test: true iff the PT spectrum is nonnegative at tol.
bool is_ppt(const BipartiteState& s, double tol = kDefaultTol);

// Sum of |negative PT eigenvalues| (eigenvalues below -tol); zero iff PPT.
double negativity(const BipartiteState& s, double tol = kDefaultTol);
double negativity_of(const CMatrix& rho, int dim_a, int dim_b, double tol = kDefaultTol);

// Trace norm of the realigned matrix R(m*dA+n, mu*dB+nu) = rho(m*dB+mu, n*dB+nu).
// Values above 1 flag inseparability; the detector is one-sided and advisory.
double realignment_norm(const BipartiteState& s);

// Full classification: PT test first, then dimension-dependent sufficiency,
// then the realignment detector for PPT states of higher dimension.
CriteriaReport classify(const BipartiteState& s, double tol = kDefaultTol);

enum class Distillability { NotDistillable, Unknown };

const char* to_string(Distillability d);

// PPT states cannot be distilled; for NPT states the question stays open.
Distillability distillability_upper_bound(const BipartiteState& s, double tol = kDefaultTol);

} // namespace distkit
