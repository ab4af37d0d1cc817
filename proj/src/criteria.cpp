#include "distkit/criteria.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace distkit {

const char* to_string(StateClass c) {
    switch (c) {
    case StateClass::Separable:
        return "Separable";
    case StateClass::FreeEntangledNPT:
        return "FreeEntangledNPT";
    case StateClass::BoundEntangledPPT:
        return "BoundEntangledPPT";
    case StateClass::UndecidedPPT:
        return "UndecidedPPT";
    }
    return "?";
}

const char* to_string(Distillability d) {
    return d == Distillability::NotDistillable ? "NotDistillable" : "Unknown";
}

double min_pt_eigenvalue(const BipartiteState& s) {
    return eigvals_hermitian(partial_transpose(s)).front();
}

bool is_ppt(const BipartiteState& s, double tol) {
    return min_pt_eigenvalue(s) >= -tol;
}

double negativity_of(const CMatrix& rho, int dim_a, int dim_b, double tol) {
    const std::vector<double> spectrum = eigvals_hermitian(partial_transpose(rho, dim_a, dim_b));
    double sum = 0.0;
    for (double lambda : spectrum) {
        if (lambda < -tol) {
            sum += -lambda;
        }
    }
    return sum;
}

double negativity(const BipartiteState& s, double tol) {
    return negativity_of(s.rho(), s.dim_a(), s.dim_b(), tol);
}

double realignment_norm(const BipartiteState& s) {
    const int da = s.dim_a();
    const int db = s.dim_b();
    const CMatrix& rho = s.rho();
    CMatrix r(da * da, db * db);
    for (int m = 0; m < da; ++m) {
        for (int n = 0; n < da; ++n) {
            for (int mu = 0; mu < db; ++mu) {
                for (int nu = 0; nu < db; ++nu) {
                    r(m * da + n, mu * db + nu) = rho(m * db + mu, n * db + nu);
                }
            }
        }
    }
    Eigen::JacobiSVD<CMatrix> svd(r);
    return svd.singularValues().sum();
}

CriteriaReport classify(const BipartiteState& s, double tol) {
    CriteriaReport report;
    report.dim_a = s.dim_a();
    report.dim_b = s.dim_b();
    report.pt_spectrum = eigvals_hermitian(partial_transpose(s));

    const double min_pt = report.pt_spectrum.front();
    double neg = 0.0;
    for (double lambda : report.pt_spectrum) {
        if (lambda < -tol) {
            neg += -lambda;
        }
    }
    report.negativity = neg;
    report.realignment_norm = realignment_norm(s);

    report.label.min_pt_eigenvalue = min_pt;
    report.label.detector_scores["realignment"] = report.realignment_norm;

    const bool ppt = min_pt >= -tol;
    const bool low_dim = (s.dim_a() == 2 && s.dim_b() == 2) ||
                         (s.dim_a() == 2 && s.dim_b() == 3) ||
                         (s.dim_a() == 3 && s.dim_b() == 2);
    if (!ppt) {
        report.label.state_class = StateClass::FreeEntangledNPT;
        report.label.distillability_certified = (s.dim_a() == 2 && s.dim_b() == 2);
    } else if (low_dim) {
        // In 2x2 and 2x3 the PT test is sufficient for separability.
        report.label.state_class = StateClass::Separable;
    } else if (report.realignment_norm > 1.0 + tol) {
        report.label.state_class = StateClass::BoundEntangledPPT;
    } else {
        report.label.state_class = StateClass::UndecidedPPT;
    }
    return report;
}

Distillability distillability_upper_bound(const BipartiteState& s, double tol) {
    return is_ppt(s, tol) ? Distillability::NotDistillable : Distillability::Unknown;
}

} // namespace distkit
