#include "distkit/densmat.hpp"

#include <cmath>
#include <string>

namespace distkit {

bool all_finite(const CMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const auto& z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                return false;
            }
        }
    }
    return true;
}

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t dim_cap) {
    const std::size_t rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
    const std::size_t cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
    if (rows > dim_cap || cols > dim_cap) {
        throw CapacityError("kron: output dimension " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds cap " + std::to_string(dim_cap));
    }
    CMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

BipartiteState::BipartiteState(int dim_a, int dim_b, CMatrix rho, double tol)
    : dim_a_(dim_a), dim_b_(dim_b), rho_(std::move(rho)) {
    if (dim_a_ < 1 || dim_b_ < 1) {
        throw ValidationError("BipartiteState: subsystem dimensions must be positive");
    }
    const Eigen::Index d = static_cast<Eigen::Index>(dim_a_) * dim_b_;
    if (rho_.rows() != d || rho_.cols() != d) {
        throw ValidationError("BipartiteState: matrix is " + std::to_string(rho_.rows()) + "x" +
                              std::to_string(rho_.cols()) + ", expected " + std::to_string(d) +
                              "x" + std::to_string(d));
    }
    if (!all_finite(rho_)) {
        throw ValidationError("BipartiteState: matrix has non-finite entries");
    }
    const double herm_dev = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol) {
        throw ValidationError("BipartiteState: not Hermitian (max deviation " +
                              std::to_string(herm_dev) + ")");
    }
    const double trace_dev = std::abs(rho_.trace() - std::complex<double>(1.0, 0.0));
    if (trace_dev > tol) {
        throw ValidationError("BipartiteState: trace differs from 1 by " + std::to_string(trace_dev));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(((rho_ + rho_.adjoint()) / 2.0).eval(),
                                                  Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol) {
        throw ValidationError("BipartiteState: not positive semidefinite (min eigenvalue " +
                              std::to_string(min_eig) + ")");
    }
}

CMatrix partial_transpose(const CMatrix& rho, int dim_a, int dim_b) {
    const Eigen::Index d = static_cast<Eigen::Index>(dim_a) * dim_b;
    if (dim_a < 1 || dim_b < 1 || rho.rows() != d || rho.cols() != d) {
        throw ValidationError("partial_transpose: matrix size does not match the subsystem "
                              "dimensions");
    }
    CMatrix out(rho.rows(), rho.cols());
    for (int m = 0; m < dim_a; ++m) {
        for (int n = 0; n < dim_a; ++n) {
            for (int mu = 0; mu < dim_b; ++mu) {
                for (int nu = 0; nu < dim_b; ++nu) {
                    out(m * dim_b + mu, n * dim_b + nu) = rho(m * dim_b + nu, n * dim_b + mu);
                }
            }
        }
    }
    return out;
}

CMatrix partial_transpose(const BipartiteState& s) {
    return partial_transpose(s.rho(), s.dim_a(), s.dim_b());
}

std::vector<double> eigvals_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw ValidationError("eigvals_hermitian: matrix is not square");
    }
    const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol) {
        throw ValidationError("eigvals_hermitian: input deviates from Hermitian by " +
                              std::to_string(herm_dev));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(((m + m.adjoint()) / 2.0).eval(),
                                                  Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

CMatrix partial_trace(const BipartiteState& s, Subsystem keep) {
    const int da = s.dim_a();
    const int db = s.dim_b();
    const CMatrix& rho = s.rho();
    if (keep == Subsystem::A) {
        CMatrix out = CMatrix::Zero(da, da);
        for (int m = 0; m < da; ++m) {
            for (int n = 0; n < da; ++n) {
                for (int mu = 0; mu < db; ++mu) {
                    out(m, n) += rho(m * db + mu, n * db + mu);
                }
            }
        }
        return out;
    }
    CMatrix out = CMatrix::Zero(db, db);
    for (int mu = 0; mu < db; ++mu) {
        for (int nu = 0; nu < db; ++nu) {
            for (int m = 0; m < da; ++m) {
                out(mu, nu) += rho(m * db + mu, m * db + nu);
            }
        }
    }
    return out;
}

} // namespace distkit
