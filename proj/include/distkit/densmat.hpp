#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "distkit/errors.hpp"

namespace distkit {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Default tolerance for hermiticity / trace / positivity validation.
inline constexpr double kDefaultTol = 1e-9;

// Largest composite dimension any operation is allowed to materialize.
inline constexpr std::size_t kDefaultDimCap = 1024;

// Below this outcome probability a probabilistic local operation is treated
// as having annihilated the state.
inline constexpr double kNullOutcomeThreshold = 1e-12;

bool all_finite(const CMatrix& m);

// Kronecker product, entry (i*rb+k, j*cb+l) = a(i,j) * b(k,l).
// Throws CapacityError if an output dimension would exceed dim_cap.
CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t dim_cap = kDefaultDimCap);

// Density matrix on H_A (x) H_B with the composite index convention
// |e_m (x) f_mu|  ->  m * dim_b + mu.
//
// Construction validates hermiticity, unit trace and positive
// semidefiniteness at the given tolerance and rejects non-finite entries.
class BipartiteState {
public:
    BipartiteState(int dim_a, int dim_b, CMatrix rho, double tol = kDefaultTol);

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return dim_a_ * dim_b_; }
    const CMatrix& rho() const { return rho_; }

private:
    int dim_a_;
    int dim_b_;
    CMatrix rho_;
};

// Partial transposition on subsystem B:
//   out(m*dB+mu, n*dB+nu) = rho(m*dB+nu, n*dB+mu).
// Hermiticity and trace are preserved; positivity generally is not.
CMatrix partial_transpose(const CMatrix& rho, int dim_a, int dim_b);
CMatrix partial_transpose(const BipartiteState& s);

// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrized as
// (m + m^dagger)/2 before solving; inputs farther than tol from Hermitian are
// rejected.
std::vector<double> eigvals_hermitian(const CMatrix& m, double tol = kDefaultTol);

enum class Subsystem { A, B };

CMatrix partial_trace(const BipartiteState& s, Subsystem keep);

} // namespace distkit
