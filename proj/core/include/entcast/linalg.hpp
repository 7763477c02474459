#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "entcast/errors.hpp"

namespace entcast {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Tolerance for structural checks (Hermiticity, trace, normalization).
inline constexpr double kStructuralTol = 1e-10;
/// Tolerance for entrywise matrix equality assertions.
inline constexpr double kEntryTol = 1e-10;

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

/// Kronecker product, row-major tensor convention: the left factor carries the
/// high-order indices.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out every tensor factor not listed in `keep`. `dims` are the factor
/// dimensions in big-endian order; kept factors stay in their original order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

/// Transpose the indices of one factor of a two-factor operator.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const std::vector<int>& dims, int on);

/// Ascending eigenvalues of a Hermitian matrix. Raises if the input is not
/// Hermitian within kStructuralTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& m);

/// <psi|rho|psi> as a real number. psi must be unit norm and match rho's dimension.
double pure_fidelity(const ComplexMatrix& rho, const ComplexVector& psi);

bool is_hermitian(const ComplexMatrix& m, double tol = kStructuralTol);
bool all_finite(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise distance after aligning b's global phase to a at a's
/// largest-magnitude entry.
double max_abs_diff_up_to_phase(const ComplexVector& a, const ComplexVector& b);

}  // namespace entcast
