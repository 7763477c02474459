#include "entcast/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entcast {

namespace {

ComplexMatrix make_pauli(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

// Factor strides for a big-endian dims list: stride of factor f is the product
// of the dimensions to its right.
std::vector<long> strides_of(const std::vector<int>& dims) {
    std::vector<long> st(dims.size(), 1);
    for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f) {
        st[f] = st[f + 1] * dims[f + 1];
    }
    return st;
}

long total_dim(const std::vector<int>& dims) {
    long n = 1;
    for (int d : dims) n *= d;
    return n;
}

}  // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = make_pauli(0, 1, 1, 0);
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = make_pauli(0, Complex(0, -1), Complex(0, 1), 0);
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = make_pauli(1, 0, 0, -1);
    return m;
}

const ComplexMatrix& identity2() {
    static const ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
    const long dim = total_dim(dims);
    if (rho.rows() != rho.cols() || rho.rows() != dim) {
        raise(Errc::dimension_mismatch, "partial_trace: dims do not match matrix size");
    }
    if (keep.empty()) {
        raise(Errc::invalid_argument, "partial_trace: keep set must be nonempty");
    }
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        raise(Errc::invalid_argument, "partial_trace: repeated factor index in keep");
    }
    for (int f : kept) {
        if (f < 0 || f >= static_cast<int>(dims.size())) {
            raise(Errc::invalid_argument, "partial_trace: keep index out of range");
        }
    }

    std::vector<int> traced;
    for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
        if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);
    }

    const auto st = strides_of(dims);
    long kept_dim = 1;
    for (int f : kept) kept_dim *= dims[f];
    long traced_dim = 1;
    for (int f : traced) traced_dim *= dims[f];

    // Offset of a composite index within the full matrix, for a given factor subset.
    auto offset = [&](const std::vector<int>& factors, long multi) {
        long off = 0;
        for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
            const int f = factors[i];
            off += (multi % dims[f]) * st[f];
            multi /= dims[f];
        }
        return off;
    };

    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    for (long r = 0; r < kept_dim; ++r) {
        const long row_base = offset(kept, r);
        for (long c = 0; c < kept_dim; ++c) {
            const long col_base = offset(kept, c);
            Complex sum = 0;
            for (long t = 0; t < traced_dim; ++t) {
                const long toff = offset(traced, t);
                sum += rho(row_base + toff, col_base + toff);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const std::vector<int>& dims, int on) {
    if (dims.size() != 2) {
        raise(Errc::invalid_argument, "partial_transpose: exactly two factors required");
    }
    const long d0 = dims[0];
    const long d1 = dims[1];
    if (rho.rows() != rho.cols() || rho.rows() != d0 * d1) {
        raise(Errc::dimension_mismatch, "partial_transpose: dims do not match matrix size");
    }
    if (on != 0 && on != 1) {
        raise(Errc::invalid_argument, "partial_transpose: factor index must be 0 or 1");
    }

    ComplexMatrix out(d0 * d1, d0 * d1);
    for (long r0 = 0; r0 < d0; ++r0) {
        for (long r1 = 0; r1 < d1; ++r1) {
            for (long c0 = 0; c0 < d0; ++c0) {
                for (long c1 = 0; c1 < d1; ++c1) {
                    const long row = r0 * d1 + r1;
                    const long col = c0 * d1 + c1;
                    const long src_row = (on == 0 ? c0 : r0) * d1 + (on == 1 ? c1 : r1);
                    const long src_col = (on == 0 ? r0 : c0) * d1 + (on == 1 ? r1 : c1);
                    out(row, col) = rho(src_row, src_col);
                }
            }
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!is_hermitian(m)) {
        raise(Errc::not_hermitian, "hermitian_eigenvalues: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double pure_fidelity(const ComplexMatrix& rho, const ComplexVector& psi) {
    if (rho.rows() != rho.cols() || rho.rows() != psi.size()) {
        raise(Errc::dimension_mismatch, "pure_fidelity: state and operator dimensions differ");
    }
    const Complex val = (psi.adjoint() * rho * psi).value();
    return val.real();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
        }
    }
    return true;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        raise(Errc::dimension_mismatch, "max_abs_diff: shapes differ");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff_up_to_phase(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) {
        raise(Errc::dimension_mismatch, "max_abs_diff_up_to_phase: sizes differ");
    }
    Eigen::Index anchor = 0;
    a.cwiseAbs().maxCoeff(&anchor);
    if (std::abs(a(anchor)) < 1e-14 || std::abs(b(anchor)) < 1e-14) {
        return (a - b).cwiseAbs().maxCoeff();
    }
    Complex phase = a(anchor) / b(anchor);
    phase /= std::abs(phase);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace entcast
