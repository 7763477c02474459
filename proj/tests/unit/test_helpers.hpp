#pragma once

#include <random>

#include "entcast/linalg.hpp"
#include "entcast/states.hpp"

namespace entcast::testing {

/// Random unit vector of the given dimension.
inline ComplexVector random_state_vector(long dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(dim);
    for (long i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return v;
}

/// Random density matrix (Ginibre construction: G G^dag normalized).
inline ComplexMatrix random_density_matrix(long dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (long j = 0; j < dim; ++j) {
        for (long i = 0; i < dim; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
    }
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline ComplexMatrix random_matrix(long rows, long cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (long j = 0; j < cols; ++j) {
        for (long i = 0; i < rows; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return m;
}

/// Independent partial-trace oracle for qubit systems, written directly on bit
/// masks rather than the library's factor/stride machinery.
inline ComplexMatrix qubit_partial_trace_oracle(const ComplexMatrix& rho, int n_qubits,
                                                const std::vector<int>& keep) {
    const int n_keep = static_cast<int>(keep.size());
    const long kept_dim = 1L << n_keep;
    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q) {
        bool is_kept = false;
        for (int k : keep) is_kept |= (k == q);
        if (!is_kept) traced.push_back(q);
    }
    const long traced_dim = 1L << traced.size();

    // Bit position of qubit q in a big-endian index.
    auto bitpos = [n_qubits](int q) { return n_qubits - 1 - q; };

    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    for (long r = 0; r < kept_dim; ++r) {
        for (long c = 0; c < kept_dim; ++c) {
            Complex sum = 0;
            for (long t = 0; t < traced_dim; ++t) {
                long row = 0;
                long col = 0;
                for (int i = 0; i < n_keep; ++i) {
                    const long bit_r = (r >> (n_keep - 1 - i)) & 1;
                    const long bit_c = (c >> (n_keep - 1 - i)) & 1;
                    row |= bit_r << bitpos(keep[i]);
                    col |= bit_c << bitpos(keep[i]);
                }
                for (size_t i = 0; i < traced.size(); ++i) {
                    const long bit = (t >> (traced.size() - 1 - i)) & 1;
                    row |= bit << bitpos(traced[i]);
                    col |= bit << bitpos(traced[i]);
                }
                sum += rho(row, col);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

}  // namespace entcast::testing
