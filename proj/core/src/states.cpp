#include "entcast/states.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace entcast {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_labels_distinct(const std::vector<std::string>& labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            raise(Errc::duplicate_label, "label '" + l + "' appears twice");
        }
    }
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
    return labels;
}

}  // namespace

PureState::PureState(std::vector<std::string> labels, ComplexVector amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    const long expected = 1L << labels_.size();
    if (amplitudes_.size() != expected) {
        raise(Errc::dimension_mismatch, "PureState: amplitude count does not match label count");
    }
    check_labels_distinct(labels_);
    if (!all_finite(amplitudes_)) {
        raise(Errc::invalid_argument, "PureState: non-finite amplitude");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kStructuralTol) {
        raise(Errc::not_normalized, "PureState: amplitudes are not unit norm");
    }
}

int PureState::label_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        raise(Errc::unknown_label, "PureState: no label '" + label + "'");
    }
    return static_cast<int>(it - labels_.begin());
}

DensityOperator::DensityOperator(std::vector<std::string> labels, std::vector<int> dims,
                                 ComplexMatrix matrix)
    : labels_(std::move(labels)), dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (labels_.size() != dims_.size()) {
        raise(Errc::dimension_mismatch, "DensityOperator: one label per tensor factor required");
    }
    check_labels_distinct(labels_);
    long dim = 1;
    for (int d : dims_) {
        if (d < 2) raise(Errc::invalid_argument, "DensityOperator: factor dimension < 2");
        dim *= d;
    }
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != dim) {
        raise(Errc::dimension_mismatch, "DensityOperator: matrix size does not match dims");
    }
    if (!all_finite(matrix_)) {
        raise(Errc::invalid_argument, "DensityOperator: non-finite entry");
    }
    if (!is_hermitian(matrix_)) {
        raise(Errc::not_hermitian, "DensityOperator: matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace().real() - 1.0) > kStructuralTol) {
        raise(Errc::not_normalized, "DensityOperator: trace differs from one");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kStructuralTol) {
        raise(Errc::not_positive, "DensityOperator: negative eigenvalue");
    }
}

int DensityOperator::label_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        raise(Errc::unknown_label, "DensityOperator: no label '" + label + "'");
    }
    return static_cast<int>(it - labels_.begin());
}

const std::array<BellKind, 4>& all_bell_kinds() {
    static const std::array<BellKind, 4> kinds = {BellKind::PhiPlus, BellKind::PhiMinus,
                                                  BellKind::PsiPlus, BellKind::PsiMinus};
    return kinds;
}

const char* to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "Phi+";
        case BellKind::PhiMinus: return "Phi-";
        case BellKind::PsiPlus: return "Psi+";
        case BellKind::PsiMinus: return "Psi-";
    }
    return "?";
}

ComplexVector bell_vector(BellKind kind) {
    ComplexVector v = ComplexVector::Zero(4);
    switch (kind) {
        case BellKind::PhiPlus: v(0) = kInvSqrt2; v(3) = kInvSqrt2; break;
        case BellKind::PhiMinus: v(0) = kInvSqrt2; v(3) = -kInvSqrt2; break;
        case BellKind::PsiPlus: v(1) = kInvSqrt2; v(2) = kInvSqrt2; break;
        case BellKind::PsiMinus: v(1) = kInvSqrt2; v(2) = -kInvSqrt2; break;
    }
    return v;
}

std::array<ComplexVector, 4> bell_basis() {
    return {bell_vector(BellKind::PhiPlus), bell_vector(BellKind::PhiMinus),
            bell_vector(BellKind::PsiPlus), bell_vector(BellKind::PsiMinus)};
}

PureState basis_state(int n, const std::string& bits, std::vector<std::string> labels) {
    if (n < 0 || static_cast<int>(bits.size()) != n) {
        raise(Errc::invalid_argument, "basis_state: bit string length must equal qubit count");
    }
    long index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            raise(Errc::invalid_argument, "basis_state: bit string must be binary");
        }
        index = (index << 1) | (c == '1' ? 1 : 0);
    }
    ComplexVector amps = ComplexVector::Zero(1L << n);
    amps(index) = 1.0;
    if (labels.empty()) labels = default_labels(n);
    return PureState(std::move(labels), std::move(amps));
}

PureState bell_state(BellKind kind, std::vector<std::string> labels) {
    return PureState(std::move(labels), bell_vector(kind));
}

PureState initial_pair(Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kStructuralTol) {
        raise(Errc::not_normalized, "initial_pair: |alpha|^2 + |beta|^2 must equal 1");
    }
    ComplexVector amps = ComplexVector::Zero(4);
    amps(0) = alpha;
    amps(3) = beta;
    return PureState({"a1", "b1"}, std::move(amps));
}

PureState tensor(std::span<const PureState> states) {
    if (states.empty()) {
        raise(Errc::invalid_argument, "tensor: at least one state required");
    }
    std::vector<std::string> labels;
    ComplexVector amps = states[0].amplitudes();
    labels = states[0].labels();
    for (size_t i = 1; i < states.size(); ++i) {
        const auto& s = states[i];
        ComplexVector next(amps.size() * s.amplitudes().size());
        for (long a = 0; a < amps.size(); ++a) {
            next.segment(a * s.amplitudes().size(), s.amplitudes().size()) =
                amps(a) * s.amplitudes();
        }
        amps = std::move(next);
        labels.insert(labels.end(), s.labels().begin(), s.labels().end());
    }
    return PureState(std::move(labels), std::move(amps));
}

PureState tensor(std::initializer_list<PureState> states) {
    return tensor(std::span<const PureState>(states.begin(), states.size()));
}

PureState reorder(const PureState& state, const std::vector<std::string>& new_label_order) {
    const int n = state.num_qubits();
    if (static_cast<int>(new_label_order.size()) != n) {
        raise(Errc::bad_permutation, "reorder: label count mismatch");
    }
    std::vector<int> source(n);  // source[k] = old position of the k-th new label
    std::vector<bool> used(n, false);
    for (int k = 0; k < n; ++k) {
        const int old = state.label_index(new_label_order[k]);
        if (used[old]) raise(Errc::bad_permutation, "reorder: repeated label");
        used[old] = true;
        source[k] = old;
    }

    const long dim = state.amplitudes().size();
    ComplexVector out(dim);
    for (long idx = 0; idx < dim; ++idx) {
        long new_idx = 0;
        for (int k = 0; k < n; ++k) {
            const int bit = static_cast<int>((idx >> (n - 1 - source[k])) & 1);
            new_idx |= static_cast<long>(bit) << (n - 1 - k);
        }
        out(new_idx) = state.amplitudes()(idx);
    }
    return PureState(new_label_order, std::move(out));
}

namespace {

// Amplitudes regrouped as a 4 x 2^(n-2) matrix with the measured pair in front.
Eigen::MatrixXcd front_pair_view(const PureState& state, const std::string& l1,
                                 const std::string& l2) {
    if (state.num_qubits() < 2) {
        raise(Errc::dimension_mismatch, "measurement requires at least two qubits");
    }
    if (l1 == l2) raise(Errc::invalid_argument, "measurement labels must differ");
    std::vector<std::string> order = {l1, l2};
    for (const auto& l : state.labels()) {
        if (l != l1 && l != l2) order.push_back(l);
    }
    const PureState fronted = reorder(state, order);
    const long rest = fronted.amplitudes().size() / 4;
    Eigen::MatrixXcd view(4, rest);
    for (int b = 0; b < 4; ++b) {
        view.row(b) = fronted.amplitudes().segment(b * rest, rest).transpose();
    }
    return view;
}

void check_basis(const std::array<ComplexVector, 4>& basis) {
    for (int i = 0; i < 4; ++i) {
        if (basis[i].size() != 4) {
            raise(Errc::dimension_mismatch, "measurement basis vectors must be 4-dimensional");
        }
        for (int j = 0; j < 4; ++j) {
            const Complex g = basis[i].dot(basis[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - expected) > kStructuralTol) {
                raise(Errc::invalid_argument, "measurement basis is not orthonormal");
            }
        }
    }
}

std::vector<std::string> remaining_labels(const PureState& state, const std::string& l1,
                                          const std::string& l2) {
    std::vector<std::string> rest;
    for (const auto& l : state.labels()) {
        if (l != l1 && l != l2) rest.push_back(l);
    }
    return rest;
}

}  // namespace

std::array<double, 4> measurement_probabilities(const PureState& state, const std::string& l1,
                                                const std::string& l2,
                                                const std::array<ComplexVector, 4>& basis) {
    check_basis(basis);
    const Eigen::MatrixXcd view = front_pair_view(state, l1, l2);
    std::array<double, 4> probs{};
    for (int k = 0; k < 4; ++k) {
        probs[k] = (basis[k].adjoint() * view).squaredNorm();
    }
    return probs;
}

MeasurementOutcome measure_in_basis(const PureState& state, const std::string& l1,
                                    const std::string& l2,
                                    const std::array<ComplexVector, 4>& basis, int outcome) {
    if (outcome < 0 || outcome > 3) {
        raise(Errc::invalid_argument, "measure_in_basis: outcome index out of range");
    }
    check_basis(basis);
    const Eigen::MatrixXcd view = front_pair_view(state, l1, l2);
    ComplexVector projected = (basis[outcome].adjoint() * view).transpose();
    const double p = projected.squaredNorm();
    if (p < 1e-14) {
        raise(Errc::zero_probability, "measure_in_basis: requested outcome cannot occur");
    }
    projected /= std::sqrt(p);
    return MeasurementOutcome{p, PureState(remaining_labels(state, l1, l2), std::move(projected))};
}

int sample_outcome(const PureState& state, const std::string& l1, const std::string& l2,
                   const std::array<ComplexVector, 4>& basis, std::mt19937_64& rng) {
    const auto probs = measurement_probabilities(state, l1, l2, basis);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const double u = dist(rng);
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        acc += probs[k];
        if (u <= acc) return k;
    }
    return 3;
}

DensityOperator to_density(const PureState& state) {
    ComplexMatrix m = state.amplitudes() * state.amplitudes().adjoint();
    std::vector<int> dims(state.num_qubits(), 2);
    return DensityOperator(state.labels(), std::move(dims), std::move(m));
}

DensityOperator reduce(const DensityOperator& rho, const std::vector<std::string>& keep_labels) {
    if (keep_labels.empty()) {
        raise(Errc::invalid_argument, "reduce: keep set must be nonempty");
    }
    std::vector<int> keep;
    keep.reserve(keep_labels.size());
    for (const auto& l : keep_labels) keep.push_back(rho.label_index(l));
    std::sort(keep.begin(), keep.end());

    std::vector<std::string> labels;
    std::vector<int> dims;
    for (int f : keep) {
        labels.push_back(rho.labels()[f]);
        dims.push_back(rho.dims()[f]);
    }
    return DensityOperator(std::move(labels), std::move(dims),
                           partial_trace(rho.matrix(), rho.dims(), keep));
}

DensityOperator reduce(const PureState& state, const std::vector<std::string>& keep_labels) {
    if (keep_labels.empty()) {
        raise(Errc::invalid_argument, "reduce: keep set must be nonempty");
    }
    // Trace directly from the amplitudes; building the full projector first
    // would square the state dimension for nothing.
    std::vector<int> keep;
    keep.reserve(keep_labels.size());
    for (const auto& l : keep_labels) keep.push_back(state.label_index(l));
    std::sort(keep.begin(), keep.end());

    std::vector<std::string> order;
    std::vector<std::string> rest;
    for (int f : keep) order.push_back(state.labels()[f]);
    for (const auto& l : state.labels()) {
        if (std::find(order.begin(), order.end(), l) == order.end()) rest.push_back(l);
    }
    std::vector<std::string> kept_labels = order;
    order.insert(order.end(), rest.begin(), rest.end());

    const PureState fronted = reorder(state, order);
    const long kept_dim = 1L << keep.size();
    const long rest_dim = fronted.amplitudes().size() / kept_dim;

    ComplexMatrix rho = ComplexMatrix::Zero(kept_dim, kept_dim);
    for (long r = 0; r < kept_dim; ++r) {
        for (long c = 0; c < kept_dim; ++c) {
            Complex sum = 0;
            for (long t = 0; t < rest_dim; ++t) {
                sum += fronted.amplitudes()(r * rest_dim + t) *
                       std::conj(fronted.amplitudes()(c * rest_dim + t));
            }
            rho(r, c) = sum;
        }
    }
    return DensityOperator(std::move(kept_labels), std::vector<int>(keep.size(), 2),
                           std::move(rho));
}

}  // namespace entcast
