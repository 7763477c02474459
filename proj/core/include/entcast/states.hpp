#pragma once

#include <array>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "entcast/linalg.hpp"

namespace entcast {

/// Unit-norm amplitude vector over labeled qubits. Big-endian: the first label
/// owns the most significant bit of the amplitude index.
class PureState {
public:
    PureState(std::vector<std::string> labels, ComplexVector amplitudes);

    int num_qubits() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const ComplexVector& amplitudes() const { return amplitudes_; }

    /// Position of a label; raises unknown_label if absent.
    int label_index(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    ComplexVector amplitudes_;
};

/// Hermitian, PSD, trace-1 operator over labeled tensor factors.
class DensityOperator {
public:
    DensityOperator(std::vector<std::string> labels, std::vector<int> dims, ComplexMatrix matrix);

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return matrix_; }

    int label_index(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::vector<int> dims_;
    ComplexMatrix matrix_;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

const std::array<BellKind, 4>& all_bell_kinds();
const char* to_string(BellKind kind);

/// Amplitudes of a Bell state in the fixed phase convention
/// Phi± = (|00> ± |11>)/sqrt(2), Psi± = (|01> ± |10>)/sqrt(2).
ComplexVector bell_vector(BellKind kind);

/// The four Bell vectors ordered as all_bell_kinds().
std::array<ComplexVector, 4> bell_basis();

/// Computational basis state from a bit string, e.g. ("010001").
PureState basis_state(int n, const std::string& bits, std::vector<std::string> labels = {});

PureState bell_state(BellKind kind, std::vector<std::string> labels = {"q0", "q1"});

/// alpha|00> + beta|11> on labels (a1, b1). Rejects non-normalized input.
PureState initial_pair(Complex alpha, Complex beta);

/// Tensor product; labels concatenate in order and must be disjoint.
PureState tensor(std::span<const PureState> states);
PureState tensor(std::initializer_list<PureState> states);

/// Permute qubits to a new label order.
PureState reorder(const PureState& state, const std::vector<std::string>& new_label_order);

struct MeasurementOutcome {
    double probability;
    PureState post_state;  // normalized remainder on the unmeasured labels
};

/// Probabilities of the four outcomes of a two-qubit orthonormal-basis
/// measurement on the named pair.
std::array<double, 4> measurement_probabilities(const PureState& state, const std::string& l1,
                                                const std::string& l2,
                                                const std::array<ComplexVector, 4>& basis);

/// Project onto basis element `outcome` of the measured pair. Raises
/// zero_probability if that outcome cannot occur.
MeasurementOutcome measure_in_basis(const PureState& state, const std::string& l1,
                                    const std::string& l2,
                                    const std::array<ComplexVector, 4>& basis, int outcome);

/// Sample an outcome index from the measurement distribution.
int sample_outcome(const PureState& state, const std::string& l1, const std::string& l2,
                   const std::array<ComplexVector, 4>& basis, std::mt19937_64& rng);

DensityOperator to_density(const PureState& state);

/// Partial trace keeping the named labels (in their original order).
DensityOperator reduce(const DensityOperator& rho, const std::vector<std::string>& keep_labels);
DensityOperator reduce(const PureState& state, const std::vector<std::string>& keep_labels);

}  // namespace entcast
