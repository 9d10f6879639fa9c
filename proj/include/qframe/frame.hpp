#pragma once

#include <string>
#include <vector>

#include "qframe/operator_core.hpp"

namespace qframe {

struct OutcomeSet {
    std::vector<std::string> labels;
    std::string geometry;  // optional tag, e.g. "prime-lattice"

    size_t size() const { return labels.size(); }
    bool operator==(const OutcomeSet& other) const { return labels == other.labels; }
};

struct Frame {
    int dim = 0;
    OutcomeSet outcomes;
    std::vector<Matrix> operators;
};

struct DualFrame {
    int dim = 0;
    OutcomeSet outcomes;
    std::vector<Matrix> operators;
};

struct QuasiDistribution {
    std::string representation;
    int dim = 0;
    OutcomeSet outcomes;
    RealVector values;
    // |sum - 1|; nonzero when the frame does not sum to the identity
    double sum_deviation = 0.0;
    bool normalized = true;
};

struct EffectFunction {
    OutcomeSet outcomes;
    RealVector values;
    bool dual_unit_trace = true;
};

struct FrameBounds {
    double a = 0.0;
    double b = 0.0;
};

struct DualityCheck {
    bool ok = false;
    double residual = 0.0;
};

struct Negativity {
    double min_value = 0.0;
    double l1_negativity = 0.0;
};

// Generalized Gell-Mann basis, orthonormal under Tr(AB):
// I/sqrt(d), then for each j<k the symmetric and antisymmetric pair, then the d-1 diagonal elements.
std::vector<Matrix> hermitian_basis(int d);

// Coordinates of each operator in the Hermitian basis: (d*d) x |ops| real matrix.
RealMatrix basis_coordinates(const std::vector<Matrix>& ops, int d);
Matrix from_coordinates(const RealVector& coords, int d);

RealMatrix frame_operator(const Frame& F);
FrameBounds frame_bounds(const Frame& F);
bool is_tight(const Frame& F, double tol = 1e-9);

DualFrame canonical_dual(const Frame& F);
DualFrame gram_dual(const Frame& F);
DualityCheck is_dual_pair(const Frame& F, const DualFrame& D);

QuasiDistribution represent_state(const Matrix& rho, const Frame& F, const std::string& name = "");
EffectFunction represent_effect(const Matrix& E, const DualFrame& D);
double born_pair(const QuasiDistribution& mu, const EffectFunction& xi);
Matrix reconstruct_state(const QuasiDistribution& mu, const DualFrame& D);

// T(l', l) = Tr(D'(l') F(l)); target values are T^T times source values.
RealMatrix transform_matrix(const Frame& source, const DualFrame& source_dual, const Frame& target);
QuasiDistribution apply_transform(const RealMatrix& T, const QuasiDistribution& mu, const Frame& target,
                                  const std::string& name = "");

// Effect represented with the frame itself: xi(l) = Tr(E F(l)).
QuasiDistribution represent_effect_with_frame(const Matrix& E, const Frame& F);
double deformed_born(const QuasiDistribution& mu, const QuasiDistribution& xi_same, const DualFrame& D);

Negativity negativity(const RealVector& values);
Negativity negativity(const QuasiDistribution& mu);

}  // namespace qframe
