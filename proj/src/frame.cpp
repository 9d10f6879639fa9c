#include "qframe/frame.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <limits>

namespace qframe {

std::vector<Matrix> hermitian_basis(int d) {
    std::vector<Matrix> out;
    out.reserve(d * d);
    out.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    const double r2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix S = Matrix::Zero(d, d), A = Matrix::Zero(d, d);
            S(j, k) = S(k, j) = r2;
            A(j, k) = cplx(0.0, -r2);
            A(k, j) = cplx(0.0, r2);
            out.push_back(S);
            out.push_back(A);
        }
    for (int l = 1; l < d; ++l) {
        Matrix D = Matrix::Zero(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) D(j, j) = norm;
        D(l, l) = -l * norm;
        out.push_back(D);
    }
    return out;
}

namespace {

void coordinates_into(const Matrix& F, int d, double* out) {
    const double r2 = std::sqrt(2.0);
    int idx = 0;
    out[idx++] = F.trace().real() / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            // Hermitian part only; Tr(B F) for B Hermitian
            const cplx fjk = F(j, k), fkj = F(k, j);
            out[idx++] = ((fjk + fkj) / r2).real();
            out[idx++] = (cplx(0.0, 1.0) * (fjk - fkj) / r2).real();
        }
    double partial = 0.0;
    for (int l = 1; l < d; ++l) {
        partial += F(l - 1, l - 1).real();
        out[idx++] = (partial - l * F(l, l).real()) / std::sqrt(static_cast<double>(l) * (l + 1));
    }
}

void check_square(const Matrix& A, int d) {
    if (A.rows() != d || A.cols() != d) throw Error(ErrorKind::dimension_mismatch, "operator dimension differs from frame dimension");
}

}  // namespace

RealMatrix basis_coordinates(const std::vector<Matrix>& ops, int d) {
    RealMatrix V(d * d, static_cast<Eigen::Index>(ops.size()));
    for (size_t c = 0; c < ops.size(); ++c) {
        check_square(ops[c], d);
        coordinates_into(ops[c], d, V.col(c).data());
    }
    return V;
}

Matrix from_coordinates(const RealVector& coords, int d) {
    Matrix A = Matrix::Zero(d, d);
    const double r2 = 1.0 / std::sqrt(2.0);
    int idx = 0;
    const double c0 = coords(idx++) / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) A(j, j) = c0;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            const double s = coords(idx++), a = coords(idx++);
            A(j, k) += cplx(s * r2, -a * r2);
            A(k, j) += cplx(s * r2, a * r2);
        }
    for (int l = 1; l < d; ++l) {
        const double c = coords(idx++) / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) A(j, j) += c;
        A(l, l) -= l * c;
    }
    return A;
}

RealMatrix frame_operator(const Frame& F) {
    const RealMatrix V = basis_coordinates(F.operators, F.dim);
    return V * V.transpose();
}

FrameBounds frame_bounds(const Frame& F) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(frame_operator(F), Eigen::EigenvaluesOnly);
    FrameBounds fb{es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
    if (fb.a <= tau_eq()) throw Error(ErrorKind::not_a_frame, "lower frame bound is not positive");
    return fb;
}

bool is_tight(const Frame& F, double tol) {
    const auto fb = frame_bounds(F);
    return fb.b - fb.a <= tol * std::max(1.0, fb.b);
}

DualFrame canonical_dual(const Frame& F) {
    const int d = F.dim;
    const RealMatrix V = basis_coordinates(F.operators, d);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(V * V.transpose());
    const RealVector& lam = es.eigenvalues();
    const double cutoff = 1e-10 * std::max(lam.maxCoeff(), 0.0);
    if (lam.minCoeff() <= cutoff) throw Error(ErrorKind::not_a_frame, "frame operator is rank deficient");
    const RealMatrix Sinv = es.eigenvectors() * lam.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
    const RealMatrix W = Sinv * V;
    DualFrame D{d, F.outcomes, {}};
    D.operators.reserve(F.operators.size());
    for (Eigen::Index c = 0; c < W.cols(); ++c) D.operators.push_back(from_coordinates(W.col(c), d));
    return D;
}

DualFrame gram_dual(const Frame& F) {
    const int d = F.dim;
    const size_t n = F.operators.size();
    if (n != static_cast<size_t>(d * d)) throw Error(ErrorKind::not_a_basis, "Gram dual needs exactly d^2 operators");
    const RealMatrix V = basis_coordinates(F.operators, d);
    const RealMatrix G = V.transpose() * V;  // G(nu, mu) = Tr(F_nu F_mu)
    Eigen::FullPivLU<RealMatrix> lu(G);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) throw Error(ErrorKind::not_a_basis, "Gram matrix is singular");
    const RealMatrix Ginv = lu.inverse();
    DualFrame D{d, F.outcomes, {}};
    for (size_t mu = 0; mu < n; ++mu) {
        Matrix acc = Matrix::Zero(d, d);
        for (size_t nu = 0; nu < n; ++nu) acc += Ginv(nu, mu) * F.operators[nu];
        D.operators.push_back(acc);
    }
    return D;
}

DualityCheck is_dual_pair(const Frame& F, const DualFrame& D) {
    DualityCheck out;
    if (!(F.outcomes == D.outcomes) || F.dim != D.dim || F.operators.size() != D.operators.size()) {
        out.ok = false;
        out.residual = std::numeric_limits<double>::infinity();
        return out;
    }
    const int d = F.dim;
    const RealMatrix VF = basis_coordinates(F.operators, d);
    const RealMatrix VD = basis_coordinates(D.operators, d);
    // column i of VD * VF^T holds the coordinates of sum_l Tr(F(l) B_i) D(l)
    const RealMatrix R = VD * VF.transpose() - RealMatrix::Identity(d * d, d * d);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < R.cols(); ++i) worst = std::max(worst, R.col(i).norm());
    out.residual = worst;
    out.ok = worst <= tau_eq();
    return out;
}

QuasiDistribution represent_state(const Matrix& rho, const Frame& F, const std::string& name) {
    check_square(rho, F.dim);
    QuasiDistribution mu;
    mu.representation = name;
    mu.dim = F.dim;
    mu.outcomes = F.outcomes;
    mu.values.resize(static_cast<Eigen::Index>(F.operators.size()));
    Matrix total = Matrix::Zero(F.dim, F.dim);
    for (size_t l = 0; l < F.operators.size(); ++l) {
        mu.values(l) = trace_inner_product(rho, F.operators[l]);
        total += F.operators[l];
    }
    mu.normalized = (total - Matrix::Identity(F.dim, F.dim)).norm() <= tau_eq(std::sqrt(static_cast<double>(F.dim)));
    mu.sum_deviation = std::abs(mu.values.sum() - 1.0);
    return mu;
}

EffectFunction represent_effect(const Matrix& E, const DualFrame& D) {
    check_square(E, D.dim);
    EffectFunction xi;
    xi.outcomes = D.outcomes;
    xi.values.resize(static_cast<Eigen::Index>(D.operators.size()));
    for (size_t l = 0; l < D.operators.size(); ++l) {
        xi.values(l) = trace_inner_product(E, D.operators[l]);
        if (std::abs(D.operators[l].trace().real() - 1.0) > tau_eq()) xi.dual_unit_trace = false;
    }
    return xi;
}

double born_pair(const QuasiDistribution& mu, const EffectFunction& xi) {
    if (!(mu.outcomes == xi.outcomes) || mu.values.size() != xi.values.size())
        throw Error(ErrorKind::outcome_mismatch, "distribution and effect function use different outcome sets");
    return mu.values.dot(xi.values);
}

Matrix reconstruct_state(const QuasiDistribution& mu, const DualFrame& D) {
    if (!(mu.outcomes == D.outcomes) || mu.values.size() != static_cast<Eigen::Index>(D.operators.size()))
        throw Error(ErrorKind::outcome_mismatch, "distribution and dual frame use different outcome sets");
    Matrix rho = Matrix::Zero(D.dim, D.dim);
    for (size_t l = 0; l < D.operators.size(); ++l) rho += mu.values(l) * D.operators[l];
    return rho;
}

RealMatrix transform_matrix(const Frame& source, const DualFrame& source_dual, const Frame& target) {
    if (source.dim != target.dim || source_dual.dim != source.dim)
        throw Error(ErrorKind::dimension_mismatch, "transform between different Hilbert dimensions");
    const RealMatrix VD = basis_coordinates(source_dual.operators, source.dim);
    const RealMatrix VT = basis_coordinates(target.operators, target.dim);
    return VD.transpose() * VT;
}

QuasiDistribution apply_transform(const RealMatrix& T, const QuasiDistribution& mu, const Frame& target,
                                  const std::string& name) {
    if (T.rows() != mu.values.size() || T.cols() != static_cast<Eigen::Index>(target.operators.size()))
        throw Error(ErrorKind::dimension_mismatch, "transform matrix shape does not match");
    QuasiDistribution out;
    out.representation = name;
    out.dim = target.dim;
    out.outcomes = target.outcomes;
    out.values = T.transpose() * mu.values;
    out.sum_deviation = std::abs(out.values.sum() - 1.0);
    Matrix total = Matrix::Zero(target.dim, target.dim);
    for (const auto& op : target.operators) total += op;
    out.normalized = (total - Matrix::Identity(target.dim, target.dim)).norm() <= tau_eq(std::sqrt(static_cast<double>(target.dim)));
    return out;
}

QuasiDistribution represent_effect_with_frame(const Matrix& E, const Frame& F) {
    QuasiDistribution xi = represent_state(E, F, "");
    xi.sum_deviation = 0.0;
    return xi;
}

double deformed_born(const QuasiDistribution& mu, const QuasiDistribution& xi_same, const DualFrame& D) {
    if (!(mu.outcomes == D.outcomes) || !(xi_same.outcomes == D.outcomes))
        throw Error(ErrorKind::outcome_mismatch, "deformed pairing needs a shared outcome set");
    const RealMatrix VD = basis_coordinates(D.operators, D.dim);
    const RealMatrix overlaps = VD.transpose() * VD;  // Tr(D(l) D(l'))
    return mu.values.dot(overlaps * xi_same.values);
}

Negativity negativity(const RealVector& values) {
    Negativity n;
    n.min_value = values.size() ? values.minCoeff() : 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (values(i) < 0) n.l1_negativity -= values(i);
    return n;
}

Negativity negativity(const QuasiDistribution& mu) { return negativity(mu.values); }

}  // namespace qframe
