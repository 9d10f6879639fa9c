#include "qframe/operator_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <numeric>
#include <random>

namespace qframe {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_dimension: return "invalid-dimension";
        case ErrorKind::unsupported_dimension: return "unsupported-dimension";
        case ErrorKind::dimension_mismatch: return "dimension-mismatch";
        case ErrorKind::division_by_zero: return "division-by-zero";
        case ErrorKind::singular_basis: return "singular-basis";
        case ErrorKind::not_a_frame: return "not-a-frame";
        case ErrorKind::not_a_basis: return "not-a-basis";
        case ErrorKind::invalid_weight: return "invalid-weight";
        case ErrorKind::invalid_point: return "invalid-point";
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::no_fiducial_found: return "no-fiducial-found";
        case ErrorKind::outcome_mismatch: return "outcome-mismatch";
        case ErrorKind::retry_constellation: return "retry-constellation";
        case ErrorKind::parse_error: return "parse-error";
    }
    return "error";
}

double tau_eq(double norm) { return 1e-9 * std::max(1.0, norm); }

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long inverse_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        long long q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw Error(ErrorKind::division_by_zero, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return mod(x, m);
}

cplx omega_pow(int d, long long m) {
    const double angle = 2.0 * M_PI * static_cast<double>(mod(m, d)) / d;
    return {std::cos(angle), std::sin(angle)};
}

cplx omega_half_pow(int d, long long m) {
    if (d % 2 == 1) return omega_pow(d, mod(m, d) * inverse_mod(2, d));
    const double angle = M_PI * static_cast<double>(mod(m, 2LL * d)) / d;
    return {std::cos(angle), std::sin(angle)};
}

static void check_dim(int d) {
    if (d < 2) throw Error(ErrorKind::invalid_dimension, "d must be >= 2, got " + std::to_string(d));
}

Matrix shift_power(int d, long long a) {
    check_dim(d);
    Matrix M = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) M(mod(k + a, d), k) = 1.0;
    return M;
}

Matrix clock_power(int d, long long b) {
    check_dim(d);
    Matrix M = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) M(k, k) = omega_pow(d, b * k);
    return M;
}

Matrix parity_operator(int d) {
    check_dim(d);
    Matrix M = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) M(mod(-k, d), k) = 1.0;
    return M;
}

PauliFamily make_pauli_family(int d) {
    check_dim(d);
    PauliFamily f;
    f.dim = d;
    f.omega = omega_pow(d, 1);
    f.X = shift_power(d, 1);
    f.Z = clock_power(d, 1);
    f.Y = (f.X * f.Z - f.Z * f.X) / cplx(0.0, 2.0);
    f.parity = parity_operator(d);
    return f;
}

Matrix weyl_operator(long long p, long long q, int d) {
    check_dim(d);
    return omega_half_pow(d, mod(p, d) * mod(q, d)) * shift_power(d, p) * clock_power(d, q);
}

std::vector<SchwingerElement> schwinger_basis(int d) {
    check_dim(d);
    if (d % 2 == 0) throw Error(ErrorKind::unsupported_dimension, "Schwinger basis needs odd d");
    const int l = (d - 1) / 2;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<SchwingerElement> out;
    out.reserve(d * d);
    for (int eta = -l; eta <= l; ++eta) {
        for (int xi = -l; xi <= l; ++xi) {
            Matrix op = norm * omega_half_pow(d, static_cast<long long>(eta) * xi) * shift_power(d, eta) * clock_power(d, xi);
            out.push_back({eta, xi, std::move(op)});
        }
    }
    return out;
}

Matrix finite_fourier(int d) {
    check_dim(d);
    Matrix F(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k)
        for (int kp = 0; kp < d; ++kp) F(k, kp) = norm * omega_pow(d, static_cast<long long>(k) * kp);
    return F;
}

double trace_inner_product(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols() || A.rows() != A.cols())
        throw Error(ErrorKind::dimension_mismatch, "trace_inner_product operands differ in shape");
    // Tr(AB) = sum_ij A_ij B_ji
    return (A.cwiseProduct(B.transpose())).sum().real();
}

Matrix tensor(const Matrix& A, const Matrix& B) {
    Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

Matrix tensor_all(const std::vector<Matrix>& factors) {
    if (factors.empty()) return Matrix::Identity(1, 1);
    Matrix out = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
    return out;
}

namespace {

int product_of(const std::vector<int>& dims) {
    return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

void check_composite(const Matrix& rho, int subsystem, const std::vector<int>& dims) {
    if (dims.empty() || subsystem < 0 || subsystem >= static_cast<int>(dims.size()))
        throw Error(ErrorKind::dimension_mismatch, "subsystem index out of range");
    if (rho.rows() != rho.cols() || rho.rows() != product_of(dims))
        throw Error(ErrorKind::dimension_mismatch, "dims do not multiply to the operator dimension");
}

// stride of subsystem k in a row-major multi-index
int stride_of(const std::vector<int>& dims, int k) {
    int s = 1;
    for (size_t i = k + 1; i < dims.size(); ++i) s *= dims[i];
    return s;
}

}  // namespace

Matrix partial_transpose(const Matrix& rho, int subsystem, const std::vector<int>& dims) {
    check_composite(rho, subsystem, dims);
    const int n = static_cast<int>(rho.rows());
    const int dk = dims[subsystem];
    const int s = stride_of(dims, subsystem);
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) {
        const int di = (i / s) % dk;
        for (int j = 0; j < n; ++j) {
            const int dj = (j / s) % dk;
            out(i + (dj - di) * s, j + (di - dj) * s) = rho(i, j);
        }
    }
    return out;
}

Matrix partial_trace(const Matrix& rho, int subsystem, const std::vector<int>& dims) {
    check_composite(rho, subsystem, dims);
    const int n = static_cast<int>(rho.rows());
    const int dk = dims[subsystem];
    const int s = stride_of(dims, subsystem);
    const int m = n / dk;
    Matrix out = Matrix::Zero(m, m);
    // reduced index r -> full index with subsystem digit zero
    auto expand = [&](int r) { return (r / s) * s * dk + (r % s); };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const int ia = expand(a), ib = expand(b);
            cplx acc = 0.0;
            for (int t = 0; t < dk; ++t) acc += rho(ia + t * s, ib + t * s);
            out(a, b) = acc;
        }
    return out;
}

bool is_hermitian(const Matrix& A) {
    if (A.rows() != A.cols()) return false;
    return (A - A.adjoint()).norm() <= tau_eq(A.norm());
}

bool is_density(const Matrix& A) {
    if (!is_hermitian(A)) return false;
    const double tol = tau_eq(A.norm());
    if (std::abs(A.trace() - cplx(1.0)) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(A, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

bool is_effect(const Matrix& A) {
    if (!is_hermitian(A)) return false;
    const double tol = tau_eq(A.norm());
    Eigen::SelfAdjointEigenSolver<Matrix> es(A, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol && es.eigenvalues().maxCoeff() <= 1.0 + tol;
}

bool is_povm(const std::vector<Matrix>& effects) {
    if (effects.empty()) return false;
    Matrix sum = Matrix::Zero(effects.front().rows(), effects.front().cols());
    for (const auto& E : effects) {
        if (E.rows() != sum.rows() || !is_effect(E)) return false;
        sum += E;
    }
    const Matrix I = Matrix::Identity(sum.rows(), sum.cols());
    return (sum - I).norm() <= tau_eq(I.norm());
}

Vector phase_fixed(const Vector& v) {
    const double cutoff = 1e-10 * std::max(1.0, v.norm());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > cutoff) return v * (std::abs(v(i)) / v(i));
    }
    return v;
}

std::pair<RealVector, Matrix> eigh_sorted(const Matrix& H) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    Matrix vecs = es.eigenvectors();
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) vecs.col(c) = phase_fixed(vecs.col(c));
    return {es.eigenvalues(), vecs};
}

namespace {

Vector gaussian_vector(std::mt19937_64& gen, int n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) {
        const double re = normal(gen);
        const double im = normal(gen);
        v(i) = cplx(re, im);
    }
    return v;
}

Matrix haar_unitary(std::mt19937_64& gen, int d) {
    Matrix G(d, d);
    for (int c = 0; c < d; ++c) G.col(c) = gaussian_vector(gen, d);
    Eigen::HouseholderQR<Matrix> qr(G);
    Matrix Q = qr.householderQ();
    Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < d; ++c) {
        const cplx r = R(c, c);
        if (std::abs(r) > 0) Q.col(c) *= r / std::abs(r);
    }
    return Q;
}

}  // namespace

Vector random_pure_vector(int d, std::uint64_t seed) {
    check_dim(d);
    std::mt19937_64 gen(seed);
    Vector v = gaussian_vector(gen, d);
    return v / v.norm();
}

Matrix random_state(int d, int rank, std::uint64_t seed) {
    check_dim(d);
    if (rank < 1 || rank > d) throw Error(ErrorKind::invalid_input, "rank must lie in [1, d]");
    std::mt19937_64 gen(seed);
    Vector psi = gaussian_vector(gen, d * rank);
    psi /= psi.norm();
    Matrix rho = partial_trace(psi * psi.adjoint(), 1, {d, rank});
    return (rho + rho.adjoint()) / 2.0;
}

Matrix random_effect(int d, std::uint64_t seed) {
    check_dim(d);
    std::mt19937_64 gen(seed);
    Matrix U = haar_unitary(gen, d);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RealVector lam(d);
    for (int i = 0; i < d; ++i) lam(i) = unit(gen);
    Matrix E = U * lam.cast<cplx>().asDiagonal() * U.adjoint();
    return (E + E.adjoint()) / 2.0;
}

Matrix random_projector(int d, int rank, std::uint64_t seed) {
    check_dim(d);
    if (rank < 0 || rank > d) throw Error(ErrorKind::invalid_input, "rank must lie in [0, d]");
    std::mt19937_64 gen(seed);
    Matrix U = haar_unitary(gen, d);
    Matrix V = U.leftCols(rank);
    Matrix P = V * V.adjoint();
    return (P + P.adjoint()) / 2.0;
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

Matrix sigma_x() {
    Matrix M(2, 2);
    M << 0.0, 1.0, 1.0, 0.0;
    return M;
}

Matrix sigma_y() {
    Matrix M(2, 2);
    M << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
    return M;
}

Matrix sigma_z() {
    Matrix M(2, 2);
    M << 1.0, 0.0, 0.0, -1.0;
    return M;
}

Matrix bloch_state(double x, double y, double z) {
    return (Matrix::Identity(2, 2) + x * sigma_x() + y * sigma_y() + z * sigma_z()) / 2.0;
}

std::vector<Matrix> qubit_stabilizer_states() {
    const auto f = make_pauli_family(2);
    const Matrix I = Matrix::Identity(2, 2);
    return {(I + f.Z) / 2.0, (I - f.Z) / 2.0, (I + f.X) / 2.0,
            (I - f.X) / 2.0, (I + f.Y) / 2.0, (I - f.Y) / 2.0};
}

}  // namespace qframe
