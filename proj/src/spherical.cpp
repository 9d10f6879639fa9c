#include "qframe/representations.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <random>

namespace qframe {

namespace {

int twice(double j) {
    const double t = 2.0 * j;
    const long r = std::lround(t);
    if (std::abs(t - r) > 1e-9) throw Error(ErrorKind::invalid_input, "angular momentum must be a multiple of 1/2");
    return static_cast<int>(r);
}

double log_fact(int twice_n) {
    // argument given doubled; must be even and nonnegative
    return std::lgamma(twice_n / 2 + 1.0);
}

int spin_dim(double s) {
    const int ts = twice(s);
    if (ts < 1) throw Error(ErrorKind::invalid_dimension, "spin must be at least 1/2");
    return ts + 1;
}

void check_unit(const std::array<double, 3>& n) {
    const double r = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (!std::isfinite(r) || std::abs(r - 1.0) > 1e-9) throw Error(ErrorKind::invalid_point, "direction is not a unit vector");
}

// per-m eigenvalue weights w_m of the kernel, m = s..-s
std::vector<double> kernel_weights(double s, const std::vector<double>& weights) {
    const int ts = twice(s);
    if (static_cast<int>(weights.size()) != ts + 1) throw Error(ErrorKind::invalid_weight, "need one weight per l = 0..2s");
    if (std::abs(weights[0] - 1.0) > 1e-12) throw Error(ErrorKind::invalid_weight, "weight for l = 0 must be 1");
    for (double w : weights)
        if (w == 0.0 || !std::isfinite(w)) throw Error(ErrorKind::invalid_weight, "weights must be finite and nonzero");
    std::vector<double> out;
    for (int k = 0; k <= ts; ++k) {
        const double m = s - k;
        double acc = 0.0;
        for (int l = 0; l <= ts; ++l)
            acc += weights[l] * (2.0 * l + 1.0) / (ts + 1.0) * clebsch_gordan(s, m, l, 0.0, s, m);
        out.push_back(acc);
    }
    return out;
}

Matrix spin_along(const SpinMatrices& S, const std::array<double, 3>& n) {
    return n[0] * S.Sx + n[1] * S.Sy + n[2] * S.Sz;
}

std::vector<Matrix> kernels_at(double s, const std::vector<double>& weights, const std::vector<std::array<double, 3>>& pts) {
    std::vector<Matrix> out;
    for (const auto& n : pts) out.push_back(stratonovich_kernel(s, weights, n));
    return out;
}

std::array<double, 3> gaussian_direction(std::mt19937_64& rng) {
    std::normal_distribution<double> N(0.0, 1.0);
    for (;;) {
        std::array<double, 3> v{N(rng), N(rng), N(rng)};
        const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (r > 1e-12) return {v[0] / r, v[1] / r, v[2] / r};
    }
}

constexpr double kConditionCutoff = 1e8;

}  // namespace

double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M) {
    const int a = twice(j1), am = twice(m1), b = twice(j2), bm = twice(m2), c = twice(J), cm = twice(M);
    if (am + bm != cm) return 0.0;
    if (std::abs(am) > a || std::abs(bm) > b || std::abs(cm) > c) return 0.0;
    if ((a + am) % 2 || (b + bm) % 2 || (c + cm) % 2) return 0.0;
    if (c < std::abs(a - b) || c > a + b || (a + b + c) % 2) return 0.0;
    const double pre = 0.5 * (std::log(c + 1.0) + log_fact(c + a - b) + log_fact(c - a + b) + log_fact(a + b - c) -
                              log_fact(a + b + c + 2)) +
                       0.5 * (log_fact(c + cm) + log_fact(c - cm) + log_fact(a - am) + log_fact(a + am) + log_fact(b - bm) +
                              log_fact(b + bm));
    double sum = 0.0;
    for (int k = 0;; k += 2) {
        const int t1 = a + b - c - k, t2 = a - am - k, t3 = b + bm - k;
        const int t4 = c - b + am + k, t5 = c - a - bm + k;
        if (t1 < 0 || t2 < 0 || t3 < 0) break;
        if (t4 < 0 || t5 < 0) continue;
        const double term = std::exp(pre - log_fact(k) - log_fact(t1) - log_fact(t2) - log_fact(t3) - log_fact(t4) - log_fact(t5));
        sum += ((k / 2) % 2 ? -term : term);
    }
    return sum;
}

SpinMatrices spin_matrices(double s) {
    const int d = spin_dim(s);
    Matrix Sz = Matrix::Zero(d, d), Sp = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const double m = s - k;
        Sz(k, k) = m;
        if (k > 0) Sp(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
    const Matrix Sm = Sp.adjoint();
    return {(Sp + Sm) / 2.0, (Sp - Sm) / cplx(0.0, 2.0), Sz};
}

Matrix stratonovich_kernel(double s, const std::vector<double>& weights, const std::array<double, 3>& n) {
    check_unit(n);
    const auto w = kernel_weights(s, weights);
    const SpinMatrices S = spin_matrices(s);
    const int d = static_cast<int>(w.size());
    auto [ev, V] = eigh_sorted(spin_along(S, n));
    Matrix out = Matrix::Zero(d, d);
    // ascending eigenvalues: column i has m = -s + i, weight index k = s - m = 2s - i
    for (int i = 0; i < d; ++i) out += w[d - 1 - i] * projector(V.col(i));
    return out;
}

std::vector<double> inverse_weights(const std::vector<double>& weights) {
    std::vector<double> out;
    for (double w : weights) {
        if (w == 0.0) throw Error(ErrorKind::invalid_weight, "zero weight has no inverse");
        out.push_back(1.0 / w);
    }
    return out;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
    if (order < 1) throw Error(ErrorKind::invalid_input, "quadrature order must be positive");
    // Golub-Welsch
    RealMatrix J = RealMatrix::Zero(order, order);
    for (int i = 1; i < order; ++i) J(i, i - 1) = J(i - 1, i) = i / std::sqrt(4.0 * i * i - 1.0);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(J);
    std::vector<double> x(order), w(order);
    for (int i = 0; i < order; ++i) {
        x[i] = es.eigenvalues()(i);
        const double v = es.eigenvectors()(0, i);
        w[i] = 2.0 * v * v;
    }
    return {x, w};
}

SphereQuadrature sphere_quadrature(int polar_order, int azimuth_count) {
    if (azimuth_count < 1) throw Error(ErrorKind::invalid_input, "azimuth count must be positive");
    auto [x, w] = gauss_legendre(polar_order);
    SphereQuadrature q;
    for (int i = 0; i < polar_order; ++i) {
        const double st = std::sqrt(std::max(0.0, 1.0 - x[i] * x[i]));
        for (int j = 0; j < azimuth_count; ++j) {
            const double phi = 2.0 * M_PI * j / azimuth_count;
            q.points.push_back({st * std::cos(phi), st * std::sin(phi), x[i]});
            q.weights.push_back(w[i] * 2.0 * M_PI / azimuth_count);
        }
    }
    return q;
}

SphereQuadrature sphere_quadrature_for_spin(double s) {
    const int ts = twice(s);
    return sphere_quadrature(ts + 2, 2 * ts + 3);
}

double kernel_normalization_residual(double s, const std::vector<double>& weights) {
    const int d = spin_dim(s);
    const auto q = sphere_quadrature_for_spin(s);
    Matrix acc = Matrix::Zero(d, d);
    for (size_t i = 0; i < q.points.size(); ++i) acc += q.weights[i] * stratonovich_kernel(s, weights, q.points[i]);
    acc *= d / (4.0 * M_PI);
    return (acc - Matrix::Identity(d, d)).norm();
}

double kernel_duality_residual(double s, const std::vector<double>& weights, const std::vector<std::array<double, 3>>& probes) {
    const int d = spin_dim(s);
    const auto inv = inverse_weights(weights);
    const auto q = sphere_quadrature_for_spin(s);
    const auto lower = kernels_at(s, weights, q.points);
    const auto upper = kernels_at(s, inv, q.points);
    double worst = 0.0;
    for (const auto& m : probes) {
        const Matrix target = stratonovich_kernel(s, weights, m);
        Matrix acc = Matrix::Zero(d, d);
        for (size_t i = 0; i < q.points.size(); ++i) acc += q.weights[i] * trace_inner_product(upper[i], target) * lower[i];
        acc *= d / (4.0 * M_PI);
        worst = std::max(worst, (acc - target).norm());
    }
    return worst;
}

double gram_condition(double s, const std::vector<std::array<double, 3>>& points) {
    const int d = spin_dim(s);
    if (static_cast<int>(points.size()) != d * d) throw Error(ErrorKind::invalid_input, "constellation needs d^2 points");
    const auto ops = kernels_at(s, std::vector<double>(d, 1.0), points);
    const RealMatrix V = basis_coordinates(ops, d);
    Eigen::JacobiSVD<RealMatrix> svd(V);
    const auto& sv = svd.singularValues();
    const double lo = sv(sv.size() - 1);
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    // Gram = V^T V
    return (sv(0) / lo) * (sv(0) / lo);
}

Constellation random_constellation(double s, std::uint64_t seed, int max_attempts) {
    const int d = spin_dim(s);
    std::mt19937_64 rng(seed);
    Constellation c;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        c.points.clear();
        for (int i = 0; i < d * d; ++i) c.points.push_back(gaussian_direction(rng));
        c.attempts = attempt;
        c.condition = gram_condition(s, c.points);
        if (c.condition <= kConditionCutoff) return c;
    }
    throw Error(ErrorKind::retry_constellation, "no well-conditioned constellation after " + std::to_string(max_attempts) + " draws");
}

Constellation tetrahedral_constellation() {
    const double r = 1.0 / std::sqrt(3.0);
    Constellation c;
    c.points = {{r, r, r}, {r, -r, -r}, {-r, r, -r}, {-r, -r, r}};
    c.condition = gram_condition(0.5, c.points);
    return c;
}

Representation stratonovich_discrete(double s, const Constellation& c) {
    const int d = spin_dim(s);
    if (static_cast<int>(c.points.size()) != d * d) throw Error(ErrorKind::invalid_input, "constellation needs d^2 points");
    const double cond = gram_condition(s, c.points);
    if (!(cond <= kConditionCutoff)) throw Error(ErrorKind::retry_constellation, "constellation Gram matrix is ill conditioned");
    Representation r;
    r.name = "stratonovich";
    r.geometry.kind = "constellation";
    for (size_t i = 0; i < c.points.size(); ++i) r.geometry.points.push_back("n" + std::to_string(i));
    const OutcomeSet o{r.geometry.points, r.geometry.kind};
    r.frame = Frame{d, o, kernels_at(s, std::vector<double>(d, 1.0), c.points)};
    r.dual = gram_dual(r.frame);
    return r;
}

double discrete_kernel_residual(const Representation& rep) {
    const int d = rep.frame.dim;
    const size_t n = rep.frame.operators.size();
    std::vector<Matrix> upper;
    for (const auto& D : rep.dual.operators) upper.push_back(static_cast<double>(d) * D);
    double worst = 0.0;
    for (size_t mu = 0; mu < n; ++mu) {
        Matrix acc = Matrix::Zero(d, d);
        for (size_t nu = 0; nu < n; ++nu) acc += trace_inner_product(rep.frame.operators[nu], upper[mu]) * upper[nu];
        worst = std::max(worst, (acc / static_cast<double>(d) - upper[mu]).norm());
    }
    Matrix total = Matrix::Zero(d, d);
    for (const auto& U : upper) total += U;
    worst = std::max(worst, (total / static_cast<double>(d) - Matrix::Identity(d, d)).norm());
    return worst;
}

NmrKernelPair nmr_kernel(const std::vector<std::array<double, 3>>& directions) {
    if (directions.empty() || directions.size() > 3) throw Error(ErrorKind::invalid_input, "nmr kernels support 1 to 3 qubits");
    std::vector<Matrix> lo, up;
    const Matrix I = Matrix::Identity(2, 2);
    for (const auto& n : directions) {
        check_unit(n);
        const Matrix ns = n[0] * sigma_x() + n[1] * sigma_y() + n[2] * sigma_z();
        lo.push_back((I + ns) / 2.0);
        up.push_back((I + 3.0 * ns) / (4.0 * M_PI));
    }
    return {tensor_all(lo), tensor_all(up)};
}

std::vector<NmrKernelPair> nmr_kernels(int n_qubits, const std::vector<std::vector<std::array<double, 3>>>& samples) {
    if (n_qubits < 1 || n_qubits > 3) throw Error(ErrorKind::invalid_input, "nmr kernels support 1 to 3 qubits");
    std::vector<NmrKernelPair> out;
    for (const auto& t : samples) {
        if (static_cast<int>(t.size()) != n_qubits) throw Error(ErrorKind::invalid_point, "sample tuple size differs from qubit count");
        out.push_back(nmr_kernel(t));
    }
    return out;
}

}  // namespace qframe
