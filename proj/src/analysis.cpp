#include "qframe/analysis.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

namespace qframe {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::entangled: return "entangled";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::separable: return "separable";
    }
    return "inconclusive";
}

double franco_penna_threshold() { return (1.0 - std::sqrt(3.0)) / 8.0; }

EntanglementVerdict franco_penna(const QuasiDistribution& mu) {
    if (mu.dim != 4 || mu.values.size() != 16 || mu.outcomes.geometry != "composite-lattice")
        throw Error(ErrorKind::invalid_input, "franco-penna test needs a two-qubit Wootters distribution");
    EntanglementVerdict v;
    v.method = "negativity";
    v.threshold = franco_penna_threshold();
    v.min_value = mu.values.minCoeff();
    v.verdict = v.min_value < v.threshold - tau_eq() ? Verdict::entangled : Verdict::inconclusive;
    return v;
}

EntanglementVerdict ppt_separability_two_qubit(const Matrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) throw Error(ErrorKind::dimension_mismatch, "ppt test needs a 4x4 state");
    const Matrix pt = partial_transpose(rho, 1, {2, 2});
    const auto W = wootters_composite({2, 2});
    const double m1 = represent_state(rho, W.frame).values.minCoeff();
    const double m2 = represent_state(pt, W.frame).values.minCoeff();
    Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
    EntanglementVerdict v;
    v.method = "ppt";
    v.threshold = 0.0;
    v.min_value = std::min(m1, m2);
    v.pt_min_eigenvalue = es.eigenvalues()(0);
    v.double_nonnegative = v.min_value >= -tau_eq();
    v.verdict = v.pt_min_eigenvalue < -tau_eq() ? Verdict::entangled : Verdict::separable;
    return v;
}

StabilizerReport stabilizer_positivity_check(std::uint64_t seed, int mixtures) {
    const auto W = wootters_qubit();
    const auto stab = qubit_stabilizer_states();
    StabilizerReport r;
    r.mixtures = mixtures;
    r.stabilizer_min = 1.0;
    for (const auto& s : stab) r.stabilizer_min = std::min(r.stabilizer_min, represent_state(s, W.frame).values.minCoeff());
    const double c = 1.0 / std::sqrt(3.0);
    r.magic_min = represent_state(bloch_state(c, c, c), W.frame).values.minCoeff();
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> ex(1.0);
    r.mixture_min = 1.0;
    for (int k = 0; k < mixtures; ++k) {
        Matrix rho = Matrix::Zero(2, 2);
        double total = 0.0;
        for (const auto& s : stab) {
            const double w = ex(rng);
            rho += w * s;
            total += w;
        }
        rho /= total;
        r.mixture_min = std::min(r.mixture_min, represent_state(rho, W.frame).values.minCoeff());
    }
    r.pass = r.stabilizer_min >= -tau_eq() && r.mixture_min >= -tau_eq() && r.magic_min < 0.0;
    return r;
}

double nmr_epsilon_bound(int n_qubits) { return 1.0 / (1.0 + std::pow(2.0, 2 * n_qubits - 1)); }

std::vector<std::array<double, 3>> nmr_directions(int count) {
    if (count < 14) throw Error(ErrorKind::invalid_input, "need at least 14 directions");
    std::vector<std::array<double, 3>> out;
    const int m = count - 14;
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < m; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / m;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        out.push_back({r * std::cos(golden * i), r * std::sin(golden * i), z});
    }
    for (int a = 0; a < 3; ++a)
        for (double s : {1.0, -1.0}) {
            std::array<double, 3> v{0, 0, 0};
            v[a] = s;
            out.push_back(v);
        }
    const double c = 1.0 / std::sqrt(3.0);
    for (double x : {c, -c})
        for (double y : {c, -c})
            for (double z : {c, -c}) out.push_back({x, y, z});
    return out;
}

NmrReport nmr_classicality(int n_qubits, double epsilon, const Matrix& rho1, long long samples) {
    if (n_qubits < 1 || n_qubits > 3) throw Error(ErrorKind::invalid_input, "nmr check supports 1 to 3 qubits");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw Error(ErrorKind::invalid_input, "epsilon must lie in [0, 1]");
    const int dim = 1 << n_qubits;
    if (rho1.rows() != dim || rho1.cols() != dim) throw Error(ErrorKind::dimension_mismatch, "rho1 has the wrong size");
    if (!is_density(rho1)) throw Error(ErrorKind::invalid_input, "rho1 is not a density operator");
    const Matrix rho = (1.0 - epsilon) * Matrix::Identity(dim, dim) / static_cast<double>(dim) + epsilon * rho1;

    int per = 15;
    while (std::pow(static_cast<double>(per), n_qubits) < static_cast<double>(samples)) ++per;
    const auto dirs = nmr_directions(per);
    std::vector<Matrix> K;
    for (const auto& n : dirs) K.push_back(nmr_kernel({n}).upper);

    NmrReport r;
    r.n_qubits = n_qubits;
    r.epsilon = epsilon;
    r.epsilon_bound = nmr_epsilon_bound(n_qubits);
    const double vol = std::pow(4.0 * M_PI, n_qubits);
    r.analytic_lower = ((1.0 - epsilon) - epsilon * std::pow(2.0, 2 * n_qubits - 1)) / vol;
    r.sampled_min = 1e300;
    std::vector<int> idx(n_qubits, 0);
    for (;;) {
        Matrix k = K[idx[0]];
        for (int q = 1; q < n_qubits; ++q) k = tensor(k, K[idx[q]]);
        r.sampled_min = std::min(r.sampled_min, (rho * k).trace().real());
        ++r.tuples;
        int q = n_qubits - 1;
        while (q >= 0 && ++idx[q] == per) idx[q--] = 0;
        if (q < 0) break;
    }
    r.bound_respected = r.sampled_min >= r.analytic_lower - 1e-12;
    r.classical = r.sampled_min >= -1e-8;
    return r;
}

TeleportResult teleport_phase_space(int d, const Matrix& rho_in, int alpha, int beta) {
    const auto W = wootters_prime(d);
    if (rho_in.rows() != d || rho_in.cols() != d) throw Error(ErrorKind::dimension_mismatch, "input state has the wrong size");
    Vector phi = Vector::Zero(d * d);
    for (int k = 0; k < d; ++k) phi(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
    const Matrix resource = phi * phi.adjoint();
    const Matrix total = tensor(rho_in, resource);
    const Vector bell = tensor(Matrix::Identity(d, d), weyl_operator(alpha, beta, d)) * phi;
    // <bell|_{12} (x) I_3
    const Matrix M = tensor(Matrix(bell.adjoint()), Matrix::Identity(d, d));
    Matrix out = M * total * M.adjoint();
    TeleportResult r;
    r.outcome_probability = out.trace().real();
    out /= r.outcome_probability;
    r.mu_out = represent_state(out, W.frame, "wootters");
    const auto mu_in = represent_state(rho_in, W.frame);
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) {
            const int src = static_cast<int>(mod(q - alpha, d) * d + mod(p + beta, d));
            r.displacement_residual = std::max(r.displacement_residual, std::abs(r.mu_out.values(q * d + p) - mu_in.values(src)));
        }
    const Matrix T = shift_power(d, alpha) * clock_power(d, -beta);
    r.corrected_residual = (T.adjoint() * out * T - rho_in).norm();
    return r;
}

double singlet_correlation(double a, double b) {
    Vector psi = Vector::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    const Matrix sa = std::cos(a) * sigma_z() + std::sin(a) * sigma_x();
    const Matrix sb = std::cos(b) * sigma_z() + std::sin(b) * sigma_x();
    return psi.dot(tensor(sa, sb) * psi).real();
}

BellReport bell_chsh_demo(double a, double b, double c) {
    BellReport r;
    r.c_ab = singlet_correlation(a, b);
    r.c_ac = singlet_correlation(a, c);
    r.c_bc = singlet_correlation(b, c);
    r.lhs = std::abs(r.c_ab - r.c_ac);
    r.rhs = 1.0 + r.c_bc;
    r.violated = r.lhs > r.rhs + tau_eq();
    return r;
}

WitnessReport negativity_witness(const Representation& rep, std::uint64_t seed, int random_candidates) {
    const int d = rep.frame.dim;
    std::vector<std::pair<std::string, Vector>> states;
    int n = 0;
    while ((1 << n) < d) ++n;
    if ((1 << n) == d && n <= 3) {
        std::vector<Vector> qubit;
        for (const auto& s : qubit_stabilizer_states()) qubit.push_back(eigh_sorted(s).second.col(1));
        std::vector<Vector> prod{Vector::Ones(1)};
        for (int k = 0; k < n; ++k) {
            std::vector<Vector> next;
            for (const auto& v : prod)
                for (const auto& w : qubit) next.push_back(tensor(Matrix(v), Matrix(w)).col(0));
            prod = std::move(next);
        }
        for (size_t i = 0; i < prod.size(); ++i) states.push_back({"stabilizer " + std::to_string(i), prod[i]});
    }
    const Matrix F = finite_fourier(d);
    for (int k = 0; k < d; ++k) {
        states.push_back({"basis " + std::to_string(k), Matrix::Identity(d, d).col(k)});
        states.push_back({"fourier " + std::to_string(k), F.col(k)});
    }
    for (size_t l = 0; l < rep.frame.operators.size(); ++l) {
        const auto eg = eigh_sorted(rep.frame.operators[l]);
        states.push_back({"fiducial " + std::to_string(l), eg.second.col(d - 1)});
    }
    for (int k = 0; k < random_candidates; ++k)
        states.push_back({"random " + std::to_string(k), random_pure_vector(d, seed + static_cast<std::uint64_t>(k))});

    WitnessReport r;
    for (const auto& [name, v] : states) {
        const Matrix P = projector(v);
        ++r.candidates;
        const double m = represent_state(P, rep.frame).values.minCoeff();
        if (m < -1e-6) return {true, "state", name, m, r.candidates};
        const auto xi = represent_effect(P, rep.dual).values;
        if (xi.minCoeff() < -1e-6) return {true, "effect", name, xi.minCoeff(), r.candidates};
        if (xi.maxCoeff() > 1 + 1e-6) return {true, "effect", name, xi.maxCoeff(), r.candidates};
    }
    for (int k = 0; k < random_candidates; ++k) {
        const Matrix P = random_projector(d, 1 + k % std::max(1, d - 1), seed + 100003 + static_cast<std::uint64_t>(k));
        ++r.candidates;
        const auto xi = represent_effect(P, rep.dual).values;
        if (xi.minCoeff() < -1e-6) return {true, "effect", "projector " + std::to_string(k), xi.minCoeff(), r.candidates};
        if (xi.maxCoeff() > 1 + 1e-6) return {true, "effect", "projector " + std::to_string(k), xi.maxCoeff(), r.candidates};
    }
    return r;
}

}  // namespace qframe
