#include "qframe/representations.hpp"

#include <Eigen/QR>

#include <cmath>
#include <limits>
#include <random>

namespace qframe {

namespace {

void require_prime(int d, const char* what) {
    if (!is_prime(d)) throw Error(ErrorKind::unsupported_dimension, std::string(what) + ": d must be prime, got " + std::to_string(d));
}

OutcomeSet pair_outcomes(int rows, int cols, const std::string& tag) {
    OutcomeSet o;
    o.geometry = tag;
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) o.labels.push_back(std::to_string(a) + "," + std::to_string(b));
    return o;
}

Representation plain_rep(const std::string& name, const OutcomeSet& o, int d, std::vector<Matrix> F, std::vector<Matrix> D) {
    Representation r;
    r.name = name;
    r.geometry.points = o.labels;
    r.frame = Frame{d, o, std::move(F)};
    r.dual = DualFrame{d, o, std::move(D)};
    return r;
}

std::vector<Matrix> weyl_family(int d) {
    std::vector<Matrix> U;
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) U.push_back(weyl_operator(p, q, d));
    return U;
}

double frame_potential(const std::vector<Matrix>& U, const Vector& psi) {
    double f = 0.0;
    for (const auto& u : U) f += std::pow(std::norm(psi.dot(u * psi)), 2);
    return f;
}

Vector potential_gradient(const std::vector<Matrix>& U, const Vector& psi) {
    Vector g = Vector::Zero(psi.size());
    for (const auto& u : U) {
        const cplx a = psi.dot(u * psi);
        g += 2.0 * std::norm(a) * (std::conj(a) * (u * psi) + a * (u.adjoint() * psi));
    }
    return g;
}

double overlap_deviation(const std::vector<Matrix>& U, const Vector& psi) {
    const int d = static_cast<int>(psi.size());
    double worst = std::abs(psi.squaredNorm() - 1.0);
    for (size_t k = 1; k < U.size(); ++k)
        worst = std::max(worst, std::abs(std::norm(psi.dot(U[k] * psi)) - 1.0 / (d + 1)));
    return worst;
}

Vector descend(const std::vector<Matrix>& U, Vector psi, int iterations) {
    double step = 0.1;
    double f = frame_potential(U, psi);
    for (int it = 0; it < iterations; ++it) {
        Vector g = potential_gradient(U, psi);
        g -= psi * psi.dot(g);
        if (g.norm() < 1e-13) break;
        for (int tries = 0; tries < 40; ++tries) {
            Vector trial = (psi - step * g).normalized();
            const double ft = frame_potential(U, trial);
            if (ft < f) {
                psi = trial;
                f = ft;
                step *= 1.5;
                break;
            }
            step *= 0.5;
        }
    }
    return psi;
}

Vector polish(const std::vector<Matrix>& U, Vector psi) {
    const int d = static_cast<int>(psi.size());
    const int rows = static_cast<int>(U.size());
    for (int it = 0; it < 60; ++it) {
        RealVector r(rows);
        RealMatrix J(rows, 2 * d);
        r(0) = psi.squaredNorm() - 1.0;
        for (int i = 0; i < d; ++i) {
            J(0, i) = 2.0 * psi(i).real();
            J(0, d + i) = 2.0 * psi(i).imag();
        }
        for (int k = 1; k < rows; ++k) {
            const Vector up = U[k] * psi;
            const cplx a = psi.dot(up);
            r(k) = std::norm(a) - 1.0 / (d + 1);
            const Vector w = std::conj(a) * up + a * (U[k].adjoint() * psi);
            for (int i = 0; i < d; ++i) {
                J(k, i) = 2.0 * w(i).real();
                J(k, d + i) = 2.0 * w(i).imag();
            }
        }
        if (r.cwiseAbs().maxCoeff() < 1e-14) break;
        const RealVector delta = Eigen::CompleteOrthogonalDecomposition<RealMatrix>(J).solve(-r);
        for (int i = 0; i < d; ++i) psi(i) += cplx(delta(i), delta(d + i));
    }
    return psi;
}

}  // namespace

Matrix mub_v_operator(int d) {
    require_prime(d, "mub");
    if (d == 2) {
        Matrix V(2, 2);
        V << cplx(1, 1), cplx(1, -1), cplx(1, -1), cplx(1, 1);
        return V / 2.0;
    }
    const Matrix F = finite_fourier(d);
    Matrix D = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) D(k, k) = omega_half_pow(d, static_cast<long long>(k) * k);
    return F * D * F.adjoint();
}

MubFamily mub_family(int d) {
    require_prime(d, "mub");
    MubFamily m;
    m.dim = d;
    const Matrix V = mub_v_operator(d);
    m.bases.push_back(finite_fourier(d));
    Matrix Vn = Matrix::Identity(d, d);
    for (int n = 1; n <= d; ++n) {
        Vn = V * Vn;
        m.bases.push_back(Vn);
    }
    return m;
}

double mub_overlap_residual(const MubFamily& m) {
    const int d = m.dim;
    double worst = 0.0;
    for (size_t a = 0; a < m.bases.size(); ++a)
        for (size_t b = 0; b < m.bases.size(); ++b) {
            const Matrix O = m.bases[a].adjoint() * m.bases[b];
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const double target = a == b ? (i == j ? 1.0 : 0.0) : 1.0 / d;
                    worst = std::max(worst, std::abs(std::norm(O(i, j)) - target));
                }
        }
    return worst;
}

QuasiDistribution mub_table(const MubFamily& m, const Matrix& rho) {
    const int d = m.dim;
    if (rho.rows() != d || rho.cols() != d) throw Error(ErrorKind::dimension_mismatch, "state dimension differs from MUB dimension");
    QuasiDistribution t;
    t.representation = "mub-table";
    t.dim = d;
    t.outcomes = pair_outcomes(d + 1, d, "");
    t.values.resize((d + 1) * d);
    for (int n = 0; n <= d; ++n)
        for (int k = 0; k < d; ++k) {
            const Vector v = m.bases[n].col(k);
            t.values(n * d + k) = v.dot(rho * v).real();
        }
    t.sum_deviation = std::abs(t.values.sum() - (d + 1));
    t.normalized = false;
    return t;
}

Matrix mub_reconstruct(const MubFamily& m, const QuasiDistribution& table) {
    const int d = m.dim;
    if (table.values.size() != static_cast<Eigen::Index>(d + 1) * d)
        throw Error(ErrorKind::dimension_mismatch, "table size differs from (d+1) d");
    Matrix rho = -Matrix::Identity(d, d);
    for (int n = 0; n <= d; ++n)
        for (int k = 0; k < d; ++k) rho += table.values(n * d + k) * projector(m.bases[n].col(k));
    return rho;
}

double mub_transition(const QuasiDistribution& t1, const QuasiDistribution& t2) {
    if (t1.values.size() != t2.values.size()) throw Error(ErrorKind::dimension_mismatch, "tables differ in size");
    return t1.values.dot(t2.values) - 1.0;
}

Representation mub_rep(int d) {
    const MubFamily m = mub_family(d);
    std::vector<Matrix> F, D;
    for (int n = 0; n <= d; ++n)
        for (int k = 0; k < d; ++k) {
            const Matrix P = projector(m.bases[n].col(k));
            F.push_back(P / static_cast<double>(d + 1));
            D.push_back(static_cast<double>(d + 1) * P - Matrix::Identity(d, d));
        }
    return plain_rep("mub", pair_outcomes(d + 1, d, ""), d, F, D);
}

Representation hardy_rep(int d) {
    if (d < 2) throw Error(ErrorKind::invalid_dimension, "hardy needs d >= 2");
    std::vector<Matrix> F;
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            Vector v = Vector::Zero(d);
            v(k) = 1.0;
            if (k < j) v(j) += 1.0;
            if (k > j) v(j) += cplx(0.0, 1.0);
            F.push_back(projector(v));
        }
    Representation r = plain_rep("hardy", pair_outcomes(d, d, ""), d, F, {});
    r.dual = gram_dual(r.frame);
    return r;
}

Matrix havel_pauli(int n_qubits, int k, int j) {
    const int d = 1 << n_qubits;
    if (k < 0 || k >= d || j < 0 || j >= d) throw Error(ErrorKind::invalid_input, "Pauli matrix index out of range");
    const PauliFamily P = make_pauli_family(2);
    const Matrix table[2][2] = {{Matrix::Identity(2, 2), P.X}, {P.Y, P.Z}};
    std::vector<Matrix> factors;
    for (int a = n_qubits - 1; a >= 0; --a) factors.push_back(table[(k >> a) & 1][(j >> a) & 1]);
    return tensor_all(factors);
}

Representation havel_rep(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 6) throw Error(ErrorKind::unsupported_dimension, "havel needs 1 to 6 qubits");
    const int d = 1 << n_qubits;
    std::vector<Matrix> F, D;
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            F.push_back(havel_pauli(n_qubits, k, j));
            D.push_back(F.back() / static_cast<double>(d));
        }
    return plain_rep("havel", pair_outcomes(d, d, ""), d, F, D);
}

RealMatrix real_density_matrix(const Matrix& rho) {
    const int d = static_cast<int>(rho.rows());
    int n = 0;
    while ((1 << n) < d) ++n;
    if (d < 2 || (1 << n) != d || rho.cols() != d) throw Error(ErrorKind::unsupported_dimension, "real density matrix needs d = 2^n");
    RealMatrix s(d, d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) s(k, j) = trace_inner_product(rho, havel_pauli(n, k, j));
    return s;
}

std::vector<Vector> sic_orbit(const Vector& fiducial) {
    const int d = static_cast<int>(fiducial.size());
    std::vector<Vector> out;
    for (const auto& U : weyl_family(d)) out.push_back(U * fiducial);
    return out;
}

double sic_deviation(const Vector& fiducial) {
    const int d = static_cast<int>(fiducial.size());
    const auto orbit = sic_orbit(fiducial);
    double worst = 0.0;
    for (size_t a = 0; a < orbit.size(); ++a)
        for (size_t b = a; b < orbit.size(); ++b) {
            const double target = a == b ? 1.0 : 1.0 / (d + 1);
            worst = std::max(worst, std::abs(std::norm(orbit[a].dot(orbit[b])) - target));
        }
    return worst;
}

SicFiducial sic_fiducial(int d, std::uint64_t seed, int starts) {
    if (starts < 0) throw Error(ErrorKind::invalid_input, "starts must be nonnegative");
    if (d < 2) throw Error(ErrorKind::invalid_dimension, "sic needs d >= 2");
    if (d > 8) throw Error(ErrorKind::unsupported_dimension, "sic search limited to d <= 8");
    SicFiducial best;
    best.dim = d;
    if (d == 2) {
        const double r = 1.0 / std::sqrt(3.0);
        auto [ev, V] = eigh_sorted(bloch_state(r, r, r));
        best.vector = V.col(1);
        best.deviation = sic_deviation(best.vector);
        return best;
    }
    const auto U = weyl_family(d);
    best.deviation = std::numeric_limits<double>::infinity();
    for (int s = 0; s < starts; ++s) {
        Vector psi = random_pure_vector(d, seed + 7919ULL * s);
        psi = polish(U, descend(U, psi, 3000));
        psi = phase_fixed(psi.normalized());
        const double dev = overlap_deviation(U, psi);
        if (dev < best.deviation) {
            best.deviation = dev;
            best.vector = psi;
        }
        if (dev < 1e-10) break;
    }
    if (best.vector.size() == d) best.deviation = sic_deviation(best.vector);
    if (!(best.deviation < 1e-8))
        throw Error(ErrorKind::no_fiducial_found, "best deviation " + std::to_string(best.deviation) + " at d = " + std::to_string(d));
    return best;
}

Representation sic_rep(const SicFiducial& f) {
    const int d = f.dim;
    if (!(f.deviation < 1e-6)) throw Error(ErrorKind::no_fiducial_found, "fiducial deviation above 1e-6");
    std::vector<Matrix> F, D;
    for (const auto& v : sic_orbit(f.vector)) {
        const Matrix Pk = projector(v) / static_cast<double>(d);
        F.push_back(Pk);
        D.push_back(static_cast<double>(d) * (d + 1) * Pk - Matrix::Identity(d, d));
    }
    return plain_rep("sic", pair_outcomes(d, d, ""), d, F, D);
}

Representation sic_rep(int d) { return sic_rep(sic_fiducial(d)); }

std::vector<std::vector<double>> sic_conditionals(const Representation& sic, const std::vector<Matrix>& effects) {
    const int d = sic.frame.dim;
    std::vector<std::vector<double>> out;
    for (const auto& E : effects) {
        std::vector<double> row;
        for (const auto& P : sic.frame.operators) row.push_back(trace_inner_product(E, P) * d);
        out.push_back(row);
    }
    return out;
}

std::vector<double> sic_born(const QuasiDistribution& mu, const std::vector<std::vector<double>>& conditional) {
    const int d = mu.dim;
    std::vector<double> out;
    for (const auto& row : conditional) {
        if (static_cast<Eigen::Index>(row.size()) != mu.values.size())
            throw Error(ErrorKind::outcome_mismatch, "conditional row length differs from distribution");
        double pr = 0.0;
        for (size_t k = 0; k < row.size(); ++k) pr += ((d + 1) * mu.values(k) - 1.0 / d) * row[k];
        out.push_back(pr);
    }
    return out;
}

}  // namespace qframe
