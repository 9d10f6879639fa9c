#include "qframe/representations.hpp"

#include <cmath>

namespace qframe {

namespace {

OutcomeSet outcomes_of(const PhaseSpaceGeometry& g) { return OutcomeSet{g.points, g.kind}; }

Representation assemble(const std::string& name, const PhaseSpaceGeometry& g, std::vector<Matrix> frame,
                        std::vector<Matrix> dual, int d) {
    Representation r;
    r.name = name;
    r.geometry = g;
    r.frame = Frame{d, outcomes_of(g), std::move(frame)};
    r.dual = DualFrame{d, outcomes_of(g), std::move(dual)};
    return r;
}

void require_odd_prime(int d, const char* what) {
    if (d < 3 || d % 2 == 0 || !is_prime(d))
        throw Error(ErrorKind::unsupported_dimension, std::string(what) + " needs an odd prime d, got " + std::to_string(d));
}

void require_odd(int d, const char* what) {
    if (d < 3 || d % 2 == 0)
        throw Error(ErrorKind::unsupported_dimension, std::string(what) + " needs odd d, got " + std::to_string(d));
}

std::string pair_label(int q, int p) { return std::to_string(q) + "," + std::to_string(p); }

}  // namespace

PhaseSpaceGeometry prime_lattice(int d) {
    if (d < 2) throw Error(ErrorKind::invalid_dimension, "lattice needs d >= 2");
    PhaseSpaceGeometry g;
    g.kind = "prime-lattice";
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) g.points.push_back(pair_label(q, p));
    std::vector<std::pair<int, int>> dirs{{1, 0}};
    for (int s = 0; s < d; ++s) dirs.push_back({s, 1});
    for (auto [a, b] : dirs) {
        std::vector<int> stri;
        for (int c = 0; c < d; ++c) {
            std::vector<int> line;
            for (int q = 0; q < d; ++q)
                for (int p = 0; p < d; ++p)
                    if (mod(static_cast<long long>(a) * q + b * p, d) == c) line.push_back(q * d + p);
            stri.push_back(static_cast<int>(g.lines.size()));
            g.lines.push_back(line);
        }
        g.striations.push_back(stri);
    }
    return g;
}

PhaseSpaceGeometry field_lattice(const FieldSpec& spec) {
    const FieldTables t = field_tables(spec);
    const int d = t.q;
    PhaseSpaceGeometry g;
    g.kind = "field-lattice";
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) g.points.push_back(pair_label(q, p));
    std::vector<std::pair<int, int>> dirs{{1, 0}};
    for (int s = 0; s < d; ++s) dirs.push_back({s, 1});
    for (auto [a, b] : dirs) {
        std::vector<int> stri;
        for (int c = 0; c < d; ++c) {
            std::vector<int> line;
            for (int q = 0; q < d; ++q)
                for (int p = 0; p < d; ++p)
                    if (t.plus(t.times(a, q), t.times(b, p)) == c) line.push_back(q * d + p);
            stri.push_back(static_cast<int>(g.lines.size()));
            g.lines.push_back(line);
        }
        g.striations.push_back(stri);
    }
    return g;
}

PhaseSpaceGeometry product_geometry(const std::vector<PhaseSpaceGeometry>& factors) {
    if (factors.empty()) throw Error(ErrorKind::invalid_input, "product of no geometries");
    PhaseSpaceGeometry g = factors[0];
    for (size_t f = 1; f < factors.size(); ++f) {
        const auto& h = factors[f];
        PhaseSpaceGeometry out;
        const int hp = static_cast<int>(h.points.size());
        const int hl = static_cast<int>(h.lines.size());
        for (auto& a : g.points)
            for (auto& b : h.points) out.points.push_back(a + ";" + b);
        for (auto& la : g.lines)
            for (auto& lb : h.lines) {
                std::vector<int> line;
                for (int i : la)
                    for (int j : lb) line.push_back(i * hp + j);
                out.lines.push_back(line);
            }
        for (auto& sa : g.striations)
            for (auto& sb : h.striations) {
                std::vector<int> stri;
                for (int i : sa)
                    for (int j : sb) stri.push_back(i * hl + j);
                out.striations.push_back(stri);
            }
        g = out;
    }
    g.kind = factors.size() > 1 ? "composite-lattice" : g.kind;
    return g;
}

Matrix wootters_phase_point(int d, int q, int p) {
    if (d == 2) {
        const PauliFamily P = make_pauli_family(2);
        const double sq = (q % 2) ? -1.0 : 1.0, sp = (p % 2) ? -1.0 : 1.0;
        return (Matrix::Identity(2, 2) + sq * P.Z + sp * P.X + sq * sp * P.Y) / 2.0;
    }
    require_odd_prime(d, "wootters");
    Matrix A = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        const Matrix Xj = shift_power(d, j);
        for (int m = 0; m < d; ++m) {
            const long long e = static_cast<long long>(p) * j - static_cast<long long>(q) * m;
            const cplx phase = omega_pow(d, e) * omega_half_pow(d, static_cast<long long>(j) * m);
            A += phase * Xj * clock_power(d, m);
        }
    }
    return A / static_cast<double>(d);
}

Representation wootters_prime(int d) {
    require_odd_prime(d, "wootters");
    std::vector<Matrix> F, D;
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) {
            D.push_back(wootters_phase_point(d, q, p));
            F.push_back(D.back() / static_cast<double>(d));
        }
    return assemble("wootters", prime_lattice(d), F, D, d);
}

Representation wootters_qubit() {
    std::vector<Matrix> F, D;
    for (int q = 0; q < 2; ++q)
        for (int p = 0; p < 2; ++p) {
            D.push_back(wootters_phase_point(2, q, p));
            F.push_back(D.back() / 2.0);
        }
    return assemble("wootters", prime_lattice(2), F, D, 2);
}

Representation wootters(int d) { return d == 2 ? wootters_qubit() : wootters_prime(d); }

Representation wootters_composite(const std::vector<int>& dims) {
    if (dims.empty()) throw Error(ErrorKind::invalid_input, "composite needs at least one factor");
    std::vector<Representation> parts;
    std::vector<PhaseSpaceGeometry> geos;
    for (int d : dims) {
        if (d != 2 && (d % 2 == 0 || !is_prime(d)))
            throw Error(ErrorKind::unsupported_dimension, "composite factors must be 2 or odd primes");
        parts.push_back(wootters(d));
        geos.push_back(parts.back().geometry);
    }
    std::vector<Matrix> D = parts[0].dual.operators;
    int total = dims[0];
    for (size_t f = 1; f < parts.size(); ++f) {
        std::vector<Matrix> next;
        for (auto& a : D)
            for (auto& b : parts[f].dual.operators) next.push_back(tensor(a, b));
        D = std::move(next);
        total *= dims[f];
    }
    std::vector<Matrix> F;
    for (auto& A : D) F.push_back(A / static_cast<double>(total));
    return assemble("wootters", product_geometry(geos), F, D, total);
}

Matrix line_projector(const Representation& rep, int line) {
    const int d = rep.dual.dim;
    Matrix Q = Matrix::Zero(d, d);
    for (int a : rep.geometry.lines.at(line)) Q += rep.dual.operators.at(a);
    return Q / static_cast<double>(d);
}

Matrix cohendet_fano(int d, int q, int p) {
    require_odd(d, "cohendet");
    Matrix W = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const int row = static_cast<int>(mod(k - 2LL * q, d));
        W(row, k) = omega_pow(d, 2LL * p * (k - q));
    }
    return W * parity_operator(d);
}

Representation cohendet(int d) {
    require_odd(d, "cohendet");
    std::vector<Matrix> F, D;
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) {
            D.push_back(cohendet_fano(d, q, p));
            F.push_back(D.back() / static_cast<double>(d));
        }
    PhaseSpaceGeometry g = prime_lattice(d);
    if (!is_prime(d)) {
        g.lines.clear();
        g.striations.clear();
    }
    return assemble("cohendet", g, F, D, d);
}

QuasiDistribution extended_distribution(const QuasiDistribution& mu_odd) {
    const int d = mu_odd.dim;
    if (mu_odd.values.size() != static_cast<Eigen::Index>(d) * d)
        throw Error(ErrorKind::invalid_input, "extended distribution needs a d x d lattice distribution");
    QuasiDistribution out;
    out.representation = mu_odd.representation + "-extended";
    out.dim = d;
    out.outcomes.geometry = "extended-lattice";
    const Eigen::Index n = mu_odd.values.size();
    out.values.resize(2 * n);
    for (int s = 0; s < 2; ++s) {
        const double sigma = s == 0 ? 1.0 : -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            out.outcomes.labels.push_back(mu_odd.outcomes.labels[i] + (s == 0 ? ",+" : ",-"));
            out.values(s * n + i) = (2.0 / d + sigma * mu_odd.values(i)) / (4.0 * d);
        }
    }
    out.sum_deviation = std::abs(out.values.sum() - 1.0);
    return out;
}

Representation leonhardt(int d) {
    if (d < 2) throw Error(ErrorKind::invalid_dimension, "leonhardt needs d >= 2");
    if (d % 2 == 1) {
        std::vector<Matrix> F, D;
        const Matrix P = parity_operator(d);
        for (int q = 0; q < d; ++q)
            for (int p = 0; p < d; ++p) {
                D.push_back(omega_pow(d, 2LL * q * p) * shift_power(d, 2LL * q) * clock_power(d, 2LL * p) * P);
                F.push_back(D.back() / static_cast<double>(d));
            }
        PhaseSpaceGeometry g = prime_lattice(d);
        if (!is_prime(d)) {
            g.lines.clear();
            g.striations.clear();
        }
        return assemble("leonhardt", g, F, D, d);
    }
    const int n = 2 * d;
    PhaseSpaceGeometry g;
    g.kind = "double-lattice";
    std::vector<Matrix> F;
    const Matrix P = parity_operator(d);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) {
            g.points.push_back(pair_label(q, p));
            F.push_back(omega_half_pow(d, static_cast<long long>(q) * p) * shift_power(d, q) * clock_power(d, p) * P /
                        static_cast<double>(n));
        }
    Representation r;
    r.name = "leonhardt";
    r.geometry = g;
    r.frame = Frame{d, outcomes_of(g), F};
    r.dual = canonical_dual(r.frame);
    return r;
}

Matrix ruzzi_kernel(int d, int q, int p) {
    require_odd(d, "ruzzi");
    Matrix T = Matrix::Zero(d, d);
    for (const auto& s : schwinger_basis(d))
        T += s.op * omega_pow(d, -(static_cast<long long>(s.eta) * q + static_cast<long long>(s.xi) * p));
    return T / std::sqrt(static_cast<double>(d));
}

Representation ruzzi_s0(int d) {
    require_odd(d, "ruzzi");
    std::vector<Matrix> F, D;
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) {
            D.push_back(ruzzi_kernel(d, q, p));
            F.push_back(D.back() / static_cast<double>(d));
        }
    PhaseSpaceGeometry g = prime_lattice(d);
    g.lines.clear();
    g.striations.clear();
    return assemble("ruzzi", g, F, D, d);
}

RealVector ruzzi_function(const Matrix& rho) {
    const int d = static_cast<int>(rho.rows());
    require_odd(d, "ruzzi");
    RealVector mu(d * d);
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) mu(q * d + p) = (ruzzi_kernel(d, q, p) * rho).trace().real();
    return mu;
}

}  // namespace qframe
