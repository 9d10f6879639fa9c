#include "qframe/representations.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qframe {

namespace {

constexpr int kDeskBound = 64;

// Joint eigenbasis of the translations along the origin line of striation s,
// columns ordered lexicographically by eigenvalue phase in [0, 2 pi).
Matrix striation_eigenvectors(const FieldSpec& spec, const PhaseSpaceGeometry& g, int s) {
    const int d = spec.order();
    const auto& origin = g.lines[g.striations[s][0]];
    std::vector<Matrix> gens;
    for (int pt : origin)
        if (pt != 0) gens.push_back(ghw_translation(spec, pt / d, pt % d));
    Matrix H = Matrix::Zero(d, d);
    const double c = std::cos(0.1), sn = std::sin(0.1);
    for (size_t j = 0; j < gens.size(); ++j) {
        const Matrix& T = gens[j];
        const Matrix herm = (T + T.adjoint()) / 2.0;
        const Matrix anti = (T - T.adjoint()) / cplx(0.0, 2.0);
        H += (c * herm + sn * anti) / (static_cast<double>(j) + std::sqrt(2.0));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    const RealVector& ev = es.eigenvalues();
    for (int i = 1; i < d; ++i)
        if (ev(i) - ev(i - 1) < 1e-7) throw Error(ErrorKind::invalid_input, "degenerate translation family");
    const Matrix& V = es.eigenvectors();
    std::vector<std::vector<double>> keys(d);
    for (int k = 0; k < d; ++k) {
        const Vector v = V.col(k);
        for (const auto& T : gens) {
            double a = std::arg(v.dot(T * v));
            if (a < 0) a += 2.0 * M_PI;
            keys[k].push_back(std::round(a * 1e9) / 1e9);
        }
    }
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    Matrix out(d, d);
    for (int k = 0; k < d; ++k) out.col(k) = phase_fixed(V.col(order[k]));
    return out;
}

int line_anchor(int s, int c, int d) {
    // a point on line c: (c,0) for the vertical striation, (0,c) otherwise
    return s == 0 ? c * d : c;
}

}  // namespace

Matrix ghw_translation(const FieldSpec& spec, int q_index, int p_index) {
    const auto E = polynomial_basis(spec);
    const auto Ed = dual_basis(E);
    const auto qc = expand(field_from_index(spec, q_index), E);
    const auto pc = expand(field_from_index(spec, p_index), Ed);
    std::vector<Matrix> factors;
    for (int i = 0; i < spec.n; ++i) factors.push_back(shift_power(spec.p, qc[i]) * clock_power(spec.p, pc[i]));
    return tensor_all(factors);
}

int translate_line(const FieldSpec& spec, const PhaseSpaceGeometry& g, int line, int q_index, int p_index) {
    const FieldTables t = field_tables(spec);
    const int d = t.q;
    const int s = line / d;
    const int pt = g.lines.at(line).front();
    const int moved = t.plus(pt / d, q_index) * d + t.plus(pt % d, p_index);
    for (int l : g.striations.at(s)) {
        const auto& pts = g.lines[l];
        if (std::find(pts.begin(), pts.end(), moved) != pts.end()) return l;
    }
    throw Error(ErrorKind::invalid_point, "translated point not found");
}

GhwResult ghw_field(int p, int n, const FieldSpec& spec, const std::vector<int>& selector) {
    if (spec.p != p || spec.n != n) throw Error(ErrorKind::invalid_input, "field spec does not match (p, n)");
    const int d = spec.order();
    if (d > kDeskBound) throw Error(ErrorKind::unsupported_dimension, "ghw limited to p^n <= 64");
    GhwResult r;
    r.spec = spec;
    const PhaseSpaceGeometry g = field_lattice(spec);
    const int ns = static_cast<int>(g.striations.size());
    r.selector = selector.empty() ? std::vector<int>(ns, 0) : selector;
    if (static_cast<int>(r.selector.size()) != ns) throw Error(ErrorKind::invalid_input, "selector needs one entry per striation");
    r.net.geometry = g;
    r.net.projectors.assign(g.lines.size(), Matrix());
    for (int s = 0; s < ns; ++s) {
        const int sel = r.selector[s];
        if (sel < 0 || sel >= d) throw Error(ErrorKind::invalid_input, "selector entry out of range");
        const Matrix V = striation_eigenvectors(spec, g, s);
        const Matrix Q0 = projector(V.col(sel));
        for (int c = 0; c < d; ++c) {
            const int a = line_anchor(s, c, d);
            const Matrix T = ghw_translation(spec, a / d, a % d);
            r.net.projectors[g.striations[s][c]] = T * Q0 * T.adjoint();
        }
    }
    std::vector<Matrix> F, D;
    for (int a = 0; a < d * d; ++a) {
        Matrix A = -Matrix::Identity(d, d);
        for (size_t l = 0; l < g.lines.size(); ++l) {
            const auto& pts = g.lines[l];
            if (std::find(pts.begin(), pts.end(), a) != pts.end()) A += r.net.projectors[l];
        }
        D.push_back(A);
        F.push_back(A / static_cast<double>(d));
    }
    const OutcomeSet o{g.points, g.kind};
    r.rep.name = "ghw";
    r.rep.geometry = g;
    r.rep.frame = Frame{d, o, F};
    r.rep.dual = DualFrame{d, o, D};
    return r;
}

GhwResult ghw_field(int p, int n) { return ghw_field(p, n, default_field_spec(p, n)); }

NetMatch match_ghw_net(int p) {
    const FieldSpec spec = default_field_spec(p, 1);
    const Representation woo = wootters(p);
    const PhaseSpaceGeometry g = field_lattice(spec);
    NetMatch m;
    for (size_t s = 0; s < g.striations.size(); ++s) {
        const Matrix target = line_projector(woo, woo.geometry.striations[s][0]);
        const Matrix V = striation_eigenvectors(spec, g, static_cast<int>(s));
        int best = 0;
        double best_err = 1e300;
        for (int k = 0; k < p; ++k) {
            const double err = (projector(V.col(k)) - target).norm();
            if (err < best_err) {
                best_err = err;
                best = k;
            }
        }
        m.selector.push_back(best);
    }
    const GhwResult r = ghw_field(p, 1, spec, m.selector);
    for (size_t a = 0; a < woo.dual.operators.size(); ++a)
        m.residual = std::max(m.residual, (r.rep.dual.operators[a] - woo.dual.operators[a]).norm());
    return m;
}

}  // namespace qframe
