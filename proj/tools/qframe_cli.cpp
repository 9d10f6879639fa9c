#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qframe/analysis.hpp"
#include "qframe/json_io.hpp"

using namespace qframe;

namespace {

enum Exit { ok = 0, property_failure = 1, bad_args = 2, parse_failure = 3, dim_mismatch = 4, unsupported_transform = 5 };

struct ExitError : std::runtime_error {
    int code;
    ExitError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

struct Options {
    std::string rep;
    int d = 0, p = 0, n = 0;
    std::string dims;
    double spin = 0.5;
    std::string constellation = "random";
    std::uint64_t seed = 0;
    bool seed_given = false;
    double tol = 1e-8;
    std::string out;
    std::string format = "json";
    std::string state_file, dist_file, dual_file;
    std::string from, to;
    int samples = 50;
    bool witness = false;
    std::string demo;
    std::string angles = "0,60,120";
    double epsilon = -1.0;
    int starts = 50;
};

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed_given) return o.seed;
    if (const char* env = std::getenv("QFRAME_SEED")) {
        try {
            size_t used = 0;
            const std::string s(env);
            const auto v = std::stoull(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ExitError(bad_args, "QFRAME_SEED is not an unsigned integer");
        }
    }
    return 1;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ExitError(bad_args, "bad integer list '" + s + "'");
        }
    }
    return out;
}

std::vector<int> prime_factors(int d) {
    std::vector<int> f;
    for (int k = 2; k * k <= d; ++k)
        while (d % k == 0) {
            f.push_back(k);
            d /= k;
        }
    if (d > 1) f.push_back(d);
    return f;
}

bool has_dims(const Options& o) { return o.d || o.p || !o.dims.empty() || (o.rep == "havel" && o.n); }

// dim_hint comes from an input file when no dimension flags are given
BuildParams params_for(const std::string& name, const Options& o, int dim_hint) {
    BuildParams bp;
    bp.seed = resolve_seed(o);
    bp.spin = o.spin;
    bp.constellation = o.constellation;
    bp.d = o.d;
    bp.p = o.p;
    bp.n = o.n ? o.n : 1;
    if (!o.dims.empty()) bp.dims = parse_int_list(o.dims);
    if (!has_dims(o)) {
        if (dim_hint <= 0) throw ExitError(bad_args, "a dimension is required (--d, --p/--n or --dims)");
        const auto f = prime_factors(dim_hint);
        if (name == "ghw") {
            for (int x : f)
                if (x != f[0]) throw Error(ErrorKind::unsupported_dimension, "ghw needs a prime power");
            bp.p = f.empty() ? dim_hint : f[0];
            bp.n = static_cast<int>(f.size());
        } else if (name == "wootters" && f.size() > 1) {
            bp.dims = f;
        } else {
            bp.d = dim_hint;
        }
    }
    if (name == "havel" && !bp.d && !o.n) throw ExitError(bad_args, "havel needs --n or --d");
    if (name == "ghw" && !bp.p && !bp.d) throw ExitError(bad_args, "ghw needs --p and --n");
    return bp;
}

void check_name(const std::string& name) {
    if (!is_representation_name(name)) {
        std::string all;
        for (const auto& n : representation_names()) all += (all.empty() ? "" : ", ") + n;
        throw ExitError(bad_args, "unknown representation '" + name + "' (expected one of: " + all + ")");
    }
}

Representation build_checked(const std::string& name, const Options& o, int dim_hint) {
    check_name(name);
    auto rep = build_representation(name, params_for(name, o, dim_hint));
    if (dim_hint > 0 && rep.frame.dim != dim_hint)
        throw Error(ErrorKind::dimension_mismatch, "representation has dim " + std::to_string(rep.frame.dim) +
                                                       " but the input has dim " + std::to_string(dim_hint));
    return rep;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty())
        std::cout << text;
    else
        write_text_file(o.out, text);
}

Matrix read_state(const std::string& path) {
    if (path.empty()) throw ExitError(bad_args, "--state is required");
    Matrix rho = matrix_from_json(read_json_file(path));
    if (!is_hermitian(rho)) throw Error(ErrorKind::invalid_input, "state is not Hermitian");
    return rho;
}

QuasiDistribution read_distribution(const std::string& path) {
    if (path.empty()) throw ExitError(bad_args, "--dist is required");
    return distribution_from_json(read_json_file(path));
}

void check_outcomes(const QuasiDistribution& mu, const std::string& name, const OutcomeSet& outcomes) {
    if (!mu.representation.empty() && mu.representation != name)
        throw Error(ErrorKind::outcome_mismatch, "distribution is from '" + mu.representation + "', not '" + name + "'");
    if (!(mu.outcomes == outcomes)) throw Error(ErrorKind::outcome_mismatch, "distribution labels do not match the representation");
}

int cmd_build(const Options& o) {
    check_name(o.rep);
    const BuildParams bp = params_for(o.rep, o, 0);
    Json summary;
    Representation rep;
    if (o.rep == "sic") {
        const auto fid = sic_fiducial(bp.d, bp.seed, o.starts);
        rep = sic_rep(fid);
        summary["fiducial_deviation"] = fid.deviation;
    } else {
        rep = build_representation(o.rep, bp);
    }
    const auto fb = frame_bounds(rep.frame);
    const auto dc = is_dual_pair(rep.frame, rep.dual);
    summary["representation"] = rep.name;
    summary["dim"] = rep.frame.dim;
    summary["operators"] = rep.frame.operators.size();
    summary["frame_bounds"] = {fb.a, fb.b};
    summary["tight"] = is_tight(rep.frame);
    summary["duality_residual"] = dc.residual;
    summary["geometry"] = rep.geometry.kind;
    if (!o.out.empty()) {
        const std::string base = o.out + "/" + rep.name;
        write_text_file(base + "_frame.json", dump_canonical(frame_to_json(rep.frame.dim, rep.frame.outcomes, rep.frame.operators)));
        write_text_file(base + "_dual.json", dump_canonical(frame_to_json(rep.dual.dim, rep.dual.outcomes, rep.dual.operators)));
        write_text_file(base + "_geometry.json", dump_canonical(geometry_to_json(rep.geometry)));
        summary["files"] = {base + "_dual.json", base + "_frame.json", base + "_geometry.json"};
    }
    std::cout << dump_canonical(summary);
    return ok;
}

int cmd_represent(const Options& o) {
    check_name(o.rep);
    const Matrix rho = read_state(o.state_file);
    const auto rep = build_checked(o.rep, o, static_cast<int>(rho.rows()));
    auto mu = represent_state(rho, rep.frame, rep.name);
    mu.outcomes.geometry = rep.geometry.kind;
    const double err = (reconstruct_state(mu, rep.dual) - rho).norm();
    emit(o, o.format == "csv" ? distribution_csv(mu) : dump_canonical(distribution_to_json(mu)));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12e", err);
    std::cerr << "round_trip_error " << buf << "\n";
    return ok;
}

int cmd_reconstruct(const Options& o) {
    check_name(o.rep);
    const auto mu = read_distribution(o.dist_file);
    const auto rep = build_checked(o.rep, o, mu.dim);
    check_outcomes(mu, rep.name, rep.dual.outcomes);
    emit(o, dump_canonical(matrix_to_json(reconstruct_state(mu, rep.dual))));
    return ok;
}

int cmd_transform(const Options& o) {
    check_name(o.from);
    check_name(o.to);
    auto mu = read_distribution(o.dist_file);
    Options so = o;
    so.rep = o.from;
    auto src = build_checked(o.from, so, has_dims(so) ? 0 : mu.dim);
    if (src.frame.dim != mu.dim) throw Error(ErrorKind::dimension_mismatch, "distribution dim differs from source representation");
    Options to = o;
    to.rep = o.to;
    const auto dst = build_checked(o.to, to, has_dims(to) ? 0 : mu.dim);
    if (dst.frame.dim != src.frame.dim) throw Error(ErrorKind::dimension_mismatch, "source and target dimensions differ");
    check_outcomes(mu, src.name, src.frame.outcomes);
    const size_t d2 = static_cast<size_t>(src.frame.dim) * src.frame.dim;
    if (src.frame.operators.size() > d2) {
        if (o.dual_file.empty())
            throw ExitError(unsupported_transform, "source frame is overcomplete; pass its dual with --dual");
        src.dual = dual_from_json(read_json_file(o.dual_file));
        if (src.dual.dim != src.frame.dim || src.dual.operators.size() != src.frame.operators.size())
            throw Error(ErrorKind::dimension_mismatch, "stored dual does not fit the source frame");
    }
    const RealMatrix T = transform_matrix(src.frame, src.dual, dst.frame);
    auto out = apply_transform(T, mu, dst.frame, dst.name);
    out.outcomes.geometry = dst.geometry.kind;
    emit(o, o.format == "csv" ? distribution_csv(out) : dump_canonical(distribution_to_json(out)));
    return ok;
}

int cmd_negativity(const Options& o) {
    check_name(o.rep);
    Json j;
    if (o.witness) {
        const auto rep = build_checked(o.rep, o, 0);
        const auto w = negativity_witness(rep, resolve_seed(o));
        j = {{"representation", rep.name}, {"dim", rep.frame.dim}, {"found", w.found}, {"kind", w.kind},
             {"source", w.source}, {"value", w.value}, {"candidates", w.candidates}};
    } else {
        const Matrix rho = read_state(o.state_file);
        const auto rep = build_checked(o.rep, o, static_cast<int>(rho.rows()));
        const auto n = negativity(represent_state(rho, rep.frame));
        j = {{"representation", rep.name}, {"dim", rep.frame.dim}, {"min_value", n.min_value},
             {"l1_negativity", n.l1_negativity}, {"negative", n.min_value < -tau_eq()}};
    }
    emit(o, dump_canonical(j));
    return ok;
}

struct Property {
    std::string name;
    double worst = 0.0;
    double limit = 0.0;
    bool pass() const { return std::isfinite(worst) && worst < limit; }
};

double phase_point_orthogonality(const std::vector<Matrix>& A, int d) {
    double w = 0.0;
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j)
            w = std::max(w, std::abs((A[i] * A[j]).trace() - (i == j ? static_cast<double>(d) : 0.0)));
    return w;
}

// worst |line sum - Born probability of the line's rank-1 projector|, plus its projector defect
double striation_law(const Representation& rep, int samples, std::uint64_t seed) {
    const int d = rep.frame.dim;
    double w = 0.0;
    std::vector<Matrix> Q;
    for (size_t l = 0; l < rep.geometry.lines.size(); ++l) {
        Q.push_back(line_projector(rep, static_cast<int>(l)));
        w = std::max(w, (Q.back() * Q.back() - Q.back()).norm());
        w = std::max(w, std::abs(Q.back().trace().real() - 1.0));
    }
    for (int s = 0; s < samples; ++s) {
        const Matrix rho = random_state(d, 1 + s % d, seed + s);
        const auto mu = represent_state(rho, rep.frame);
        for (size_t l = 0; l < Q.size(); ++l) {
            double sum = 0.0;
            for (int a : rep.geometry.lines[l]) sum += mu.values(a);
            w = std::max(w, std::abs(sum - trace_inner_product(rho, Q[l])));
        }
    }
    return w;
}

std::vector<Property> run_properties(const std::string& name, const Options& o, std::uint64_t seed) {
    const BuildParams bp = params_for(name, o, 0);
    std::vector<Property> props;
    std::optional<SicFiducial> fid;
    if (name == "sic") {
        fid = sic_fiducial(bp.d, bp.seed, o.starts);
        props.push_back({"sic-fiducial-deviation", fid->deviation, 1e-8});
    }
    const Representation rep = fid ? sic_rep(*fid) : build_representation(name, bp);
    const int d = rep.frame.dim;
    props.push_back({"duality", is_dual_pair(rep.frame, rep.dual).residual, 1e-9});

    double born = 0.0, recon = 0.0, norm = 0.0;
    Matrix total = Matrix::Zero(d, d);
    for (const auto& F : rep.frame.operators) total += F;
    const bool sums_to_identity = (total - Matrix::Identity(d, d)).norm() < 1e-9;
    for (int s = 0; s < o.samples; ++s) {
        const Matrix rho = random_state(d, 1 + s % d, seed + 2 * s);
        const Matrix E = random_effect(d, seed + 2 * s + 1);
        const auto mu = represent_state(rho, rep.frame);
        born = std::max(born, std::abs(born_pair(mu, represent_effect(E, rep.dual)) - trace_inner_product(rho, E)));
        recon = std::max(recon, (reconstruct_state(mu, rep.dual) - rho).norm());
        if (sums_to_identity) norm = std::max(norm, std::abs(mu.values.sum() - 1.0));
    }
    props.push_back({"born-consistency", born, o.tol});
    props.push_back({"reconstruction", recon, o.tol});
    if (sums_to_identity) props.push_back({"normalization", norm, o.tol});
    const auto w = negativity_witness(rep, seed);
    props.push_back({"negativity-witness", w.found ? 0.0 : 1.0, 0.5});

    if (!rep.geometry.striations.empty()) {
        double trace = 0.0;
        for (const auto& A : rep.dual.operators) trace = std::max(trace, std::abs(A.trace().real() - 1.0));
        props.push_back({"phase-point-trace", trace, 1e-9});
        props.push_back({"phase-point-orthogonality", phase_point_orthogonality(rep.dual.operators, d), 1e-9});
        props.push_back({"striation-law", striation_law(rep, o.samples, seed + 7777), o.tol});
    }
    if (name == "ghw") {
        const auto G = ghw_field(bp.p ? bp.p : bp.d, bp.n);
        double sum = 0.0, cov = 0.0;
        for (size_t l = 0; l < G.net.geometry.lines.size(); ++l) {
            Matrix S = Matrix::Zero(d, d);
            for (int a : G.net.geometry.lines[l]) S += G.rep.dual.operators[a];
            sum = std::max(sum, (S - static_cast<double>(d) * G.net.projectors[l]).norm());
        }
        std::mt19937_64 rng(seed);
        for (int k = 0; k < 20; ++k) {
            const int q = static_cast<int>(rng() % d), p = static_cast<int>(rng() % d);
            const int line = static_cast<int>(rng() % G.net.projectors.size());
            const Matrix T = ghw_translation(G.spec, q, p);
            const int moved = translate_line(G.spec, G.net.geometry, line, q, p);
            cov = std::max(cov, (G.net.projectors[moved] - T * G.net.projectors[line] * T.adjoint()).norm());
        }
        props.push_back({"line-projector-sum", sum, 1e-9});
        props.push_back({"translation-covariance", cov, 1e-9});
    }
    if (name == "cohendet" && is_prime(d)) {
        double r = 0.0;
        for (int q = 0; q < d; ++q)
            for (int p = 0; p < d; ++p)
                r = std::max(r, (rep.dual.operators[q * d + p] - wootters_phase_point(d, (d - q) % d, p)).norm());
        props.push_back({"reflected-wootters", r, 1e-10});
    }
    if (name == "mub") {
        const auto m = mub_family(d);
        props.push_back({"mub-overlaps", mub_overlap_residual(m), 1e-9});
        double t = 0.0;
        for (int s = 0; s < o.samples; ++s) {
            const Matrix a = random_state(d, 1 + s % d, seed + 31 * s), b = random_state(d, 1, seed + 31 * s + 1);
            t = std::max(t, std::abs(mub_transition(mub_table(m, a), mub_table(m, b)) - trace_inner_product(a, b)));
        }
        props.push_back({"transition-rule", t, 1e-9});
    }
    if (name == "sic") {
        double db = 0.0;
        for (int s = 0; s < o.samples; ++s) {
            const Matrix rho = random_state(d, 1 + s % d, seed + 13 * s), E = random_effect(d, seed + 13 * s + 5);
            const auto mu = represent_state(rho, rep.frame);
            db = std::max(db, std::abs(deformed_born(mu, represent_effect_with_frame(E, rep.frame), rep.dual) - trace_inner_product(rho, E)));
        }
        props.push_back({"deformed-born", db, o.tol});
    }
    if (name == "stratonovich") props.push_back({"discrete-kernel", discrete_kernel_residual(rep), 1e-8});
    return props;
}

int cmd_verify(const Options& o) {
    check_name(o.rep);
    const std::uint64_t seed = resolve_seed(o);
    Json report{{"representation", o.rep}, {"seed", seed}, {"samples", o.samples}, {"tolerance", o.tol}};
    std::vector<Property> props;
    try {
        props = run_properties(o.rep, o, seed);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::no_fiducial_found) throw;
        report["error"] = error_kind_name(e.kind());
        report["message"] = e.what();
        props.push_back({"sic-fiducial-deviation", std::numeric_limits<double>::infinity(), 1e-8});
    }
    Json arr = Json::array();
    bool all = true;
    for (const auto& p : props) {
        Json item{{"name", p.name}, {"pass", p.pass()}, {"limit", p.limit}};
        item["worst_residual"] = std::isfinite(p.worst) ? Json(p.worst) : Json(nullptr);
        arr.push_back(item);
        all = all && p.pass();
    }
    report["properties"] = arr;
    report["pass"] = all;
    emit(o, dump_canonical(report));
    if (!o.out.empty())
        for (const auto& p : props) std::cout << (p.pass() ? "PASS " : "FAIL ") << p.name << "\n";
    return all ? ok : property_failure;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// summary goes to stdout; the CSV goes to --out, or follows the summary
void finish_demo(const Options& o, const std::string& summary, const std::string& csv) {
    std::cout << summary;
    if (o.out.empty())
        std::cout << "\n" << csv;
    else
        write_text_file(o.out, csv);
}

int demo_teleport(const Options& o) {
    const int d = o.d ? o.d : 3;
    const std::uint64_t seed = resolve_seed(o);
    const Matrix rho = random_state(d, 1, seed);
    std::string csv = "alpha,beta,probability,displacement_residual,corrected_residual\n";
    double worst = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const auto r = teleport_phase_space(d, rho, a, b);
            worst = std::max({worst, r.displacement_residual, r.corrected_residual});
            csv += std::to_string(a) + "," + std::to_string(b) + "," + fmt("%.12e", r.outcome_probability) + "," +
                   fmt("%.12e", r.displacement_residual) + "," + fmt("%.12e", r.corrected_residual) + "\n";
        }
    std::string s = "teleport d=" + std::to_string(d) + " seed=" + std::to_string(seed) + "\n";
    s += "max residual: " + fmt("%.3e", worst) + "\n";
    s += std::string("all below 1e-9: ") + (worst < 1e-9 ? "true" : "false") + "\n";
    finish_demo(o, s, csv);
    return ok;
}

int demo_bell(const Options& o) {
    const auto a = parse_int_list(o.angles);
    if (a.size() != 3) throw ExitError(bad_args, "--angles needs three values in degrees");
    const double deg = M_PI / 180.0;
    const auto r = bell_chsh_demo(a[0] * deg, a[1] * deg, a[2] * deg);
    std::string s = "C(a,b)=" + fmt("%.4f", r.c_ab) + " C(a,c)=" + fmt("%.4f", r.c_ac) + " C(b,c)=" + fmt("%.4f", r.c_bc) + "\n";
    s += "lhs=" + fmt("%.4f", r.lhs) + ", rhs=" + fmt("%.4f", r.rhs) + "\n";
    s += std::string("violated: ") + (r.violated ? "true" : "false") + "\n";
    std::string csv = "pair,correlation\n";
    csv += "ab," + fmt("%.12e", r.c_ab) + "\nac," + fmt("%.12e", r.c_ac) + "\nbc," + fmt("%.12e", r.c_bc) + "\n";
    csv += "lhs," + fmt("%.12e", r.lhs) + "\nrhs," + fmt("%.12e", r.rhs) + "\n";
    finish_demo(o, s, csv);
    return ok;
}

int demo_nmr(const Options& o) {
    const int n = o.n ? o.n : 1;
    if (n < 1 || n > 3) throw ExitError(bad_args, "--n must be 1, 2 or 3");
    const double bound = nmr_epsilon_bound(n);
    const double eps = o.epsilon < 0 ? bound : o.epsilon;
    const double c = 1.0 / std::sqrt(3.0);
    Matrix rho1 = bloch_state(c, c, c);
    for (int k = 1; k < n; ++k) rho1 = tensor(rho1, bloch_state(c, c, c));
    const long long samples = std::max(10000, o.samples);
    const auto r = nmr_classicality(n, eps, rho1, samples);
    std::string s = "nmr n=" + std::to_string(n) + " epsilon=" + fmt("%.6f", eps) + " bound=" + fmt("%.6f", bound) + "\n";
    s += "sampled min: " + fmt("%.6e", r.sampled_min) + " over " + std::to_string(r.tuples) + " tuples\n";
    s += "analytic lower: " + fmt("%.6e", r.analytic_lower) + (r.bound_respected ? " (respected)" : " (violated)") + "\n";
    s += std::string("classical: ") + (r.classical ? "true" : "false") + "\n";
    std::string csv = "epsilon,sampled_min,analytic_lower,classical\n";
    for (int k = 0; k <= 20; ++k) {
        const double e = std::min(1.0, 2.0 * bound * k / 20.0);
        const auto g = nmr_classicality(n, e, rho1, samples);
        csv += fmt("%.12e", e) + "," + fmt("%.12e", g.sampled_min) + "," + fmt("%.12e", g.analytic_lower) + "," +
               (g.classical ? "true" : "false") + "\n";
    }
    finish_demo(o, s, csv);
    return ok;
}

int demo_entanglement(const Options& o) {
    const std::uint64_t seed = resolve_seed(o);
    const int count = o.samples == 50 ? 500 : o.samples;
    const auto W = wootters_composite({2, 2});
    int conclusive = 0, agree = 0, ppt_entangled = 0;
    std::string csv = "index,rank,fp_min,fp_verdict,ppt_verdict,pt_min_eigenvalue\n";
    for (int i = 0; i < count; ++i) {
        const int rank = 1 + i % 4;
        const Matrix rho = random_state(4, rank, seed + i);
        const auto fp = franco_penna(represent_state(rho, W.frame));
        const auto pp = ppt_separability_two_qubit(rho);
        ppt_entangled += pp.verdict == Verdict::entangled;
        if (fp.verdict == Verdict::entangled) {
            ++conclusive;
            agree += pp.verdict == Verdict::entangled;
        }
        csv += std::to_string(i) + "," + std::to_string(rank) + "," + fmt("%.12e", fp.min_value) + "," +
               verdict_name(fp.verdict) + "," + verdict_name(pp.verdict) + "," + fmt("%.12e", pp.pt_min_eigenvalue) + "\n";
    }
    std::string s = "entanglement states=" + std::to_string(count) + " seed=" + std::to_string(seed) + "\n";
    s += "threshold: " + fmt("%.6f", franco_penna_threshold()) + "\n";
    s += "ppt entangled: " + std::to_string(ppt_entangled) + "\n";
    s += "negativity conclusive: " + std::to_string(conclusive) + ", agreeing with ppt: " + std::to_string(agree) + "\n";
    finish_demo(o, s, csv);
    return conclusive == agree ? ok : property_failure;
}

int cmd_demo(const Options& o) {
    if (o.demo == "teleport") return demo_teleport(o);
    if (o.demo == "bell") return demo_bell(o);
    if (o.demo == "nmr") return demo_nmr(o);
    if (o.demo == "entanglement") return demo_entanglement(o);
    throw ExitError(bad_args, "unknown demo '" + o.demo + "' (teleport, nmr, bell, entanglement)");
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse_error: return parse_failure;
        case ErrorKind::dimension_mismatch:
        case ErrorKind::outcome_mismatch: return dim_mismatch;
        case ErrorKind::no_fiducial_found: return property_failure;
        default: return bad_args;
    }
}

void add_dim_options(CLI::App* sub, Options& o) {
    sub->add_option("--d", o.d, "Hilbert space dimension");
    sub->add_option("--p", o.p, "field characteristic");
    sub->add_option("--n", o.n, "field degree, or number of qubits");
    sub->add_option("--dims", o.dims, "composite factors, e.g. 2,2");
    sub->add_option("--spin", o.spin, "spin for stratonovich");
    sub->add_option("--constellation", o.constellation, "random or tetrahedral");
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option_function<std::uint64_t>("--seed", [&o](const std::uint64_t& s) {
        o.seed = s;
        o.seed_given = true;
    }, "random seed (falls back to QFRAME_SEED)");
    sub->add_option("--tol", o.tol, "tolerance for residual checks");
    sub->add_option("--out", o.out, "output path");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qframe: quasi-probability representations of finite-dimensional quantum systems"};
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "build a representation and write frame, dual and geometry");
    build->add_option("rep", o.rep, "representation name")->required();
    build->add_option("--starts", o.starts, "sic fiducial search restarts");
    add_dim_options(build, o);
    add_common(build, o);

    auto* represent = app.add_subcommand("represent", "quasi-distribution of a state");
    represent->add_option("rep", o.rep)->required();
    represent->add_option("--state", o.state_file, "state matrix JSON")->required();
    add_dim_options(represent, o);
    add_common(represent, o);

    auto* reconstruct = app.add_subcommand("reconstruct", "state from a quasi-distribution");
    reconstruct->add_option("rep", o.rep)->required();
    reconstruct->add_option("--dist", o.dist_file, "distribution JSON")->required();
    add_dim_options(reconstruct, o);
    add_common(reconstruct, o);

    auto* transform = app.add_subcommand("transform", "map a distribution between representations");
    transform->add_option("--from", o.from)->required();
    transform->add_option("--to", o.to)->required();
    transform->add_option("--dist", o.dist_file)->required();
    transform->add_option("--dual", o.dual_file, "stored dual frame of the source");
    add_dim_options(transform, o);
    add_common(transform, o);

    auto* neg = app.add_subcommand("negativity", "negativity of a state, or a witness search");
    neg->add_option("rep", o.rep)->required();
    neg->add_option("--state", o.state_file);
    neg->add_flag("--witness", o.witness, "search stabilizer, fiducial and random candidates");
    add_dim_options(neg, o);
    add_common(neg, o);

    auto* verify = app.add_subcommand("verify", "run the property suite of a representation");
    verify->add_option("rep", o.rep)->required();
    verify->add_option("--samples", o.samples, "random samples per property");
    verify->add_option("--starts", o.starts, "sic fiducial search restarts");
    add_dim_options(verify, o);
    add_common(verify, o);

    auto* demo = app.add_subcommand("demo", "teleport, nmr, bell or entanglement");
    demo->add_option("name", o.demo)->required();
    demo->add_option("--angles", o.angles, "three angles in degrees");
    demo->add_option("--epsilon", o.epsilon, "polarization for the nmr demo");
    demo->add_option("--samples", o.samples, "sample count");
    add_dim_options(demo, o);
    add_common(demo, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_args;
    }

    try {
        if (*build) return cmd_build(o);
        if (*represent) return cmd_represent(o);
        if (*reconstruct) return cmd_reconstruct(o);
        if (*transform) return cmd_transform(o);
        if (*neg) {
            if (!o.witness && o.state_file.empty()) throw ExitError(bad_args, "negativity needs --state or --witness");
            return cmd_negativity(o);
        }
        if (*verify) return cmd_verify(o);
        return cmd_demo(o);
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_args;
    }
}
