#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qframe/finite_field.hpp"
#include "qframe/frame.hpp"

namespace qframe {

struct PhaseSpaceGeometry {
    // prime-lattice, composite-lattice, field-lattice, extended-lattice, double-lattice,
    // constellation, sphere-sample, or empty for plain outcome lists
    std::string kind;
    std::vector<std::string> points;
    std::vector<std::vector<int>> lines;       // point indices
    std::vector<std::vector<int>> striations;  // line indices
};

struct Representation {
    std::string name;
    Frame frame;
    DualFrame dual;
    PhaseSpaceGeometry geometry;
};

// Lattice Z_d x Z_d, point index q*d + p. Striation (1,0) first, then (s,1) for s = 0..d-1;
// line c of striation (a,b) is {a q + b p = c}.
PhaseSpaceGeometry prime_lattice(int d);
PhaseSpaceGeometry product_geometry(const std::vector<PhaseSpaceGeometry>& factors);
// Same layout over GF(p^n), elements by index.
PhaseSpaceGeometry field_lattice(const FieldSpec& spec);

// Wootters phase-point operators A_(q,p) (the dual); frame is A/d.
Matrix wootters_phase_point(int d, int q, int p);
Representation wootters_prime(int d);
Representation wootters_qubit();
Representation wootters_composite(const std::vector<int>& dims);
Representation wootters(int d);

// Projector (1/d) sum_{alpha in line} D(alpha) for a lattice representation whose dual sums to d I on lines.
Matrix line_projector(const Representation& rep, int line);

struct QuantumNet {
    PhaseSpaceGeometry geometry;
    std::vector<Matrix> projectors;  // one rank-1 projector per line
};

struct GhwResult {
    Representation rep;
    QuantumNet net;
    FieldSpec spec;
    std::vector<int> selector;  // eigenvector chosen for the origin line of each striation
};

// T_(q,p) = tensor_i X^{q_i} Z^{p_i}, q in the polynomial basis, p in its dual basis.
Matrix ghw_translation(const FieldSpec& spec, int q_index, int p_index);
// line index of the translate of a line by the point (q,p)
int translate_line(const FieldSpec& spec, const PhaseSpaceGeometry& geometry, int line, int q_index, int p_index);
GhwResult ghw_field(int p, int n, const FieldSpec& spec, const std::vector<int>& selector = {});
GhwResult ghw_field(int p, int n);

struct NetMatch {
    std::vector<int> selector;
    double residual = 0.0;
};
// Selector making the prime-field GHW net reproduce wootters_prime(p).
NetMatch match_ghw_net(int p);

// Fano operators Delta_qp = W_qp P with W_mn phi_k = omega^{2n(k-m)} phi_{k-2m}.
Matrix cohendet_fano(int d, int q, int p);
Representation cohendet(int d);
// mu(q,p,sigma) = (2/d + sigma mu_odd(q,p)) / (4d); sigma = +1 block first.
QuasiDistribution extended_distribution(const QuasiDistribution& mu_odd);

Representation leonhardt(int d);

// Spin-s objects use basis |s,m> with m = s, s-1, ..., -s.
double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M);
struct SpinMatrices {
    Matrix Sx, Sy, Sz;
};
SpinMatrices spin_matrices(double s);
// weights[l] for l = 0..2s; weights[0] must be 1, none zero
Matrix stratonovich_kernel(double s, const std::vector<double>& weights, const std::array<double, 3>& n);
std::vector<double> inverse_weights(const std::vector<double>& weights);

struct SphereQuadrature {
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;  // sum to 4 pi
};
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order);
SphereQuadrature sphere_quadrature(int polar_order, int azimuth_count);
SphereQuadrature sphere_quadrature_for_spin(double s);

// max deviation of (d/4pi) int Delta dn from I
double kernel_normalization_residual(double s, const std::vector<double>& weights);
// max over probe points m of the deviation in (d/4pi) int Tr(Delta^n Delta_m) Delta_n dn = Delta_m
double kernel_duality_residual(double s, const std::vector<double>& weights, const std::vector<std::array<double, 3>>& probes);

struct Constellation {
    std::vector<std::array<double, 3>> points;
    int attempts = 1;
    double condition = 0.0;
};
Constellation random_constellation(double s, std::uint64_t seed, int max_attempts = 50);
Constellation tetrahedral_constellation();
double gram_condition(double s, const std::vector<std::array<double, 3>>& points);
Representation stratonovich_discrete(double s, const Constellation& c);
// (1/d) sum_nu Tr(Delta_nu Delta^mu) Delta^nu = Delta^mu with Delta^mu = d D(mu)
double discrete_kernel_residual(const Representation& rep);

struct NmrKernelPair {
    Matrix lower;  // Delta_n
    Matrix upper;  // Delta^n
};
NmrKernelPair nmr_kernel(const std::vector<std::array<double, 3>>& directions);
std::vector<NmrKernelPair> nmr_kernels(int n_qubits, const std::vector<std::vector<std::array<double, 3>>>& samples);

Matrix ruzzi_kernel(int d, int q, int p);
Representation ruzzi_s0(int d);
// mu(q,p) = Tr(T(q,p) rho)
RealVector ruzzi_function(const Matrix& rho);

struct MubFamily {
    int dim = 0;
    std::vector<Matrix> bases;  // d+1 unitaries, columns are the basis vectors
};
Matrix mub_v_operator(int d);
MubFamily mub_family(int d);
double mub_overlap_residual(const MubFamily& m);
QuasiDistribution mub_table(const MubFamily& m, const Matrix& rho);
Matrix mub_reconstruct(const MubFamily& m, const QuasiDistribution& table);
double mub_transition(const QuasiDistribution& t1, const QuasiDistribution& t2);
Representation mub_rep(int d);

Representation hardy_rep(int d);

Matrix havel_pauli(int n_qubits, int k, int j);
Representation havel_rep(int n_qubits);
RealMatrix real_density_matrix(const Matrix& rho);

struct SicFiducial {
    int dim = 0;
    Vector vector;
    double deviation = 0.0;
};
std::vector<Vector> sic_orbit(const Vector& fiducial);
double sic_deviation(const Vector& fiducial);
SicFiducial sic_fiducial(int d, std::uint64_t seed = 1, int starts = 50);
Representation sic_rep(const SicFiducial& f);
Representation sic_rep(int d);
// conditional[j][k] = Tr(E_j Pi_k) with Pi_k the rank-1 orbit projectors
std::vector<std::vector<double>> sic_conditionals(const Representation& sic, const std::vector<Matrix>& effects);
std::vector<double> sic_born(const QuasiDistribution& mu, const std::vector<std::vector<double>>& conditional);

struct BuildParams {
    int d = 0;
    int p = 0;
    int n = 1;
    std::vector<int> dims;
    double spin = 0.5;
    std::string constellation = "random";
    std::uint64_t seed = 1;
};
const std::vector<std::string>& representation_names();
bool is_representation_name(const std::string& name);
Representation build_representation(const std::string& name, const BuildParams& params);

}  // namespace qframe
