#pragma once

#include <array>
#include <string>
#include <vector>

#include "qframe/representations.hpp"

namespace qframe {

enum class Verdict { entangled, inconclusive, separable };
const char* verdict_name(Verdict v);

struct EntanglementVerdict {
    double min_value = 0.0;
    double threshold = 0.0;
    Verdict verdict = Verdict::inconclusive;
    std::string method;
    // ppt method only: min eigenvalue of the partial transpose, and whether
    // both Wootters distributions are nonnegative
    double pt_min_eigenvalue = 0.0;
    bool double_nonnegative = false;
};

// (1 - sqrt 3) / 8
double franco_penna_threshold();
EntanglementVerdict franco_penna(const QuasiDistribution& mu);
EntanglementVerdict ppt_separability_two_qubit(const Matrix& rho);

struct StabilizerReport {
    double stabilizer_min = 0.0;
    double magic_min = 0.0;
    double mixture_min = 0.0;
    int mixtures = 0;
    bool pass = false;
};
StabilizerReport stabilizer_positivity_check(std::uint64_t seed = 1, int mixtures = 100);

struct NmrReport {
    int n_qubits = 0;
    double epsilon = 0.0;
    double epsilon_bound = 0.0;
    double analytic_lower = 0.0;
    double sampled_min = 0.0;
    long long tuples = 0;
    bool bound_respected = false;
    bool classical = false;
};

double nmr_epsilon_bound(int n_qubits);
// Fibonacci lattice of count - 14 points, then the 6 axis and 8 diagonal directions.
std::vector<std::array<double, 3>> nmr_directions(int count);
NmrReport nmr_classicality(int n_qubits, double epsilon, const Matrix& rho1, long long samples = 10000);

struct TeleportResult {
    QuasiDistribution mu_out;
    double displacement_residual = 0.0;
    double outcome_probability = 0.0;
    // after undoing X^a Z^-b on the output
    double corrected_residual = 0.0;
};
TeleportResult teleport_phase_space(int d, const Matrix& rho_in, int alpha, int beta);

struct BellReport {
    double c_ab = 0.0, c_ac = 0.0, c_bc = 0.0;
    double lhs = 0.0, rhs = 0.0;
    bool violated = false;
};
// angles in radians, measured in the x-z plane
double singlet_correlation(double a, double b);
BellReport bell_chsh_demo(double a, double b, double c);

struct WitnessReport {
    bool found = false;
    std::string kind;  // "state" or "effect"
    std::string source;
    double value = 0.0;
    int candidates = 0;
};
// Looks for a state with mu_min < -1e-6 or a projector with xi outside [-1e-6, 1 + 1e-6].
WitnessReport negativity_witness(const Representation& rep, std::uint64_t seed = 1, int random_candidates = 200);

}  // namespace qframe
