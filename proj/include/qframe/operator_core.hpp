#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "qframe/errors.hpp"

namespace qframe {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Equality tolerance 1e-9 * max(1, norm).
double tau_eq(double norm = 0.0);

// exp(2 pi i m / d), with m reduced mod d first.
cplx omega_pow(int d, long long m);

// omega^{m/2}: inverse of 2 mod d for odd d, tau^m with tau = exp(i pi / d) for even d.
cplx omega_half_pow(int d, long long m);

long long mod(long long a, long long m);
long long inverse_mod(long long a, long long m);

struct PauliFamily {
    int dim = 0;
    cplx omega;
    Matrix X, Z, Y, parity;
};

PauliFamily make_pauli_family(int d);

Matrix shift_power(int d, long long a);   // X^a
Matrix clock_power(int d, long long b);   // Z^b
Matrix parity_operator(int d);

// U_(p,q) = omega^{pq/2} X^p Z^q
Matrix weyl_operator(long long p, long long q, int d);

struct SchwingerElement {
    int eta = 0;
    int xi = 0;
    Matrix op;
};

// Ordered by eta then xi, both running -l..l.
std::vector<SchwingerElement> schwinger_basis(int d);

Matrix finite_fourier(int d);

double trace_inner_product(const Matrix& A, const Matrix& B);

Matrix tensor(const Matrix& A, const Matrix& B);
Matrix tensor_all(const std::vector<Matrix>& factors);
Matrix partial_transpose(const Matrix& rho, int subsystem, const std::vector<int>& dims);
Matrix partial_trace(const Matrix& rho, int subsystem, const std::vector<int>& dims);

bool is_hermitian(const Matrix& A);
bool is_density(const Matrix& A);
bool is_effect(const Matrix& A);
bool is_povm(const std::vector<Matrix>& effects);

// Ascending eigenvalues; each eigenvector's first nonzero entry made real positive.
std::pair<RealVector, Matrix> eigh_sorted(const Matrix& H);
Vector phase_fixed(const Vector& v);

Vector random_pure_vector(int d, std::uint64_t seed);
Matrix random_state(int d, int rank, std::uint64_t seed);
Matrix random_effect(int d, std::uint64_t seed);
Matrix random_projector(int d, int rank, std::uint64_t seed);

// Six eigenprojectors: Z+, Z-, X+, X-, Y+, Y-.
std::vector<Matrix> qubit_stabilizer_states();

// Conventional Pauli matrices (sigma_y = [[0,-i],[i,0]]); used for Bloch vectors.
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
Matrix bloch_state(double x, double y, double z);

Matrix projector(const Vector& v);

}  // namespace qframe
