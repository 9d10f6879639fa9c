#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstring>

#include "qframe/operator_core.hpp"

using namespace qframe;

namespace {

Matrix mat_pow(const Matrix& A, int k) {
    Matrix R = Matrix::Identity(A.rows(), A.cols());
    for (int i = 0; i < k; ++i) R = R * A;
    return R;
}

double min_eig(const Matrix& H) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace

TEST(pauli_family, qubit_matrices) {
    auto f = make_pauli_family(2);
    Matrix X(2, 2), Z(2, 2), Y(2, 2);
    X << 0, 1, 1, 0;
    Z << 1, 0, 0, -1;
    Y << 0, cplx(0, 1), cplx(0, -1), 0;
    EXPECT_LT((f.X - X).norm(), 1e-15);
    EXPECT_LT((f.Z - Z).norm(), 1e-15);
    EXPECT_LT((f.Y - Y).norm(), 1e-15);
    EXPECT_LT((f.X * f.Z - f.Z * f.X - cplx(0, 2) * f.Y).norm(), 1e-15);
}

TEST(pauli_family, qutrit_spectrum_of_z) {
    auto f = make_pauli_family(3);
    const cplx w = std::exp(cplx(0, 2 * M_PI / 3));
    EXPECT_LT(std::abs(f.Z(0, 0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(f.Z(1, 1) - w), 1e-15);
    EXPECT_LT(std::abs(f.Z(2, 2) - w * w), 1e-15);
}

TEST(pauli_family, rejects_small_dimension) {
    EXPECT_THROW(make_pauli_family(1), Error);
    try {
        make_pauli_family(0);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_dimension);
    }
}

TEST(pauli_family, algebraic_relations_all_small_d) {
    for (int d = 2; d <= 8; ++d) {
        auto f = make_pauli_family(d);
        const Matrix I = Matrix::Identity(d, d);
        EXPECT_LT((mat_pow(f.X, d) - I).norm(), 1e-10) << d;
        EXPECT_LT((mat_pow(f.Z, d) - I).norm(), 1e-10) << d;
        EXPECT_LT((f.parity * f.parity - I).norm(), 1e-10) << d;
        EXPECT_LT((f.Z * f.X - f.omega * f.X * f.Z).norm(), 1e-10) << d;
        EXPECT_LT((f.X.adjoint() * f.X - I).norm(), 1e-12) << d;
        EXPECT_LT((f.Z.adjoint() * f.Z - I).norm(), 1e-12) << d;
        for (int k = 0; k < d; ++k) {
            EXPECT_EQ(f.X(mod(k + 1, d), k), cplx(1.0));
            EXPECT_EQ(f.parity(mod(-k, d), k), cplx(1.0));
        }
    }
}

TEST(weyl, identity_and_shift) {
    for (int d : {2, 3, 4, 5}) EXPECT_LT((weyl_operator(0, 0, d) - Matrix::Identity(d, d)).norm(), 1e-15);
    EXPECT_LT((weyl_operator(1, 0, 3) - make_pauli_family(3).X).norm(), 1e-15);
}

TEST(weyl, unitary) {
    for (int d : {2, 3, 4, 5, 6})
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                Matrix U = weyl_operator(p, q, d);
                EXPECT_LT((U.adjoint() * U - Matrix::Identity(d, d)).norm(), 1e-12);
            }
}

TEST(weyl, half_phase_conventions) {
    // odd d: omega^{1/2} = omega^{inverse of 2}
    EXPECT_LT(std::abs(omega_half_pow(3, 1) - omega_pow(3, 2)), 1e-15);
    EXPECT_LT(std::abs(omega_half_pow(5, 1) - omega_pow(5, 3)), 1e-15);
    // even d: tau = exp(i pi / d)
    EXPECT_LT(std::abs(omega_half_pow(2, 1) - cplx(0, 1)), 1e-15);
    EXPECT_LT(std::abs(omega_half_pow(4, 2) - cplx(0, 1)), 1e-15);
}

TEST(schwinger, basis_elements_and_gram) {
    auto S3 = schwinger_basis(3);
    ASSERT_EQ(S3.size(), 9u);
    // (0,0) sits in the middle of the -1..1 grid
    EXPECT_EQ(S3[4].eta, 0);
    EXPECT_EQ(S3[4].xi, 0);
    EXPECT_LT((S3[4].op - Matrix::Identity(3, 3) / std::sqrt(3.0)).norm(), 1e-15);
    for (int d : {3, 5, 7}) {
        auto S = schwinger_basis(d);
        for (size_t a = 0; a < S.size(); ++a)
            for (size_t b = 0; b < S.size(); ++b) {
                const cplx g = (S[a].op.adjoint() * S[b].op).trace();
                EXPECT_LT(std::abs(g - (a == b ? 1.0 : 0.0)), 1e-10);
            }
    }
}

TEST(schwinger, d5_orthogonal_pair) {
    auto S = schwinger_basis(5);
    const Matrix* A = nullptr;
    const Matrix* B = nullptr;
    for (const auto& s : S) {
        if (s.eta == 1 && s.xi == -1) A = &s.op;
        if (s.eta == 1 && s.xi == 1) B = &s.op;
    }
    ASSERT_TRUE(A && B);
    EXPECT_LT(std::abs((A->adjoint() * *B).trace()), 1e-12);
}

TEST(schwinger, even_dimension_rejected) {
    try {
        schwinger_basis(4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unsupported_dimension);
    }
}

TEST(fourier, small_cases) {
    Matrix F2 = finite_fourier(2);
    Matrix H(2, 2);
    H << 1, 1, 1, -1;
    EXPECT_LT((F2 - H / std::sqrt(2.0)).norm(), 1e-15);
    Matrix F3 = finite_fourier(3);
    EXPECT_LT((F3.adjoint() * F3 - Matrix::Identity(3, 3)).norm(), 1e-12);
    Matrix F4 = finite_fourier(4);
    EXPECT_LT((F4 * F4 - parity_operator(4)).norm(), 1e-12);
}

TEST(fourier, conjugates_shift_into_clock) {
    // F X F^dagger = Z with F_{kk'} = omega^{kk'}/sqrt(d)
    for (int d : {2, 3, 5}) {
        auto f = make_pauli_family(d);
        Matrix F = finite_fourier(d);
        EXPECT_LT((F * f.X * F.adjoint() - f.Z).norm(), 1e-12) << d;
    }
}

TEST(trace_inner, examples_and_oracle) {
    EXPECT_NEAR(trace_inner_product(Matrix::Identity(3, 3), Matrix::Identity(3, 3)), 3.0, 1e-15);
    auto f = make_pauli_family(2);
    EXPECT_NEAR(trace_inner_product(f.X, f.Z), 0.0, 1e-15);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Matrix A = random_effect(4, seed), B = random_effect(4, seed + 100);
        double oracle = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) oracle += (A(i, j) * B(j, i)).real();
        EXPECT_NEAR(trace_inner_product(A, B), oracle, 1e-12);
        EXPECT_NEAR(trace_inner_product(A, B), trace_inner_product(B, A), 1e-12);
    }
    EXPECT_THROW(trace_inner_product(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), Error);
}

TEST(composite, product_state_partial_ops) {
    Matrix r1 = random_state(2, 2, 1), r2 = random_state(3, 2, 2);
    Matrix rho = tensor(r1, r2);
    EXPECT_LT((partial_transpose(rho, 1, {2, 3}) - tensor(r1, r2.transpose())).norm(), 1e-12);
    EXPECT_GT(min_eig(partial_transpose(rho, 1, {2, 3})), -1e-12);
    EXPECT_LT((partial_trace(rho, 1, {2, 3}) - r1).norm(), 1e-12);
    EXPECT_LT((partial_trace(rho, 0, {2, 3}) - r2).norm(), 1e-12);
    EXPECT_LT((partial_transpose(rho, 0, {2, 3}) - tensor(r1.transpose(), r2)).norm(), 1e-12);
}

TEST(composite, singlet_partial_transpose_eigenvalue) {
    Vector psi = Vector::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    Matrix pt = partial_transpose(projector(psi), 1, {2, 2});
    EXPECT_NEAR(min_eig(pt), -0.5, 1e-12);
    EXPECT_NEAR(pt.trace().real(), 1.0, 1e-12);
    EXPECT_TRUE(is_hermitian(pt));
}

TEST(composite, mismatch_throws) {
    EXPECT_THROW(partial_trace(Matrix::Identity(4, 4), 0, {2, 3}), Error);
    EXPECT_THROW(partial_transpose(Matrix::Identity(4, 4), 2, {2, 2}), Error);
}

TEST(random, pure_and_full_rank) {
    Matrix pure = random_state(4, 1, 9);
    EXPECT_NEAR((pure * pure).trace().real(), 1.0, 1e-10);
    Matrix full = random_state(3, 3, 9);
    EXPECT_GT(min_eig(full), 0.0);
    EXPECT_THROW(random_state(3, 4, 1), Error);
    EXPECT_THROW(random_state(3, 0, 1), Error);
}

TEST(random, deterministic_for_seed) {
    Matrix a = random_state(3, 2, 77), b = random_state(3, 2, 77);
    EXPECT_EQ(0, std::memcmp(a.data(), b.data(), sizeof(cplx) * a.size()));
    Matrix e1 = random_effect(3, 5), e2 = random_effect(3, 5);
    EXPECT_EQ(0, std::memcmp(e1.data(), e2.data(), sizeof(cplx) * e1.size()));
}

TEST(random, states_always_valid) {
    for (int d : {2, 3, 4, 6})
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const int rank = 1 + static_cast<int>(seed % d);
            ASSERT_TRUE(is_density(random_state(d, rank, seed))) << d << " " << seed;
        }
    for (std::uint64_t seed = 0; seed < 100; ++seed) ASSERT_TRUE(is_effect(random_effect(3, seed)));
}

TEST(stabilizer, six_qubit_states) {
    auto S = qubit_stabilizer_states();
    ASSERT_EQ(S.size(), 6u);
    const Matrix up = (Matrix::Identity(2, 2) + make_pauli_family(2).Z) / 2.0;
    EXPECT_LT((S[0] - up).norm(), 1e-15);
    for (const auto& P : S) {
        EXPECT_LT((P * P - P).norm(), 1e-12);
        EXPECT_NEAR(P.trace().real(), 1.0, 1e-12);
    }
    for (const auto& P : S)
        for (const auto& Q : S) {
            const double t = trace_inner_product(P, Q);
            const bool ok = std::abs(t) < 1e-12 || std::abs(t - 0.5) < 1e-12 || std::abs(t - 1.0) < 1e-12;
            EXPECT_TRUE(ok) << t;
        }
}

TEST(predicates, basic_cases) {
    EXPECT_TRUE(is_hermitian(make_pauli_family(3).parity));
    EXPECT_FALSE(is_hermitian(make_pauli_family(3).X));
    EXPECT_TRUE(is_density(Matrix::Identity(3, 3) / 3.0));
    EXPECT_FALSE(is_density(Matrix::Identity(3, 3)));
    EXPECT_TRUE(is_effect(Matrix::Identity(3, 3)));
    EXPECT_FALSE(is_effect(2.0 * Matrix::Identity(3, 3)));
    auto S = qubit_stabilizer_states();
    EXPECT_TRUE(is_povm({S[0], S[1]}));
    EXPECT_FALSE(is_povm({S[0], S[2]}));
}

TEST(eigh, ordering_and_phase) {
    Matrix H = random_effect(4, 3);
    auto [vals, vecs] = eigh_sorted(H);
    for (int i = 1; i < 4; ++i) EXPECT_LE(vals(i - 1), vals(i));
    for (int c = 0; c < 4; ++c) {
        EXPECT_LT(std::abs(vecs(0, c).imag()), 1e-14);
        EXPECT_GT(vecs(0, c).real(), 0.0);
        EXPECT_LT((H * vecs.col(c) - vals(c) * vecs.col(c)).norm(), 1e-12);
    }
}
