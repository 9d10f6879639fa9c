#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "qframe/finite_field.hpp"

using namespace qframe;

namespace {

FieldSpec gf4() { return make_field_spec(2, 2, {1, 1, 1}); }
FieldSpec gf8() { return make_field_spec(2, 3, {1, 1, 0, 1}); }
FieldSpec gf9() { return default_field_spec(3, 2); }

// Independent polynomial arithmetic over Z_p with plain vectors.
std::vector<int> naive_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    std::vector<int> prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int k = static_cast<int>(prod.size()) - 1; k >= n; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        for (int i = 0; i <= n; ++i) prod[k - n + i] = ((prod[k - n + i] - c * f[i]) % p + p) % p;
    }
    prod.resize(n);
    return prod;
}

std::vector<int> naive_pow(std::vector<int> base, long long e, const std::vector<int>& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    std::vector<int> r(n, 0);
    r[0] = 1;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = naive_mulmod(r, base, f, p);
        base = naive_mulmod(base, base, f, p);
    }
    return r;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool naive_primitive(const std::vector<int>& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    const long long order = ipow(p, n) - 1;
    std::vector<int> x(n, 0);
    if (n == 1) x[0] = ((-f[0]) % p + p) % p;
    else x[1] = 1;
    std::vector<int> one(n, 0);
    one[0] = 1;
    // order of x must be exactly p^n - 1
    if (naive_pow(x, order, f, p) != one) return false;
    long long m = order;
    for (long long r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        if (naive_pow(x, order / r, f, p) == one) return false;
    }
    return true;
}

// Evaluate polynomial g (coeffs over Z_p) at element y of the field defined by f.
std::vector<int> eval_at(const std::vector<int>& g, const std::vector<int>& y, const std::vector<int>& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    std::vector<int> acc(n, 0);
    for (int k = static_cast<int>(g.size()) - 1; k >= 0; --k) {
        acc = naive_mulmod(acc, y, f, p);
        acc[0] = (acc[0] + g[k]) % p;
    }
    return acc;
}

// Brute-force Conway polynomial: first primitive, compatible polynomial in the
// alternating-sign lexicographic order.
std::vector<int> brute_conway(int p, int n, const std::vector<std::vector<int>>& lower) {
    const long long count = ipow(p, n);
    for (long long code = 0; code < count; ++code) {
        std::vector<int> alpha(n + 1, 0);
        long long c = code;
        for (int i = n; i >= 1; --i) { alpha[i] = static_cast<int>(c % p); c /= p; }
        std::vector<int> f(n + 1, 0);
        f[n] = 1;
        for (int i = 1; i <= n; ++i) f[n - i] = ((i % 2 ? -alpha[i] : alpha[i]) % p + p) % p;
        if (f[0] == 0) continue;
        if (!naive_primitive(f, p)) continue;
        bool compatible = true;
        for (int m = 1; m < n && compatible; ++m) {
            if (n % m != 0) continue;
            std::vector<int> x(n, 0);
            if (n == 1) x[0] = ((-f[0]) % p + p) % p; else x[1] = 1;
            const auto y = naive_pow(x, (ipow(p, n) - 1) / (ipow(p, m) - 1), f, p);
            const auto val = eval_at(lower[m], y, f, p);
            for (int v : val) if (v != 0) compatible = false;
        }
        if (compatible) return f;
    }
    return {};
}

}  // namespace

TEST(field_arith, prime_field_sum) {
    auto F3 = default_field_spec(3, 1);
    auto two = field_from_index(F3, 2);
    EXPECT_EQ(field_add(two, two).index(), 1);
}

TEST(field_arith, gf4_x_squared) {
    auto F = gf4();
    auto x = field_element(F, {0, 1});
    EXPECT_EQ(field_mul(x, x), field_element(F, {1, 1}));
}

TEST(field_arith, gf4_inverses) {
    auto F = gf4();
    for (int i = 1; i < 4; ++i) {
        auto a = field_from_index(F, i);
        EXPECT_EQ(field_mul(a, field_inv(a)), field_one(F));
    }
    try {
        field_inv(field_zero(F));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::division_by_zero);
    }
}

TEST(field_arith, cross_field_rejected) {
    EXPECT_THROW(field_add(field_one(gf4()), field_one(gf8())), Error);
}

TEST(field_arith, mul_matches_naive_oracle) {
    for (auto F : {gf4(), gf8(), gf9(), default_field_spec(5, 2)}) {
        for (auto& a : field_elements(F))
            for (auto& b : field_elements(F))
                EXPECT_EQ(field_mul(a, b).coeffs, naive_mulmod(a.coeffs, b.coeffs, F.modulus, F.p));
    }
}

TEST(field_axioms, exhaustive_small_fields) {
    for (auto F : {gf4(), gf8(), gf9()}) {
        auto E = field_elements(F);
        for (auto& a : E)
            for (auto& b : E) {
                ASSERT_EQ(field_add(a, b), field_add(b, a));
                ASSERT_EQ(field_mul(a, b), field_mul(b, a));
                for (auto& c : E) {
                    ASSERT_EQ(field_add(field_add(a, b), c), field_add(a, field_add(b, c)));
                    ASSERT_EQ(field_mul(field_mul(a, b), c), field_mul(a, field_mul(b, c)));
                    ASSERT_EQ(field_mul(a, field_add(b, c)), field_add(field_mul(a, b), field_mul(a, c)));
                }
            }
    }
}

TEST(field_trace, prime_field_identity) {
    auto F = default_field_spec(3, 1);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(field_trace(field_from_index(F, i)), i);
}

TEST(field_trace, gf4_values) {
    auto F = gf4();
    EXPECT_EQ(field_trace(field_element(F, {0, 0})), 0);
    EXPECT_EQ(field_trace(field_element(F, {1, 0})), 0);
    EXPECT_EQ(field_trace(field_element(F, {0, 1})), 1);
    EXPECT_EQ(field_trace(field_element(F, {1, 1})), 1);  // x^2 = x + 1
}

TEST(field_trace, gf8_balanced) {
    int sum = 0;
    for (auto& a : field_elements(gf8())) sum += field_trace(a) == 0 ? 1 : -1;
    EXPECT_EQ(sum, 0);
}

TEST(field_trace, linear_and_surjective) {
    for (auto F : {gf4(), gf8(), gf9(), default_field_spec(5, 2), default_field_spec(2, 4)}) {
        auto E = field_elements(F);
        std::vector<int> hits(F.p, 0);
        for (auto& a : E) {
            hits[field_trace(a)]++;
            for (auto& b : E) ASSERT_EQ(field_trace(field_add(a, b)), (field_trace(a) + field_trace(b)) % F.p);
            for (int c = 0; c < F.p; ++c)
                ASSERT_EQ(field_trace(field_mul(field_from_index(F, c), a)), (c * field_trace(a)) % F.p);
        }
        for (int h : hits) EXPECT_GT(h, 0);
    }
}

TEST(dual_basis, prime_field_self_dual) {
    auto F = default_field_spec(5, 1);
    auto D = dual_basis({field_one(F)});
    EXPECT_EQ(D[0], field_one(F));
}

TEST(dual_basis, trace_delta_relation) {
    for (auto F : {gf4(), gf8(), gf9()}) {
        auto E = polynomial_basis(F);
        auto D = dual_basis(E);
        for (int i = 0; i < F.n; ++i)
            for (int j = 0; j < F.n; ++j) EXPECT_EQ(field_trace(field_mul(D[i], E[j])), i == j ? 1 : 0);
        // the dual of the dual is the original basis
        auto DD = dual_basis(D);
        for (int i = 0; i < F.n; ++i) EXPECT_EQ(DD[i], E[i]);
    }
}

TEST(dual_basis, gf4_by_linear_solve) {
    // solve tr(d_i e_j) = delta by exhaustive search over pairs
    auto F = gf4();
    auto E = polynomial_basis(F);
    std::vector<FieldElement> oracle;
    for (int i = 0; i < 2; ++i)
        for (auto& c : field_elements(F))
            if (field_trace(field_mul(c, E[0])) == (i == 0) && field_trace(field_mul(c, E[1])) == (i == 1)) oracle.push_back(c);
    ASSERT_EQ(oracle.size(), 2u);
    auto D = dual_basis(E);
    EXPECT_EQ(D[0], oracle[0]);
    EXPECT_EQ(D[1], oracle[1]);
}

TEST(dual_basis, singular_rejected) {
    auto F = gf4();
    try {
        dual_basis({field_one(F), field_one(F)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::singular_basis);
    }
}

TEST(expand, examples_and_round_trip) {
    auto F = gf4();
    auto E = polynomial_basis(F);
    EXPECT_EQ(expand(field_zero(F), E), (std::vector<int>{0, 0}));
    EXPECT_EQ(expand(field_element(F, {1, 1}), E), (std::vector<int>{1, 1}));
    auto G = gf9();
    auto EG = polynomial_basis(G);
    for (auto& a : field_elements(G)) EXPECT_EQ(recombine(expand(a, EG), EG), a);
}

TEST(field_spec, irreducibility_checks) {
    EXPECT_TRUE(is_irreducible(2, {1, 1, 1}));
    EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));  // (x+1)^2
    EXPECT_THROW(make_field_spec(2, 2, {1, 0, 1}), Error);
    EXPECT_THROW(make_field_spec(4, 1, {1, 1}), Error);
    EXPECT_THROW(default_field_spec(2, 13), Error);
}

TEST(field_spec, builtin_table_is_conway) {
    // brute-force oracle over every table entry
    std::map<int, std::vector<std::vector<int>>> lower;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
        std::vector<std::vector<int>> found(1);
        for (int n = 1; ipow(p, n) <= 4096; ++n) {
            auto f = brute_conway(p, n, found);
            ASSERT_FALSE(f.empty());
            found.push_back(f);
            EXPECT_EQ(default_field_spec(p, n).modulus, f) << p << "^" << n;
        }
    }
}

TEST(field_spec, builtin_moduli_irreducible_and_primitive) {
    for (int p : {2, 3, 5, 7, 11, 13})
        for (int n = 1; ipow(p, n) <= 4096; ++n) {
            auto F = default_field_spec(p, n);
            EXPECT_TRUE(is_irreducible(p, F.modulus));
            EXPECT_TRUE(is_primitive(p, F.modulus));
        }
}
