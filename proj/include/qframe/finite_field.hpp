#pragma once

#include <vector>

#include "qframe/errors.hpp"

namespace qframe {

// Modulus coefficients c0..cn, monic (cn == 1).
struct FieldSpec {
    int p = 2;
    int n = 1;
    std::vector<int> modulus;

    int order() const;
    bool operator==(const FieldSpec& other) const = default;
};

struct FieldElement {
    FieldSpec spec;
    std::vector<int> coeffs;  // n entries, lowest degree first

    int index() const;  // sum c_i p^i
    bool is_zero() const;
    bool operator==(const FieldElement& other) const = default;
};

bool is_prime(int p);
bool is_irreducible(int p, const std::vector<int>& poly);
bool is_primitive(int p, const std::vector<int>& poly);

// Built-in Conway table for p^n <= 4096; throws for larger or non-prime p.
FieldSpec default_field_spec(int p, int n);
FieldSpec make_field_spec(int p, int n, const std::vector<int>& modulus);

FieldElement field_element(const FieldSpec& spec, const std::vector<int>& coeffs);
FieldElement field_from_index(const FieldSpec& spec, int index);
FieldElement field_zero(const FieldSpec& spec);
FieldElement field_one(const FieldSpec& spec);
std::vector<FieldElement> field_elements(const FieldSpec& spec);
std::vector<FieldElement> polynomial_basis(const FieldSpec& spec);  // 1, x, ..., x^{n-1}

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_sub(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);
FieldElement field_pow(const FieldElement& a, long long e);

int field_trace(const FieldElement& x);

std::vector<FieldElement> dual_basis(const std::vector<FieldElement>& E);
std::vector<int> expand(const FieldElement& x, const std::vector<FieldElement>& E);
FieldElement recombine(const std::vector<int>& coeffs, const std::vector<FieldElement>& E);

// Integer-indexed arithmetic tables for fast lattice work.
struct FieldTables {
    FieldSpec spec;
    int q = 0;
    std::vector<int> add, mul, neg, inv;  // inv[0] = -1
    int plus(int a, int b) const { return add[a * q + b]; }
    int times(int a, int b) const { return mul[a * q + b]; }
};

FieldTables field_tables(const FieldSpec& spec);

}  // namespace qframe
