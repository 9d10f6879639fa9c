#include "qframe/finite_field.hpp"

#include <map>
#include <string>
#include <utility>

namespace qframe {

namespace {

int pmod(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod_p(int a, int p) {
    a = pmod(a, p);
    if (a == 0) throw Error(ErrorKind::division_by_zero, "zero has no inverse mod p");
    long long result = 1, base = a;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<int>(result);
}

void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo b over Z_p (b nonzero)
std::vector<int> poly_rem(std::vector<int> a, std::vector<int> b, int p) {
    trim(a);
    trim(b);
    const int lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const int factor = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % p);
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = pmod(a[shift + i] - static_cast<long long>(factor) * b[i], p);
        trim(a);
    }
    return a;
}

std::vector<int> prime_factors(long long m) {
    std::vector<int> out;
    for (long long f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            out.push_back(static_cast<int>(f));
            while (m % f == 0) m /= f;
        }
    }
    if (m > 1) out.push_back(static_cast<int>(m));
    return out;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void check_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec == b.spec)) throw Error(ErrorKind::invalid_input, "field elements belong to different fields");
}

const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 12}, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{5, 5}, {3, 4, 0, 0, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
        {{11, 2}, {2, 7, 1}},
        {{11, 3}, {9, 2, 0, 1}},
        {{13, 2}, {2, 12, 1}},
        {{13, 3}, {11, 2, 0, 1}},
        {{17, 2}, {3, 16, 1}},
        {{19, 2}, {2, 18, 1}},
        {{23, 2}, {5, 21, 1}},
        {{29, 2}, {2, 24, 1}},
        {{31, 2}, {3, 29, 1}},
        {{37, 2}, {2, 33, 1}},
        {{41, 2}, {6, 38, 1}},
        {{43, 2}, {3, 42, 1}},
        {{47, 2}, {5, 45, 1}},
        {{53, 2}, {2, 49, 1}},
        {{59, 2}, {2, 58, 1}},
        {{61, 2}, {2, 60, 1}},
    };
    return table;
}

int least_primitive_root(int p) {
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (int r : factors) {
            long long acc = 1, base = g;
            for (int e = (p - 1) / r; e > 0; e >>= 1) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    return 1;
}

}  // namespace

int FieldSpec::order() const { return static_cast<int>(ipow(p, n)); }

int FieldElement::index() const {
    int idx = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) idx = idx * spec.p + coeffs[i];
    return idx;
}

bool FieldElement::is_zero() const {
    for (int c : coeffs) if (c != 0) return false;
    return true;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int f = 2; f * f <= p; ++f) if (p % f == 0) return false;
    return true;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
    std::vector<int> f = poly;
    for (auto& c : f) c = pmod(c, p);
    trim(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    // trial division by every monic polynomial of degree 1..n/2
    for (int deg = 1; deg <= n / 2; ++deg) {
        const long long count = ipow(p, deg);
        for (long long code = 0; code < count; ++code) {
            std::vector<int> g(deg + 1);
            long long c = code;
            for (int i = 0; i < deg; ++i) { g[i] = static_cast<int>(c % p); c /= p; }
            g[deg] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

bool is_primitive(int p, const std::vector<int>& poly) {
    if (!is_irreducible(p, poly)) return false;
    const int n = static_cast<int>(poly.size()) - 1;
    std::vector<int> monic = poly;
    const int lead_inv = inv_mod_p(monic.back(), p);
    for (auto& c : monic) c = pmod(static_cast<long long>(c) * lead_inv, p);
    FieldSpec spec{p, n, monic};
    FieldElement x = field_from_index(spec, n == 1 ? pmod(-monic[0], p) : p);
    if (x.is_zero()) return false;
    const long long order = ipow(p, n) - 1;
    for (int r : prime_factors(order)) {
        if (field_pow(x, order / r) == field_one(spec)) return false;
    }
    return true;
}

FieldSpec make_field_spec(int p, int n, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::invalid_input, "p must be prime, got " + std::to_string(p));
    if (n < 1) throw Error(ErrorKind::invalid_input, "n must be positive");
    if (static_cast<int>(modulus.size()) != n + 1 || pmod(modulus.back(), p) != 1)
        throw Error(ErrorKind::invalid_input, "modulus must be monic of degree n");
    std::vector<int> m = modulus;
    for (auto& c : m) c = pmod(c, p);
    if (ipow(p, n) <= 4096 && !is_irreducible(p, m))
        throw Error(ErrorKind::invalid_input, "modulus is reducible");
    return FieldSpec{p, n, m};
}

FieldSpec default_field_spec(int p, int n) {
    if (!is_prime(p)) throw Error(ErrorKind::invalid_input, "p must be prime, got " + std::to_string(p));
    if (n < 1 || ipow(p, n) > 4096) throw Error(ErrorKind::unsupported_dimension, "built-in table covers p^n <= 4096");
    if (n == 1) return FieldSpec{p, 1, {pmod(-least_primitive_root(p), p), 1}};
    return FieldSpec{p, n, conway_table().at({p, n})};
}

FieldElement field_element(const FieldSpec& spec, const std::vector<int>& coeffs) {
    FieldElement e{spec, std::vector<int>(spec.n, 0)};
    std::vector<int> r = coeffs;
    for (auto& c : r) c = pmod(c, spec.p);
    if (static_cast<int>(r.size()) > spec.n) r = poly_rem(r, spec.modulus, spec.p);
    for (size_t i = 0; i < r.size() && i < e.coeffs.size(); ++i) e.coeffs[i] = r[i];
    return e;
}

FieldElement field_from_index(const FieldSpec& spec, int index) {
    if (index < 0 || index >= spec.order()) throw Error(ErrorKind::invalid_input, "field index out of range");
    FieldElement e{spec, std::vector<int>(spec.n, 0)};
    for (int i = 0; i < spec.n; ++i) { e.coeffs[i] = index % spec.p; index /= spec.p; }
    return e;
}

FieldElement field_zero(const FieldSpec& spec) { return field_from_index(spec, 0); }
FieldElement field_one(const FieldSpec& spec) { return field_from_index(spec, 1); }

std::vector<FieldElement> field_elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    for (int i = 0; i < spec.order(); ++i) out.push_back(field_from_index(spec, i));
    return out;
}

std::vector<FieldElement> polynomial_basis(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    for (int i = 0; i < spec.n; ++i) {
        std::vector<int> c(spec.n, 0);
        c[i] = 1;
        out.push_back(field_element(spec, c));
    }
    return out;
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    FieldElement r = a;
    for (int i = 0; i < a.spec.n; ++i) r.coeffs[i] = pmod(a.coeffs[i] + b.coeffs[i], a.spec.p);
    return r;
}

FieldElement field_neg(const FieldElement& a) {
    FieldElement r = a;
    for (auto& c : r.coeffs) c = pmod(-c, a.spec.p);
    return r;
}

FieldElement field_sub(const FieldElement& a, const FieldElement& b) { return field_add(a, field_neg(b)); }

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const int n = a.spec.n, p = a.spec.p;
    std::vector<int> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = pmod(prod[i + j] + static_cast<long long>(a.coeffs[i]) * b.coeffs[j], p);
    return field_element(a.spec, poly_rem(prod, a.spec.modulus, p));
}

FieldElement field_pow(const FieldElement& a, long long e) {
    if (e < 0) return field_pow(field_inv(a), -e);
    FieldElement result = field_one(a.spec), base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = field_mul(result, base);
        base = field_mul(base, base);
    }
    return result;
}

FieldElement field_inv(const FieldElement& a) {
    if (a.is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero field element");
    return field_pow(a, a.spec.order() - 2);
}

int field_trace(const FieldElement& x) {
    FieldElement acc = field_zero(x.spec), term = x;
    for (int i = 0; i < x.spec.n; ++i) {
        acc = field_add(acc, term);
        term = field_pow(term, x.spec.p);
    }
    for (int i = 1; i < x.spec.n; ++i)
        if (acc.coeffs[i] != 0) throw Error(ErrorKind::invalid_input, "trace left the prime field");
    return acc.coeffs[0];
}

namespace {

// Gauss-Jordan inverse over Z_p; empty result if singular.
std::vector<std::vector<int>> inverse_mod_p(std::vector<std::vector<int>> M, int p) {
    const int n = static_cast<int>(M.size());
    std::vector<std::vector<int>> Inv(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) Inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) if (M[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return {};
        std::swap(M[col], M[pivot]);
        std::swap(Inv[col], Inv[pivot]);
        const int s = inv_mod_p(M[col][col], p);
        for (int j = 0; j < n; ++j) {
            M[col][j] = pmod(static_cast<long long>(M[col][j]) * s, p);
            Inv[col][j] = pmod(static_cast<long long>(Inv[col][j]) * s, p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            const int f = M[r][col];
            for (int j = 0; j < n; ++j) {
                M[r][j] = pmod(M[r][j] - static_cast<long long>(f) * M[col][j], p);
                Inv[r][j] = pmod(Inv[r][j] - static_cast<long long>(f) * Inv[col][j], p);
            }
        }
    }
    return Inv;
}

}  // namespace

std::vector<FieldElement> dual_basis(const std::vector<FieldElement>& E) {
    if (E.empty() || static_cast<int>(E.size()) != E.front().spec.n)
        throw Error(ErrorKind::singular_basis, "basis must have n elements");
    const FieldSpec& spec = E.front().spec;
    const int n = spec.n;
    std::vector<std::vector<int>> M(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = field_trace(field_mul(E[i], E[j]));
    const auto Minv = inverse_mod_p(M, spec.p);
    if (Minv.empty()) throw Error(ErrorKind::singular_basis, "elements do not form a basis");
    std::vector<FieldElement> dual;
    for (int i = 0; i < n; ++i) {
        FieldElement acc = field_zero(spec);
        for (int k = 0; k < n; ++k) {
            acc = field_add(acc, field_mul(field_from_index(spec, Minv[i][k]), E[k]));
        }
        dual.push_back(acc);
    }
    return dual;
}

std::vector<int> expand(const FieldElement& x, const std::vector<FieldElement>& E) {
    const auto dual = dual_basis(E);
    std::vector<int> out;
    for (const auto& d : dual) out.push_back(field_trace(field_mul(d, x)));
    return out;
}

FieldElement recombine(const std::vector<int>& coeffs, const std::vector<FieldElement>& E) {
    if (E.empty() || coeffs.size() != E.size()) throw Error(ErrorKind::singular_basis, "coefficient count mismatch");
    FieldElement acc = field_zero(E.front().spec);
    for (size_t i = 0; i < E.size(); ++i)
        acc = field_add(acc, field_mul(field_from_index(E[i].spec, pmod(coeffs[i], E[i].spec.p)), E[i]));
    return acc;
}

FieldTables field_tables(const FieldSpec& spec) {
    FieldTables t;
    t.spec = spec;
    t.q = spec.order();
    const auto elems = field_elements(spec);
    t.add.resize(t.q * t.q);
    t.mul.resize(t.q * t.q);
    t.neg.resize(t.q);
    t.inv.assign(t.q, -1);
    for (int a = 0; a < t.q; ++a) {
        t.neg[a] = field_neg(elems[a]).index();
        if (a != 0) t.inv[a] = field_inv(elems[a]).index();
        for (int b = 0; b < t.q; ++b) {
            t.add[a * t.q + b] = field_add(elems[a], elems[b]).index();
            t.mul[a * t.q + b] = field_mul(elems[a], elems[b]).index();
        }
    }
    return t;
}

}  // namespace qframe
