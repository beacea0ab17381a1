#include "tmodq/gf.hpp"

#include <algorithm>
#include <numeric>

namespace tmodq {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// dense polynomial arithmetic over GF(p), coefficients constant-term first
using Poly = std::vector<int>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    a = poly_trim(std::move(a));
    const int dm = (int)m.size() - 1;
    while ((int)a.size() - 1 >= dm) {
        int shift = (int)a.size() - 1 - dm;
        int c = a.back();  // m is monic
        for (int i = 0; i <= dm; ++i) {
            int& t = a[i + shift];
            t = ((t - c * m[i]) % p + p) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_trim(std::move(c));
}

bool divides(const Poly& d, const Poly& a, int p) {
    return poly_mod(a, d, p).empty();
}

bool poly_irreducible(const Poly& m, int p) {
    int e = (int)m.size() - 1;
    if (e < 1 || m.back() != 1) return false;
    if (e == 1) return true;
    // trial division by every monic polynomial of degree 1 .. e/2
    for (int d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            long long v = idx;
            for (int i = 0; i < d; ++i) { div[i] = (int)(v % p); v /= p; }
            div[d] = 1;
            if (divides(div, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> default_modulus(int p, int e) {
    if (e == 1) return {0, 1};  // x, unused for arithmetic
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        Poly m(e + 1, 0);
        long long v = idx;
        for (int i = 0; i < e; ++i) { m[i] = (int)(v % p); v /= p; }
        m[e] = 1;
        if (poly_irreducible(m, p)) return m;
    }
    throw field_error("no irreducible polynomial found");  // unreachable
}

FiniteField::FiniteField(int p, int e, std::vector<int> modulus) : p_(p), e_(e) {
    if (!is_prime(p)) throw field_error("characteristic is not prime: " + std::to_string(p));
    if (e < 1) throw field_error("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 1 << 20) throw field_error("field too large");
    }
    q_ = (int)q;

    if (modulus.empty()) modulus = default_modulus(p, e);
    if ((int)modulus.size() != e + 1 || modulus.back() % p != 1)
        throw field_error("modulus must be monic of degree e");
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (e > 1 && !poly_irreducible(modulus, p))
        throw field_error("modulus is reducible over GF(p)");
    modulus_ = modulus;

    auto digits = [&](int a) {
        Poly d(e_, 0);
        for (int i = 0; i < e_; ++i) { d[i] = a % p_; a /= p_; }
        return d;
    };
    auto pack = [&](const Poly& d) {
        int a = 0;
        for (int i = e_ - 1; i >= 0; --i) a = a * p_ + (i < (int)d.size() ? d[i] : 0);
        return a;
    };

    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        Poly da = digits(a);
        Poly nd(e_);
        for (int i = 0; i < e_; ++i) nd[i] = (p_ - da[i]) % p_;
        neg_[a] = pack(nd);
        for (int b = 0; b < q_; ++b) {
            Poly db = digits(b);
            Poly s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[(size_t)a * q_ + b] = pack(s);
            mul_[(size_t)a * q_ + b] = pack(poly_mod(poly_mul(da, db, p_), modulus_, p_));
        }
    }

    inv_.assign(q_, -1);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[(size_t)a * q_ + b] == 1) { inv_[a] = b; break; }
    for (int a = 1; a < q_; ++a)
        if (inv_[a] < 0) throw field_error("modulus is reducible: element has no inverse");

    // multiplicative group is cyclic of order q-1: find a generator
    bool has_generator = false;
    for (int g = 1; g < q_ && !has_generator; ++g) {
        int x = g, ord = 1;
        while (x != 1) { x = mul_[(size_t)x * q_ + g]; ++ord; }
        has_generator = (ord == q_ - 1);
    }
    if (!has_generator) throw field_error("multiplicative group is not cyclic of order q-1");

    qclass_.assign(q_, QuadClass::NonSquare);
    qclass_[0] = QuadClass::Zero;
    for (int b = 1; b < q_; ++b) qclass_[mul_[(size_t)b * q_ + b]] = QuadClass::Square;

    frob_.assign(q_, 0);
    if (e_ % 2 == 0) {
        int s = sqrt_q();
        for (int a = 0; a < q_; ++a) frob_[a] = pow(a, s);
    }
}

int FiniteField::inv(int a) const {
    check(a);
    if (a == 0) throw field_error("division by zero");
    return inv_[a];
}

int FiniteField::pow(int a, long long n) const {
    check(a);
    if (n < 0) { a = inv(a); n = -n; }
    int r = 1;
    while (n > 0) {
        if (n & 1) r = mul_[(size_t)r * q_ + a];
        a = mul_[(size_t)a * q_ + a];
        n >>= 1;
    }
    return r;
}

QuadClass FiniteField::quad_class(int a) const {
    check(a);
    if (q_ % 2 == 0) throw field_error("quadratic classes require a field of odd order");
    return qclass_[a];
}

int FiniteField::sqrt_q() const {
    if (e_ % 2 != 0) throw field_error("field order is not a square");
    int s = 1;
    for (int i = 0; i < e_ / 2; ++i) s *= p_;
    return s;
}

std::array<long, 3> FiniteField::quadratic_value_distribution(int a, int b, int c) const {
    if (a == 0) throw field_error("leading coefficient must be nonzero");
    if (q_ % 2 == 0) throw field_error("quadratic value distribution requires odd q");
    std::array<long, 3> counts{0, 0, 0};
    auto tally = [&](int v) {
        switch (quad_class(v)) {
            case QuadClass::Zero: ++counts[0]; break;
            case QuadClass::Square: ++counts[1]; break;
            case QuadClass::NonSquare: ++counts[2]; break;
        }
    };
    tally(a);
    for (int x = 0; x < q_; ++x)
        tally(add(mul(a, mul(x, x)), add(mul(b, x), c)));
    return counts;
}

int FiniteField::from_coeffs(const std::vector<int>& c) const {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) {
        int d = i < (int)c.size() ? ((c[i] % p_) + p_) % p_ : 0;
        a = a * p_ + d;
    }
    return a;
}

std::vector<int> FiniteField::to_coeffs(int a) const {
    check(a);
    std::vector<int> d(e_);
    for (int i = 0; i < e_; ++i) { d[i] = a % p_; a /= p_; }
    return d;
}

}  // namespace tmodq
