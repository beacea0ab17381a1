#ifndef TMODQ_GF_HPP
#define TMODQ_GF_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmodq {

struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class QuadClass { Zero, Square, NonSquare };

/// GF(p^e) with full add/mul tables. Elements are integers in [0, q)
/// encoding the coefficient vector of the polynomial representative in
/// base p (constant term = least significant digit).
class FiniteField {
public:
    /// Builds GF(p^e). If modulus is empty a default irreducible monic
    /// polynomial of degree e over GF(p) is chosen (lexicographically
    /// smallest, deterministic). modulus is given as e+1 coefficients,
    /// constant term first, leading coefficient 1.
    FiniteField(int p, int e, std::vector<int> modulus = {});

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { check(a); check(b); return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { check(a); check(b); return mul_[a * q_ + b]; }
    int neg(int a) const { check(a); return neg_[a]; }
    int inv(int a) const;
    int pow(int a, long long n) const;

    /// Zero / Square / NonSquare partition of GF(q), q odd.
    QuadClass quad_class(int a) const;

    /// x -> x^sqrt(q), the conjugation used by Hermitian forms. Requires e even.
    int frobenius_sqrt_q(int a) const { check(a); if (e_ % 2 != 0) throw field_error("frobenius_sqrt_q: field order is not a square"); return frob_[a]; }
    int sqrt_q() const;

    /// Counts (zeros, squares, nonsquares) over the q+1 entries
    /// a, f(alpha_0), ..., f(alpha_{q-1}) for f(x) = a x^2 + b x + c.
    std::array<long, 3> quadratic_value_distribution(int a, int b, int c) const;

    /// Element whose base-p digits are the given GF(p) coefficients.
    int from_coeffs(const std::vector<int>& c) const;
    std::vector<int> to_coeffs(int a) const;

private:
    void check(int a) const {
        if (a < 0 || a >= q_) throw field_error("element index out of range: " + std::to_string(a));
    }

    int p_, e_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_;  // q*q tables
    std::vector<int> neg_, inv_, frob_;
    std::vector<QuadClass> qclass_;
};

/// Smallest monic irreducible polynomial of degree e over GF(p),
/// as e+1 coefficients with constant term first.
std::vector<int> default_modulus(int p, int e);

bool is_prime(int n);

}  // namespace tmodq

#endif
