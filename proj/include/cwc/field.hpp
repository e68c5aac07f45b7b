#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cwc {

/// Arithmetic in GF(p^m) for small prime powers (q <= 256), with a fixed,
/// documented element enumeration so constructions are bit-reproducible.
///
/// Elements are integers in [0, q). For m = 1 the index is the residue
/// itself; for m > 1 it is the integer encoding sum(c_i * p^i) of the
/// coefficient vector of the residue polynomial. Index 0 is the additive
/// identity, index 1 the multiplicative identity.
///
/// The modulus is canonical: the monic irreducible of degree m whose lower
/// coefficient tuple (c_0, ..., c_{m-1}) has the smallest integer encoding
/// sum(c_i * p^i). Examples: GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1.
class Field {
public:
    /// Largest supported field size. Full multiplication/inverse tables are
    /// precomputed; lookups dominate the cost profile of every construction.
    static constexpr int kMaxOrder = 256;

    /// Builds GF(p^m) with the canonical modulus.
    Field(int p, int m);

    /// Builds GF(p^m) with an explicit monic modulus given by its lower
    /// coefficients (c_0, ..., c_{m-1}); validated for irreducibility.
    Field(int p, int m, const std::vector<int>& modulus_low_coeffs);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }

    /// Lower coefficients of the monic modulus; empty when m = 1.
    const std::vector<int>& modulus() const { return modulus_; }
    /// Integer encoding sum(c_i * p^i) of the modulus' lower coefficients.
    int modulus_encoding() const;

    int add(int a, int b) const { check(a); check(b); return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { check(a); return neg_[a]; }
    int mul(int a, int b) const { check(a); check(b); return mul_[a * q_ + b]; }
    int inv(int a) const;              // error on a = 0
    int pow(int a, long long k) const; // k >= 0; pow(0,0) = 1 by convention

    /// The prime-subfield element congruent to v mod p. Used for integer
    /// constants in curve equations (e.g. the coefficient 27 in a
    /// discriminant) independent of characteristic.
    int from_int(long long v) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    void check(int a) const;
    void build_tables();

    int p_ = 0, m_ = 0, q_ = 0;
    std::vector<int> modulus_;          // c_0..c_{m-1}, leading 1 implicit
    std::vector<std::uint8_t> add_;     // q*q
    std::vector<std::uint8_t> mul_;     // q*q
    std::vector<std::uint8_t> neg_;     // q
    std::vector<std::uint8_t> inv_;     // q, entry 0 unused
};

bool is_prime(long long n);

/// Lower coefficients of the canonical degree-m monic irreducible over
/// GF(p): smallest integer encoding among all irreducibles.
std::vector<int> canonical_modulus(int p, int m);

/// Trial-division irreducibility test for a monic polynomial over GF(p),
/// given by its lower coefficients (degree = coeffs.size()).
bool is_irreducible_monic(int p, const std::vector<int>& low_coeffs);

/// Evaluates a polynomial (coeffs[0] + coeffs[1] x + ...) at x, in field.
int poly_eval(const Field& f, const std::vector<int>& coeffs, int x);

} // namespace cwc
