#include "cwc/field.hpp"

#include <stdexcept>

namespace cwc {

namespace {

// Polynomials over GF(p) as low-to-high coefficient vectors, trailing zeros
// trimmed. Enough machinery for trial-division irreducibility testing.

void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod_p(int a, int p) {
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}

// a mod b, b monic-normalized internally.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const int lead_inv = inv_mod_p(b[db], p);
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        const int c = a[da] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            int& t = a[da - db + i];
            t = ((t - c * b[i]) % p + p) % p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<int> decode_poly(long long enc, int p, int len) {
    std::vector<int> c(len);
    for (int i = 0; i < len; ++i) {
        c[i] = static_cast<int>(enc % p);
        enc /= p;
    }
    return c;
}

} // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_monic(int p, const std::vector<int>& low_coeffs) {
    const int m = static_cast<int>(low_coeffs.size());
    if (m == 0) return false;
    std::vector<int> f(low_coeffs);
    f.push_back(1);
    if (f[0] == 0) return m == 1; // divisible by x unless f = x itself
    // Trial division by every monic polynomial of degree 1..m/2.
    for (int dd = 1; 2 * dd <= m; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long enc = 0; enc < count; ++enc) {
            std::vector<int> g = decode_poly(enc, p, dd);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> canonical_modulus(int p, int m) {
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long enc = 0; enc < count; ++enc) {
        std::vector<int> c = decode_poly(enc, p, m);
        if (is_irreducible_monic(p, c)) return c;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

Field::Field(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
    if (m < 1) throw std::invalid_argument("field: m must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field: p^m exceeds cap 256");
    }
    q_ = static_cast<int>(q);
    if (m_ > 1) modulus_ = canonical_modulus(p_, m_);
    build_tables();
}

Field::Field(int p, int m, const std::vector<int>& modulus_low_coeffs) : Field(p, m) {
    if (m_ > 1) {
        if (static_cast<int>(modulus_low_coeffs.size()) != m_)
            throw std::invalid_argument("field: modulus must have m coefficients");
        for (int c : modulus_low_coeffs)
            if (c < 0 || c >= p_) throw std::invalid_argument("field: modulus coefficient out of range");
        if (!is_irreducible_monic(p_, modulus_low_coeffs))
            throw std::invalid_argument("field: modulus is reducible");
        modulus_ = modulus_low_coeffs;
        build_tables();
    } else if (!modulus_low_coeffs.empty()) {
        throw std::invalid_argument("field: prime field takes no modulus");
    }
}

int Field::modulus_encoding() const {
    int enc = 0;
    for (int i = m_ - 1; i >= 0; --i) enc = enc * p_ + (i < static_cast<int>(modulus_.size()) ? modulus_[i] : 0);
    return enc;
}

void Field::check(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("field: element index out of range");
}

void Field::build_tables() {
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    auto digits = [&](int a) { return decode_poly(a, p_, m_); };
    auto encode = [&](const std::vector<int>& c) {
        int e = 0;
        for (int i = m_ - 1; i >= 0; --i) e = e * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
        return e;
    };

    std::vector<int> mod_full;
    if (m_ > 1) {
        mod_full = modulus_;
        mod_full.push_back(1);
    }

    for (int a = 0; a < q_; ++a) {
        const std::vector<int> da = digits(a);
        for (int b = 0; b < q_; ++b) {
            const std::vector<int> db = digits(b);
            std::vector<int> s(m_);
            for (int i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint8_t>(encode(s));

            std::vector<int> prod(2 * m_ - 1, 0);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            if (m_ > 1) prod = poly_mod(prod, mod_full, p_);
            prod.resize(m_, 0);
            mul_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint8_t>(encode(prod));
        }
        std::vector<int> n(m_);
        for (int i = 0; i < m_; ++i) n[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<std::uint8_t>(encode(n));
    }

    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[static_cast<std::size_t>(a) * q_ + b] == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }
}

int Field::inv(int a) const {
    check(a);
    if (a == 0) throw std::domain_error("field: inv(0) is undefined");
    return inv_[a];
}

int Field::pow(int a, long long k) const {
    check(a);
    if (k < 0) throw std::invalid_argument("field: pow exponent must be >= 0");
    int r = 1;
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

int Field::from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
}

int poly_eval(const Field& f, const std::vector<int>& coeffs, int x) {
    int acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = f.add(f.mul(acc, x), coeffs[i]);
    return acc;
}

} // namespace cwc
