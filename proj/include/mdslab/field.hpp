#pragma once

// Arithmetic in GF(2^m), 2 <= m <= 8, over a user-selected irreducible
// polynomial. Elements are m-bit integers in the polynomial basis
// (bit i = coefficient of x^i); addition is XOR. Multiplication and
// inversion go through log/antilog tables built at construction.

#include <array>
#include <cstdint>
#include <cstdio>
#include <string>

#include "mdslab/errors.hpp"

namespace mdslab {

using FieldElement = std::uint8_t;

namespace gf2x {

// Polynomials over GF(2) packed into unsigned ints, bit i = coeff of x^i.

inline int degree(unsigned p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

inline unsigned mod(unsigned a, unsigned p) {
    const int dp = degree(p);
    for (int da = degree(a); da >= dp; da = degree(a)) {
        a ^= p << (da - dp);
    }
    return a;
}

inline unsigned mul_mod(unsigned a, unsigned b, unsigned p) {
    unsigned acc = 0;
    while (b) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
    }
    return mod(acc, p);
}

// Exhaustive trial division by every polynomial of degree 1..deg(p)/2.
inline bool is_irreducible(unsigned p) {
    const int d = degree(p);
    if (d < 1) return false;
    for (unsigned q = 2; degree(q) <= d / 2; ++q) {
        if (mod(p, q) == 0) return false;
    }
    return true;
}

}  // namespace gf2x

class FieldContext {
public:
    FieldContext(unsigned degree, unsigned poly) : m_(degree), poly_(poly) {
        if (m_ < 2 || m_ > 8) {
            throw std::invalid_argument("field degree must be in [2, 8], got " +
                                        std::to_string(m_));
        }
        if (gf2x::degree(poly_) != static_cast<int>(m_) || !gf2x::is_irreducible(poly_)) {
            throw std::invalid_argument("polynomial " + poly_string(poly_) +
                                        " is not irreducible of degree " + std::to_string(m_));
        }
        build_tables();
    }

    static unsigned default_poly(unsigned degree) {
        if (degree < 2 || degree > 8) {
            throw std::invalid_argument("field degree must be in [2, 8], got " +
                                        std::to_string(degree));
        }
        // Smallest irreducible of the given degree by integer value.
        for (unsigned p = 1u << degree;; ++p) {
            if (gf2x::is_irreducible(p)) return p;
        }
    }

    static FieldContext with_default_poly(unsigned degree) {
        return FieldContext(degree, default_poly(degree));
    }

    unsigned degree() const { return m_; }
    unsigned poly() const { return poly_; }
    // Number of field elements, 2^m.
    unsigned order() const { return 1u << m_; }
    // Number of nonzero elements, 2^m - 1.
    unsigned unit_count() const { return (1u << m_) - 1; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    FieldElement inv(FieldElement a) const {
        if (a == 0) throw MathDomainError("division by zero in GF(2^" + std::to_string(m_) + ")");
        return exp_[unit_count() - log_[a]];
    }

    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    // Square root; total because squaring is the Frobenius bijection.
    FieldElement sqrt(FieldElement a) const {
        if (a == 0) return 0;
        const unsigned n = unit_count();
        return exp_[(static_cast<unsigned>(log_[a]) << (m_ - 1)) % n];
    }

    bool operator==(const FieldContext& o) const { return m_ == o.m_ && poly_ == o.poly_; }
    bool operator!=(const FieldContext& o) const { return !(*this == o); }

    static std::string poly_string(unsigned poly) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "0x%x", poly);
        return buf;
    }

private:
    void build_tables() {
        const unsigned n = unit_count();
        // Find a generator of the multiplicative group.
        unsigned gen = 0;
        for (unsigned g = 2; g < order(); ++g) {
            unsigned x = g, ord = 1;
            while (x != 1) {
                x = gf2x::mul_mod(x, g, poly_);
                ++ord;
            }
            if (ord == n) {
                gen = g;
                break;
            }
        }
        unsigned x = 1;
        for (unsigned e = 0; e < n; ++e) {
            exp_[e] = static_cast<FieldElement>(x);
            exp_[e + n] = static_cast<FieldElement>(x);
            log_[x] = static_cast<std::uint8_t>(e);
            x = gf2x::mul_mod(x, gen, poly_);
        }
    }

    unsigned m_;
    unsigned poly_;
    std::array<std::uint8_t, 256> log_{};
    std::array<FieldElement, 512> exp_{};
};

}  // namespace mdslab
