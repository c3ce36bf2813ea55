#pragma once

// The representative (all-ones first row and column) factorization
// M = D1 * M1 * D2 of matrices over the unit group, and the lifting
// constructions that turn suitable representatives into involutory or
// orthogonal matrices.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab {

struct PhiDecomposition {
    DiagonalMatrix d1;
    SquareMatrix m1;
    DiagonalMatrix d2;  // first entry fixed to 1
};

inline bool is_representative_form(const SquareMatrix& m) {
    for (std::size_t i = 0; i < m.order(); ++i)
        if (m(i, 0) != 1 || m(0, i) != 1) return false;
    return true;
}

// Unique factorization M = D1 * M1 * D2 with M1 in representative form and
// the first entry of D2 equal to 1. Defined only for matrices with no zero
// entry: d1_i = m_i1, d2_j = m_1j / m_11, m1_ij = m_ij * m_11 / (m_i1 * m_1j).
inline PhiDecomposition decompose_phi(const SquareMatrix& m) {
    const auto& f = m.field();
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) == 0) {
                throw MathDomainError("decomposition undefined: zero entry at (" +
                                      std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
            }
        }
    }
    std::vector<FieldElement> d1(n), d2(n);
    const FieldElement m00_inv = f.inv(m(0, 0));
    for (std::size_t i = 0; i < n; ++i) d1[i] = m(i, 0);
    for (std::size_t j = 0; j < n; ++j) d2[j] = f.mul(m(0, j), m00_inv);
    SquareMatrix m1(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        const FieldElement row_scale = f.mul(m(0, 0), f.inv(m(i, 0)));
        for (std::size_t j = 0; j < n; ++j) {
            m1(i, j) = f.mul(f.mul(m(i, j), row_scale), f.inv(m(0, j)));
        }
    }
    return PhiDecomposition{DiagonalMatrix(f, std::move(d1)), std::move(m1),
                            DiagonalMatrix(f, std::move(d2))};
}

inline SquareMatrix compose_phi(const PhiDecomposition& dec) {
    return sandwich(dec.d1, dec.m1, dec.d2);
}

namespace detail {

inline void require_representative(const SquareMatrix& m1) {
    if (!is_representative_form(m1)) {
        throw MathDomainError("matrix is not in representative form "
                              "(first row and column must be all ones)");
    }
}

}  // namespace detail

// The family of involutory matrices over one representative. Writing
// M2 = M1^-1 = (d_ij) and M1 = (c_ij), the representative lifts iff there
// are units alpha_i with d_ij = alpha_i * alpha_j * c_ij for all i, j; the
// alphas are forced (alpha_1 = sqrt(d_11), alpha_j = d_1j / alpha_1), so
// recovery is deterministic. Each choice of units (lambda_2, ..., lambda_n)
// then yields the distinct involutory matrix
//   Diag(alpha_1, lambda_2, ...) * M1 * Diag(1, alpha_2/lambda_2, ...).
class InvolutoryLiftFamily {
public:
    explicit InvolutoryLiftFamily(const SquareMatrix& m1) : m1_(m1), alpha_(m1.order()) {
        detail::require_representative(m1);
        const auto& f = m1.field();
        const std::size_t n = m1.order();
        const SquareMatrix m2 = inverse(m1);  // throws if singular
        const auto fail = [](std::size_t i, std::size_t j) {
            throw MathDomainError("representative does not lift: condition fails at (" +
                                  std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        };
        if (m2(0, 0) == 0) fail(0, 0);
        alpha_[0] = f.sqrt(m2(0, 0));
        for (std::size_t j = 1; j < n; ++j) {
            if (m2(0, j) == 0) fail(0, j);
            alpha_[j] = f.div(m2(0, j), alpha_[0]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (m2(i, j) != f.mul(f.mul(alpha_[i], alpha_[j]), m1(i, j))) fail(i, j);
            }
        }
    }

    const SquareMatrix& representative() const { return m1_; }
    std::span<const FieldElement> alpha() const { return alpha_; }

    // (2^m - 1)^(n-1) members, one per lambda tuple.
    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (std::size_t i = 1; i < m1_.order(); ++i) s *= m1_.field().unit_count();
        return s;
    }

    SquareMatrix member(std::span<const FieldElement> lambdas) const {
        const auto& f = m1_.field();
        const std::size_t n = m1_.order();
        if (lambdas.size() != n - 1) {
            throw std::invalid_argument("expected " + std::to_string(n - 1) + " lambda values");
        }
        std::vector<FieldElement> d1(n), d2(n);
        d1[0] = alpha_[0];
        d2[0] = 1;
        for (std::size_t i = 1; i < n; ++i) {
            if (lambdas[i - 1] == 0) throw MathDomainError("lambda values must be nonzero");
            d1[i] = lambdas[i - 1];
            d2[i] = f.div(alpha_[i], lambdas[i - 1]);
        }
        return sandwich(DiagonalMatrix(f, std::move(d1)), m1_, DiagonalMatrix(f, std::move(d2)));
    }

    // Streams every member in lexicographic lambda order (values 1..2^m-1
    // per slot) without materializing the family.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        const std::size_t n = m1_.order();
        const unsigned units = m1_.field().unit_count();
        std::vector<FieldElement> lambdas(n - 1, 1);
        for (;;) {
            fn(member(lambdas));
            std::size_t slot = n - 1;
            while (slot > 0) {
                --slot;
                if (lambdas[slot] < units) {
                    ++lambdas[slot];
                    break;
                }
                lambdas[slot] = 1;
                if (slot == 0) return;
            }
            if (n == 1) return;
        }
    }

private:
    SquareMatrix m1_;
    std::vector<FieldElement> alpha_;
};

inline SquareMatrix lift_involutory(const SquareMatrix& m1,
                                    std::span<const FieldElement> lambdas) {
    return InvolutoryLiftFamily(m1).member(lambdas);
}

// Unique orthogonal lift of a representative. With M2 = M1^-1 = (d_ij),
// requires M1^-T = D1^2 * M1 * D2^2 for D1 = Diag(sqrt(d_11), ..., sqrt(d_1n))
// and D2 = Diag(1, sqrt(d_21/d_11), ..., sqrt(d_n1/d_11)); the result
// D1 * M1 * D2 then satisfies M * M^T = I.
inline SquareMatrix lift_orthogonal(const SquareMatrix& m1) {
    detail::require_representative(m1);
    const auto& f = m1.field();
    const std::size_t n = m1.order();
    const SquareMatrix m2 = inverse(m1);
    const auto fail = [](const std::string& what) {
        throw MathDomainError("representative has no orthogonal lift: " + what);
    };
    if (m2(0, 0) == 0) fail("first entry of the inverse is zero");
    std::vector<FieldElement> d1(n), d2(n);
    const FieldElement d00_inv = f.inv(m2(0, 0));
    for (std::size_t j = 0; j < n; ++j) {
        if (m2(0, j) == 0 || m2(j, 0) == 0) fail("zero entry in first row/column of the inverse");
        d1[j] = f.sqrt(m2(0, j));
        d2[j] = f.sqrt(f.mul(m2(j, 0), d00_inv));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const FieldElement lhs = m2(j, i);  // (M1^-T)_ij
            const FieldElement rhs =
                f.mul(f.mul(f.mul(d1[i], d1[i]), m1(i, j)), f.mul(d2[j], d2[j]));
            if (lhs != rhs) {
                fail("verification fails at (" + std::to_string(i + 1) + ", " +
                     std::to_string(j + 1) + ")");
            }
        }
    }
    return sandwich(DiagonalMatrix(f, std::move(d1)), m1, DiagonalMatrix(f, std::move(d2)));
}

}  // namespace mdslab
