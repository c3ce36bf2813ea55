#pragma once

// Decision procedures for the structural matrix properties, with witness
// recovery for the semi-properties. A semi-involutory witness is a pair of
// non-singular diagonal matrices (D, D') with M^-1 = D*M*D'; semi-orthogonal
// replaces M^-1 by M^-T.

#include <cstddef>
#include <optional>
#include <queue>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab {

enum class Property {
    mds,
    involutory,
    orthogonal,
    semi_involutory,
    semi_orthogonal,
    symmetric,
};

struct DiagonalPair {
    DiagonalMatrix d;
    DiagonalMatrix d_prime;
};

struct PropertyReport {
    Property property;
    bool holds = false;
    std::optional<DiagonalPair> witness;  // semi-properties only
};

inline bool is_involutory(const SquareMatrix& m) { return (m * m).is_identity(); }

inline bool is_orthogonal(const SquareMatrix& m) { return (m * m.transpose()).is_identity(); }

inline bool is_symmetric(const SquareMatrix& m) {
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = i + 1; j < m.order(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

namespace detail {

// Find diagonal scales (alpha, beta) with n_ij = alpha_i * m_ij * beta_j,
// or nothing. Requires equal zero patterns. The support graph (rows and
// columns as nodes, an edge per nonzero cell) is traversed breadth-first;
// the first column seen in each connected component is pinned to beta = 1,
// so the witness is canonical: beta_1 = 1 in particular. Every assignment
// is re-verified against every edge before acceptance.
inline std::optional<DiagonalPair> diagonal_ratio_witness(const SquareMatrix& m,
                                                          const SquareMatrix& target) {
    const auto& f = m.field();
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((m(i, j) == 0) != (target(i, j) == 0)) return std::nullopt;

    std::vector<FieldElement> alpha(n, 0), beta(n, 0);
    std::vector<bool> row_set(n, false), col_set(n, false);
    // queue holds (is_row, index)
    std::queue<std::pair<bool, std::size_t>> pending;

    const auto ratio = [&](std::size_t i, std::size_t j) {
        return f.div(target(i, j), m(i, j));
    };

    for (std::size_t seed = 0; seed < n; ++seed) {
        if (col_set[seed]) continue;
        beta[seed] = 1;
        col_set[seed] = true;
        pending.emplace(false, seed);
        while (!pending.empty()) {
            auto [is_row, idx] = pending.front();
            pending.pop();
            if (is_row) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (m(idx, j) == 0 || col_set[j]) continue;
                    beta[j] = f.div(ratio(idx, j), alpha[idx]);
                    col_set[j] = true;
                    pending.emplace(false, j);
                }
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    if (m(i, idx) == 0 || row_set[i]) continue;
                    alpha[i] = f.div(ratio(i, idx), beta[idx]);
                    row_set[i] = true;
                    pending.emplace(true, i);
                }
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!row_set[i]) return std::nullopt;  // unreachable for nonsingular m
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) == 0) continue;
            if (f.mul(alpha[i], beta[j]) != ratio(i, j)) return std::nullopt;
        }
    }
    return DiagonalPair{DiagonalMatrix(f, std::move(alpha)), DiagonalMatrix(f, std::move(beta))};
}

}  // namespace detail

// Witness (D, D') with inverse(M) = D*M*D', if one exists. Throws
// MathDomainError when M is singular.
inline std::optional<DiagonalPair> semi_involutory_witness(const SquareMatrix& m) {
    return detail::diagonal_ratio_witness(m, inverse(m));
}

// Witness (D, D') with transpose(inverse(M)) = D*M*D', if one exists.
inline std::optional<DiagonalPair> semi_orthogonal_witness(const SquareMatrix& m) {
    return detail::diagonal_ratio_witness(m, inverse(m).transpose());
}

inline bool verify_semi_involutory(const SquareMatrix& m, const DiagonalPair& w) {
    return w.d.is_nonsingular() && w.d_prime.is_nonsingular() &&
           inverse(m) == sandwich(w.d, m, w.d_prime);
}

inline bool verify_semi_orthogonal(const SquareMatrix& m, const DiagonalPair& w) {
    return w.d.is_nonsingular() && w.d_prime.is_nonsingular() &&
           inverse(m).transpose() == sandwich(w.d, m, w.d_prime);
}

inline PropertyReport check_property(const SquareMatrix& m, Property p) {
    PropertyReport report{p, false, std::nullopt};
    switch (p) {
        case Property::mds:
            report.holds = is_mds(m);
            break;
        case Property::involutory:
            report.holds = is_involutory(m);
            break;
        case Property::orthogonal:
            report.holds = is_orthogonal(m);
            break;
        case Property::semi_involutory:
            report.witness = semi_involutory_witness(m);
            report.holds = report.witness.has_value();
            break;
        case Property::semi_orthogonal:
            report.witness = semi_orthogonal_witness(m);
            report.holds = report.witness.has_value();
            break;
        case Property::symmetric:
            report.holds = is_symmetric(m);
            break;
    }
    return report;
}

}  // namespace mdslab
