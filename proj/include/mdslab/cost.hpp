#pragma once

// The d-XOR implementation-cost metric: an element costs the number of
// ones in its m x m multiplication matrix over GF(2), minus m; a matrix
// adds n(n-1)*m bit-XORs for the n-1 word additions behind each output
// word. The lightest-matrix search streams an enumerator through the
// metric and keeps every minimizer.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "mdslab/enumerate.hpp"
#include "mdslab/matrix.hpp"

namespace mdslab {

// Binary matrix of multiplication by a fixed element: column j holds the
// polynomial-basis bits of a * x^j, so bits(a) * vec(b) = vec(a*b).
struct MultiplicationMatrix {
    unsigned m = 0;
    std::array<std::uint8_t, 8> cols{};  // cols[j] = bits of a * x^j

    unsigned popcount() const {
        unsigned ones = 0;
        for (unsigned j = 0; j < m; ++j) ones += static_cast<unsigned>(std::popcount(cols[j]));
        return ones;
    }
};

inline MultiplicationMatrix multiplication_matrix(const FieldContext& f, FieldElement a) {
    MultiplicationMatrix mat;
    mat.m = f.degree();
    for (unsigned j = 0; j < mat.m; ++j) {
        mat.cols[j] = f.mul(a, static_cast<FieldElement>(1u << j));
    }
    return mat;
}

// d-XOR count of one element; zero costs nothing by convention.
inline int dxor_element(const FieldContext& f, FieldElement a) {
    if (a == 0) return 0;
    return static_cast<int>(multiplication_matrix(f, a).popcount()) - static_cast<int>(f.degree());
}

struct DxorReport {
    std::size_t n = 0;
    std::vector<int> per_entry;  // n*n grid, row-major
    int addition_cost = 0;       // n(n-1)*m
    int total = 0;
};

inline DxorReport dxor_matrix(const SquareMatrix& mat) {
    const auto& f = mat.field();
    const std::size_t n = mat.order();
    DxorReport report;
    report.n = n;
    report.per_entry.reserve(n * n);
    int entry_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int c = dxor_element(f, mat(i, j));
            report.per_entry.push_back(c);
            entry_sum += c;
        }
    }
    report.addition_cost = static_cast<int>(n * (n - 1)) * static_cast<int>(f.degree());
    report.total = entry_sum + report.addition_cost;
    return report;
}

struct LightestSearchResult {
    int min_cost = 0;
    std::vector<SquareMatrix> matrices;  // all minimizers, sorted by free block
};

namespace detail {

// Sort key for order-4 orthogonal matrices: the 9-tuple (m11, ..., m33)
// of the free block.
inline std::array<FieldElement, 9> block_tuple(const SquareMatrix& m) {
    std::array<FieldElement, 9> t{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t[k++] = m(i, j);
    return t;
}

}  // namespace detail

// Global minimum d-XOR cost over a matrix class, with every matrix that
// attains it. Currently wired to the order-4 orthogonal MDS enumerator.
inline LightestSearchResult search_lightest(const FieldContext& f, std::size_t n = 4,
                                            MatrixClass cls = MatrixClass::orthogonal_mds,
                                            const EnumerateOptions& opts = {}) {
    if (n != 4 || cls != MatrixClass::orthogonal_mds) {
        throw std::invalid_argument("lightest search supports order-4 orthogonal MDS matrices");
    }
    // Element costs are looked up per entry; the table is tiny.
    std::array<int, 256> cost_of{};
    for (unsigned a = 0; a < f.order(); ++a) {
        cost_of[a] = dxor_element(f, static_cast<FieldElement>(a));
    }
    LightestSearchResult result;
    bool seen = false;
    const int add_cost = static_cast<int>(n * (n - 1)) * static_cast<int>(f.degree());
    enumerate_orthogonal_mds_4(f, opts, [&](const SquareMatrix& m) {
        int total = add_cost;
        for (FieldElement e : m.entries()) total += cost_of[e];
        if (!seen || total < result.min_cost) {
            seen = true;
            result.min_cost = total;
            result.matrices.clear();
        }
        if (total == result.min_cost) result.matrices.push_back(m);
    });
    std::sort(result.matrices.begin(), result.matrices.end(),
              [](const SquareMatrix& a, const SquareMatrix& b) {
                  return detail::block_tuple(a) < detail::block_tuple(b);
              });
    return result;
}

}  // namespace mdslab
