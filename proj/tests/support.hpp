#pragma once

#include "argcsr/core.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using argcsr::CsrMatrix;
using argcsr::DenseVector;
using argcsr::Triplet;

// Brute-force reference product over a dense copy of the matrix.
inline DenseVector dense_spmv(const CsrMatrix& A, const DenseVector& x) {
    std::vector<double> dense(A.num_rows * A.num_cols, 0.0);
    for (std::size_t r = 0; r < A.num_rows; ++r) {
        for (std::size_t k = A.row_pointers[r]; k < A.row_pointers[r + 1]; ++k) {
            dense[r * A.num_cols + static_cast<std::size_t>(A.columns[k])] += A.values[k];
        }
    }
    DenseVector y(A.num_rows, 0.0);
    for (std::size_t r = 0; r < A.num_rows; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < A.num_cols; ++c) {
            sum += dense[r * A.num_cols + c] * x[c];
        }
        y[r] = sum;
    }
    return y;
}

inline double rel_error(const DenseVector& y, const DenseVector& y_ref) {
    double max_diff = 0.0;
    double max_ref = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(y[i] - y_ref[i]));
        max_ref = std::max(max_ref, std::abs(y_ref[i]));
    }
    return max_diff / std::max(max_ref, 1.0);
}

// 8x8 fixture: rows 0..6 hold one diagonal 1.0, row 7 is full of 1.0.
inline CsrMatrix e8_matrix() {
    std::vector<Triplet> ts;
    for (std::size_t r = 0; r < 7; ++r) ts.push_back({r, r, 1.0});
    for (std::size_t c = 0; c < 8; ++c) ts.push_back({7, c, 1.0});
    return argcsr::csr_from_triplets(8, 8, std::move(ts));
}

// Skew family: one full row followed by k single-entry rows, (k+1)x(k+1).
inline CsrMatrix skew_matrix(std::size_t k) {
    const std::size_t n = k + 1;
    std::vector<Triplet> ts;
    for (std::size_t c = 0; c < n; ++c) ts.push_back({0, c, 1.0 + 0.25 * double(c)});
    for (std::size_t r = 1; r < n; ++r) ts.push_back({r, r, 2.0});
    return argcsr::csr_from_triplets(n, n, std::move(ts));
}

// Uniform matrix: `rows` rows with exactly nnz_per_row entries each.
inline CsrMatrix uniform_matrix(std::size_t rows, std::size_t cols,
                                std::size_t nnz_per_row) {
    std::vector<Triplet> ts;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < nnz_per_row; ++i) {
            ts.push_back({r, (r + i * 7) % cols, 1.0 + 0.5 * double(i)});
        }
    }
    return argcsr::csr_from_triplets(rows, cols, std::move(ts));
}

inline DenseVector probe_vector(std::size_t n, std::uint32_t salt = 0) {
    DenseVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = 1.0 + 0.0625 * static_cast<double>((j + salt) % 17) -
               0.25 * static_cast<double>(j % 3);
    }
    return x;
}

// Deterministic random corpus: sizes 1..200, densities 0.5%..50%, plus
// forced empty rows, full rows, single-column shapes, and one all-zero
// matrix. Same seed, same corpus.
inline std::vector<CsrMatrix> build_corpus(std::size_t count,
                                           std::uint32_t seed = 20260822u) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, 200);
    std::uniform_real_distribution<double> density_dist(0.005, 0.5);
    std::uniform_real_distribution<double> value_dist(-1.0, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<CsrMatrix> corpus;
    corpus.reserve(count);
    corpus.push_back(argcsr::csr_from_triplets(3, 3, {}));  // all-zero
    while (corpus.size() < count) {
        const std::size_t idx = corpus.size();
        std::size_t rows = size_dist(rng);
        std::size_t cols = idx % 13 == 0 ? 1 : size_dist(rng);
        const double density = density_dist(rng);

        std::vector<Triplet> ts;
        for (std::size_t r = 0; r < rows; ++r) {
            if (idx % 7 == 0 && r % 5 == 0) continue;  // forced empty rows
            if (idx % 11 == 0 && r == rows / 2) {      // forced full row
                for (std::size_t c = 0; c < cols; ++c) {
                    ts.push_back({r, c, value_dist(rng)});
                }
                continue;
            }
            for (std::size_t c = 0; c < cols; ++c) {
                if (coin(rng) < density) ts.push_back({r, c, value_dist(rng)});
            }
        }
        corpus.push_back(argcsr::csr_from_triplets(rows, cols, std::move(ts)));
    }
    return corpus;
}

} // namespace testsupport
