#include "argcsr/core.hpp"

#include <algorithm>

namespace argcsr {

CsrMatrix csr_from_triplets(std::size_t num_rows, std::size_t num_cols,
                            std::vector<Triplet> entries) {
    if (num_rows == 0 || num_cols == 0) {
        throw DimensionError("csr_from_triplets: matrix dimensions must be at least 1x1");
    }
    for (const Triplet& t : entries) {
        if (t.row >= num_rows || t.col >= num_cols) {
            throw BoundsError("csr_from_triplets: entry (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ") outside " + std::to_string(num_rows) +
                              "x" + std::to_string(num_cols));
        }
    }

    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    CsrMatrix A;
    A.num_rows = num_rows;
    A.num_cols = num_cols;
    A.row_pointers.assign(num_rows + 1, 0);

    // Merge duplicates while counting per-row entries; explicit zeros stay.
    std::size_t i = 0;
    while (i < entries.size()) {
        double sum = entries[i].value;
        std::size_t j = i + 1;
        while (j < entries.size() && entries[j].row == entries[i].row &&
               entries[j].col == entries[i].col) {
            sum += entries[j].value;
            ++j;
        }
        A.values.push_back(sum);
        A.columns.push_back(static_cast<index_t>(entries[i].col));
        A.row_pointers[entries[i].row + 1] += 1;
        i = j;
    }
    for (std::size_t r = 0; r < num_rows; ++r) {
        A.row_pointers[r + 1] += A.row_pointers[r];
    }
    return A;
}

std::vector<Triplet> triplets_from_csr(const CsrMatrix& A) {
    std::vector<Triplet> out;
    out.reserve(A.nnz());
    for (std::size_t r = 0; r < A.num_rows; ++r) {
        for (std::size_t k = A.row_pointers[r]; k < A.row_pointers[r + 1]; ++k) {
            out.push_back({r, static_cast<std::size_t>(A.columns[k]), A.values[k]});
        }
    }
    return out;
}

void spmv_csr_rows(const CsrMatrix& A, const DenseVector& x,
                   std::size_t row_begin, std::size_t row_end,
                   std::span<double> y) {
    for (std::size_t r = row_begin; r < row_end; ++r) {
        double sum = 0.0;
        for (std::size_t k = A.row_pointers[r]; k < A.row_pointers[r + 1]; ++k) {
            sum += A.values[k] * x[static_cast<std::size_t>(A.columns[k])];
        }
        y[r] = sum;
    }
}

DenseVector spmv_csr(const CsrMatrix& A, const DenseVector& x) {
    if (x.size() != A.num_cols) {
        throw DimensionError("spmv_csr: vector length " + std::to_string(x.size()) +
                             " does not match " + std::to_string(A.num_cols) + " columns");
    }
    DenseVector y(A.num_rows, 0.0);
    spmv_csr_rows(A, x, 0, A.num_rows, y);
    return y;
}

std::vector<std::size_t> row_nnz(const CsrMatrix& A) {
    std::vector<std::size_t> counts(A.num_rows);
    for (std::size_t r = 0; r < A.num_rows; ++r) {
        counts[r] = A.row_pointers[r + 1] - A.row_pointers[r];
    }
    return counts;
}

} // namespace argcsr
