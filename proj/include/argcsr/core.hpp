#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "argcsr/errors.hpp"

namespace argcsr {

using index_t = std::int32_t;

/// Column sentinel marking a padding slot in the slotted formats.
inline constexpr index_t kPaddingColumn = -1;

/// One matrix entry staged for CSR assembly. 0-based indexes.
struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;
};

/// Compressed sparse rows. Nonzeros are stored rowwise; `columns[k]` is the
/// column of `values[k]` and row i owns the half-open range
/// [row_pointers[i], row_pointers[i+1]).
///
/// Invariants: row_pointers[0] == 0, row_pointers non-decreasing,
/// row_pointers[num_rows] == nnz, and column indexes strictly increase
/// within each row.
struct CsrMatrix {
    std::size_t num_rows = 0;
    std::size_t num_cols = 0;
    std::vector<double> values;
    std::vector<index_t> columns;
    std::vector<std::size_t> row_pointers;

    std::size_t nnz() const { return values.size(); }

    bool operator==(const CsrMatrix&) const = default;
};

using DenseVector = std::vector<double>;

/// Builds a CSR matrix from unordered triplets. Duplicate (row, col) pairs
/// are summed; explicit zeros are kept as stored elements. Columns end up
/// sorted ascending within each row.
CsrMatrix csr_from_triplets(std::size_t num_rows, std::size_t num_cols,
                            std::vector<Triplet> entries);

/// Extracts the stored entries in row-major order. Inverse of
/// csr_from_triplets on normalized input.
std::vector<Triplet> triplets_from_csr(const CsrMatrix& A);

/// y = A * x with a fixed summation order (ascending element index within
/// each row). The correctness reference for every other format.
DenseVector spmv_csr(const CsrMatrix& A, const DenseVector& x);

/// Row-range kernel backing spmv_csr; writes y[row_begin, row_end) only.
/// Summation order is identical to the full call, so partitioned parallel
/// execution produces bit-identical output.
void spmv_csr_rows(const CsrMatrix& A, const DenseVector& x,
                   std::size_t row_begin, std::size_t row_end,
                   std::span<double> y);

/// Per-row stored-element counts: result[i] = row_pointers[i+1] - row_pointers[i].
std::vector<std::size_t> row_nnz(const CsrMatrix& A);

} // namespace argcsr
