#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "argcsr/core.hpp"

namespace argcsr {

/// ELLPACK storage: every row gets `width` slots (width = max row nnz),
/// stored columnwise so that slot j of row r sits at flat position
/// j * num_rows + r. Short rows are padded with trailing artificial zeros
/// (value 0.0, column kPaddingColumn).
struct EllpackMatrix {
    std::size_t num_rows = 0;
    std::size_t num_cols = 0;
    std::size_t width = 0;
    std::vector<double> values;
    std::vector<index_t> columns;

    std::size_t total_slots() const { return values.size(); }
    bool operator==(const EllpackMatrix&) const = default;
};

/// Sliced ELLPACK: consecutive `slice_size`-row slices, each stored as an
/// independent columnwise block with its own width. The last slice may be
/// ragged and keeps its true row count as stride. Slot j of local row r in
/// slice s sits at slice_offsets[s] + j * rows_in_slice + r.
struct SlicedEllpackMatrix {
    std::size_t num_rows = 0;
    std::size_t num_cols = 0;
    std::size_t slice_size = 0;
    std::vector<std::size_t> slice_widths;
    std::vector<std::size_t> slice_offsets;  // exclusive prefix sums of width * rows
    std::vector<double> values;
    std::vector<index_t> columns;

    std::size_t num_slices() const { return slice_widths.size(); }
    std::size_t rows_in_slice(std::size_t s) const {
        std::size_t first = s * slice_size;
        std::size_t last = first + slice_size;
        return (last > num_rows ? num_rows : last) - first;
    }
    std::size_t total_slots() const { return values.size(); }
    bool operator==(const SlicedEllpackMatrix&) const = default;
};

inline constexpr std::size_t kDefaultSliceSize = 32;  // warp width

EllpackMatrix ellpack_from_csr(const CsrMatrix& A);

SlicedEllpackMatrix sliced_from_csr(const CsrMatrix& A,
                                    std::size_t slice_size = kDefaultSliceSize);

/// Lossless extraction back to CSR; round-trips exactly.
CsrMatrix csr_from_ellpack(const EllpackMatrix& M);
CsrMatrix csr_from_sliced(const SlicedEllpackMatrix& M);

DenseVector spmv_ellpack(const EllpackMatrix& M, const DenseVector& x);
DenseVector spmv_sliced(const SlicedEllpackMatrix& M, const DenseVector& x);

/// Range kernels for partitioned execution; bit-identical to the full calls.
void spmv_ellpack_rows(const EllpackMatrix& M, const DenseVector& x,
                       std::size_t row_begin, std::size_t row_end,
                       std::span<double> y);
void spmv_sliced_slices(const SlicedEllpackMatrix& M, const DenseVector& x,
                        std::size_t slice_begin, std::size_t slice_end,
                        std::span<double> y);

} // namespace argcsr
