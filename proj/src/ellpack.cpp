#include "argcsr/ellpack.hpp"

#include <algorithm>

namespace argcsr {

EllpackMatrix ellpack_from_csr(const CsrMatrix& A) {
    EllpackMatrix M;
    M.num_rows = A.num_rows;
    M.num_cols = A.num_cols;
    std::size_t width = 0;
    for (std::size_t r = 0; r < A.num_rows; ++r) {
        width = std::max(width, A.row_pointers[r + 1] - A.row_pointers[r]);
    }
    M.width = width;
    M.values.assign(A.num_rows * width, 0.0);
    M.columns.assign(A.num_rows * width, kPaddingColumn);
    for (std::size_t r = 0; r < A.num_rows; ++r) {
        std::size_t j = 0;
        for (std::size_t k = A.row_pointers[r]; k < A.row_pointers[r + 1]; ++k, ++j) {
            M.values[j * A.num_rows + r] = A.values[k];
            M.columns[j * A.num_rows + r] = A.columns[k];
        }
    }
    return M;
}

SlicedEllpackMatrix sliced_from_csr(const CsrMatrix& A, std::size_t slice_size) {
    if (slice_size == 0) {
        throw ParameterError("sliced_from_csr: slice_size must be at least 1");
    }
    SlicedEllpackMatrix M;
    M.num_rows = A.num_rows;
    M.num_cols = A.num_cols;
    M.slice_size = slice_size;

    std::size_t num_slices = (A.num_rows + slice_size - 1) / slice_size;
    M.slice_widths.resize(num_slices);
    M.slice_offsets.resize(num_slices);
    std::size_t offset = 0;
    for (std::size_t s = 0; s < num_slices; ++s) {
        std::size_t first = s * slice_size;
        std::size_t rows = M.rows_in_slice(s);
        std::size_t width = 0;
        for (std::size_t r = first; r < first + rows; ++r) {
            width = std::max(width, A.row_pointers[r + 1] - A.row_pointers[r]);
        }
        M.slice_widths[s] = width;
        M.slice_offsets[s] = offset;
        offset += width * rows;
    }
    M.values.assign(offset, 0.0);
    M.columns.assign(offset, kPaddingColumn);
    for (std::size_t s = 0; s < num_slices; ++s) {
        std::size_t first = s * slice_size;
        std::size_t rows = M.rows_in_slice(s);
        for (std::size_t local = 0; local < rows; ++local) {
            std::size_t r = first + local;
            std::size_t j = 0;
            for (std::size_t k = A.row_pointers[r]; k < A.row_pointers[r + 1]; ++k, ++j) {
                std::size_t slot = M.slice_offsets[s] + j * rows + local;
                M.values[slot] = A.values[k];
                M.columns[slot] = A.columns[k];
            }
        }
    }
    return M;
}

CsrMatrix csr_from_ellpack(const EllpackMatrix& M) {
    CsrMatrix A;
    A.num_rows = M.num_rows;
    A.num_cols = M.num_cols;
    A.row_pointers.assign(M.num_rows + 1, 0);
    for (std::size_t r = 0; r < M.num_rows; ++r) {
        for (std::size_t j = 0; j < M.width; ++j) {
            index_t col = M.columns[j * M.num_rows + r];
            if (col == kPaddingColumn) break;  // padding is trailing
            A.values.push_back(M.values[j * M.num_rows + r]);
            A.columns.push_back(col);
            A.row_pointers[r + 1] += 1;
        }
    }
    for (std::size_t r = 0; r < M.num_rows; ++r) {
        A.row_pointers[r + 1] += A.row_pointers[r];
    }
    return A;
}

CsrMatrix csr_from_sliced(const SlicedEllpackMatrix& M) {
    CsrMatrix A;
    A.num_rows = M.num_rows;
    A.num_cols = M.num_cols;
    A.row_pointers.assign(M.num_rows + 1, 0);
    for (std::size_t s = 0; s < M.num_slices(); ++s) {
        std::size_t first = s * M.slice_size;
        std::size_t rows = M.rows_in_slice(s);
        for (std::size_t local = 0; local < rows; ++local) {
            for (std::size_t j = 0; j < M.slice_widths[s]; ++j) {
                std::size_t slot = M.slice_offsets[s] + j * rows + local;
                index_t col = M.columns[slot];
                if (col == kPaddingColumn) break;
                A.values.push_back(M.values[slot]);
                A.columns.push_back(col);
                A.row_pointers[first + local + 1] += 1;
            }
        }
    }
    for (std::size_t r = 0; r < M.num_rows; ++r) {
        A.row_pointers[r + 1] += A.row_pointers[r];
    }
    return A;
}

void spmv_ellpack_rows(const EllpackMatrix& M, const DenseVector& x,
                       std::size_t row_begin, std::size_t row_end,
                       std::span<double> y) {
    for (std::size_t r = row_begin; r < row_end; ++r) {
        double sum = 0.0;
        for (std::size_t j = 0; j < M.width; ++j) {
            index_t col = M.columns[j * M.num_rows + r];
            if (col == kPaddingColumn) break;
            sum += M.values[j * M.num_rows + r] * x[static_cast<std::size_t>(col)];
        }
        y[r] = sum;
    }
}

DenseVector spmv_ellpack(const EllpackMatrix& M, const DenseVector& x) {
    if (x.size() != M.num_cols) {
        throw DimensionError("spmv_ellpack: vector length " + std::to_string(x.size()) +
                             " does not match " + std::to_string(M.num_cols) + " columns");
    }
    DenseVector y(M.num_rows, 0.0);
    spmv_ellpack_rows(M, x, 0, M.num_rows, y);
    return y;
}

void spmv_sliced_slices(const SlicedEllpackMatrix& M, const DenseVector& x,
                        std::size_t slice_begin, std::size_t slice_end,
                        std::span<double> y) {
    for (std::size_t s = slice_begin; s < slice_end; ++s) {
        std::size_t first = s * M.slice_size;
        std::size_t rows = M.rows_in_slice(s);
        for (std::size_t local = 0; local < rows; ++local) {
            double sum = 0.0;
            for (std::size_t j = 0; j < M.slice_widths[s]; ++j) {
                index_t col = M.columns[M.slice_offsets[s] + j * rows + local];
                if (col == kPaddingColumn) break;
                sum += M.values[M.slice_offsets[s] + j * rows + local] *
                       x[static_cast<std::size_t>(col)];
            }
            y[first + local] = sum;
        }
    }
}

DenseVector spmv_sliced(const SlicedEllpackMatrix& M, const DenseVector& x) {
    if (x.size() != M.num_cols) {
        throw DimensionError("spmv_sliced: vector length " + std::to_string(x.size()) +
                             " does not match " + std::to_string(M.num_cols) + " columns");
    }
    DenseVector y(M.num_rows, 0.0);
    spmv_sliced_slices(M, x, 0, M.num_slices(), y);
    return y;
}

} // namespace argcsr
