#include "argcsr/argcsr.hpp"

#include <algorithm>

namespace argcsr {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t chunk_filling(std::size_t nnz, std::size_t threads) {
    return nnz == 0 ? 0 : ceil_div(nnz, threads);
}

} // namespace

std::vector<RowSpan> partition_groups(const std::vector<std::size_t>& row_nnz,
                                      std::size_t threads_per_group,
                                      std::size_t desired_chunk_size) {
    if (threads_per_group == 0 || desired_chunk_size == 0) {
        throw ParameterError("partition_groups: threads_per_group and desired_chunk_size "
                             "must be at least 1");
    }
    if (row_nnz.empty()) {
        throw ParameterError("partition_groups: row_nnz must be nonempty");
    }

    const std::size_t budget = desired_chunk_size * threads_per_group;
    std::vector<RowSpan> spans;
    std::size_t start = 0;
    std::size_t count = 0;
    std::size_t elements = 0;
    for (std::size_t r = 0; r < row_nnz.size(); ++r) {
        if (count > 0 &&
            (count + 1 > threads_per_group || elements + row_nnz[r] > budget)) {
            spans.push_back({start, count});
            start = r;
            count = 0;
            elements = 0;
        }
        ++count;
        elements += row_nnz[r];
    }
    spans.push_back({start, count});
    return spans;
}

ThreadAssignment assign_threads(std::span<const std::size_t> row_nnz,
                                std::size_t threads_per_group) {
    if (threads_per_group == 0) {
        throw ParameterError("assign_threads: threads_per_group must be at least 1");
    }
    if (row_nnz.size() > threads_per_group) {
        throw ParameterError("assign_threads: " + std::to_string(row_nnz.size()) +
                             " rows exceed " + std::to_string(threads_per_group) +
                             " threads");
    }

    ThreadAssignment ta;
    ta.threads_per_row.assign(row_nnz.size(), 1);
    std::size_t spare = threads_per_group - row_nnz.size();

    while (spare > 0) {
        // Greatest-filling row whose filling one extra thread strictly
        // reduces; lowest index on ties.
        std::size_t best = row_nnz.size();
        std::size_t best_filling = 0;
        for (std::size_t r = 0; r < row_nnz.size(); ++r) {
            std::size_t filling = chunk_filling(row_nnz[r], ta.threads_per_row[r]);
            if (filling <= best_filling) continue;
            if (chunk_filling(row_nnz[r], ta.threads_per_row[r] + 1) < filling) {
                best = r;
                best_filling = filling;
            }
        }
        if (best == row_nnz.size()) break;
        ta.threads_per_row[best] += 1;
        --spare;
    }

    ta.chunk_size = 0;
    for (std::size_t r = 0; r < row_nnz.size(); ++r) {
        ta.chunk_size = std::max(ta.chunk_size,
                                 chunk_filling(row_nnz[r], ta.threads_per_row[r]));
    }
    ta.assigned_threads = threads_per_group - spare;
    ta.free_threads = spare;
    return ta;
}

GroupLayout layout_group(const CsrMatrix& A, RowSpan group,
                         const ThreadAssignment& ta,
                         std::size_t threads_per_group) {
    const std::size_t chunk_size = ta.chunk_size;
    GroupLayout out;
    out.values.assign(chunk_size * threads_per_group, 0.0);
    out.columns.assign(chunk_size * threads_per_group, kPaddingColumn);

    std::size_t chunk = 0;
    for (std::size_t local = 0; local < group.size; ++local) {
        const std::size_t row = group.first_row + local;
        const std::size_t n = A.row_pointers[row + 1] - A.row_pointers[row];
        const std::size_t t = ta.threads_per_row[local];
        // ceil/floor split, larger chunks first.
        const std::size_t base = n / t;
        const std::size_t extra = n % t;
        std::size_t k = A.row_pointers[row];
        for (std::size_t c = 0; c < t; ++c, ++chunk) {
            const std::size_t take = base + (c < extra ? 1 : 0);
            if (take > chunk_size) {
                throw InternalError("layout_group: chunk overflow in row " +
                                    std::to_string(row));
            }
            for (std::size_t j = 0; j < take; ++j, ++k) {
                out.values[j * threads_per_group + chunk] = A.values[k];
                out.columns[j * threads_per_group + chunk] = A.columns[k];
            }
        }
    }
    return out;
}

ArgCsrMatrix argcsr_from_csr(const CsrMatrix& A, std::size_t threads_per_group,
                             std::size_t desired_chunk_size) {
    const std::vector<std::size_t> counts = row_nnz(A);
    const std::vector<RowSpan> spans =
        partition_groups(counts, threads_per_group, desired_chunk_size);

    ArgCsrMatrix M;
    M.num_rows = A.num_rows;
    M.num_cols = A.num_cols;
    M.threads_per_group = threads_per_group;
    M.threads_mapping.assign(A.num_rows, 0);
    M.groups.reserve(spans.size());

    std::size_t offset = 0;
    for (const RowSpan& span : spans) {
        const std::span<const std::size_t> local(counts.data() + span.first_row, span.size);
        const ThreadAssignment ta = assign_threads(local, threads_per_group);

        std::size_t scan = 0;
        for (std::size_t r = 0; r < span.size; ++r) {
            scan += ta.threads_per_row[r];
            M.threads_mapping[span.first_row + r] = scan;  // inclusive
        }

        GroupLayout block = layout_group(A, span, ta, threads_per_group);
        M.values.insert(M.values.end(), block.values.begin(), block.values.end());
        M.columns.insert(M.columns.end(), block.columns.begin(), block.columns.end());

        M.groups.push_back({span.first_row, span.size, offset, ta.chunk_size});
        offset += ta.chunk_size * threads_per_group;
    }
    return M;
}

CsrMatrix csr_from_argcsr(const ArgCsrMatrix& M) {
    CsrMatrix A;
    A.num_rows = M.num_rows;
    A.num_cols = M.num_cols;
    A.row_pointers.assign(M.num_rows + 1, 0);
    for (const GroupInfo& g : M.groups) {
        for (std::size_t local = 0; local < g.size; ++local) {
            const std::size_t row = g.first_row + local;
            const std::size_t begin =
                local == 0 ? 0 : M.threads_mapping[row - 1];
            const std::size_t end = M.threads_mapping[row];
            for (std::size_t chunk = begin; chunk < end; ++chunk) {
                for (std::size_t j = 0; j < g.chunk_size; ++j) {
                    const std::size_t slot = g.offset + j * M.threads_per_group + chunk;
                    if (M.columns[slot] == kPaddingColumn) break;
                    A.values.push_back(M.values[slot]);
                    A.columns.push_back(M.columns[slot]);
                    A.row_pointers[row + 1] += 1;
                }
            }
        }
    }
    for (std::size_t r = 0; r < M.num_rows; ++r) {
        A.row_pointers[r + 1] += A.row_pointers[r];
    }
    return A;
}

void spmv_argcsr_groups(const ArgCsrMatrix& M, const DenseVector& x,
                        std::size_t group_begin, std::size_t group_end,
                        std::span<double> y) {
    std::vector<double> partials(M.threads_per_group);
    for (std::size_t gi = group_begin; gi < group_end; ++gi) {
        const GroupInfo& g = M.groups[gi];

        // Phase 1: one partial sum per chunk, stopping at the first sentinel.
        for (std::size_t t = 0; t < M.threads_per_group; ++t) {
            double sum = 0.0;
            std::size_t slot = g.offset + t;
            for (std::size_t j = 0; j < g.chunk_size; ++j) {
                const index_t col = M.columns[slot];
                if (col == kPaddingColumn) break;
                sum += M.values[slot] * x[static_cast<std::size_t>(col)];
                slot += M.threads_per_group;
            }
            partials[t] = sum;
        }

        // Phase 2: reduce each row's chunk range in ascending order.
        for (std::size_t local = 0; local < g.size; ++local) {
            const std::size_t row = g.first_row + local;
            const std::size_t begin = local == 0 ? 0 : M.threads_mapping[row - 1];
            const std::size_t end = M.threads_mapping[row];
            double sum = 0.0;
            for (std::size_t t = begin; t < end; ++t) {
                sum += partials[t];
            }
            y[row] = sum;
        }
    }
}

DenseVector spmv_argcsr(const ArgCsrMatrix& M, const DenseVector& x) {
    if (x.size() != M.num_cols) {
        throw DimensionError("spmv_argcsr: vector length " + std::to_string(x.size()) +
                             " does not match " + std::to_string(M.num_cols) + " columns");
    }
    DenseVector y(M.num_rows, 0.0);
    spmv_argcsr_groups(M, x, 0, M.groups.size(), y);
    return y;
}

std::vector<std::pair<double, index_t>> chunk_entries(const ArgCsrMatrix& M,
                                                      std::size_t group_index,
                                                      std::size_t chunk_index) {
    if (group_index >= M.groups.size()) {
        throw BoundsError("chunk_entries: group " + std::to_string(group_index) +
                          " out of range");
    }
    if (chunk_index >= M.threads_per_group) {
        throw BoundsError("chunk_entries: chunk " + std::to_string(chunk_index) +
                          " out of range");
    }
    const GroupInfo& g = M.groups[group_index];
    std::vector<std::pair<double, index_t>> out;
    std::size_t slot = g.offset + chunk_index;
    for (std::size_t j = 0; j < g.chunk_size; ++j) {
        if (M.columns[slot] == kPaddingColumn) break;
        out.emplace_back(M.values[slot], M.columns[slot]);
        slot += M.threads_per_group;
    }
    return out;
}

} // namespace argcsr
