#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "argcsr/core.hpp"

namespace argcsr {

/// A contiguous run of rows sharing one chunk size.
struct RowSpan {
    std::size_t first_row = 0;
    std::size_t size = 0;

    bool operator==(const RowSpan&) const = default;
};

/// Group descriptor. The group covers rows [first_row, first_row + size) and
/// owns chunk_size * threads_per_group consecutive slots starting at
/// `offset` in the values/columns arrays.
struct GroupInfo {
    std::size_t first_row = 0;
    std::size_t size = 0;
    std::size_t offset = 0;
    std::size_t chunk_size = 0;

    bool operator==(const GroupInfo&) const = default;
};

/// Result of distributing a group's threads over its rows.
///
/// Every row holds at least one thread; chunk_size is the largest chunk
/// filling ceil(row nnz / row threads) over the group. Threads that could
/// not reduce any row's filling stay free.
struct ThreadAssignment {
    std::vector<std::size_t> threads_per_row;
    std::size_t chunk_size = 0;
    std::size_t assigned_threads = 0;
    std::size_t free_threads = 0;
};

/// Adaptive row-grouped CSR. Rows are partitioned into groups; each group's
/// elements are split into exactly `threads_per_group` equal-size chunks
/// stored columnwise: element j of chunk t in group g sits at flat position
/// g.offset + j * threads_per_group + t. A chunk holds elements of exactly
/// one row, real entries precede the kPaddingColumn sentinels, and a row's
/// chunks are consecutive. threads_mapping holds the per-group inclusive
/// prefix scan of threads per row, so row r of group g reads its chunk range
/// as [r == first ? 0 : threads_mapping[r-1], threads_mapping[r]).
struct ArgCsrMatrix {
    std::size_t num_rows = 0;
    std::size_t num_cols = 0;
    std::size_t threads_per_group = 0;
    std::vector<GroupInfo> groups;
    std::vector<double> values;
    std::vector<index_t> columns;
    std::vector<std::size_t> threads_mapping;

    std::size_t total_slots() const { return values.size(); }
    bool operator==(const ArgCsrMatrix&) const = default;
};

inline constexpr std::size_t kDefaultThreadsPerGroup = 128;
inline constexpr std::size_t kDefaultDesiredChunkSize = 1;

/// Greedily tiles the row range into groups. A group closes when adding the
/// next row would exceed either threads_per_group rows or the element budget
/// desired_chunk_size * threads_per_group; the overflowing row starts the
/// next group. A single row bigger than the whole budget becomes a group of
/// its own.
std::vector<RowSpan> partition_groups(const std::vector<std::size_t>& row_nnz,
                                      std::size_t threads_per_group,
                                      std::size_t desired_chunk_size);

/// Maps a group's threads to its rows: one thread per row to start, then
/// one thread at a time to the row with the greatest chunk filling
/// ceil(nnz / threads), lowest row index on ties, as long as the extra
/// thread strictly reduces that row's filling. Rows it cannot improve leave
/// the remaining threads free.
ThreadAssignment assign_threads(std::span<const std::size_t> row_nnz,
                                std::size_t threads_per_group);

/// One group's slot block, chunk_size * threads_per_group entries.
struct GroupLayout {
    std::vector<double> values;
    std::vector<index_t> columns;
};

/// Copies a group's elements chunkwise out of CSR into the columnwise block.
/// A row with n elements and t threads fills its t chunks left to right with
/// ceil(n/t) then floor(n/t) elements, so sentinels are trailing in every
/// chunk. Free threads' chunks are entirely sentinel.
GroupLayout layout_group(const CsrMatrix& A, RowSpan group,
                         const ThreadAssignment& ta,
                         std::size_t threads_per_group);

/// Full conversion pipeline: partition, per-group thread assignment,
/// inclusive prefix scan into threads_mapping, chunkwise copy. Lossless.
ArgCsrMatrix argcsr_from_csr(const CsrMatrix& A,
                             std::size_t threads_per_group = kDefaultThreadsPerGroup,
                             std::size_t desired_chunk_size = kDefaultDesiredChunkSize);

/// Lossless extraction back to CSR; round-trips exactly.
CsrMatrix csr_from_argcsr(const ArgCsrMatrix& M);

/// Two-phase SpMV: per-chunk partial sums (stopping at the first sentinel),
/// then per row the sum of its partials in ascending chunk order.
DenseVector spmv_argcsr(const ArgCsrMatrix& M, const DenseVector& x);

/// Group-range kernel for partitioned execution; bit-identical to the full
/// call for any partitioning.
void spmv_argcsr_groups(const ArgCsrMatrix& M, const DenseVector& x,
                        std::size_t group_begin, std::size_t group_end,
                        std::span<double> y);

/// The non-sentinel entries of one chunk in storage order.
std::vector<std::pair<double, index_t>> chunk_entries(const ArgCsrMatrix& M,
                                                      std::size_t group_index,
                                                      std::size_t chunk_index);

} // namespace argcsr
