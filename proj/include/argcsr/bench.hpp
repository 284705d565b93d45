#pragma once

#include "argcsr/analysis.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace argcsr {

enum class FormatKind { csr, ellpack, sliced, argcsr };

std::string format_name(FormatKind kind);
FormatKind parse_format(std::string_view name);  // ParameterError on unknown name

/// Conversion parameters carried by every record; formats ignore the ones
/// that do not apply to them.
struct BenchParams {
    std::size_t threads_per_group = kDefaultThreadsPerGroup;
    std::size_t desired_chunk_size = kDefaultDesiredChunkSize;
    std::size_t slice_size = kDefaultSliceSize;
};

/// One timed format on one matrix. time_s is the median timed iteration;
/// conversion_s is the one-off format conversion, kept out of time_s.
struct BenchRecord {
    std::string matrix_name;
    FormatKind format = FormatKind::csr;
    BenchParams params;
    double time_s = 0.0;
    double conversion_s = 0.0;
    double gflops = 0.0;
    double speedup_vs_csr = 1.0;
    std::size_t nnz = 0;
    FormatStats stats;
};

struct BenchOptions {
    std::vector<FormatKind> formats = {FormatKind::csr, FormatKind::ellpack,
                                       FormatKind::sliced, FormatKind::argcsr};
    BenchParams params;
    std::size_t iterations = 20;
    std::size_t warmup = 3;
    std::size_t workers = 1;
};

/// maxAbsDiff / max(maxAbs(y_ref), 1).
double relative_error(const DenseVector& y, const DenseVector& y_ref);

/// Multiply with a fixed contiguous partition of rows/slices/groups over
/// `workers` threads. Output bits do not depend on the worker count: each
/// unit owns a disjoint slice of y and sums in a fixed order.
void spmv_csr_parallel(const CsrMatrix& A, const DenseVector& x, DenseVector& y,
                       std::size_t workers);
void spmv_ellpack_parallel(const EllpackMatrix& M, const DenseVector& x, DenseVector& y,
                           std::size_t workers);
void spmv_sliced_parallel(const SlicedEllpackMatrix& M, const DenseVector& x,
                          DenseVector& y, std::size_t workers);
void spmv_argcsr_parallel(const ArgCsrMatrix& M, const DenseVector& x, DenseVector& y,
                          std::size_t workers);

/// Converts once per requested format, cross-checks the product against the
/// CSR reference (CorrectnessError beyond 1e-10 relative), then times
/// warmup + iterations runs. The CSR baseline is always measured so
/// speedup_vs_csr is defined even when csr is not in options.formats.
std::vector<BenchRecord> run_benchmark(const CsrMatrix& A, const std::string& matrix_name,
                                       const BenchOptions& options);

enum class ReportStyle { csv, json };

/// CSV: fixed header
/// matrix,format,threadsPerGroup,desiredChunkSize,sliceSize,time_s,gflops,speedup_vs_csr,nnz,padded_slots,total_slots
/// JSON: array of objects, keys = CSV columns. IoError on write failure.
void emit_report(const std::vector<BenchRecord>& records, ReportStyle style,
                 std::ostream& out);

struct DistributionRow {
    FormatKind format;
    double threshold = 1.0;
    std::size_t count = 0;

    bool operator==(const DistributionRow&) const = default;
};

/// Per format, how many records reach each speed-up threshold
/// (1/16, 1/8, ..., 16). Counts are non-increasing along the thresholds.
std::vector<DistributionRow> speedup_distribution(const std::vector<BenchRecord>& records);
void emit_distribution(const std::vector<BenchRecord>& records, std::ostream& out);

} // namespace argcsr
