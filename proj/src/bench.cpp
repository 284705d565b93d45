#include "argcsr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <thread>

namespace argcsr {

std::string format_name(FormatKind kind) {
    switch (kind) {
    case FormatKind::csr: return "csr";
    case FormatKind::ellpack: return "ellpack";
    case FormatKind::sliced: return "sliced";
    case FormatKind::argcsr: return "argcsr";
    }
    throw InternalError("format_name: bad enum value");
}

FormatKind parse_format(std::string_view name) {
    if (name == "csr") return FormatKind::csr;
    if (name == "ellpack") return FormatKind::ellpack;
    if (name == "sliced") return FormatKind::sliced;
    if (name == "argcsr") return FormatKind::argcsr;
    throw ParameterError("unknown format '" + std::string(name) + "'");
}

double relative_error(const DenseVector& y, const DenseVector& y_ref) {
    if (y.size() != y_ref.size()) {
        throw DimensionError("relative_error: length mismatch");
    }
    double max_diff = 0.0;
    double max_ref = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(y[i] - y_ref[i]));
        max_ref = std::max(max_ref, std::abs(y_ref[i]));
    }
    return max_diff / std::max(max_ref, 1.0);
}

namespace {

// body(begin, end) over a contiguous partition; unit counts and boundaries
// are fixed by (units, workers) alone.
template <typename Body>
void parallel_over(std::size_t units, std::size_t workers, const Body& body) {
    if (units == 0) return;
    workers = std::min(std::max<std::size_t>(workers, 1), units);
    if (workers == 1) {
        body(std::size_t{0}, units);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    const std::size_t base = units / workers;
    const std::size_t extra = units % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t end = begin + base + (w < extra ? 1 : 0);
        if (w + 1 == workers) {
            body(begin, end);
        } else {
            pool.emplace_back([&body, begin, end] { body(begin, end); });
        }
        begin = end;
    }
    for (std::thread& t : pool) t.join();
}

void check_input(std::size_t x_size, std::size_t num_cols) {
    if (x_size != num_cols) {
        throw DimensionError("parallel spmv: vector length " + std::to_string(x_size) +
                             " does not match " + std::to_string(num_cols) + " columns");
    }
}

} // namespace

void spmv_csr_parallel(const CsrMatrix& A, const DenseVector& x, DenseVector& y,
                       std::size_t workers) {
    check_input(x.size(), A.num_cols);
    y.resize(A.num_rows);
    parallel_over(A.num_rows, workers, [&](std::size_t b, std::size_t e) {
        spmv_csr_rows(A, x, b, e, y);
    });
}

void spmv_ellpack_parallel(const EllpackMatrix& M, const DenseVector& x, DenseVector& y,
                           std::size_t workers) {
    check_input(x.size(), M.num_cols);
    y.resize(M.num_rows);
    parallel_over(M.num_rows, workers, [&](std::size_t b, std::size_t e) {
        spmv_ellpack_rows(M, x, b, e, y);
    });
}

void spmv_sliced_parallel(const SlicedEllpackMatrix& M, const DenseVector& x,
                          DenseVector& y, std::size_t workers) {
    check_input(x.size(), M.num_cols);
    y.resize(M.num_rows);
    parallel_over(M.num_slices(), workers, [&](std::size_t b, std::size_t e) {
        spmv_sliced_slices(M, x, b, e, y);
    });
}

void spmv_argcsr_parallel(const ArgCsrMatrix& M, const DenseVector& x, DenseVector& y,
                          std::size_t workers) {
    check_input(x.size(), M.num_cols);
    y.resize(M.num_rows);
    parallel_over(M.groups.size(), workers, [&](std::size_t b, std::size_t e) {
        spmv_argcsr_groups(M, x, b, e, y);
    });
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Median of individually timed runs, floored at 1 ns so derived rates stay
// finite on degenerate matrices.
double timed_median(const std::function<void()>& run, std::size_t warmup,
                    std::size_t iterations) {
    for (std::size_t i = 0; i < warmup; ++i) run();
    std::vector<double> times(iterations);
    for (std::size_t i = 0; i < iterations; ++i) {
        const Clock::time_point t0 = Clock::now();
        run();
        times[i] = seconds_since(t0);
    }
    std::sort(times.begin(), times.end());
    const std::size_t n = times.size();
    const double m = n % 2 == 1 ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);
    return std::max(m, 1e-9);
}

DenseVector bench_input(std::size_t n) {
    DenseVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = 1.0 + 0.0625 * static_cast<double>(j % 13);
    }
    return x;
}

constexpr double kCheckTolerance = 1e-10;

} // namespace

std::vector<BenchRecord> run_benchmark(const CsrMatrix& A, const std::string& matrix_name,
                                       const BenchOptions& options) {
    if (options.iterations == 0) {
        throw ParameterError("run_benchmark: iterations must be at least 1");
    }
    if (options.workers == 0) {
        throw ParameterError("run_benchmark: workers must be at least 1");
    }

    const DenseVector x = bench_input(A.num_cols);
    const DenseVector y_ref = spmv_csr(A, x);
    DenseVector y;

    const double csr_time = timed_median(
        [&] { spmv_csr_parallel(A, x, y, options.workers); }, options.warmup,
        options.iterations);

    const double flops = 2.0 * static_cast<double>(A.nnz());
    std::vector<BenchRecord> records;
    records.reserve(options.formats.size());

    for (FormatKind kind : options.formats) {
        BenchRecord rec;
        rec.matrix_name = matrix_name;
        rec.format = kind;
        rec.params = options.params;
        rec.nnz = A.nnz();

        std::function<void()> run;
        EllpackMatrix ell;
        SlicedEllpackMatrix sli;
        ArgCsrMatrix arg;
        switch (kind) {
        case FormatKind::csr:
            rec.conversion_s = 0.0;
            rec.stats = padding_stats(A);
            run = [&] { spmv_csr_parallel(A, x, y, options.workers); };
            break;
        case FormatKind::ellpack: {
            const Clock::time_point t0 = Clock::now();
            ell = ellpack_from_csr(A);
            rec.conversion_s = seconds_since(t0);
            rec.stats = padding_stats(ell);
            run = [&] { spmv_ellpack_parallel(ell, x, y, options.workers); };
            break;
        }
        case FormatKind::sliced: {
            const Clock::time_point t0 = Clock::now();
            sli = sliced_from_csr(A, options.params.slice_size);
            rec.conversion_s = seconds_since(t0);
            rec.stats = padding_stats(sli);
            run = [&] { spmv_sliced_parallel(sli, x, y, options.workers); };
            break;
        }
        case FormatKind::argcsr: {
            const Clock::time_point t0 = Clock::now();
            arg = argcsr_from_csr(A, options.params.threads_per_group,
                                  options.params.desired_chunk_size);
            rec.conversion_s = seconds_since(t0);
            rec.stats = padding_stats(arg);
            run = [&] { spmv_argcsr_parallel(arg, x, y, options.workers); };
            break;
        }
        }

        run();
        const double err = relative_error(y, y_ref);
        if (err > kCheckTolerance) {
            throw CorrectnessError("matrix '" + matrix_name + "', format " +
                                   format_name(kind) + ": relative error " +
                                   std::to_string(err) + " exceeds tolerance");
        }

        rec.time_s = kind == FormatKind::csr
                         ? csr_time
                         : timed_median(run, options.warmup, options.iterations);
        rec.gflops = flops / rec.time_s / 1e9;
        rec.speedup_vs_csr = kind == FormatKind::csr ? 1.0 : csr_time / rec.time_s;
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

constexpr const char* kCsvHeader =
    "matrix,format,threadsPerGroup,desiredChunkSize,sliceSize,time_s,gflops,"
    "speedup_vs_csr,nnz,padded_slots,total_slots";

} // namespace

void emit_report(const std::vector<BenchRecord>& records, ReportStyle style,
                 std::ostream& out) {
    if (records.empty()) {
        throw ParameterError("emit_report: no records");
    }
    if (style == ReportStyle::csv) {
        out << kCsvHeader << '\n';
        out << std::setprecision(17);
        for (const BenchRecord& r : records) {
            out << r.matrix_name << ',' << format_name(r.format) << ','
                << r.params.threads_per_group << ',' << r.params.desired_chunk_size << ','
                << r.params.slice_size << ',' << r.time_s << ',' << r.gflops << ','
                << r.speedup_vs_csr << ',' << r.nnz << ','
                << r.stats.assigned_padded_slots << ',' << r.stats.total_allocated_slots
                << '\n';
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const BenchRecord& r : records) {
            arr.push_back({{"matrix", r.matrix_name},
                           {"format", format_name(r.format)},
                           {"threadsPerGroup", r.params.threads_per_group},
                           {"desiredChunkSize", r.params.desired_chunk_size},
                           {"sliceSize", r.params.slice_size},
                           {"time_s", r.time_s},
                           {"gflops", r.gflops},
                           {"speedup_vs_csr", r.speedup_vs_csr},
                           {"nnz", r.nnz},
                           {"padded_slots", r.stats.assigned_padded_slots},
                           {"total_slots", r.stats.total_allocated_slots}});
        }
        out << arr.dump(2) << '\n';
    }
    if (!out) {
        throw IoError("emit_report: write failure");
    }
}

std::vector<DistributionRow> speedup_distribution(const std::vector<BenchRecord>& records) {
    static constexpr double kThresholds[] = {1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2,
                                             1.0,      2.0,     4.0,     8.0,
                                             16.0};
    std::vector<FormatKind> kinds;
    for (const BenchRecord& r : records) {
        if (std::find(kinds.begin(), kinds.end(), r.format) == kinds.end()) {
            kinds.push_back(r.format);
        }
    }
    std::vector<DistributionRow> rows;
    rows.reserve(kinds.size() * std::size(kThresholds));
    for (FormatKind kind : kinds) {
        for (double threshold : kThresholds) {
            DistributionRow row{kind, threshold, 0};
            for (const BenchRecord& r : records) {
                if (r.format == kind && r.speedup_vs_csr >= threshold) ++row.count;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

void emit_distribution(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "format,threshold,count\n";
    out << std::setprecision(17);
    for (const DistributionRow& row : speedup_distribution(records)) {
        out << format_name(row.format) << ',' << row.threshold << ',' << row.count << '\n';
    }
    if (!out) {
        throw IoError("emit_distribution: write failure");
    }
}

} // namespace argcsr
