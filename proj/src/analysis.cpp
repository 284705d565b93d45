#include "argcsr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace argcsr {

namespace {

constexpr std::size_t kElementBytes = 8;
constexpr std::size_t kIndexBytes = 4;

double ratio_of(std::size_t total, std::size_t explicit_nnz) {
    if (explicit_nnz > 0) {
        return static_cast<double>(total) / static_cast<double>(explicit_nnz);
    }
    return total == 0 ? 1.0 : std::numeric_limits<double>::infinity();
}

std::size_t count_explicit(const std::vector<index_t>& columns) {
    std::size_t n = 0;
    for (index_t c : columns) {
        if (c != kPaddingColumn) ++n;
    }
    return n;
}

BalanceStats balance_of(std::vector<std::size_t> per_group) {
    BalanceStats bs;
    bs.per_group_nnz = std::move(per_group);
    if (bs.per_group_nnz.empty()) return bs;

    std::size_t total = 0;
    std::size_t max_nnz = 0;
    for (std::size_t n : bs.per_group_nnz) {
        total += n;
        max_nnz = std::max(max_nnz, n);
    }
    const double mean =
        static_cast<double>(total) / static_cast<double>(bs.per_group_nnz.size());
    if (mean == 0.0) {
        bs.max_over_mean = 1.0;
        bs.coefficient_of_variation = 0.0;
        return bs;
    }
    bs.max_over_mean = static_cast<double>(max_nnz) / mean;
    double var = 0.0;
    for (std::size_t n : bs.per_group_nnz) {
        const double d = static_cast<double>(n) - mean;
        var += d * d;
    }
    var /= static_cast<double>(bs.per_group_nnz.size());
    bs.coefficient_of_variation = std::sqrt(var) / mean;
    return bs;
}

void check_model(const TrafficModel& m) {
    if (m.warp_width == 0 || m.segment_bytes == 0 || m.element_bytes == 0) {
        throw ParameterError("modeled_transactions: model fields must be at least 1");
    }
    if (m.segment_bytes % m.element_bytes != 0) {
        throw ParameterError(
            "modeled_transactions: segment_bytes must be a multiple of element_bytes");
    }
}

// Distinct aligned segments over one warp step of one array; byte addresses
// must arrive in non-decreasing order.
struct SegmentCounter {
    std::size_t segment_bytes;
    std::size_t count = 0;
    bool seen = false;
    std::size_t last = 0;

    void touch(std::size_t first_byte, std::size_t nbytes) {
        std::size_t s0 = first_byte / segment_bytes;
        const std::size_t s1 = (first_byte + nbytes - 1) / segment_bytes;
        if (seen && s0 <= last) s0 = last + 1;
        if (s1 >= s0) {
            count += s1 - s0 + 1;
            last = s1;
            seen = true;
        }
    }
};

// Trailing-sentinel run lengths for a columnwise block: entry t of the
// result is the number of leading non-sentinel slots in lane t.
std::vector<std::size_t> lane_counts(const std::vector<index_t>& columns,
                                     std::size_t base, std::size_t lanes,
                                     std::size_t width) {
    std::vector<std::size_t> real(lanes, 0);
    for (std::size_t t = 0; t < lanes; ++t) {
        for (std::size_t j = 0; j < width; ++j) {
            if (columns[base + j * lanes + t] == kPaddingColumn) break;
            ++real[t];
        }
    }
    return real;
}

// One columnwise block (ELLPACK matrix, slice, or group): lanes threads,
// width element steps, lane t's step-j slot at base + j·lanes + t. Threads
// read a column every step until just past their last real element.
void simulate_block(const std::vector<std::size_t>& real, std::size_t base,
                    std::size_t lanes, std::size_t width, const TrafficModel& m,
                    TrafficCounts& tc) {
    for (std::size_t w0 = 0; w0 < lanes; w0 += m.warp_width) {
        const std::size_t w1 = std::min(w0 + m.warp_width, lanes);
        std::size_t steps = 0;
        for (std::size_t t = w0; t < w1; ++t) {
            steps = std::max(steps, std::min(real[t] + 1, width));
        }
        for (std::size_t j = 0; j < steps; ++j) {
            SegmentCounter vals{m.segment_bytes};
            SegmentCounter cols{m.segment_bytes};
            for (std::size_t t = w0; t < w1; ++t) {
                const std::size_t slot = base + j * lanes + t;
                if (j < real[t]) {
                    vals.touch(slot * m.element_bytes, m.element_bytes);
                    cols.touch(slot * kIndexBytes, kIndexBytes);
                } else if (j == real[t] && real[t] < width) {
                    cols.touch(slot * kIndexBytes, kIndexBytes);
                }
            }
            tc.values_transactions += vals.count;
            tc.columns_transactions += cols.count;
        }
    }
}

} // namespace

FormatStats padding_stats(const CsrMatrix& A) {
    FormatStats fs;
    fs.explicit_nnz = A.nnz();
    fs.assigned_padded_slots = 0;
    fs.total_allocated_slots = A.nnz();
    fs.padding_ratio = ratio_of(fs.total_allocated_slots, fs.explicit_nnz);
    fs.estimated_bytes = A.nnz() * (kElementBytes + kIndexBytes) +
                         (A.num_rows + 1) * kIndexBytes;
    return fs;
}

FormatStats padding_stats(const EllpackMatrix& M) {
    FormatStats fs;
    fs.explicit_nnz = count_explicit(M.columns);
    fs.total_allocated_slots = M.total_slots();
    fs.assigned_padded_slots = fs.total_allocated_slots - fs.explicit_nnz;
    fs.padding_ratio = ratio_of(fs.total_allocated_slots, fs.explicit_nnz);
    fs.estimated_bytes = fs.total_allocated_slots * (kElementBytes + kIndexBytes);
    return fs;
}

FormatStats padding_stats(const SlicedEllpackMatrix& M) {
    FormatStats fs;
    fs.explicit_nnz = count_explicit(M.columns);
    fs.total_allocated_slots = M.total_slots();
    fs.assigned_padded_slots = fs.total_allocated_slots - fs.explicit_nnz;
    fs.padding_ratio = ratio_of(fs.total_allocated_slots, fs.explicit_nnz);
    fs.estimated_bytes = fs.total_allocated_slots * (kElementBytes + kIndexBytes) +
                         M.num_slices() * 2 * kIndexBytes;
    return fs;
}

FormatStats padding_stats(const ArgCsrMatrix& M) {
    FormatStats fs;
    fs.explicit_nnz = count_explicit(M.columns);
    fs.total_allocated_slots = M.total_slots();
    // Padding inside assigned chunks only; the inclusive scan's last entry
    // per group is that group's assigned thread count.
    std::size_t assigned_slots = 0;
    for (const GroupInfo& g : M.groups) {
        const std::size_t assigned = M.threads_mapping[g.first_row + g.size - 1];
        assigned_slots += assigned * g.chunk_size;
    }
    fs.assigned_padded_slots = assigned_slots - fs.explicit_nnz;
    fs.padding_ratio = ratio_of(fs.total_allocated_slots, fs.explicit_nnz);
    fs.estimated_bytes = fs.total_allocated_slots * (kElementBytes + kIndexBytes) +
                         M.groups.size() * 4 * kIndexBytes +
                         M.num_rows * kIndexBytes;
    return fs;
}

BalanceStats balance_stats(const SlicedEllpackMatrix& M) {
    std::vector<std::size_t> per_slice(M.num_slices(), 0);
    for (std::size_t s = 0; s < M.num_slices(); ++s) {
        const std::size_t rows = M.rows_in_slice(s);
        const std::size_t base = M.slice_offsets[s];
        for (std::size_t k = 0; k < M.slice_widths[s] * rows; ++k) {
            if (M.columns[base + k] != kPaddingColumn) ++per_slice[s];
        }
    }
    return balance_of(std::move(per_slice));
}

BalanceStats balance_stats(const ArgCsrMatrix& M) {
    std::vector<std::size_t> per_group(M.groups.size(), 0);
    for (std::size_t gi = 0; gi < M.groups.size(); ++gi) {
        const GroupInfo& g = M.groups[gi];
        const std::size_t slots = g.chunk_size * M.threads_per_group;
        for (std::size_t k = 0; k < slots; ++k) {
            if (M.columns[g.offset + k] != kPaddingColumn) ++per_group[gi];
        }
    }
    return balance_of(std::move(per_group));
}

TrafficCounts modeled_transactions(const CsrMatrix& A, const TrafficModel& model) {
    check_model(model);
    TrafficCounts tc;
    tc.irregular_reads = A.nnz();
    // One thread per row reading its range front to back; no sentinels, the
    // row pointer bounds the loop.
    for (std::size_t w0 = 0; w0 < A.num_rows; w0 += model.warp_width) {
        const std::size_t w1 = std::min(w0 + model.warp_width, A.num_rows);
        std::size_t steps = 0;
        for (std::size_t r = w0; r < w1; ++r) {
            steps = std::max(steps, A.row_pointers[r + 1] - A.row_pointers[r]);
        }
        for (std::size_t j = 0; j < steps; ++j) {
            SegmentCounter vals{model.segment_bytes};
            SegmentCounter cols{model.segment_bytes};
            for (std::size_t r = w0; r < w1; ++r) {
                if (j < A.row_pointers[r + 1] - A.row_pointers[r]) {
                    const std::size_t k = A.row_pointers[r] + j;
                    vals.touch(k * model.element_bytes, model.element_bytes);
                    cols.touch(k * kIndexBytes, kIndexBytes);
                }
            }
            tc.values_transactions += vals.count;
            tc.columns_transactions += cols.count;
        }
    }
    return tc;
}

TrafficCounts modeled_transactions(const EllpackMatrix& M, const TrafficModel& model) {
    check_model(model);
    TrafficCounts tc;
    const std::vector<std::size_t> real =
        lane_counts(M.columns, 0, M.num_rows, M.width);
    for (std::size_t n : real) tc.irregular_reads += n;
    simulate_block(real, 0, M.num_rows, M.width, model, tc);
    return tc;
}

TrafficCounts modeled_transactions(const SlicedEllpackMatrix& M,
                                   const TrafficModel& model) {
    check_model(model);
    TrafficCounts tc;
    for (std::size_t s = 0; s < M.num_slices(); ++s) {
        const std::size_t rows = M.rows_in_slice(s);
        const std::vector<std::size_t> real =
            lane_counts(M.columns, M.slice_offsets[s], rows, M.slice_widths[s]);
        for (std::size_t n : real) tc.irregular_reads += n;
        simulate_block(real, M.slice_offsets[s], rows, M.slice_widths[s], model, tc);
    }
    return tc;
}

TrafficCounts modeled_transactions(const ArgCsrMatrix& M, const TrafficModel& model) {
    check_model(model);
    TrafficCounts tc;
    for (const GroupInfo& g : M.groups) {
        const std::vector<std::size_t> real =
            lane_counts(M.columns, g.offset, M.threads_per_group, g.chunk_size);
        for (std::size_t n : real) tc.irregular_reads += n;
        simulate_block(real, g.offset, M.threads_per_group, g.chunk_size, model, tc);
    }
    return tc;
}

void to_json(nlohmann::json& j, const FormatStats& s) {
    j = nlohmann::json{{"explicit_nnz", s.explicit_nnz},
                       {"assigned_padded_slots", s.assigned_padded_slots},
                       {"total_allocated_slots", s.total_allocated_slots},
                       {"padding_ratio", s.padding_ratio},
                       {"estimated_bytes", s.estimated_bytes}};
}

void to_json(nlohmann::json& j, const BalanceStats& s) {
    j = nlohmann::json{{"per_group_nnz", s.per_group_nnz},
                       {"max_over_mean", s.max_over_mean},
                       {"coefficient_of_variation", s.coefficient_of_variation}};
}

void to_json(nlohmann::json& j, const TrafficCounts& s) {
    j = nlohmann::json{{"values_transactions", s.values_transactions},
                       {"columns_transactions", s.columns_transactions},
                       {"irregular_reads", s.irregular_reads},
                       {"total", s.total()}};
}

} // namespace argcsr
