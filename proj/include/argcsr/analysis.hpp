#pragma once

#include "argcsr/argcsr.hpp"
#include "argcsr/ellpack.hpp"

#include "json.hpp"

namespace argcsr {

/// Storage-cost summary for one matrix in one format.
///
/// assigned_padded_slots counts artificial zeros inside assigned chunks
/// (or rows); slots belonging to free chunks are part of
/// total_allocated_slots only.
struct FormatStats {
    std::size_t explicit_nnz = 0;
    std::size_t assigned_padded_slots = 0;
    std::size_t total_allocated_slots = 0;
    double padding_ratio = 1.0;  // total_allocated_slots / explicit_nnz
    std::size_t estimated_bytes = 0;

    bool operator==(const FormatStats&) const = default;
};

/// Distribution of explicit nonzeros over groups (or slices).
struct BalanceStats {
    std::vector<std::size_t> per_group_nnz;
    double max_over_mean = 1.0;
    double coefficient_of_variation = 0.0;

    bool operator==(const BalanceStats&) const = default;
};

/// Parameters of the coalesced-transaction model.
///
/// A warp is warp_width consecutive threads of one group/slice; per element
/// step the model counts how many distinct segment_bytes-aligned segments
/// the warp touches in the values and columns arrays.
struct TrafficModel {
    std::size_t warp_width = 32;
    std::size_t segment_bytes = 128;
    std::size_t element_bytes = 8;
};

/// Transaction totals split by array. total() covers the matrix-side
/// arrays only; irregular_reads counts the x[column] gathers, which are
/// pattern-dependent and not modeled as coalesced.
struct TrafficCounts {
    std::size_t values_transactions = 0;
    std::size_t columns_transactions = 0;
    std::size_t irregular_reads = 0;

    std::size_t total() const { return values_transactions + columns_transactions; }
    bool operator==(const TrafficCounts&) const = default;
};

FormatStats padding_stats(const CsrMatrix& A);
FormatStats padding_stats(const EllpackMatrix& M);
FormatStats padding_stats(const SlicedEllpackMatrix& M);
FormatStats padding_stats(const ArgCsrMatrix& M);

BalanceStats balance_stats(const SlicedEllpackMatrix& M);
BalanceStats balance_stats(const ArgCsrMatrix& M);

/// Simulated memory transactions for one SpMV sweep under `model`.
/// Throws ParameterError on a zero field or when segment_bytes is not a
/// multiple of element_bytes.
TrafficCounts modeled_transactions(const CsrMatrix& A, const TrafficModel& model);
TrafficCounts modeled_transactions(const EllpackMatrix& M, const TrafficModel& model);
TrafficCounts modeled_transactions(const SlicedEllpackMatrix& M, const TrafficModel& model);
TrafficCounts modeled_transactions(const ArgCsrMatrix& M, const TrafficModel& model);

void to_json(nlohmann::json& j, const FormatStats& s);
void to_json(nlohmann::json& j, const BalanceStats& s);
void to_json(nlohmann::json& j, const TrafficCounts& s);

} // namespace argcsr
