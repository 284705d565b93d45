#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "argcsr/bench.hpp"
#include "argcsr/io.hpp"

namespace py = pybind11;

using namespace argcsr;

PYBIND11_MODULE(argcsr, m) {
    m.doc() = "Sparse matrix storage formats built around adaptive row-grouped CSR";

    py::register_exception<Error>(m, "Error");

    py::class_<CsrMatrix>(m, "CsrMatrix")
        .def(py::init<>())
        .def_readonly("num_rows", &CsrMatrix::num_rows)
        .def_readonly("num_cols", &CsrMatrix::num_cols)
        .def_readonly("values", &CsrMatrix::values)
        .def_readonly("columns", &CsrMatrix::columns)
        .def_readonly("row_pointers", &CsrMatrix::row_pointers)
        .def_property_readonly("nnz", &CsrMatrix::nnz)
        .def(py::self == py::self)
        .def("__repr__", [](const CsrMatrix& A) {
            return "CsrMatrix(" + std::to_string(A.num_rows) + "x" +
                   std::to_string(A.num_cols) + ", nnz=" + std::to_string(A.nnz()) + ")";
        });

    py::class_<EllpackMatrix>(m, "EllpackMatrix")
        .def_readonly("num_rows", &EllpackMatrix::num_rows)
        .def_readonly("num_cols", &EllpackMatrix::num_cols)
        .def_readonly("width", &EllpackMatrix::width)
        .def_readonly("values", &EllpackMatrix::values)
        .def_readonly("columns", &EllpackMatrix::columns)
        .def_property_readonly("total_slots", &EllpackMatrix::total_slots)
        .def(py::self == py::self);

    py::class_<SlicedEllpackMatrix>(m, "SlicedEllpackMatrix")
        .def_readonly("num_rows", &SlicedEllpackMatrix::num_rows)
        .def_readonly("num_cols", &SlicedEllpackMatrix::num_cols)
        .def_readonly("slice_size", &SlicedEllpackMatrix::slice_size)
        .def_readonly("slice_widths", &SlicedEllpackMatrix::slice_widths)
        .def_readonly("slice_offsets", &SlicedEllpackMatrix::slice_offsets)
        .def_readonly("values", &SlicedEllpackMatrix::values)
        .def_readonly("columns", &SlicedEllpackMatrix::columns)
        .def_property_readonly("num_slices", &SlicedEllpackMatrix::num_slices)
        .def_property_readonly("total_slots", &SlicedEllpackMatrix::total_slots)
        .def(py::self == py::self);

    py::class_<GroupInfo>(m, "GroupInfo")
        .def_readonly("first_row", &GroupInfo::first_row)
        .def_readonly("size", &GroupInfo::size)
        .def_readonly("offset", &GroupInfo::offset)
        .def_readonly("chunk_size", &GroupInfo::chunk_size)
        .def(py::self == py::self);

    py::class_<ArgCsrMatrix>(m, "ArgCsrMatrix")
        .def_readonly("num_rows", &ArgCsrMatrix::num_rows)
        .def_readonly("num_cols", &ArgCsrMatrix::num_cols)
        .def_readonly("threads_per_group", &ArgCsrMatrix::threads_per_group)
        .def_readonly("groups", &ArgCsrMatrix::groups)
        .def_readonly("values", &ArgCsrMatrix::values)
        .def_readonly("columns", &ArgCsrMatrix::columns)
        .def_readonly("threads_mapping", &ArgCsrMatrix::threads_mapping)
        .def_property_readonly("total_slots", &ArgCsrMatrix::total_slots)
        .def(py::self == py::self);

    py::class_<FormatStats>(m, "FormatStats")
        .def_readonly("explicit_nnz", &FormatStats::explicit_nnz)
        .def_readonly("assigned_padded_slots", &FormatStats::assigned_padded_slots)
        .def_readonly("total_allocated_slots", &FormatStats::total_allocated_slots)
        .def_readonly("padding_ratio", &FormatStats::padding_ratio)
        .def_readonly("estimated_bytes", &FormatStats::estimated_bytes);

    py::class_<BalanceStats>(m, "BalanceStats")
        .def_readonly("per_group_nnz", &BalanceStats::per_group_nnz)
        .def_readonly("max_over_mean", &BalanceStats::max_over_mean)
        .def_readonly("coefficient_of_variation", &BalanceStats::coefficient_of_variation);

    py::class_<TrafficModel>(m, "TrafficModel")
        .def(py::init([](std::size_t warp_width, std::size_t segment_bytes,
                         std::size_t element_bytes) {
                 return TrafficModel{warp_width, segment_bytes, element_bytes};
             }),
             py::arg("warp_width") = 32, py::arg("segment_bytes") = 128,
             py::arg("element_bytes") = 8)
        .def_readwrite("warp_width", &TrafficModel::warp_width)
        .def_readwrite("segment_bytes", &TrafficModel::segment_bytes)
        .def_readwrite("element_bytes", &TrafficModel::element_bytes);

    py::class_<TrafficCounts>(m, "TrafficCounts")
        .def_readonly("values_transactions", &TrafficCounts::values_transactions)
        .def_readonly("columns_transactions", &TrafficCounts::columns_transactions)
        .def_readonly("irregular_reads", &TrafficCounts::irregular_reads)
        .def_property_readonly("total", &TrafficCounts::total);

    m.def(
        "csr_from_triplets",
        [](std::size_t num_rows, std::size_t num_cols,
           const std::vector<std::tuple<std::size_t, std::size_t, double>>& entries) {
            std::vector<Triplet> ts;
            ts.reserve(entries.size());
            for (const auto& [r, c, v] : entries) ts.push_back({r, c, v});
            return csr_from_triplets(num_rows, num_cols, std::move(ts));
        },
        py::arg("num_rows"), py::arg("num_cols"), py::arg("entries"),
        "Builds CSR from (row, col, value) tuples; duplicates are summed.");

    m.def(
        "triplets_from_csr",
        [](const CsrMatrix& A) {
            std::vector<std::tuple<std::size_t, std::size_t, double>> out;
            for (const Triplet& t : triplets_from_csr(A)) {
                out.emplace_back(t.row, t.col, t.value);
            }
            return out;
        },
        py::arg("matrix"));

    m.def("ellpack_from_csr", &ellpack_from_csr, py::arg("matrix"));
    m.def("sliced_from_csr", &sliced_from_csr, py::arg("matrix"),
          py::arg("slice_size") = kDefaultSliceSize);
    m.def("argcsr_from_csr", &argcsr_from_csr, py::arg("matrix"),
          py::arg("threads_per_group") = kDefaultThreadsPerGroup,
          py::arg("desired_chunk_size") = kDefaultDesiredChunkSize);
    m.def("csr_from_ellpack", &csr_from_ellpack, py::arg("matrix"));
    m.def("csr_from_sliced", &csr_from_sliced, py::arg("matrix"));
    m.def("csr_from_argcsr", &csr_from_argcsr, py::arg("matrix"));

    m.def("spmv", &spmv_csr, py::arg("matrix"), py::arg("x"));
    m.def("spmv", &spmv_ellpack, py::arg("matrix"), py::arg("x"));
    m.def("spmv", &spmv_sliced, py::arg("matrix"), py::arg("x"));
    m.def("spmv", &spmv_argcsr, py::arg("matrix"), py::arg("x"));

    m.def("padding_stats", py::overload_cast<const CsrMatrix&>(&padding_stats),
          py::arg("matrix"));
    m.def("padding_stats", py::overload_cast<const EllpackMatrix&>(&padding_stats),
          py::arg("matrix"));
    m.def("padding_stats", py::overload_cast<const SlicedEllpackMatrix&>(&padding_stats),
          py::arg("matrix"));
    m.def("padding_stats", py::overload_cast<const ArgCsrMatrix&>(&padding_stats),
          py::arg("matrix"));

    m.def("balance_stats", py::overload_cast<const SlicedEllpackMatrix&>(&balance_stats),
          py::arg("matrix"));
    m.def("balance_stats", py::overload_cast<const ArgCsrMatrix&>(&balance_stats),
          py::arg("matrix"));

    m.def("modeled_transactions",
          py::overload_cast<const CsrMatrix&, const TrafficModel&>(&modeled_transactions),
          py::arg("matrix"), py::arg("model") = TrafficModel{});
    m.def("modeled_transactions",
          py::overload_cast<const EllpackMatrix&, const TrafficModel&>(&modeled_transactions),
          py::arg("matrix"), py::arg("model") = TrafficModel{});
    m.def("modeled_transactions",
          py::overload_cast<const SlicedEllpackMatrix&, const TrafficModel&>(
              &modeled_transactions),
          py::arg("matrix"), py::arg("model") = TrafficModel{});
    m.def("modeled_transactions",
          py::overload_cast<const ArgCsrMatrix&, const TrafficModel&>(&modeled_transactions),
          py::arg("matrix"), py::arg("model") = TrafficModel{});

    m.def("read_matrix_market", &read_matrix_market_file, py::arg("path"));
    m.def("write_matrix_market", &write_matrix_market_file, py::arg("path"),
          py::arg("matrix"));
    m.def(
        "write_binary",
        [](const std::string& path, const StoredMatrix& M) { write_binary_file(path, M); },
        py::arg("path"), py::arg("matrix"));
    m.def("read_binary", &read_binary_file, py::arg("path"));
}
