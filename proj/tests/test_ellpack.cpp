#include "argcsr/ellpack.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace argcsr;

namespace {

std::size_t count_padding(const std::vector<index_t>& columns) {
    std::size_t n = 0;
    for (index_t c : columns) {
        if (c == kPaddingColumn) ++n;
    }
    return n;
}

} // namespace

TEST_CASE("ellpack of the mixed fixture pads 49 of 64 slots") {
    const EllpackMatrix M = ellpack_from_csr(testsupport::e8_matrix());
    CHECK(M.width == 8);
    CHECK(M.total_slots() == 64);
    CHECK(count_padding(M.columns) == 49);
}

TEST_CASE("ellpack stores columnwise") {
    const CsrMatrix A = csr_from_triplets(2, 2, {{0, 0, 3.0}, {1, 1, 4.0}});
    const EllpackMatrix M = ellpack_from_csr(A);
    REQUIRE(M.width == 1);
    // slot j * num_rows + r
    CHECK(M.values == std::vector<double>{3.0, 4.0});
    CHECK(M.columns == std::vector<index_t>{0, 1});

    const EllpackMatrix E8 = ellpack_from_csr(testsupport::e8_matrix());
    // step j=1 holds only row 7's second element
    CHECK(E8.columns[1 * 8 + 7] == 1);
    CHECK(E8.columns[1 * 8 + 0] == kPaddingColumn);
}

TEST_CASE("ellpack of an all-zero matrix has width zero") {
    const EllpackMatrix M = ellpack_from_csr(csr_from_triplets(3, 3, {}));
    CHECK(M.width == 0);
    CHECK(M.total_slots() == 0);
}

TEST_CASE("ellpack round-trips through csr") {
    const auto corpus = testsupport::build_corpus(25);
    for (const CsrMatrix& A : corpus) {
        CHECK(csr_from_ellpack(ellpack_from_csr(A)) == A);
    }
    CHECK(csr_from_ellpack(ellpack_from_csr(testsupport::e8_matrix())) ==
          testsupport::e8_matrix());
}

TEST_CASE("spmv_ellpack matches csr") {
    const auto corpus = testsupport::build_corpus(25);
    for (const CsrMatrix& A : corpus) {
        const DenseVector x = testsupport::probe_vector(A.num_cols);
        CHECK(testsupport::rel_error(spmv_ellpack(ellpack_from_csr(A), x),
                                     spmv_csr(A, x)) <= 1e-12);
    }
}

TEST_CASE("spmv_ellpack validates the vector length") {
    const EllpackMatrix M = ellpack_from_csr(testsupport::e8_matrix());
    CHECK_THROWS_AS(spmv_ellpack(M, DenseVector(7, 1.0)), DimensionError);
}

TEST_CASE("sliced ellpack of the mixed fixture, slice size 4") {
    const SlicedEllpackMatrix M = sliced_from_csr(testsupport::e8_matrix(), 4);
    CHECK(M.num_slices() == 2);
    CHECK(M.slice_widths == std::vector<std::size_t>{1, 8});
    CHECK(M.slice_offsets == std::vector<std::size_t>{0, 4});
    CHECK(M.total_slots() == 4 + 32);
    CHECK(count_padding(M.columns) == 21);
}

TEST_CASE("sliced ellpack keeps the ragged last slice stride") {
    // 10 rows, slice 4: slices of 4, 4, 2 rows
    std::vector<Triplet> ts;
    for (std::size_t r = 0; r < 10; ++r) ts.push_back({r, r % 3, 1.0 + double(r)});
    const CsrMatrix A = csr_from_triplets(10, 3, std::move(ts));
    const SlicedEllpackMatrix M = sliced_from_csr(A, 4);
    CHECK(M.num_slices() == 3);
    CHECK(M.rows_in_slice(2) == 2);
    CHECK(M.slice_widths == std::vector<std::size_t>{1, 1, 1});
    CHECK(M.slice_offsets == std::vector<std::size_t>{0, 4, 8});
    CHECK(M.total_slots() == 10);
    // last slice stores its two rows contiguously
    CHECK(M.values[8] == 9.0);
    CHECK(M.values[9] == 10.0);
}

TEST_CASE("sliced ellpack with slice size above the row count equals ellpack") {
    const CsrMatrix A = testsupport::e8_matrix();
    const SlicedEllpackMatrix M = sliced_from_csr(A, 32);
    const EllpackMatrix E = ellpack_from_csr(A);
    CHECK(M.num_slices() == 1);
    CHECK(M.values == E.values);
    CHECK(M.columns == E.columns);
}

TEST_CASE("sliced ellpack round-trips through csr") {
    const auto corpus = testsupport::build_corpus(25);
    for (const CsrMatrix& A : corpus) {
        for (std::size_t s : {1, 4, 32}) {
            CHECK(csr_from_sliced(sliced_from_csr(A, s)) == A);
        }
    }
}

TEST_CASE("spmv_sliced matches csr") {
    const auto corpus = testsupport::build_corpus(25);
    for (const CsrMatrix& A : corpus) {
        const DenseVector x = testsupport::probe_vector(A.num_cols);
        const DenseVector y_ref = spmv_csr(A, x);
        for (std::size_t s : {1, 4, 32}) {
            CHECK(testsupport::rel_error(spmv_sliced(sliced_from_csr(A, s), x), y_ref) <=
                  1e-12);
        }
    }
}

TEST_CASE("sliced ellpack rejects slice size zero") {
    CHECK_THROWS_AS(sliced_from_csr(testsupport::e8_matrix(), 0), ParameterError);
}

TEST_CASE("default slice size is 32") { CHECK(kDefaultSliceSize == 32); }
