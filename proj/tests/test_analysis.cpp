#include "argcsr/analysis.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace argcsr;

namespace {

CsrMatrix identity(std::size_t n) {
    std::vector<Triplet> ts;
    for (std::size_t i = 0; i < n; ++i) ts.push_back({i, i, 1.0});
    return csr_from_triplets(n, n, std::move(ts));
}

} // namespace

TEST_CASE("padding of the mixed fixture across formats") {
    const CsrMatrix A = testsupport::e8_matrix();

    const FormatStats csr = padding_stats(A);
    CHECK(csr.explicit_nnz == 15);
    CHECK(csr.assigned_padded_slots == 0);
    CHECK(csr.total_allocated_slots == 15);
    CHECK(csr.padding_ratio == 1.0);
    CHECK(csr.estimated_bytes == 15 * 12 + 9 * 4);

    const FormatStats ell = padding_stats(ellpack_from_csr(A));
    CHECK(ell.explicit_nnz == 15);
    CHECK(ell.assigned_padded_slots == 49);
    CHECK(ell.total_allocated_slots == 64);
    CHECK(ell.padding_ratio == doctest::Approx(64.0 / 15.0));

    const FormatStats sli = padding_stats(sliced_from_csr(A, 4));
    CHECK(sli.explicit_nnz == 15);
    CHECK(sli.assigned_padded_slots == 21);
    CHECK(sli.total_allocated_slots == 36);

    const FormatStats arg = padding_stats(argcsr_from_csr(A, 12, 2));
    CHECK(arg.explicit_nnz == 15);
    CHECK(arg.assigned_padded_slots == 7);
    CHECK(arg.total_allocated_slots == 24);
}

TEST_CASE("padding counts come from the storage arrays") {
    // an explicit zero is a real entry, not padding
    const CsrMatrix A = csr_from_triplets(2, 2, {{0, 0, 0.0}, {1, 1, 2.0}});
    const FormatStats ell = padding_stats(ellpack_from_csr(A));
    CHECK(ell.explicit_nnz == 2);
    CHECK(ell.assigned_padded_slots == 0);
}

TEST_CASE("padding stats on an all-zero matrix") {
    const CsrMatrix A = csr_from_triplets(3, 3, {});
    CHECK(padding_stats(ellpack_from_csr(A)).total_allocated_slots == 0);
    CHECK(padding_stats(ellpack_from_csr(A)).padding_ratio == 1.0);
    CHECK(padding_stats(argcsr_from_csr(A, 4, 1)).total_allocated_slots == 0);
}

TEST_CASE("padding invariants over the corpus") {
    for (const CsrMatrix& A : testsupport::build_corpus(20)) {
        for (const FormatStats& fs :
             {padding_stats(A), padding_stats(ellpack_from_csr(A)),
              padding_stats(sliced_from_csr(A, 4)),
              padding_stats(argcsr_from_csr(A, 32, 4))}) {
            CHECK(fs.total_allocated_slots >= fs.explicit_nnz);
            if (fs.explicit_nnz > 0) {
                CHECK(fs.padding_ratio >= 1.0);
            }
        }
    }
}

TEST_CASE("argcsr total slots are exactly the group allocations") {
    for (const CsrMatrix& A : testsupport::build_corpus(10)) {
        const ArgCsrMatrix M = argcsr_from_csr(A, 32, 2);
        std::size_t sum = 0;
        for (const GroupInfo& g : M.groups) sum += g.chunk_size * M.threads_per_group;
        CHECK(padding_stats(M).total_allocated_slots == sum);
    }
}

TEST_CASE("balance of a single group is flat") {
    const BalanceStats bs = balance_stats(argcsr_from_csr(testsupport::e8_matrix(), 12, 2));
    CHECK(bs.per_group_nnz == std::vector<std::size_t>{15});
    CHECK(bs.max_over_mean == 1.0);
    CHECK(bs.coefficient_of_variation == 0.0);
}

TEST_CASE("balance of the mixed fixture at the default chunk budget") {
    const BalanceStats bs = balance_stats(argcsr_from_csr(testsupport::e8_matrix(), 12, 1));
    CHECK(bs.per_group_nnz == std::vector<std::size_t>{7, 8});
    CHECK(bs.max_over_mean == doctest::Approx(8.0 / 7.5));
}

TEST_CASE("balance of uniform rows is perfectly even") {
    const CsrMatrix A = testsupport::uniform_matrix(128, 128, 4);
    const BalanceStats bs = balance_stats(argcsr_from_csr(A, 32, 4));
    CHECK(bs.per_group_nnz == std::vector<std::size_t>(4, 128));
    CHECK(bs.max_over_mean == 1.0);
    CHECK(bs.coefficient_of_variation == 0.0);
}

TEST_CASE("balance over slices") {
    const BalanceStats bs = balance_stats(sliced_from_csr(testsupport::e8_matrix(), 4));
    CHECK(bs.per_group_nnz == std::vector<std::size_t>{4, 11});
}

TEST_CASE("balance of an all-zero matrix") {
    const BalanceStats bs = balance_stats(argcsr_from_csr(csr_from_triplets(3, 3, {}), 4, 1));
    CHECK(bs.max_over_mean == 1.0);
    CHECK(bs.coefficient_of_variation == 0.0);
}

TEST_CASE("a full warp of doubles costs two 128-byte segments") {
    const TrafficCounts tc = modeled_transactions(ellpack_from_csr(identity(32)),
                                                  TrafficModel{32, 128, 8});
    CHECK(tc.values_transactions == 2);
    CHECK(tc.columns_transactions == 1);  // 32 * 4 bytes = one segment
    CHECK(tc.irregular_reads == 32);
}

TEST_CASE("the degenerate model counts touched slots") {
    const TrafficModel unit{1, 8, 8};
    const CsrMatrix A = testsupport::e8_matrix();

    const TrafficCounts csr = modeled_transactions(A, unit);
    CHECK(csr.values_transactions == 15);
    CHECK(csr.columns_transactions == 15);

    // every single-entry row also reads the sentinel that stops it
    const TrafficCounts ell = modeled_transactions(ellpack_from_csr(A), unit);
    CHECK(ell.values_transactions == 15);
    CHECK(ell.columns_transactions == 7 * 2 + 8);
}

TEST_CASE("the grouped layout beats ellpack on the mixed fixture") {
    const TrafficModel model{32, 128, 8};
    const CsrMatrix A = testsupport::e8_matrix();
    const TrafficCounts arg = modeled_transactions(argcsr_from_csr(A, 12, 2), model);
    const TrafficCounts ell = modeled_transactions(ellpack_from_csr(A), model);
    CHECK(arg.total() == 4);
    CHECK(ell.total() == 16);
    CHECK(arg.total() < ell.total());
    CHECK(arg.irregular_reads == 15);
    CHECK(ell.irregular_reads == 15);
}

TEST_CASE("transactions depend on structure, not values") {
    std::vector<Triplet> ts = triplets_from_csr(testsupport::e8_matrix());
    for (std::size_t i = 0; i < ts.size(); ++i) ts[i].value = 10.0 + double(i);
    const CsrMatrix B = csr_from_triplets(8, 8, std::move(ts));
    const TrafficModel model{32, 128, 8};
    CHECK(modeled_transactions(B, model) ==
          modeled_transactions(testsupport::e8_matrix(), model));
    CHECK(modeled_transactions(ellpack_from_csr(B), model) ==
          modeled_transactions(ellpack_from_csr(testsupport::e8_matrix()), model));
}

TEST_CASE("the model validates its parameters") {
    const CsrMatrix A = testsupport::e8_matrix();
    CHECK_THROWS_AS(modeled_transactions(A, TrafficModel{0, 128, 8}), ParameterError);
    CHECK_THROWS_AS(modeled_transactions(A, TrafficModel{32, 0, 8}), ParameterError);
    CHECK_THROWS_AS(modeled_transactions(A, TrafficModel{32, 128, 0}), ParameterError);
    CHECK_THROWS_AS(modeled_transactions(A, TrafficModel{32, 12, 8}), ParameterError);
}

TEST_CASE("stats serialize to json") {
    const nlohmann::json j = padding_stats(testsupport::e8_matrix());
    CHECK(j.at("explicit_nnz") == 15);
    CHECK(j.at("total_allocated_slots") == 15);

    const nlohmann::json b =
        balance_stats(argcsr_from_csr(testsupport::e8_matrix(), 12, 1));
    CHECK(b.at("per_group_nnz") == nlohmann::json::array({7, 8}));

    const nlohmann::json t = modeled_transactions(
        ellpack_from_csr(identity(32)), TrafficModel{32, 128, 8});
    CHECK(t.at("total") == 3);
}
