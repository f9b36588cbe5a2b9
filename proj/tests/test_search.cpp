#include "gcp/search.hpp"

#include "gcp/construct.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <omp.h>

using gcp::QarySeq;
using gcp::SearchSpec;
using gcp::SeqPair;

namespace {

SearchSpec spec_for(std::int64_t length, std::int64_t alphabet, bool normalize = true) {
    SearchSpec spec;
    spec.length = length;
    spec.alphabet = alphabet;
    spec.normalize = normalize;
    return spec;
}

std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> raw(
    const std::vector<SeqPair>& pairs) {
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) {
        out.emplace_back(std::vector<std::int64_t>(p.a().exps().begin(), p.a().exps().end()),
                         std::vector<std::int64_t>(p.b().exps().begin(), p.b().exps().end()));
    }
    return out;
}

} // namespace

TEST_CASE("small binary searches") {
    const auto r22 = gcp::exhaustive_gcp_search(spec_for(2, 2));
    REQUIRE(r22.pairs.size() == 2);
    CHECK(raw(r22.pairs) ==
          decltype(raw(r22.pairs)){{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}});

    CHECK(gcp::exhaustive_gcp_search(spec_for(3, 2)).pairs.empty());
    CHECK(gcp::exhaustive_gcp_search(spec_for(5, 2)).pairs.empty());
    CHECK(gcp::exhaustive_gcp_search(spec_for(4, 2)).pairs.size() == 8);
}

TEST_CASE("small quaternary searches with pinned regression counts") {
    const auto r24 = gcp::exhaustive_gcp_search(spec_for(2, 4));
    CHECK(r24.pairs.size() == 4); // count pinned after first enumeration
    const auto r34 = gcp::exhaustive_gcp_search(spec_for(3, 4));
    REQUIRE(!r34.pairs.empty());
    CHECK(r34.pairs.size() == 8); // count pinned after first enumeration
    CHECK(std::vector<std::int64_t>(r34.pairs[0].a().exps().begin(), r34.pairs[0].a().exps().end()) ==
          std::vector<std::int64_t>{0, 0, 2});
    CHECK(std::vector<std::int64_t>(r34.pairs[0].b().exps().begin(), r34.pairs[0].b().exps().end()) ==
          std::vector<std::int64_t>{0, 1, 0});
}

TEST_CASE("search agrees with naive double enumeration") {
    // Both directions: everything found verifies, everything verifying is found.
    for (const auto& [length, alphabet] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 2}, {3, 2}, {4, 2}, {2, 4}, {3, 4}}) {
        const auto pruned = gcp::exhaustive_gcp_search(spec_for(length, alphabet));
        const auto naive = testoracle::naive_all_gcps(length, alphabet, true);
        CHECK(raw(pruned.pairs) == raw(naive));
        for (const auto& p : pruned.pairs) {
            CHECK(gcp::is_gcp(p));
        }
    }
}

TEST_CASE("normalization is a exact quotient by q^2 phase shifts") {
    for (const auto& [length, alphabet] :
         std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 2}, {2, 4}}) {
        const auto full = gcp::exhaustive_gcp_search(spec_for(length, alphabet, false));
        const auto normalized = gcp::exhaustive_gcp_search(spec_for(length, alphabet, true));
        CHECK(full.pairs.size() ==
              normalized.pairs.size() * static_cast<std::size_t>(alphabet * alphabet));

        // Expanding the normalized set by all constant offsets recovers the
        // full set exactly.
        auto expanded = raw(full.pairs);
        std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> rebuilt;
        for (const auto& p : normalized.pairs) {
            for (std::int64_t da = 0; da < alphabet; ++da) {
                for (std::int64_t db = 0; db < alphabet; ++db) {
                    std::vector<std::int64_t> a(p.a().exps().begin(), p.a().exps().end());
                    std::vector<std::int64_t> b(p.b().exps().begin(), p.b().exps().end());
                    for (auto& v : a) {
                        v = (v + da) % alphabet;
                    }
                    for (auto& v : b) {
                        v = (v + db) % alphabet;
                    }
                    rebuilt.emplace_back(std::move(a), std::move(b));
                }
            }
        }
        std::sort(rebuilt.begin(), rebuilt.end());
        CHECK(rebuilt == expanded);
    }
}

TEST_CASE("results are identical across worker counts") {
    const int saved = omp_get_max_threads();
    for (const auto& [length, alphabet] :
         std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 4}, {10, 2}}) {
        omp_set_num_threads(1);
        const auto one = gcp::exhaustive_gcp_search(spec_for(length, alphabet));
        omp_set_num_threads(8);
        const auto eight = gcp::exhaustive_gcp_search(spec_for(length, alphabet));
        omp_set_num_threads(saved);
        CHECK(raw(one.pairs) == raw(eight.pairs));
        const auto serial = gcp::exhaustive_gcp_search_serial(spec_for(length, alphabet));
        CHECK(raw(one.pairs) == raw(serial.pairs));
    }
}

TEST_CASE("budget guard fails loudly") {
    SUBCASE("instances too large to ever fit are rejected up front") {
        auto spec = spec_for(12, 4);
        spec.node_budget = 1000;
        CHECK_THROWS_AS(gcp::exhaustive_gcp_search(spec), gcp::SearchBudgetExceeded);
        CHECK_THROWS_AS(gcp::exhaustive_gcp_search_serial(spec), gcp::SearchBudgetExceeded);
    }
    SUBCASE("a budget exhausted mid-walk aborts, never truncates") {
        // 4^9 = 262144 passes the pre-flight lower bound, but the walk itself
        // (prefix tree plus counter-sequence nodes) exceeds it.
        auto spec = spec_for(10, 4);
        spec.node_budget = 262144;
        CHECK_THROWS_AS(gcp::exhaustive_gcp_search(spec), gcp::SearchBudgetExceeded);
        CHECK_THROWS_AS(gcp::exhaustive_gcp_search_serial(spec), gcp::SearchBudgetExceeded);
    }
    SUBCASE("the first-pair walk honors the budget too") {
        CHECK_THROWS_AS(gcp::find_seed(16, 4, 1000), gcp::SearchBudgetExceeded);
    }
}

TEST_CASE("node accounting is reported") {
    const auto result = gcp::exhaustive_gcp_search(spec_for(3, 4));
    // At least one node per entry assignment of every enumerated a.
    CHECK(result.nodes_visited >= 16);
    CHECK(!result.truncated);
}

TEST_CASE("max_results truncates deterministically after the full run") {
    auto spec = spec_for(3, 4);
    spec.max_results = 3;
    const auto truncated = gcp::exhaustive_gcp_search(spec);
    CHECK(truncated.truncated);
    REQUIRE(truncated.pairs.size() == 3);
    const auto full = gcp::exhaustive_gcp_search(spec_for(3, 4));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(raw({truncated.pairs[i]}) == raw({full.pairs[i]}));
    }
}

TEST_CASE("first-pair lookup") {
    const auto p24 = gcp::find_seed(2, 4);
    REQUIRE(p24.has_value());
    CHECK(std::vector<std::int64_t>(p24->a().exps().begin(), p24->a().exps().end()) ==
          std::vector<std::int64_t>{0, 0});
    CHECK(std::vector<std::int64_t>(p24->b().exps().begin(), p24->b().exps().end()) ==
          std::vector<std::int64_t>{0, 2});

    CHECK(!gcp::find_seed(5, 2).has_value());

    const auto p102 = gcp::find_seed(10, 2);
    REQUIRE(p102.has_value());
    CHECK(gcp::is_gcp(*p102));
    // Pinned after the first run; grounded by the naive double enumeration
    // of the full (10,2) space.
    CHECK(std::vector<std::int64_t>(p102->a().exps().begin(), p102->a().exps().end()) ==
          std::vector<std::int64_t>{0, 0, 0, 0, 0, 1, 0, 1, 1, 0});
    CHECK(std::vector<std::int64_t>(p102->b().exps().begin(), p102->b().exps().end()) ==
          std::vector<std::int64_t>{0, 0, 1, 1, 0, 0, 0, 1, 0, 1});

    // find_seed returns exactly the head of the full enumeration.
    const auto full34 = gcp::exhaustive_gcp_search(spec_for(3, 4));
    const auto first34 = gcp::find_seed(3, 4);
    REQUIRE(first34.has_value());
    CHECK(raw({*first34}) == raw({full34.pairs.front()}));
}

TEST_CASE("searched seeds feed the constructor") {
    for (std::int64_t length : {2, 3, 5, 6}) {
        const auto found = gcp::find_seed(length, 4);
        REQUIRE(found.has_value());
        const gcp::SeedPair seed(found->a(), found->b());
        for (std::int64_t m : {1, 2}) {
            for (std::int64_t h : {1, 2}) {
                const auto pair = gcp::construct_pair(seed, gcp::ExpansionParams::defaults(m, h));
                CHECK(gcp::is_gcp(pair));
            }
        }
    }
}
