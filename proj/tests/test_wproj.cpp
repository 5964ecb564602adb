#include <doctest.h>

#include "qlens/wproj.hpp"

using namespace qlens;

TEST_CASE("wp1 graph") {
    auto a = wp1_graph(1, 1);
    CHECK(a.vertex_count() == 2);
    REQUIRE(a.edges().size() == 1);
    CHECK(a.edges()[0].multiplicity.is_infinite());

    auto b = wp1_graph(4, 6);
    CHECK(b.vertex_count() == 4);
    CHECK(b.edges().size() == 3);
    for (const auto& e : b.edges()) {
        CHECK(e.source == 0);
        CHECK(e.multiplicity.is_infinite());
    }
    CHECK(b.is_acyclic());

    CHECK(wp1_graph(3, 3).vertex_count() == 2);
}

TEST_CASE("teardrop canonical form") {
    CHECK(wp1_canonical(4, 6).reduced == std::pair<long, long>{1, 3});
    CHECK(wp1_canonical(1, 7).reduced == std::pair<long, long>{1, 7});
    CHECK(wp1_canonical(6, 4).reduced == std::pair<long, long>{1, 2});

    // the graph only sees the canonical form
    for (long m0 = 1; m0 <= 6; ++m0)
        for (long m1 = 1; m1 <= 6; ++m1) {
            auto canon = wp1_canonical(m0, m1).reduced;
            auto g1 = wp1_graph(m0, m1);
            auto g2 = wp1_graph(canon.first, canon.second);
            CHECK(adjacency_matrix(g1) == adjacency_matrix(g2));
        }
}

TEST_CASE("coprimality hypothesis") {
    auto a = wp_hypothesis({2, 3, 4});
    CHECK(a.holds);
    CHECK(a.witnesses == std::vector<int>{0, 1});

    auto b = wp_hypothesis({2, 4, 3});
    CHECK_FALSE(b.holds);
    CHECK(b.failing_index == 1);

    CHECK(wp_hypothesis({1, 6, 10, 15}).holds);
}

TEST_CASE("wp k-theory") {
    auto a = wp_k_theory({4, 6});
    CHECK(a.groups.k0 == AbelianGroup{4, {}});
    CHECK(a.groups.k1 == AbelianGroup{0, {}});
    CHECK(a.af);
    CHECK(a.extension_trace.empty());

    auto b = wp_k_theory({1, 2, 3});
    CHECK(b.groups.k0 == AbelianGroup{6, {}});
    CHECK(b.groups.k1 == AbelianGroup{0, {}});
    REQUIRE(b.extension_trace.size() == 1);
    CHECK(b.extension_trace[0].n == 2);
    CHECK(b.extension_trace[0].ideal_copies == 3);

    try {
        wp_k_theory({2, 4, 3});
        FAIL("expected HypothesisNotSatisfied");
    } catch (const HypothesisNotSatisfied& e) {
        CHECK(e.failing_index == 1);
    }
}

TEST_CASE("graph pipeline agrees with the closed form") {
    for (long m0 = 1; m0 <= 12; ++m0)
        for (long m1 = 1; m1 <= 12; ++m1) {
            auto closed = wp_k_theory({m0, m1});
            auto graph = graph_k_theory(wp1_graph(m0, m1));
            CHECK(closed.groups == graph);
        }
}

TEST_CASE("extension trace serialization") {
    auto b = wp_k_theory({1, 2, 3});
    auto doc = b.to_json();
    CHECK(doc.find(R"("steps":[{"n":2,"ideal_copies":3}])") != std::string::npos);
}
