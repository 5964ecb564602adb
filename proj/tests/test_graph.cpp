#include <doctest.h>

#include <random>

#include "qlens/graph.hpp"
#include "qlens/lens.hpp"
#include "qlens/wproj.hpp"

using namespace qlens;

namespace {

VertexId v(int level, int index) {
    return {level, index, "v" + std::to_string(level) + "_" + std::to_string(index)};
}

}  // namespace

TEST_CASE("make_graph validation") {
    CHECK(make_graph({}, {}).vertex_count() == 0);

    auto loop = make_graph({v(0, 0)}, {{v(0, 0), v(0, 0), Multiplicity(1L)}});
    CHECK(loop.vertex_count() == 1);
    CHECK(loop.edges().size() == 1);

    CHECK_THROWS_AS(make_graph({v(0, 0)}, {{v(0, 0), v(1, 0), Multiplicity(1L)}}),
                    UnknownEndpoint);
    CHECK_THROWS_AS(make_graph({v(0, 0), v(0, 0)}, {}), DuplicateVertex);
    CHECK_THROWS_AS(make_graph({v(0, 0)}, {{v(0, 0), v(0, 0), Multiplicity(0L)}}),
                    ZeroMultiplicity);
}

TEST_CASE("parallel edge records aggregate") {
    auto g = make_graph({v(0, 0), v(1, 0)}, {{v(0, 0), v(1, 0), Multiplicity(2L)},
                                             {v(0, 0), v(1, 0), Multiplicity(3L)}});
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].multiplicity.value() == 5);
}

TEST_CASE("vertex classification") {
    auto w = wp1_graph(2, 4);  // w0, w1, w2 with infinite edges from w0
    CHECK(w.vertex_class(VertexId{0, 0, ""}) == VertexClass::InfiniteEmitter);
    CHECK(w.vertex_class(VertexId{1, 0, ""}) == VertexClass::Sink);

    auto l3 = sphere_graph(1);
    CHECK(l3.vertex_class(VertexId{0, 0, ""}) == VertexClass::Regular);
    CHECK(l3.vertex_class(VertexId{1, 0, ""}) == VertexClass::Regular);

    CHECK_THROWS_AS(l3.vertex_class(VertexId{7, 7, ""}), UnknownVertex);
}

TEST_CASE("adjacency matrix") {
    auto loop = make_graph({v(0, 0)}, {{v(0, 0), v(0, 0), Multiplicity(1L)}});
    auto m1 = adjacency_matrix(loop);
    CHECK(m1.dim == 1);
    CHECK(m1.at(0, 0).value() == 1);

    auto l3 = sphere_graph(1);
    auto m2 = adjacency_matrix(l3);
    CHECK(m2.at(0, 0).value() == 1);
    CHECK(m2.at(0, 1).value() == 1);
    CHECK(m2.at(1, 0).value() == 0);
    CHECK(m2.at(1, 1).value() == 1);

    auto w = wp1_graph(2, 4);
    auto m3 = adjacency_matrix(w);
    REQUIRE(m3.dim == 3);
    CHECK(m3.at(0, 1).is_infinite());
    CHECK(m3.at(0, 2).is_infinite());
    CHECK_FALSE(m3.at(0, 0).is_infinite());
    CHECK(m3.at(0, 0).value() == 0);
    CHECK(m3.at(1, 2).value() == 0);
}

TEST_CASE("json round trip") {
    CHECK(to_json(make_graph({}, {})) == R"({"vertices":[],"edges":[]})");

    auto l3 = sphere_graph(1);
    auto doc = to_json(l3);
    CHECK(to_json(from_json(doc)) == doc);
    CHECK(from_json(doc) == l3);

    // random graphs round-trip as well
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int nv = 1 + static_cast<int>(rng() % 5);
        std::vector<VertexId> vs;
        for (int i = 0; i < nv; ++i) vs.push_back(v(i % 3, i));
        std::vector<EdgeSpec> es;
        int ne = static_cast<int>(rng() % 8);
        for (int i = 0; i < ne; ++i) {
            auto mult = rng() % 5 == 0 ? Multiplicity::infinite()
                                       : Multiplicity(static_cast<long>(1 + rng() % 1000));
            es.push_back({vs[rng() % nv], vs[rng() % nv], mult});
        }
        auto g = make_graph(vs, es);
        CHECK(from_json(to_json(g)) == g);
    }
}

TEST_CASE("json errors carry a diagnostic") {
    CHECK_THROWS_AS(from_json("{"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"vertices":[]})"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"vertices":[],"edges":[{"source":"a","range":"a","multiplicity":1}]})"),
                    ParseError);
    CHECK_THROWS_AS(
        from_json(
            R"({"vertices":[{"level":0,"index":0,"tag":"a"}],"edges":[{"source":"a","range":"a","multiplicity":"abc"}]})"),
        ParseError);
}

TEST_CASE("json multiplicity beyond 64 bits uses decimal strings") {
    mpz_class big("123456789012345678901234567890");
    auto g = make_graph({v(0, 0)}, {{v(0, 0), v(0, 0), Multiplicity(big)}});
    auto doc = to_json(g);
    CHECK(doc.find("\"123456789012345678901234567890\"") != std::string::npos);
    CHECK(from_json(doc) == g);
}

TEST_CASE("dot output follows the figure convention") {
    auto g = lens_graph(1, 6, {1, 3});
    auto dot = to_dot(g);
    // three multiplicity-2 links from level 0 to level 1, and four loops
    std::size_t k_links = 0, loops = 0, pos = 0;
    while ((pos = dot.find("label=\"(2)\"", pos)) != std::string::npos) {
        ++k_links;
        ++pos;
    }
    for (const auto& e : g.edges())
        if (e.source == e.range) ++loops;
    CHECK(k_links == 3);
    CHECK(loops == 4);

    auto w = to_dot(wp1_graph(2, 4));
    CHECK(w.find("(inf)") != std::string::npos);
}
