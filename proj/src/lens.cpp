#include "qlens/lens.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlens {

DirectedMultigraph sphere_graph(int n) {
    std::vector<VertexId> vertices;
    for (int i = 0; i <= n; ++i) vertices.push_back({i, 0, "v" + std::to_string(i)});
    std::vector<EdgeSpec> edges;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            edges.push_back({vertices[i], vertices[j], Multiplicity(1L)});
    return make_graph(std::move(vertices), edges);
}

EdgeLabelling weight_labelling(const DirectedMultigraph& sphere, long N, const WeightVector& m) {
    int n = static_cast<int>(sphere.vertex_count()) - 1;
    if (static_cast<int>(m.size()) != n + 1)
        throw DimensionMismatch("weight vector length " + std::to_string(m.size()) +
                                " does not match n+1 = " + std::to_string(n + 1));
    EdgeLabelling labels;
    labels.reserve(sphere.edges().size());
    for (const auto& e : sphere.edges()) {
        long mi = m[sphere.vertices()[e.source].level];
        labels.push_back(((mi % N) + N) % N);
    }
    return labels;
}

DirectedMultigraph skew_product(const DirectedMultigraph& g, const EdgeLabelling& labelling,
                                long N) {
    if (labelling.size() != g.edges().size())
        throw UnlabelledEdge("labelling covers " + std::to_string(labelling.size()) + " of " +
                             std::to_string(g.edges().size()) + " edges");
    std::vector<VertexId> vertices;
    vertices.reserve(g.vertex_count() * N);
    for (const auto& v : g.vertices())
        for (long r = 0; r < N; ++r)
            vertices.push_back({v.level, static_cast<int>(v.index * N + r),
                                v.tag + "_" + std::to_string(r)});
    std::vector<EdgeSpec> edges;
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        if (e.multiplicity.is_infinite())
            throw std::logic_error("skew_product requires finite multiplicities");
        long c = labelling[ei];
        for (long r = 0; r < N; ++r) {
            long src_r = ((r - c) % N + N) % N;
            edges.push_back({vertices[e.source * N + src_r], vertices[e.range * N + r],
                             e.multiplicity});
        }
    }
    return make_graph(std::move(vertices), edges);
}

LensParameters lens_parameters(long N, const WeightVector& m) {
    LensParameters p;
    p.N = N;
    p.m = m;
    for (long mi : m) {
        long c = std::gcd(N, mi);
        p.c.push_back(c);
        p.d.push_back(N / c);
    }
    return p;
}

DistinguishedSet distinguished_set(const DirectedMultigraph& skew, const LensParameters& p) {
    DistinguishedSet D;
    for (std::size_t k = 0; k < p.c.size(); ++k)
        for (long t = 0; t < p.c[k]; ++t) {
            auto idx = skew.find(static_cast<int>(k), static_cast<int>(t));
            if (!idx) throw UnknownVertex("distinguished vertex not present in skew product");
            D.members.push_back(*idx);
        }
    return D;
}

namespace {

// Topological order of the subgraph induced on the non-D vertices.
// Throws PuncturedGraphCyclic if that subgraph has a directed cycle.
std::vector<std::size_t> punctured_topo_order(const DirectedMultigraph& skew,
                                              const std::vector<char>& in_D) {
    std::size_t n = skew.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& e : skew.edges())
        if (!in_D[e.source] && !in_D[e.range]) ++indeg[e.range];
    std::vector<std::size_t> order, stack;
    for (std::size_t v = 0; v < n; ++v)
        if (!in_D[v] && indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (std::size_t ei : skew.out_edges()[v]) {
            const Edge& e = skew.edges()[ei];
            if (!in_D[e.range] && --indeg[e.range] == 0) stack.push_back(e.range);
        }
    }
    std::size_t outside = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (!in_D[v]) ++outside;
    if (order.size() != outside)
        throw PuncturedGraphCyclic("D-punctured subgraph contains a directed cycle");
    return order;
}

// First-return DP from a single distinguished source. Writes one row of the
// multiplicity matrix: counts of admissible paths to each D vertex.
void count_from_source(const DirectedMultigraph& skew, const std::vector<char>& in_D,
                       const std::vector<std::size_t>& topo,
                       const std::vector<long>& d_position, std::size_t src,
                       MultiplicityMatrix& out, std::size_t row) {
    std::vector<mpz_class> partial(skew.vertex_count(), 0);
    auto relax = [&](std::size_t ei, const mpz_class& weight) {
        const Edge& e = skew.edges()[ei];
        mpz_class w = weight * e.multiplicity.value();
        if (in_D[e.range]) {
            std::size_t col = static_cast<std::size_t>(d_position[e.range]);
            out.at(row, col) = Multiplicity(out.at(row, col).value() + w);
        } else {
            partial[e.range] += w;
        }
    };
    for (std::size_t ei : skew.out_edges()[src]) relax(ei, 1);
    for (std::size_t v : topo) {
        if (partial[v] == 0) continue;
        for (std::size_t ei : skew.out_edges()[v]) relax(ei, partial[v]);
    }
}

MultiplicityMatrix count_impl(const DirectedMultigraph& skew, const DistinguishedSet& D,
                              bool parallel) {
    std::vector<char> in_D(skew.vertex_count(), 0);
    std::vector<long> d_position(skew.vertex_count(), -1);
    for (std::size_t i = 0; i < D.members.size(); ++i) {
        in_D[D.members[i]] = 1;
        d_position[D.members[i]] = static_cast<long>(i);
    }
    auto topo = punctured_topo_order(skew, in_D);
    auto out = MultiplicityMatrix::zero(D.members.size());
    long nsrc = static_cast<long>(D.members.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long i = 0; i < nsrc; ++i)
        count_from_source(skew, in_D, topo, d_position, D.members[i], out,
                          static_cast<std::size_t>(i));
    return out;
}

}  // namespace

MultiplicityMatrix count_admissible(const DirectedMultigraph& skew, const DistinguishedSet& D) {
    return count_impl(skew, D, true);
}

MultiplicityMatrix count_admissible_serial(const DirectedMultigraph& skew,
                                           const DistinguishedSet& D) {
    return count_impl(skew, D, false);
}

std::vector<Path> enumerate_admissible(const DirectedMultigraph& skew, const DistinguishedSet& D,
                                       std::size_t src, std::size_t tgt) {
    std::vector<char> in_D(skew.vertex_count(), 0);
    for (std::size_t v : D.members) in_D[v] = 1;
    std::vector<Path> result;
    Path current;
    // Path length is bounded by |vertices| + 1 since the punctured interior
    // is acyclic; recursion terminates without an explicit visited set.
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        if (current.size() > skew.vertex_count() + 1)
            throw PuncturedGraphCyclic("admissible path exceeds vertex-count bound");
        for (std::size_t ei : skew.out_edges()[v]) {
            const Edge& e = skew.edges()[ei];
            long copies = e.multiplicity.value().get_si();
            current.push_back(ei);
            for (long a = 0; a < copies; ++a) {
                if (e.range == tgt) result.push_back(current);
            }
            if (!in_D[e.range]) {
                // Each parallel copy extends independently.
                for (long a = 0; a < copies; ++a) self(self, e.range);
            }
            current.pop_back();
        }
    };
    dfs(dfs, src);
    return result;
}

DirectedMultigraph lens_graph(int n, long N, const WeightVector& m) {
    auto sphere = sphere_graph(n);
    auto labelling = weight_labelling(sphere, N, m);
    auto skew = skew_product(sphere, labelling, N);
    auto p = lens_parameters(N, m);
    auto D = distinguished_set(skew, p);
    auto counts = count_admissible(skew, D);

    std::vector<VertexId> vertices;
    for (int i = 0; i <= n; ++i)
        for (long r = 0; r < p.c[i]; ++r)
            vertices.push_back({i, static_cast<int>(r),
                                "v" + std::to_string(i) + "_" + std::to_string(r)});
    std::vector<EdgeSpec> edges;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = 0; b < vertices.size(); ++b)
            if (counts.at(a, b).value() > 0)
                edges.push_back({vertices[a], vertices[b], counts.at(a, b)});
    return make_graph(std::move(vertices), edges);
}

}  // namespace qlens
