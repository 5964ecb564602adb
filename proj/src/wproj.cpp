#include "qlens/wproj.hpp"

#include <numeric>

#include <json.hpp>

namespace qlens {

DirectedMultigraph wp1_graph(long m0, long m1) {
    long g = std::gcd(m0, m1);
    long mt1 = m1 / g;
    std::vector<VertexId> vertices;
    for (long j = 0; j <= mt1; ++j)
        vertices.push_back({static_cast<int>(j), 0, "w" + std::to_string(j)});
    std::vector<EdgeSpec> edges;
    for (long j = 1; j <= mt1; ++j)
        edges.push_back({vertices[0], vertices[j], Multiplicity::infinite()});
    return make_graph(std::move(vertices), edges);
}

WPCanonicalForm wp1_canonical(long m0, long m1) {
    long g = std::gcd(m0, m1);
    return {g, {1, m1 / g}};
}

HypothesisReport wp_hypothesis(const WeightVector& m) {
    HypothesisReport report;
    report.holds = true;
    for (std::size_t j = 1; j < m.size(); ++j) {
        int witness = -1;
        for (std::size_t i = 0; i < j; ++i)
            if (std::gcd(m[i], m[j]) == 1) {
                witness = static_cast<int>(i);
                break;
            }
        if (witness < 0) {
            report.holds = false;
            report.failing_index = static_cast<int>(j);
            return report;
        }
        report.witnesses.push_back(witness);
    }
    return report;
}

std::string WPKTheory::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(groups.to_json());
    j["af"] = af;
    j["extension_trace"] = {{"steps", nlohmann::ordered_json::array()}};
    for (const auto& s : extension_trace)
        j["extension_trace"]["steps"].push_back({{"n", s.n}, {"ideal_copies", s.ideal_copies}});
    return j.dump();
}

WPKTheory wp_k_theory(const WeightVector& m) {
    if (m.size() < 2) throw DimensionMismatch("wp_k_theory needs at least two weights");
    int n = static_cast<int>(m.size()) - 1;
    WPKTheory result;
    result.groups.k1.free_rank = 0;
    if (n == 1) {
        long g = std::gcd(m[0], m[1]);
        result.groups.k0.free_rank = 1 + static_cast<std::size_t>(m[1] / g);
        result.af = wp1_graph(m[0], m[1]).is_acyclic();
        return result;
    }
    auto report = wp_hypothesis(m);
    if (!report.holds)
        throw HypothesisNotSatisfied(
            "no i < " + std::to_string(report.failing_index) + " with gcd(m_i, m_" +
                std::to_string(report.failing_index) + ") = 1",
            report.failing_index);
    std::size_t rank = 1;
    for (std::size_t i = 1; i < m.size(); ++i) rank += static_cast<std::size_t>(m[i]);
    result.groups.k0.free_rank = rank;
    for (int np = n; np >= 2; --np) result.extension_trace.push_back({np, m[np]});
    return result;
}

}  // namespace qlens
