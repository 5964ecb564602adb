#include "qlens/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qlens {

DirectedMultigraph::DirectedMultigraph(std::vector<VertexId> vertices,
                                       const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
    std::map<std::pair<int, int>, std::size_t> by_key;
    std::set<std::string> tags;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (!by_key.emplace(std::make_pair(v.level, v.index), i).second)
            throw DuplicateVertex("duplicate vertex (" + std::to_string(v.level) + "," +
                                  std::to_string(v.index) + ")");
        if (!v.tag.empty() && !tags.insert(v.tag).second)
            throw DuplicateVertex("duplicate vertex tag \"" + v.tag + "\"");
    }
    // One record per (source, range); parallel records aggregate.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair;
    for (const auto& e : edges) {
        auto s = by_key.find({e.source.level, e.source.index});
        auto r = by_key.find({e.range.level, e.range.index});
        if (s == by_key.end())
            throw UnknownEndpoint("edge source (" + std::to_string(e.source.level) + "," +
                                  std::to_string(e.source.index) + ") is not a declared vertex");
        if (r == by_key.end())
            throw UnknownEndpoint("edge range (" + std::to_string(e.range.level) + "," +
                                  std::to_string(e.range.index) + ") is not a declared vertex");
        if (!e.multiplicity.is_infinite() && e.multiplicity.value() <= 0)
            throw ZeroMultiplicity("edge multiplicity must be >= 1");
        auto key = std::make_pair(s->second, r->second);
        auto it = by_pair.find(key);
        if (it == by_pair.end()) {
            by_pair.emplace(key, edges_.size());
            edges_.push_back({s->second, r->second, e.multiplicity});
        } else {
            Edge& old = edges_[it->second];
            if (old.multiplicity.is_infinite() || e.multiplicity.is_infinite())
                old.multiplicity = Multiplicity::infinite();
            else
                old.multiplicity = Multiplicity(old.multiplicity.value() + e.multiplicity.value());
        }
    }
    out_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) out_[edges_[i].source].push_back(i);
}

std::size_t DirectedMultigraph::index_of(const VertexId& v) const {
    auto i = find(v.level, v.index);
    if (!i)
        throw UnknownVertex("vertex (" + std::to_string(v.level) + "," + std::to_string(v.index) +
                            ") not in graph");
    return *i;
}

std::optional<std::size_t> DirectedMultigraph::find(int level, int index) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].level == level && vertices_[i].index == index) return i;
    return std::nullopt;
}

std::optional<std::size_t> DirectedMultigraph::find_tag(const std::string& tag) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].tag == tag) return i;
    return std::nullopt;
}

VertexClass DirectedMultigraph::vertex_class(std::size_t v) const {
    if (v >= vertices_.size()) throw UnknownVertex("vertex index out of range");
    if (out_[v].empty()) return VertexClass::Sink;
    for (std::size_t ei : out_[v])
        if (edges_[ei].multiplicity.is_infinite()) return VertexClass::InfiniteEmitter;
    return VertexClass::Regular;
}

bool DirectedMultigraph::has_infinite_edge() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.multiplicity.is_infinite(); });
}

mpz_class DirectedMultigraph::total_edge_multiplicity() const {
    mpz_class total = 0;
    for (const auto& e : edges_) {
        if (e.multiplicity.is_infinite())
            throw std::logic_error("total_edge_multiplicity on graph with INFINITE edge");
        total += e.multiplicity.value();
    }
    return total;
}

bool DirectedMultigraph::is_acyclic() const {
    // Kahn's algorithm on the edge records (multiplicity irrelevant).
    std::vector<std::size_t> indeg(vertices_.size(), 0);
    for (const auto& e : edges_) ++indeg[e.range];
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (indeg[v] == 0) stack.push_back(v);
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (std::size_t ei : out_[v])
            if (--indeg[edges_[ei].range] == 0) stack.push_back(edges_[ei].range);
    }
    return seen == vertices_.size();
}

bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b) {
    if (a.vertices_.size() != b.vertices_.size() || a.edges_.size() != b.edges_.size())
        return false;
    for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
        if (!(a.vertices_[i] == b.vertices_[i]) || a.vertices_[i].tag != b.vertices_[i].tag)
            return false;
    }
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const Edge& x = a.edges_[i];
        const Edge& y = b.edges_[i];
        if (x.source != y.source || x.range != y.range || !(x.multiplicity == y.multiplicity))
            return false;
    }
    return true;
}

DirectedMultigraph make_graph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges) {
    return DirectedMultigraph(std::move(vertices), edges);
}

MultiplicityMatrix adjacency_matrix(const DirectedMultigraph& g) {
    auto m = MultiplicityMatrix::zero(g.vertex_count());
    for (const auto& e : g.edges()) m.at(e.source, e.range) = e.multiplicity;
    return m;
}

std::string to_dot(const DirectedMultigraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    // Group vertices of equal level on one rank, level 0 on top.
    std::map<int, std::vector<std::string>> levels;
    for (const auto& v : g.vertices()) levels[v.level].push_back(v.tag);
    for (const auto& [level, tags] : levels) {
        out << "  { rank=same;";
        for (const auto& t : tags) out << " \"" << t << "\";";
        out << " }\n";
    }
    for (const auto& e : g.edges()) {
        out << "  \"" << g.vertices()[e.source].tag << "\" -> \"" << g.vertices()[e.range].tag
            << "\"";
        if (e.multiplicity.is_infinite())
            out << " [label=\"(inf)\"]";
        else if (e.multiplicity.value() != 1)
            out << " [label=\"(" << e.multiplicity.value() << ")\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

nlohmann::ordered_json multiplicity_to_json(const Multiplicity& m) {
    if (m.is_infinite()) return "inf";
    if (m.value().fits_slong_p()) return m.value().get_si();
    return m.value().get_str();
}

Multiplicity multiplicity_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return Multiplicity::infinite();
        try {
            return Multiplicity(mpz_class(s));
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid multiplicity string \"" + s + "\"");
        }
    }
    if (j.is_number_integer()) return Multiplicity(mpz_class(j.get<long>()));
    throw ParseError("multiplicity must be an integer or \"inf\"");
}

}  // namespace

std::string to_json(const DirectedMultigraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices())
        j["vertices"].push_back({{"level", v.level}, {"index", v.index}, {"tag", v.tag}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({{"source", g.vertices()[e.source].tag},
                              {"range", g.vertices()[e.range].tag},
                              {"multiplicity", multiplicity_to_json(e.multiplicity)}});
    return j.dump();
}

DirectedMultigraph from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON: expected object with \"vertices\" and \"edges\"");
    std::vector<VertexId> vertices;
    std::map<std::string, VertexId> by_tag;
    for (const auto& jv : j["vertices"]) {
        if (!jv.contains("level") || !jv.contains("index") || !jv.contains("tag"))
            throw ParseError("graph JSON: vertex needs level, index, tag");
        VertexId v{jv["level"].get<int>(), jv["index"].get<int>(), jv["tag"].get<std::string>()};
        by_tag[v.tag] = v;
        vertices.push_back(std::move(v));
    }
    std::vector<EdgeSpec> edges;
    for (const auto& je : j["edges"]) {
        if (!je.contains("source") || !je.contains("range") || !je.contains("multiplicity"))
            throw ParseError("graph JSON: edge needs source, range, multiplicity");
        auto s = by_tag.find(je["source"].get<std::string>());
        auto r = by_tag.find(je["range"].get<std::string>());
        if (s == by_tag.end() || r == by_tag.end())
            throw ParseError("graph JSON: edge endpoint tag not declared");
        edges.push_back({s->second, r->second, multiplicity_from_json(je["multiplicity"])});
    }
    try {
        return DirectedMultigraph(std::move(vertices), edges);
    } catch (const std::runtime_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

}  // namespace qlens
