#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qlens/errors.hpp"

namespace qlens {

/// Vertex identity: (level, index) is the structural key, tag is the display
/// name used in DOT/JSON output.
struct VertexId {
    int level = 0;
    int index = 0;
    std::string tag;

    friend bool operator==(const VertexId& a, const VertexId& b) {
        return a.level == b.level && a.index == b.index;
    }
};

/// Edge multiplicity: a positive integer or the INFINITE sentinel.
/// INFINITE is never approximated by a large number; infinite emitters change
/// the shape of the K-theory matrix.
class Multiplicity {
  public:
    Multiplicity() : value_(1) {}
    explicit Multiplicity(mpz_class v) : value_(std::move(v)) {}
    explicit Multiplicity(long v) : value_(v) {}

    static Multiplicity infinite() {
        Multiplicity m;
        m.infinite_ = true;
        m.value_ = 0;
        return m;
    }

    bool is_infinite() const { return infinite_; }
    /// Finite value; only meaningful when !is_infinite().
    const mpz_class& value() const { return value_; }

    friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }

    std::string str() const {
        return infinite_ ? "inf" : value_.get_str();
    }

  private:
    mpz_class value_;
    bool infinite_ = false;
};

struct Edge {
    std::size_t source;  // index into the vertex list
    std::size_t range;
    Multiplicity multiplicity;
};

/// Record used when constructing a graph; endpoints named by (level, index).
struct EdgeSpec {
    VertexId source;
    VertexId range;
    Multiplicity multiplicity = Multiplicity(1);
};

enum class VertexClass { Regular, Sink, InfiniteEmitter };

/// Immutable directed multigraph with multiplicity-weighted edges.
/// Parallel edges are stored as one record carrying a count; vertex order is
/// construction order and fixes matrix row/column order downstream.
class DirectedMultigraph {
  public:
    DirectedMultigraph() = default;
    /// Validates: unique vertices, declared endpoints, no zero multiplicities.
    /// Throws DuplicateVertex, UnknownEndpoint, ZeroMultiplicity.
    DirectedMultigraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    /// Index of v in the vertex list; throws UnknownVertex.
    std::size_t index_of(const VertexId& v) const;
    std::optional<std::size_t> find(int level, int index) const;
    std::optional<std::size_t> find_tag(const std::string& tag) const;

    VertexClass vertex_class(std::size_t v) const;
    VertexClass vertex_class(const VertexId& v) const { return vertex_class(index_of(v)); }

    /// Edges grouped by source vertex (indices into edges()).
    const std::vector<std::vector<std::size_t>>& out_edges() const { return out_; }

    bool has_infinite_edge() const;
    /// Sum of all finite multiplicities; throws if any edge is INFINITE.
    mpz_class total_edge_multiplicity() const;
    /// True iff the graph contains no directed cycle.
    bool is_acyclic() const;

    friend bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b);

  private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

DirectedMultigraph make_graph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges);

/// Square matrix of multiplicities indexed by vertex order; may hold INFINITE.
struct MultiplicityMatrix {
    std::size_t dim = 0;
    std::vector<Multiplicity> entries;  // row-major

    const Multiplicity& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    Multiplicity& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }

    static MultiplicityMatrix zero(std::size_t n) {
        MultiplicityMatrix m;
        m.dim = n;
        m.entries.assign(n * n, Multiplicity(mpz_class(0)));
        return m;
    }

    friend bool operator==(const MultiplicityMatrix&, const MultiplicityMatrix&) = default;
};

MultiplicityMatrix adjacency_matrix(const DirectedMultigraph& g);

/// DOT output: one arrow per edge record, label "(n)" for multiplicity n > 1,
/// "(inf)" for INFINITE; vertices ranked by level.
std::string to_dot(const DirectedMultigraph& g);
std::string to_json(const DirectedMultigraph& g);
/// Throws ParseError on malformed input.
DirectedMultigraph from_json(const std::string& text);

}  // namespace qlens
