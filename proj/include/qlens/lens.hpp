#pragma once

#include <vector>

#include "qlens/graph.hpp"

namespace qlens {

/// Positive weights m_0,...,m_n.
using WeightVector = std::vector<long>;

/// Derived parameters of a lens instance: c_i = gcd(N, m_i), d_i = N / c_i.
struct LensParameters {
    long N = 1;
    WeightVector m;
    std::vector<long> c;
    std::vector<long> d;
};

/// The distinguished skew-product vertices (v_k, t), t < c_k, in level-major
/// order; these are in bijection with the lens-graph vertices v_k^t.
struct DistinguishedSet {
    std::vector<std::size_t> members;  // indices into the skew product's vertex list
};

/// Sphere graph: n+1 vertices v_0..v_n, one edge v_i -> v_j for each i <= j.
DirectedMultigraph sphere_graph(int n);

/// Edge labels in Z_N, aligned with g.edges() order.
using EdgeLabelling = std::vector<long>;

/// Label e_ij with m_i mod N. Throws DimensionMismatch if |m| != n+1.
EdgeLabelling weight_labelling(const DirectedMultigraph& sphere, long N, const WeightVector& m);

/// Skew product g x_c Z_N: vertices (v, r), and for each edge e: u -> w and
/// each r an edge (u, r - c(e) mod N) -> (w, r) of the same multiplicity.
DirectedMultigraph skew_product(const DirectedMultigraph& g, const EdgeLabelling& labelling,
                                long N);

LensParameters lens_parameters(long N, const WeightVector& m);
DistinguishedSet distinguished_set(const DirectedMultigraph& skew, const LensParameters& p);

/// Admissible-path counts n_{ij}^{rs}: paths of length >= 1 between D
/// vertices whose strictly interior vertices avoid D (first-return counting).
/// Dynamic programming over the D-punctured subgraph, parallel across sources.
/// Throws PuncturedGraphCyclic if the punctured subgraph has a cycle.
MultiplicityMatrix count_admissible(const DirectedMultigraph& skew, const DistinguishedSet& D);

/// Single-threaded reference of count_admissible; must agree bit-for-bit.
MultiplicityMatrix count_admissible_serial(const DirectedMultigraph& skew,
                                           const DistinguishedSet& D);

/// An admissible path as the sequence of traversed edge-record indices.
using Path = std::vector<std::size_t>;

/// Exhaustive enumeration of admissible paths from src to tgt (both in D).
/// Test oracle for count_admissible; exponential, keep inputs small.
std::vector<Path> enumerate_admissible(const DirectedMultigraph& skew, const DistinguishedSet& D,
                                       std::size_t src, std::size_t tgt);

/// The lens graph L_{2n+1}^{N;m}: vertices v_i^r (r < c_i) with edge
/// multiplicities the admissible-path counts.
DirectedMultigraph lens_graph(int n, long N, const WeightVector& m);

}  // namespace qlens
