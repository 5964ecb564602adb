#pragma once

#include "qlens/graph.hpp"
#include "qlens/intlinalg.hpp"
#include "qlens/lens.hpp"

namespace qlens {

struct KTheory {
    AbelianGroup k0;
    AbelianGroup k1;  // always torsion-free

    friend bool operator==(const KTheory&, const KTheory&) = default;

    std::string str() const;
    std::string to_json() const;
};

/// Adjacency minus identity, rows restricted to regular vertices, columns all
/// vertices, both in graph vertex order. Requires finite multiplicities on
/// edges leaving regular vertices.
IntegerMatrix k_matrix(const DirectedMultigraph& g);

/// K_0 = cokernel of the K-matrix in Z^{|vertices|}; K_1 is free of rank
/// (#regular vertices) - rank(K-matrix).
KTheory graph_k_theory(const DirectedMultigraph& g);

KTheory lens_k_theory(int n, long N, const WeightVector& m);

enum class LensFamily { L3, L5A, L5B, L7 };

/// Closed-form K-groups for the worked lens families:
///   L5A = L_5^{kl;1,1,l}, L5B = L_5^{kl;1,l,l}, L7 = L_7^{kl;1,1,1,l}.
/// Torsion is returned in canonical (divisibility) order. For L7 the result
/// carries the selected case of the six-way residue split (1-based);
/// throws UnmatchedCase if the residue falls outside the enumerated classes.
struct LensOracleResult {
    KTheory groups;
    int l7_case = 0;  // 0 for L5A/L5B
};

LensOracleResult oracle_lens_k(LensFamily family, long k, long l);

/// Closed-form admissible-path counts for the four worked families, as the
/// full matrix over the distinguished set (loops included).
MultiplicityMatrix oracle_multiplicities(LensFamily family, long k, long l);

/// Instance parameters of the worked family: (n, N, weights).
struct FamilyInstance {
    int n;
    long N;
    WeightVector m;
};
FamilyInstance family_instance(LensFamily family, long k, long l);

}  // namespace qlens
