#pragma once

#include "qlens/graph.hpp"
#include "qlens/ktheory.hpp"
#include "qlens/lens.hpp"

namespace qlens {

/// Teardrop canonical form of a weighted projective line: (1, m1/gcd(m0,m1)).
struct WPCanonicalForm {
    long g;  // gcd(m0, m1)
    std::pair<long, long> reduced;
};

/// Coprimality chain report: for each j >= 1, the least i < j with
/// gcd(m_i, m_j) = 1, or the first failing j.
struct HypothesisReport {
    bool holds = false;
    std::vector<int> witnesses;  // witnesses[j-1] = least coprime i < j
    int failing_index = -1;      // first j with no witness, -1 if none
};

/// W_1(m) graph: vertices w_0..w_{m1/gcd}, one INFINITE edge w_0 -> w_j for
/// each j >= 1.
DirectedMultigraph wp1_graph(long m0, long m1);

WPCanonicalForm wp1_canonical(long m0, long m1);

HypothesisReport wp_hypothesis(const WeightVector& m);

/// One quotient step of the ideal chain: the dimension-n' space contains an
/// ideal of ideal_copies compact-operator summands over the dimension-(n'-1)
/// quotient.
struct ExtensionStep {
    int n;
    long ideal_copies;
};

struct WPKTheory {
    KTheory groups;
    bool af = false;  // n = 1 only: W_1(m) has no cycles
    std::vector<ExtensionStep> extension_trace;

    std::string to_json() const;
};

/// K-groups of WP^n(m). For n = 1 no hypothesis is needed; for n >= 2 the
/// coprimality chain must hold, otherwise HypothesisNotSatisfied is thrown
/// with the failing index.
WPKTheory wp_k_theory(const WeightVector& m);

}  // namespace qlens
