#include "qlens/ktheory.hpp"

#include <json.hpp>

namespace qlens {

std::string KTheory::str() const {
    return "K0 = " + k0.str() + "; K1 = " + k1.str();
}

std::string KTheory::to_json() const {
    nlohmann::ordered_json j;
    j["k0"] = nlohmann::ordered_json::parse(k0.to_json());
    j["k1"] = nlohmann::ordered_json::parse(k1.to_json());
    return j.dump();
}

IntegerMatrix k_matrix(const DirectedMultigraph& g) {
    std::vector<std::size_t> regular;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_class(v) == VertexClass::Regular) regular.push_back(v);
    IntegerMatrix K(regular.size(), g.vertex_count());
    auto adj = adjacency_matrix(g);
    for (std::size_t i = 0; i < regular.size(); ++i)
        for (std::size_t j = 0; j < g.vertex_count(); ++j) {
            K.at(i, j) = adj.at(regular[i], j).value();
            if (regular[i] == j) K.at(i, j) -= 1;
        }
    return K;
}

KTheory graph_k_theory(const DirectedMultigraph& g) {
    IntegerMatrix K = k_matrix(g);
    KTheory kt;
    kt.k0 = cokernel(K, g.vertex_count());
    kt.k1.free_rank = K.rows() - matrix_rank(K);
    return kt;
}

KTheory lens_k_theory(int n, long N, const WeightVector& m) {
    return graph_k_theory(lens_graph(n, N, m));
}

namespace {

KTheory make_k(std::size_t free_rank, std::vector<mpz_class> torsion, std::size_t k1_rank) {
    KTheory kt;
    kt.k0 = AbelianGroup::from_cyclic_orders(free_rank, std::move(torsion));
    kt.k1.free_rank = k1_rank;
    return kt;
}

}  // namespace

LensOracleResult oracle_lens_k(LensFamily family, long k, long l) {
    mpz_class kk = k;
    LensOracleResult res;
    switch (family) {
        case LensFamily::L5A: {
            std::vector<mpz_class> torsion;
            if (k % 2 == 1 || l % 2 == 0)
                torsion = {kk, kk};
            else
                torsion = {2 * kk, kk / 2};
            res.groups = make_k(l, std::move(torsion), l);
            return res;
        }
        case LensFamily::L5B: {
            std::vector<mpz_class> torsion;
            if (k % 2 == 1)
                torsion.assign(l + 1, kk);
            else {
                torsion = {2 * kk, kk / 2};
                for (long i = 0; i < l - 1; ++i) torsion.push_back(kk);
            }
            res.groups = make_k(l, std::move(torsion), l);
            return res;
        }
        case LensFamily::L7: {
            mpz_class alpha = kk * l * (kk + 1) / 2;
            mpz_class beta_num = alpha * (2 * kk * l + l + 3);
            if (beta_num % 6 != 0) throw UnmatchedCase("beta is not an integer");
            mpz_class beta = beta_num / 6;
            std::vector<mpz_class> torsion;
            if (alpha % kk == 0) {
                mpz_class g = gcd(kk, beta);
                torsion = {g, kk, kk * kk / g};
                mpz_class b = beta % kk;
                if (b == 0)
                    res.l7_case = 1;
                else if (6 * b == kk || 6 * b == 5 * kk)
                    res.l7_case = 2;
                else if (3 * b == kk || 3 * b == 2 * kk)
                    res.l7_case = 3;
                else if (2 * b == kk)
                    res.l7_case = 4;
                else
                    throw UnmatchedCase("beta mod k = " + b.get_str() +
                                        " outside the enumerated residue classes");
            } else {
                if (k % 2 != 0 || alpha % (kk / 2) != 0)
                    throw UnmatchedCase("k does not divide alpha but k/2 does not either");
                mpz_class half = kk / 2;
                mpz_class g = gcd(half, beta);
                torsion = {g, half, 2 * kk * kk / g};
                mpz_class b = beta % half;
                if (b == 0)
                    res.l7_case = 5;
                else if (3 * b == half || 3 * b == 2 * half)
                    res.l7_case = 6;
                else
                    throw UnmatchedCase("beta mod k/2 = " + b.get_str() +
                                        " outside the enumerated residue classes");
            }
            res.groups = make_k(l, std::move(torsion), l);
            return res;
        }
        case LensFamily::L3:
            throw UnmatchedCase("no closed-form K-groups carried for the L3 family");
    }
    throw UnmatchedCase("unknown family");
}

FamilyInstance family_instance(LensFamily family, long k, long l) {
    switch (family) {
        case LensFamily::L3:
            return {1, k * l, {1, l}};
        case LensFamily::L5A:
            return {2, k * l, {1, 1, l}};
        case LensFamily::L5B:
            return {2, k * l, {1, l, l}};
        case LensFamily::L7:
            return {3, k * l, {1, 1, 1, l}};
    }
    throw std::logic_error("unknown family");
}

MultiplicityMatrix oracle_multiplicities(LensFamily family, long k, long l) {
    mpz_class kk = k;
    auto inst = family_instance(family, k, l);
    auto p = lens_parameters(inst.N, inst.m);
    // Distinguished vertices in level-major order, same as lens_graph.
    std::vector<std::pair<int, long>> verts;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        for (long r = 0; r < p.c[i]; ++r) verts.emplace_back(static_cast<int>(i), r);
    auto M = MultiplicityMatrix::zero(verts.size());
    for (std::size_t a = 0; a < verts.size(); ++a) M.at(a, a) = Multiplicity(1L);

    // The published loop label r names the skew-product residue -r mod c_i
    // (checked against path counting on instances where the two orderings
    // differ); translate before writing.
    auto set = [&](int li, long ri, int lj, long rj, mpz_class v) {
        long ti = (p.c[li] - ri) % p.c[li];
        long tj = (p.c[lj] - rj) % p.c[lj];
        std::size_t a = 0, b = 0;
        for (std::size_t t = 0; t < verts.size(); ++t) {
            if (verts[t] == std::make_pair(li, ti)) a = t;
            if (verts[t] == std::make_pair(lj, tj)) b = t;
        }
        M.at(a, b) = Multiplicity(std::move(v));
    };

    mpz_class alpha = kk * l * (kk + 1) / 2;
    mpz_class beta = alpha * (2 * kk * l + l + 3) / 6;
    switch (family) {
        case LensFamily::L3:
            for (long s = 0; s < p.c[1]; ++s) set(0, 0, 1, s, kk);
            break;
        case LensFamily::L5A:
            set(0, 0, 1, 0, kk * l);
            for (long r = 0; r < p.c[2]; ++r) {
                set(0, 0, 2, r, kk * l * (kk + 1) / 2 - r * kk);
                set(1, 0, 2, r, kk);
            }
            break;
        case LensFamily::L5B:
            for (long r = 0; r < p.c[1]; ++r) set(0, 0, 1, r, kk);
            for (long r = 0; r < p.c[2]; ++r) set(0, 0, 2, r, kk * (kk + 1) / 2);
            for (long r = 0; r < p.c[1]; ++r) set(1, r, 2, r, kk);
            break;
        case LensFamily::L7:
            set(0, 0, 1, 0, kk * l);
            set(1, 0, 2, 0, kk * l);
            set(0, 0, 2, 0, kk * l * (kk * l + 1) / 2);
            for (long r = 0; r < p.c[3]; ++r) {
                set(1, 0, 3, r, alpha - r * kk);
                set(2, 0, 3, r, kk);
                set(0, 0, 3, r, beta - alpha * r + kk * r * (r - 1) / 2);
            }
            break;
    }
    return M;
}

}  // namespace qlens
