#include "hopf/conjugacy.hpp"

#include <algorithm>

namespace hopf {

ConjugateSubring conjugate_subring(const FusionRing& ring, FusionRing::Index c,
                                   const FusionSubring& K) {
    if (c >= ring.rank())
        throw IndexOutOfRange("conjugate_subring: index out of range");
    const RingElement lambda = integral(K).normalized;
    const RingElement c_lambda = multiply(ring, RingElement::basis_element(ring, c), lambda);

    std::vector<FusionRing::Index> members;
    for (std::size_t d = 0; d < ring.rank(); ++d) {
        RingElement lhs = multiply(ring, RingElement::basis_element(ring, d), c_lambda);
        if (lhs == c_lambda * Rat(ring.dims[d]))
            members.push_back(d);
    }

    FusionSubring result(ring, members);
    // closed under product, dual, and contains the unit
    if (!result.contains(ring.unit))
        throw ClosureViolation("conjugate subring misses the unit");
    for (FusionRing::Index x : result.members()) {
        if (!result.contains(ring.dual[x]))
            throw ClosureViolation("conjugate subring not closed under dual at " + ring.basis[x]);
        for (FusionRing::Index y : result.members())
            for (const auto& [e, m] : ring.products[x][y])
                if (!result.contains(e))
                    throw ClosureViolation("conjugate subring not closed under product at (" +
                                           ring.basis[x] + "," + ring.basis[y] + ")");
    }
    return ConjugateSubring{&K, c, std::move(result)};
}

bool check_invertible_conjugation(const FusionRing& ring, FusionRing::Index g, const FusionSubring& K) {
    if (ring.dims[g] != 1)
        throw Error("check_invertible_conjugation: element is not invertible");
    std::set<FusionRing::Index> conjugated;
    for (FusionRing::Index x : K.members()) {
        auto supp = product_support(ring, product_support(ring, {g}, {x}), {ring.dual[g]});
        if (supp.size() != 1)
            return false;
        conjugated.insert(supp[0]);
    }
    const ConjugateSubring conj = conjugate_subring(ring, g, K);
    return std::vector<FusionRing::Index>(conjugated.begin(), conjugated.end()) ==
           conj.result.members();
}

bool check_conjugate_maximality(const FusionRing& ring, FusionRing::Index c,
                                const FusionSubring& K, std::size_t max_basis) {
    const FusionSubring ck = conjugate_subring(ring, c, K).result;
    const CosetPartition rights = right_cosets(ring, K);
    const auto& coset = rights.class_of(c).members;

    auto lc_in_ck = [&](const FusionSubring& L) {
        auto supp = product_support(ring, L.members(), {c});
        return std::includes(coset.begin(), coset.end(), supp.begin(), supp.end());
    };

    if (!lc_in_ck(ck))
        return false;
    for (const FusionSubring& L : enumerate_subrings(ring, max_basis))
        if (lc_in_ck(L) && !L.subset_of(ck))
            return false;
    return true;
}

bool check_conjugate_support(const FusionRing& ring, FusionRing::Index c, const FusionSubring& K) {
    auto triple = product_support(ring, product_support(ring, {c}, K.members()),
                                  {ring.dual[c]});
    const ConjugateSubring conj = conjugate_subring(ring, c, K);
    const auto& members = conj.result.members();
    return std::includes(triple.begin(), triple.end(), members.begin(), members.end());
}

MackeyCertificate is_mackey_pair(const FusionRing& ring, const FusionSubring& L,
                                 const FusionSubring& K) {
    const CosetPartition doubles = double_cosets(ring, L, K);
    const CosetPartition rights = right_cosets(ring, K);

    MackeyCertificate cert{L, K, {}, true, std::nullopt};
    for (std::size_t c = 0; c < ring.rank(); ++c) {
        MackeyRow row;
        row.c = c;
        row.dim_lck = doubles.class_of(c).dim;
        row.dim_l = L.dim();
        row.dim_ck = rights.class_of(c).dim;
        row.dim_l_cap_ck = intersect(L, conjugate_subring(ring, c, K).result).dim();
        row.equal = (row.dim_lck * row.dim_l_cap_ck == row.dim_l * row.dim_ck);
        if (!row.equal && cert.pair) {
            cert.pair = false;
            cert.first_failure = c;
        }
        cert.rows.push_back(row);
    }
    return cert;
}

std::vector<FusionRing::Index> dimension_inequality_violations(const FusionRing& ring,
                                                   const FusionSubring& L,
                                                   const FusionSubring& K) {
    std::vector<FusionRing::Index> bad;
    for (const MackeyRow& row : is_mackey_pair(ring, L, K).rows)
        if (row.dim_lck * row.dim_l_cap_ck > row.dim_l * row.dim_ck)
            bad.push_back(row.c);
    return bad;
}

bool is_character_normal(const FusionRing& ring, const FusionSubring& K) {
    const RingElement lambda = integral(K).normalized;
    for (std::size_t d = 0; d < ring.rank(); ++d) {
        RingElement de = RingElement::basis_element(ring, d);
        if (multiply(ring, lambda, de) != multiply(ring, de, lambda))
            return false;
    }
    return true;
}

bool check_orbit_law(const FusionRing& ring, const FusionSubring& K) {
    const InvertibleGroup G = invertible_group(ring);
    const CosetPartition rights = right_cosets(ring, K);
    const CosetPartition doubles = double_cosets(ring, G.subring, K);

    for (const CosetClass& cls : doubles.classes) {
        const CosetClass& C = rights.class_of(cls.representative);
        Int stabilizer = 0;
        for (FusionRing::Index g : G.elements) {
            const auto& terms = ring.products[g][C.representative];
            if (terms.size() != 1 || terms[0].second != 1)
                return false; // invertibles must permute the basis
            if (rights.class_of(terms[0].first).representative == C.representative)
                ++stabilizer;
        }
        if (Int(cls.right_coset_reps.size()) * stabilizer != Int(G.elements.size()))
            return false;
    }
    return true;
}

bool check_normal_self_pair(const FusionRing& ring, const FusionSubring& K) {
    if (!is_character_normal(ring, K))
        throw NotNormal("check_normal_self_pair: subring is not character-normal");

    bool contained = true;
    for (std::size_t c = 0; c < ring.rank(); ++c)
        if (!K.subset_of(conjugate_subring(ring, c, K).result))
            contained = false;

    bool pair = is_mackey_pair(ring, K, K).pair;
    if (contained != pair)
        throw Error("check_normal_self_pair: containment route and certificate disagree");
    return contained;
}

bool induced_tensor_dimension_check(const FusionRing& ring, const FusionSubring& L,
                              const FusionSubring& K, const Int& dimM, const Int& dimN) {
    MackeyCertificate cert = is_mackey_pair(ring, L, K);
    if (!cert.pair)
        throw NotMackeyPair("induced_tensor_dimension_check: (L,K) is not a Mackey pair");

    const Rat dim_h(ring.total_dimension());
    const Rat lhs = (dim_h / Rat(K.dim())) * Rat(dimM) * (dim_h / Rat(L.dim())) * Rat(dimN);

    const CosetPartition doubles = double_cosets(ring, L, K);
    const CosetPartition rights = right_cosets(ring, K);
    Rat rhs = 0;
    for (const CosetClass& cls : doubles.classes) {
        FusionRing::Index c = cls.representative;
        const Int cap = intersect(L, conjugate_subring(ring, c, K).result).dim();
        const Rat conj_dim = Rat(rights.class_of(c).dim) / Rat(K.dim()) * Rat(dimM);
        rhs += (dim_h / Rat(cap)) * conj_dim * Rat(dimN);
    }
    return lhs == rhs;
}

} // namespace hopf
