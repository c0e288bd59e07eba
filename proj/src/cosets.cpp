#include "hopf/cosets.hpp"

#include <algorithm>

namespace hopf {

namespace {

// Builds a partition from a pairwise equivalence test, verifying transitivity
// instead of assuming it.
std::vector<CosetClass>
partition_by(const FusionRing& ring,
             const std::function<bool(FusionRing::Index, FusionRing::Index)>& related) {
    const std::size_t n = ring.rank();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c; d < n; ++d) {
            bool r = (c == d) || related(c, d);
            rel[c][d] = rel[d][c] = r;
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (rel[a][b] && rel[b][c] && !rel[a][c])
                    throw Error("coset relation is not transitive at (" + ring.basis[a] + "," +
                                ring.basis[b] + "," + ring.basis[c] + "); input ring is invalid");

    std::vector<bool> used(n, false);
    std::vector<CosetClass> classes;
    for (std::size_t c = 0; c < n; ++c) {
        if (used[c])
            continue;
        CosetClass cls;
        cls.representative = c;
        cls.dim = 0;
        for (std::size_t d = c; d < n; ++d)
            if (rel[c][d]) {
                used[d] = true;
                cls.members.push_back(d);
                cls.dim += ring.dims[d] * ring.dims[d];
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace

const CosetClass& CosetPartition::class_of(FusionRing::Index c) const {
    for (const auto& cls : classes)
        if (std::binary_search(cls.members.begin(), cls.members.end(), c))
            return cls;
    throw IndexOutOfRange("class_of: index not covered by the partition");
}

CosetPartition right_cosets(const FusionRing& ring, const FusionSubring& K) {
    if (&K.parent() != &ring)
        throw RingMismatch("right_cosets: subring of a different ring");
    const RingElement lambda = integral(K).normalized;

    std::vector<RingElement> products;
    products.reserve(ring.rank());
    for (std::size_t c = 0; c < ring.rank(); ++c)
        products.push_back(multiply(ring, RingElement::basis_element(ring, c), lambda));

    auto related = [&](FusionRing::Index c, FusionRing::Index d) {
        return products[c] * Rat(ring.dims[d]) == products[d] * Rat(ring.dims[c]);
    };
    return CosetPartition{CosetKind::Right, std::nullopt, K, partition_by(ring, related)};
}

CosetPartition double_cosets(const FusionRing& ring, const FusionSubring& L,
                             const FusionSubring& K) {
    if (&L.parent() != &ring || &K.parent() != &ring)
        throw RingMismatch("double_cosets: subring of a different ring");
    const RingElement lambda_l = integral(L).normalized;
    const RingElement lambda_k = integral(K).normalized;

    std::vector<RingElement> products;
    products.reserve(ring.rank());
    for (std::size_t c = 0; c < ring.rank(); ++c)
        products.push_back(multiply(
            ring, lambda_l, multiply(ring, RingElement::basis_element(ring, c), lambda_k)));

    auto related = [&](FusionRing::Index c, FusionRing::Index d) {
        return products[c] * Rat(ring.dims[d]) == products[d] * Rat(ring.dims[c]);
    };
    CosetPartition partition{CosetKind::Double, L, K, partition_by(ring, related)};

    // Constituent right cosets of each double coset (the set S): every double
    // coset must be a disjoint union of whole right-coset classes.
    CosetPartition rights = right_cosets(ring, K);
    for (auto& cls : partition.classes) {
        for (const auto& rc : rights.classes) {
            bool inside = std::includes(cls.members.begin(), cls.members.end(),
                                        rc.members.begin(), rc.members.end());
            bool disjoint = true;
            for (FusionRing::Index m : rc.members)
                if (std::binary_search(cls.members.begin(), cls.members.end(), m))
                    disjoint = false;
            if (inside)
                cls.right_coset_reps.push_back(rc.representative);
            else if (!disjoint)
                throw Error("double coset is not a union of right cosets at representative " +
                            ring.basis[cls.representative] + "; input ring is invalid");
        }
    }
    return partition;
}

std::vector<FusionRing::Index> product_support(const FusionRing& ring,
                                               const std::vector<FusionRing::Index>& A,
                                               const std::vector<FusionRing::Index>& B) {
    std::set<FusionRing::Index> out;
    for (FusionRing::Index a : A) {
        if (a >= ring.rank())
            throw IndexOutOfRange("product_support: index out of range");
        for (FusionRing::Index b : B) {
            if (b >= ring.rank())
                throw IndexOutOfRange("product_support: index out of range");
            for (const auto& [e, m] : ring.products[a][b])
                out.insert(e);
        }
    }
    return {out.begin(), out.end()};
}

Int coset_rank(const CosetPartition& partition, const CosetClass& cls) {
    if (partition.kind != CosetKind::Right)
        throw Error("coset_rank: requires a right-coset partition");
    if (cls.dim % partition.right.dim() != 0)
        throw FreenessViolation("class dim " + cls.dim.str() + " not divisible by dim K = " +
                                partition.right.dim().str());
    return cls.dim / partition.right.dim();
}

SupportPartitionResult crosscheck_support_partition(const FusionRing& ring, const FusionSubring& L,
                               const FusionSubring& K) {
    CosetPartition integral_partition = double_cosets(ring, L, K);

    // Support of L·{c}·K per basis element.
    std::vector<std::vector<FusionRing::Index>> lck(ring.rank());
    for (std::size_t c = 0; c < ring.rank(); ++c)
        lck[c] = product_support(ring, product_support(ring, L.members(), {c}), K.members());

    for (std::size_t c = 0; c < ring.rank(); ++c)
        for (std::size_t d = c + 1; d < ring.rank(); ++d) {
            const CosetClass& cc = integral_partition.class_of(c);
            bool via_integral =
                std::binary_search(cc.members.begin(), cc.members.end(), d);
            bool via_support = (lck[c] == lck[d]);
            if (via_integral != via_support)
                return SupportPartitionResult{false, std::make_pair(c, d)};
        }
    return SupportPartitionResult{true, std::nullopt};
}

} // namespace hopf
