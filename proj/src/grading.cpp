#include "hopf/grading.hpp"

#include <algorithm>

namespace hopf {

FusionSubring adjoint_subring(const FusionRing& ring) {
    std::set<FusionRing::Index> seed;
    for (std::size_t x = 0; x < ring.rank(); ++x)
        for (const auto& [e, m] : ring.products[x][ring.dual[x]])
            seed.insert(e);
    return generate_subring(ring, {seed.begin(), seed.end()});
}

Grading universal_grading(const FusionRing& ring) {
    const FusionSubring adjoint = adjoint_subring(ring);
    const CosetPartition cosets = right_cosets(ring, adjoint);

    // identity component first (it contains the unit), then by representative
    std::vector<std::vector<FusionRing::Index>> components;
    for (const auto& cls : cosets.classes)
        components.push_back(cls.members);
    std::sort(components.begin(), components.end(),
              [&](const auto& a, const auto& b) { return a.front() < b.front(); });
    auto unit_it = std::find_if(components.begin(), components.end(), [&](const auto& c) {
        return std::binary_search(c.begin(), c.end(), ring.unit);
    });
    std::rotate(components.begin(), unit_it, unit_it + 1);

    if (components[0] != adjoint.members())
        throw GradingInconsistency("identity component differs from the adjoint subring");

    std::vector<std::size_t> deg(ring.rank());
    for (std::size_t i = 0; i < components.size(); ++i)
        for (FusionRing::Index x : components[i])
            deg[x] = i;

    // group law from products: all of supp(x·y) must land in one component,
    // depending only on (deg x, deg y)
    const std::size_t u = components.size();
    std::vector<std::vector<std::size_t>> table(u, std::vector<std::size_t>(u, u));
    for (std::size_t x = 0; x < ring.rank(); ++x)
        for (std::size_t y = 0; y < ring.rank(); ++y)
            for (const auto& [e, m] : ring.products[x][y]) {
                std::size_t& slot = table[deg[x]][deg[y]];
                if (slot == u)
                    slot = deg[e];
                else if (slot != deg[e])
                    throw GradingInconsistency("product support spans several components at (" +
                                               ring.basis[x] + "," + ring.basis[y] + ")");
            }
    for (std::size_t i = 0; i < u; ++i)
        for (std::size_t j = 0; j < u; ++j)
            if (table[i][j] == u)
                throw GradingInconsistency("component product undefined"); // unreachable

    FiniteGroup group("U(" + ring.name + ")", table);

    for (std::size_t x = 0; x < ring.rank(); ++x)
        if (deg[ring.dual[x]] != group.inverse(deg[x]))
            throw GradingInconsistency("degree of the dual is not the inverse degree");
    if (deg[ring.unit] != 0)
        throw GradingInconsistency("unit degree is not the identity");

    return Grading{&ring, std::move(group), std::move(deg), std::move(components)};
}

FusionSubring graded_subring(const Grading& grading, const Subgroup& M) {
    if (!(M.group() == grading.group))
        throw NotASubgroup("graded_subring: subgroup of a different group");
    std::vector<FusionRing::Index> members;
    for (FiniteGroup::Elem m : M.elements())
        members.insert(members.end(), grading.components[m].begin(),
                       grading.components[m].end());
    FusionSubring sub(*grading.ring, std::move(members));
    // closure is automatic from the grading; re-verify
    if (!(generate_subring(*grading.ring, sub.members()) == sub))
        throw GradingInconsistency("graded subring is not closed");
    return sub;
}

bool check_graded_coset_law(const Grading& grading, const Subgroup& M, const Subgroup& N) {
    const FusionRing& ring = *grading.ring;
    FusionSubring hm = graded_subring(grading, M);
    FusionSubring hn = graded_subring(grading, N);
    CosetPartition partition = double_cosets(ring, hm, hn);

    std::vector<std::vector<FiniteGroup::Elem>> group_cosets =
        double_cosets_group(grading.group, M, N);

    if (partition.classes.size() != group_cosets.size())
        return false;

    for (const CosetClass& cls : partition.classes) {
        // the group double coset M·deg(rep)·N
        std::size_t x = grading.deg[cls.representative];
        const std::vector<FiniteGroup::Elem>* target = nullptr;
        for (const auto& gc : group_cosets)
            if (std::binary_search(gc.begin(), gc.end(), x))
                target = &gc;
        if (!target)
            return false;
        // class must equal the union of components with degree in MxN
        std::vector<FusionRing::Index> expected;
        for (FiniteGroup::Elem g : *target)
            expected.insert(expected.end(), grading.components[g].begin(),
                            grading.components[g].end());
        std::sort(expected.begin(), expected.end());
        if (expected != cls.members)
            return false;
    }
    // bijectivity: distinct classes must map to distinct group cosets
    std::set<FiniteGroup::Elem> seen;
    for (const CosetClass& cls : partition.classes) {
        std::size_t x = grading.deg[cls.representative];
        for (const auto& gc : group_cosets)
            if (std::binary_search(gc.begin(), gc.end(), x) && !seen.insert(gc.front()).second)
                return false;
    }
    return true;
}

bool GradedPairReport::all_pairs() const {
    for (const auto& e : entries)
        if (!e.certificate.pair || !e.group_coset_law)
            return false;
    return true;
}

GradedPairReport check_graded_pairs(const Grading& grading) {
    const FusionRing& ring = *grading.ring;
    GradedPairReport report;
    std::vector<Subgroup> subs = subgroups(grading.group);
    for (const Subgroup& M : subs)
        for (const Subgroup& N : subs) {
            FusionSubring hm = graded_subring(grading, M);
            FusionSubring hn = graded_subring(grading, N);
            MackeyCertificate cert = is_mackey_pair(ring, hm, hn);

            bool law = true;
            for (std::size_t x = 0; x < grading.group.order(); ++x) {
                std::set<FiniteGroup::Elem> mxn;
                for (FiniteGroup::Elem m : M.elements())
                    for (FiniteGroup::Elem n : N.elements())
                        mxn.insert(grading.group.mul(grading.group.mul(m, x), n));
                Subgroup xnx = conjugate_subgroup(grading.group, x, N);
                std::size_t cap = intersect(M, xnx).order();
                if (mxn.size() * cap != M.order() * N.order())
                    law = false;
            }
            report.entries.push_back(GradedPairEntry{M, N, std::move(cert), law});
        }
    return report;
}

bool check_component_dims(const Grading& grading) {
    const FusionRing& ring = *grading.ring;
    const Int total = ring.total_dimension();
    const Int u = grading.components.size();
    if (total % u != 0)
        return false;
    const Int expected = total / u;
    for (const auto& comp : grading.components) {
        Int d = 0;
        for (FusionRing::Index x : comp)
            d += ring.dims[x] * ring.dims[x];
        if (d != expected)
            return false;
    }
    return true;
}

} // namespace hopf
