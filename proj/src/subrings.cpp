#include "hopf/subrings.hpp"

#include <algorithm>

namespace hopf {

FusionSubring::FusionSubring(const FusionRing& ring, std::vector<FusionRing::Index> members)
    : ring_(&ring), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (FusionRing::Index i : members_)
        if (i >= ring.rank())
            throw IndexOutOfRange("FusionSubring: member index out of range");
    dim_ = 0;
    for (FusionRing::Index i : members_)
        dim_ += ring.dims[i] * ring.dims[i];
}

bool FusionSubring::contains(FusionRing::Index i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

bool FusionSubring::operator==(const FusionSubring& other) const {
    return ring_ == other.ring_ && members_ == other.members_;
}

bool FusionSubring::operator<(const FusionSubring& other) const {
    if (dim_ != other.dim_)
        return dim_ < other.dim_;
    return members_ < other.members_;
}

bool FusionSubring::subset_of(const FusionSubring& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

FusionSubring generate_subring(const FusionRing& ring,
                               const std::vector<FusionRing::Index>& seed) {
    std::set<FusionRing::Index> members(seed.begin(), seed.end());
    members.insert(ring.unit);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<FusionRing::Index> current(members.begin(), members.end());
        for (FusionRing::Index c : current)
            changed |= members.insert(ring.dual[c]).second;
        for (FusionRing::Index c : current)
            for (FusionRing::Index d : current)
                for (const auto& [e, m] : ring.products[c][d])
                    changed |= members.insert(e).second;
    }
    return FusionSubring(ring, {members.begin(), members.end()});
}

FusionSubring generate_subring(const FusionRing& ring, FusionRing::Index d) {
    return generate_subring(ring, std::vector<FusionRing::Index>{d});
}

IntegralElement integral(const FusionSubring& subring) {
    const FusionRing& ring = subring.parent();
    RingElement regular = RingElement::zero(ring);
    for (FusionRing::Index x : subring.members())
        regular[x] = Rat(ring.dims[x]);
    RingElement normalized = regular * (Rat(1) / Rat(subring.dim()));

    if (multiply(ring, normalized, normalized) != normalized)
        throw IntegralPropertyFailure("integral of {" + ring.name + "} subring is not idempotent");
    for (FusionRing::Index x : subring.members()) {
        RingElement xe = RingElement::basis_element(ring, x);
        RingElement scaled = normalized * Rat(ring.dims[x]);
        if (multiply(ring, xe, normalized) != scaled || multiply(ring, normalized, xe) != scaled)
            throw IntegralPropertyFailure("integral absorption fails at member " + ring.basis[x]);
    }
    return IntegralElement{&subring, std::move(normalized), std::move(regular)};
}

FusionSubring intersect(const FusionSubring& a, const FusionSubring& b) {
    if (&a.parent() != &b.parent())
        throw RingMismatch("intersect: subrings of different parents");
    std::vector<FusionRing::Index> out;
    std::set_intersection(a.members().begin(), a.members().end(),
                          b.members().begin(), b.members().end(), std::back_inserter(out));
    return FusionSubring(a.parent(), std::move(out));
}

namespace {

// All subgroups of a group given by a multiplication table on positions
// 0..n-1, by closing generating sets incrementally.
std::vector<std::vector<std::size_t>>
subgroups_of_table(const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
    const std::size_t n = table.size();
    auto close = [&](std::vector<std::size_t> gen) {
        std::set<std::size_t> s(gen.begin(), gen.end());
        s.insert(identity);
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::size_t> cur(s.begin(), s.end());
            for (std::size_t a : cur)
                for (std::size_t b : cur)
                    changed |= s.insert(table[a][b]).second;
        }
        return std::vector<std::size_t>(s.begin(), s.end());
    };

    std::set<std::vector<std::size_t>> found;
    found.insert(close({}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::size_t>> current(found.begin(), found.end());
        for (const auto& sub : current)
            for (std::size_t g = 0; g < n; ++g) {
                auto ext = sub;
                ext.push_back(g);
                grew |= found.insert(close(ext)).second;
            }
    }
    std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

} // namespace

InvertibleGroup invertible_group(const FusionRing& ring) {
    std::vector<FusionRing::Index> elems;
    for (std::size_t i = 0; i < ring.rank(); ++i)
        if (ring.dims[i] == 1)
            elems.push_back(i);

    std::vector<std::vector<std::size_t>> table(elems.size(),
                                                std::vector<std::size_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const auto& prod = ring.products[elems[i]][elems[j]];
            if (prod.size() != 1 || prod[0].second != 1)
                throw InvertibleClosureFailure(
                    "product of invertibles " + ring.basis[elems[i]] + "*" +
                    ring.basis[elems[j]] + " is not a single basis element");
            auto it = std::lower_bound(elems.begin(), elems.end(), prod[0].first);
            if (it == elems.end() || *it != prod[0].first)
                throw InvertibleClosureFailure(
                    "product of invertibles lands outside the invertible set");
            table[i][j] = static_cast<std::size_t>(it - elems.begin());
        }

    std::size_t identity = static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), ring.unit) - elems.begin());
    auto subs = subgroups_of_table(table, identity);
    return InvertibleGroup{FusionSubring(ring, elems), elems, std::move(table), std::move(subs)};
}

std::vector<FusionSubring> enumerate_subrings(const FusionRing& ring, std::size_t max_basis) {
    const std::size_t n = ring.rank();
    if (n > max_basis)
        throw BasisTooLarge("enumerate_subrings: basis size " + std::to_string(n) +
                            " exceeds bound " + std::to_string(max_basis));
    std::set<std::vector<FusionRing::Index>> seen;
    std::vector<FusionSubring> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<FusionRing::Index> seed;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i))
                seed.push_back(i);
        FusionSubring sub = generate_subring(ring, seed);
        if (seen.insert(sub.members()).second)
            out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hopf
