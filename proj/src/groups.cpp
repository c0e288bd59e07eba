#include "hopf/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hopf {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<Elem>> table,
                         std::size_t max_order)
    : name_(std::move(name)), table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0)
        throw Error("FiniteGroup: empty table");
    if (n > max_order)
        throw OrderTooLarge("FiniteGroup: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_order));
    for (const auto& row : table_) {
        if (row.size() != n)
            throw Error("FiniteGroup: table is not square");
        for (Elem e : row)
            if (e >= n)
                throw Error("FiniteGroup: table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw Error("FiniteGroup: element 0 is not the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error("FiniteGroup: multiplication is not associative");

    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                if (inverse_[a] != n)
                    throw Error("FiniteGroup: inverse is not unique");
                inverse_[a] = b;
            }
        if (inverse_[a] == n)
            throw Error("FiniteGroup: element without inverse");
    }

    class_index_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (class_index_[a] != n)
            continue;
        std::set<Elem> cls;
        for (std::size_t x = 0; x < n; ++x)
            cls.insert(conjugate(x, a));
        std::size_t idx = classes_.size();
        classes_.emplace_back(cls.begin(), cls.end());
        for (Elem e : cls)
            class_index_[e] = idx;
    }
}

std::size_t FiniteGroup::element_order(Elem a) const {
    std::size_t k = 1;
    Elem x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::size_t FiniteGroup::exponent() const {
    std::size_t e = 1;
    for (std::size_t a = 0; a < order(); ++a)
        e = std::lcm(e, element_order(a));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

Subgroup::Subgroup(const FiniteGroup& group, std::vector<FiniteGroup::Elem> elems)
    : group_(&group), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty() || elems_[0] != 0)
        throw NotASubgroup("Subgroup: missing identity");
    for (FiniteGroup::Elem a : elems_) {
        if (a >= group.order())
            throw NotASubgroup("Subgroup: element out of range");
        if (!std::binary_search(elems_.begin(), elems_.end(), group.inverse(a)))
            throw NotASubgroup("Subgroup: not closed under inverse");
        for (FiniteGroup::Elem b : elems_)
            if (!std::binary_search(elems_.begin(), elems_.end(), group.mul(a, b)))
                throw NotASubgroup("Subgroup: not closed under multiplication");
    }
}

bool Subgroup::contains(FiniteGroup::Elem a) const {
    return std::binary_search(elems_.begin(), elems_.end(), a);
}

bool Subgroup::is_normal() const {
    for (std::size_t x = 0; x < group_->order(); ++x)
        for (FiniteGroup::Elem a : elems_)
            if (!contains(group_->conjugate(x, a)))
                return false;
    return true;
}

bool Subgroup::subset_of(const Subgroup& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(),
                         elems_.end());
}

std::size_t Subgroup::position(FiniteGroup::Elem a) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), a);
    if (it == elems_.end() || *it != a)
        throw IndexOutOfRange("Subgroup::position: element not in subgroup");
    return static_cast<std::size_t>(it - elems_.begin());
}

Subgroup generated_subgroup(const FiniteGroup& G,
                            const std::vector<FiniteGroup::Elem>& gens) {
    std::set<FiniteGroup::Elem> s(gens.begin(), gens.end());
    s.insert(0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<FiniteGroup::Elem> cur(s.begin(), s.end());
        for (auto a : cur) {
            changed |= s.insert(G.inverse(a)).second;
            for (auto b : cur)
                changed |= s.insert(G.mul(a, b)).second;
        }
    }
    return Subgroup(G, {s.begin(), s.end()});
}

std::vector<Subgroup> subgroups(const FiniteGroup& G) {
    std::set<std::vector<FiniteGroup::Elem>> found;
    found.insert(generated_subgroup(G, {}).elements());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<FiniteGroup::Elem>> current(found.begin(), found.end());
        for (const auto& sub : current)
            for (std::size_t g = 0; g < G.order(); ++g) {
                auto gens = sub;
                gens.push_back(g);
                grew |= found.insert(generated_subgroup(G, gens).elements()).second;
            }
    }
    std::vector<Subgroup> out;
    for (const auto& elems : found)
        out.emplace_back(G, elems);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<FiniteGroup::Elem>> right_cosets_group(const FiniteGroup& G,
                                                               const Subgroup& M) {
    std::vector<bool> used(G.order(), false);
    std::vector<std::vector<FiniteGroup::Elem>> cosets;
    for (std::size_t g = 0; g < G.order(); ++g) {
        if (used[g])
            continue;
        std::set<FiniteGroup::Elem> coset;
        for (FiniteGroup::Elem m : M.elements())
            coset.insert(G.mul(m, g));
        for (FiniteGroup::Elem e : coset)
            used[e] = true;
        cosets.emplace_back(coset.begin(), coset.end());
    }
    return cosets;
}

std::vector<std::vector<FiniteGroup::Elem>> double_cosets_group(const FiniteGroup& G,
                                                                const Subgroup& M,
                                                                const Subgroup& N) {
    std::vector<bool> used(G.order(), false);
    std::vector<std::vector<FiniteGroup::Elem>> cosets;
    for (std::size_t g = 0; g < G.order(); ++g) {
        if (used[g])
            continue;
        std::set<FiniteGroup::Elem> coset;
        for (FiniteGroup::Elem m : M.elements())
            for (FiniteGroup::Elem n : N.elements())
                coset.insert(G.mul(G.mul(m, g), n));
        for (FiniteGroup::Elem e : coset)
            used[e] = true;
        cosets.emplace_back(coset.begin(), coset.end());
    }
    return cosets;
}

Subgroup conjugate_subgroup(const FiniteGroup& G, FiniteGroup::Elem x, const Subgroup& M) {
    std::vector<FiniteGroup::Elem> out;
    out.reserve(M.order());
    for (FiniteGroup::Elem a : M.elements())
        out.push_back(G.conjugate(x, a));
    return Subgroup(G, std::move(out));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (&a.group() != &b.group())
        throw Error("intersect: subgroups of different groups");
    std::vector<FiniteGroup::Elem> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                          b.elements().end(), std::back_inserter(out));
    return Subgroup(a.group(), std::move(out));
}

} // namespace hopf
