#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

/// Multiplication-table group; identity is element 0. Validated at
/// construction (associativity, identity, unique inverses).
class FiniteGroup {
  public:
    using Elem = std::size_t;

    FiniteGroup() = default;
    FiniteGroup(std::string name, std::vector<std::vector<Elem>> table,
                std::size_t max_order = 24);

    const std::string& name() const { return name_; }
    std::size_t order() const { return table_.size(); }
    Elem mul(Elem a, Elem b) const { return table_[a][b]; }
    Elem inverse(Elem a) const { return inverse_[a]; }
    Elem conjugate(Elem x, Elem a) const { return mul(mul(x, a), inverse(x)); } // x a x⁻¹
    std::size_t element_order(Elem a) const;
    std::size_t exponent() const;
    bool is_abelian() const;

    const std::vector<std::vector<Elem>>& table() const { return table_; }

    /// Conjugacy classes, each sorted; ordered by least member.
    const std::vector<std::vector<Elem>>& conjugacy_classes() const { return classes_; }
    std::size_t class_of(Elem a) const { return class_index_[a]; }

    bool operator==(const FiniteGroup& other) const {
        return table_ == other.table_;
    }

  private:
    std::string name_;
    std::vector<std::vector<Elem>> table_;
    std::vector<Elem> inverse_;
    std::vector<std::vector<Elem>> classes_;
    std::vector<std::size_t> class_index_;
};

/// Subgroup as a sorted element subset of a parent group.
class Subgroup {
  public:
    Subgroup(const FiniteGroup& group, std::vector<FiniteGroup::Elem> elems);

    const FiniteGroup& group() const { return *group_; }
    const std::vector<FiniteGroup::Elem>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    bool contains(FiniteGroup::Elem a) const;
    bool is_normal() const;
    bool subset_of(const Subgroup& other) const;

    /// Position of element a in the sorted element list.
    std::size_t position(FiniteGroup::Elem a) const;

    bool operator==(const Subgroup& other) const {
        return group_ == other.group_ && elems_ == other.elems_;
    }
    bool operator<(const Subgroup& other) const {
        if (elems_.size() != other.elems_.size())
            return elems_.size() < other.elems_.size();
        return elems_ < other.elems_;
    }

  private:
    const FiniteGroup* group_;
    std::vector<FiniteGroup::Elem> elems_;
};

/// All subgroups, by incremental closure; sorted by (order, element list).
std::vector<Subgroup> subgroups(const FiniteGroup& G);

Subgroup generated_subgroup(const FiniteGroup& G,
                            const std::vector<FiniteGroup::Elem>& gens);

/// Right cosets Mg, each sorted, ordered by least member; the first contains
/// the identity.
std::vector<std::vector<FiniteGroup::Elem>> right_cosets_group(const FiniteGroup& G,
                                                               const Subgroup& M);

/// Double cosets MgN.
std::vector<std::vector<FiniteGroup::Elem>> double_cosets_group(const FiniteGroup& G,
                                                                const Subgroup& M,
                                                                const Subgroup& N);

/// xMx⁻¹.
Subgroup conjugate_subgroup(const FiniteGroup& G, FiniteGroup::Elem x, const Subgroup& M);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

} // namespace hopf
