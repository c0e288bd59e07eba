#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hopf/ring_core.hpp"

namespace hopf {

/// Basis subset closed under product and duality; models a Hopf subalgebra of
/// the ambient Hopf algebra. Members are kept as a sorted index list so set
/// equality is list equality.
class FusionSubring {
  public:
    FusionSubring(const FusionRing& ring, std::vector<FusionRing::Index> members);

    const FusionRing& parent() const { return *ring_; }
    const std::vector<FusionRing::Index>& members() const { return members_; }
    bool contains(FusionRing::Index i) const;

    /// dim K = sum of ε(x)^2 over members.
    const Int& dim() const { return dim_; }

    bool operator==(const FusionSubring& other) const;
    bool operator<(const FusionSubring& other) const; // (dim, member list) order

    /// Subset test on member sets (same parent assumed).
    bool subset_of(const FusionSubring& other) const;

  private:
    const FusionRing* ring_;
    std::vector<FusionRing::Index> members_; // sorted
    Int dim_;
};

/// Idempotent integral Λ_X and its unnormalized (regular) form Λ'_X.
struct IntegralElement {
    const FusionSubring* subring;
    RingElement normalized; // Λ_X, coefficient ε(x)/dim(X) at members
    RingElement regular;    // Λ'_X = dim(X)·Λ_X = Σ ε(x)·x
};

/// Least member set containing seed ∪ {unit}, closed under dual and under
/// supports of pairwise products.
FusionSubring generate_subring(const FusionRing& ring,
                               const std::vector<FusionRing::Index>& seed);

/// Subring generated by a single basis element (⟨d⟩).
FusionSubring generate_subring(const FusionRing& ring, FusionRing::Index d);

/// Builds Λ_X / Λ'_X and verifies idempotency and two-sided absorption;
/// throws IntegralPropertyFailure if the member set is not actually closed.
IntegralElement integral(const FusionSubring& subring);

FusionSubring intersect(const FusionSubring& a, const FusionSubring& b);

/// The ε = 1 basis elements with their induced group structure.
struct InvertibleGroup {
    FusionSubring subring;                         // span of the invertibles
    std::vector<FusionRing::Index> elements;       // basis indices, sorted
    // table[i][j] = position in `elements` of the product of elements[i], elements[j]
    std::vector<std::vector<std::size_t>> table;
    // each subgroup as a set of positions into `elements`
    std::vector<std::vector<std::size_t>> subgroups;
};

InvertibleGroup invertible_group(const FusionRing& ring);

/// All distinct closures of basis subsets, deduplicated and sorted by
/// (dim, member set). Throws BasisTooLarge above the bound.
std::vector<FusionSubring> enumerate_subrings(const FusionRing& ring,
                                              std::size_t max_basis = 12);

} // namespace hopf
