#pragma once

#include "hopf/cosets.hpp"

namespace hopf {

/// Conjugate subring ^cK = {d : d·(c·Λ_K) = ε(d)·(c·Λ_K)}.
struct ConjugateSubring {
    const FusionSubring* base; // K
    FusionRing::Index at;      // c
    FusionSubring result;      // ^cK
};

struct MackeyRow {
    FusionRing::Index c;
    Int dim_lck;       // Σ ε² over the double coset of c
    Int dim_l;         // dim L
    Int dim_ck;        // Σ ε² over the right coset of c
    Int dim_l_cap_ck;  // dim(L ∩ ^cK)
    bool equal;        // dim_lck · dim_l_cap_ck == dim_l · dim_ck
};

struct MackeyCertificate {
    FusionSubring L;
    FusionSubring K;
    std::vector<MackeyRow> rows; // one per basis element
    bool pair;                   // verdict
    std::optional<FusionRing::Index> first_failure;
};

/// Builds ^cK and re-verifies subring closure; a closure failure would
/// indicate an implementation bug or invalid input.
ConjugateSubring conjugate_subring(const FusionRing& ring, FusionRing::Index c,
                                   const FusionSubring& K);

/// For an invertible g, checks ^gK = gKg⁻¹ computed by direct conjugation of
/// each member.
bool check_invertible_conjugation(const FusionRing& ring, FusionRing::Index g, const FusionSubring& K);

/// ^cK is the largest subring L with supp(L·c) inside the right coset of c.
bool check_conjugate_maximality(const FusionRing& ring, FusionRing::Index c,
                                const FusionSubring& K, std::size_t max_basis = 12);

/// ^cK ⊆ supp(c·K·c*).
bool check_conjugate_support(const FusionRing& ring, FusionRing::Index c, const FusionSubring& K);

/// Full Mackey-pair certificate: the cross-multiplied dimension identity at
/// every basis element.
MackeyCertificate is_mackey_pair(const FusionRing& ring, const FusionSubring& L,
                                 const FusionSubring& K);

/// dim LCK · dim(L ∩ ^cK) ≤ dim L · dim CK for every c. Returns the failing
/// indices (expected empty on any valid input).
std::vector<FusionRing::Index> dimension_inequality_violations(const FusionRing& ring,
                                                   const FusionSubring& L,
                                                   const FusionSubring& K);

/// With L the span of the full invertible group G, each (L,K) double coset is
/// a single G-orbit of right cosets, so the number of its right cosets times
/// the stabilizer order of any one of them equals |G|. Checks this in every
/// double coset.
bool check_orbit_law(const FusionRing& ring, const FusionSubring& K);

/// Λ_K central in the fusion ring ("character-normal").
bool is_character_normal(const FusionRing& ring, const FusionSubring& K);

/// For character-normal K: K ⊆ ^cK for every c and the (K,K) certificate has
/// verdict pair; both routes must agree. Throws NotNormal on precondition.
bool check_normal_self_pair(const FusionRing& ring, const FusionSubring& K);

/// Exact rational identity
///   (dimH/dimK·dimM)·(dimH/dimL·dimN)
///     = Σ_{double-coset reps c} (dimH/dim(L∩^cK))·(dim CK/dimK·dimM)·dimN.
/// Throws NotMackeyPair unless (L,K) is certified.
bool induced_tensor_dimension_check(const FusionRing& ring, const FusionSubring& L,
                              const FusionSubring& K, const Int& dimM, const Int& dimN);

} // namespace hopf
