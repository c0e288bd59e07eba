#pragma once

#include "hopf/conjugacy.hpp"
#include "hopf/groups.hpp"

namespace hopf {

/// Universal grading of a fusion ring: grading group U over the component
/// labels, the degree of each basis element, and the component index sets.
/// Component 0 is the identity component (the adjoint subring support);
/// others are ordered by least member index.
struct Grading {
    const FusionRing* ring;
    FiniteGroup group; // U, elements = component indices
    std::vector<std::size_t> deg; // basis index -> component index
    std::vector<std::vector<FusionRing::Index>> components;
};

/// Subring generated by all x·x* supports.
FusionSubring adjoint_subring(const FusionRing& ring);

/// Computes components as the right cosets of the adjoint subring, builds the
/// induced group law and verifies all grading invariants; throws
/// GradingInconsistency on an invalid input ring.
Grading universal_grading(const FusionRing& ring);

/// H(M): union of components over a subgroup M of U.
FusionSubring graded_subring(const Grading& grading, const Subgroup& M);

/// Double cosets of (H(M), H(N)) biject with M\U/N via degrees, and each
/// class is the union of the components with degree in the group double coset.
bool check_graded_coset_law(const Grading& grading, const Subgroup& M, const Subgroup& N);

struct GradedPairEntry {
    Subgroup M;
    Subgroup N;
    MackeyCertificate certificate;
    bool group_coset_law; // |MxN|·|M ∩ xNx⁻¹| = |M|·|N| for all x in U
};

struct GradedPairReport {
    std::vector<GradedPairEntry> entries;
    bool all_pairs() const;
};

/// is_mackey_pair(H(M), H(N)) over every pair of subgroups of U, with the
/// group-level double-coset size law cross-checked directly in U.
GradedPairReport check_graded_pairs(const Grading& grading);

/// All components share the dimension TotalDimension / |U|.
bool check_component_dims(const Grading& grading);

} // namespace hopf
