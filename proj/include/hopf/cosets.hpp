#pragma once

#include <optional>

#include "hopf/subrings.hpp"

namespace hopf {

/// One coset class: its basis indices (sorted), the lowest-index
/// representative, and the summed ε² dimension.
struct CosetClass {
    std::vector<FusionRing::Index> members;
    FusionRing::Index representative;
    Int dim;
    // For double cosets: representatives of the constituent right cosets
    // (the set S of each class); empty for right-coset partitions.
    std::vector<FusionRing::Index> right_coset_reps;
};

enum class CosetKind { Right, Double };

struct CosetPartition {
    CosetKind kind;
    std::optional<FusionSubring> left; // L, double case only
    FusionSubring right;               // K
    std::vector<CosetClass> classes;   // ordered by representative index

    const CosetClass& class_of(FusionRing::Index c) const;
};

/// Right-coset partition of the basis: c ~ d iff
/// ε(d)·(c·Λ_K) = ε(c)·(d·Λ_K) exactly.
CosetPartition right_cosets(const FusionRing& ring, const FusionSubring& K);

/// Double-coset partition: c ~ d iff ε(d)·(Λ_L·c·Λ_K) = ε(c)·(Λ_L·d·Λ_K)
/// exactly. Each class records the right-coset representatives it contains.
CosetPartition double_cosets(const FusionRing& ring, const FusionSubring& L,
                             const FusionSubring& K);

/// Union of supports of a·b over a in A, b in B.
std::vector<FusionRing::Index> product_support(const FusionRing& ring,
                                               const std::vector<FusionRing::Index>& A,
                                               const std::vector<FusionRing::Index>& B);

/// Rank of the class as a free right K-module: class_dim / dim K. Throws
/// FreenessViolation when the quotient is not an integer.
Int coset_rank(const CosetPartition& partition, const CosetClass& cls);

struct SupportPartitionResult {
    bool consistent;
    // first mismatching pair of basis indices when not consistent
    std::optional<std::pair<FusionRing::Index, FusionRing::Index>> mismatch;
};

/// Compares the integral-criterion double-coset partition with the partition
/// by equality of the support sets of L·{c}·K.
SupportPartitionResult crosscheck_support_partition(const FusionRing& ring, const FusionSubring& L,
                               const FusionSubring& K);

} // namespace hopf
