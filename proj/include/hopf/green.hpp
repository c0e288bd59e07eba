#pragma once

#include <map>
#include <memory>

#include "hopf/characters.hpp"
#include "hopf/grading.hpp"

namespace hopf {

/// Associative unital ring presented on a finite basis by integer structure
/// constants (the value M(K) of a Green functor at a subgroup K).
struct BasedRing {
    std::vector<std::string> basis;
    std::size_t unit = 0;
    // constants[i][j][k] = multiplicity of basis k in basis_i · basis_j
    std::vector<std::vector<std::vector<Int>>> constants;

    std::size_t rank() const { return basis.size(); }
    std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
};

/// Nonnegative-integer matrix acting on basis multiplicity vectors,
/// rows = target basis, cols = source basis.
struct MultMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> entries; // row-major

    Int& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    bool operator==(const MultMatrix& other) const = default;
};

/// Green functor datum over the subgroup lattice of a finite group: a ring
/// per subgroup, induction/restriction matrices per comparable pair, and a
/// conjugation matrix per (subgroup, group element). The group lives behind a
/// shared pointer so the subgroups in the lattice stay bound to it when the
/// datum is copied or moved.
struct GreenFunctorDatum {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<Subgroup> lattice; // all subgroups, sorted
    std::vector<BasedRing> rings;  // parallel to lattice

    // key (sub index, super index), sub ⊆ super
    std::map<std::pair<std::size_t, std::size_t>, MultMatrix> induction;   // M(sub)->M(super)
    std::map<std::pair<std::size_t, std::size_t>, MultMatrix> restriction; // M(super)->M(sub)
    // key (sub index, g): M(sub) -> M(gKg⁻¹)
    std::map<std::pair<std::size_t, FiniteGroup::Elem>, MultMatrix> conjugation;

    std::size_t lattice_index(const Subgroup& s) const;
};

struct AxiomCheck {
    std::string name; // "axiom1" .. "axiom8"
    bool passed;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    std::uint64_t seed = 0; // seed used for randomized axiom-5 representatives
    bool all_passed() const;
};

/// Exhaustive verification of the eight Mackey/Green axioms. Axiom 5 is
/// checked both with canonical (least-element) double-coset representatives
/// and with representatives drawn from the seeded generator. With
/// `stop_at_first_failure`, returns as soon as any axiom fails.
AxiomReport verify_green(const GreenFunctorDatum& datum, std::uint64_t seed = 0,
                         bool stop_at_first_failure = false);

/// The classical Green functor of a finite group: character rings with
/// induction/restriction/conjugation multiplicities from exact character
/// arithmetic.
GreenFunctorDatum classical_instance(const FiniteGroup& G);

/// Per-subgroup representation data supplied externally for a graded ring
/// (the artifact does not fabricate K_0 data it cannot compute).
struct RepData {
    // keyed by subgroup element set of the grading group
    std::map<std::vector<FiniteGroup::Elem>, BasedRing> rings;
    std::map<std::pair<std::vector<FiniteGroup::Elem>, std::vector<FiniteGroup::Elem>>,
             MultMatrix>
        induction;
    std::map<std::pair<std::vector<FiniteGroup::Elem>, std::vector<FiniteGroup::Elem>>,
             MultMatrix>
        restriction;
    std::map<std::pair<std::vector<FiniteGroup::Elem>, FiniteGroup::Elem>, MultMatrix>
        conjugation;
};

/// Assembles a datum over the universal grading group of `ring` from supplied
/// data; verify_green is the acceptance gate.
GreenFunctorDatum grading_instance(const FusionRing& ring, const RepData& repdata);

} // namespace hopf
