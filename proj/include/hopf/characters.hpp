#pragma once

#include "hopf/cyclotomic.hpp"
#include "hopf/groups.hpp"
#include "hopf/ring_core.hpp"

namespace hopf {

/// Class function on a subgroup of a fixture group, stored per element
/// (positionally over the subgroup's sorted element list).
class ClassFunction {
  public:
    ClassFunction(Subgroup domain, std::vector<Cyclotomic> values);

    const Subgroup& domain() const { return domain_; }
    const Cyclotomic& value(FiniteGroup::Elem g) const;
    const std::vector<Cyclotomic>& values() const { return values_; }

    ClassFunction operator+(const ClassFunction& rhs) const;
    ClassFunction operator*(const ClassFunction& rhs) const; // pointwise (tensor product)
    bool operator==(const ClassFunction& rhs) const;

    /// χ(1) as an exact rational.
    Rat degree() const { return values_[0].rational_value(); }

    /// ⟨φ,ψ⟩ = (1/|A|) Σ_g φ(g)·conj(ψ(g)), exact.
    static Rat inner_product(const ClassFunction& a, const ClassFunction& b);

  private:
    Subgroup domain_;
    std::vector<Cyclotomic> values_;
};

class CharacterTable {
  public:
    CharacterTable(Subgroup domain, std::vector<ClassFunction> irreducibles);

    const Subgroup& domain() const { return domain_; }
    const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
    std::size_t rank() const { return irreducibles_.size(); }

  private:
    Subgroup domain_;
    std::vector<ClassFunction> irreducibles_; // orthogonality verified at load
};

/// Character table of a subgroup. Abelian subgroups are computed from scratch
/// (homomorphisms into the roots of unity of exponent order); nonabelian ones
/// must come from the builtin catalog, which covers the fixture groups.
CharacterTable character_table(const Subgroup& domain);

/// Induction from A to B (A ⊆ B): χ↑(g) = (1/|A|) Σ_{y∈B: y⁻¹gy∈A} χ(y⁻¹gy).
ClassFunction induce(const ClassFunction& chi, const Subgroup& target);
/// Restriction to a smaller subgroup (value pullback).
ClassFunction restrict(const ClassFunction& chi, const Subgroup& target);
/// Conjugate character on ˣA: (ˣχ)(xax⁻¹) = χ(a).
ClassFunction conjugate_char(const ClassFunction& chi, FiniteGroup::Elem x);

/// Classical Mackey formula (restriction of an induced module), checked as an
/// exact class-function identity.
bool check_classical_mackey(const FiniteGroup& G, const Subgroup& M, const Subgroup& N,
                            const ClassFunction& chi);

struct NormalInductionResult {
    bool restriction_identity; // res(ind χ) = Σ over coset reps of conjugates
    bool biconditional;        // ind χ irreducible  ⇔  χ disjoint from all conjugates
};

/// For N normal in G and χ irreducible on N.
NormalInductionResult check_normal_induction(const FiniteGroup& G, const Subgroup& N, const ClassFunction& chi);

/// induce(χ)·ψ = induce(χ·restrict(ψ)).
bool check_projection_formula(const FiniteGroup& G, const Subgroup& M, const ClassFunction& chi,
                  const ClassFunction& psi);

/// Tensor product of two induced characters against the double-coset formula.
bool check_induced_tensor_group(const FiniteGroup& G, const Subgroup& M, const Subgroup& N,
                          const ClassFunction& chi, const ClassFunction& psi);

/// Irreducibles in the canonical basis order: trivial character first, then
/// ascending degree (stable on the table order).
std::vector<ClassFunction> ordered_irreducibles(const CharacterTable& table);

/// Fusion ring with basis Irr and N^k_{ij} = ⟨χ_i·χ_j, χ_k⟩; throws
/// NonIntegralFusion when a multiplicity is not a nonnegative integer.
FusionRing character_fusion_ring(const CharacterTable& table, const std::string& name);

/// Group ring: basis = group elements, N^e_{g,h} = δ_{gh,e}.
FusionRing group_fusion_ring(const FiniteGroup& G, const std::string& name);

/// Builtin fixture groups (S3, D4, Q8, A4, Z/n) and their validated
/// character-ring fixtures.
namespace builtin {

FiniteGroup symmetric3();
FiniteGroup dihedral4();
FiniteGroup quaternion8();
FiniteGroup alternating4();
FiniteGroup cyclic(std::size_t n);

/// Fixture rings by name: rep_s3, rep_d4, rep_q8, rep_a4, group_ring_s3,
/// group_ring_d4. Throws UnknownFixture otherwise.
FusionRing fixture_ring(const std::string& name);
std::vector<std::string> fixture_ring_names();

/// Fixture groups by name: group_s3, group_d4, group_q8, group_a4,
/// group_z2..group_z12.
FiniteGroup fixture_group(const std::string& name);
std::vector<std::string> fixture_group_names();

} // namespace builtin

} // namespace hopf
