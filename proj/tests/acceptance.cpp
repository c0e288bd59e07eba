// End-to-end acceptance suite: one pass/fail line per criterion, exit status
// zero only when every criterion holds.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>

#include "hopf/green.hpp"
#include "hopf/io.hpp"

using namespace hopf;

namespace {

const std::vector<std::string> kRings = {"rep_s3",       "rep_d4",        "rep_q8",
                                         "rep_a4",       "group_ring_s3", "group_ring_d4"};
const std::vector<std::string> kGroups = {"group_s3", "group_d4", "group_q8", "group_a4"};

FusionRing::Index idx(const FusionRing& r, const std::string& label) {
    for (FusionRing::Index i = 0; i < r.rank(); ++i)
        if (r.basis[i] == label)
            return i;
    throw Error("no basis element " + label);
}

Subgroup whole(const FiniteGroup& G) {
    std::vector<FiniteGroup::Elem> all(G.order());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return Subgroup(G, all);
}

bool is_commutative(const FusionRing& r) {
    for (FusionRing::Index c = 0; c < r.rank(); ++c)
        for (FusionRing::Index d = 0; d < r.rank(); ++d)
            if (r.products[c][d] != r.products[d][c])
                return false;
    return true;
}

RingElement from_subring(const FusionRing& r, const std::vector<FusionRing::Index>& m,
                         bool regular) {
    FusionSubring K(r, m);
    IntegralElement lam = integral(K);
    return regular ? lam.regular : lam.normalized;
}

// ---------- criterion 1 ----------

bool criterion1() {
    for (const auto& name : kRings)
        if (!validate_ring(io::load_fixture_ring(name)).all_passed())
            return false;

    struct Mutation {
        std::string ring;
        std::function<void(FusionRing&)> apply;
        std::string expect; // check that must fail
    };
    std::vector<Mutation> mutations;
    auto add = [&](const std::string& ring, std::string expect,
                   std::function<void(FusionRing&)> f) {
        mutations.push_back({ring, std::move(f), std::move(expect)});
    };

    // duality family
    add("rep_s3", "involution", [](FusionRing& r) { r.dual[1] = 2; });
    add("rep_d4", "involution", [](FusionRing& r) { r.dual[1] = 2; });
    add("rep_q8", "involution", [](FusionRing& r) { r.dual[4] = 1; });
    add("rep_a4", "involution", [](FusionRing& r) { r.dual[1] = 1; });
    // fix two mutually dual non-involutions pointwise: still an involution,
    // but g·g no longer hits the unit
    add("group_ring_s3", "duality_law", [](FusionRing& r) {
        for (FusionRing::Index g = 0; g < r.rank(); ++g)
            if (r.dual[g] != g) {
                FusionRing::Index h = r.dual[g];
                r.dual[g] = g;
                r.dual[h] = h;
                break;
            }
    });

    // unit family
    for (const auto& name : kRings) {
        if (name == "group_ring_d4")
            continue;
        add(name, "unit_law",
            [](FusionRing& r) { r.products[r.unit][1] = {{r.unit, 1}}; });
    }

    // associativity family
    add("rep_d4", "associativity",
        [](FusionRing& r) { r.products[idx(r, "b")][idx(r, "c")] = {{idx(r, "b"), 1}}; });
    add("rep_q8", "associativity",
        [](FusionRing& r) { r.products[idx(r, "b")][idx(r, "c")] = {{idx(r, "b"), 1}}; });
    add("rep_a4", "associativity", [](FusionRing& r) {
        r.products[idx(r, "w")][idx(r, "T")] = {{0, 1}, {1, 1}, {2, 1}};
    });
    for (const char* name : {"group_ring_s3", "group_ring_d4"})
        add(name, "associativity", [](FusionRing& r) {
            for (FusionRing::Index g = 1; g < r.rank(); ++g)
                for (FusionRing::Index h = 1; h < r.rank(); ++h)
                    if (r.products[g][h][0].first != g &&
                        r.products[g][h][0].first != r.unit) {
                        r.products[g][h] = {{g, 1}};
                        return;
                    }
        });

    // dimension family
    add("rep_s3", "dimension_homomorphism",
        [](FusionRing& r) { r.products[2][2] = {{0, 1}, {1, 1}, {2, 2}}; });
    add("rep_d4", "dimension_homomorphism", [](FusionRing& r) {
        r.products[4][4] = {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}};
    });
    add("rep_q8", "dimension_homomorphism", [](FusionRing& r) {
        r.products[4][4] = {{0, 2}, {1, 1}, {2, 1}, {3, 1}};
    });
    add("rep_a4", "dimension_homomorphism", [](FusionRing& r) {
        r.products[idx(r, "T")][idx(r, "T")] = {{0, 1}, {1, 1}, {2, 1}, {3, 3}};
    });
    add("group_ring_d4", "dimension_homomorphism",
        [](FusionRing& r) { r.products[1][2][0].second = 2; });

    if (mutations.size() != 20)
        return false;
    for (const auto& m : mutations) {
        FusionRing base = builtin::fixture_ring(m.ring);
        FusionRing mutated = base;
        m.apply(mutated);
        if (mutated == base)
            return false; // mutation must actually change the table
        ValidationReport report = validate_ring(mutated);
        const auto* check = report.find(m.expect);
        if (report.all_passed() || check == nullptr || check->passed ||
            check->witness.empty())
            return false;
    }
    return true;
}

// ---------- criterion 2 ----------

bool criterion2() {
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        for (const auto& K : enumerate_subrings(r)) {
            CosetPartition part = right_cosets(r, K);
            std::size_t covered = 0;
            Int dim_sum = 0;
            for (const auto& cls : part.classes) {
                covered += cls.members.size();
                dim_sum += cls.dim;
                if (coset_rank(part, cls) * K.dim() != cls.dim)
                    return false;
            }
            if (covered != r.rank() || dim_sum != r.total_dimension())
                return false;
            if (part.class_of(r.unit).members != K.members())
                return false;
        }
    }
    return true;
}

// ---------- criterion 3 ----------

bool criterion3() {
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        auto subs = enumerate_subrings(r);
        for (const auto& L : subs)
            for (const auto& K : subs)
                if (!crosscheck_support_partition(r, L, K).consistent)
                    return false;
    }
    return true;
}

// ---------- criterion 4 ----------

bool criterion4() {
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        const bool commutative = is_commutative(r);
        for (const auto& K : enumerate_subrings(r)) {
            CosetPartition rights = right_cosets(r, K);
            std::vector<std::vector<FusionRing::Index>> conj(r.rank());
            for (FusionRing::Index c = 0; c < r.rank(); ++c) {
                ConjugateSubring cs = conjugate_subring(r, c, K); // closure verified
                conj[c] = cs.result.members();
                // re-closing must not grow the member set
                if (generate_subring(r, conj[c]).members() != conj[c])
                    return false;
                if (!check_conjugate_support(r, c, K))
                    return false;
                if (commutative && !K.subset_of(cs.result))
                    return false;
            }
            // coset invariance: conjugates agree along each right coset
            for (const auto& cls : rights.classes)
                for (auto m : cls.members)
                    if (conj[m] != conj[cls.representative])
                        return false;
        }
    }
    // invertible conjugation matches group conjugation on the group rings
    for (const char* name : {"group_ring_s3", "group_ring_d4"}) {
        FusionRing r = builtin::fixture_ring(name);
        InvertibleGroup G = invertible_group(r);
        for (const auto& K : enumerate_subrings(r))
            for (auto g : G.elements)
                if (!check_invertible_conjugation(r, g, K))
                    return false;
    }
    return true;
}

// ---------- criterion 5 ----------

bool criterion5() {
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        InvertibleGroup G = invertible_group(r);
        auto subs = enumerate_subrings(r);
        for (const auto& positions : G.subgroups) {
            std::vector<FusionRing::Index> members;
            for (auto p : positions)
                members.push_back(G.elements[p]);
            std::sort(members.begin(), members.end());
            FusionSubring L(r, members);
            for (const auto& K : subs)
                if (!is_mackey_pair(r, L, K).pair)
                    return false;
        }
        for (const auto& K : subs)
            if (!check_orbit_law(r, K))
                return false;
    }
    return true;
}

// ---------- criterion 6 ----------

bool criterion6() {
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        auto subs = enumerate_subrings(r);
        for (const auto& L : subs)
            for (const auto& K : subs) {
                if (!dimension_inequality_violations(r, L, K).empty())
                    return false;
                MackeyCertificate cert = is_mackey_pair(r, L, K);
                bool all_equal = true;
                for (const auto& row : cert.rows)
                    if (!row.equal)
                        all_equal = false;
                if (cert.pair != all_equal)
                    return false;
            }
    }
    return true;
}

// ---------- criterion 7 ----------

bool criterion7() {
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        bool any_normal = false;
        for (const auto& K : enumerate_subrings(r))
            if (is_character_normal(r, K)) {
                any_normal = true;
                if (!check_normal_self_pair(r, K))
                    return false;
            }
        if (!any_normal)
            return false; // the trivial subring is always character-normal
    }
    return true;
}

// ---------- criterion 8 ----------

bool criterion8() {
    struct Expect {
        const char* ring;
        std::size_t order;
        std::size_t order2; // number of elements of order 2 (separates D4/Q8)
        bool abelian;
    };
    for (Expect e : {Expect{"rep_s3", 1, 0, true}, Expect{"rep_a4", 1, 0, true},
                     Expect{"rep_d4", 2, 1, true}, Expect{"rep_q8", 2, 1, true},
                     Expect{"group_ring_s3", 6, 3, false},
                     Expect{"group_ring_d4", 8, 5, false}}) {
        FusionRing r = builtin::fixture_ring(e.ring);
        Grading g = universal_grading(r);
        if (g.group.order() != e.order || g.group.is_abelian() != e.abelian)
            return false;
        std::size_t order2 = 0;
        for (FiniteGroup::Elem a = 0; a < g.group.order(); ++a)
            if (g.group.element_order(a) == 2)
                ++order2;
        if (order2 != e.order2)
            return false;
        if (!check_component_dims(g))
            return false;
        auto subs = subgroups(g.group);
        for (const auto& M : subs)
            for (const auto& N : subs)
                if (!check_graded_coset_law(g, M, N))
                    return false;
        if (!check_graded_pairs(g).all_pairs())
            return false;
    }
    return true;
}

// ---------- criterion 9 ----------

bool criterion9() {
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        for (FusionRing::Index d = 0; d < r.rank(); ++d) {
            double fp = fp_eigenvalue(r, d, 1e-9, 10000);
            if (std::abs(fp - r.dims[d].convert_to<double>()) >= 1e-9)
                return false;
        }
    }
    return true;
}

// ---------- criterion 10 ----------

bool criterion10() {
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        for (const auto& K : enumerate_subrings(r)) {
            const std::size_t n_cosets = right_cosets(r, K).classes.size();

            RingElement lam = from_subring(r, K.members(), false);
            RationalMatrix M = left_mult_matrix(r, lam);
            RationalSubspace principal = eigenspace_exact(M, Rat(1));
            if (principal.dimension() != n_cosets)
                return false;
            if (!(principal == column_space(M)))
                return false;

            // regular element, acting on the right
            RingElement reg = from_subring(r, K.members(), true);
            RationalMatrix T = right_mult_matrix(r, reg);
            double fp = fp_eigenvalue(T, 1e-9, 10000);
            if (std::abs(fp - K.dim().convert_to<double>()) >= 1e-7)
                return false;
            RationalSubspace top = eigenspace_exact(T, Rat(K.dim()));
            if (top.dimension() != n_cosets)
                return false;
            for (const auto& cls : right_cosets(r, K).classes) {
                RingElement c = RingElement::basis_element(r, cls.representative);
                RingElement clam = multiply(r, c, lam);
                if (!top.contains(clam.coefficients()))
                    return false;
            }
        }
        // eigenspace of L_d at eps(d) equals that of the generated subring
        for (FusionRing::Index d = 0; d < r.rank(); ++d) {
            FusionSubring gen = generate_subring(r, d);
            RingElement lam = from_subring(r, gen.members(), false);
            RationalSubspace lhs = eigenspace_exact(left_mult_matrix(r, d), Rat(r.dims[d]));
            RationalSubspace rhs = eigenspace_exact(left_mult_matrix(r, lam), Rat(1));
            if (!(lhs == rhs))
                return false;
        }
    }
    return true;
}

// ---------- criterion 11 ----------

bool criterion11() {
    std::size_t triples = 0;
    for (const auto& name : kGroups) {
        FiniteGroup G = builtin::fixture_group(name);
        auto subs = subgroups(G);
        for (const auto& M : subs) {
            auto chars = ordered_irreducibles(character_table(M));
            for (const auto& N : subs)
                for (const auto& chi : chars) {
                    ++triples;
                    if (!check_classical_mackey(G, M, N, chi))
                        return false;
                }
        }
    }
    return triples > 300;
}

// ---------- criterion 12 ----------

bool criterion12() {
    for (const auto& name : kGroups) {
        FiniteGroup G = builtin::fixture_group(name);
        for (const auto& N : subgroups(G)) {
            if (!N.is_normal())
                continue;
            for (const auto& chi : ordered_irreducibles(character_table(N))) {
                NormalInductionResult res = check_normal_induction(G, N, chi);
                if (!res.restriction_identity || !res.biconditional)
                    return false;
            }
        }
    }
    return true;
}

// ---------- criterion 13 ----------

bool criterion13() {
    for (const auto& name : kGroups) {
        FiniteGroup G = builtin::fixture_group(name);
        Subgroup top = whole(G);
        auto big = ordered_irreducibles(character_table(top));
        auto subs = subgroups(G);
        for (const auto& M : subs) {
            auto chars_m = ordered_irreducibles(character_table(M));
            for (const auto& chi : chars_m)
                for (const auto& psi : big)
                    if (!check_projection_formula(G, M, chi, psi))
                        return false;
            for (const auto& N : subs) {
                auto chars_n = ordered_irreducibles(character_table(N));
                for (const auto& chi : chars_m)
                    for (const auto& psi : chars_n)
                        if (!check_induced_tensor_group(G, M, N, chi, psi))
                            return false;
            }
        }
    }
    // fusion-level dimension formula on every certified pair
    for (const auto& name : kRings) {
        FusionRing r = builtin::fixture_ring(name);
        auto subs = enumerate_subrings(r);
        for (const auto& L : subs)
            for (const auto& K : subs)
                if (is_mackey_pair(r, L, K).pair)
                    if (!induced_tensor_dimension_check(r, L, K, 1, 1) ||
                        !induced_tensor_dimension_check(r, L, K, 3, 2))
                        return false;
    }
    return true;
}

// ---------- criterion 14 ----------

bool criterion14() {
    const std::uint64_t recorded_seed = 20240817;
    for (const char* name : {"group_s3", "group_d4"}) {
        GreenFunctorDatum base = classical_instance(builtin::fixture_group(name));
        if (!verify_green(base, recorded_seed).all_passed())
            return false;
        // the randomized-representative check is part of every report; the
        // verdict must not depend on the seed
        for (std::uint64_t seed : {0ull, 1ull, 31337ull})
            if (!verify_green(base, seed).all_passed())
                return false;

        auto fails_with_witness = [](const GreenFunctorDatum& d) {
            AxiomReport report = verify_green(d, 0, true);
            for (const auto& c : report.checks)
                if (!c.passed)
                    return !c.witness.empty();
            return false;
        };

        for (const auto& [key, m] : base.induction)
            for (std::size_t e = 0; e < m.entries.size(); ++e) {
                GreenFunctorDatum mutated = base;
                mutated.induction[key].entries[e] += 1;
                if (!fails_with_witness(mutated))
                    return false;
            }
        for (const auto& [key, m] : base.restriction)
            for (std::size_t e = 0; e < m.entries.size(); ++e) {
                GreenFunctorDatum mutated = base;
                mutated.restriction[key].entries[e] += 1;
                if (!fails_with_witness(mutated))
                    return false;
            }
        for (const auto& [key, m] : base.conjugation)
            for (std::size_t e = 0; e < m.entries.size(); ++e) {
                GreenFunctorDatum mutated = base;
                mutated.conjugation[key].entries[e] += 1;
                if (!fails_with_witness(mutated))
                    return false;
            }
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* label;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "ring validation and witnessed mutation rejection", criterion1},
        {2, "coset partitions, dimension sums, unit classes, integer ranks", criterion2},
        {3, "integral and support double-coset partitions agree", criterion3},
        {4, "conjugate subrings: closure, containment, coset invariance", criterion4},
        {5, "invertible-subgroup Mackey pairs and the orbit law", criterion5},
        {6, "dimension inequality with equality exactly on pairs", criterion6},
        {7, "character-normal subrings give self pairs by both routes", criterion7},
        {8, "universal gradings, component dims, graded-subring pairs", criterion8},
        {9, "floating-point eigenvalues match the dimension function", criterion9},
        {10, "exact eigenspace identities for integrals and generators", criterion10},
        {11, "classical Mackey decomposition, exhaustive", criterion11},
        {12, "restriction of induction and irreducibility criterion", criterion12},
        {13, "projection formula and induced tensor dimension formula", criterion13},
        {14, "functor axioms, mutation rejection, seed invariance", criterion14},
    };

    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.label
                  << " (" << ms << " ms)";
        if (!error.empty())
            std::cout << " [exception: " << error << "]";
        std::cout << "\n";
        all = all && ok;
    }
    std::cout << (all ? "ACCEPTED" : "REJECTED") << "\n";
    return all ? 0 : 1;
}
