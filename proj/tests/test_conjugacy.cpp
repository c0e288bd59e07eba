#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/characters.hpp"
#include "hopf/conjugacy.hpp"

using namespace hopf;

namespace {

FusionRing::Index idx(const FusionRing& r, const std::string& label) {
    for (FusionRing::Index i = 0; i < r.rank(); ++i)
        if (r.basis[i] == label)
            return i;
    FAIL("no basis element ", label);
    return 0;
}

} // namespace

TEST_CASE("conjugates of {1,a} in the D4 character ring") {
    FusionRing r = builtin::fixture_ring("rep_d4");
    FusionSubring K = generate_subring(r, idx(r, "a"));

    // at an invertible: same subring (the ring is commutative)
    CHECK(conjugate_subring(r, idx(r, "b"), K).result.members() == K.members());
    // at the 2-dimensional element: grows to the full linear span
    CHECK(conjugate_subring(r, idx(r, "v"), K).result.members() ==
          std::vector<FusionRing::Index>{0, 1, 2, 3});
    // at the unit: identity
    CHECK(conjugate_subring(r, r.unit, K).result.members() == K.members());
}

TEST_CASE("conjugate subrings contain the triple-product support") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        for (const auto& K : enumerate_subrings(r))
            for (FusionRing::Index c = 0; c < r.rank(); ++c) {
                CAPTURE(name);
                CHECK(check_conjugate_support(r, c, K));
            }
    }
}

TEST_CASE("conjugation at invertibles matches group conjugation on group rings") {
    for (const char* name : {"group_ring_s3", "group_ring_d4"}) {
        FusionRing r = builtin::fixture_ring(name);
        InvertibleGroup G = invertible_group(r);
        for (const auto& K : enumerate_subrings(r))
            for (auto g : G.elements) {
                CAPTURE(name);
                CHECK(check_invertible_conjugation(r, g, K));
            }
    }
}

TEST_CASE("conjugate subring is the largest with support in one right coset") {
    FusionRing r = builtin::fixture_ring("rep_d4");
    for (const auto& K : enumerate_subrings(r))
        for (FusionRing::Index c = 0; c < r.rank(); ++c)
            CHECK(check_conjugate_maximality(r, c, K));
}

TEST_CASE("Mackey certificate rows for the S3 character ring") {
    FusionRing r = builtin::fixture_ring("rep_s3");
    FusionSubring K = generate_subring(r, idx(r, "s"));
    MackeyCertificate cert = is_mackey_pair(r, K, K);
    CHECK(cert.pair);
    REQUIRE(cert.rows.size() == 3);
    // c = 1: 2*2 == 2*2
    CHECK(cert.rows[0].dim_lck == 2);
    CHECK(cert.rows[0].dim_l_cap_ck == 2);
    // c = v: 4*2 == 2*4
    CHECK(cert.rows[2].dim_lck == 4);
    CHECK(cert.rows[2].dim_ck == 4);
    CHECK(cert.rows[2].dim_l_cap_ck == 2);
}

TEST_CASE("trivial left subring always forms a pair") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        FusionSubring unit(r, {r.unit});
        for (const auto& K : enumerate_subrings(r))
            CHECK(is_mackey_pair(r, unit, K).pair);
    }
}

TEST_CASE("dimension inequality holds for every pair on every fixture") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        auto subs = enumerate_subrings(r);
        for (const auto& L : subs)
            for (const auto& K : subs) {
                CAPTURE(name);
                CHECK(dimension_inequality_violations(r, L, K).empty());
            }
    }
}

TEST_CASE("character normality") {
    // commutative rings: every subring is character-normal
    FusionRing r = builtin::fixture_ring("rep_q8");
    for (const auto& K : enumerate_subrings(r))
        CHECK(is_character_normal(r, K));

    // group ring of S3: only the normal subgroups give central integrals
    FusionRing g = builtin::fixture_ring("group_ring_s3");
    std::size_t normal = 0;
    for (const auto& K : enumerate_subrings(g))
        if (is_character_normal(g, K))
            ++normal;
    CHECK(normal == 3); // trivial, A3 span, whole ring
}

TEST_CASE("normal subrings give self Mackey pairs by both routes") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        for (const auto& K : enumerate_subrings(r))
            if (is_character_normal(r, K)) {
                CAPTURE(name);
                CHECK(check_normal_self_pair(r, K));
            }
    }
    FusionRing g = builtin::fixture_ring("group_ring_s3");
    for (const auto& K : enumerate_subrings(g))
        if (!is_character_normal(g, K))
            CHECK_THROWS_AS(check_normal_self_pair(g, K), NotNormal);
}

TEST_CASE("orbit law in every double coset under the invertible group") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        for (const auto& K : enumerate_subrings(r)) {
            CAPTURE(name);
            CHECK(check_orbit_law(r, K));
        }
    }
}

TEST_CASE("dimension formula across a certified pair") {
    FusionRing r = builtin::fixture_ring("rep_s3");
    FusionSubring K = generate_subring(r, idx(r, "s"));
    CHECK(induced_tensor_dimension_check(r, K, K, 1, 1));
    CHECK(induced_tensor_dimension_check(r, K, K, 2, 3));

    // reject non-pairs: (whole ring, {1,s}) fails the row at v
    FusionRing g = builtin::fixture_ring("rep_s3");
    auto subs = enumerate_subrings(g);
    bool found_non_pair = false;
    for (const auto& L : subs)
        for (const auto& K2 : subs)
            if (!is_mackey_pair(g, L, K2).pair) {
                found_non_pair = true;
                CHECK_THROWS_AS(induced_tensor_dimension_check(g, L, K2, 1, 1), NotMackeyPair);
            }
    CHECK(found_non_pair);
}

TEST_CASE("all certified pairs satisfy the dimension formula") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        auto subs = enumerate_subrings(r);
        for (const auto& L : subs)
            for (const auto& K : subs)
                if (is_mackey_pair(r, L, K).pair) {
                    CAPTURE(name);
                    CHECK(induced_tensor_dimension_check(r, L, K, 1, 1));
                    CHECK(induced_tensor_dimension_check(r, L, K, 2, 5));
                }
    }
}
