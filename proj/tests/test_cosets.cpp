#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/characters.hpp"
#include "hopf/cosets.hpp"

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

TEST_CASE("right cosets of {1,s} in the S3 character ring") {
    FusionRing r = builtin::fixture_ring("rep_s3");
    FusionSubring K = generate_subring(r, idx(r, "s"));
    CosetPartition part = right_cosets(r, K);

    REQUIRE(part.classes.size() == 2);
    CHECK(part.classes[0].members == std::vector<FusionRing::Index>{0, 1});
    CHECK(part.classes[0].dim == 2);
    CHECK(part.classes[1].members == std::vector<FusionRing::Index>{2});
    CHECK(part.classes[1].dim == 4);
    CHECK(coset_rank(part, part.classes[0]) == 1);
    CHECK(coset_rank(part, part.classes[1]) == 2);
}

TEST_CASE("double cosets of ({1,a},{1,a}) in the D4 character ring") {
    FusionRing r = builtin::fixture_ring("rep_d4");
    FusionSubring K = generate_subring(r, idx(r, "a"));
    CosetPartition part = double_cosets(r, K, K);

    REQUIRE(part.classes.size() == 3);
    CHECK(part.classes[0].members == std::vector<FusionRing::Index>{0, 1});
    CHECK(part.classes[1].members ==
          std::vector<FusionRing::Index>{idx(r, "b"), idx(r, "c")});
    CHECK(part.classes[2].members == std::vector<FusionRing::Index>{idx(r, "v")});
    // b and c share one right coset: b*(1+a)/2 = (b+c)/2 = c*(1+a)/2
    CHECK(part.classes[0].right_coset_reps.size() == 1);
    CHECK(part.classes[1].right_coset_reps.size() == 1);
    CHECK(part.classes[2].right_coset_reps.size() == 1);
}

TEST_CASE("partition totality, dimension sum and unit class on every fixture") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        CAPTURE(name);
        for (const auto& K : enumerate_subrings(r)) {
            CosetPartition part = right_cosets(r, K);
            std::size_t covered = 0;
            Int dim_sum = 0;
            for (const auto& cls : part.classes) {
                covered += cls.members.size();
                dim_sum += cls.dim;
                CHECK(coset_rank(part, cls) >= 1);
            }
            CHECK(covered == r.rank());
            CHECK(dim_sum == r.total_dimension());
            CHECK(part.class_of(r.unit).members == K.members());
        }
    }
}

TEST_CASE("double cosets coarsen right cosets") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        auto subs = enumerate_subrings(r);
        for (const auto& L : subs)
            for (const auto& K : subs) {
                CosetPartition rights = right_cosets(r, K);
                CosetPartition doubles = double_cosets(r, L, K);
                for (const auto& cls : doubles.classes) {
                    // members split exactly into whole right cosets
                    std::size_t total = 0;
                    for (auto rep : cls.right_coset_reps) {
                        const auto& rc = rights.class_of(rep);
                        for (auto m : rc.members)
                            CHECK(std::binary_search(cls.members.begin(),
                                                     cls.members.end(), m));
                        total += rc.members.size();
                    }
                    CHECK(total == cls.members.size());
                }
            }
    }
}

TEST_CASE("support partition agrees with the integral criterion") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing r = builtin::fixture_ring(name);
        auto subs = enumerate_subrings(r);
        for (const auto& L : subs)
            for (const auto& K : subs) {
                SupportPartitionResult res = crosscheck_support_partition(r, L, K);
                CAPTURE(name);
                CHECK(res.consistent);
            }
    }
}

TEST_CASE("product support") {
    FusionRing r = builtin::fixture_ring("rep_s3");
    auto supp = product_support(r, {idx(r, "v")}, {idx(r, "v")});
    CHECK(supp == std::vector<FusionRing::Index>{0, 1, 2});
    auto supp2 = product_support(r, {0}, {1});
    CHECK(supp2 == std::vector<FusionRing::Index>{1});
}

TEST_CASE("group-ring cosets match group cosets") {
    FusionRing r = builtin::fixture_ring("group_ring_s3");
    // K spanned by an order-2 subgroup: 3 right cosets of dimension 2
    for (const auto& K : enumerate_subrings(r)) {
        if (K.dim() != 2)
            continue;
        CosetPartition part = right_cosets(r, K);
        CHECK(part.classes.size() == 3);
        for (const auto& cls : part.classes) {
            CHECK(cls.dim == 2);
            CHECK(coset_rank(part, cls) == 1);
        }
    }
}
