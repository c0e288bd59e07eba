#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/green.hpp"

using namespace hopf;

namespace {

// Converts a classical datum into externally supplied data, as a user of the
// grading assembly would provide it.
RepData to_repdata(const GreenFunctorDatum& d) {
    RepData out;
    for (std::size_t i = 0; i < d.lattice.size(); ++i)
        out.rings[d.lattice[i].elements()] = d.rings[i];
    for (const auto& [key, m] : d.induction)
        out.induction[{d.lattice[key.first].elements(), d.lattice[key.second].elements()}] = m;
    for (const auto& [key, m] : d.restriction)
        out.restriction[{d.lattice[key.first].elements(), d.lattice[key.second].elements()}] =
            m;
    for (const auto& [key, m] : d.conjugation)
        out.conjugation[{d.lattice[key.first].elements(), key.second}] = m;
    return out;
}

} // namespace

TEST_CASE("classical functor passes every axiom") {
    for (const char* name : {"group_s3", "group_d4"}) {
        GreenFunctorDatum d = classical_instance(builtin::fixture_group(name));
        AxiomReport report = verify_green(d, 42);
        CAPTURE(name);
        CHECK(report.all_passed());
        CHECK(report.seed == 42);
        // all ten named checks present (axioms 5 and 6 have two entries each)
        CHECK(report.checks.size() == 10);
    }
}

TEST_CASE("randomized representatives do not change the verdict") {
    GreenFunctorDatum d = classical_instance(builtin::fixture_group("group_d4"));
    for (std::uint64_t seed : {0ull, 1ull, 7ull, 99ull, 123456789ull})
        CHECK(verify_green(d, seed).all_passed());
}

TEST_CASE("single-entry mutations break at least one axiom") {
    GreenFunctorDatum base = classical_instance(builtin::fixture_group("group_s3"));

    SUBCASE("induction entry") {
        GreenFunctorDatum d = base;
        for (auto& [key, m] : d.induction)
            if (key.first != key.second) {
                m.entries[0] += 1;
                break;
            }
        AxiomReport report = verify_green(d);
        CHECK_FALSE(report.all_passed());
    }
    SUBCASE("restriction entry") {
        GreenFunctorDatum d = base;
        for (auto& [key, m] : d.restriction)
            if (key.first != key.second) {
                m.entries.back() += 1;
                break;
            }
        CHECK_FALSE(verify_green(d).all_passed());
    }
    SUBCASE("conjugation entry") {
        GreenFunctorDatum d = base;
        for (auto& [key, m] : d.conjugation)
            if (m.rows > 1) {
                // swap two rows of a permutation matrix
                for (std::size_t c = 0; c < m.cols; ++c)
                    std::swap(m.at(0, c), m.at(1, c));
                break;
            }
        CHECK_FALSE(verify_green(d).all_passed());
    }
    SUBCASE("ring structure constant is rejected as malformed") {
        GreenFunctorDatum d = base;
        d.rings.back().constants[0][0][0] += 1; // breaks the unit law
        CHECK_THROWS_AS(verify_green(d), MalformedDatum);
    }
}

TEST_CASE("failures carry a witness and stop early when asked") {
    GreenFunctorDatum d = classical_instance(builtin::fixture_group("group_s3"));
    for (auto& [key, m] : d.induction)
        if (key.first != key.second) {
            m.entries[0] += 1;
            break;
        }
    AxiomReport report = verify_green(d, 0, true);
    bool any_failed = false;
    for (const auto& c : report.checks)
        if (!c.passed) {
            any_failed = true;
            CHECK_FALSE(c.witness.empty());
        }
    CHECK(any_failed);
}

TEST_CASE("datum survives copies and moves") {
    GreenFunctorDatum d = classical_instance(builtin::fixture_group("group_s3"));
    GreenFunctorDatum copy = d;
    GreenFunctorDatum moved = std::move(d);
    CHECK(verify_green(copy).all_passed());
    CHECK(verify_green(moved).all_passed());
}

TEST_CASE("assembled grading functor for the D4 character ring") {
    FusionRing ring = builtin::fixture_ring("rep_d4");
    // the grading group is Z/2; borrow the classical data of the 2-element group
    GreenFunctorDatum z2 = classical_instance(builtin::cyclic(2));
    RepData data = to_repdata(z2);
    GreenFunctorDatum assembled = grading_instance(ring, data);
    CHECK(assembled.lattice.size() == 2);
    CHECK(verify_green(assembled, 5).all_passed());
}

TEST_CASE("incomplete data is rejected") {
    FusionRing ring = builtin::fixture_ring("rep_d4");
    GreenFunctorDatum z2 = classical_instance(builtin::cyclic(2));
    RepData data = to_repdata(z2);

    SUBCASE("missing ring") {
        RepData broken = data;
        broken.rings.erase(broken.rings.begin());
        CHECK_THROWS_AS(grading_instance(ring, broken), IncompleteRepData);
    }
    SUBCASE("missing conjugation") {
        RepData broken = data;
        broken.conjugation.clear();
        CHECK_THROWS_AS(grading_instance(ring, broken), IncompleteRepData);
    }
    SUBCASE("extraneous subgroup") {
        RepData broken = data;
        broken.rings[{0, 1, 2}] = broken.rings.begin()->second;
        CHECK_THROWS_AS(grading_instance(ring, broken), IncompleteRepData);
    }
}
