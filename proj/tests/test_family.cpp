// Core container, text format, and the basic family predicates.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "dfam/family.hpp"
#include "dfam/family_io.hpp"
#include "test_support.hpp"

using namespace dfam;

TEST_CASE("masks are canonicalized, deduplicated, and queryable") {
    SetFamily F = SetFamily::from_sets(5, {{3, 1}, {1, 3}, {2, 5}, {4}});
    CHECK(F.n() == 5);
    CHECK(F.size() == 3); // {1,3} twice
    // canonical order = increasing mask value
    REQUIRE(F.masks().size() == 3);
    CHECK(F.masks()[0] == mask_of({1, 3}));
    CHECK(F.masks()[1] == mask_of({4}));
    CHECK(F.masks()[2] == mask_of({2, 5}));
    CHECK(F.contains(mask_of({1, 3})));
    CHECK(!F.contains(mask_of({1, 2})));
    CHECK(!F.uniform_k());

    SetFamily U = SetFamily::from_sets(4, {{1, 2}, {3, 4}});
    REQUIRE(U.uniform_k());
    CHECK(*U.uniform_k() == 2);
    CHECK(!SetFamily::empty_family(4).uniform_k());
}

TEST_CASE("element bounds are enforced") {
    CHECK_THROWS(SetFamily::from_sets(3, {{4}}));
    CHECK_THROWS(SetFamily::from_sets(3, {{0}}));
    CHECK_THROWS(SetFamily::from_masks(3, {bit_of(4)}));
    CHECK_THROWS(SetFamily::from_masks(0, {}));
    CHECK_NOTHROW(SetFamily::from_masks(64, {full_mask(64)}));
}

TEST_CASE("all k-subsets come in canonical order") {
    auto subs = all_ksubsets(5, 2);
    CHECK(subs.size() == 10);
    for (size_t i = 1; i < subs.size(); ++i)
        CHECK(subs[i - 1] < subs[i]);
    CHECK(all_ksubsets(6, 0).size() == 1);
    CHECK(all_ksubsets(6, 6).size() == 1);
    CHECK(complete_uniform_family(6, 3).size() == 20);
}

TEST_CASE("text format round trip, header and headerless") {
    SetFamily F = SetFamily::from_sets(6, {{1, 2, 3}, {4, 5, 6}, {1, 6}});
    std::string text = family_to_text(F, {"a remark"});
    CHECK(text.find("# a remark") == 0);
    SetFamily G = parse_family_text(text);
    CHECK(F == G);

    // headerless: n inferred from the largest element
    SetFamily H = parse_family_text("1 2\n2 3\n");
    CHECK(H.n() == 3);
    CHECK(H.size() == 2);

    // empty set spelled "-"
    SetFamily E = parse_family_text("n 4\n-\n1 4\n");
    CHECK(E.contains(0));
    CHECK(E.size() == 2);
    CHECK(family_to_text(E).find("-") != std::string::npos);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS((void)parse_family_text("n 3\n1 5\n"), FamilyParseError);
    CHECK_THROWS_AS((void)parse_family_text("n 3\n1 1\n"), FamilyParseError);
    CHECK_THROWS_AS((void)parse_family_text("n 3\n1 2\n1 2\n"), FamilyParseError);
    CHECK_THROWS_AS((void)parse_family_text("n 3\nx y\n"), FamilyParseError);
    CHECK_THROWS_AS((void)parse_family_text("n 0\n"), FamilyParseError);
    CHECK_THROWS_AS((void)parse_family_text("n 65\n1\n"), FamilyParseError);
}

TEST_CASE("intersecting and cross-intersecting predicates") {
    SetFamily star = SetFamily::from_sets(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    CHECK(is_intersecting(star));
    SetFamily split = SetFamily::from_sets(5, {{1, 2}, {3, 4}});
    CHECK(!is_intersecting(split));
    // the empty family and singleton families are vacuously intersecting
    CHECK(is_intersecting(SetFamily::empty_family(5)));

    SetFamily A = SetFamily::from_sets(6, {{1, 2}, {1, 3}});
    SetFamily B = SetFamily::from_sets(6, {{1, 5, 6}, {2, 3, 6}});
    CHECK(are_cross_intersecting(A, B));
    SetFamily C = SetFamily::from_sets(6, {{4, 5, 6}});
    CHECK(!are_cross_intersecting(A, C));
    CHECK(are_cross_intersecting(SetFamily::empty_family(6), C));
}

TEST_CASE("trace restrictions select by intersection pattern") {
    SetFamily F = SetFamily::from_sets(5, {{1, 2}, {1, 3}, {2, 3}, {4, 5}});
    // members containing 1, with 1 stripped
    SetFamily on = restrict_full(F, bit_of(1));
    CHECK(on.size() == 2);
    CHECK(on.contains(mask_of({2})));
    CHECK(on.contains(mask_of({3})));
    // members avoiding 1, kept whole
    SetFamily off = restrict_avoid(F, bit_of(1));
    CHECK(off.size() == 2);
    CHECK(off.contains(mask_of({2, 3})));
    CHECK(off.contains(mask_of({4, 5})));
    // trace on {1,2} equal to exactly {2}
    SetFamily tr = restrict(F, mask_of({2}), mask_of({1, 2}));
    CHECK(tr.size() == 1);
    CHECK(tr.contains(mask_of({3})));
    CHECK_THROWS(restrict(F, mask_of({3}), mask_of({1, 2}))); // A not inside B
}

TEST_CASE("complement family flips every member") {
    SetFamily F = SetFamily::from_sets(4, {{1, 2}, {3}});
    SetFamily C = complement_family(F);
    CHECK(C.size() == 2);
    CHECK(C.contains(mask_of({3, 4})));
    CHECK(C.contains(mask_of({1, 2, 4})));
    CHECK(complement_family(C) == F);
}

TEST_CASE("diversity is zero exactly for stars") {
    SetFamily star = SetFamily::from_sets(5, {{1, 2}, {1, 3}, {1, 4, 5}});
    CHECK(diversity(star).value == 0);
    CHECK(diversity(star).witness == 1);

    SetFamily tri = SetFamily::from_sets(5, {{1, 2}, {2, 3}, {1, 3}});
    Diversity d = diversity(tri);
    CHECK(d.value == 1); // dropping any element leaves one member out
}

TEST_CASE("biased measure matches hand values") {
    SetFamily F = SetFamily::from_sets(3, {{1}, {1, 2}, {1, 2, 3}});
    // p = 1/2: each member weighs 1/8
    CHECK(mu_p(F, 0.5) == doctest::Approx(3.0 / 8.0));
    double p = 0.3;
    double expect = p * (1 - p) * (1 - p) + p * p * (1 - p) + p * p * p;
    CHECK(mu_p(F, p) == doctest::Approx(expect));
    CHECK(mu_p(SetFamily::empty_family(3), 0.5) == 0.0);
}

TEST_CASE("predicates survive relabeling") {
    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 50; ++trial) {
        SetFamily F = testsup::random_uniform_family(8, 3, 0.3, gen);
        auto perm = testsup::random_permutation(8, gen);
        SetFamily G = testsup::relabel(F, perm);
        CHECK(F.size() == G.size());
        CHECK(is_intersecting(F) == is_intersecting(G));
        if (!F.empty())
            CHECK(diversity(F).value == diversity(G).value);
        CHECK(mu_p(F, 0.37) == doctest::Approx(mu_p(G, 0.37)));
    }
}
