// Difference / symmetric-difference engine against independent set-based
// oracles, the conjectured right-hand sides, and the maximal-extension
// machinery with its partition property.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dfam/constructions.hpp"
#include "dfam/diff.hpp"
#include "dfam/family.hpp"
#include "test_support.hpp"

using namespace dfam;

namespace {

SetFamily fano() {
    return SetFamily::from_sets(7, {{1, 2, 3},
                                    {1, 4, 5},
                                    {1, 6, 7},
                                    {2, 4, 6},
                                    {2, 5, 7},
                                    {3, 4, 7},
                                    {3, 5, 6}});
}

} // namespace

TEST_CASE("difference and symmetric difference match the brute oracle") {
    std::mt19937_64 gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(gen() % 9); // 4..12
        SetFamily F = trial % 2 == 0
                          ? testsup::random_any_family(
                                n, 1 + static_cast<int>(gen() % 30), gen)
                          : testsup::random_uniform_family(
                                n, 2 + static_cast<int>(gen() % 3), 0.4, gen);
        auto dref = testsup::brute_diff(F);
        auto sref = testsup::brute_sd(F);
        SetFamily D = difference_family(F);
        SetFamily S = symmetric_difference_family(F);
        REQUIRE(D.size() == dref.size());
        REQUIRE(S.size() == sref.size());
        // canonical order = sorted masks = std::set iteration order
        CHECK(std::equal(dref.begin(), dref.end(), D.masks().begin()));
        CHECK(std::equal(sref.begin(), sref.end(), S.masks().begin()));
        if (!F.empty()) {
            CHECK(D.contains(0));
            CHECK(S.contains(0));
        }
    }
}

TEST_CASE("the hash fallback for large ground sets agrees with the oracle") {
    std::mt19937_64 gen(102);
    std::vector<int> pool(40);
    for (int i = 0; i < 40; ++i)
        pool[static_cast<size_t>(i)] = i + 1;
    std::vector<Mask> members;
    for (int s = 0; s < 50; ++s) {
        std::shuffle(pool.begin(), pool.end(), gen);
        Mask m = 0;
        for (int i = 0; i < 5; ++i)
            m |= bit_of(pool[static_cast<size_t>(i)]);
        members.push_back(m);
    }
    SetFamily F = SetFamily::from_masks(40, members);
    auto dref = testsup::brute_diff(F);
    SetFamily D = difference_family(F);
    REQUIRE(D.size() == dref.size());
    CHECK(std::equal(dref.begin(), dref.end(), D.masks().begin()));
}

TEST_CASE("the pair loop is schedule independent") {
    std::mt19937_64 gen(103);
    SetFamily F = testsup::random_uniform_family(12, 4, 0.25, gen);
    SetFamily one = difference_family(F, 1);
    SetFamily four = difference_family(F, 4);
    CHECK(one == four);
}

TEST_CASE("slices partition the difference family by size") {
    std::mt19937_64 gen(104);
    SetFamily F = testsup::random_uniform_family(10, 4, 0.3, gen);
    SetFamily D = difference_family(F);
    std::size_t seen = 0;
    for (int ell = 0; ell <= 10; ++ell) {
        SetFamily S = difference_slice(F, ell);
        for (Mask m : S.masks()) {
            CHECK(popcount(m) == ell);
            CHECK(D.contains(m));
        }
        seen += S.size();
    }
    CHECK(seen == D.size());
    CHECK_THROWS(difference_slice(F, -1));
    CHECK_THROWS(difference_slice(F, 11));
}

TEST_CASE("right-hand sides at pinned values") {
    CHECK(conjecture_rhs(10, 3) == 46);
    CHECK(conjecture_rhs(13, 5) == 794);
    CHECK(conjecture_rhs(10, 4) == 130);
    CHECK(conjecture_rhs(11, 4) == 176);
    CHECK(conjecture_rhs(7, 3) == 22);
    CHECK(sd_rhs(10, 3) == 163); // 1 + 36 + 126
    CHECK(sd_rhs(7, 2) == 16);   // 1 + 15
}

TEST_CASE("a full star meets the bound with equality, slice by slice") {
    for (auto [n, k] : {std::pair{7, 3}, {10, 3}, {9, 4}, {11, 5}}) {
        SetFamily star = full_star(n, k, 1);
        DiffReport r = make_diff_report(star);
        CHECK(r.total == r.rhs);
        CHECK(!r.violated);
        for (int ell = 0; ell < k; ++ell)
            CHECK(r.slice_counts[static_cast<size_t>(ell)] ==
                  static_cast<unsigned long long>(exact_binom(n - 1, ell)));
        CHECK(r.slice_counts[static_cast<size_t>(k)] == 0);
        CHECK(r.rhs_leq == r.rhs + exact_binom(n - 1, k));
        // every difference avoids the center
        SetFamily D = difference_family(star);
        for (Mask m : D.masks())
            CHECK(!has_element(m, 1));
    }
}

TEST_CASE("the Fano plane attains the bound at (7,3)") {
    DiffReport r = make_diff_report(fano());
    CHECK(r.total == 22);
    CHECK(r.rhs == 22);
    CHECK(!r.violated);
}

TEST_CASE("report construction rejects non-uniform input") {
    CHECK_THROWS(make_diff_report(SetFamily::from_sets(4, {{1}, {1, 2}})));
    CHECK_THROWS(make_diff_report(SetFamily::empty_family(4)));
    CHECK_THROWS(make_sd_report(SetFamily::empty_family(4)));
}

TEST_CASE("symmetric-difference report buckets by even size") {
    SetFamily star = full_star(8, 3, 2);
    DiffReport r = make_sd_report(star);
    REQUIRE(r.slice_counts.size() == 7); // sizes 0..2k
    for (int s = 1; s <= 5; s += 2)
        CHECK(r.slice_counts[static_cast<size_t>(s)] == 0);
    Int sum = 0;
    for (auto c : r.slice_counts)
        sum += c;
    CHECK(sum == r.total);
}

TEST_CASE("report JSON carries counts as decimal strings") {
    DiffReport r = make_diff_report(full_star(10, 3, 1));
    auto j = diff_report_json(r);
    CHECK(j["total"] == "46");
    CHECK(j["rhs"] == "46");
    CHECK(j["rhs_leq"] == "130");
    CHECK(j["verdict"] == "holds");
    CHECK(j["slices"].size() == 4);
}

TEST_CASE("difference counts are invariant under relabeling") {
    std::mt19937_64 gen(105);
    for (int trial = 0; trial < 50; ++trial) {
        SetFamily F = testsup::random_uniform_family(8, 3, 0.3, gen);
        SetFamily G = testsup::relabel(F, testsup::random_permutation(8, gen));
        CHECK(difference_family(F).size() == difference_family(G).size());
        CHECK(symmetric_difference_family(F).size() ==
              symmetric_difference_family(G).size());
    }
}

TEST_CASE("the difference family is never smaller than the family") {
    std::mt19937_64 gen(106);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(gen() % 12); // 3..14
        SetFamily F = testsup::random_any_family(
            n, 1 + static_cast<int>(gen() % 40), gen);
        MsCheck c = marica_schonheim_check(F);
        CHECK(c.holds);
        CHECK(c.d_size >= c.f_size);
        CHECK(c.f_size == F.size());
    }
    // equality: a family closed under set difference
    MsCheck all = marica_schonheim_check(
        SetFamily::from_masks(3, {0, 1, 2, 3, 4, 5, 6, 7}));
    CHECK(all.holds);
    CHECK(all.d_size == all.f_size);
}

TEST_CASE("maximal extension of a triangle on [6] is reproducible") {
    SetFamily tri = SetFamily::from_sets(6, {{1, 2}, {2, 3}, {1, 3}});
    SetFamily G = maximal_extension(tri);
    REQUIRE(G.size() == 32); // 2^(6-1)
    const std::vector<Mask> expect_head = {3, 5, 6, 7, 11, 13, 14, 15};
    for (size_t i = 0; i < expect_head.size(); ++i)
        CHECK(G.masks()[i] == expect_head[i]);
    Mask sum = 0;
    for (Mask m : G.masks())
        sum += m;
    CHECK(sum == 1064);
    CHECK(is_intersecting(G));
    CHECK(partition_check(G));
}

TEST_CASE("small pinned extensions") {
    // on [3], {1,2} extends to the four supersets-of-a-point family
    SetFamily G3 = maximal_extension(SetFamily::from_sets(3, {{1, 2}}));
    CHECK(G3.size() == 4);
    CHECK(is_intersecting(G3));
    // the empty family on [5] extends to the majority family
    SetFamily G5 = maximal_extension(SetFamily::empty_family(5));
    CHECK(G5.size() == 16);
    for (Mask m : G5.masks())
        CHECK(popcount(m) >= 3);
}

TEST_CASE("random extensions halve the cube and tile it with differences") {
    std::mt19937_64 gen(107);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(gen() % 6); // 4..9
        SetFamily F = testsup::random_intersecting_family(n, 2 + static_cast<int>(gen() % 2), 0.6, gen);
        SetFamily G = maximal_extension(F);
        CHECK(G.size() == (std::size_t{1} << (n - 1)));
        CHECK(is_intersecting(G));
        // the input survives inside the extension
        for (Mask m : F.masks())
            CHECK(G.contains(m));
        CHECK(partition_check(G));
        CHECK(mu_p(G, 0.5) == doctest::Approx(0.5));
        CHECK(mu_p(difference_family(G), 0.5) == doctest::Approx(0.5));
    }
}

TEST_CASE("extension rejects bad input") {
    CHECK_THROWS(maximal_extension(SetFamily::from_sets(4, {{1, 2}, {3, 4}})));
}
