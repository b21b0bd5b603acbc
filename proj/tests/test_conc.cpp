// Monte Carlo concentration checks: matching sampler uniformity, eta
// statistics, both tail verifiers, chi-square arithmetic, ground-family
// specs, the pinned grid, and reproducibility guarantees.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "dfam/conc.hpp"
#include "dfam/constructions.hpp"
#include "dfam/family.hpp"
#include "dfam/family_io.hpp"
#include "dfam/rng.hpp"

using namespace dfam;

TEST_CASE("matchings are disjoint blocks of the right shape") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        auto blocks = sample_t_matching(11, 3, 3, rng);
        REQUIRE(blocks.size() == 3);
        Mask seen = 0;
        for (Mask b : blocks) {
            CHECK(popcount(b) == 3);
            CHECK((b & seen) == 0);
            CHECK((b & ~full_mask(11)) == 0);
            seen |= b;
        }
        CHECK(popcount(seen) == 9);
    }
    CHECK_THROWS(sample_t_matching(5, 2, 3, rng));
    CHECK_THROWS(sample_t_matching(6, 0, 3, rng));
}

TEST_CASE("each block and the joint pair draw uniformly") {
    const int m = 6, l = 2, t = 3;
    const long long N = 100000;
    Rng rng(12);
    auto cells = all_ksubsets(m, l); // 15
    std::map<Mask, int> cell_index;
    for (size_t i = 0; i < cells.size(); ++i)
        cell_index[cells[i]] = static_cast<int>(i);
    std::vector<long long> first(cells.size(), 0), second(cells.size(), 0);
    std::map<std::pair<int, int>, long long> joint;
    for (long long s = 0; s < N; ++s) {
        auto blocks = sample_t_matching(m, l, t, rng);
        const int b0 = cell_index[blocks[0]], b1 = cell_index[blocks[1]];
        ++first[static_cast<size_t>(b0)];
        ++second[static_cast<size_t>(b1)];
        ++joint[{b0, b1}];
    }
    auto chi2_vs_uniform = [N](const std::vector<long long>& obs) {
        const double expect = static_cast<double>(N) / static_cast<double>(obs.size());
        double chi2 = 0;
        for (long long o : obs) {
            const double d = static_cast<double>(o) - expect;
            chi2 += d * d / expect;
        }
        return chi2;
    };
    CHECK(chi_square_pvalue(chi2_vs_uniform(first), 14) > 0.001);
    CHECK(chi_square_pvalue(chi2_vs_uniform(second), 14) > 0.001);
    // ordered disjoint pairs: 15 * 6 = 90 equally likely cells
    CHECK(joint.size() == 90);
    std::vector<long long> jcounts;
    for (const auto& [key, cnt] : joint)
        jcounts.push_back(cnt);
    CHECK(chi_square_pvalue(chi2_vs_uniform(jcounts), 89) > 0.001);
}

TEST_CASE("chi-square upper tail against pinned references") {
    CHECK(chi_square_pvalue(10.0, 14) == doctest::Approx(0.7621834630).epsilon(1e-9));
    CHECK(chi_square_pvalue(29.14, 14) == doctest::Approx(0.0100038661).epsilon(1e-9));
    CHECK(chi_square_pvalue(16.9, 9) == doctest::Approx(0.0503051901).epsilon(1e-9));
    CHECK(chi_square_pvalue(1.0, 5) == doctest::Approx(0.9625657732).epsilon(1e-9));
    CHECK(chi_square_pvalue(0.0, 7) == 1.0);
    CHECK(chi_square_pvalue(30.0, 7) < chi_square_pvalue(20.0, 7));
    CHECK_THROWS(chi_square_pvalue(-1.0, 5));
    CHECK_THROWS(chi_square_pvalue(1.0, 0));
}

TEST_CASE("eta statistics: degenerate and star ground families") {
    // complete family: every block belongs, eta == t always
    EtaStats all = eta_statistics(complete_uniform_family(8, 2), 3, 5000, 21);
    CHECK(all.mean == doctest::Approx(3.0));
    CHECK(all.variance == doctest::Approx(0.0));
    CHECK(all.histogram[3] == 5000);

    // star: each block contains the center with probability l/m
    const int t = 4;
    const long long N = 20000;
    EtaStats st = eta_statistics(full_star(12, 2, 1), t, N, 22);
    long long total = 0;
    for (long long h : st.histogram)
        total += h;
    CHECK(total == N);
    CHECK(st.histogram.size() == static_cast<size_t>(t) + 1);
    CHECK(st.mean == doctest::Approx(t * (2.0 / 12.0)).epsilon(0.05));
    CHECK(st.variance > 0.0);

    // same seed, same numbers
    EtaStats st2 = eta_statistics(full_star(12, 2, 1), t, N, 22);
    CHECK(st.mean == st2.mean);
    CHECK(st.histogram == st2.histogram);
}

TEST_CASE("matching tail reports: star ground family") {
    SetFamily G = full_star(20, 2, 1);
    auto [up, down] = verify_matching_conc(G, 5, 1.0, 100000, 31);
    CHECK(up.mode == "matching");
    CHECK(up.delta == 1);
    CHECK(down.delta == -1);
    CHECK(up.alpha == doctest::Approx(0.1)); // binom(19,1)/binom(20,2)
    CHECK(up.threshold == doctest::Approx(2.0 * std::sqrt(5.0)));
    CHECK(up.theoretical_bound == doctest::Approx(std::exp(-0.5)));
    CHECK(std::isnan(up.epsilon));
    CHECK(up.sample_mean == down.sample_mean);
    CHECK(up.sample_mean == doctest::Approx(0.5).epsilon(0.05));
    // eta >= 0.5 + 4.47 means all five blocks hit the center: essentially never
    CHECK(up.empirical_tail <= up.theoretical_bound);
    // eta cannot sit 4.47 below a mean of 0.5
    CHECK(down.empirical_tail == 0.0);
    CHECK(up.verdict == "consistent");
    CHECK(down.verdict == "consistent");

    const auto j = conc_report_json(up);
    CHECK(j["delta"] == 1);
    CHECK(j["epsilon"].is_null());
    CHECK(!j.contains("tail"));
    CHECK(j["verdict"] == "consistent");
}

TEST_CASE("matching reports are bit-identical per seed and thread count") {
    SetFamily G = grid_family("random:0.5", 14, 2, 77);
    auto [a1, b1] = verify_matching_conc(G, 4, 0.8, 30000, 5, 1);
    auto [a2, b2] = verify_matching_conc(G, 4, 0.8, 30000, 5, 1);
    CHECK(a1.empirical_tail == a2.empirical_tail);
    CHECK(a1.sample_mean == a2.sample_mean);
    CHECK(b1.empirical_tail == b2.empirical_tail);
    auto [a3, b3] = verify_matching_conc(G, 4, 0.8, 30000, 5, 3);
    auto [a4, b4] = verify_matching_conc(G, 4, 0.8, 30000, 5, 3);
    CHECK(a3.empirical_tail == a4.empirical_tail);
    CHECK(a3.sample_mean == a4.sample_mean);
    // different stream split, same statistics up to Monte Carlo noise
    CHECK(a3.sample_mean == doctest::Approx(a1.sample_mean).epsilon(0.05));
}

TEST_CASE("complement tail report and the epsilon formula") {
    SetFamily star = full_star(26, 2, 1);
    ConcReport r = verify_complement_conc(star, 5, 10, 2.0, 5000, 41);
    CHECK(r.mode == "complement");
    CHECK(r.tail == "lower");
    CHECK(r.note.empty());
    CHECK(r.epsilon == doctest::Approx(2.0095705462791584).epsilon(1e-12));
    CHECK(r.theoretical_bound == doctest::Approx(2.0 * std::exp(-2.0)));
    // alpha ~ 2/26 < epsilon, so the lower event is impossible
    CHECK(r.threshold < 0.0);
    CHECK(r.empirical_tail == 0.0);
    CHECK(r.verdict == "consistent");

    ConcReport u = verify_complement_conc(star, 5, 10, 2.0, 5000, 41, Tail::upper);
    CHECK(u.tail == "upper");
    CHECK(!u.note.empty());
    const auto j = conc_report_json(u);
    CHECK(j["tail"] == "upper");
    CHECK(j.contains("note"));
    CHECK(!j.contains("delta"));

    CHECK_THROWS(verify_complement_conc(star, 7, 10, 2.0, 100, 1)); // 26 < 20+7
}

TEST_CASE("complement sample mean tracks the avoidance probability") {
    SetFamily G = grid_family("random:0.6", 55, 2, 99);
    REQUIRE(G.size() > 700);
    ConcReport r = verify_complement_conc(G, 5, 25, 0.05, 20000, 43);
    // each pair avoids a uniform 5-set with probability (50*49)/(55*54)
    const double p_avoid = (50.0 * 49.0) / (55.0 * 54.0);
    CHECK(r.sample_mean ==
          doctest::Approx(static_cast<double>(G.size()) * p_avoid).epsilon(0.01));
    CHECK(r.threshold > 0.0); // alpha ~ 0.6 clears this epsilon
    CHECK(r.verdict == "consistent");
}

TEST_CASE("ground family specs") {
    CHECK(grid_family("star:3", 10, 3, 0) == full_star(10, 3, 3));
    CHECK(grid_family("all", 6, 2, 0).size() == 15);
    SetFamily cl = grid_family("clique:4", 8, 2, 0);
    CHECK(cl.n() == 8);
    CHECK(cl.size() == 6);
    for (Mask m : cl.masks())
        CHECK((m & ~full_mask(4)) == 0);

    SetFamily r1 = grid_family("random:0.5", 9, 3, 123);
    SetFamily r2 = grid_family("random:0.5", 9, 3, 123);
    CHECK(r1 == r2);
    if (!r1.empty())
        CHECK(*r1.uniform_k() == 3);

    const char* path = "/tmp/dfam_test_grid_family.txt";
    {
        std::ofstream f(path);
        write_family(f, full_star(7, 2, 2));
    }
    CHECK(grid_family(std::string("file:") + path, 7, 2, 0) == full_star(7, 2, 2));
    CHECK_THROWS(grid_family(std::string("file:") + path, 8, 2, 0));
    CHECK_THROWS(grid_family(std::string("file:") + path, 7, 3, 0));
    std::remove(path);

    CHECK_THROWS(grid_family("clique:1", 8, 2, 0));
    CHECK_THROWS(grid_family("clique:9", 8, 2, 0));
    CHECK_THROWS(grid_family("random:1.5", 8, 2, 0));
    CHECK_THROWS(grid_family("rubbish", 8, 2, 0));
}

TEST_CASE("the pinned grid is well formed") {
    auto grid = pinned_grid();
    CHECK(grid.size() >= 20);
    bool m2025_a1 = false, m2025_a2 = false, c30_a1 = false, c30_a2 = false;
    for (const GridEntry& e : grid) {
        const SetFamily G = grid_family(e.g_spec, e.cfg.m, e.cfg.l, e.cfg.seed);
        CHECK(G.size() <= 1000000);
        if (e.cfg.mode == ConcMode::matching) {
            CHECK(e.cfg.m >= e.cfg.t * e.cfg.l);
            if (e.cfg.m == 20 && e.cfg.l == 2 && e.cfg.t == 5) {
                if (e.cfg.a == 1.0)
                    m2025_a1 = true;
                if (e.cfg.a == 2.0)
                    m2025_a2 = true;
            }
        } else {
            CHECK(e.cfg.m >= e.cfg.t * e.cfg.l + e.cfg.lprime);
            if (e.cfg.m == 30 && e.cfg.l == 2 && e.cfg.t == 10 &&
                e.cfg.lprime == 4) {
                if (e.cfg.a == 1.0)
                    c30_a1 = true;
                if (e.cfg.a == 2.0)
                    c30_a2 = true;
            }
        }
        CHECK(e.cfg.samples >= 100000);
        CHECK(e.cfg.a > 0.0);
    }
    CHECK(m2025_a1);
    CHECK(m2025_a2);
    CHECK(c30_a1);
    CHECK(c30_a2);
}
