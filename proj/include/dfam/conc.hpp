#pragma once
// Monte Carlo checks of the two concentration inequalities: the block-count
// statistic eta over uniform random t-matchings of l-sets, and the density of
// a family inside a random complement restriction.  Verdicts are statistical:
// a bound counts as violated only when the empirical tail clears it by more
// than three standard errors.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dfam/family.hpp"
#include "dfam/rng.hpp"

namespace dfam {

enum class ConcMode { matching, complement };

// Which side of the complement-restriction inequality to test.  The displayed
// inequality bounds the lower tail; the upper tail is asserted in prose only,
// so reports for it carry a note.
enum class Tail { lower, upper };

struct ConcConfig {
    ConcMode mode = ConcMode::matching;
    int m = 0;      // ground set size
    int l = 0;      // block / member size
    int lprime = 0; // removed-set size (complement mode)
    int t = 0;      // matching length (drives epsilon in complement mode)
    double a = 1.0; // deviation parameter, > 0
    long long samples = 100000;
    std::uint64_t seed = 0;
};

struct ConcReport {
    std::string mode;          // "matching" or "complement"
    int delta = 0;             // matching: deviation sign +1/-1; complement: 0
    std::string tail;          // complement: "lower" or "upper"; matching: ""
    std::string note;          // set for the prose-only upper tail
    double alpha = 0.0;        // density |G| / binom(m, l)
    double epsilon = 0.0;      // complement only; NaN in matching mode
    double threshold = 0.0;    // event cutoff on the raw statistic
    double empirical_tail = 0.0;
    double theoretical_bound = 0.0;
    double sample_mean = 0.0;  // of eta, resp. |G(complement)|
    double ci_halfwidth = 0.0; // 1.96 * sqrt(p(1-p)/N)
    std::string verdict;       // "consistent" or "violated"
};

nlohmann::json conc_report_json(const ConcReport& r);

// Uniform random ordered t-matching of l-subsets of [m], by shuffling [m] and
// cutting the first t blocks of length l.  Requires m >= t*l.
std::vector<Mask> sample_t_matching(int m, int l, int t, Rng& rng);

struct EtaStats {
    double mean = 0.0;
    double variance = 0.0;               // unbiased sample variance
    std::vector<long long> histogram;    // counts of eta = 0..t
};

// Empirical moments of eta = number of matching blocks that belong to G.
// Requires l-uniform G on [m] with m >= t*l.
EtaStats eta_statistics(const SetFamily& G, int t, long long samples,
                        std::uint64_t seed);

// Tail check P[delta*(eta - alpha*t) >= 2a*sqrt(t)] <= e^{-a^2/2}, one report
// per deviation sign (first = +1, second = -1).  threads > 1 splits samples
// over derived seed streams; use threads = 1 for bit-reproducible reports.
std::pair<ConcReport, ConcReport> verify_matching_conc(const SetFamily& G,
                                                       int t, double a,
                                                       long long samples,
                                                       std::uint64_t seed,
                                                       int threads = 1);

// Tail check for a uniform random lprime-set H removed from the ground set:
//   lower: P[|G(comp H)| < (alpha - eps) * binom(m - lprime, l)] < 2e^{-a^2/2}
//   upper: same bound on |G(comp H)| > (alpha + eps) * binom(m - lprime, l)
// with eps = (2a + sqrt(8 ln 2)) / sqrt(t), where G(comp H) is the subfamily
// avoiding H.  Requires m >= t*l + lprime.
ConcReport verify_complement_conc(const SetFamily& G, int lprime, int t,
                                  double a, long long samples,
                                  std::uint64_t seed, Tail tail = Tail::lower,
                                  int threads = 1);

// Upper tail of the chi-square distribution, for uniformity tests.
double chi_square_pvalue(double chi2, int df);

// Ground-family specs understood by the grid and the CLI:
//   star:<x> | all | clique:<w> (all l-subsets of [w]) | random:<p> | file:<path>
SetFamily grid_family(const std::string& spec, int m, int l,
                      std::uint64_t seed);

struct GridEntry {
    ConcConfig cfg;
    std::string g_spec;
};

// The pinned verification grid (24 configurations).
std::vector<GridEntry> pinned_grid();

} // namespace dfam
