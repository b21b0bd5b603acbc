#pragma once
// Named constructions and junta machinery: full stars, the Hilton-Milner
// bound, the A_p families (star perturbed inside a small window), general
// juntas given by their allowed window traces, the level decomposition of a
// junta's difference family with an exact realizability-aware count, the
// star-vs-A_3 gap and its threshold in n/k, the A_k gain/loss split, the
// biased-measure objective over exact levels, and a (k, c, p) scan for
// constructions whose difference family beats the star's.

#include <string>
#include <vector>

#include "dfam/bignum.hpp"
#include "dfam/family.hpp"

namespace dfam {

// All k-subsets of [n] containing x.  Requires 1 <= x <= n, 1 <= k <= n.
SetFamily full_star(int n, int k, int x = 1);

// binom(n-1,k-1) - binom(n-k-1,k-1) + 1: the maximum size of an intersecting
// k-uniform family on [n] that is not a subfamily of a star (n > 2k).
Int hm_bound(int n, int k);

// A_p = {A : 1 in A, A meets [2,p+1]} union {A : [2,p+1] subset of A},
// k-uniform on [n].  Requires 2 <= p <= k and n > 2k.
SetFamily build_a_p(int n, int k, int p);

// |A_p| in closed form:
//   binom(n-1,k-1) - binom(n-p-1,k-1) + binom(n-p,k-p) - binom(n-p-1,k-p-1).
Int a_p_size(int n, int k, int p);

// A junta on window [w]: membership of a k-set S is decided by its trace
// S intersect [w], which must equal one of the defining masks.
struct Junta {
    int w = 0;                  // window width, 1 <= w <= 12
    std::vector<Mask> defining; // allowed traces, subsets of [w], deduplicated
};

// Throws unless 1 <= w <= 12 and every defining mask is inside [w].
void validate_junta(const Junta& J);

// The A_p family as a junta of width p+1: traces containing element 1 of
// size >= 2, plus the window tail [2,p+1] itself.  Requires p >= 2.
Junta as_junta(int p);

// Expand to the k-uniform family on [n].  Requires n >= w; the expansion is
// capped at `cap` members.
SetFamily junta_family(const Junta& J, int n, int k,
                       std::uint64_t cap = 5'000'000);

// Exact member count without expansion.
Int junta_family_size(const Junta& J, int n, int k);

// Whether the expanded family is intersecting, decided on traces alone:
// a disjoint trace pair whose tails can also be made disjoint
// ((k-|T|) + (k-|T'|) <= n-w) kills the property.  Requires k >= 1.
bool junta_is_intersecting(const Junta& J, int n, int k);

// Window-difference levels: levels[i] = {A \ B : A,B defining, |A and B| <= i}
// for i = 0..w (cumulative, stabilizing at i = w), and
// exact_levels[s-1] = levels[s] \ levels[s-1] for s = 1..w.
struct JuntaLevels {
    std::vector<std::vector<Mask>> levels;
    std::vector<std::vector<Mask>> exact_levels;
};
JuntaLevels junta_levels(const Junta& J);

// Exact |D| of the expanded junta, computed per (window head, tail size) with
// a realizability test over defining pairs.  Requires the expanded family to
// be non-empty and intersecting.
Int junta_diff_count(const Junta& J, int n, int k);

// The plain level-decomposition count
//   sum_{i=1..k} sum_{h in levels[min(i,w)]} binom(n-w, k-i-|h|)
// (degenerate binomials contribute 0).  Agrees with junta_diff_count on the
// standard constructions but overcounts for some juntas whose defining sets
// or tails are infeasible at (n,k); kept for comparison.
Int junta_diff_count_level_formula(const Junta& J, int n, int k);

// binom(n-4,k-1) - binom(n-3,k-2) = |D(star)| - |D(A_3)|; negative exactly
// when A_3 beats the star.  Requires n > 2k, k >= 2.
Int a3_gap(int n, int k);

// Root of the gap in n: (3k + 2 + sqrt(5k^2 - 12k + 8)) / 2.  The gap is
// negative for 2k < n < threshold and positive for n > threshold.
double a3_threshold(int k);

// Exact sign of n - a3_threshold(k) in integer arithmetic: -1, 0, +1.
int a3_threshold_side(long long n, long long k);

// D(A_k) versus D(star): gain = sum_{l <= k-2} binom(n-k-1, l) slices gained,
// loss = binom(n-k-1, k-1) differences lost.  A_k beats the star iff
// gain > loss.  Requires n > 2k, k >= 2.
struct GainLoss {
    Int gain;
    Int loss;
};
GainLoss ak_gain_loss(int n, int k);

// Biased-measure objective over exact levels:
//   sum_{s >= 1, level non-empty} (alpha/(1-alpha))^{s-1} * mu_alpha(exact_levels[s-1])
// where mu_alpha weighs a trace T inside the window as
// alpha^|T| (1-alpha)^{w-|T|}.  Requires 0 < alpha < 1.
double junta_weighted_objective(const Junta& J, double alpha);

// One row of the counterexample scan at n = round(c*k).
struct ScanRow {
    int p;
    double c;
    int n;
    int k;
    Int junta_count; // exact |D(A_p(n,k))|
    Int star_rhs;    // sum_{l < k} binom(n-1, l) = |D(star)|
    bool beats_star;
};

// Scan A_p over the cross product of k, c, and p values; rows with
// n = round(c*k) <= 2k or p > min(k, 11) are skipped.
std::vector<ScanRow> scan_ap_counterexamples(const std::vector<int>& ks,
                                             const std::vector<double>& cs,
                                             const std::vector<int>& ps);

// CSV with header p,c,n,k,junta_count,star_rhs,beats_star.
std::string scan_csv(const std::vector<ScanRow>& rows);

} // namespace dfam
