#pragma once
// Difference families D(F) = { F \ F' : F, F' in F } over ordered pairs
// (F = F' included, so the empty set belongs to D of any non-empty family),
// symmetric-difference families, the conjectured right-hand sides, the
// Marica-Schonheim check, and the extension of an intersecting family to a
// maximal one (half of 2^[n]) with its partition property.

#include "dfam/bignum.hpp"
#include "dfam/family.hpp"

#include <json.hpp>

#include <vector>

namespace dfam {

// O(|F|^2) ordered-pair loop with hash-set dedup, then canonical sort.
// threads > 1 splits the pair loop by rows; output is schedule-independent.
SetFamily difference_family(const SetFamily& F, int threads = 1);

// Members of D(F) of size exactly ell.  Requires 0 <= ell <= n.
SetFamily difference_slice(const SetFamily& F, int ell);

// SD(F) = { F xor F' } over pairs (symmetric difference commutes).
SetFamily symmetric_difference_family(const SetFamily& F);

// Conjectured maximum of |D| over intersecting k-uniform families:
// sum of binom(n-1, ell) for ell < k.  Requires n >= k >= 1.
Int conjecture_rhs(int n, int k);

// Symmetric-difference analogue: sum of binom(n-1, 2*ell) for ell < k.
Int sd_rhs(int n, int k);

struct MsCheck {
    bool holds;
    unsigned long long d_size;
    unsigned long long f_size;
};
// |D(F)| >= |F| (a theorem; the check is a harness for the engine).
MsCheck marica_schonheim_check(const SetFamily& F);

struct DiffReport {
    int n = 0;
    int k = 0;
    std::vector<unsigned long long> slice_counts; // index ell = 0..k
    Int total;
    Int rhs;      // sum over ell < k
    Int rhs_leq;  // sum over ell <= k (alternative reading, reported alongside)
    bool violated = false;
};
// Requires a k-uniform family.  verdict "violated" means total > rhs.
DiffReport make_diff_report(const SetFamily& F, int threads = 1);
nlohmann::json diff_report_json(const DiffReport& r);

// Same shape for the symmetric-difference count against sd_rhs.
DiffReport make_sd_report(const SetFamily& F);

// Grows an intersecting F (subsets of 2^[n], n <= 24) to an intersecting G
// of size exactly 2^(n-1): take the up-closure, then walk complement pairs
// {X, ~X} in canonical order of the smaller representative and add whichever
// side still meets every current member; if both do, prefer the larger side,
// and at equal size (n even) the side containing element 1.
SetFamily maximal_extension(const SetFamily& F);

// For intersecting G with |G| = 2^(n-1): is G together with D(G) a partition
// of 2^[n]?  Quadratic in |G|, so guarded to n <= 16.
bool partition_check(const SetFamily& G);

} // namespace dfam
