#pragma once
// Level shadows of uniform families, real-argument binomial coefficients,
// the Lovasz form of the Kruskal-Katona bound (|shadow^i F| >= binom(x,i)
// where binom(x,k) = |F|), Katona's shadow criterion for cross-intersecting
// pairs, and the resulting size bound for the second family of a pair.

#include "dfam/bignum.hpp"
#include "dfam/family.hpp"

namespace dfam {

// All i-subsets contained in some member.  Requires k-uniform F, 0 <= i <= k.
SetFamily shadow(const SetFamily& F, int i);

// binom(x, b) for real x: product (x)(x-1)...(x-b+1)/b!.  Computed in
// log-space with sign tracking for b > 20.  Requires b >= 0.
double real_binomial(double x, int b);

// The unique x in [k, n] with binom(x, k) = m, by bisection (x -> binom(x,k)
// is strictly increasing there).  Requires 1 <= m <= binom(n,k).
double lovasz_x(const Int& m, int k, int n);

struct KkResult {
    bool holds;
    unsigned long long lhs; // |shadow(F, i)|, exact
    double x;
    double bound; // binom(x, i), float
};
// Checks |shadow(F,i)| >= binom(x,i) with slack 1e-6 for float error.
// Requires non-empty k-uniform F and 0 <= i < k.
KkResult kk_verify(const SetFamily& F, int i);

// Katona's criterion: k-uniform F and l-uniform G are cross-intersecting
// iff F avoids shadow^k of the complement family of G.  Requires n >= k + l.
// Empty families are vacuously cross-intersecting.
bool katona_criterion(const SetFamily& F, const SetFamily& G);

// If a-uniform A and b-uniform B are cross-intersecting and |A| >= binom(x, n-a),
// then |B| <= binom(n,b) - binom(x,b); this evaluates that right-hand side.
// Requires n >= a + b and n - a <= x <= n.
double cross_bound(int n, int a, int b, double x);

} // namespace dfam
