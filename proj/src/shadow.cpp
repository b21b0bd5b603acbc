#include "dfam/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace dfam {

SetFamily shadow(const SetFamily& F, int i) {
    if (!F.uniform_k())
        throw std::invalid_argument("shadow: family must be uniform");
    const int k = *F.uniform_k();
    if (i < 0 || i > k)
        throw std::invalid_argument("shadow: need 0 <= i <= k");
    std::unordered_set<Mask> seen;
    // Enumerate i-subsets of each member by walking Gosper patterns over the
    // member's own bit positions.
    for (Mask m : F.masks()) {
        std::vector<int> pos;
        for (Mask t = m; t;) {
            int b = std::countr_zero(t);
            pos.push_back(b);
            t &= t - 1;
        }
        if (i == 0) {
            seen.insert(0);
            continue;
        }
        Mask pat = (i >= 64) ? ~Mask{0} : ((Mask{1} << i) - 1);
        const Mask stop = Mask{1} << pos.size();
        while (pat < stop) {
            Mask sub = 0;
            for (Mask t = pat; t;) {
                int b = std::countr_zero(t);
                sub |= Mask{1} << pos[static_cast<size_t>(b)];
                t &= t - 1;
            }
            seen.insert(sub);
            pat = next_ksubset(pat);
        }
    }
    std::vector<Mask> out(seen.begin(), seen.end());
    return SetFamily::from_masks(F.n(), out);
}

double real_binomial(double x, int b) {
    if (b < 0)
        throw std::invalid_argument("real_binomial: need b >= 0");
    if (b == 0)
        return 1.0;
    if (b <= 20) {
        double r = 1.0;
        for (int j = 0; j < b; ++j)
            r *= (x - j) / (b - j);
        return r;
    }
    // Log-space with sign tracking: any zero factor annihilates the product,
    // each negative factor flips the sign.
    double log_abs = 0.0;
    int sign = 1;
    for (int j = 0; j < b; ++j) {
        double f = x - j;
        if (f == 0.0)
            return 0.0;
        if (f < 0.0) {
            sign = -sign;
            f = -f;
        }
        log_abs += std::log(f);
        log_abs -= std::log(static_cast<double>(b - j));
    }
    return sign * std::exp(log_abs);
}

double lovasz_x(const Int& m, int k, int n) {
    if (k < 1 || n < k)
        throw std::invalid_argument("lovasz_x: need 1 <= k <= n");
    if (m < 1 || m > exact_binom(n, k))
        throw std::invalid_argument("lovasz_x: need 1 <= m <= binom(n,k)");
    const double target = as_double(m);
    double lo = k, hi = n;
    // Bisect until the bracket collapses to adjacent doubles.  For m >= 1
    // every factor x - j in the falling product is >= 1, so the value is
    // well conditioned and the round trip lands within ~1e-14 relative.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (real_binomial(mid, k) < target)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

KkResult kk_verify(const SetFamily& F, int i) {
    if (!F.uniform_k() || F.size() == 0)
        throw std::invalid_argument("kk_verify: need a non-empty uniform family");
    const int k = *F.uniform_k();
    if (i < 0 || i >= k)
        throw std::invalid_argument("kk_verify: need 0 <= i < k");
    KkResult r;
    r.lhs = shadow(F, i).size();
    r.x = lovasz_x(Int(F.size()), k, F.n());
    r.bound = real_binomial(r.x, i);
    r.holds = static_cast<double>(r.lhs) >= r.bound - 1e-6;
    return r;
}

bool katona_criterion(const SetFamily& F, const SetFamily& G) {
    if (F.n() != G.n())
        throw std::invalid_argument("katona_criterion: ground sets differ");
    if (F.size() == 0 || G.size() == 0)
        return true;
    if (!F.uniform_k() || !G.uniform_k())
        throw std::invalid_argument("katona_criterion: families must be uniform");
    const int n = F.n();
    const int k = *F.uniform_k();
    const int l = *G.uniform_k();
    if (n < k + l)
        throw std::invalid_argument("katona_criterion: need n >= k + l");
    // F and G are cross-intersecting iff F avoids the k-shadow of the
    // family of complements of G (each complement has n - l >= k elements).
    SetFamily gc = complement_family(G);
    SetFamily sh = shadow(gc, k);
    for (Mask m : F.masks())
        if (sh.contains(m))
            return false;
    return true;
}

double cross_bound(int n, int a, int b, double x) {
    if (a < 0 || b < 0 || n < a + b)
        throw std::invalid_argument("cross_bound: need a, b >= 0 and n >= a + b");
    if (x < static_cast<double>(n - a) || x > static_cast<double>(n))
        throw std::invalid_argument("cross_bound: need n - a <= x <= n");
    return as_double(exact_binom(n, b)) - real_binomial(x, b);
}

} // namespace dfam
