#include "dfam/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dfam {

SetFamily full_star(int n, int k, int x) {
    if (k < 1 || k > n)
        throw std::invalid_argument("full_star: need 1 <= k <= n");
    if (x < 1 || x > n)
        throw std::invalid_argument("full_star: center out of range");
    if (exact_binom(n - 1, k - 1) > 5'000'000)
        throw std::invalid_argument("full_star: family too large");
    // Build directly as {x} joined with each (k-1)-subset of the rest.
    std::vector<int> rest;
    for (int e = 1; e <= n; ++e)
        if (e != x)
            rest.push_back(e);
    std::vector<Mask> out;
    if (k == 1) {
        out.push_back(bit_of(x));
    } else {
        Mask pat = (Mask{1} << (k - 1)) - 1;
        const Mask stop = Mask{1} << rest.size();
        while (pat < stop) {
            Mask s = bit_of(x);
            for (Mask t = pat; t;) {
                int b = std::countr_zero(t);
                s |= bit_of(rest[static_cast<size_t>(b)]);
                t &= t - 1;
            }
            out.push_back(s);
            pat = next_ksubset(pat);
        }
    }
    return SetFamily::from_masks(n, out);
}

Int hm_bound(int n, int k) {
    if (k < 1 || n <= 2 * k)
        throw std::invalid_argument("hm_bound: need n > 2k >= 2");
    return exact_binom(n - 1, k - 1) - exact_binom(n - k - 1, k - 1) + 1;
}

SetFamily build_a_p(int n, int k, int p) {
    if (p < 2 || p > k)
        throw std::invalid_argument("build_a_p: need 2 <= p <= k");
    if (n <= 2 * k)
        throw std::invalid_argument("build_a_p: need n > 2k");
    const Mask window = full_mask(p + 1) & ~Mask{1}; // elements 2..p+1
    std::vector<Mask> out;
    for (Mask s : all_ksubsets(n, k)) {
        bool star_part = (s & 1) && (s & window);
        bool window_part = (s & window) == window;
        if (star_part || window_part)
            out.push_back(s);
    }
    return SetFamily::from_masks(n, out);
}

Int a_p_size(int n, int k, int p) {
    if (p < 2 || p > k)
        throw std::invalid_argument("a_p_size: need 2 <= p <= k");
    if (n <= 2 * k)
        throw std::invalid_argument("a_p_size: need n > 2k");
    return exact_binom(n - 1, k - 1) - exact_binom(n - p - 1, k - 1) +
           exact_binom(n - p, k - p) - exact_binom(n - p - 1, k - p - 1);
}

void validate_junta(const Junta& J) {
    if (J.w < 1 || J.w > 12)
        throw std::invalid_argument("junta: need 1 <= w <= 12");
    const Mask win = full_mask(J.w);
    for (Mask t : J.defining)
        if (t & ~win)
            throw std::invalid_argument("junta: defining mask outside window");
}

Junta as_junta(int p) {
    if (p < 2)
        throw std::invalid_argument("as_junta: need p >= 2");
    Junta J;
    J.w = p + 1;
    const Mask win = full_mask(J.w);
    for (Mask t = 0; t <= win; ++t)
        if ((t & 1) && popcount(t) >= 2)
            J.defining.push_back(t);
    J.defining.push_back(win & ~Mask{1}); // the window tail [2, p+1]
    std::sort(J.defining.begin(), J.defining.end());
    return J;
}

namespace {

// Defining traces that can appear as the window part of a k-set on [n].
std::vector<Mask> feasible_traces(const Junta& J, int n, int k) {
    std::vector<Mask> out;
    for (Mask t : J.defining) {
        int tail = k - popcount(t);
        if (tail >= 0 && tail <= n - J.w)
            out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

SetFamily junta_family(const Junta& J, int n, int k, std::uint64_t cap) {
    validate_junta(J);
    if (n < J.w || k < 1 || k > n)
        throw std::invalid_argument("junta_family: need w <= n and 1 <= k <= n");
    if (junta_family_size(J, n, k) > cap)
        throw std::invalid_argument("junta_family: expansion exceeds cap");
    const int pool = n - J.w;
    std::vector<Mask> out;
    for (Mask t : feasible_traces(J, n, k)) {
        const int r = k - popcount(t);
        if (r == 0) {
            out.push_back(t);
            continue;
        }
        Mask pat = (Mask{1} << r) - 1;
        const Mask stop = Mask{1} << pool;
        while (pat < stop) {
            out.push_back(t | (pat << J.w));
            pat = next_ksubset(pat);
        }
    }
    return SetFamily::from_masks(n, out);
}

Int junta_family_size(const Junta& J, int n, int k) {
    validate_junta(J);
    Int total = 0;
    for (Mask t : feasible_traces(J, n, k))
        total += exact_binom(n - J.w, k - popcount(t));
    return total;
}

bool junta_is_intersecting(const Junta& J, int n, int k) {
    validate_junta(J);
    if (k < 1)
        throw std::invalid_argument("junta_is_intersecting: need k >= 1");
    const auto traces = feasible_traces(J, n, k);
    // A disjoint trace pair is fatal exactly when their tails fit disjointly
    // into the pool; this covers the equal-empty-trace pair as well.
    for (Mask a : traces)
        for (Mask b : traces)
            if ((a & b) == 0 &&
                (k - popcount(a)) + (k - popcount(b)) <= n - J.w)
                return false;
    return true;
}

JuntaLevels junta_levels(const Junta& J) {
    validate_junta(J);
    JuntaLevels L;
    L.levels.resize(static_cast<size_t>(J.w) + 1);
    for (int i = 0; i <= J.w; ++i) {
        std::unordered_set<Mask> seen;
        for (Mask a : J.defining)
            for (Mask b : J.defining)
                if (popcount(a & b) <= i)
                    seen.insert(a & ~b);
        auto& v = L.levels[static_cast<size_t>(i)];
        v.assign(seen.begin(), seen.end());
        std::sort(v.begin(), v.end());
    }
    L.exact_levels.resize(static_cast<size_t>(J.w));
    for (int s = 1; s <= J.w; ++s) {
        auto& prev = L.levels[static_cast<size_t>(s) - 1];
        auto& cur = L.levels[static_cast<size_t>(s)];
        std::set_difference(cur.begin(), cur.end(), prev.begin(), prev.end(),
                            std::back_inserter(L.exact_levels[static_cast<size_t>(s) - 1]));
    }
    return L;
}

Int junta_diff_count(const Junta& J, int n, int k) {
    validate_junta(J);
    if (!junta_is_intersecting(J, n, k))
        throw std::invalid_argument("junta_diff_count: expanded family is not intersecting");
    const int w = J.w;
    const auto traces = feasible_traces(J, n, k);
    // For each window head h = A \ B collect the (|A|, |B|, |A and B|)
    // signatures of the defining pairs producing it.
    struct Sig {
        int a, b, m;
    };
    std::unordered_map<Mask, std::vector<Sig>> heads;
    for (Mask a : traces)
        for (Mask b : traces)
            heads[a & ~b].push_back({popcount(a), popcount(b), popcount(a & b)});
    Int total = 0;
    for (const auto& [h, sigs] : heads) {
        const int hs = popcount(h);
        for (int r = 0; r + hs <= k && r <= n - w; ++r) {
            // A difference h + (r fresh pool elements) is realizable iff some
            // signature admits tails with overlap x = k - hs - r - m that fit:
            // the source tail holds the r fresh plus x shared elements, the
            // subtracted tail holds the x shared, and the union stays in the pool.
            const int i = k - hs - r;
            bool ok = false;
            for (const Sig& s : sigs) {
                const int x = i - s.m;
                if (x < 0)
                    continue;
                if (k - s.a < r + x)
                    continue;
                if (k - s.b < x)
                    continue;
                if ((k - s.a) + (k - s.b) - x > n - w)
                    continue;
                ok = true;
                break;
            }
            if (ok)
                total += exact_binom(n - w, r);
        }
    }
    return total;
}

Int junta_diff_count_level_formula(const Junta& J, int n, int k) {
    validate_junta(J);
    const JuntaLevels L = junta_levels(J);
    Int total = 0;
    for (int i = 1; i <= k; ++i) {
        const auto& Li = L.levels[static_cast<size_t>(std::min(i, J.w))];
        for (Mask h : Li) {
            const int r = k - i - popcount(h);
            if (r >= 0 && r <= n - J.w)
                total += exact_binom(n - J.w, r);
        }
    }
    return total;
}

Int a3_gap(int n, int k) {
    if (k < 2 || n <= 2 * k)
        throw std::invalid_argument("a3_gap: need n > 2k >= 4");
    return exact_binom(n - 4, k - 1) - exact_binom(n - 3, k - 2);
}

double a3_threshold(int k) {
    if (k < 2)
        throw std::invalid_argument("a3_threshold: need k >= 2");
    const double kk = k;
    return (3.0 * kk + 2.0 + std::sqrt(5.0 * kk * kk - 12.0 * kk + 8.0)) / 2.0;
}

int a3_threshold_side(long long n, long long k) {
    if (k < 2)
        throw std::invalid_argument("a3_threshold_side: need k >= 2");
    const __int128 disc = static_cast<__int128>(5) * k * k - 12 * k + 8;
    const __int128 lhs = static_cast<__int128>(2) * n - 3 * k - 2;
    if (lhs < 0)
        return -1;
    const __int128 d = lhs * lhs - disc;
    return d < 0 ? -1 : d > 0 ? 1 : 0;
}

GainLoss ak_gain_loss(int n, int k) {
    if (k < 2 || n <= 2 * k)
        throw std::invalid_argument("ak_gain_loss: need n > 2k >= 4");
    GainLoss gl;
    gl.gain = 0;
    for (int l = 0; l <= k - 2; ++l)
        gl.gain += exact_binom(n - k - 1, l);
    gl.loss = exact_binom(n - k - 1, k - 1);
    return gl;
}

double junta_weighted_objective(const Junta& J, double alpha) {
    validate_junta(J);
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("junta_weighted_objective: need 0 < alpha < 1");
    const JuntaLevels L = junta_levels(J);
    const double ratio = alpha / (1.0 - alpha);
    double total = 0.0;
    for (int s = 1; s <= J.w; ++s) {
        const auto& level = L.exact_levels[static_cast<size_t>(s) - 1];
        if (level.empty())
            continue;
        double mu = 0.0;
        for (Mask h : level)
            mu += std::pow(alpha, popcount(h)) *
                  std::pow(1.0 - alpha, J.w - popcount(h));
        total += std::pow(ratio, s - 1) * mu;
    }
    return total;
}

std::vector<ScanRow> scan_ap_counterexamples(const std::vector<int>& ks,
                                             const std::vector<double>& cs,
                                             const std::vector<int>& ps) {
    std::vector<ScanRow> rows;
    for (int k : ks)
        for (double c : cs)
            for (int p : ps) {
                const int n = static_cast<int>(std::llround(c * k));
                if (n <= 2 * k || p < 2 || p > std::min(k, 11))
                    continue;
                ScanRow row;
                row.p = p;
                row.c = c;
                row.n = n;
                row.k = k;
                row.junta_count = junta_diff_count(as_junta(p), n, k);
                row.star_rhs = 0;
                for (int l = 0; l < k; ++l)
                    row.star_rhs += exact_binom(n - 1, l);
                row.beats_star = row.junta_count > row.star_rhs;
                rows.push_back(std::move(row));
            }
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "p,c,n,k,junta_count,star_rhs,beats_star\n";
    char buf[32];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%g", r.c);
        out += std::to_string(r.p) + ',' + buf + ',' + std::to_string(r.n) +
               ',' + std::to_string(r.k) + ',' + dec(r.junta_count) + ',' +
               dec(r.star_rhs) + ',' + (r.beats_star ? "true" : "false") + '\n';
    }
    return out;
}

} // namespace dfam
