#include "dfam/diff.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace dfam {

namespace {

void pair_diffs_into(const std::vector<Mask>& ms, std::size_t row_begin, std::size_t row_end,
                     std::unordered_set<Mask>& out) {
    for (std::size_t i = row_begin; i < row_end; ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
            out.insert(ms[i] & ~ms[j]);
}

} // namespace

SetFamily difference_family(const SetFamily& F, int threads) {
    const auto& ms = F.masks();
    if (ms.empty()) return SetFamily::empty_family(F.n());
    std::vector<Mask> all;
    if (threads <= 1 || ms.size() < 256) {
        std::unordered_set<Mask> seen;
        seen.reserve(std::min<std::size_t>(ms.size() * 4, 1u << 22));
        pair_diffs_into(ms, 0, ms.size(), seen);
        all.assign(seen.begin(), seen.end());
    } else {
        std::size_t nt = static_cast<std::size_t>(threads);
        std::vector<std::unordered_set<Mask>> parts(nt);
        std::vector<std::thread> pool;
        std::size_t chunk = (ms.size() + nt - 1) / nt;
        for (std::size_t t = 0; t < nt; ++t) {
            std::size_t b = t * chunk, e = std::min(ms.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back([&, b, e, t] { pair_diffs_into(ms, b, e, parts[t]); });
        }
        for (auto& th : pool) th.join();
        std::size_t total = 0;
        for (auto& p : parts) total += p.size();
        all.reserve(total);
        for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    }
    return SetFamily::from_masks(F.n(), std::move(all)); // sorts + dedups across parts
}

SetFamily difference_slice(const SetFamily& F, int ell) {
    if (ell < 0 || ell > F.n()) throw std::invalid_argument("difference_slice: level out of range");
    SetFamily D = difference_family(F);
    std::vector<Mask> out;
    for (Mask m : D.masks())
        if (popcount(m) == ell) out.push_back(m);
    return SetFamily::from_masks(F.n(), std::move(out));
}

SetFamily symmetric_difference_family(const SetFamily& F) {
    const auto& ms = F.masks();
    if (ms.empty()) return SetFamily::empty_family(F.n());
    std::unordered_set<Mask> seen;
    seen.reserve(std::min<std::size_t>(ms.size() * 4, 1u << 22));
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i; j < ms.size(); ++j)
            seen.insert(ms[i] ^ ms[j]);
    return SetFamily::from_masks(F.n(), std::vector<Mask>(seen.begin(), seen.end()));
}

Int conjecture_rhs(int n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("conjecture_rhs: need n >= k >= 1");
    Int s = 0;
    for (int ell = 0; ell < k; ++ell) s += exact_binom(n - 1, ell);
    return s;
}

Int sd_rhs(int n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("sd_rhs: need n >= k >= 1");
    Int s = 0;
    for (int ell = 0; ell < k; ++ell) s += exact_binom(n - 1, 2 * ell);
    return s;
}

MsCheck marica_schonheim_check(const SetFamily& F) {
    SetFamily D = difference_family(F);
    return MsCheck{D.size() >= F.size(), D.size(), F.size()};
}

DiffReport make_diff_report(const SetFamily& F, int threads) {
    auto k = F.uniform_k();
    if (!k) throw std::invalid_argument("diff report: family must be k-uniform and non-empty");
    DiffReport r;
    r.n = F.n();
    r.k = *k;
    r.slice_counts.assign(static_cast<std::size_t>(*k) + 1, 0);
    SetFamily D = difference_family(F, threads);
    for (Mask m : D.masks()) ++r.slice_counts[static_cast<std::size_t>(popcount(m))];
    r.total = Int(D.size());
    r.rhs = conjecture_rhs(r.n, r.k);
    r.rhs_leq = r.rhs + exact_binom(r.n - 1, r.k);
    r.violated = r.total > r.rhs;
    return r;
}

DiffReport make_sd_report(const SetFamily& F) {
    auto k = F.uniform_k();
    if (!k) throw std::invalid_argument("sd report: family must be k-uniform and non-empty");
    DiffReport r;
    r.n = F.n();
    r.k = *k;
    // symmetric differences of k-sets have even size up to 2k; bucket by size
    r.slice_counts.assign(static_cast<std::size_t>(2 * *k) + 1, 0);
    SetFamily D = symmetric_difference_family(F);
    for (Mask m : D.masks()) ++r.slice_counts[static_cast<std::size_t>(popcount(m))];
    r.total = Int(D.size());
    r.rhs = sd_rhs(r.n, r.k);
    r.rhs_leq = r.rhs + exact_binom(r.n - 1, 2 * r.k);
    r.violated = r.total > r.rhs;
    return r;
}

nlohmann::json diff_report_json(const DiffReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["slices"] = r.slice_counts;
    j["total"] = dec(r.total);
    j["rhs"] = dec(r.rhs);
    j["rhs_leq"] = dec(r.rhs_leq);
    j["verdict"] = r.violated ? "violated" : "holds";
    return j;
}

SetFamily maximal_extension(const SetFamily& F) {
    int n = F.n();
    if (n > 24) throw std::invalid_argument("maximal_extension: n > 24 (output exponential)");
    if (!is_intersecting(F)) throw std::invalid_argument("maximal_extension: family not intersecting");
    const std::size_t N = std::size_t{1} << n;
    const Mask full = full_mask(n);
    std::vector<std::uint8_t> B(N, 0); // current members
    std::vector<std::uint8_t> U(N, 0); // marks supersets of members
    for (Mask m : F.masks()) B[m] = 1;
    // up-closure, one dimension at a time
    for (int d = 0; d < n; ++d) {
        Mask b = Mask{1} << d;
        for (std::size_t x = 0; x < N; ++x)
            if (B[x]) B[x | b] = 1;
    }
    U = B;
    auto mark_supersets = [&](Mask c) {
        Mask comp = full & ~c;
        Mask s = comp;
        for (;;) {
            U[c | s] = 1;
            if (s == 0) break;
            s = (s - 1) & comp;
        }
    };
    for (Mask r = 0; r < N; ++r) {
        Mask x = full & ~r;
        if (r >= x) break; // past the halfway point every pair is visited
        if (B[r] || B[x]) continue;
        bool qr = !U[x]; // r meets every member iff no member is inside ~r = x
        bool qx = !U[r];
        Mask chosen;
        if (qr && qx) {
            int pr = popcount(r), px = popcount(x);
            if (pr != px) chosen = pr > px ? r : x;
            else chosen = (r & 1) ? r : x; // tie: prefer the side containing element 1
        } else if (qr) {
            chosen = r;
        } else if (qx) {
            chosen = x;
        } else {
            // two members inside complementary sets would be disjoint
            throw std::logic_error("maximal_extension: invariant broken");
        }
        B[chosen] = 1;
        mark_supersets(chosen);
    }
    std::vector<Mask> out;
    out.reserve(N / 2);
    for (std::size_t m = 0; m < N; ++m)
        if (B[m]) out.push_back(static_cast<Mask>(m));
    return SetFamily::from_masks(n, std::move(out));
}

bool partition_check(const SetFamily& G) {
    int n = G.n();
    if (n > 16) throw std::invalid_argument("partition_check: n > 16 (quadratic pair loop infeasible)");
    if (!is_intersecting(G)) throw std::invalid_argument("partition_check: family not intersecting");
    if (G.size() != (std::size_t{1} << (n - 1)))
        throw std::invalid_argument("partition_check: family size is not 2^(n-1)");
    SetFamily D = difference_family(G);
    // disjoint and jointly exhaustive over 2^[n]
    if (G.size() + D.size() != (std::size_t{1} << n)) return false;
    for (Mask m : D.masks())
        if (G.contains(m)) return false;
    return true;
}

} // namespace dfam
