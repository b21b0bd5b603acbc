#include "dfam/family.hpp"

#include "dfam/bignum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfam {

SetFamily SetFamily::from_masks(int n, std::vector<Mask> members) {
    if (n < 1 || n > MAX_GROUND) throw std::invalid_argument("ground set size out of range");
    Mask full = full_mask(n);
    for (Mask m : members)
        if (m & ~full) throw std::invalid_argument("member contains element outside ground set");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    SetFamily F;
    F.n_ = n;
    F.members_ = std::move(members);
    if (!F.members_.empty()) {
        int k = popcount(F.members_.front());
        bool uniform = true;
        for (Mask m : F.members_)
            if (popcount(m) != k) { uniform = false; break; }
        if (uniform) F.uniform_k_ = k;
    }
    return F;
}

SetFamily SetFamily::from_sets(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<Mask> ms;
    ms.reserve(sets.size());
    for (const auto& s : sets) ms.push_back(mask_of(s));
    return from_masks(n, std::move(ms));
}

bool SetFamily::contains(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

std::vector<std::vector<int>> SetFamily::as_sets() const {
    std::vector<std::vector<int>> out;
    out.reserve(members_.size());
    for (Mask m : members_) out.push_back(elements_of(m));
    return out;
}

std::vector<Mask> all_ksubsets(int n, int k, std::size_t cap) {
    if (n < 0 || n > MAX_GROUND || k < 0 || k > n)
        throw std::invalid_argument("all_ksubsets: bad (n,k)");
    Int total = exact_binom(n, k);
    if (total > Int(cap)) throw std::runtime_error("all_ksubsets: binom(n,k) exceeds cap");
    std::size_t count = total.convert_to<std::size_t>();
    std::vector<Mask> out;
    out.reserve(count);
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    Mask m = full_mask(k);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(m);
        m = next_ksubset(m); // past-the-end value unused
    }
    return out;
}

SetFamily complete_uniform_family(int n, int k) {
    return SetFamily::from_masks(n, all_ksubsets(n, k));
}

bool is_intersecting(const SetFamily& F) {
    const auto& ms = F.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] == 0) return false; // empty member meets nothing, itself included
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if ((ms[i] & ms[j]) == 0) return false;
    }
    return true;
}

bool are_cross_intersecting(const SetFamily& F, const SetFamily& G) {
    if (F.n() != G.n()) throw std::invalid_argument("cross-intersecting: ground sets differ");
    for (Mask f : F.masks())
        for (Mask g : G.masks())
            if ((f & g) == 0) return false;
    return true;
}

SetFamily restrict(const SetFamily& F, Mask A, Mask B) {
    if (A & ~B) throw std::invalid_argument("restrict: A not contained in B");
    std::vector<Mask> out;
    for (Mask m : F.masks())
        if ((m & B) == A) out.push_back(m & ~A);
    return SetFamily::from_masks(F.n(), std::move(out));
}

SetFamily complement_family(const SetFamily& F) {
    Mask full = full_mask(F.n());
    std::vector<Mask> out;
    out.reserve(F.size());
    for (Mask m : F.masks()) out.push_back(full & ~m);
    return SetFamily::from_masks(F.n(), std::move(out));
}

Diversity diversity(const SetFamily& F) {
    if (F.empty()) throw std::invalid_argument("diversity: empty family");
    Diversity best{-1, 0};
    for (int x = 1; x <= F.n(); ++x) {
        Mask b = bit_of(x);
        long long avoid = 0;
        for (Mask m : F.masks())
            if (!(m & b)) ++avoid;
        if (best.witness == 0 || avoid < best.value) best = {avoid, x};
    }
    return best;
}

double mu_p(const SetFamily& F, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("mu_p: p must lie in (0,1)");
    double total = 0.0;
    for (Mask m : F.masks()) {
        int s = popcount(m);
        total += std::pow(p, s) * std::pow(1.0 - p, F.n() - s);
    }
    return total;
}

} // namespace dfam
