#pragma once
// Set families over a ground set [n], n <= 64.  A SetFamily stores its
// members as bitmasks in canonical (numeric) order, duplicate-free, and
// remembers whether it is k-uniform.  Everything downstream (difference
// families, shadows, juntas, search) builds on this type.

#include "dfam/bitset64.hpp"

#include <optional>
#include <vector>

namespace dfam {

class SetFamily {
public:
    SetFamily() = default;

    // Canonicalizes: validates members against [n], sorts, removes duplicates.
    static SetFamily from_masks(int n, std::vector<Mask> members);
    static SetFamily from_sets(int n, const std::vector<std::vector<int>>& sets);
    static SetFamily empty_family(int n) { return from_masks(n, {}); }

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Mask>& masks() const { return members_; }
    bool contains(Mask m) const;

    // k if every member has size k (unset for the empty family).
    std::optional<int> uniform_k() const { return uniform_k_; }

    std::vector<std::vector<int>> as_sets() const;

    bool operator==(const SetFamily& o) const { return n_ == o.n_ && members_ == o.members_; }

private:
    int n_ = 0;
    std::optional<int> uniform_k_;
    std::vector<Mask> members_;
};

// All k-subsets of [n] in canonical order.  Guarded against blow-up: throws
// if binom(n,k) exceeds `cap` (default 5e6).
std::vector<Mask> all_ksubsets(int n, int k, std::size_t cap = 5'000'000);
SetFamily complete_uniform_family(int n, int k);

// Every two members meet; the empty family is intersecting by convention.
bool is_intersecting(const SetFamily& F);

// Every member of F meets every member of G.  Ground sets must agree.
bool are_cross_intersecting(const SetFamily& F, const SetFamily& G);

// F(A,B) := { F \ A : F in family, F cap B = A }.  Requires A subseteq B.
SetFamily restrict(const SetFamily& F, Mask A, Mask B);
inline SetFamily restrict_full(const SetFamily& F, Mask B) { return restrict(F, B, B); }
inline SetFamily restrict_avoid(const SetFamily& F, Mask B) { return restrict(F, 0, B); }

// { [n] \ F : F in family }; an involution, maps k-uniform to (n-k)-uniform.
SetFamily complement_family(const SetFamily& F);

// gamma(F) = min over x of #{members avoiding x}; ties broken by smallest x.
// Zero exactly for stars.  Requires a non-empty family.
struct Diversity {
    long long value;
    int witness;
};
Diversity diversity(const SetFamily& F);

// Product-biased measure: sum over members of p^|F| (1-p)^(n-|F|).
double mu_p(const SetFamily& F, double p);

} // namespace dfam
