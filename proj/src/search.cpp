#include "dfam/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "dfam/constructions.hpp"
#include "dfam/diff.hpp"
#include "dfam/rng.hpp"
#include "dfam/shadow.hpp"

namespace dfam {

int IntersectionGraph::degree(int i) const {
    int d = 0;
    for (std::uint64_t w : adj[static_cast<size_t>(i)])
        d += std::popcount(w);
    return d;
}

IntersectionGraph intersection_graph(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("intersection_graph: need 1 <= k <= n");
    if (exact_binom(n, k) > 10'000)
        throw std::invalid_argument("intersection_graph: binom(n,k) exceeds 10^4");
    IntersectionGraph g;
    g.n = n;
    g.k = k;
    g.vertices = all_ksubsets(n, k);
    const int V = g.vertex_count();
    const size_t W = (static_cast<size_t>(V) + 63) / 64;
    g.adj.assign(static_cast<size_t>(V), std::vector<std::uint64_t>(W, 0));
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            if (g.vertices[static_cast<size_t>(i)] & g.vertices[static_cast<size_t>(j)]) {
                g.adj[static_cast<size_t>(i)][static_cast<size_t>(j) >> 6] |=
                    std::uint64_t{1} << (j & 63);
                g.adj[static_cast<size_t>(j)][static_cast<size_t>(i) >> 6] |=
                    std::uint64_t{1} << (i & 63);
            }
    return g;
}

namespace {

using Row = std::vector<std::uint64_t>;

int row_popcount(const Row& r) {
    int c = 0;
    for (std::uint64_t w : r)
        c += std::popcount(w);
    return c;
}

int row_and_popcount(const Row& a, const Row& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

bool row_empty(const Row& r) {
    for (std::uint64_t w : r)
        if (w)
            return false;
    return true;
}

struct BkCtx {
    const IntersectionGraph& g;
    long long cap;
    double budget_seconds;
    std::chrono::steady_clock::time_point start;
    const std::function<void(const std::vector<int>&)>& emit;
    long long emitted = 0;
    bool exhausted = false;
    long long nodes = 0;

    bool out_of_time() {
        if (budget_seconds <= 0.0)
            return false;
        if ((++nodes & 1023) != 0)
            return false;
        const std::chrono::duration<double> el =
            std::chrono::steady_clock::now() - start;
        return el.count() > budget_seconds;
    }
};

void bk_recurse(BkCtx& ctx, std::vector<int>& R, const Row& P, const Row& X) {
    if (ctx.exhausted)
        return;
    if (ctx.out_of_time()) {
        ctx.exhausted = true;
        return;
    }
    if (row_empty(P) && row_empty(X)) {
        if (ctx.emitted == ctx.cap) {
            ctx.exhausted = true;
            return;
        }
        std::vector<int> clique = R;
        std::sort(clique.begin(), clique.end());
        ctx.emit(clique);
        ++ctx.emitted;
        return;
    }
    // Tomita pivot: a vertex of P|X maximizing |P & N(u)|, smallest index on
    // ties; only candidates outside N(pivot) branch.
    int pivot = -1, best = -1;
    for (size_t w = 0; w < P.size(); ++w) {
        std::uint64_t both = P[w] | X[w];
        while (both) {
            const int u = static_cast<int>(w * 64) + std::countr_zero(both);
            both &= both - 1;
            const int score = row_and_popcount(P, ctx.g.adj[static_cast<size_t>(u)]);
            if (score > best) {
                best = score;
                pivot = u;
            }
        }
    }
    Row curP = P, curX = X;
    for (size_t w = 0; w < P.size(); ++w) {
        std::uint64_t cand =
            P[w] & ~ctx.g.adj[static_cast<size_t>(pivot)][w];
        while (cand) {
            const int v = static_cast<int>(w * 64) + std::countr_zero(cand);
            cand &= cand - 1;
            const Row& Nv = ctx.g.adj[static_cast<size_t>(v)];
            Row nextP(P.size()), nextX(P.size());
            for (size_t i = 0; i < P.size(); ++i) {
                nextP[i] = curP[i] & Nv[i];
                nextX[i] = curX[i] & Nv[i];
            }
            R.push_back(v);
            bk_recurse(ctx, R, nextP, nextX);
            R.pop_back();
            if (ctx.exhausted)
                return;
            curP[w] &= ~(std::uint64_t{1} << (v & 63));
            curX[w] |= std::uint64_t{1} << (v & 63);
        }
    }
}

// Exact |D| or |SD| of a small family, with a generation-stamped scratch
// array so repeated scoring avoids clearing 2^n cells each time.
class DiffCounter {
  public:
    explicit DiffCounter(int n) : shift_ok_(n <= 22) {
        if (shift_ok_)
            stamp_.assign(std::size_t{1} << n, 0);
    }

    long long count(const std::vector<Mask>& F, bool symmetric) {
        if (!shift_ok_)
            return count_hashed(F, symmetric);
        ++gen_;
        long long c = 0;
        const size_t sz = F.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = symmetric ? i : 0; j < sz; ++j) {
                const Mask d = symmetric ? (F[i] ^ F[j]) : (F[i] & ~F[j]);
                if (stamp_[d] != gen_) {
                    stamp_[d] = gen_;
                    ++c;
                }
            }
        return c;
    }

  private:
    long long count_hashed(const std::vector<Mask>& F, bool symmetric) {
        std::unordered_set<Mask> seen;
        seen.reserve(F.size() * F.size());
        for (size_t i = 0; i < F.size(); ++i)
            for (size_t j = symmetric ? i : 0; j < F.size(); ++j)
                seen.insert(symmetric ? (F[i] ^ F[j]) : (F[i] & ~F[j]));
        return static_cast<long long>(seen.size());
    }

    bool shift_ok_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t gen_ = 0;
};

bool family_lex_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct BestFamily {
    long long count = -1;
    std::vector<Mask> members;

    void offer(long long c, const std::vector<Mask>& fam) {
        if (c > count || (c == count && (members.empty() || family_lex_less(fam, members)))) {
            count = c;
            members = fam;
        }
    }

    void merge(const BestFamily& other) {
        if (other.count >= 0)
            offer(other.count, other.members);
    }
};

struct Prop5Audit {
    long long checked = 0;
    bool ok = true;

    void offer(int n, int k, long long fam_size, const Int& count,
               const Int& rhs) {
        if (count <= rhs || n < 3 * k)
            return;
        ++checked;
        if (Int(fam_size) * (2 * k) <= exact_binom(n - 1, k - 1))
            ok = false;
    }

    void merge(const Prop5Audit& other) {
        checked += other.checked;
        ok = ok && other.ok;
    }
};

// Greedy maximal intersecting family from a shuffled vertex order.
std::vector<int> greedy_random_maximal(const IntersectionGraph& g, Rng& rng) {
    const int V = g.vertex_count();
    std::vector<int> order(static_cast<size_t>(V));
    for (int i = 0; i < V; ++i)
        order[static_cast<size_t>(i)] = i;
    rng.shuffle(order);
    std::vector<int> fam;
    for (int v : order) {
        bool ok = true;
        for (int f : fam)
            if (!g.adjacent(v, f)) {
                ok = false;
                break;
            }
        if (ok)
            fam.push_back(v);
    }
    std::sort(fam.begin(), fam.end());
    return fam;
}

std::vector<Mask> to_masks(const IntersectionGraph& g,
                           const std::vector<int>& idx) {
    std::vector<Mask> out;
    out.reserve(idx.size());
    for (int v : idx)
        out.push_back(g.vertices[static_cast<size_t>(v)]);
    return out;
}

Int recount_via_engine(const SetFamily& F, Objective obj) {
    return obj == Objective::diff ? Int(difference_family(F).size())
                                  : Int(symmetric_difference_family(F).size());
}

VerifyReport verify_impl(int n, int k, VerifyMode mode, long long budget,
                         std::uint64_t seed, double budget_seconds,
                         int threads, Objective obj) {
    if (k < 1 || k > n)
        throw std::invalid_argument("verify: need 1 <= k <= n");
    VerifyReport rep;
    rep.n = n;
    rep.k = k;
    rep.mode = verify_mode_name(mode);
    rep.rhs = obj == Objective::diff ? conjecture_rhs(n, k) : sd_rhs(n, k);
    const bool symmetric = obj == Objective::sd;
    BestFamily best;
    Prop5Audit audit;
    bool exhausted = false;

    switch (mode) {
    case VerifyMode::exhaustive_maximal: {
        const IntersectionGraph g = intersection_graph(n, k);
        DiffCounter counter(n);
        long long checked = 0;
        std::vector<Mask> buf;
        auto score = [&](const std::vector<int>& idx) {
            buf.clear();
            for (int v : idx)
                buf.push_back(g.vertices[static_cast<size_t>(v)]);
            const long long c = counter.count(buf, symmetric);
            ++checked;
            best.offer(c, buf);
            audit.offer(n, k, static_cast<long long>(buf.size()), c, rep.rhs);
        };
        EnumStats st = enumerate_maximal_intersecting(
            g, budget > 0 ? budget : 10'000'000, budget_seconds, score);
        rep.families_checked = checked;
        exhausted = st.exhausted;
        break;
    }
    case VerifyMode::random: {
        const IntersectionGraph g = intersection_graph(n, k);
        const long long samples = budget > 0 ? budget : 1000;
        const int nw = std::max(1, std::min<int>(threads, 64));
        std::vector<BestFamily> bests(static_cast<size_t>(nw));
        std::vector<Prop5Audit> audits(static_cast<size_t>(nw));
        Rng base(seed);
        auto work = [&](int w) {
            DiffCounter counter(n);
            for (long long s = w; s < samples; s += nw) {
                Rng rng = base.derive(static_cast<std::uint64_t>(s));
                const auto fam = to_masks(g, greedy_random_maximal(g, rng));
                const long long c = counter.count(fam, symmetric);
                bests[static_cast<size_t>(w)].offer(c, fam);
                audits[static_cast<size_t>(w)].offer(
                    n, k, static_cast<long long>(fam.size()), c, rep.rhs);
            }
        };
        if (nw == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < nw; ++w)
                pool.emplace_back(work, w);
            for (auto& th : pool)
                th.join();
        }
        for (int w = 0; w < nw; ++w) {
            best.merge(bests[static_cast<size_t>(w)]);
            audit.merge(audits[static_cast<size_t>(w)]);
        }
        rep.families_checked = samples;
        break;
    }
    case VerifyMode::junta_scan: {
        if (obj == Objective::sd)
            throw std::invalid_argument(
                "verify: junta-scan covers the difference objective only");
        if (n <= 2 * k) {
            rep.verdict = "budget-exhausted";
            rep.note = "junta-scan needs n > 2k; nothing scanned";
            rep.max_count = 0;
            return rep;
        }
        int best_p = -1;
        Int best_count = -1;
        for (int p = 2; p <= std::min(k, 11); ++p) {
            const Int c = junta_diff_count(as_junta(p), n, k);
            ++rep.families_checked;
            if (c > best_count) {
                best_count = c;
                best_p = p;
            }
        }
        if (best_p < 0) {
            rep.verdict = "budget-exhausted";
            rep.note = "junta-scan needs k >= 2; nothing scanned";
            rep.max_count = 0;
            return rep;
        }
        rep.max_count = best_count;
        const Junta J = as_junta(best_p);
        if (junta_family_size(J, n, k) <= 20'000) {
            const SetFamily F = junta_family(J, n, k);
            const Int recount = recount_via_engine(F, obj);
            if (recount != best_count)
                throw std::logic_error("verify: junta count mismatch against the engine");
            rep.worst_family = F;
            audit.offer(n, k, static_cast<long long>(F.size()), recount,
                        rep.rhs);
            rep.verdict = best_count > rep.rhs ? "counterexample-found"
                                               : "budget-exhausted";
            if (rep.verdict == "budget-exhausted")
                rep.note = "no junta in the scan beats the bound; non-decisive";
        } else if (best_count > rep.rhs) {
            rep.verdict = "budget-exhausted";
            rep.note = "a junta beats the bound but is too large to certify by expansion";
        } else {
            rep.verdict = "budget-exhausted";
            rep.note = "no junta in the scan beats the bound; non-decisive";
        }
        rep.max_ratio = as_double(rep.max_count) / as_double(rep.rhs);
        rep.prop5_checked = audit.checked;
        rep.prop5_ok = audit.ok;
        return rep;
    }
    case VerifyMode::hill_climb: {
        HillClimbResult hc = hill_climb(n, k, obj, budget > 0 ? budget : 1000,
                                        seed, 8, threads);
        rep.families_checked = hc.iterations;
        best.offer(hc.score.convert_to<long long>(), hc.best.masks());
        audit.offer(n, k, static_cast<long long>(hc.best.size()),
                    hc.score.convert_to<long long>(), rep.rhs);
        break;
    }
    }

    if (best.count >= 0) {
        SetFamily F = SetFamily::from_masks(n, best.members);
        // The searched score is re-verified through the counting engine
        // before it can drive any verdict.
        const Int recount = recount_via_engine(F, obj);
        if (recount != best.count)
            throw std::logic_error("verify: search count mismatch against the engine");
        rep.max_count = recount;
        rep.worst_family = std::move(F);
    } else {
        rep.max_count = 0;
    }
    rep.max_ratio = as_double(rep.max_count) / as_double(rep.rhs);
    rep.prop5_checked = audit.checked;
    rep.prop5_ok = audit.ok;
    const bool beaten = rep.max_count > rep.rhs;
    if (beaten)
        rep.verdict = "counterexample-found";
    else if (mode == VerifyMode::exhaustive_maximal && !exhausted)
        rep.verdict = "conjecture-holds";
    else
        rep.verdict = "budget-exhausted";
    if (mode == VerifyMode::exhaustive_maximal && exhausted && !beaten)
        rep.note = "enumeration stopped at the family cap or time budget";
    return rep;
}

} // namespace

EnumStats enumerate_maximal_intersecting(
    const IntersectionGraph& g, long long cap, double budget_seconds,
    const std::function<void(const std::vector<int>&)>& emit) {
    if (cap < 0)
        throw std::invalid_argument("enumerate_maximal_intersecting: need cap >= 0");
    const int V = g.vertex_count();
    const size_t W = (static_cast<size_t>(V) + 63) / 64;
    BkCtx ctx{g, cap, budget_seconds, std::chrono::steady_clock::now(), emit};
    Row P(W, 0), X(W, 0);
    for (int v = 0; v < V; ++v)
        P[static_cast<size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> R;
    if (V > 0)
        bk_recurse(ctx, R, P, X);
    return {ctx.emitted, ctx.exhausted};
}

std::vector<SetFamily> all_maximal_intersecting(int n, int k, long long cap) {
    const IntersectionGraph g = intersection_graph(n, k);
    std::vector<SetFamily> out;
    EnumStats st = enumerate_maximal_intersecting(
        g, cap, 0.0, [&](const std::vector<int>& idx) {
            out.push_back(SetFamily::from_masks(n, to_masks(g, idx)));
        });
    if (st.exhausted)
        throw std::runtime_error("all_maximal_intersecting: cap exhausted");
    return out;
}

std::string verify_mode_name(VerifyMode m) {
    switch (m) {
    case VerifyMode::exhaustive_maximal:
        return "exhaustive-maximal";
    case VerifyMode::random:
        return "random";
    case VerifyMode::junta_scan:
        return "junta-scan";
    case VerifyMode::hill_climb:
        return "hill-climb";
    }
    return "?";
}

nlohmann::json verify_report_json(const VerifyReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["mode"] = r.mode;
    j["families_checked"] = r.families_checked;
    j["max_count"] = dec(r.max_count);
    j["rhs"] = dec(r.rhs);
    j["max_ratio"] = r.max_ratio;
    if (r.worst_family) {
        nlohmann::json fam = nlohmann::json::array();
        for (Mask m : r.worst_family->masks())
            fam.push_back(format_set(m));
        j["worst_family"] = fam;
    } else {
        j["worst_family"] = nullptr;
    }
    j["verdict"] = r.verdict;
    j["sd_in_regime"] = r.sd_in_regime;
    if (!r.note.empty())
        j["note"] = r.note;
    j["prop5_checked"] = r.prop5_checked;
    j["prop5_ok"] = r.prop5_ok;
    return j;
}

VerifyReport verify_conjecture(int n, int k, VerifyMode mode, long long budget,
                               std::uint64_t seed, double budget_seconds,
                               int threads) {
    return verify_impl(n, k, mode, budget, seed, budget_seconds, threads,
                       Objective::diff);
}

VerifyReport verify_sd_conjecture(int n, int k, VerifyMode mode,
                                  long long budget, std::uint64_t seed,
                                  double budget_seconds, int threads) {
    VerifyReport rep = verify_impl(n, k, mode, budget, seed, budget_seconds,
                                   threads, Objective::sd);
    rep.sd_in_regime = n > 10 * k;
    if (!rep.sd_in_regime) {
        if (!rep.note.empty())
            rep.note += "; ";
        rep.note += "n <= 10k: outside the conjectured regime, verdict is descriptive";
    }
    return rep;
}

HillClimbResult hill_climb(int n, int k, Objective obj, long long iters,
                           std::uint64_t seed, int restarts, int threads) {
    if (restarts < 1 || iters < 0)
        throw std::invalid_argument("hill_climb: need restarts >= 1, iters >= 0");
    if (n > 22)
        throw std::invalid_argument("hill_climb: need n <= 22");
    const IntersectionGraph g = intersection_graph(n, k);
    const int V = g.vertex_count();
    const size_t W = (static_cast<size_t>(V) + 63) / 64;
    const bool symmetric = obj == Objective::sd;
    Rng base(seed);

    struct RestartOutcome {
        long long score = -1;
        std::vector<Mask> fam;
        long long evals = 0;
    };
    std::vector<RestartOutcome> outcomes(static_cast<size_t>(restarts));

    auto run_restart = [&](int r) {
        Rng rng = base.derive(static_cast<std::uint64_t>(r));
        DiffCounter counter(n);
        RestartOutcome& out = outcomes[static_cast<size_t>(r)];
        std::vector<int> fam = greedy_random_maximal(g, rng);
        auto score_of = [&](const std::vector<int>& idx) {
            ++out.evals;
            std::vector<Mask> ms = to_masks(g, idx);
            return counter.count(ms, symmetric);
        };
        long long cur = score_of(fam);
        // Compatible non-members of `idx`, as a vertex bitset.
        auto candidates = [&](const std::vector<int>& idx) {
            Row cand(W, ~std::uint64_t{0});
            if (W > 0 && (V & 63) != 0)
                cand[W - 1] = (std::uint64_t{1} << (V & 63)) - 1;
            for (int f : idx)
                for (size_t w = 0; w < W; ++w)
                    cand[w] &= g.adj[static_cast<size_t>(f)][w];
            for (int f : idx)
                cand[static_cast<size_t>(f) >> 6] &=
                    ~(std::uint64_t{1} << (f & 63));
            return cand;
        };
        auto pick = [&](const Row& cand) -> int {
            const int c = row_popcount(cand);
            if (c == 0)
                return -1;
            int target = static_cast<int>(rng.below(static_cast<std::uint64_t>(c)));
            for (size_t w = 0; w < W; ++w) {
                std::uint64_t bits = cand[w];
                while (bits) {
                    if (target == 0)
                        return static_cast<int>(w * 64) + std::countr_zero(bits);
                    bits &= bits - 1;
                    --target;
                }
            }
            return -1;
        };
        for (long long it = 0; it < iters; ++it) {
            std::vector<int> next = fam;
            const int mv = static_cast<int>(rng.below(3));
            if (mv == 0) { // add
                const int v = pick(candidates(next));
                if (v < 0)
                    continue;
                next.insert(std::lower_bound(next.begin(), next.end(), v), v);
            } else if (mv == 1) { // remove
                if (next.size() <= 1)
                    continue;
                next.erase(next.begin() +
                           static_cast<long>(rng.below(next.size())));
            } else { // swap
                if (next.empty())
                    continue;
                next.erase(next.begin() +
                           static_cast<long>(rng.below(next.size())));
                const int v = pick(candidates(next));
                if (v < 0)
                    continue;
                next.insert(std::lower_bound(next.begin(), next.end(), v), v);
            }
            const long long sc = score_of(next);
            if (sc >= cur) {
                fam = std::move(next);
                cur = sc;
            }
        }
        out.score = cur;
        out.fam = to_masks(g, fam);
    };

    const int nw = std::max(1, std::min(threads, restarts));
    if (nw == 1) {
        for (int r = 0; r < restarts; ++r)
            run_restart(r);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next_r{0};
        for (int w = 0; w < nw; ++w)
            pool.emplace_back([&] {
                for (int r = next_r++; r < restarts; r = next_r++)
                    run_restart(r);
            });
        for (auto& th : pool)
            th.join();
    }

    int best_r = 0;
    for (int r = 1; r < restarts; ++r)
        if (outcomes[static_cast<size_t>(r)].score >
            outcomes[static_cast<size_t>(best_r)].score)
            best_r = r;
    HillClimbResult res;
    res.best = SetFamily::from_masks(n, outcomes[static_cast<size_t>(best_r)].fam);
    res.score = recount_via_engine(res.best, obj);
    if (res.score != outcomes[static_cast<size_t>(best_r)].score)
        throw std::logic_error("hill_climb: score mismatch against the engine");
    res.restarts = restarts;
    for (const auto& o : outcomes)
        res.iterations += o.evals;
    return res;
}

bool certify_counterexample(const SetFamily& F, Objective kind) {
    if (F.size() == 0)
        return false;
    if (!F.uniform_k())
        throw std::invalid_argument("certify_counterexample: family must be uniform");
    if (!is_intersecting(F))
        return false;
    const int n = F.n(), k = *F.uniform_k();
    const Int count = recount_via_engine(F, kind);
    const Int rhs = kind == Objective::diff ? conjecture_rhs(n, k) : sd_rhs(n, k);
    return count > rhs;
}

nlohmann::json lemma_report_json(const LemmaReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["C"] = r.C;
    j["t"] = r.t;
    j["a"] = r.a;
    j["epsilon"] = r.epsilon;
    j["epsilon_ok"] = r.epsilon_ok;
    j["identity_value"] = r.identity_value;
    j["identity_ok"] = r.identity_ok;
    j["log_diversity_bound"] = r.log_diversity_bound;
    j["diversity_bound"] = r.diversity_bound;
    return j;
}

LemmaReport lemma_parameter_check(long long n, long long k) {
    if (k < 50)
        throw std::invalid_argument("lemma_parameter_check: need k >= 50");
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    if (nd + 1e-9 < 50.0 * kd * std::log(kd))
        throw std::invalid_argument("lemma_parameter_check: need n >= 50 k ln k");
    LemmaReport r;
    r.n = n;
    r.k = k;
    r.C = nd / kd;
    r.t = static_cast<long long>(std::floor(r.C - 1.0));
    r.a = std::sqrt(2.0 * std::log(8.0 * nd));
    r.epsilon = (2.0 * r.a + std::sqrt(8.0 * std::log(2.0))) /
                std::sqrt(static_cast<double>(r.t));
    r.epsilon_ok = r.epsilon < 0.88;
    r.identity_value = 2.0 * std::exp(-r.a * r.a / 2.0) * 4.0 * nd;
    r.identity_ok = std::fabs(r.identity_value - 1.0) <= 1e-12;
    const double x = nd - std::log(kd);
    const long long b = n - k - 1;
    double log_bound = -std::lgamma(static_cast<double>(b) + 1.0);
    for (long long i = 0; i < b; ++i)
        log_bound += std::log(x - static_cast<double>(i));
    r.log_diversity_bound = log_bound;
    r.diversity_bound = real_binomial(x, static_cast<int>(b));
    return r;
}

} // namespace dfam
