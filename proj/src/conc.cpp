#include "dfam/conc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dfam/bignum.hpp"
#include "dfam/constructions.hpp"
#include "dfam/family_io.hpp"

namespace dfam {

nlohmann::json conc_report_json(const ConcReport& r) {
    nlohmann::json j;
    j["mode"] = r.mode;
    if (r.mode == "matching")
        j["delta"] = r.delta;
    else
        j["tail"] = r.tail;
    if (!r.note.empty())
        j["note"] = r.note;
    j["alpha"] = r.alpha;
    if (std::isnan(r.epsilon))
        j["epsilon"] = nullptr;
    else
        j["epsilon"] = r.epsilon;
    j["threshold"] = r.threshold;
    j["empirical_tail"] = r.empirical_tail;
    j["theoretical_bound"] = r.theoretical_bound;
    j["sample_mean"] = r.sample_mean;
    j["ci_halfwidth"] = r.ci_halfwidth;
    j["verdict"] = r.verdict;
    return j;
}

std::vector<Mask> sample_t_matching(int m, int l, int t, Rng& rng) {
    if (l < 1 || t < 1 || m < t * l)
        throw std::invalid_argument("sample_t_matching: need m >= t*l, l, t >= 1");
    // Partial Fisher-Yates: only the first t*l slots of the shuffle are used.
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    const int used = t * l;
    for (int i = 0; i < used; ++i) {
        const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    std::vector<Mask> blocks(static_cast<size_t>(t));
    for (int b = 0; b < t; ++b) {
        Mask mk = 0;
        for (int i = 0; i < l; ++i)
            mk |= bit_of(perm[static_cast<size_t>(b * l + i)]);
        blocks[static_cast<size_t>(b)] = mk;
    }
    return blocks;
}

namespace {

void check_matching_regime(const SetFamily& G, int t) {
    const int m = G.n();
    if (G.size() > 0 && !G.uniform_k())
        throw std::invalid_argument("concentration: G must be uniform");
    const int l = G.size() > 0 ? *G.uniform_k() : 1;
    if (t < 1 || m < t * l)
        throw std::invalid_argument("concentration: need m >= t*l");
}

int family_l(const SetFamily& G) { return G.size() > 0 ? *G.uniform_k() : 1; }

// Accumulated per-worker tallies, merged associatively.
struct Tally {
    long long upper = 0;  // samples in the +1 / upper event
    long long lower = 0;  // samples in the -1 / lower event
    long double sum = 0;  // of the raw statistic
    std::vector<long long> histogram;
};

template <typename SampleFn>
Tally run_samples(long long samples, std::uint64_t seed, int threads,
                  int hist_size, SampleFn fn) {
    if (samples < 1)
        throw std::invalid_argument("concentration: need samples >= 1");
    threads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, samples)));
    std::vector<Tally> parts(static_cast<size_t>(threads));
    auto work = [&](int w) {
        Tally& tl = parts[static_cast<size_t>(w)];
        tl.histogram.assign(static_cast<size_t>(hist_size), 0);
        // Stream w draws from seed XOR w; worker 0 is the single-stream run.
        Rng rng(seed ^ static_cast<std::uint64_t>(w));
        const long long base = samples / threads, extra = samples % threads;
        const long long mine = base + (w < extra ? 1 : 0);
        for (long long s = 0; s < mine; ++s)
            fn(rng, tl);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
        for (auto& th : pool)
            th.join();
    }
    Tally total;
    total.histogram.assign(static_cast<size_t>(hist_size), 0);
    for (const Tally& p : parts) {
        total.upper += p.upper;
        total.lower += p.lower;
        total.sum += p.sum;
        for (size_t i = 0; i < p.histogram.size(); ++i)
            total.histogram[i] += p.histogram[i];
    }
    return total;
}

double tail_ci(double p, long long n) {
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

std::string verdict_of(double tail, double ci, double bound) {
    return tail - 3.0 * ci > bound ? "violated" : "consistent";
}

} // namespace

EtaStats eta_statistics(const SetFamily& G, int t, long long samples,
                        std::uint64_t seed) {
    check_matching_regime(G, t);
    const int m = G.n(), l = family_l(G);
    Tally tl = run_samples(samples, seed, 1, t + 1,
                           [&](Rng& rng, Tally& acc) {
                               int eta = 0;
                               for (Mask b : sample_t_matching(m, l, t, rng))
                                   eta += G.contains(b) ? 1 : 0;
                               acc.sum += eta;
                               ++acc.histogram[static_cast<size_t>(eta)];
                           });
    EtaStats st;
    st.histogram = tl.histogram;
    st.mean = static_cast<double>(tl.sum / samples);
    long double var = 0;
    for (int eta = 0; eta <= t; ++eta) {
        const long double d = eta - st.mean;
        var += d * d * tl.histogram[static_cast<size_t>(eta)];
    }
    st.variance = samples > 1 ? static_cast<double>(var / (samples - 1)) : 0.0;
    return st;
}

std::pair<ConcReport, ConcReport> verify_matching_conc(const SetFamily& G,
                                                       int t, double a,
                                                       long long samples,
                                                       std::uint64_t seed,
                                                       int threads) {
    check_matching_regime(G, t);
    if (!(a > 0.0))
        throw std::invalid_argument("concentration: need a > 0");
    const int m = G.n(), l = family_l(G);
    const double alpha =
        as_double(Int(G.size())) / as_double(exact_binom(m, l));
    const double expect = alpha * t;
    const double threshold = 2.0 * a * std::sqrt(static_cast<double>(t));
    Tally tl = run_samples(samples, seed, threads, t + 1,
                           [&](Rng& rng, Tally& acc) {
                               int eta = 0;
                               for (Mask b : sample_t_matching(m, l, t, rng))
                                   eta += G.contains(b) ? 1 : 0;
                               acc.sum += eta;
                               const double dev = eta - expect;
                               if (dev >= threshold)
                                   ++acc.upper;
                               if (-dev >= threshold)
                                   ++acc.lower;
                           });
    const double bound = std::exp(-a * a / 2.0);
    const double mean = static_cast<double>(tl.sum / samples);
    auto report = [&](int delta, long long count) {
        ConcReport r;
        r.mode = "matching";
        r.delta = delta;
        r.alpha = alpha;
        r.epsilon = std::nan("");
        r.threshold = threshold;
        r.empirical_tail = static_cast<double>(count) / static_cast<double>(samples);
        r.theoretical_bound = bound;
        r.sample_mean = mean;
        r.ci_halfwidth = tail_ci(r.empirical_tail, samples);
        r.verdict = verdict_of(r.empirical_tail, r.ci_halfwidth, bound);
        return r;
    };
    return {report(+1, tl.upper), report(-1, tl.lower)};
}

ConcReport verify_complement_conc(const SetFamily& G, int lprime, int t,
                                  double a, long long samples,
                                  std::uint64_t seed, Tail tail, int threads) {
    const int m = G.n(), l = family_l(G);
    if (G.size() > 0 && !G.uniform_k())
        throw std::invalid_argument("concentration: G must be uniform");
    if (lprime < 1 || t < 1 || m < t * l + lprime)
        throw std::invalid_argument("concentration: need m >= t*l + lprime");
    if (!(a > 0.0))
        throw std::invalid_argument("concentration: need a > 0");
    const double alpha =
        as_double(Int(G.size())) / as_double(exact_binom(m, l));
    const double eps =
        (2.0 * a + std::sqrt(8.0 * std::log(2.0))) / std::sqrt(static_cast<double>(t));
    const double denom = as_double(exact_binom(m - lprime, l));
    const bool lower = tail == Tail::lower;
    const double threshold = (lower ? alpha - eps : alpha + eps) * denom;
    const auto& members = G.masks();
    Tally tl = run_samples(
        samples, seed, threads, 1, [&](Rng& rng, Tally& acc) {
            // Uniform lprime-subset H of [m]: first slots of a partial shuffle.
            std::vector<int> perm(static_cast<size_t>(m));
            std::iota(perm.begin(), perm.end(), 1);
            Mask H = 0;
            for (int i = 0; i < lprime; ++i) {
                const auto j =
                    i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
                std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
                H |= bit_of(perm[static_cast<size_t>(i)]);
            }
            long long inside = 0;
            for (Mask g : members)
                inside += (g & H) == 0 ? 1 : 0;
            acc.sum += inside;
            if (lower ? inside < threshold : inside > threshold)
                ++acc.lower;
        });
    ConcReport r;
    r.mode = "complement";
    r.tail = lower ? "lower" : "upper";
    if (!lower)
        r.note = "upper tail asserted in prose only; checked against the same bound";
    r.alpha = alpha;
    r.epsilon = eps;
    r.threshold = threshold;
    r.empirical_tail = static_cast<double>(tl.lower) / static_cast<double>(samples);
    r.theoretical_bound = 2.0 * std::exp(-a * a / 2.0);
    r.sample_mean = static_cast<double>(tl.sum / samples);
    r.ci_halfwidth = tail_ci(r.empirical_tail, samples);
    r.verdict = verdict_of(r.empirical_tail, r.ci_halfwidth, r.theoretical_bound);
    return r;
}

double chi_square_pvalue(double chi2, int df) {
    if (df < 1 || chi2 < 0.0)
        throw std::invalid_argument("chi_square_pvalue: need df >= 1, chi2 >= 0");
    if (chi2 == 0.0)
        return 1.0;
    // Regularized upper incomplete gamma Q(df/2, chi2/2): series for the lower
    // function when x < a+1, Lentz continued fraction otherwise.
    const double A = df / 2.0, x = chi2 / 2.0;
    const double norm = std::exp(-x + A * std::log(x) - std::lgamma(A));
    if (x < A + 1.0) {
        double ap = A, sum = 1.0 / A, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15)
                break;
        }
        return 1.0 - sum * norm;
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - A, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - A);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15)
            break;
    }
    return norm * h;
}

SetFamily grid_family(const std::string& spec, int m, int l,
                      std::uint64_t seed) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg =
        colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "all")
        return complete_uniform_family(m, l);
    if (head == "star")
        return full_star(m, l, std::stoi(arg));
    if (head == "clique") {
        const int w = std::stoi(arg);
        if (w < l || w > m)
            throw std::invalid_argument("grid_family: need l <= w <= m");
        return SetFamily::from_masks(m, all_ksubsets(w, l));
    }
    if (head == "random") {
        const double p = std::stod(arg);
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("grid_family: need 0 <= p <= 1");
        Rng rng(seed);
        std::vector<Mask> out;
        for (Mask s : all_ksubsets(m, l))
            if (rng.unit() < p)
                out.push_back(s);
        return SetFamily::from_masks(m, out);
    }
    if (head == "file") {
        SetFamily F = load_family_file(arg);
        if (F.n() != m || (F.size() > 0 && (!F.uniform_k() || *F.uniform_k() != l)))
            throw std::invalid_argument("grid_family: file family is not l-uniform on [m]");
        return F;
    }
    throw std::invalid_argument("grid_family: unknown spec '" + spec + "'");
}

std::vector<GridEntry> pinned_grid() {
    std::vector<GridEntry> g;
    auto match = [&](int m, int l, int t, double a, const std::string& spec) {
        ConcConfig c;
        c.mode = ConcMode::matching;
        c.m = m;
        c.l = l;
        c.t = t;
        c.a = a;
        c.samples = 100000;
        c.seed = 7100 + static_cast<std::uint64_t>(g.size());
        g.push_back({c, spec});
    };
    auto comp = [&](int m, int l, int lp, int t, double a,
                    const std::string& spec) {
        ConcConfig c;
        c.mode = ConcMode::complement;
        c.m = m;
        c.l = l;
        c.lprime = lp;
        c.t = t;
        c.a = a;
        c.samples = 100000;
        c.seed = 7100 + static_cast<std::uint64_t>(g.size());
        g.push_back({c, spec});
    };
    match(20, 2, 5, 1.0, "star:1");
    match(20, 2, 5, 2.0, "star:1");
    match(20, 2, 5, 1.0, "all");
    match(20, 2, 5, 1.0, "random:0.5");
    match(20, 2, 5, 2.0, "clique:8");
    match(20, 2, 4, 1.0, "clique:6");
    match(30, 3, 6, 1.0, "star:1");
    match(30, 3, 6, 2.0, "random:0.5");
    match(12, 2, 3, 1.0, "star:1");
    match(12, 3, 4, 2.0, "all");
    match(24, 4, 5, 1.0, "star:2");
    match(24, 4, 5, 0.5, "random:0.5");
    match(16, 2, 8, 1.0, "star:1");
    match(40, 2, 10, 2.0, "clique:10");
    comp(30, 2, 4, 10, 1.0, "star:1");
    comp(30, 2, 4, 10, 2.0, "star:1");
    comp(30, 2, 4, 10, 1.0, "all");
    comp(30, 2, 4, 10, 2.0, "random:0.5");
    comp(30, 2, 4, 10, 1.0, "clique:12");
    comp(24, 2, 4, 8, 1.0, "star:1");
    comp(24, 3, 3, 7, 2.0, "random:0.5");
    comp(40, 2, 6, 12, 1.0, "star:5");
    comp(40, 3, 4, 12, 2.0, "clique:15");
    comp(26, 2, 2, 12, 1.0, "all");
    return g;
}

} // namespace dfam
