#include "shiq/counting.hpp"

#include <algorithm>
#include <thread>

namespace shiq {

namespace {

struct ReducedHyperplane {
    std::vector<long long> a;  // coefficients in [0, q)
    long long b = 0;
    bool on = false;  // equality constraint instead of avoidance
};

long long mod_reduce(const Int &v, long long q) {
    Int r = v % make_int(q);
    if (r < 0) r += make_int(q);
    return to_ll(r);
}

// Hyperplanes pre-reduced mod q once per call; "on" constraints sorted first
// since an equality rejects most points immediately.
std::vector<ReducedHyperplane> reduce(const Arrangement &arr,
                                      const std::vector<std::size_t> &on_idx, long long q) {
    std::vector<ReducedHyperplane> out;
    out.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const Hyperplane &h = arr.hyperplanes[k];
        ReducedHyperplane r;
        r.a.reserve(h.coeffs.size());
        for (const Int &c : h.coeffs) r.a.push_back(mod_reduce(c, q));
        r.b = mod_reduce(h.offset, q);
        r.on = std::find(on_idx.begin(), on_idx.end(), k) != on_idx.end();
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ReducedHyperplane &x, const ReducedHyperplane &y) {
                         return x.on && !y.on;
                     });
    return out;
}

bool admits(const std::vector<ReducedHyperplane> &hps, const Point &x, long long q) {
    for (const auto &h : hps) {
        long long s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s = (s + h.a[k] * x[k]) % q;
        if (h.on ? (s != h.b) : (s == h.b)) return false;
    }
    return true;
}

void check_budget(const Arrangement &arr, long long q, const CountOptions &opts) {
    Int charge = pow_int(make_int(q), static_cast<unsigned long>(arr.dim)) *
                 static_cast<long>(std::max<std::size_t>(arr.size(), 1));
    if (charge > make_int(opts.budget))
        throw BudgetError("enumeration budget exceeded: " + charge.get_str() +
                          " point-hyperplane checks needed, budget is " +
                          std::to_string(opts.budget));
}

// Odometer over the sub-box with first coordinate in [lo, hi); collects
// admitted points when `sink` is non-null, counts otherwise.
long long scan_range(const std::vector<ReducedHyperplane> &hps, int m, long long q, long long lo,
                     long long hi, std::vector<Point> *sink) {
    long long found = 0;
    Point x(static_cast<std::size_t>(m), 0);
    for (long long first = lo; first < hi; ++first) {
        x[0] = first;
        std::fill(x.begin() + 1, x.end(), 0);
        while (true) {
            if (admits(hps, x, q)) {
                ++found;
                if (sink) sink->push_back(x);
            }
            int pos = m - 1;
            while (pos >= 1 && ++x[pos] == q) {
                x[pos] = 0;
                --pos;
            }
            if (pos < 1) break;
        }
    }
    return found;
}

std::vector<std::size_t> locate_all(const Arrangement &arr, const std::vector<Hyperplane> &on) {
    std::vector<std::size_t> idx;
    for (const auto &h : on) {
        auto k = arr.index_of(h);
        if (!k) throw std::invalid_argument("restriction hyperplane is not a member: " + h.str());
        if (std::find(idx.begin(), idx.end(), *k) != idx.end())
            throw std::invalid_argument("restriction hyperplane listed twice: " + h.str());
        idx.push_back(*k);
    }
    return idx;
}

Int run(const Arrangement &arr, const std::vector<Hyperplane> &on, long long q,
        const CountOptions &opts, std::vector<Point> *sink) {
    if (q < 1) throw std::invalid_argument("modulus must be >= 1");
    auto on_idx = locate_all(arr, on);
    if (arr.size() == 0 && !sink)
        return pow_int(make_int(q), static_cast<unsigned long>(arr.dim));
    check_budget(arr, q, opts);

    auto hps = reduce(arr, on_idx, q);
    const int m = arr.dim;
    const int threads = std::clamp(opts.threads, 1, static_cast<int>(q));

    if (threads == 1 || m == 1) {
        long long n = scan_range(hps, m, q, 0, q, sink);
        return make_int(n);
    }

    // Shard on the first coordinate; shard results are combined in shard
    // order, so the outcome matches the single-threaded scan exactly.
    std::vector<long long> counts(static_cast<std::size_t>(threads), 0);
    std::vector<std::vector<Point>> parts(sink ? static_cast<std::size_t>(threads) : 0);
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
        long long lo = q * t / threads;
        long long hi = q * (t + 1) / threads;
        workers.emplace_back([&, t, lo, hi] {
            counts[static_cast<std::size_t>(t)] =
                scan_range(hps, m, q, lo, hi, sink ? &parts[static_cast<std::size_t>(t)] : nullptr);
        });
    }
    for (auto &w : workers) w.join();

    long long total = 0;
    for (long long c : counts) total += c;
    if (sink)
        for (auto &p : parts) sink->insert(sink->end(), p.begin(), p.end());
    return make_int(total);
}

}  // namespace

Int count_complement(const Arrangement &a, long long q, const CountOptions &opts) {
    return run(a, {}, q, opts, nullptr);
}

Int count_on_hyperplane(const Arrangement &a, const Hyperplane &h, long long q,
                        const CountOptions &opts) {
    return run(a, {h}, q, opts, nullptr);
}

Int count_restricted(const Arrangement &a, const std::vector<Hyperplane> &on, long long q,
                     const CountOptions &opts) {
    return run(a, on, q, opts, nullptr);
}

std::vector<Point> enumerate_complement(const Arrangement &a, long long q,
                                        const CountOptions &opts) {
    std::vector<Point> pts;
    run(a, {}, q, opts, &pts);
    return pts;
}

std::vector<Point> enumerate_restricted(const Arrangement &a, const std::vector<Hyperplane> &on,
                                        long long q, const CountOptions &opts) {
    std::vector<Point> pts;
    run(a, on, q, opts, &pts);
    return pts;
}

}  // namespace shiq
