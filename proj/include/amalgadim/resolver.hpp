#ifndef AMALGADIM_RESOLVER_HPP
#define AMALGADIM_RESOLVER_HPP

#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "amalgadim/graph.hpp"

namespace amalgadim {

enum class Method { exact, greedy };

struct ResolvingResult {
    int dim = 0;
    std::vector<int> basis;  // sorted ascending
    Method method = Method::exact;
    // certificate[v] = representation of v with respect to the basis
    std::vector<std::vector<int>> certificate;
};

struct TwinPartition {
    std::vector<std::vector<int>> classes;  // each sorted; cover all vertices
};

inline std::vector<int> representation(const DistanceMatrix& d, int v,
                                       const std::vector<int>& w) {
    if (w.empty()) throw Error(ErrorKind::EmptyW, "empty landmark set");
    if (v < 0 || v >= d.order())
        throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
    std::vector<int> rep;
    rep.reserve(w.size());
    for (int wi : w) {
        if (wi < 0 || wi >= d.order())
            throw Error(ErrorKind::IndexOutOfRange, "landmark out of range");
        rep.push_back(d.at(v, wi));
    }
    return rep;
}

inline bool is_resolving(const DistanceMatrix& d, const std::vector<int>& w) {
    if (w.empty()) throw Error(ErrorKind::EmptyW, "empty landmark set");
    std::vector<std::vector<int>> reps;
    reps.reserve(d.order());
    for (int v = 0; v < d.order(); ++v) reps.push_back(representation(d, v, w));
    std::sort(reps.begin(), reps.end());
    return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

/// u and v are twins when d(u,x) = d(v,x) for every x outside {u,v}. The
/// relation is an equivalence; classes are built from pairwise tests and
/// re-verified rather than assumed transitive.
inline TwinPartition twin_classes(const DistanceMatrix& d) {
    int n = d.order();
    auto twins = [&](int u, int v) {
        for (int x = 0; x < n; ++x) {
            if (x == u || x == v) continue;
            if (d.at(u, x) != d.at(v, x)) return false;
        }
        return true;
    };
    TwinPartition part;
    std::vector<char> assigned(n, 0);
    for (int u = 0; u < n; ++u) {
        if (assigned[u]) continue;
        std::vector<int> cls{u};
        assigned[u] = 1;
        for (int v = u + 1; v < n; ++v)
            if (!assigned[v] && twins(u, v)) {
                cls.push_back(v);
                assigned[v] = 1;
            }
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                if (!twins(cls[i], cls[j]))
                    throw std::logic_error("twin relation not transitive");
        part.classes.push_back(std::move(cls));
    }
    return part;
}

/// Any resolving set must contain all but one vertex of each twin class.
inline int twin_lower_bound(const TwinPartition& p) {
    int lb = 0;
    for (const auto& cls : p.classes) lb += static_cast<int>(cls.size()) - 1;
    return lb;
}

struct SearchOptions {
    int jobs = 1;
    std::uint64_t budget = 1'000'000'000;  // candidate-subset checks
};

namespace detail {

inline std::uint64_t binomial_clamped(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long double acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    if (acc > 1e18L) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(acc + 0.5L);
}

// Distinctness of the n representation vectors for subset w, via sorting
// packed signatures (8 bits per coordinate; requires order < 256).
class ResolvingChecker {
public:
    explicit ResolvingChecker(const DistanceMatrix& d) : d_(d) {}

    bool resolving(const std::vector<int>& w) {
        int n = d_.order();
        size_t k = w.size();
        size_t words = (k + 7) / 8;
        sigs_.assign(static_cast<size_t>(n) * words, 0);
        for (int v = 0; v < n; ++v) {
            const int* row = d_.row_ptr(v);
            std::uint64_t* sig = sigs_.data() + static_cast<size_t>(v) * words;
            for (size_t i = 0; i < k; ++i)
                sig[i / 8] |= static_cast<std::uint64_t>(row[w[i]] & 0xff)
                              << (8 * (i % 8));
        }
        idx_.resize(n);
        for (int v = 0; v < n; ++v) idx_[v] = v;
        auto less = [&](int a, int b) {
            const std::uint64_t* sa = sigs_.data() + static_cast<size_t>(a) * words;
            const std::uint64_t* sb = sigs_.data() + static_cast<size_t>(b) * words;
            for (size_t i = 0; i < words; ++i)
                if (sa[i] != sb[i]) return sa[i] < sb[i];
            return false;
        };
        std::sort(idx_.begin(), idx_.end(), less);
        for (int v = 0; v + 1 < n; ++v)
            if (!less(idx_[v], idx_[v + 1]) && !less(idx_[v + 1], idx_[v]))
                return false;
        return true;
    }

private:
    const DistanceMatrix& d_;
    std::vector<std::uint64_t> sigs_;
    std::vector<int> idx_;
};

// Enumerate k-subsets with fixed first element in lexicographic order;
// return the first resolving one, or nullopt. Aborts early once a slice
// with a smaller first element has reported a hit.
inline std::optional<std::vector<int>> search_slice(
    const DistanceMatrix& d, int first, int k,
    std::atomic<int>& best_first, std::atomic<std::uint64_t>& checked) {
    int n = d.order();
    ResolvingChecker checker(d);
    std::vector<int> w(k);
    w[0] = first;
    for (int i = 1; i < k; ++i) w[i] = first + i;
    if (w.back() >= n) return std::nullopt;
    while (true) {
        if (best_first.load(std::memory_order_relaxed) < first)
            return std::nullopt;
        checked.fetch_add(1, std::memory_order_relaxed);
        if (checker.resolving(w)) {
            int cur = best_first.load(std::memory_order_relaxed);
            while (cur > first &&
                   !best_first.compare_exchange_weak(cur, first)) {
            }
            return w;
        }
        // next combination with w[0] fixed
        int i = k - 1;
        while (i >= 1 && w[i] == n - k + i) --i;
        if (i < 1) return std::nullopt;
        ++w[i];
        for (int j = i + 1; j < k; ++j) w[j] = w[j - 1] + 1;
    }
}

}  // namespace detail

/// Exhaustive minimum search: subset sizes ascending from the twin lower
/// bound, lexicographic within a size, partitioned across workers by first
/// element. Returns the lexicographically smallest minimum basis.
inline ResolvingResult exact_metric_dimension(const Graph& g,
                                              const SearchOptions& opts = {}) {
    int n = g.order();
    if (n < 2)
        throw Error(ErrorKind::TooSmall, "need order >= 2");
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph disconnected");
    if (n > 255)
        throw Error(ErrorKind::TooLarge, "order beyond dense-search scale");
    DistanceMatrix d = distance_matrix(g);
    int lb = std::max(1, twin_lower_bound(twin_classes(d)));
    std::atomic<std::uint64_t> checked{0};
    for (int k = lb; k <= n - 1; ++k) {
        std::uint64_t projected = detail::binomial_clamped(n, k);
        if (projected > opts.budget || checked.load() + projected > opts.budget)
            throw Error(ErrorKind::TooLarge, "subset budget exhausted");

        std::atomic<int> best_first{n};
        std::vector<std::optional<std::vector<int>>> results(n);
        int jobs = std::max(1, opts.jobs);
        if (jobs == 1) {
            for (int f = 0; f + k <= n; ++f) {
                results[f] = detail::search_slice(d, f, k, best_first, checked);
                if (results[f]) break;  // lexicographically first overall
            }
        } else {
            std::atomic<int> next{0};
            auto worker = [&] {
                while (true) {
                    int f = next.fetch_add(1);
                    if (f + k > n) return;
                    results[f] = detail::search_slice(d, f, k, best_first, checked);
                }
            };
            std::vector<std::thread> threads;
            for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
            for (auto& t : threads) t.join();
        }
        for (int f = 0; f + k <= n; ++f) {
            if (!results[f]) continue;
            ResolvingResult res;
            res.dim = k;
            res.basis = *results[f];
            res.method = Method::exact;
            for (int v = 0; v < n; ++v)
                res.certificate.push_back(representation(d, v, res.basis));
            return res;
        }
    }
    throw std::logic_error("no resolving set found");  // unreachable: V minus a vertex resolves
}

/// Set-cover greedy: repeatedly add the vertex separating the most
/// still-unseparated pairs, lowest id on ties.
inline ResolvingResult greedy_resolving_set(const Graph& g) {
    int n = g.order();
    if (n < 2)
        throw Error(ErrorKind::TooSmall, "need order >= 2");
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph disconnected");
    DistanceMatrix d = distance_matrix(g);
    std::vector<std::pair<int, int>> unseparated;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) unseparated.emplace_back(u, v);
    ResolvingResult res;
    res.method = Method::greedy;
    std::vector<char> in_w(n, 0);
    while (!unseparated.empty()) {
        int best = -1, best_count = -1;
        for (int w = 0; w < n; ++w) {
            if (in_w[w]) continue;
            int count = 0;
            for (auto [u, v] : unseparated)
                if (d.at(u, w) != d.at(v, w)) ++count;
            if (count > best_count) {
                best_count = count;
                best = w;
            }
        }
        in_w[best] = 1;
        res.basis.push_back(best);
        std::vector<std::pair<int, int>> rest;
        for (auto [u, v] : unseparated)
            if (d.at(u, best) == d.at(v, best)) rest.emplace_back(u, v);
        unseparated = std::move(rest);
    }
    std::sort(res.basis.begin(), res.basis.end());
    res.dim = static_cast<int>(res.basis.size());
    for (int v = 0; v < n; ++v)
        res.certificate.push_back(representation(d, v, res.basis));
    return res;
}

}  // namespace amalgadim

#endif
