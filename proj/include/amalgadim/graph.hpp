#ifndef AMALGADIM_GRAPH_HPP
#define AMALGADIM_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amalgadim {

enum class ErrorKind {
    SelfLoop,
    DuplicateEdge,
    IndexOutOfRange,
    Disconnected,
    EmptyCollection,
    AdjacentInGroup,
    OverlappingGroups,
    TooSmall,
    TrivialBlock,
    BadTerminal,
    NotAnEdge,
    EmptyW,
    TooLarge,
    NotSymmetricBipartite,
    PartTooSmall,
    MissingTerminal,
    BadFormat,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Simple undirected graph on vertex ids 0..order-1 with sorted adjacency
/// lists. Adjacency is fixed at construction; labels may be attached while
/// assembling an instance and are ignored by equality.
class Graph {
public:
    Graph() : order_(0) {}

    static Graph from_edge_list(int order,
                                const std::vector<std::pair<int, int>>& edges) {
        if (order < 0)
            throw Error(ErrorKind::IndexOutOfRange, "negative order");
        Graph g;
        g.order_ = order;
        g.adj_.resize(order);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw Error(ErrorKind::IndexOutOfRange,
                            "edge endpoint out of range: (" + std::to_string(u) +
                                "," + std::to_string(v) + ")");
            if (u == v)
                throw Error(ErrorKind::SelfLoop,
                            "self-loop at vertex " + std::to_string(u));
            if (std::find(g.adj_[u].begin(), g.adj_[u].end(), v) !=
                g.adj_[u].end())
                throw Error(ErrorKind::DuplicateEdge,
                            "duplicate edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    int order() const { return order_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    int edge_count() const {
        int deg_sum = 0;
        for (const auto& nbrs : adj_) deg_sum += static_cast<int>(nbrs.size());
        return deg_sum / 2;
    }

    /// Edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < order_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void set_label(int v, std::string label) {
        check_vertex(v);
        labels_[v] = std::move(label);
    }

    std::optional<std::string> label(int v) const {
        auto it = labels_.find(v);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }

    /// Label when present, otherwise "v<id>".
    std::string display_name(int v) const {
        auto it = labels_.find(v);
        return it != labels_.end() ? it->second : "v" + std::to_string(v);
    }

    const std::map<int, std::string>& labels() const { return labels_; }

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && adj_ == other.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw Error(ErrorKind::IndexOutOfRange,
                        "vertex " + std::to_string(v) + " out of range");
    }

    int order_;
    std::vector<std::vector<int>> adj_;
    std::map<int, std::string> labels_;
};

/// Dense all-pairs hop-count matrix. Construction requires a connected graph,
/// so every entry is finite.
class DistanceMatrix {
public:
    DistanceMatrix() : order_(0) {}
    DistanceMatrix(int order, std::vector<int> d)
        : order_(order), d_(std::move(d)) {}

    int order() const { return order_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * order_ + v]; }
    const std::vector<int>& row(int u) const = delete;
    const int* row_ptr(int u) const { return d_.data() + static_cast<size_t>(u) * order_; }

private:
    int order_;
    std::vector<int> d_;  // row-major order_*order_
};

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw Error(ErrorKind::IndexOutOfRange, "bfs source out of range");
    std::vector<int> dist(g.order(), -1);
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    for (int v = 0; v < g.order(); ++v)
        if (dist[v] < 0)
            throw Error(ErrorKind::Disconnected,
                        "vertex " + std::to_string(v) + " unreachable");
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<char> seen(g.order(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == g.order();
}

inline DistanceMatrix distance_matrix(const Graph& g) {
    int n = g.order();
    std::vector<int> d(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        auto row = bfs_distances(g, u);
        std::copy(row.begin(), row.end(), d.begin() + static_cast<size_t>(u) * n);
    }
    return DistanceMatrix(n, std::move(d));
}

struct DisjointUnion {
    Graph graph;
    std::vector<int> offsets;  // block i's vertex v maps to offsets[i]+v
};

inline DisjointUnion disjoint_union(const std::vector<Graph>& gs) {
    if (gs.empty())
        throw Error(ErrorKind::EmptyCollection, "disjoint_union of no graphs");
    std::vector<int> offsets;
    int total = 0;
    for (const auto& g : gs) {
        offsets.push_back(total);
        total += g.order();
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < gs.size(); ++i)
        for (auto [u, v] : gs[i].edges())
            edges.emplace_back(offsets[i] + u, offsets[i] + v);
    Graph out = Graph::from_edge_list(total, edges);
    for (size_t i = 0; i < gs.size(); ++i)
        for (const auto& [v, lab] : gs[i].labels())
            out.set_label(offsets[i] + v, lab);
    return {std::move(out), std::move(offsets)};
}

struct Identification {
    Graph graph;
    std::vector<int> mapping;  // old id -> new id, total and surjective
};

/// Collapse each group of vertices to a single vertex. Groups must be
/// pairwise disjoint and independent (no two members adjacent); parallel
/// edges produced by the merge are deduplicated. New ids are contiguous,
/// ordered by the smallest old id of each merged image.
inline Identification identify_vertices(const Graph& g,
                                        const std::vector<std::vector<int>>& groups) {
    int n = g.order();
    std::vector<int> group_of(n, -1);
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        for (int v : groups[gi]) {
            if (v < 0 || v >= n)
                throw Error(ErrorKind::IndexOutOfRange, "group vertex out of range");
            if (group_of[v] != -1)
                throw Error(ErrorKind::OverlappingGroups,
                            "vertex " + std::to_string(v) + " in two groups");
            group_of[v] = static_cast<int>(gi);
        }
        for (int u : groups[gi])
            for (int v : groups[gi])
                if (u < v && g.has_edge(u, v))
                    throw Error(ErrorKind::AdjacentInGroup,
                                "adjacent vertices " + std::to_string(u) + "," +
                                    std::to_string(v) + " in one group");
    }
    // Representative of each old vertex: itself, or its group's minimum member.
    std::vector<int> rep(n);
    std::vector<int> group_min(groups.size(), n);
    for (int v = 0; v < n; ++v)
        if (group_of[v] != -1)
            group_min[group_of[v]] = std::min(group_min[group_of[v]], v);
    for (int v = 0; v < n; ++v)
        rep[v] = group_of[v] == -1 ? v : group_min[group_of[v]];

    std::vector<int> mapping(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (rep[v] == v) mapping[v] = next++;
    }
    for (int v = 0; v < n; ++v) mapping[v] = mapping[rep[v]];

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int a = mapping[u], b = mapping[v];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph out = Graph::from_edge_list(next, edges);
    for (const auto& [v, lab] : g.labels()) {
        int img = mapping[v];
        auto existing = out.label(img);
        out.set_label(img, existing ? *existing + "|" + lab : lab);
    }
    return {std::move(out), std::move(mapping)};
}

}  // namespace amalgadim

#endif
