#ifndef AMALGADIM_FAMILIES_HPP
#define AMALGADIM_FAMILIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "amalgadim/graph.hpp"

namespace amalgadim {

enum class Family { path, cycle, complete, complete_bipartite, prism, dhc };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::prism: return "prism";
        case Family::dhc: return "dhc";
    }
    return "?";
}

/// A generated family member together with its default amalgamation
/// terminals. Terminal conventions are fixed per generator so instances are
/// comparable across runs.
struct FamilyInstance {
    Graph graph;
    Family family;
    std::vector<int> params;
    int terminal_vertex;
    std::pair<int, int> terminal_edge;  // oriented (a, b), ab an edge
};

/// Path 0-1-...-(n-1). Default terminal vertex is the midpoint, which is
/// internal for n >= 3.
inline FamilyInstance path(int n) {
    if (n < 2) throw Error(ErrorKind::TooSmall, "path needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return {Graph::from_edge_list(n, edges), Family::path, {n}, n / 2, {0, 1}};
}

inline FamilyInstance cycle(int n) {
    if (n < 3) throw Error(ErrorKind::TooSmall, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return {Graph::from_edge_list(n, edges), Family::cycle, {n}, 0, {0, 1}};
}

inline FamilyInstance complete(int n) {
    if (n < 2) throw Error(ErrorKind::TooSmall, "complete needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return {Graph::from_edge_list(n, edges), Family::complete, {n}, 0, {0, 1}};
}

/// K_{m,n} with part X = ids 0..m-1 (labels x1..xm) and part Y = ids
/// m..m+n-1 (labels y1..yn). Default terminal edge (x_m, y_n).
inline FamilyInstance complete_bipartite(int m, int n) {
    if (m < 1 || n < 1 || m + n < 2)
        throw Error(ErrorKind::TooSmall, "complete_bipartite needs m,n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    Graph g = Graph::from_edge_list(m + n, edges);
    for (int u = 0; u < m; ++u) g.set_label(u, "x" + std::to_string(u + 1));
    for (int v = 0; v < n; ++v) g.set_label(m + v, "y" + std::to_string(v + 1));
    return {std::move(g), Family::complete_bipartite, {m, n}, 0,
            {m - 1, m + n - 1}};
}

/// Prism over a base cycle of length n: outer cycle ids 0..n-1, inner cycle
/// ids n..2n-1, rungs i-(n+i). Order 2n, size 3n.
inline FamilyInstance prism(int n) {
    if (n < 3) throw Error(ErrorKind::TooSmall, "prism needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return {Graph::from_edge_list(2 * n, edges), Family::prism, {n}, 0, {0, 1}};
}

/// Double-hats cycle DHC_n: cycle x1..xn (ids 0..n-1) plus y2 (id n)
/// adjacent to x1,x2,x3 and y5 (id n+1) adjacent to x4,x5,x6. Default
/// terminal edge (x6, x7). Needs n >= 7 so the hats and the terminal edge
/// fit on distinct vertices.
inline FamilyInstance double_hats_cycle(int n) {
    if (n < 7) throw Error(ErrorKind::TooSmall, "double_hats_cycle needs n >= 7");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < 3; ++i) edges.emplace_back(n, i);
    for (int i = 3; i < 6; ++i) edges.emplace_back(n + 1, i);
    Graph g = Graph::from_edge_list(n + 2, edges);
    for (int i = 0; i < n; ++i) g.set_label(i, "x" + std::to_string(i + 1));
    g.set_label(n, "y2");
    g.set_label(n + 1, "y5");
    return {std::move(g), Family::dhc, {n}, 0, {5, 6}};
}

}  // namespace amalgadim

#endif
