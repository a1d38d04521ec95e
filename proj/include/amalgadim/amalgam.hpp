#ifndef AMALGADIM_AMALGAM_HPP
#define AMALGADIM_AMALGAM_HPP

#include <string>
#include <utility>
#include <vector>

#include "amalgadim/families.hpp"
#include "amalgadim/graph.hpp"

namespace amalgadim {

struct VertexBlock {
    Graph graph;
    int terminal;
};

struct EdgeBlock {
    Graph graph;
    int a;  // oriented terminal edge (a, b)
    int b;
};

struct AmalgamResult {
    Graph graph;
    std::vector<std::vector<int>> block_maps;  // block i: old id -> new id
    int hub_a;                                 // merged terminal (vertex-amal: the hub)
    int hub_b;                                 // merged b-endpoint; -1 for vertex-amal
};

namespace detail {

inline Graph tagged_copy(const Graph& g, size_t block_index) {
    Graph out = Graph::from_edge_list(g.order(), g.edges());
    std::string prefix = "b" + std::to_string(block_index) + ":";
    for (int v = 0; v < g.order(); ++v)
        out.set_label(v, prefix + g.display_name(v));
    return out;
}

}  // namespace detail

/// Glue the blocks at their terminal vertices: the disjoint union with all
/// terminals identified into one hub. Order = sum |V_i| - (n-1).
inline AmalgamResult vertex_amal(const std::vector<VertexBlock>& blocks) {
    if (blocks.empty())
        throw Error(ErrorKind::EmptyCollection, "vertex_amal of no blocks");
    std::vector<Graph> copies;
    std::vector<int> group;
    for (size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        if (b.graph.order() < 2)
            throw Error(ErrorKind::TrivialBlock,
                        "block " + std::to_string(i) + " has order < 2");
        if (!is_connected(b.graph))
            throw Error(ErrorKind::Disconnected,
                        "block " + std::to_string(i) + " is disconnected");
        if (b.terminal < 0 || b.terminal >= b.graph.order())
            throw Error(ErrorKind::BadTerminal,
                        "block " + std::to_string(i) + " terminal out of range");
        copies.push_back(detail::tagged_copy(b.graph, i));
    }
    auto du = disjoint_union(copies);
    for (size_t i = 0; i < blocks.size(); ++i)
        group.push_back(du.offsets[i] + blocks[i].terminal);
    auto ident = identify_vertices(du.graph, {group});
    AmalgamResult res;
    res.hub_a = ident.mapping[group[0]];
    res.hub_b = -1;
    for (size_t i = 0; i < blocks.size(); ++i) {
        std::vector<int> mp(blocks[i].graph.order());
        for (int v = 0; v < blocks[i].graph.order(); ++v)
            mp[v] = ident.mapping[du.offsets[i] + v];
        res.block_maps.push_back(std::move(mp));
    }
    res.graph = std::move(ident.graph);
    return res;
}

/// Glue the blocks at their oriented terminal edges: all a-endpoints merge
/// into a*, all b-endpoints into b*, and a*b* is an edge of the result.
/// Order = sum |V_i| - 2(n-1).
inline AmalgamResult edge_amal(const std::vector<EdgeBlock>& blocks) {
    if (blocks.empty())
        throw Error(ErrorKind::EmptyCollection, "edge_amal of no blocks");
    std::vector<Graph> copies;
    std::vector<int> group_a, group_b;
    for (size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        if (b.graph.order() < 2)
            throw Error(ErrorKind::TrivialBlock,
                        "block " + std::to_string(i) + " has order < 2");
        if (!is_connected(b.graph))
            throw Error(ErrorKind::Disconnected,
                        "block " + std::to_string(i) + " is disconnected");
        if (b.a < 0 || b.a >= b.graph.order() || b.b < 0 ||
            b.b >= b.graph.order())
            throw Error(ErrorKind::BadTerminal,
                        "block " + std::to_string(i) + " terminal out of range");
        if (!b.graph.has_edge(b.a, b.b))
            throw Error(ErrorKind::NotAnEdge,
                        "block " + std::to_string(i) + " terminal pair is not an edge");
        copies.push_back(detail::tagged_copy(b.graph, i));
    }
    auto du = disjoint_union(copies);
    for (size_t i = 0; i < blocks.size(); ++i) {
        group_a.push_back(du.offsets[i] + blocks[i].a);
        group_b.push_back(du.offsets[i] + blocks[i].b);
    }
    // Merging the a-group cannot hit the adjacency guard against the b-group
    // members of other blocks only because identify_vertices checks within a
    // group; a-group members sit in distinct components of the union.
    auto ident = identify_vertices(du.graph, {group_a, group_b});
    AmalgamResult res;
    res.hub_a = ident.mapping[group_a[0]];
    res.hub_b = ident.mapping[group_b[0]];
    for (size_t i = 0; i < blocks.size(); ++i) {
        std::vector<int> mp(blocks[i].graph.order());
        for (int v = 0; v < blocks[i].graph.order(); ++v)
            mp[v] = ident.mapping[du.offsets[i] + v];
        res.block_maps.push_back(std::move(mp));
    }
    res.graph = std::move(ident.graph);
    return res;
}

struct WitnessResult {
    AmalgamResult amal;
    std::vector<int> witness;  // sorted vertex ids in the amalgam
};

/// Edge-amalgamate symmetric complete bipartite blocks K_{m_i,m_i} at their
/// default terminal edges and return the witness set: the images of
/// x1..x_{m_i-2} and y1..y_{m_i-2} from each block, |R| = sum 2(m_i-2).
/// This set matches the amalgam's dimension sum dim(G_i) - 2n exactly.
inline WitnessResult witness_r(const std::vector<FamilyInstance>& blocks) {
    if (blocks.empty())
        throw Error(ErrorKind::EmptyCollection, "witness_r of no blocks");
    std::vector<EdgeBlock> eb;
    for (const auto& inst : blocks) {
        if (inst.family != Family::complete_bipartite ||
            inst.params.size() != 2 || inst.params[0] != inst.params[1])
            throw Error(ErrorKind::NotSymmetricBipartite,
                        "witness_r needs symmetric complete bipartite blocks");
        if (inst.params[0] < 3)
            throw Error(ErrorKind::PartTooSmall, "witness_r needs m >= 3");
        eb.push_back({inst.graph, inst.terminal_edge.first,
                      inst.terminal_edge.second});
    }
    WitnessResult res{edge_amal(eb), {}};
    for (size_t i = 0; i < blocks.size(); ++i) {
        int m = blocks[i].params[0];
        for (int j = 0; j < m - 2; ++j) {
            res.witness.push_back(res.amal.block_maps[i][j]);      // x_{j+1}
            res.witness.push_back(res.amal.block_maps[i][m + j]);  // y_{j+1}
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

}  // namespace amalgadim

#endif
