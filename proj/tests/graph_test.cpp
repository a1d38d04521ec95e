#include "amalgadim/graph.hpp"

#include <gtest/gtest.h>

#include "amalgadim/families.hpp"
#include "oracle.hpp"

using namespace amalgadim;

namespace {

Graph k3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph p4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}); }

TEST(FromEdgeList, TriangleAndPath) {
    Graph g = k3();
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.edge_count(), 3);
    Graph p = p4();
    std::vector<int> degs;
    for (int v = 0; v < 4; ++v)
        degs.push_back(static_cast<int>(p.neighbors(v).size()));
    EXPECT_EQ(degs, (std::vector<int>{1, 2, 2, 1}));
}

TEST(FromEdgeList, Errors) {
    try {
        Graph::from_edge_list(2, {{0, 0}});
        FAIL() << "expected SelfLoop";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SelfLoop);
    }
    try {
        Graph::from_edge_list(3, {{0, 1}, {1, 0}});
        FAIL() << "expected DuplicateEdge";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DuplicateEdge);
    }
    try {
        Graph::from_edge_list(2, {{0, 5}});
        FAIL() << "expected IndexOutOfRange";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
}

TEST(Connectivity, Basic) {
    EXPECT_TRUE(is_connected(k3()));
    EXPECT_TRUE(is_connected(Graph::from_edge_list(1, {})));
    auto two = disjoint_union({k3(), k3()});
    EXPECT_FALSE(is_connected(two.graph));
}

TEST(BfsDistances, Examples) {
    EXPECT_EQ(bfs_distances(p4(), 0), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(bfs_distances(cycle(6).graph, 0),
              (std::vector<int>{0, 1, 2, 3, 2, 1}));
    EXPECT_EQ(bfs_distances(complete(5).graph, 2),
              (std::vector<int>{1, 1, 0, 1, 1}));
    auto two = disjoint_union({k3(), k3()});
    EXPECT_THROW(bfs_distances(two.graph, 0), Error);
}

TEST(Distances, C4AndP2) {
    auto d = distance_matrix(cycle(4).graph);
    EXPECT_EQ(d.at(0, 2), 2);
    EXPECT_EQ(d.at(1, 3), 2);
    EXPECT_EQ(d.at(0, 1), 1);
    EXPECT_EQ(d.at(0, 3), 1);
    auto p2 = distance_matrix(path(2).graph);
    EXPECT_EQ(p2.at(0, 0), 0);
    EXPECT_EQ(p2.at(0, 1), 1);
}

TEST(Distances, AgreesWithFloydWarshall) {
    for (const auto& g :
         {cycle(7).graph, complete_bipartite(2, 3).graph, prism(4).graph,
          double_hats_cycle(9).graph}) {
        auto d = distance_matrix(g);
        auto ref = test_oracle::fw_distances(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                EXPECT_EQ(d.at(u, v), ref[u][v]);
    }
}

// Symmetry, zero diagonal, triangle inequality, d = 1 exactly on edges.
TEST(Distances, MatrixInvariants) {
    for (const auto& g :
         {path(6).graph, cycle(9).graph, complete(5).graph, prism(5).graph,
          complete_bipartite(3, 4).graph, double_hats_cycle(8).graph}) {
        auto d = distance_matrix(g);
        int n = g.order();
        for (int u = 0; u < n; ++u) {
            EXPECT_EQ(d.at(u, u), 0);
            for (int v = 0; v < n; ++v) {
                EXPECT_EQ(d.at(u, v), d.at(v, u));
                EXPECT_EQ(d.at(u, v) == 1, g.has_edge(u, v));
                for (int w = 0; w < n; ++w)
                    EXPECT_LE(d.at(u, w), d.at(u, v) + d.at(v, w));
            }
        }
    }
}

TEST(DisjointUnion, OffsetsAndCounts) {
    auto r = disjoint_union({k3(), k3()});
    EXPECT_EQ(r.graph.order(), 6);
    EXPECT_EQ(r.offsets, (std::vector<int>{0, 3}));
    auto single = disjoint_union({path(2).graph});
    EXPECT_EQ(single.graph, path(2).graph);
    auto three =
        disjoint_union({cycle(3).graph, cycle(4).graph, cycle(5).graph});
    EXPECT_EQ(three.graph.order(), 12);
    EXPECT_EQ(three.graph.edge_count(), 12);
    EXPECT_THROW(disjoint_union({}), Error);
}

TEST(IdentifyVertices, MergeTwoP2sIntoP3) {
    auto du = disjoint_union({path(2).graph, path(2).graph});
    auto r = identify_vertices(du.graph, {{0, 2}});
    EXPECT_EQ(r.graph.order(), 3);
    EXPECT_TRUE(test_oracle::isomorphic(r.graph, path(3).graph));
    EXPECT_EQ(r.mapping[0], r.mapping[2]);
}

TEST(IdentifyVertices, RejectsAdjacentAndOverlapping) {
    try {
        identify_vertices(cycle(4).graph, {{0, 1}});
        FAIL() << "expected AdjacentInGroup";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AdjacentInGroup);
    }
    auto du = disjoint_union({k3(), k3()});
    try {
        identify_vertices(du.graph, {{0, 3}, {3, 4}});
        FAIL() << "expected OverlappingGroups";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OverlappingGroups);
    }
}

TEST(IdentifyVertices, BowtieFromTwoTriangles) {
    auto du = disjoint_union({k3(), k3()});
    auto r = identify_vertices(du.graph, {{0, 3}});
    EXPECT_EQ(r.graph.order(), 5);
    EXPECT_EQ(r.graph.edge_count(), 6);
    Graph bowtie = Graph::from_edge_list(
        5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    EXPECT_TRUE(test_oracle::isomorphic(r.graph, bowtie));
}

TEST(IdentifyVertices, SingletonGroupsAreIdentity) {
    auto g = prism(4).graph;
    auto r = identify_vertices(g, {{1}, {5}});
    EXPECT_EQ(r.graph, g);
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(r.mapping[v], v);
}

// Adjacency between unmerged vertices survives the merge.
TEST(IdentifyVertices, PreservesUnmergedAdjacency) {
    auto du = disjoint_union({cycle(5).graph, cycle(6).graph});
    auto r = identify_vertices(du.graph, {{0, 5}});
    for (auto [u, v] : du.graph.edges())
        EXPECT_TRUE(r.graph.has_edge(r.mapping[u], r.mapping[v]));
}

}  // namespace
