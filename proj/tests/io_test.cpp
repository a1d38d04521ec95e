#include "amalgadim/io.hpp"

#include <gtest/gtest.h>

#include "amalgadim/families.hpp"

using namespace amalgadim;

namespace {

TEST(InstanceJson, RoundTripsGeneratorOutput) {
    std::vector<FamilyInstance> insts = {path(5), complete_bipartite(3, 3),
                                         double_hats_cycle(8), prism(4)};
    for (const auto& fi : insts) {
        Instance file{fi.graph, fi.terminal_vertex, fi.terminal_edge};
        auto j = instance_to_json(file);
        auto back = instance_from_json(j);
        EXPECT_EQ(back.graph, fi.graph);
        EXPECT_EQ(back.graph.labels(), fi.graph.labels());
        EXPECT_EQ(back.terminal_vertex, fi.terminal_vertex);
        EXPECT_EQ(back.terminal_edge, fi.terminal_edge);
    }
}

TEST(InstanceJson, RejectsBadInput) {
    EXPECT_THROW(instance_from_json(nlohmann::json::array()), Error);
    nlohmann::json j;
    j["order"] = 3;
    j["edges"] = {{0, 0}};
    EXPECT_THROW(instance_from_json(j), Error);
    j["edges"] = {{0, 1}};
    j["terminal_edge"] = {1, 2};
    EXPECT_THROW(instance_from_json(j), Error);  // not an edge
}

// Reference strings produced by standard graph6 tooling.
TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(to_graph6(complete(3).graph), "Bw");
    EXPECT_EQ(to_graph6(path(4).graph), "Ch");
    EXPECT_EQ(to_graph6(cycle(6).graph), "EhEG");
    EXPECT_EQ(to_graph6(complete_bipartite(3, 3).graph), "EFz_");
    EXPECT_EQ(to_graph6(prism(5).graph), "IheAHCPBG");
    EXPECT_EQ(to_graph6(Graph::from_edge_list(1, {})), "@");
}

TEST(Graph6, DecodesItsOwnOutputAndHeaders) {
    for (const auto& g :
         {complete(3).graph, cycle(6).graph, prism(5).graph,
          double_hats_cycle(9).graph,
          Graph::from_edge_list(70, {{0, 69}})}) {
        EXPECT_EQ(from_graph6(to_graph6(g)), g);
    }
    EXPECT_EQ(from_graph6(">>graph6<<Bw\n"), complete(3).graph);
    // order 70 uses the 3-byte size form
    Graph big = Graph::from_edge_list(70, {{0, 69}});
    EXPECT_EQ(to_graph6(big).substr(0, 4), std::string("~?@E"));
    EXPECT_THROW(from_graph6(""), Error);
    EXPECT_THROW(from_graph6("E"), Error);  // truncated body
}

TEST(Reports, TsvAndJsonRows) {
    TheoremReport r;
    r.theorem = "T3";
    r.instance = "vertex 4,5";
    r.predicted_lo = r.predicted_hi = 5;
    r.observed = 5;
    r.status = ReportStatus::pass;
    r.runtime_seconds = 0.25;
    auto tsv = report_tsv_row(r);
    EXPECT_EQ(tsv.substr(0, 16), "T3\tvertex 4,5\t5\t");
    auto j = report_to_json(r);
    EXPECT_EQ(j["theorem"], "T3");
    EXPECT_EQ(j["predicted"], 5);
    EXPECT_EQ(j["status"], "pass");

    r.predicted_hi = 7;
    EXPECT_EQ(r.predicted_text(), "[5,7]");
    r.unbounded_above = true;
    EXPECT_EQ(r.predicted_text(), ">=5");
}

}  // namespace
