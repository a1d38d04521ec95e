#ifndef AMALGADIM_IO_HPP
#define AMALGADIM_IO_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "amalgadim/graph.hpp"
#include "amalgadim/harness.hpp"

namespace amalgadim {

/// On-disk instance: a graph plus optional declared terminals.
struct Instance {
    Graph graph;
    std::optional<int> terminal_vertex;
    std::optional<std::pair<int, int>> terminal_edge;
};

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["order"] = inst.graph.order();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : inst.graph.edges())
        edges.push_back(nlohmann::json::array({u, v}));
    j["edges"] = edges;
    if (!inst.graph.labels().empty()) {
        nlohmann::json labels = nlohmann::json::object();
        for (const auto& [v, lab] : inst.graph.labels())
            labels[std::to_string(v)] = lab;
        j["labels"] = labels;
    }
    if (inst.terminal_vertex) j["terminal_vertex"] = *inst.terminal_vertex;
    if (inst.terminal_edge)
        j["terminal_edge"] = nlohmann::json::array(
            {inst.terminal_edge->first, inst.terminal_edge->second});
    return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
        throw Error(ErrorKind::BadFormat, "instance needs order and edges");
    int order = j.at("order").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw Error(ErrorKind::BadFormat, "edge must be a [u,v] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Instance inst;
    inst.graph = Graph::from_edge_list(order, edges);
    if (j.contains("labels"))
        for (const auto& [key, val] : j.at("labels").items())
            inst.graph.set_label(std::stoi(key), val.get<std::string>());
    if (j.contains("terminal_vertex")) {
        int t = j.at("terminal_vertex").get<int>();
        if (t < 0 || t >= order)
            throw Error(ErrorKind::BadTerminal, "terminal_vertex out of range");
        inst.terminal_vertex = t;
    }
    if (j.contains("terminal_edge")) {
        const auto& te = j.at("terminal_edge");
        if (!te.is_array() || te.size() != 2)
            throw Error(ErrorKind::BadFormat, "terminal_edge must be [a,b]");
        int a = te[0].get<int>(), b = te[1].get<int>();
        if (!inst.graph.has_edge(a, b))
            throw Error(ErrorKind::BadTerminal, "terminal_edge is not an edge");
        inst.terminal_edge = {a, b};
    }
    return inst;
}

// graph6 per the published format: N(n), then the upper triangle of the
// adjacency matrix column by column, 6 bits per printable byte.
inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw Error(ErrorKind::TooLarge, "graph6 order > 258047 unsupported");
    }
    int bit = 5;
    char cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

inline Graph from_graph6(const std::string& line) {
    std::string s = line;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw Error(ErrorKind::BadFormat, "empty graph6 line");
    size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw Error(ErrorKind::TooLarge, "graph6 8-byte sizes unsupported");
        if (s.size() < 4) throw Error(ErrorKind::BadFormat, "truncated graph6 size");
        n = ((static_cast<long long>(s[1]) - 63) << 12) |
            ((static_cast<long long>(s[2]) - 63) << 6) |
            (static_cast<long long>(s[3]) - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n < 0) throw Error(ErrorKind::BadFormat, "bad graph6 size");
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < nbytes)
        throw Error(ErrorKind::BadFormat, "truncated graph6 body");
    std::vector<std::pair<int, int>> edges;
    long long bitpos = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bitpos) {
            int byte = s[pos + bitpos / 6] - 63;
            if (byte < 0 || byte > 63)
                throw Error(ErrorKind::BadFormat, "bad graph6 byte");
            if ((byte >> (5 - bitpos % 6)) & 1) edges.emplace_back(u, v);
        }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline std::string report_tsv_row(const TheoremReport& r) {
    std::ostringstream os;
    os << r.theorem << "\t" << r.instance << "\t" << r.predicted_text() << "\t"
       << r.observed << "\t" << status_name(r.status) << "\t"
       << r.runtime_seconds;
    return os.str();
}

inline nlohmann::json report_to_json(const TheoremReport& r) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["instance"] = r.instance;
    if (r.unbounded_above)
        j["predicted"] = {{"lo", r.predicted_lo}};
    else if (r.predicted_lo == r.predicted_hi)
        j["predicted"] = r.predicted_lo;
    else
        j["predicted"] = {{"lo", r.predicted_lo}, {"hi", r.predicted_hi}};
    j["observed"] = r.observed;
    j["status"] = status_name(r.status);
    j["runtime"] = r.runtime_seconds;
    return j;
}

}  // namespace amalgadim

#endif
