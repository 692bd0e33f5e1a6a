// Labeled multigraphs (parallel edges and self-loops allowed), cycle
// matroids via vertex-edge incidence over GF(2), and Fleischner vertex
// splitting: G_{x,y} detaches the v-ends of two edges x,y meeting at v onto
// a fresh vertex. Edge labels and edge count are preserved; the vertex count
// grows by exactly one (the old vertex stays, possibly isolated).

#pragma once

#include <set>

#include "splitmat/report.hpp"
#include "splitmat/splitting.hpp"

namespace splitmat {

struct GraphEdge {
    std::string label;
    std::string u;
    std::string v;

    bool is_loop() const { return u == v; }
    bool touches(const std::string& vertex) const { return u == vertex || v == vertex; }
};

class MultiGraph {
public:
    MultiGraph() = default;

    explicit MultiGraph(std::vector<GraphEdge> edges, std::vector<std::string> extra_vertices = {})
        : edges_(std::move(edges)) {
        std::set<std::string> verts(extra_vertices.begin(), extra_vertices.end());
        std::set<std::string> labels;
        for (const auto& e : edges_) {
            if (!labels.insert(e.label).second) throw Error("duplicate edge label '" + e.label + "'");
            verts.insert(e.u);
            verts.insert(e.v);
        }
        vertices_.assign(verts.begin(), verts.end());
    }

    const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    const GraphEdge& edge(const std::string& label) const {
        for (const auto& e : edges_)
            if (e.label == label) return e;
        throw UnknownLabel(label);
    }

    bool has_vertex(const std::string& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    // Self-loops contribute 2.
    std::size_t degree(const std::string& v) const {
        std::size_t d = 0;
        for (const auto& e : edges_) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;
        }
        return d;
    }

    std::vector<std::string> incident_edges(const std::string& v) const {
        std::vector<std::string> out;
        for (const auto& e : edges_)
            if (e.touches(v)) out.push_back(e.label);
        return out;
    }

    std::size_t component_count() const {
        const std::size_t n = vertices_.size();
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const auto& e : edges_) {
            if (e.is_loop()) continue;
            parent[find(vertex_index(e.u))] = find(vertex_index(e.v));
        }
        std::size_t roots = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (find(i) == i) ++roots;
        return roots;
    }

    bool is_connected() const { return vertices_.size() <= 1 || component_count() == 1; }

    // Edge-deletion test: a bridge is an edge whose removal raises the
    // component count. Self-loops and parallel copies never qualify.
    std::vector<std::string> bridges() const {
        std::vector<std::string> out;
        const std::size_t base = component_count();
        for (const auto& e : edges_) {
            if (e.is_loop()) continue;
            if (without_edges({e.label}).component_count() > base) out.push_back(e.label);
        }
        return out;
    }

    bool is_bridgeless() const { return bridges().empty(); }

    bool is_cutvertex(const std::string& v) const {
        if (!is_connected()) return false;
        return !without_vertex(v).is_connected();
    }

    // Connected, at least 3 vertices, no cutvertex.
    bool is_2_connected() const {
        if (vertex_count() < 3 || !is_connected()) return false;
        for (const auto& v : vertices_)
            if (!without_vertex(v).is_connected()) return false;
        return true;
    }

    MultiGraph without_edges(const std::vector<std::string>& labels) const {
        std::set<std::string> drop(labels.begin(), labels.end());
        std::vector<GraphEdge> kept;
        for (const auto& e : edges_)
            if (!drop.count(e.label)) kept.push_back(e);
        return MultiGraph(std::move(kept), vertices_);
    }

    MultiGraph without_vertex(const std::string& v) const {
        std::vector<GraphEdge> kept;
        for (const auto& e : edges_)
            if (!e.touches(v)) kept.push_back(e);
        std::vector<std::string> verts;
        for (const auto& w : vertices_)
            if (w != v) verts.push_back(w);
        return MultiGraph(std::move(kept), std::move(verts));
    }

    std::string digest() const {
        std::string out = "v" + std::to_string(vertex_count()) + "e" + std::to_string(edge_count()) + ":";
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (i) out += ",";
            out += edges_[i].label + ":" + edges_[i].u + "-" + edges_[i].v;
        }
        return out;
    }

private:
    std::size_t vertex_index(const std::string& v) const {
        const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    std::vector<GraphEdge> edges_;
    std::vector<std::string> vertices_;  // sorted
};

// Vertex-edge incidence matrix over GF(2); rows follow the sorted vertex
// list, columns the edge list. A self-loop gives a zero column (a loop of
// the matroid), so the null space is exactly the cycle space of the graph.
inline BinaryMatroid cycle_matroid(const MultiGraph& g) {
    GF2Matrix rep(g.vertex_count(), g.edge_count());
    std::vector<std::string> labels;
    labels.reserve(g.edge_count());
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const GraphEdge& e = g.edges()[j];
        labels.push_back(e.label);
        if (e.is_loop()) continue;
        const auto row_of = [&](const std::string& v) {
            return static_cast<std::size_t>(
                std::lower_bound(g.vertices().begin(), g.vertices().end(), v) - g.vertices().begin());
        };
        rep.set(row_of(e.u), j, true);
        rep.set(row_of(e.v), j, true);
    }
    return BinaryMatroid(std::move(labels), std::move(rep));
}

// Splitting away x and y from an explicit shared endpoint v.
inline MultiGraph split_graph_at(const MultiGraph& g, const std::string& v, const std::string& x,
                                 const std::string& y) {
    if (x == y) throw IdenticalElements(x);
    const GraphEdge& ex = g.edge(x);
    const GraphEdge& ey = g.edge(y);
    if (ex.is_loop() || ey.is_loop())
        throw NonAdjacentEdges("self-loops cannot be split away");
    if (!ex.touches(v) || !ey.touches(v))
        throw NonAdjacentEdges("edges '" + x + "' and '" + y + "' are not both incident at '" + v + "'");

    std::string fresh = v + "'";
    while (g.has_vertex(fresh)) fresh += "'";

    std::vector<GraphEdge> edges = g.edges();
    for (auto& e : edges) {
        if (e.label != x && e.label != y) continue;
        if (e.u == v)
            e.u = fresh;
        else
            e.v = fresh;
    }
    std::vector<std::string> verts = g.vertices();
    verts.push_back(fresh);
    return MultiGraph(std::move(edges), std::move(verts));
}

// Splitting at the (lexicographically smallest) shared endpoint of x and y.
inline MultiGraph split_graph(const MultiGraph& g, const std::string& x, const std::string& y) {
    if (x == y) throw IdenticalElements(x);
    const GraphEdge& ex = g.edge(x);
    const GraphEdge& ey = g.edge(y);
    if (ex.is_loop() || ey.is_loop())
        throw NonAdjacentEdges("self-loops cannot be split away");
    std::vector<std::string> shared;
    for (const std::string& cand : {ex.u, ex.v})
        if (ey.touches(cand)) shared.push_back(cand);
    if (shared.empty())
        throw NonAdjacentEdges("edges '" + x + "' and '" + y + "' share no endpoint");
    return split_graph_at(g, *std::min_element(shared.begin(), shared.end()), x, y);
}

// The edge partition into blocks of G equals the component partition of the
// cycle matroid: two edges share a block iff a common cycle contains both.
inline std::vector<std::vector<std::string>> edge_blocks(const MultiGraph& g) {
    const BinaryMatroid m = cycle_matroid(g);
    std::vector<std::vector<std::string>> out;
    for (const ElementMask comp : m.components()) out.push_back(m.labels_of(comp));
    return out;
}

// (M(G))_{x,y} = M(G_{x,y}) as labeled matroids.
inline CheckReport commutation_check(const MultiGraph& g, const std::string& x, const std::string& y) {
    CheckReport report;
    report.statement_id = "commutation";
    report.instance = g.digest();
    report.params = {{"x", x}, {"y", y}};
    const BinaryMatroid graph_side = cycle_matroid(split_graph(g, x, y));
    const BinaryMatroid matroid_side = split_pair(cycle_matroid(g), x, y).split;
    if (graph_side == matroid_side) {
        report.verdict = Verdict::pass;
        report.detail = "cycle spaces agree";
    } else {
        report.verdict = Verdict::fail;
        report.witnesses = {graph_side.digest(), matroid_side.digest()};
        report.detail = "cycle spaces differ";
    }
    return report;
}

// Splitting Lemma: G connected and bridgeless, d(v) > 3, x,y,z incident at v
// (x and z in different blocks when v is a cutvertex). Then G_{x,y} or
// G_{x,z} is connected and bridgeless. Splits are taken at v itself.
inline CheckReport splitting_lemma_check(const MultiGraph& g, const std::string& v, const std::string& x,
                                         const std::string& y, const std::string& z) {
    CheckReport report;
    report.statement_id = "lemma-1.1";
    report.instance = g.digest();
    report.params = {{"v", v}, {"x", x}, {"y", y}, {"z", z}};

    if (!g.has_vertex(v)) throw UnknownLabel(v);
    const GraphEdge& ex = g.edge(x);
    const GraphEdge& ey = g.edge(y);
    const GraphEdge& ez = g.edge(z);

    std::vector<std::string> unmet;
    if (x == y || x == z || y == z) unmet.push_back("edges-distinct");
    if (ex.is_loop() || ey.is_loop() || ez.is_loop()) unmet.push_back("edges-not-loops");
    if (!(ex.touches(v) && ey.touches(v) && ez.touches(v))) unmet.push_back("edges-incident-at-v");
    if (!g.is_connected()) unmet.push_back("connected");
    if (!g.is_bridgeless()) unmet.push_back("bridgeless");
    if (g.degree(v) <= 3) unmet.push_back("degree(v)>3");
    if (unmet.empty()) {
        // v is a cutvertex exactly when its incident edges span more than one
        // block; this covers self-loops at v, which form blocks of their own
        // even though deleting v would not disconnect anything.
        const auto blocks = edge_blocks(g);
        const auto block_of = [&](const std::string& label) {
            for (std::size_t i = 0; i < blocks.size(); ++i)
                for (const auto& l : blocks[i])
                    if (l == label) return i;
            return blocks.size();
        };
        std::set<std::size_t> blocks_at_v;
        for (const auto& label : g.incident_edges(v)) blocks_at_v.insert(block_of(label));
        if (blocks_at_v.size() >= 2 && block_of(x) == block_of(z))
            unmet.push_back("x,z-in-different-blocks");
    }
    if (!unmet.empty()) {
        report.verdict = Verdict::precondition_unmet;
        report.detail = "unmet:";
        for (std::size_t i = 0; i < unmet.size(); ++i) report.detail += (i ? "," : "") + unmet[i];
        return report;
    }

    const MultiGraph gxy = split_graph_at(g, v, x, y);
    const MultiGraph gxz = split_graph_at(g, v, x, z);
    const bool ok_xy = gxy.is_connected() && gxy.is_bridgeless();
    const bool ok_xz = gxz.is_connected() && gxz.is_bridgeless();
    if (ok_xy || ok_xz) {
        report.verdict = Verdict::pass;
        report.witnesses = {ok_xy ? "G_{x,y}" : "G_{x,z}"};
        report.detail = std::string("G_{x,y}=") + (ok_xy ? "good" : "bad") + " G_{x,z}=" +
                        (ok_xz ? "good" : "bad");
    } else {
        report.verdict = Verdict::fail;
        report.witnesses = {gxy.digest(), gxz.digest()};
        report.detail = "both splits fail connected+bridgeless";
    }
    return report;
}

// K4 with one extra edge parallel to x; x,y between vertices 1 and 2.
inline MultiGraph figure1_witness() {
    return MultiGraph({{"x", "1", "2"},
                       {"y", "1", "2"},
                       {"a", "1", "3"},
                       {"b", "1", "4"},
                       {"c", "2", "3"},
                       {"d", "2", "4"},
                       {"e", "3", "4"}});
}

// Four-cycle; x and y are opposite edges, a series pair of its cycle matroid.
inline MultiGraph figure2_witness() {
    return MultiGraph({{"x", "1", "2"}, {"e2", "2", "3"}, {"y", "3", "4"}, {"e4", "4", "1"}});
}

// A 2-connected graph with x parallel to y where G - {x,y} stays 2-connected
// yet (M(G))_{x,y} is disconnected (and G_{x,y} is not 2-connected).
inline CheckReport figure1_scenario() {
    const MultiGraph g = figure1_witness();
    const BinaryMatroid m = cycle_matroid(g);
    CheckReport report;
    report.statement_id = "figure-1";
    report.instance = g.digest();
    report.params = {{"x", "x"}, {"y", "y"}};

    const bool g_2conn = g.is_2_connected();
    const bool parallel = m.is_parallel_pair("x", "y");
    const bool del_2conn = g.without_edges({"x", "y"}).is_2_connected();
    const bool split_disconnected = !split_pair(m, "x", "y").split.is_connected();
    const bool split_graph_not_2conn = !split_graph(g, "x", "y").is_2_connected();

    const bool ok = g_2conn && parallel && del_2conn && split_disconnected && split_graph_not_2conn;
    report.verdict = ok ? Verdict::pass : Verdict::fail;
    report.witnesses = {g.digest()};
    report.detail = std::string("caption-equivalent, not drawing-identical; 2connected=") +
                    (g_2conn ? "yes" : "no") + " parallel=" + (parallel ? "yes" : "no") +
                    " deletion-2connected=" + (del_2conn ? "yes" : "no") + " split-disconnected=" +
                    (split_disconnected ? "yes" : "no") + " graph-split-not-2connected=" +
                    (split_graph_not_2conn ? "yes" : "no");
    return report;
}

// x,y in series in M(G): M(G) \ {x,y} is disconnected while (M(G))_{x,y} is
// connected, and the split equals M(G) itself. Stated at the matroid level;
// the drawn x,y share no endpoint, so no graph split is involved.
inline CheckReport figure2_scenario() {
    const MultiGraph g = figure2_witness();
    const BinaryMatroid m = cycle_matroid(g);
    CheckReport report;
    report.statement_id = "figure-2";
    report.instance = g.digest();
    report.params = {{"x", "x"}, {"y", "y"}};

    const bool series = m.is_series_pair("x", "y");
    const bool del_disconnected = !deletion(m, {"x", "y"}).is_connected();
    const SplitResult sr = split_pair(m, "x", "y");
    const bool split_connected = sr.split.is_connected();
    const bool split_equal = sr.split == m;

    const bool ok = series && del_disconnected && split_connected && split_equal;
    report.verdict = ok ? Verdict::pass : Verdict::fail;
    report.witnesses = {g.digest()};
    report.detail = std::string("caption-equivalent, not drawing-identical; series=") +
                    (series ? "yes" : "no") + " deletion-disconnected=" + (del_disconnected ? "yes" : "no") +
                    " split-connected=" + (split_connected ? "yes" : "no") + " split-equals-original=" +
                    (split_equal ? "yes" : "no");
    return report;
}

// All labeled multigraphs with at most max_edges edges (vertices a,b,...;
// edges g1,g2,... over nondecreasing endpoint pairs; every vertex covered).
// The visit order is fixed, so sweeps built on this are deterministic.
template <typename Fn>
inline void enumerate_multigraphs(std::size_t max_edges, Fn&& fn, bool include_loops = true) {
    if (max_edges > 7) throw GroundTooLarge("multigraph-edges", 7, max_edges);
    for (std::size_t k = 1; k <= max_edges + 1; ++k) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + (include_loops ? 0 : 1); j < k; ++j) pairs.emplace_back(i, j);
        if (pairs.empty()) continue;

        std::vector<std::size_t> pick;
        auto rec = [&](auto&& self, std::size_t from, std::size_t covered) -> void {
            if (!pick.empty()) {
                if (covered == (std::size_t{1} << k) - 1) {
                    std::vector<GraphEdge> edges;
                    edges.reserve(pick.size());
                    for (std::size_t t = 0; t < pick.size(); ++t) {
                        const auto& [i, j] = pairs[pick[t]];
                        edges.push_back({"g" + std::to_string(t + 1),
                                         std::string(1, static_cast<char>('a' + i)),
                                         std::string(1, static_cast<char>('a' + j))});
                    }
                    fn(MultiGraph(std::move(edges)));
                }
                if (pick.size() == max_edges) return;
            }
            for (std::size_t p = from; p < pairs.size(); ++p) {
                pick.push_back(p);
                self(self, p,
                     covered | (std::size_t{1} << pairs[p].first) | (std::size_t{1} << pairs[p].second));
                pick.pop_back();
            }
        };
        rec(rec, 0, 0);
    }
}

// Graphs witnessing the figure-1 phenomenon, one entry per graph.
inline std::vector<MultiGraph> figure1_witness_search(std::size_t max_edges) {
    std::vector<MultiGraph> out;
    enumerate_multigraphs(max_edges, [&](const MultiGraph& g) {
        if (!g.is_2_connected()) return;
        const BinaryMatroid m = cycle_matroid(g);
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
                const GraphEdge& a = g.edges()[i];
                const GraphEdge& b = g.edges()[j];
                if (a.is_loop() || b.is_loop()) continue;
                if (!m.is_parallel_pair(a.label, b.label)) continue;
                if (!g.without_edges({a.label, b.label}).is_2_connected()) continue;
                if (split_pair(m, a.label, b.label).split.is_connected()) continue;
                out.push_back(g);
                return;
            }
    });
    return out;
}

// Graphs witnessing the figure-2 phenomenon (series pair, deletion
// disconnected, split connected), one entry per graph.
inline std::vector<MultiGraph> figure2_witness_search(std::size_t max_edges) {
    std::vector<MultiGraph> out;
    enumerate_multigraphs(max_edges, [&](const MultiGraph& g) {
        if (!g.is_2_connected()) return;
        const BinaryMatroid m = cycle_matroid(g);
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
                const GraphEdge& a = g.edges()[i];
                const GraphEdge& b = g.edges()[j];
                if (a.is_loop() || b.is_loop()) continue;
                if (!m.is_series_pair(a.label, b.label)) continue;
                if (deletion(m, {a.label, b.label}).is_connected()) continue;
                if (!split_pair(m, a.label, b.label).split.is_connected()) continue;
                out.push_back(g);
                return;
            }
    });
    return out;
}

}  // namespace splitmat
