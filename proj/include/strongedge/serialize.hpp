#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "strongedge/audit.hpp"
#include "strongedge/coloring.hpp"
#include "strongedge/degeneracy.hpp"
#include "strongedge/exact.hpp"
#include "strongedge/multigraph.hpp"
#include "strongedge/ordering.hpp"

namespace strongedge {

using json = nlohmann::json;

inline json degeneracy_to_json(const DegeneracyCertificate& cert) {
    return {{"k", cert.k}, {"peel_order", cert.peel_order}, {"back_degrees", cert.back_degrees}};
}

inline json ordering_to_json(const MultiGraph& g, const EdgeOrdering& ord) {
    json arr = json::array();
    for (int i = 0; i < static_cast<int>(ord.sequence.size()); ++i) {
        const OrderingEntry& entry = ord.sequence[i];
        const Edge& ed = g.edge(entry.edge);
        arr.push_back({{"pos", i + 1},
                       {"edge", {ed.u, ed.v}},
                       {"id", entry.edge},
                       {"special", entry.special}});
    }
    return arr;
}

inline EdgeOrdering ordering_from_json(const MultiGraph& g, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("ordering JSON must be an array");
    const int m = g.edge_count();
    if (static_cast<int>(j.size()) != m)
        throw std::invalid_argument("ordering JSON length does not match edge count");
    EdgeOrdering ord;
    ord.sequence.resize(m);
    std::vector<char> filled(m, 0);
    for (const json& item : j) {
        if (!item.is_object() || !item.contains("pos") || !item.contains("id") ||
            !item.contains("special"))
            throw std::invalid_argument("ordering entry needs pos, id and special fields");
        int pos = item.at("pos").get<int>();
        EdgeId id = item.at("id").get<EdgeId>();
        Vertex special = item.at("special").get<Vertex>();
        if (pos < 1 || pos > m) throw std::invalid_argument("ordering position out of range");
        if (filled[pos - 1]) throw std::invalid_argument("duplicate ordering position");
        if (id < 0 || id >= m) throw std::invalid_argument("ordering edge id out of range");
        const Edge& ed = g.edge(id);
        if (special != ed.u && special != ed.v)
            throw std::invalid_argument("ordering special vertex is not an endpoint of its edge");
        if (item.contains("edge")) {
            auto ends = item.at("edge").get<std::vector<Vertex>>();
            if (ends.size() != 2 ||
                !((ends[0] == ed.u && ends[1] == ed.v) || (ends[0] == ed.v && ends[1] == ed.u)))
                throw std::invalid_argument("ordering entry endpoints do not match edge id");
        }
        filled[pos - 1] = 1;
        ord.sequence[pos - 1] = {id, special};
    }
    return ord;
}

inline json coloring_report_to_json(const MultiGraph& g, const ColorRun& run) {
    json assignment = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        assignment.push_back(
            {{"id", e}, {"edge", {ed.u, ed.v}}, {"color", run.coloring.color[e]}});
    }
    json j{{"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"k", run.report.k},
           {"max_degree", run.report.max_degree},
           {"colors_used", run.report.colors_used},
           {"valid", run.report.valid},
           {"assignment", assignment}};
    j["bound"] = run.report.bound ? json(*run.report.bound) : json(nullptr);
    return j;
}

// Accepts the `color` output object, a bare array of {id, color} entries, or
// a plain color array indexed by edge id (the exact-witness form). The
// assignment must cover every edge exactly once.
inline StrongColoring coloring_from_json(const MultiGraph& g, const json& j) {
    const int m = g.edge_count();
    StrongColoring out;
    out.color.assign(m, -1);
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("assignment"))
            throw std::invalid_argument("coloring object lacks an assignment array");
        arr = &j.at("assignment");
    }
    if (!arr->is_array()) throw std::invalid_argument("coloring JSON must be an array");

    if (!arr->empty() && arr->front().is_number_integer()) {
        if (static_cast<int>(arr->size()) != m)
            throw std::invalid_argument("color array length does not match edge count");
        for (EdgeId e = 0; e < m; ++e) out.color[e] = arr->at(e).get<int>();
    } else {
        for (const json& item : *arr) {
            if (!item.is_object() || !item.contains("id") || !item.contains("color"))
                throw std::invalid_argument("coloring entry needs id and color fields");
            EdgeId e = item.at("id").get<EdgeId>();
            if (e < 0 || e >= m) throw std::invalid_argument("coloring edge id out of range");
            if (out.color[e] >= 0)
                throw std::invalid_argument("edge " + std::to_string(e) + " colored twice");
            out.color[e] = item.at("color").get<int>();
        }
    }
    for (EdgeId e = 0; e < m; ++e) {
        if (out.color[e] < 0)
            throw std::invalid_argument("assignment misses edge " + std::to_string(e) +
                                        " or uses a negative color");
        out.colors_used = std::max(out.colors_used, out.color[e] + 1);
    }
    return out;
}

inline json audit_to_json(const MultiGraph& g, const std::vector<AuditRecord>& records) {
    json arr = json::array();
    for (const AuditRecord& r : records) {
        const Edge& ed = g.edge(r.edge);
        arr.push_back({{"pos", r.position},
                       {"id", r.edge},
                       {"edge", {ed.u, ed.v}},
                       {"u", r.u},
                       {"v", r.v},
                       {"x1", r.x1},
                       {"x2", r.x2},
                       {"x3", r.x3},
                       {"y1", r.y1},
                       {"y2", r.y2},
                       {"total_conflicts", r.total_conflicts},
                       {"u_side_count", r.u_side_count},
                       {"v_side_count", r.v_side_count},
                       {"checks",
                        {{"total_conflicts_ok", r.checks.total_conflicts_ok},
                         {"u_side_ok", r.checks.u_side_ok},
                         {"v_side_ok", r.checks.v_side_ok},
                         {"x1_ok", r.checks.x1_ok},
                         {"y1_ok", r.checks.y1_ok},
                         {"x3_future_ok", r.checks.x3_future_ok},
                         {"y2_future_ok", r.checks.y2_future_ok}}}});
    }
    return arr;
}

inline json exact_to_json(const ExactResult& res) {
    return {{"chi_s", res.chi_s},
            {"timed_out", res.timed_out},
            {"nodes", res.nodes_explored},
            {"lower_bound", res.lower_bound},
            {"witness", res.witness.color}};
}

}  // namespace strongedge
