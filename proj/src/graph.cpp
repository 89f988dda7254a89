#include "tropilift/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tropilift {

void divisor_add(Divisor& d, const PointLoc& p, long long coeff) {
    if (coeff == 0) return;
    auto it = d.find(p);
    if (it == d.end()) {
        d.emplace(p, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) d.erase(it);
    }
}

Divisor divisor_sum(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [p, c] : b) divisor_add(out, p, c);
    return out;
}

Divisor divisor_neg(const Divisor& a) {
    Divisor out;
    for (const auto& [p, c] : a) out.emplace(p, -c);
    return out;
}

long long divisor_degree(const Divisor& d) {
    long long deg = 0;
    for (const auto& [p, c] : d) deg += c;
    return deg;
}

bool divisor_effective(const Divisor& d) {
    for (const auto& [p, c] : d)
        if (c < 0) return false;
    return true;
}

// --- Graph ------------------------------------------------------------------

int Graph::add_vertex(const std::string& id, int genus, bool infinite) {
    if (vertex_index_.count(id)) throw std::invalid_argument("duplicate vertex id '" + id + "'");
    if (genus < 0) throw std::invalid_argument("negative genus at vertex '" + id + "'");
    vertices_.push_back(Vertex{id, genus, infinite});
    adjacency_.emplace_back();
    vertex_index_[id] = (int)vertices_.size() - 1;
    return (int)vertices_.size() - 1;
}

int Graph::add_edge(const std::string& id, int u, int v, const Length& len) {
    if (edge_index_.count(id)) throw std::invalid_argument("duplicate edge id '" + id + "'");
    if (u < 0 || u >= (int)vertices_.size() || v < 0 || v >= (int)vertices_.size())
        throw std::invalid_argument("edge '" + id + "' references an unknown vertex");
    if (u == v) throw std::invalid_argument("loop edge '" + id + "' (subdivide loops at their midpoint)");
    if (vertices_[u].infinite && vertices_[v].infinite)
        throw std::invalid_argument("edge '" + id + "' joins two infinite vertices");
    // normalize: end 0 is the finite endpoint of an infinite edge
    if (vertices_[u].infinite) std::swap(u, v);
    Edge e;
    e.id = id;
    e.ends[0] = u;
    e.ends[1] = v;
    e.len = len;
    edges_.push_back(e);
    int idx = (int)edges_.size() - 1;
    adjacency_[u].push_back(EdgeEnd{idx, 0});
    adjacency_[v].push_back(EdgeEnd{idx, 1});
    edge_index_[id] = idx;
    return idx;
}

std::pair<int, int> Graph::add_loop(const std::string& id, int v, const Rat& circumference) {
    if (circumference <= 0) throw std::invalid_argument("loop '" + id + "' needs positive circumference");
    int mid = add_vertex(fresh_vertex_id(id + ".mid"));
    Rat half = circumference / 2;
    int e0 = add_edge(fresh_edge_id(id + ".a"), v, mid, Length::finite(half));
    int e1 = add_edge(fresh_edge_id(id + ".b"), mid, v, Length::finite(half));
    return {e0, e1};
}

int Graph::find_vertex(const std::string& id) const {
    auto it = vertex_index_.find(id);
    return it == vertex_index_.end() ? -1 : it->second;
}

int Graph::find_edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    return it == edge_index_.end() ? -1 : it->second;
}

int Graph::require_vertex(const std::string& id) const {
    int v = find_vertex(id);
    if (v < 0) throw std::invalid_argument("unknown vertex id '" + id + "'");
    return v;
}

int Graph::require_edge(const std::string& id) const {
    int e = find_edge(id);
    if (e < 0) throw std::invalid_argument("unknown edge id '" + id + "'");
    return e;
}

bool Graph::is_connected() const {
    if (vertices_.empty()) return false;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& d : adjacency_[v]) {
            int w = far_vertex(d);
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::string Graph::fresh_vertex_id(const std::string& base) const {
    if (!vertex_index_.count(base)) return base;
    for (int k = 1;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (!vertex_index_.count(cand)) return cand;
    }
}

std::string Graph::fresh_edge_id(const std::string& base) const {
    if (!edge_index_.count(base)) return base;
    for (int k = 1;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (!edge_index_.count(cand)) return cand;
    }
}

// --- validation and invariants -----------------------------------------------

std::vector<std::string> validate_model(const Graph& g) {
    std::vector<std::string> out;
    if (g.vertex_count() == 0) {
        out.push_back("empty graph");
        return out;
    }
    if (!g.is_connected()) out.push_back("graph is not connected");
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Vertex& vt = g.vertex(v);
        if (vt.genus < 0) out.push_back("negative genus at vertex '" + vt.id + "'");
        if (vt.infinite) {
            if (vt.genus != 0) out.push_back("infinite vertex '" + vt.id + "' has positive genus");
            if (g.valence(v) != 1)
                out.push_back("infinite vertex '" + vt.id + "' has valence != 1");
            else if (!g.edge(g.incident(v)[0].edge).len.infinite)
                out.push_back("infinite vertex '" + vt.id + "' on a finite-length edge");
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.ends[0] == ed.ends[1]) out.push_back("loop edge '" + ed.id + "'");
        bool inf_end = g.vertex(ed.ends[0]).infinite || g.vertex(ed.ends[1]).infinite;
        if (ed.len.infinite && !inf_end)
            out.push_back("infinite length on edge '" + ed.id + "' between finite vertices");
        if (!ed.len.infinite && inf_end)
            out.push_back("finite length on edge '" + ed.id + "' at an infinite vertex");
        if (!ed.len.infinite && ed.len.value <= 0)
            out.push_back("non-positive length on edge '" + ed.id + "'");
    }
    return out;
}

void require_valid(const Graph& g) {
    auto diag = validate_model(g);
    if (!diag.empty()) throw std::invalid_argument("invalid graph model: " + diag.front());
}

long long first_betti(const Graph& g) {
    // infinite leaf edges add one edge and one vertex each, so the full-graph
    // count agrees with the finite-part count
    return (long long)g.edge_count() - g.vertex_count() + 1;
}

long long graph_genus(const Graph& g) {
    long long total = first_betti(g);
    for (int v = 0; v < g.vertex_count(); ++v) total += g.vertex(v).genus;
    return total;
}

Divisor canonical_divisor(const Graph& g) {
    Divisor d;
    for (int v = 0; v < g.vertex_count(); ++v)
        divisor_add(d, PointLoc::at_vertex(v), (long long)g.valence(v) + 2 * g.vertex(v).genus - 2);
    return d;
}

// --- point maps ---------------------------------------------------------------

PointLoc PointMap::map_point(const PointLoc& p) const {
    if (p.is_vertex()) return PointLoc::at_vertex(vertex_map[p.vertex]);
    const EdgeSplit& sp = edge_splits[p.edge];
    // locate the segment containing the offset
    size_t i = 0;
    while (i < sp.cuts.size() && sp.cuts[i] < p.offset) ++i;
    if (i < sp.cuts.size() && sp.cuts[i] == p.offset) return PointLoc::at_vertex(sp.cut_vertices[i]);
    Rat lo = (i == 0) ? Rat(0) : sp.cuts[i - 1];
    return PointLoc::on_edge(sp.segments[i], (p.offset - lo) * scale);
}

Divisor PointMap::map_divisor(const Divisor& d) const {
    Divisor out;
    for (const auto& [p, c] : d) divisor_add(out, map_point(p), c);
    return out;
}

namespace {

// Copies g while splitting each edge at the given interior offsets, scaling
// all lengths by `scale`. Shared by subdivide() and uniformize().
Refinement split_edges(const Graph& g, const std::vector<std::vector<Rat>>& cuts, const Rat& scale) {
    Refinement out;
    PointMap& pm = out.fwd;
    pm.scale = scale;
    pm.vertex_map.resize(g.vertex_count());
    pm.edge_splits.resize(g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Vertex& vt = g.vertex(v);
        pm.vertex_map[v] = out.graph.add_vertex(vt.id, vt.genus, vt.infinite);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        PointMap::EdgeSplit& sp = pm.edge_splits[e];
        sp.cuts = cuts[e];
        std::sort(sp.cuts.begin(), sp.cuts.end());
        sp.cuts.erase(std::unique(sp.cuts.begin(), sp.cuts.end()), sp.cuts.end());
        int prev = pm.vertex_map[ed.ends[0]];
        Rat prev_off = 0;
        for (size_t i = 0; i < sp.cuts.size(); ++i) {
            int nv = out.graph.add_vertex(out.graph.fresh_vertex_id(ed.id + ":" + std::to_string(i + 1)));
            sp.cut_vertices.push_back(nv);
            Rat seg = (sp.cuts[i] - prev_off) * scale;
            sp.segments.push_back(out.graph.add_edge(
                out.graph.fresh_edge_id(sp.cuts.empty() ? ed.id : ed.id + ":" + std::to_string(i)), prev, nv,
                Length::finite(seg)));
            prev = nv;
            prev_off = sp.cuts[i];
        }
        Length last;
        if (ed.len.infinite)
            last = Length::inf();
        else
            last = Length::finite((ed.len.value - prev_off) * scale);
        std::string last_id = sp.cuts.empty() ? ed.id : ed.id + ":" + std::to_string(sp.cuts.size());
        sp.segments.push_back(
            out.graph.add_edge(out.graph.fresh_edge_id(last_id), prev, pm.vertex_map[ed.ends[1]], last));
    }
    return out;
}

}  // namespace

Refinement subdivide(const Graph& g, const std::vector<PointLoc>& points) {
    std::vector<std::vector<Rat>> cuts(g.edge_count());
    for (const auto& p : points) {
        if (p.is_vertex()) continue;
        if (p.edge < 0 || p.edge >= g.edge_count()) throw std::invalid_argument("subdivide: bad edge index");
        const Edge& ed = g.edge(p.edge);
        if (p.offset <= 0 || (!ed.len.infinite && p.offset >= ed.len.value))
            throw std::invalid_argument("subdivide: offset outside edge '" + ed.id + "'");
        cuts[p.edge].push_back(p.offset);
    }
    return split_edges(g, cuts, 1);
}

Uniformization uniformize(const Graph& g) {
    Int denom_lcm = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.len.infinite) continue;
        denom_lcm = int_lcm(denom_lcm, rat_den(ed.len.value));
    }
    Rat scale(denom_lcm, 1);
    std::vector<std::vector<Rat>> cuts(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.len.infinite) continue;
        Rat scaled = ed.len.value * scale;
        Int n = rat_num(scaled);  // integer after scaling
        for (Int i = 1; i < n; ++i) cuts[e].push_back(Rat(i, 1) / scale);
    }
    Refinement r = split_edges(g, cuts, scale);
    return Uniformization{std::move(r.graph), std::move(r.fwd), scale};
}

Modification elementary_modification(const Graph& g, const PointLoc& p, const Length& new_length) {
    if (p.is_vertex()) {
        if (g.vertex(p.vertex).infinite)
            throw std::invalid_argument("point not Lambda-rational: modification at an infinite vertex");
    } else {
        const Edge& ed = g.edge(p.edge);
        if (p.offset <= 0 || (!ed.len.infinite && p.offset >= ed.len.value))
            throw std::invalid_argument("modification point outside edge '" + ed.id + "'");
    }
    Modification m;
    Refinement r = subdivide(g, {p});
    m.graph = std::move(r.graph);
    m.fwd = std::move(r.fwd);
    m.base_point = p;
    PointLoc attach = m.fwd.map_point(p);
    m.attach_vertex = attach.vertex;
    m.leaf_vertex = m.graph.add_vertex(m.graph.fresh_vertex_id("leaf"), 0, new_length.infinite);
    m.leaf_edge = m.graph.add_edge(m.graph.fresh_edge_id("leafedge"), m.attach_vertex, m.leaf_vertex, new_length);
    return m;
}

Divisor Modification::retract_divisor(const Divisor& on_modified) const {
    // invert the refinement: map new locations back to original coordinates
    std::vector<int> vert_back(graph.vertex_count(), -1);
    for (size_t v = 0; v < fwd.vertex_map.size(); ++v) vert_back[fwd.vertex_map[v]] = (int)v;
    std::map<int, std::pair<int, Rat>> seg_back;  // new edge -> (old edge, start offset)
    for (size_t e = 0; e < fwd.edge_splits.size(); ++e) {
        const auto& sp = fwd.edge_splits[e];
        for (size_t i = 0; i < sp.segments.size(); ++i) {
            Rat lo = (i == 0) ? Rat(0) : sp.cuts[i - 1];
            seg_back[sp.segments[i]] = {(int)e, lo};
        }
        for (size_t i = 0; i < sp.cut_vertices.size(); ++i) vert_back[sp.cut_vertices[i]] = -2 - (int)i;
    }
    Divisor out;
    for (const auto& [p, c] : on_modified) {
        if (p.is_vertex()) {
            if (p.vertex == leaf_vertex) {
                divisor_add(out, base_point, c);
            } else if (vert_back[p.vertex] >= 0) {
                divisor_add(out, PointLoc::at_vertex(vert_back[p.vertex]), c);
            } else {
                // a cut vertex: it sits exactly at the base point
                divisor_add(out, base_point, c);
            }
        } else if (p.edge == leaf_edge) {
            divisor_add(out, base_point, c);
        } else {
            auto it = seg_back.find(p.edge);
            if (it == seg_back.end()) throw std::invalid_argument("retract: divisor not on the modified graph");
            divisor_add(out, PointLoc::on_edge(it->second.first, it->second.second + p.offset / fwd.scale), c);
        }
    }
    return out;
}

BridgeReport bridges(const Graph& g) {
    BridgeReport rep;
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    // iterative DFS over the finite part; infinite leaf edges reported separately
    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        for (const auto& d : g.incident(v)) {
            if (d.edge == parent_edge) continue;
            if (g.edge(d.edge).len.infinite) continue;
            int w = g.far_vertex(d);
            if (disc[w] < 0) {
                dfs(w, d.edge);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) rep.bridges.insert(d.edge);
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (!g.vertex(v).infinite && disc[v] < 0) dfs(v, -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).len.infinite) rep.leaves.insert(e);
    return rep;
}

EssentialModel essential_model(const Graph& g) {
    // Work on an explicit doubly-linked half-edge structure would be heavy;
    // instead rebuild iteratively: look for a suppressible vertex, merge, redo.
    struct WEdge {
        int u, v;
        Length len;
    };
    std::vector<Vertex> verts;
    std::vector<char> alive_v;
    std::vector<WEdge> eds;
    std::vector<char> alive_e;
    // chain of original points: each original vertex tracked as (edge-or-vertex anchor)
    for (int v = 0; v < g.vertex_count(); ++v) verts.push_back(g.vertex(v));
    alive_v.assign(verts.size(), 1);
    for (int e = 0; e < g.edge_count(); ++e)
        eds.push_back(WEdge{g.edge(e).ends[0], g.edge(e).ends[1], g.edge(e).len});
    alive_e.assign(eds.size(), 1);

    // track where each original vertex lives: (host edge, offset from host end u)
    struct Anchor {
        int vertex = -1;  // still a live vertex
        int edge = -1;
        Rat offset = 0;
    };
    std::vector<Anchor> anchors(verts.size());
    for (size_t v = 0; v < verts.size(); ++v) anchors[v].vertex = (int)v;

    auto incident_live = [&](int v) {
        std::vector<int> out;
        for (size_t e = 0; e < eds.size(); ++e)
            if (alive_e[e] && (eds[e].u == v || eds[e].v == v)) out.push_back((int)e);
        return out;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t v = 0; v < verts.size(); ++v) {
            if (!alive_v[v] || verts[v].infinite || verts[v].genus != 0) continue;
            auto inc = incident_live((int)v);
            if (inc.size() != 2 || inc[0] == inc[1]) continue;
            WEdge& a = eds[inc[0]];
            WEdge& b = eds[inc[1]];
            int va = (a.u == (int)v) ? a.v : a.u;
            int vb = (b.u == (int)v) ? b.v : b.u;
            if (va == vb) continue;  // would create a loop; handled below
            if (a.len.infinite && b.len.infinite) continue;
            // merge into one edge; offsets of re-anchored points are measured
            // from the merged edge's u end, which is its finite end when the
            // merged edge is infinite
            int nu, nv;
            Length merged;
            // head(x) = offset of point x from the chosen u end
            auto on_a = [&](const Rat& off) {  // off measured from a.u
                return (a.u == va) ? off : a.len.value - off;
            };
            auto on_b = [&](const Rat& off) {  // off measured from b.u
                return (b.u == (int)v) ? off : b.len.value - off;
            };
            std::vector<Rat> new_off(anchors.size(), Rat(0));
            std::vector<char> touched(anchors.size(), 0);
            if (!a.len.infinite && !b.len.infinite) {
                nu = va;
                nv = vb;
                merged = Length::finite(a.len.value + b.len.value);
                for (size_t w = 0; w < anchors.size(); ++w) {
                    Anchor& an = anchors[w];
                    if (an.vertex == (int)v) { new_off[w] = a.len.value; touched[w] = 1; }
                    else if (an.edge == inc[0]) { new_off[w] = on_a(an.offset); touched[w] = 1; }
                    else if (an.edge == inc[1]) { new_off[w] = a.len.value + on_b(an.offset); touched[w] = 1; }
                }
            } else if (a.len.infinite) {
                // a is infinite (a.u == v is its finite end), b finite: measure from vb
                nu = vb;
                nv = va;
                merged = Length::inf();
                for (size_t w = 0; w < anchors.size(); ++w) {
                    Anchor& an = anchors[w];
                    if (an.vertex == (int)v) { new_off[w] = b.len.value; touched[w] = 1; }
                    else if (an.edge == inc[1]) { new_off[w] = b.len.value - on_b(an.offset); touched[w] = 1; }
                    else if (an.edge == inc[0]) { new_off[w] = b.len.value + an.offset; touched[w] = 1; }
                }
            } else {
                // b is infinite (b.u == v), a finite: measure from va
                nu = va;
                nv = vb;
                merged = Length::inf();
                for (size_t w = 0; w < anchors.size(); ++w) {
                    Anchor& an = anchors[w];
                    if (an.vertex == (int)v) { new_off[w] = a.len.value; touched[w] = 1; }
                    else if (an.edge == inc[0]) { new_off[w] = on_a(an.offset); touched[w] = 1; }
                    else if (an.edge == inc[1]) { new_off[w] = a.len.value + an.offset; touched[w] = 1; }
                }
            }
            for (size_t w = 0; w < anchors.size(); ++w) {
                if (!touched[w]) continue;
                anchors[w].vertex = -1;
                anchors[w].edge = (int)eds.size();
                anchors[w].offset = new_off[w];
            }
            eds.push_back(WEdge{nu, nv, merged});
            alive_e.push_back(1);
            alive_e[inc[0]] = alive_e[inc[1]] = 0;
            alive_v[v] = 0;
            changed = true;
            break;
        }
    }

    // canonical relocation of loop-breaker vertices: a 2-valent genus-0 vertex
    // whose two edges join it to the same neighbor moves to the antipode
    for (size_t v = 0; v < verts.size(); ++v) {
        if (!alive_v[v] || verts[v].infinite || verts[v].genus != 0) continue;
        auto inc = incident_live((int)v);
        if (inc.size() != 2 || inc[0] == inc[1]) continue;
        WEdge& a = eds[inc[0]];
        WEdge& b = eds[inc[1]];
        if (a.len.infinite || b.len.infinite) continue;
        int va = (a.u == (int)v) ? a.v : a.u;
        int vb = (b.u == (int)v) ? b.v : b.u;
        if (va != vb) continue;
        Rat circ = a.len.value + b.len.value;
        Rat half = circ / 2;
        if (a.len.value == half) continue;  // already antipodal
        // points on the two edges must be re-anchored; the cycle is
        // parametrized from va through a, v, b back to va
        for (auto& an : anchors) {
            Rat pos;
            if (an.vertex == (int)v) {
                pos = a.len.value;
            } else if (an.edge == inc[0]) {
                pos = (a.u == va) ? an.offset : a.len.value - an.offset;
            } else if (an.edge == inc[1]) {
                pos = a.len.value + ((b.u == (int)v) ? an.offset : b.len.value - an.offset);
            } else {
                continue;
            }
            if (pos < half) {
                an.vertex = -1;
                an.edge = inc[0];
                an.offset = pos;  // new a runs va -> v
            } else if (pos == half) {
                an.vertex = (int)v;
                an.edge = -1;
            } else {
                an.vertex = -1;
                an.edge = inc[1];
                an.offset = pos - half;  // new b runs v -> va
            }
        }
        a.u = va;
        a.v = (int)v;
        a.len = Length::finite(half);
        b.u = (int)v;
        b.v = vb;
        b.len = Length::finite(half);
        // anchors on inc[0] now measure from va, on inc[1] from v: both done above
    }

    EssentialModel out;
    std::vector<int> new_v(verts.size(), -1);
    for (size_t v = 0; v < verts.size(); ++v)
        if (alive_v[v]) new_v[v] = out.graph.add_vertex(verts[v].id, verts[v].genus, verts[v].infinite);
    std::vector<int> new_e(eds.size(), -1);
    int counter = 0;
    for (size_t e = 0; e < eds.size(); ++e)
        if (alive_e[e])
            new_e[e] = out.graph.add_edge(out.graph.fresh_edge_id("e" + std::to_string(counter++)),
                                          new_v[eds[e].u], new_v[eds[e].v], eds[e].len);
    out.vertex_pos.resize(verts.size());
    for (size_t v = 0; v < verts.size(); ++v) {
        const Anchor& an = anchors[v];
        if (an.vertex >= 0) {
            out.vertex_pos[v] = PointLoc::at_vertex(new_v[an.vertex]);
        } else {
            const WEdge& host = eds[an.edge];
            // an.offset was measured from host.u as stored at merge time; the
            // final edge orientation is host.u -> host.v
            Rat off = an.offset;
            if (off == 0) {
                out.vertex_pos[v] = PointLoc::at_vertex(new_v[host.u]);
            } else if (!host.len.infinite && off == host.len.value) {
                out.vertex_pos[v] = PointLoc::at_vertex(new_v[host.v]);
            } else {
                out.vertex_pos[v] = PointLoc::on_edge(new_e[an.edge], off);
            }
        }
    }
    return out;
}

// --- builders -----------------------------------------------------------------

Graph make_circle(int n_vertices, const Rat& total_length) {
    if (n_vertices < 2) throw std::invalid_argument("circle model needs >= 2 vertices");
    Rat total = (total_length == 0) ? Rat(n_vertices) : total_length;
    Graph g;
    for (int i = 0; i < n_vertices; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n_vertices; ++i)
        g.add_edge("e" + std::to_string(i), i, (i + 1) % n_vertices, Length::finite(total / n_vertices));
    return g;
}

Graph make_banana(const std::vector<Rat>& lengths) {
    if (lengths.size() < 2) throw std::invalid_argument("banana graph needs >= 2 edges");
    Graph g;
    int u = g.add_vertex("u");
    int v = g.add_vertex("v");
    for (size_t i = 0; i < lengths.size(); ++i)
        g.add_edge("e" + std::to_string(i), u, v, Length::finite(lengths[i]));
    return g;
}

Graph make_path(int n_edges) {
    if (n_edges < 1) throw std::invalid_argument("path needs >= 1 edge");
    Graph g;
    for (int i = 0; i <= n_edges; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n_edges; ++i) g.add_edge("e" + std::to_string(i), i, i + 1, Length::finite(1));
    return g;
}

}  // namespace tropilift
